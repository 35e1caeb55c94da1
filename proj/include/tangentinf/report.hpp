#pragma once

#include <string>

#include <json.hpp>

#include "tangentinf/pipeline.hpp"

namespace tangentinf {

// Fixed top-level keys: problem, verdicts, branches, critical_values,
// psi_samples, caveats, justifications, meta. Keys serialize sorted and
// doubles in shortest round-trip form, so two equal reports are
// byte-identical; the only run-dependent field is meta.timing_ms.
nlohmann::json report_to_json(const Report& R);
std::string report_json_text(const Report& R);

// Temp-file-then-rename writes; a partial file never lands at `path`.
void write_report_json(const Report& R, const std::string& path);
void write_psi_csv(const Report& R, const std::string& path);

const char* status_name(BranchStatus s);

std::string human_summary(const Report& R);

}  // namespace tangentinf
