#pragma once

#include <string>

#include "classify.hpp"

namespace riccati {

// Human-readable classification report.
std::string classification_report(const ClassifyResult& res);

// Stable machine-readable (JSON) report; schema covered by golden tests.
std::string classification_report_json(const ClassifyResult& res);

} // namespace riccati
