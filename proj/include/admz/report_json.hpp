#pragma once

#include "admz/zhu.hpp"

#include <json.hpp>

namespace admz {

/// Keys: level, S, Pk, p1, p2, singular_vector, Q, families. Scalars are
/// "num/den" strings, algebra elements their canonical text forms.
nlohmann::json report_to_json(const ClassificationReport& report);

/// Inverse of report_to_json; InvalidInput on a malformed tree.
ClassificationReport report_from_json(const nlohmann::json& tree);

}  // namespace admz
