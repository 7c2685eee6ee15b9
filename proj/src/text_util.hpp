#pragma once

// Helpers shared by the canonical-text parsers. Not installed.

#include "admz/exact_scalar.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace admz::detail {

struct SignedTerm {
    bool negative = false;
    std::string_view body;
};

/// Splits "a + b - c" into signed terms at top-level '+'/'-' characters.
/// Separators inside parentheses (mode degrees like "e(-1)") are ignored, as are
/// signs directly following '*', '/' or '^'.
std::vector<SignedTerm> split_terms(std::string_view text);

std::string_view trim(std::string_view s);

/// Appends the term c*body to a signed sum. A coefficient of magnitude one is
/// dropped unless body is empty.
void append_term(std::string& out, const ExactScalar& c, const std::string& body);

}  // namespace admz::detail
