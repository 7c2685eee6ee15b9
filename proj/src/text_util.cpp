#include "text_util.hpp"

#include "admz/errors.hpp"

namespace admz::detail {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\n')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n')) s.remove_suffix(1);
    return s;
}

std::vector<SignedTerm> split_terms(std::string_view text) {
    text = trim(text);
    if (text.empty()) throw InvalidInput("empty expression");
    std::vector<SignedTerm> terms;
    bool negative = false;
    std::size_t start = 0;
    int depth = 0;
    char prev = '\0';
    auto flush = [&](std::size_t end) {
        auto body = trim(text.substr(start, end - start));
        if (body.empty()) throw InvalidInput("dangling sign in '" + std::string(text) + "'");
        terms.push_back({negative, body});
    };
    bool at_start = true;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (depth < 0) throw InvalidInput("unbalanced parentheses in '" + std::string(text) + "'");
        if (depth == 0 && (c == '+' || c == '-') && prev != '*' && prev != '/' && prev != '^') {
            if (at_start) {
                negative = (c == '-');
                start = i + 1;
            } else {
                flush(i);
                negative = (c == '-');
                start = i + 1;
            }
            at_start = true;
            prev = c;
            continue;
        }
        if (c != ' ') {
            at_start = false;
            prev = c;
        }
    }
    if (depth != 0) throw InvalidInput("unbalanced parentheses in '" + std::string(text) + "'");
    flush(text.size());
    return terms;
}

void append_term(std::string& out, const ExactScalar& c, const std::string& body) {
    const bool negative = c.sign() < 0;
    const ExactScalar magnitude = negative ? -c : c;
    if (out.empty()) {
        if (negative) out += "-";
    } else {
        out += negative ? " - " : " + ";
    }
    if (body.empty()) {
        out += magnitude.to_string();
    } else if (magnitude == ExactScalar(1)) {
        out += body;
    } else {
        out += magnitude.to_string() + "*" + body;
    }
}

}  // namespace admz::detail
