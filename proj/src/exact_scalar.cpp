#include "admz/exact_scalar.hpp"

#include "admz/errors.hpp"

#include <cctype>

namespace admz {

namespace {

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

mpz_class parse_integer(std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
}

}  // namespace

ExactScalar::ExactScalar(long num, long den) : ExactScalar(mpz_class(num), mpz_class(den)) {}

ExactScalar::ExactScalar(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw InvalidInput("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

ExactScalar ExactScalar::parse(std::string_view text) {
    const auto slash = text.find('/');
    const auto num_text = text.substr(0, slash);
    if (!is_integer_literal(num_text))
        throw InvalidInput("malformed rational '" + std::string(text) + "'");
    if (slash == std::string_view::npos) return ExactScalar(parse_integer(num_text), mpz_class(1));
    const auto den_text = text.substr(slash + 1);
    if (!is_integer_literal(den_text) || den_text.front() == '-' || den_text.front() == '+')
        throw InvalidInput("malformed rational '" + std::string(text) + "'");
    return ExactScalar(parse_integer(num_text), parse_integer(den_text));
}

long ExactScalar::to_long() const {
    if (!is_integer() || !value_.get_num().fits_slong_p())
        throw InvalidInput("value " + to_string() + " is not a machine integer");
    return value_.get_num().get_si();
}

std::string ExactScalar::to_string() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& o) {
    if (o.is_zero()) throw InvalidInput("division by zero");
    value_ /= o.value_;
    return *this;
}

ExactScalar scalar_arith(const ExactScalar& a, const ExactScalar& b, ArithOp op) {
    switch (op) {
        case ArithOp::add: return a + b;
        case ArithOp::sub: return a - b;
        case ArithOp::mul: return a * b;
        case ArithOp::div: return a / b;
    }
    throw InvalidInput("unknown arithmetic operation");
}

ExactScalar pow(const ExactScalar& base, unsigned exponent) {
    ExactScalar result(1);
    for (unsigned i = 0; i < exponent; ++i) result *= base;
    return result;
}

}  // namespace admz
