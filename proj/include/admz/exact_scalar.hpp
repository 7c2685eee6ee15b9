#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace admz {

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator. Thin value wrapper over mpq_class that refuses division by
/// zero with InvalidInput instead of aborting.
class ExactScalar {
public:
    ExactScalar() = default;
    ExactScalar(long value) : value_(value) {}  // NOLINT: implicit from integers is intended
    ExactScalar(long num, long den);
    ExactScalar(const mpz_class& num, const mpz_class& den);
    explicit ExactScalar(const mpq_class& value) : value_(value) { value_.canonicalize(); }

    /// Parses "n" or "n/d" (optional leading sign, no spaces). Throws InvalidInput.
    static ExactScalar parse(std::string_view text);

    [[nodiscard]] mpz_class numerator() const { return value_.get_num(); }
    [[nodiscard]] mpz_class denominator() const { return value_.get_den(); }
    [[nodiscard]] const mpq_class& raw() const { return value_; }

    [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
    [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
    [[nodiscard]] int sign() const { return sgn(value_); }

    /// Numerator as a machine integer; the value must be an integer that fits.
    [[nodiscard]] long to_long() const;

    /// "num/den", denominator omitted when 1.
    [[nodiscard]] std::string to_string() const;

    ExactScalar& operator+=(const ExactScalar& o) { value_ += o.value_; return *this; }
    ExactScalar& operator-=(const ExactScalar& o) { value_ -= o.value_; return *this; }
    ExactScalar& operator*=(const ExactScalar& o) { value_ *= o.value_; return *this; }
    ExactScalar& operator/=(const ExactScalar& o);

    friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
    friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
    friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
    friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) { return a /= b; }
    friend ExactScalar operator-(const ExactScalar& a) { return ExactScalar(mpq_class(-a.value_)); }

    friend bool operator==(const ExactScalar& a, const ExactScalar& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const ExactScalar& a, const ExactScalar& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const ExactScalar& s) { return os << s.to_string(); }

private:
    mpq_class value_;
};

enum class ArithOp { add, sub, mul, div };

/// Dispatching form of the four field operations.
ExactScalar scalar_arith(const ExactScalar& a, const ExactScalar& b, ArithOp op);

/// Power with a nonnegative integer exponent.
ExactScalar pow(const ExactScalar& base, unsigned exponent);

}  // namespace admz
