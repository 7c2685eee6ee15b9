#pragma once

#include "admz/exact_scalar.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace admz {

/// Univariate polynomial in the Cartan generator h with exact coefficients.
/// coefficients()[i] is the coefficient of h^i; trailing zeros are trimmed so
/// the zero polynomial has no coefficients and degree -1.
class HPoly {
public:
    HPoly() = default;
    explicit HPoly(std::vector<ExactScalar> coefficients);

    static HPoly constant(const ExactScalar& c);
    static HPoly h();
    /// h - root
    static HPoly linear_factor(const ExactScalar& root);
    /// Canonical text form, e.g. "2*h^2 + 2*h". Throws InvalidInput.
    static HPoly parse(std::string_view text);

    [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
    [[nodiscard]] const std::vector<ExactScalar>& coefficients() const { return coeffs_; }
    [[nodiscard]] ExactScalar coefficient(int power) const;
    [[nodiscard]] ExactScalar leading() const;
    [[nodiscard]] ExactScalar operator()(const ExactScalar& x) const;
    [[nodiscard]] std::string to_string() const;

    /// Exact division by (h - root); returns quotient and remainder p(root).
    [[nodiscard]] std::pair<HPoly, ExactScalar> divide_linear(const ExactScalar& root) const;

    HPoly& operator+=(const HPoly& o);
    HPoly& operator-=(const HPoly& o);
    HPoly& operator*=(const ExactScalar& c);
    friend HPoly operator+(HPoly a, const HPoly& b) { return a += b; }
    friend HPoly operator-(HPoly a, const HPoly& b) { return a -= b; }
    friend HPoly operator*(HPoly a, const ExactScalar& c) { return a *= c; }
    friend HPoly operator*(const ExactScalar& c, HPoly a) { return a *= c; }
    friend HPoly operator*(const HPoly& a, const HPoly& b);
    friend bool operator==(const HPoly& a, const HPoly& b) = default;

private:
    void trim();
    std::vector<ExactScalar> coeffs_;
};

HPoly poly_mul(const HPoly& a, const HPoly& b);

/// Result of dividing out candidate roots: each matched root with its
/// multiplicity (in candidate order), plus the remaining cofactor.
struct RootCheck {
    std::vector<std::pair<ExactScalar, int>> matched;
    HPoly cofactor;

    [[nodiscard]] int multiplicity(const ExactScalar& r) const;
};

/// Divides p by (h - r) as often as possible for each candidate r.
/// Requires p != 0 (InvalidInput otherwise).
RootCheck poly_root_check(const HPoly& p, std::span<const ExactScalar> candidates);

/// The nonzero c with a == c*b, if any. (0, 0) yields 1 by convention.
std::optional<ExactScalar> poly_proportional(const HPoly& a, const HPoly& b);

}  // namespace admz
