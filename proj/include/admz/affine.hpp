#pragma once

#include "admz/exact_scalar.hpp"
#include "admz/rational_matrix.hpp"
#include "admz/usl2.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <mutex>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace admz {

/// The mode x(n) = x (x) t^n of the affine algebra.
struct Mode {
    Gen gen = Gen::h;
    int degree = 0;

    /// Canonical order: degree ascending, ties broken f < h < e.
    friend std::strong_ordering operator<=>(const Mode& a, const Mode& b) {
        if (auto c = a.degree <=> b.degree; c != 0) return c;
        return static_cast<int>(a.gen) <=> static_cast<int>(b.gen);
    }
    friend bool operator==(const Mode&, const Mode&) = default;

    [[nodiscard]] int charge() const { return gen_charge(gen); }
    [[nodiscard]] std::string to_string() const;
};

inline Mode e_mode(int n) { return {Gen::e, n}; }
inline Mode h_mode(int n) { return {Gen::h, n}; }
inline Mode f_mode(int n) { return {Gen::f, n}; }

/// [x(m), y(n)] = [x,y](m+n) + m delta_{m+n,0} <x,y> k with <e,f> = 1, <h,h> = 2
/// and the central element already replaced by the level k.
struct ModeBracket {
    std::vector<std::pair<Mode, ExactScalar>> modes;
    ExactScalar central;
};

ModeBracket bracket_modes(const Mode& x, const Mode& y, const ExactScalar& level);

/// A PBW monomial applied to the vacuum, modes kept in canonical order.
struct AffMonomial {
    std::vector<Mode> modes;

    [[nodiscard]] int delta_degree() const;
    [[nodiscard]] int alpha_weight() const;
    /// e.g. "h(-3) e(-1)^2 |0>"; the empty monomial is "|0>".
    [[nodiscard]] std::string to_string() const;

    friend auto operator<=>(const AffMonomial&, const AffMonomial&) = default;
};

/// Element of the vacuum Verma module M(k,0).
class VermaVector {
public:
    using Terms = std::map<AffMonomial, ExactScalar>;

    explicit VermaVector(ExactScalar level = ExactScalar(0)) : level_(std::move(level)) {}
    VermaVector(ExactScalar level, Terms terms);

    static VermaVector vacuum(const ExactScalar& level);
    /// Parses a signed sum of "coeff*x(n)^m ... |0>" terms. Modes may appear in
    /// any order; they are applied right to left and straightened.
    static VermaVector parse(std::string_view text, const ExactScalar& level);

    [[nodiscard]] const ExactScalar& level() const { return level_; }
    [[nodiscard]] const Terms& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] ExactScalar coefficient(const AffMonomial& m) const;
    [[nodiscard]] std::string to_string() const;

    void add_term(const AffMonomial& m, const ExactScalar& c);

    VermaVector& operator+=(const VermaVector& o);
    VermaVector& operator-=(const VermaVector& o);
    VermaVector& operator*=(const ExactScalar& c);
    friend VermaVector operator+(VermaVector a, const VermaVector& b) { return a += b; }
    friend VermaVector operator-(VermaVector a, const VermaVector& b) { return a -= b; }
    friend VermaVector operator*(const ExactScalar& c, VermaVector a) { return a *= c; }
    friend VermaVector operator*(VermaVector a, const ExactScalar& c) { return a *= c; }
    friend bool operator==(const VermaVector&, const VermaVector&) = default;

private:
    ExactScalar level_;
    Terms terms_;
};

/// lambda0 Lambda_0 + lambda1 Lambda_1 + delta delta, stored through the level
/// lambda0 + lambda1 so that level-k weights are easy to recognise.
struct AffineWeight {
    ExactScalar level;    // <lambda, c>
    ExactScalar lambda1;  // coefficient of Lambda_1, equal to <lambda, h>
    ExactScalar delta;

    [[nodiscard]] ExactScalar lambda0() const { return level - lambda1; }
    [[nodiscard]] std::string to_string() const;
    friend bool operator==(const AffineWeight&, const AffineWeight&) = default;
};

/// W(d, w): modes of degree <= -1 with total delta-degree d and alpha-weight w.
struct WeightSpace {
    int delta_degree = 0;
    int alpha_weight = 0;
    std::vector<AffMonomial> basis;

    [[nodiscard]] std::size_t dim() const { return basis.size(); }
    [[nodiscard]] RationalVector coordinates(const VermaVector& v) const;
    [[nodiscard]] VermaVector vector(const RationalVector& coords, const ExactScalar& level) const;
};

inline constexpr std::size_t default_max_weight_dim = 20000;

/// The vacuum Verma module M(k,0) at a fixed level. Straightening results are
/// memoized per instance; the cache is guarded, so one instance may be shared
/// between threads.
class VacuumModule {
public:
    explicit VacuumModule(ExactScalar level, std::size_t max_dim = default_max_weight_dim);

    [[nodiscard]] const ExactScalar& level() const { return level_; }
    [[nodiscard]] std::size_t max_dim() const { return max_dim_; }

    [[nodiscard]] VermaVector vacuum() const { return VermaVector::vacuum(level_); }
    [[nodiscard]] VermaVector act(const Mode& x, const VermaVector& v) const;
    /// Applies the modes right to left, i.e. word[0] acts last.
    [[nodiscard]] VermaVector act_word(const std::vector<Mode>& word, const VermaVector& v) const;

    /// Throws ResourceLimit when the basis would exceed max_dim().
    [[nodiscard]] WeightSpace weight_space(int delta_degree, int alpha_weight) const;

    /// Matrix of x : from -> to in the enumerated bases. `to` must be the weight
    /// space containing x.from, otherwise InvalidInput.
    [[nodiscard]] RationalMatrix operator_matrix(const Mode& x, const WeightSpace& from, const WeightSpace& to) const;

private:
    using Terms = VermaVector::Terms;
    const Terms& act_monomial(const Mode& x, const AffMonomial& m) const;

    ExactScalar level_;
    std::size_t max_dim_;
    mutable std::recursive_mutex mutex_;
    mutable std::map<std::pair<Mode, AffMonomial>, Terms> cache_;
};

VermaVector act_mode(const Mode& x, const VermaVector& v);

std::vector<AffMonomial> weight_space_basis(const ExactScalar& level, int delta_degree, int alpha_weight,
                                            std::size_t max_dim = default_max_weight_dim);

}  // namespace admz
