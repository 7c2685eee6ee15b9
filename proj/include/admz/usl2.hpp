#pragma once

#include "admz/exact_scalar.hpp"
#include "admz/hpoly.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace admz {

/// Chevalley generators of sl2: [h,e] = 2e, [h,f] = -2f, [e,f] = h.
/// Enumerator order f < h < e is the tie-break used for affine modes.
enum class Gen { f = 0, h = 1, e = 2 };

char gen_letter(Gen g);
/// +1 for e, 0 for h, -1 for f.
int gen_charge(Gen g);

/// PBW basis choice for U(sl2).
///   F: f^a h^b e^c   (anything with c > 0 lies in U(g)n+)
///   E: e^a h^b f^c   (anything with c > 0 lies in U(g)n-)
enum class PbwOrder { F, E };

struct FinMonomial {
    int a = 0;
    int b = 0;
    int c = 0;
    friend auto operator<=>(const FinMonomial&, const FinMonomial&) = default;
};

/// Adjoint (ad h) weight of a basis monomial in the given order.
int fin_weight(const FinMonomial& m, PbwOrder order);

/// Element of U(sl2): a finite sum of PBW monomials sharing one order tag.
/// Zero coefficients are never stored.
class FinElement {
public:
    using Terms = std::map<FinMonomial, ExactScalar>;

    explicit FinElement(PbwOrder order = PbwOrder::F) : order_(order) {}
    FinElement(PbwOrder order, Terms terms);

    static FinElement one(PbwOrder order);
    static FinElement generator(Gen g, PbwOrder order);
    static FinElement monomial(const FinMonomial& m, PbwOrder order, const ExactScalar& c = ExactScalar(1));
    static FinElement from_poly(const HPoly& p, PbwOrder order);
    /// Parses the canonical text form. Letters are multiplied in the order
    /// written, so any word in e, h, f is accepted and straightened.
    static FinElement parse(std::string_view text, PbwOrder order);

    [[nodiscard]] PbwOrder order() const { return order_; }
    [[nodiscard]] const Terms& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] ExactScalar coefficient(const FinMonomial& m) const;
    /// The common ad h weight, or nothing if the element is zero or inhomogeneous.
    [[nodiscard]] std::optional<int> weight() const;
    /// Terms sorted by (a,b,c) descending, e.g. "-4*e*f + 2*h^2 + 2*h".
    [[nodiscard]] std::string to_string() const;

    void add_term(const FinMonomial& m, const ExactScalar& c);

    FinElement& operator+=(const FinElement& o);
    FinElement& operator-=(const FinElement& o);
    FinElement& operator*=(const ExactScalar& c);
    friend FinElement operator+(FinElement a, const FinElement& b) { return a += b; }
    friend FinElement operator-(FinElement a, const FinElement& b) { return a -= b; }
    friend FinElement operator*(FinElement a, const ExactScalar& c) { return a *= c; }
    friend FinElement operator*(const ExactScalar& c, FinElement a) { return a *= c; }
    friend FinElement operator*(const FinElement& a, const FinElement& b);
    friend bool operator==(const FinElement& a, const FinElement& b) = default;

private:
    void require_same_order(const FinElement& o) const;
    PbwOrder order_;
    Terms terms_;
};

/// Straightened product; both factors must carry the same order tag.
FinElement fin_product(const FinElement& x, const FinElement& y);
FinElement fin_power(const FinElement& x, unsigned n);

/// Antiautomorphism e -> f, f -> e, h -> h; result keeps x's order tag.
FinElement fin_transpose(const FinElement& x);

/// Principal antiautomorphism: a -> -a on sl2, order of products reversed.
FinElement fin_antipode(const FinElement& x);

/// ad g (x) = g x - x g.
FinElement fin_ad(Gen g, const FinElement& x);
FinElement fin_ad_power(Gen g, const FinElement& x, unsigned n);

/// Same element expressed in the other PBW basis.
FinElement fin_reorder(const FinElement& x, PbwOrder target);

enum class CartanSide { mod_n_minus, mod_n_plus };

/// The h-polynomial p with x = p(h) modulo U(g)n- (resp. U(g)n+).
/// x must have ad weight 0; otherwise InvalidInput.
HPoly project_cartan(const FinElement& x, CartanSide side);

/// Both sides of f^N (ef + (s-1)(h-s)) = (s-N-1)(h-s+N) f^N modulo the right
/// ideal e U(g), as E-order elements with every term starting in e dropped.
/// The plain commutator [f^N, ef + (s-1)(h-s)] is -N(h+N+1-2s) f^N and agrees
/// with the right side only at s = 1.
std::pair<FinElement, FinElement> commutator_congruence_sides(int N, const ExactScalar& s);
bool verify_commutator_congruence(int N, const ExactScalar& s);

/// x with every E-order monomial e^a h^b f^c, a > 0, removed; x is zero
/// modulo e U(g) iff the result is zero.
FinElement reduce_mod_e_left(const FinElement& x);

}  // namespace admz
