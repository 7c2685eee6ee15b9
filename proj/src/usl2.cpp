#include "admz/usl2.hpp"

#include "admz/errors.hpp"
#include "text_util.hpp"

#include <mutex>
#include <tuple>
#include <vector>

namespace admz {

char gen_letter(Gen g) {
    switch (g) {
        case Gen::e: return 'e';
        case Gen::h: return 'h';
        case Gen::f: return 'f';
    }
    return '?';
}

int gen_charge(Gen g) {
    switch (g) {
        case Gen::e: return 1;
        case Gen::h: return 0;
        case Gen::f: return -1;
    }
    return 0;
}

int fin_weight(const FinMonomial& m, PbwOrder order) {
    return order == PbwOrder::F ? 2 * (m.c - m.a) : 2 * (m.a - m.c);
}

namespace {

// The generator sitting in the first / last PBW slot of each order.
Gen first_gen(PbwOrder order) { return order == PbwOrder::F ? Gen::f : Gen::e; }
Gen last_gen(PbwOrder order) { return order == PbwOrder::F ? Gen::e : Gen::f; }

std::vector<Gen> word_of(const FinMonomial& m, PbwOrder order) {
    std::vector<Gen> word;
    word.insert(word.end(), static_cast<std::size_t>(m.a), first_gen(order));
    word.insert(word.end(), static_cast<std::size_t>(m.b), Gen::h);
    word.insert(word.end(), static_cast<std::size_t>(m.c), last_gen(order));
    return word;
}

ExactScalar binomial(int n, int k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return ExactScalar(r, mpz_class(1));
}

// (x^a h^b y^c) * g where x/y are the first/last slot generators.
//
// F order, x = f, y = e:   e^c h = (h - 2c) e^c,   h^b f = f (h - 2)^b,
//                          e^c f = f e^c + c (h - c + 1) e^{c-1}
// E order, x = e, y = f:   f^c h = (h + 2c) f^c,   h^b e = e (h + 2)^b,
//                          f^c e = e f^c - c (h + c - 1) f^{c-1}
// The E-order rules are the F-order ones under e <-> f, h -> -h.
void right_multiply(const FinMonomial& m, const ExactScalar& coeff, Gen g, PbwOrder order,
                    FinElement::Terms& out) {
    auto add = [&out](const FinMonomial& key, const ExactScalar& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = out.try_emplace(key, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) out.erase(it);
        }
    };
    const int sigma = order == PbwOrder::F ? 1 : -1;  // sign of h under the swap
    if (g == last_gen(order)) {
        add({m.a, m.b, m.c + 1}, coeff);
        return;
    }
    if (g == Gen::h) {
        add({m.a, m.b + 1, m.c}, coeff);
        add({m.a, m.b, m.c}, coeff * ExactScalar(-2L * sigma * m.c));
        return;
    }
    // g is the first-slot generator: commute it through y^c, then through h^b.
    for (int k = 0; k <= m.b; ++k) {
        const ExactScalar shift = pow(ExactScalar(-2L * sigma), static_cast<unsigned>(m.b - k));
        add({m.a + 1, k, m.c}, coeff * binomial(m.b, k) * shift);
    }
    if (m.c > 0) {
        const ExactScalar c(m.c);
        add({m.a, m.b + 1, m.c - 1}, coeff * c * ExactScalar(sigma));
        add({m.a, m.b, m.c - 1}, coeff * c * ExactScalar(-(m.c - 1)));
    }
}

FinElement::Terms multiply_by_word(FinElement::Terms terms, const std::vector<Gen>& word, PbwOrder order) {
    for (Gen g : word) {
        FinElement::Terms next;
        for (const auto& [m, c] : terms) right_multiply(m, c, g, order, next);
        terms = std::move(next);
    }
    return terms;
}

// Memoized monomial * monomial products, keyed by (order, left, right).
class ProductCache {
public:
    FinElement::Terms product(const FinMonomial& x, const FinMonomial& y, PbwOrder order) {
        const Key key{order, x, y};
        {
            std::lock_guard lock(mutex_);
            if (auto it = cache_.find(key); it != cache_.end()) return it->second;
        }
        FinElement::Terms result = multiply_by_word({{x, ExactScalar(1)}}, word_of(y, order), order);
        std::lock_guard lock(mutex_);
        return cache_.try_emplace(key, std::move(result)).first->second;
    }

private:
    using Key = std::tuple<PbwOrder, FinMonomial, FinMonomial>;
    std::mutex mutex_;
    std::map<Key, FinElement::Terms> cache_;
};

ProductCache& product_cache() {
    static ProductCache cache;
    return cache;
}

}  // namespace

FinElement::FinElement(PbwOrder order, Terms terms) : order_(order) {
    for (auto& [m, c] : terms) add_term(m, c);
}

FinElement FinElement::one(PbwOrder order) { return monomial({0, 0, 0}, order); }

FinElement FinElement::generator(Gen g, PbwOrder order) {
    if (g == Gen::h) return monomial({0, 1, 0}, order);
    return monomial(g == first_gen(order) ? FinMonomial{1, 0, 0} : FinMonomial{0, 0, 1}, order);
}

FinElement FinElement::monomial(const FinMonomial& m, PbwOrder order, const ExactScalar& c) {
    if (m.a < 0 || m.b < 0 || m.c < 0) throw InvalidInput("negative PBW exponent");
    FinElement x(order);
    x.add_term(m, c);
    return x;
}

FinElement FinElement::from_poly(const HPoly& p, PbwOrder order) {
    FinElement x(order);
    for (int i = 0; i <= p.degree(); ++i) x.add_term({0, i, 0}, p.coefficient(i));
    return x;
}

ExactScalar FinElement::coefficient(const FinMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? ExactScalar(0) : it->second;
}

std::optional<int> FinElement::weight() const {
    std::optional<int> w;
    for (const auto& [m, c] : terms_) {
        const int mw = fin_weight(m, order_);
        if (w && *w != mw) return std::nullopt;
        w = mw;
    }
    return w;
}

void FinElement::add_term(const FinMonomial& m, const ExactScalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void FinElement::require_same_order(const FinElement& o) const {
    if (order_ != o.order_) throw InvalidInput("U(sl2) elements carry different PBW order tags");
}

FinElement& FinElement::operator+=(const FinElement& o) {
    require_same_order(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

FinElement& FinElement::operator-=(const FinElement& o) {
    require_same_order(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

FinElement& FinElement::operator*=(const ExactScalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

FinElement operator*(const FinElement& x, const FinElement& y) {
    x.require_same_order(y);
    FinElement out(x.order_);
    for (const auto& [mx, cx] : x.terms_) {
        for (const auto& [my, cy] : y.terms_) {
            const ExactScalar scale = cx * cy;
            for (const auto& [m, c] : product_cache().product(mx, my, x.order_)) out.add_term(m, c * scale);
        }
    }
    return out;
}

FinElement fin_product(const FinElement& x, const FinElement& y) { return x * y; }

FinElement fin_power(const FinElement& x, unsigned n) {
    FinElement result = FinElement::one(x.order());
    for (unsigned i = 0; i < n; ++i) result = result * x;
    return result;
}

FinElement fin_reorder(const FinElement& x, PbwOrder target) {
    if (x.order() == target) return x;
    FinElement out(target);
    for (const auto& [m, c] : x.terms()) {
        auto terms = multiply_by_word({{FinMonomial{}, c}}, word_of(m, x.order()), target);
        for (const auto& [tm, tc] : terms) out.add_term(tm, tc);
    }
    return out;
}

FinElement fin_transpose(const FinElement& x) {
    // (x^a h^b y^c)^T = y'^c h^b x'^a with x' = swap(x) = y: the monomial
    // (c, b, a) of the same order.
    FinElement out(x.order());
    for (const auto& [m, c] : x.terms()) out.add_term({m.c, m.b, m.a}, c);
    return out;
}

FinElement fin_antipode(const FinElement& x) {
    // x^a h^b y^c -> (-1)^{a+b+c} y^c h^b x^a, the monomial (c, b, a) of the
    // opposite order.
    const PbwOrder other = x.order() == PbwOrder::F ? PbwOrder::E : PbwOrder::F;
    FinElement flipped(other);
    for (const auto& [m, c] : x.terms()) flipped.add_term({m.c, m.b, m.a}, (m.a + m.b + m.c) % 2 == 0 ? c : -c);
    return fin_reorder(flipped, x.order());
}

FinElement fin_ad(Gen g, const FinElement& x) {
    const FinElement gen = FinElement::generator(g, x.order());
    return gen * x - x * gen;
}

FinElement fin_ad_power(Gen g, const FinElement& x, unsigned n) {
    FinElement y = x;
    for (unsigned i = 0; i < n && !y.is_zero(); ++i) y = fin_ad(g, y);
    return y;
}

HPoly project_cartan(const FinElement& x, CartanSide side) {
    for (const auto& [m, c] : x.terms())
        if (fin_weight(m, x.order()) != 0)
            throw InvalidInput("project_cartan needs an ad-weight 0 element, got " + x.to_string());
    const PbwOrder natural = side == CartanSide::mod_n_minus ? PbwOrder::E : PbwOrder::F;
    const FinElement y = fin_reorder(x, natural);
    std::vector<ExactScalar> coeffs;
    for (const auto& [m, c] : y.terms()) {
        if (m.a != 0 || m.c != 0) continue;
        if (coeffs.size() <= static_cast<std::size_t>(m.b)) coeffs.resize(static_cast<std::size_t>(m.b) + 1);
        coeffs[static_cast<std::size_t>(m.b)] += c;
    }
    return HPoly(std::move(coeffs));
}

FinElement reduce_mod_e_left(const FinElement& x) {
    const FinElement reordered = fin_reorder(x, PbwOrder::E);
    FinElement out(PbwOrder::E);
    for (const auto& [m, c] : reordered.terms())
        if (m.a == 0) out.add_term(m, c);
    return out;
}

std::pair<FinElement, FinElement> commutator_congruence_sides(int N, const ExactScalar& s) {
    constexpr auto E = PbwOrder::E;
    const FinElement e = FinElement::generator(Gen::e, E);
    const FinElement f = FinElement::generator(Gen::f, E);
    const FinElement fN = fin_power(f, static_cast<unsigned>(N));
    const FinElement p = e * f + FinElement::from_poly(HPoly({-s * (s - ExactScalar(1)), s - ExactScalar(1)}), E);
    const FinElement rhs =
        FinElement::from_poly(HPoly::linear_factor(s - ExactScalar(N)) * (s - ExactScalar(N + 1)), E) * fN;
    return {reduce_mod_e_left(fN * p), reduce_mod_e_left(rhs)};
}

bool verify_commutator_congruence(int N, const ExactScalar& s) {
    const auto [lhs, rhs] = commutator_congruence_sides(N, s);
    return lhs == rhs;
}

std::string FinElement::to_string() const {
    if (terms_.empty()) return "0";
    const char first = gen_letter(first_gen(order_));
    const char last = gen_letter(last_gen(order_));
    auto factor = [](char letter, int e) {
        return e == 1 ? std::string(1, letter) : std::string(1, letter) + "^" + std::to_string(e);
    };
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        std::string body;
        auto append = [&body](const std::string& piece) {
            if (!body.empty()) body += "*";
            body += piece;
        };
        if (m.a > 0) append(factor(first, m.a));
        if (m.b > 0) append(factor('h', m.b));
        if (m.c > 0) append(factor(last, m.c));
        detail::append_term(out, c, body);
    }
    return out;
}

FinElement FinElement::parse(std::string_view text, PbwOrder order) {
    FinElement out(order);
    if (detail::trim(text) == "0") return out;
    for (const auto& term : detail::split_terms(text)) {
        ExactScalar c(1);
        std::vector<Gen> word;
        std::string_view rest = term.body;
        while (!rest.empty()) {
            const auto star = rest.find('*');
            const auto piece = detail::trim(rest.substr(0, star));
            rest = star == std::string_view::npos ? std::string_view{} : rest.substr(star + 1);
            if (piece.empty()) throw InvalidInput("empty factor in '" + std::string(text) + "'");
            const char letter = piece.front();
            if (letter == 'e' || letter == 'h' || letter == 'f') {
                long e = 1;
                if (piece.size() > 1) {
                    if (piece[1] != '^') throw InvalidInput("bad factor '" + std::string(piece) + "'");
                    e = ExactScalar::parse(piece.substr(2)).to_long();
                    if (e < 0) throw InvalidInput("negative exponent in '" + std::string(piece) + "'");
                }
                const Gen g = letter == 'e' ? Gen::e : (letter == 'h' ? Gen::h : Gen::f);
                word.insert(word.end(), static_cast<std::size_t>(e), g);
            } else {
                c *= ExactScalar::parse(piece);
            }
        }
        if (term.negative) c = -c;
        for (const auto& [m, v] : multiply_by_word({{FinMonomial{}, c}}, word, order)) out.add_term(m, v);
    }
    return out;
}

}  // namespace admz
