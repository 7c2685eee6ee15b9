#include "admz/hpoly.hpp"

#include "admz/errors.hpp"
#include "text_util.hpp"

#include <algorithm>

namespace admz {

HPoly::HPoly(std::vector<ExactScalar> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

HPoly HPoly::constant(const ExactScalar& c) { return HPoly({c}); }

HPoly HPoly::h() { return HPoly({ExactScalar(0), ExactScalar(1)}); }

HPoly HPoly::linear_factor(const ExactScalar& root) { return HPoly({-root, ExactScalar(1)}); }

void HPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

ExactScalar HPoly::coefficient(int power) const {
    if (power < 0 || power > degree()) return ExactScalar(0);
    return coeffs_[static_cast<std::size_t>(power)];
}

ExactScalar HPoly::leading() const { return is_zero() ? ExactScalar(0) : coeffs_.back(); }

ExactScalar HPoly::operator()(const ExactScalar& x) const {
    ExactScalar acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::pair<HPoly, ExactScalar> HPoly::divide_linear(const ExactScalar& root) const {
    if (is_zero()) return {HPoly(), ExactScalar(0)};
    // synthetic division from the top coefficient down
    std::vector<ExactScalar> quotient(coeffs_.size() - 1);
    ExactScalar carry(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        carry = carry * root + coeffs_[i];
        if (i > 0) quotient[i - 1] = carry;
    }
    return {HPoly(std::move(quotient)), carry};
}

HPoly& HPoly::operator+=(const HPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

HPoly& HPoly::operator-=(const HPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

HPoly& HPoly::operator*=(const ExactScalar& c) {
    for (auto& x : coeffs_) x *= c;
    trim();
    return *this;
}

HPoly operator*(const HPoly& a, const HPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<ExactScalar> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return HPoly(std::move(out));
}

HPoly poly_mul(const HPoly& a, const HPoly& b) { return a * b; }

std::string HPoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int power = degree(); power >= 0; --power) {
        const auto& c = coeffs_[static_cast<std::size_t>(power)];
        if (c.is_zero()) continue;
        std::string body;
        if (power == 1) body = "h";
        else if (power > 1) body = "h^" + std::to_string(power);
        detail::append_term(out, c, body);
    }
    return out;
}

HPoly HPoly::parse(std::string_view text) {
    if (detail::trim(text) == "0") return {};
    std::vector<ExactScalar> coeffs;
    for (const auto& term : detail::split_terms(text)) {
        ExactScalar c(1);
        int power = 0;
        std::string_view rest = term.body;
        while (!rest.empty()) {
            const auto star = rest.find('*');
            const auto factor = detail::trim(rest.substr(0, star));
            rest = star == std::string_view::npos ? std::string_view{} : rest.substr(star + 1);
            if (factor.empty()) throw InvalidInput("empty factor in '" + std::string(text) + "'");
            if (factor.front() == 'h') {
                int e = 1;
                if (factor.size() > 1) {
                    if (factor[1] != '^') throw InvalidInput("bad factor '" + std::string(factor) + "'");
                    e = static_cast<int>(ExactScalar::parse(factor.substr(2)).to_long());
                    if (e < 0) throw InvalidInput("negative power of h");
                }
                power += e;
            } else {
                c *= ExactScalar::parse(factor);
            }
        }
        if (term.negative) c = -c;
        if (coeffs.size() <= static_cast<std::size_t>(power)) coeffs.resize(static_cast<std::size_t>(power) + 1);
        coeffs[static_cast<std::size_t>(power)] += c;
    }
    return HPoly(std::move(coeffs));
}

int RootCheck::multiplicity(const ExactScalar& r) const {
    for (const auto& [root, m] : matched)
        if (root == r) return m;
    return 0;
}

RootCheck poly_root_check(const HPoly& p, std::span<const ExactScalar> candidates) {
    if (p.is_zero()) throw InvalidInput("root check on the zero polynomial");
    RootCheck result{{}, p};
    for (const auto& r : candidates) {
        if (result.multiplicity(r) > 0) continue;
        int count = 0;
        for (;;) {
            auto [quotient, remainder] = result.cofactor.divide_linear(r);
            if (!remainder.is_zero() || result.cofactor.degree() < 1) break;
            result.cofactor = std::move(quotient);
            ++count;
        }
        if (count > 0) result.matched.emplace_back(r, count);
    }
    return result;
}

std::optional<ExactScalar> poly_proportional(const HPoly& a, const HPoly& b) {
    if (a.is_zero() && b.is_zero()) return ExactScalar(1);
    if (a.is_zero() || b.is_zero() || a.degree() != b.degree()) return std::nullopt;
    const ExactScalar c = a.leading() / b.leading();
    if (a == b * c) return c;
    return std::nullopt;
}

}  // namespace admz
