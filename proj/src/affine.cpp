#include "admz/affine.hpp"

#include "admz/errors.hpp"
#include "text_util.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace admz {

std::string Mode::to_string() const {
    return std::string(1, gen_letter(gen)) + "(" + std::to_string(degree) + ")";
}

namespace {

// sl2 bracket of generators as (generator, coefficient); zero when absent.
std::pair<Gen, long> sl2_bracket(Gen x, Gen y) {
    using enum Gen;
    if (x == e && y == f) return {h, 1};
    if (x == f && y == e) return {h, -1};
    if (x == h && y == e) return {e, 2};
    if (x == e && y == h) return {e, -2};
    if (x == h && y == f) return {f, -2};
    if (x == f && y == h) return {f, 2};
    return {h, 0};
}

long invariant_form(Gen x, Gen y) {
    if ((x == Gen::e && y == Gen::f) || (x == Gen::f && y == Gen::e)) return 1;
    if (x == Gen::h && y == Gen::h) return 2;
    return 0;
}

void accumulate(VermaVector::Terms& out, const AffMonomial& m, const ExactScalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = out.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) out.erase(it);
    }
}

Mode parse_mode(std::string_view token, int& power) {
    if (token.size() < 4 || token[1] != '(') throw InvalidInput("bad mode '" + std::string(token) + "'");
    const char letter = token[0];
    if (letter != 'e' && letter != 'h' && letter != 'f') throw InvalidInput("bad mode '" + std::string(token) + "'");
    const auto close = token.find(')');
    if (close == std::string_view::npos) throw InvalidInput("bad mode '" + std::string(token) + "'");
    const long degree = ExactScalar::parse(token.substr(2, close - 2)).to_long();
    power = 1;
    const auto tail = token.substr(close + 1);
    if (!tail.empty()) {
        if (tail.front() != '^') throw InvalidInput("bad mode '" + std::string(token) + "'");
        power = static_cast<int>(ExactScalar::parse(tail.substr(1)).to_long());
        if (power < 0) throw InvalidInput("negative mode power in '" + std::string(token) + "'");
    }
    const Gen g = letter == 'e' ? Gen::e : (letter == 'h' ? Gen::h : Gen::f);
    return {g, static_cast<int>(degree)};
}

}  // namespace

ModeBracket bracket_modes(const Mode& x, const Mode& y, const ExactScalar& level) {
    ModeBracket out;
    const auto [g, c] = sl2_bracket(x.gen, y.gen);
    if (c != 0) out.modes.emplace_back(Mode{g, x.degree + y.degree}, ExactScalar(c));
    if (x.degree + y.degree == 0) out.central = ExactScalar(x.degree) * ExactScalar(invariant_form(x.gen, y.gen)) * level;
    return out;
}

int AffMonomial::delta_degree() const {
    int d = 0;
    for (const auto& m : modes) d -= m.degree;
    return d;
}

int AffMonomial::alpha_weight() const {
    int w = 0;
    for (const auto& m : modes) w += m.charge();
    return w;
}

std::string AffMonomial::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < modes.size();) {
        std::size_t j = i;
        while (j < modes.size() && modes[j] == modes[i]) ++j;
        out += modes[i].to_string();
        if (j - i > 1) out += "^" + std::to_string(j - i);
        out += " ";
        i = j;
    }
    return out + "|0>";
}

std::string AffineWeight::to_string() const {
    return "(" + lambda0().to_string() + ")L0 + (" + lambda1.to_string() + ")L1 + (" + delta.to_string() + ")d";
}

VermaVector::VermaVector(ExactScalar level, Terms terms) : level_(std::move(level)) {
    for (const auto& [m, c] : terms) add_term(m, c);
}

VermaVector VermaVector::vacuum(const ExactScalar& level) {
    VermaVector v(level);
    v.add_term({}, ExactScalar(1));
    return v;
}

ExactScalar VermaVector::coefficient(const AffMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? ExactScalar(0) : it->second;
}

void VermaVector::add_term(const AffMonomial& m, const ExactScalar& c) {
    if (!std::is_sorted(m.modes.begin(), m.modes.end()))
        throw InvalidInput("monomial " + m.to_string() + " is not in canonical order");
    accumulate(terms_, m, c);
}

VermaVector& VermaVector::operator+=(const VermaVector& o) {
    if (level_ != o.level_) throw InvalidInput("adding Verma vectors of different levels");
    for (const auto& [m, c] : o.terms_) accumulate(terms_, m, c);
    return *this;
}

VermaVector& VermaVector::operator-=(const VermaVector& o) {
    if (level_ != o.level_) throw InvalidInput("subtracting Verma vectors of different levels");
    for (const auto& [m, c] : o.terms_) accumulate(terms_, m, -c);
    return *this;
}

VermaVector& VermaVector::operator*=(const ExactScalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

std::string VermaVector::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) detail::append_term(out, c, m.to_string());
    return out;
}

VermaVector VermaVector::parse(std::string_view text, const ExactScalar& level) {
    const VacuumModule module(level);
    VermaVector out(level);
    if (detail::trim(text) == "0") return out;
    for (const auto& term : detail::split_terms(text)) {
        ExactScalar c(1);
        std::string_view body = term.body;
        if (const auto star = body.rfind('*'); star != std::string_view::npos) {
            std::string_view coeffs = body.substr(0, star);
            body = body.substr(star + 1);
            while (!coeffs.empty()) {
                const auto s = coeffs.find('*');
                c *= ExactScalar::parse(detail::trim(coeffs.substr(0, s)));
                coeffs = s == std::string_view::npos ? std::string_view{} : coeffs.substr(s + 1);
            }
        }
        body = detail::trim(body);
        if (body.size() < 3 || body.substr(body.size() - 3) != "|0>")
            throw InvalidInput("term '" + std::string(term.body) + "' does not end in |0>");
        body = detail::trim(body.substr(0, body.size() - 3));
        std::vector<Mode> word;
        while (!body.empty()) {
            const auto space = body.find(' ');
            const auto token = body.substr(0, space);
            body = space == std::string_view::npos ? std::string_view{} : detail::trim(body.substr(space));
            int power = 1;
            const Mode m = parse_mode(token, power);
            word.insert(word.end(), static_cast<std::size_t>(power), m);
        }
        if (term.negative) c = -c;
        out += c * module.act_word(word, module.vacuum());
    }
    return out;
}

RationalVector WeightSpace::coordinates(const VermaVector& v) const {
    RationalVector coords(basis.size());
    for (const auto& [m, c] : v.terms()) {
        auto it = std::lower_bound(basis.begin(), basis.end(), m);
        if (it == basis.end() || *it != m)
            throw InvalidInput("monomial " + m.to_string() + " is outside W(" + std::to_string(delta_degree) + "," +
                               std::to_string(alpha_weight) + ")");
        coords[static_cast<std::size_t>(it - basis.begin())] = c;
    }
    return coords;
}

VermaVector WeightSpace::vector(const RationalVector& coords, const ExactScalar& level) const {
    if (coords.size() != basis.size()) throw InvalidInput("coordinate vector has the wrong length");
    VermaVector v(level);
    for (std::size_t i = 0; i < coords.size(); ++i) v.add_term(basis[i], coords[i]);
    return v;
}

VacuumModule::VacuumModule(ExactScalar level, std::size_t max_dim) : level_(std::move(level)), max_dim_(max_dim) {}

const VacuumModule::Terms& VacuumModule::act_monomial(const Mode& x, const AffMonomial& m) const {
    std::lock_guard lock(mutex_);
    const auto key = std::make_pair(x, m);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;

    Terms result;
    if (m.modes.empty()) {
        if (x.degree < 0) result.emplace(AffMonomial{{x}}, ExactScalar(1));
    } else if (x.degree < 0 && !(m.modes.front() < x)) {
        AffMonomial prepended;
        prepended.modes.reserve(m.modes.size() + 1);
        prepended.modes.push_back(x);
        prepended.modes.insert(prepended.modes.end(), m.modes.begin(), m.modes.end());
        result.emplace(std::move(prepended), ExactScalar(1));
    } else {
        // x m1 rest = m1 (x rest) + [x, m1] rest
        const Mode first = m.modes.front();
        const AffMonomial rest{{m.modes.begin() + 1, m.modes.end()}};
        const Terms inner = act_monomial(x, rest);
        for (const auto& [mono, c] : inner)
            for (const auto& [out, c2] : act_monomial(first, mono)) accumulate(result, out, c * c2);
        const ModeBracket br = bracket_modes(x, first, level_);
        for (const auto& [mode, c] : br.modes)
            for (const auto& [out, c2] : act_monomial(mode, rest)) accumulate(result, out, c * c2);
        accumulate(result, rest, br.central);
    }
    return cache_.try_emplace(key, std::move(result)).first->second;
}

VermaVector VacuumModule::act(const Mode& x, const VermaVector& v) const {
    if (v.level() != level_) throw InvalidInput("vector level does not match module level");
    VermaVector out(level_);
    for (const auto& [m, c] : v.terms())
        for (const auto& [mono, c2] : act_monomial(x, m)) out.add_term(mono, c * c2);
    return out;
}

VermaVector VacuumModule::act_word(const std::vector<Mode>& word, const VermaVector& v) const {
    VermaVector out = v;
    for (auto it = word.rbegin(); it != word.rend(); ++it) out = act(*it, out);
    return out;
}

WeightSpace VacuumModule::weight_space(int delta_degree, int alpha_weight) const {
    if (delta_degree < 0) throw InvalidInput("negative delta-degree");
    WeightSpace space{delta_degree, alpha_weight, {}};
    // Candidate modes in canonical order: most negative degree first.
    std::vector<Mode> candidates;
    for (int n = delta_degree; n >= 1; --n)
        for (Gen g : {Gen::f, Gen::h, Gen::e}) candidates.push_back({g, -n});

    std::vector<Mode> current;
    auto recurse = [&](auto&& self, std::size_t start, int degree_left, int charge_left) -> void {
        if (degree_left == 0) {
            if (charge_left == 0) {
                if (space.basis.size() >= max_dim_)
                    throw ResourceLimit("weight space W(" + std::to_string(delta_degree) + "," +
                                        std::to_string(alpha_weight) + ") exceeds the dimension cap " +
                                        std::to_string(max_dim_));
                space.basis.push_back(AffMonomial{current});
            }
            return;
        }
        if (std::abs(charge_left) > degree_left) return;
        for (std::size_t i = start; i < candidates.size(); ++i) {
            const Mode& m = candidates[i];
            if (-m.degree > degree_left) continue;
            current.push_back(m);
            self(self, i, degree_left + m.degree, charge_left - m.charge());
            current.pop_back();
        }
    };
    recurse(recurse, 0, delta_degree, alpha_weight);
    std::sort(space.basis.begin(), space.basis.end());
    return space;
}

RationalMatrix VacuumModule::operator_matrix(const Mode& x, const WeightSpace& from, const WeightSpace& to) const {
    if (to.delta_degree != from.delta_degree - x.degree || to.alpha_weight != from.alpha_weight + x.charge())
        throw InvalidInput(x.to_string() + " does not map W(" + std::to_string(from.delta_degree) + "," +
                           std::to_string(from.alpha_weight) + ") into W(" + std::to_string(to.delta_degree) + "," +
                           std::to_string(to.alpha_weight) + ")");
    RationalMatrix m(to.dim(), from.dim());
    for (std::size_t col = 0; col < from.dim(); ++col) {
        VermaVector source(level_);
        source.add_term(from.basis[col], ExactScalar(1));
        const RationalVector image = to.coordinates(act(x, source));
        for (std::size_t row = 0; row < image.size(); ++row) m.set(row, col, image[row]);
    }
    return m;
}

VermaVector act_mode(const Mode& x, const VermaVector& v) { return VacuumModule(v.level()).act(x, v); }

std::vector<AffMonomial> weight_space_basis(const ExactScalar& level, int delta_degree, int alpha_weight,
                                            std::size_t max_dim) {
    return VacuumModule(level, max_dim).weight_space(delta_degree, alpha_weight).basis;
}

}  // namespace admz
