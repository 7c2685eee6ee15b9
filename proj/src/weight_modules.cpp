#include "admz/weight_modules.hpp"

#include "admz/errors.hpp"

#include <algorithm>

namespace admz {

bool DenseParams::irreducible() const { return !mu.is_integer() && !(r - mu).is_integer(); }

std::pair<ExactScalar, long> act_generator_on_E(Gen g, const DenseParams& params, long i) {
    const ExactScalar x = params.mu + ExactScalar(i);
    switch (g) {
        case Gen::e: return {-x, i - 1};
        case Gen::h: return {params.r - ExactScalar(2) * x, i};
        case Gen::f: return {x - params.r, i + 1};
    }
    throw InvalidInput("unknown generator");
}

EActionResult act_element_on_E(const FinElement& u, const DenseParams& params, long i) {
    EActionResult out{ExactScalar(0), i, 0};
    if (u.is_zero()) return out;
    const auto w = u.weight();
    if (!w) throw InvalidInput("act_element_on_E needs an ad-homogeneous element");
    out.shift = -*w / 2;
    out.index = i + out.shift;
    const bool f_order = u.order() == PbwOrder::F;
    const Gen left = f_order ? Gen::f : Gen::e;
    const Gen right = f_order ? Gen::e : Gen::f;
    for (const auto& [m, c] : u.terms()) {
        ExactScalar coeff = c;
        long j = i;
        auto apply = [&](Gen g, int times) {
            for (int n = 0; n < times && !coeff.is_zero(); ++n) {
                const auto [k, next] = act_generator_on_E(g, params, j);
                coeff *= k;
                j = next;
            }
        };
        apply(right, m.c);
        apply(Gen::h, m.b);
        apply(left, m.a);
        out.coefficient += coeff;
    }
    return out;
}

std::vector<std::pair<long, ExactScalar>> action_profile(const FinElement& u, const DenseParams& params,
                                                         const std::vector<long>& indices) {
    std::vector<std::pair<long, ExactScalar>> out;
    out.reserve(indices.size());
    for (long i : indices) out.emplace_back(i, act_element_on_E(u, params, i).coefficient);
    return out;
}

std::vector<long> annihilation_indices(const AdmissibleLevel& lv) {
    std::vector<long> indices;
    for (long i = 0; i <= lv.N; ++i) indices.push_back(i);
    indices.push_back(-3);
    indices.push_back(lv.N + 5);
    return indices;
}

bool q_annihilates_E(const AdmissibleLevel& lv, const FinElement& Q, const DenseParams& params) {
    const auto profile = action_profile(Q, params, annihilation_indices(lv));
    return std::all_of(profile.begin(), profile.end(), [](const auto& p) { return p.second.is_zero(); });
}

bool q_annihilates_E(const AdmissibleLevel& lv, const DenseParams& params) {
    return q_annihilates_E(lv, compute_Q(lv), params);
}

bool is_T_member(const AdmissibleLevel& lv, const DenseParams& params) {
    if (!params.irreducible() || is_nonnegative_integer(params.r)) return false;
    const auto S = set_S(lv);
    return std::find(S.begin(), S.end(), params.r) != S.end();
}

std::vector<ExactScalar> default_mu_samples() { return {ExactScalar(1, 3), ExactScalar(1, 4), ExactScalar(5, 7)}; }

ModuleFamilies classify_weight_modules(const AdmissibleLevel& lv, const FinElement& Q) {
    ModuleFamilies out;
    out.highest_weight = set_S(lv);
    out.lowest_weight = out.highest_weight;
    for (const auto& r : out.highest_weight)
        if (!is_nonnegative_integer(r)) out.dense_r.push_back(r);
    for (const auto& r : out.dense_r) {
        for (const auto& mu : default_mu_samples()) {
            const DenseParams params{r, mu};
            if (!params.irreducible()) continue;
            out.dense_samples.push_back({r, mu, q_annihilates_E(lv, Q, params)});
        }
    }
    return out;
}

ModuleFamilies classify_weight_modules(const AdmissibleLevel& lv) { return classify_weight_modules(lv, compute_Q(lv)); }

std::string dense_condition(const ModuleFamilies& families) {
    if (families.dense_r.empty()) return "empty";
    std::string out = "r in {";
    for (std::size_t n = 0; n < families.dense_r.size(); ++n) {
        if (n) out += ", ";
        out += families.dense_r[n].to_string();
    }
    return out + "}, mu not integer, r-mu not integer";
}

}  // namespace admz
