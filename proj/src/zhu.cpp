#include "admz/zhu.hpp"

#include "admz/errors.hpp"
#include "admz/weight_modules.hpp"

#include <algorithm>
#include <set>

namespace admz {

namespace {

void require(bool condition, const std::string& invariant, const AdmissibleLevel& lv) {
    if (!condition) throw ConsistencyError("k=" + lv.to_string() + ": " + invariant);
}

// Roots must be exactly `expected`, each simple, with a constant cofactor.
bool has_simple_roots(const HPoly& p, const std::vector<ExactScalar>& expected) {
    if (p.is_zero() || p.degree() != static_cast<int>(expected.size())) return false;
    const RootCheck rc = poly_root_check(p, expected);
    if (rc.cofactor.degree() != 0) return false;
    return std::all_of(expected.begin(), expected.end(), [&rc](const ExactScalar& r) { return rc.multiplicity(r) == 1; });
}

}  // namespace

SingularKernel singular_kernel(const AdmissibleLevel& lv, const VacuumModule& module) {
    if (module.level() != lv.k) throw InvalidInput("module level differs from k=" + lv.to_string());
    const int depth = static_cast<int>(lv.q) * lv.N;
    SingularKernel out;
    out.space = module.weight_space(depth, lv.N);
    const WeightSpace raised = module.weight_space(depth, lv.N + 1);
    const WeightSpace lowered = module.weight_space(depth - 1, lv.N - 1);
    out.stacked = RationalMatrix::vstack(module.operator_matrix(e_mode(0), out.space, raised),
                                         module.operator_matrix(f_mode(1), out.space, lowered));
    out.basis = kernel_basis(out.stacked);
    return out;
}

VermaVector singular_vector_nullspace(const AdmissibleLevel& lv, const VacuumModule& module) {
    const SingularKernel kernel = singular_kernel(lv, module);
    if (kernel.basis.size() != 1)
        throw ConsistencyError("k=" + lv.to_string() + ": singular kernel on W(" +
                               std::to_string(kernel.space.delta_degree) + "," +
                               std::to_string(kernel.space.alpha_weight) + ") has dimension " +
                               std::to_string(kernel.basis.size()) + ", expected 1");
    return kernel.space.vector(kernel.basis.front(), lv.k);
}

VermaVector singular_vector_nullspace(const AdmissibleLevel& lv) {
    const VacuumModule module(lv.k);
    return singular_vector_nullspace(lv, module);
}

FinElement zhu_image_F(const VermaVector& v, PbwOrder order) {
    FinElement out(order);
    for (const auto& [m, c] : v.terms()) {
        int sign_exponent = 0;
        FinElement word = FinElement::one(order);
        // reversed product a_n ... a_1
        for (auto it = m.modes.rbegin(); it != m.modes.rend(); ++it) {
            if (it->degree > -1)
                throw InvalidInput("zhu_image_F: mode " + it->to_string() + " has nonnegative degree");
            sign_exponent += -it->degree - 1;
            word = word * FinElement::generator(it->gen, order);
        }
        out += word * (sign_exponent % 2 == 0 ? c : -c);
    }
    return out;
}

FinElement compute_Q(const AdmissibleLevel& lv) { return zhu_image_F(singular_vector_nullspace(lv)); }

FinElement compute_Q(const AdmissibleLevel& lv, const VacuumModule& module) {
    return zhu_image_F(singular_vector_nullspace(lv, module));
}

FinElement mff_epsilon(const AdmissibleLevel& lv, PbwOrder order) {
    const FinElement e = FinElement::generator(Gen::e, order);
    const FinElement f = FinElement::generator(Gen::f, order);
    const FinElement ef = e * f;
    FinElement product = FinElement::one(order);
    for (int i = 1; i <= lv.l; ++i) {
        for (int j = 1; j <= lv.N; ++j) {
            const ExactScalar s = ExactScalar(i) * lv.t + ExactScalar(j);
            const ExactScalar one(1);
            product = product * (ef + FinElement::from_poly(HPoly({-s * (s - one), s - one}), order));
        }
    }
    return product * fin_power(e, static_cast<unsigned>(lv.N));
}

ZeroWeightReach reach_zero_weight(const FinElement& x) {
    const auto w = x.weight();
    if (!w) throw InvalidInput("reach_zero_weight needs a nonzero homogeneous element");
    if (*w % 2 != 0) throw InvalidInput("odd adjoint weight");
    ZeroWeightReach out;
    if (*w < 0) {
        out.operator_gen = Gen::e;
        out.power = static_cast<unsigned>(-*w / 2);
    } else {
        out.operator_gen = Gen::f;
        out.power = static_cast<unsigned>(*w / 2);
    }
    out.result = fin_ad_power(out.operator_gen, x, out.power);
    return out;
}

HPoly p2_from_Q(const FinElement& Q) {
    return project_cartan(reach_zero_weight(fin_transpose(Q)).result, CartanSide::mod_n_minus);
}

HPoly p2_from_mff(const AdmissibleLevel& lv) {
    constexpr auto order = PbwOrder::E;
    const FinElement u = fin_power(FinElement::generator(Gen::f, order), static_cast<unsigned>(lv.N)) *
                         mff_epsilon(lv, order);
    return project_cartan(u, CartanSide::mod_n_minus);
}

HPoly p1_from_Q(const FinElement& Q) {
    return project_cartan(reach_zero_weight(Q).result, CartanSide::mod_n_plus);
}

HPoly compute_p2(const AdmissibleLevel& lv, P2Route route) {
    HPoly p = route == P2Route::nullspace ? p2_from_Q(compute_Q(lv)) : p2_from_mff(lv);
    if (p.is_zero())
        throw ConsistencyError("k=" + lv.to_string() + ": p2 vanishes (" +
                               (route == P2Route::nullspace ? "nullspace" : "mff") + " route)");
    return p;
}

HPoly compute_p1(const AdmissibleLevel& lv) {
    HPoly p = p1_from_Q(compute_Q(lv));
    if (p.is_zero()) throw ConsistencyError("k=" + lv.to_string() + ": p1 vanishes");
    return p;
}

ClassificationReport classify_category_O(const AdmissibleLevel& lv, const VacuumModule& module) {
    ClassificationReport report;
    report.level = lv;
    report.S = set_S(lv);
    report.Pk = enumerate_Pk(lv);

    const std::set<ExactScalar> distinct(report.S.begin(), report.S.end());
    require(report.S.size() == static_cast<std::size_t>((lv.l + 1) * lv.N), "|S| = (l+1)N", lv);
    require(distinct.size() == report.S.size(), "elements of S are distinct", lv);
    std::set<ExactScalar> pk_h;
    for (const auto& w : report.Pk) {
        require(w.level == lv.k, "every weight in P^k has level k", lv);
        pk_h.insert(w.lambda1);
    }
    require(pk_h == distinct, "{<lambda,h> : lambda in P^k} = S", lv);

    report.singular_vector = singular_vector_nullspace(lv, module);
    require(module.act(e_mode(0), report.singular_vector).is_zero(), "e(0) v_sing = 0", lv);
    require(module.act(f_mode(1), report.singular_vector).is_zero(), "f(1) v_sing = 0", lv);

    report.Q = zhu_image_F(report.singular_vector);
    require(report.Q.weight() == 2 * lv.N, "Q has adjoint weight 2N", lv);
    require(fin_ad(Gen::e, report.Q).is_zero(), "(ad e) Q = 0", lv);

    std::vector<ExactScalar> minus_S;
    for (const auto& r : report.S) minus_S.push_back(-r);

    report.p2 = p2_from_Q(report.Q);
    require(!report.p2.is_zero(), "p2 is nonzero", lv);
    require(has_simple_roots(report.p2, minus_S), "roots of p2 are exactly -S, all simple", lv);

    report.p1 = p1_from_Q(report.Q);
    require(!report.p1.is_zero(), "p1 is nonzero", lv);
    require(has_simple_roots(report.p1, report.S), "roots of p1 are exactly S, all simple", lv);

    require(poly_proportional(report.p2, p2_from_mff(lv)).has_value(),
            "p2 from the nullspace route is proportional to p2 from the closed form", lv);

    report.families = classify_weight_modules(lv, report.Q);
    for (const auto& sample : report.families.dense_samples)
        require(sample.annihilated, "Q annihilates E_{r,mu} at r=" + sample.r.to_string() + ", mu=" +
                                        sample.mu.to_string(), lv);
    return report;
}

ClassificationReport classify_category_O(const AdmissibleLevel& lv) {
    const VacuumModule module(lv.k);
    return classify_category_O(lv, module);
}

std::vector<std::string> category_O_labels(const ClassificationReport& report) {
    std::vector<std::string> labels;
    for (const auto& r : report.families.highest_weight) {
        std::string weight;
        if (r.is_zero()) weight = "0";
        else if (r == ExactScalar(1)) weight = "w";
        else weight = r.to_string() + "w";
        labels.push_back("L(" + report.level.k.to_string() + ", " + weight + ")");
    }
    return labels;
}

}  // namespace admz
