#pragma once

#include "admz/admissible.hpp"
#include "admz/affine.hpp"
#include "admz/hpoly.hpp"
#include "admz/rational_matrix.hpp"
#include "admz/usl2.hpp"

#include <vector>

namespace admz {

/// The e(0)/f(1)-kernel on the weight space of the singular vector,
/// W(qN, N) in M(k,0).
struct SingularKernel {
    WeightSpace space;
    RationalMatrix stacked;  // e(0) rows on top of f(1) rows
    std::vector<RationalVector> basis;
};

SingularKernel singular_kernel(const AdmissibleLevel& lv, const VacuumModule& module);

/// The unique singular vector, scaled so its first nonzero coefficient (in
/// basis order) is 1. Throws ConsistencyError unless the kernel is a line.
VermaVector singular_vector_nullspace(const AdmissibleLevel& lv, const VacuumModule& module);
VermaVector singular_vector_nullspace(const AdmissibleLevel& lv);

/// a_1(-i_1-1) ... a_n(-i_n-1)|0>  ->  (-1)^{i_1+...+i_n} a_n ... a_1
FinElement zhu_image_F(const VermaVector& v, PbwOrder order = PbwOrder::F);

FinElement compute_Q(const AdmissibleLevel& lv);
FinElement compute_Q(const AdmissibleLevel& lv, const VacuumModule& module);

/// prod_{i=1..l} prod_{j=1..N} (ef + (it+j-1)h - (it+j)(it+j-1)) * e^N
FinElement mff_epsilon(const AdmissibleLevel& lv, PbwOrder order = PbwOrder::F);

/// Adjoint power carrying a homogeneous element to weight 0:
/// (ad e)^m for weight -2m, (ad f)^m for weight 2m.
struct ZeroWeightReach {
    Gen operator_gen = Gen::h;
    unsigned power = 0;
    FinElement result;
};

ZeroWeightReach reach_zero_weight(const FinElement& x);

enum class P2Route { nullspace, mff };

/// p2 from Q^T (transpose, adjoint power to weight 0, projection mod U(g)n-).
HPoly p2_from_Q(const FinElement& Q);
/// p2 from the closed form: f^N * mff_epsilon projected mod U(g)n-.
HPoly p2_from_mff(const AdmissibleLevel& lv);
/// p1 from Q (adjoint power to weight 0, projection mod U(g)n+).
HPoly p1_from_Q(const FinElement& Q);

/// Either route; throws ConsistencyError on a zero polynomial.
HPoly compute_p2(const AdmissibleLevel& lv, P2Route route);
HPoly compute_p1(const AdmissibleLevel& lv);

/// The three families of irreducible weight modules: V(r w) and V(r w)* for
/// r in S, and the dense E_{r,mu} with r in S \ Z_+, mu and r - mu non-integral.
struct DenseSample {
    ExactScalar r;
    ExactScalar mu;
    bool annihilated = false;
    friend bool operator==(const DenseSample&, const DenseSample&) = default;
};

struct ModuleFamilies {
    std::vector<ExactScalar> highest_weight;
    std::vector<ExactScalar> lowest_weight;
    std::vector<ExactScalar> dense_r;
    std::vector<DenseSample> dense_samples;
    friend bool operator==(const ModuleFamilies&, const ModuleFamilies&) = default;
};

struct ClassificationReport {
    AdmissibleLevel level;
    std::vector<ExactScalar> S;
    std::vector<AffineWeight> Pk;
    HPoly p1;
    HPoly p2;
    VermaVector singular_vector;
    FinElement Q;
    ModuleFamilies families;
    friend bool operator==(const ClassificationReport&, const ClassificationReport&) = default;
};

/// Runs the pipeline and its cross-checks; the first failed check throws
/// ConsistencyError naming the invariant.
ClassificationReport classify_category_O(const AdmissibleLevel& lv, const VacuumModule& module);
ClassificationReport classify_category_O(const AdmissibleLevel& lv);

/// "L(k, r w)" labels for the highest-weight family.
std::vector<std::string> category_O_labels(const ClassificationReport& report);

}  // namespace admz
