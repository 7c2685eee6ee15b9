#pragma once

#include "admz/admissible.hpp"
#include "admz/usl2.hpp"
#include "admz/zhu.hpp"

#include <string>
#include <utility>
#include <vector>

namespace admz {

/// E_{r,mu} = t^mu C[t, t^-1] with basis E_i = t^{mu+i}:
///   e.E_i = -(mu+i) E_{i-1},  h.E_i = (r - 2mu - 2i) E_i,  f.E_i = (mu+i-r) E_{i+1}.
struct DenseParams {
    ExactScalar r;
    ExactScalar mu;
    /// mu and r - mu both non-integral.
    [[nodiscard]] bool irreducible() const;
};

struct EActionResult {
    ExactScalar coefficient;
    long index = 0;
    /// index displacement; -w for an element of ad weight 2w
    long shift = 0;
};

std::pair<ExactScalar, long> act_generator_on_E(Gen g, const DenseParams& params, long i);

/// u must be zero or ad-homogeneous (InvalidInput otherwise). Each PBW
/// monomial acts right to left.
EActionResult act_element_on_E(const FinElement& u, const DenseParams& params, long i);

/// Coefficients of u.E_i for the listed indices.
std::vector<std::pair<long, ExactScalar>> action_profile(const FinElement& u, const DenseParams& params,
                                                         const std::vector<long>& indices);

/// Indices at which Q is evaluated: 0..N, then two outside that range.
std::vector<long> annihilation_indices(const AdmissibleLevel& lv);

/// Q.E_i = 0 for every i in annihilation_indices(lv). Q.E_i is a polynomial
/// of degree <= N in mu+i, so the first N+1 points decide.
bool q_annihilates_E(const AdmissibleLevel& lv, const FinElement& Q, const DenseParams& params);
bool q_annihilates_E(const AdmissibleLevel& lv, const DenseParams& params);

/// r in S \ Z_+, mu not integral, r - mu not integral.
bool is_T_member(const AdmissibleLevel& lv, const DenseParams& params);

/// mu values sampled for each dense r.
std::vector<ExactScalar> default_mu_samples();

/// Highest and lowest weight families (r in S) and the dense family with
/// one verified sample per irreducible (r, mu), mu from default_mu_samples().
ModuleFamilies classify_weight_modules(const AdmissibleLevel& lv, const FinElement& Q);
ModuleFamilies classify_weight_modules(const AdmissibleLevel& lv);

/// "r in {-1/2, -3/2}, mu not integer, r-mu not integer", or "empty".
std::string dense_condition(const ModuleFamilies& families);

}  // namespace admz
