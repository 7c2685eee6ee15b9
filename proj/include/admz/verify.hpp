#pragma once

#include "admz/admissible.hpp"
#include "admz/affine.hpp"
#include "admz/usl2.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace admz {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckResult> checks;
    [[nodiscard]] bool passed() const;
};

/// Random element of U(sl2): up to `terms` monomials with exponents <= max_exp
/// and small rational coefficients.
FinElement random_fin_element(std::mt19937_64& rng, PbwOrder order, int terms = 3, int max_exp = 3);

/// Jacobi on affine modes, module axiom on M(k,0), associativity, transpose,
/// antipode and derivation properties in U(sl2), sl2 relations and the
/// Casimir on E_{r,mu}.
SuiteResult verify_algebra(int samples = 100, std::uint64_t seed = 20240517);

/// f^N (ef + (s-1)(h-s)) = (s-N-1)(h-s+N) f^N mod e U(g) for N <= max_n at
/// ten rational s, and the projection of f^N e^N mod U(g)n-.
SuiteResult verify_lemmas(int max_n);

/// Every invariant of the classification pipeline at each level, recorded
/// one check at a time. ResourceLimit propagates.
SuiteResult verify_classification(const std::vector<AdmissibleLevel>& levels,
                                  std::size_t max_dim = default_max_weight_dim);

}  // namespace admz
