#pragma once

#include "admz/affine.hpp"
#include "admz/exact_scalar.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace admz {

/// Parameter pack of an admissible level k = p/q:
/// gcd(p,q) = 1, q >= 1, 2q + p - 2 >= 0, t = k + 2, N = 2q + p - 1, l = q - 1.
struct AdmissibleLevel {
    long p = 1;
    long q = 1;
    ExactScalar k;
    ExactScalar t;
    int N = 0;
    int l = 0;

    [[nodiscard]] std::string to_string() const { return k.to_string(); }
    friend bool operator==(const AdmissibleLevel&, const AdmissibleLevel&) = default;
};

/// Throws InvalidInput when gcd(p,q) != 1, q < 1 or 2q + p - 2 < 0.
AdmissibleLevel admissible_params(long p, long q);

/// Parses "p/q" or "p" literally (no reduction: "2/4" is rejected) and
/// validates admissibility.
AdmissibleLevel parse_level(std::string_view text);

/// { N - i t - j : 0 <= i <= l, 1 <= j <= N }, listed with i outer and j inner.
std::vector<ExactScalar> set_S(const AdmissibleLevel& lv);

/// (k - n + m t) Lambda_0 + (n - m t) Lambda_1 for 0 <= n <= 2q+p-2, 0 <= m <= q-1,
/// listed with m outer and n inner.
std::vector<AffineWeight> enumerate_Pk(const AdmissibleLevel& lv);

/// r in Z_{>=0}
bool is_nonnegative_integer(const ExactScalar& r);

}  // namespace admz
