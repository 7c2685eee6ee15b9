#pragma once

#include "admz/usl2.hpp"

#include <map>
#include <random>

namespace admz::testing {

inline ExactScalar rand_scalar(std::mt19937_64& rng, long span = 9, long max_den = 5) {
    std::uniform_int_distribution<long> num(-span, span);
    std::uniform_int_distribution<long> den(1, max_den);
    return ExactScalar(num(rng), den(rng));
}

// sl2 Verma module evaluated by hand, independent of the PBW straightening.
// lowest: v_n = e^n v, f v = 0, h v = lam v.
//   e v_n = v_{n+1}, h v_n = (lam+2n) v_n, f v_n = -n(lam+n-1) v_{n-1}
// highest: v_n = f^n v, e v = 0, h v = lam v.
//   f v_n = v_{n+1}, h v_n = (lam-2n) v_n, e v_n = n(lam-n+1) v_{n-1}
class VermaOracle {
public:
    using Vec = std::map<int, ExactScalar>;
    VermaOracle(ExactScalar lam, bool lowest) : lam_(std::move(lam)), lowest_(lowest) {}

    Vec act(Gen g, const Vec& v) const {
        Vec out;
        for (const auto& [n, c] : v) {
            const ExactScalar N(n);
            const Gen up = lowest_ ? Gen::e : Gen::f;
            if (g == Gen::h) out[n] += c * (lowest_ ? lam_ + ExactScalar(2) * N : lam_ - ExactScalar(2) * N);
            else if (g == up) out[n + 1] += c;
            else if (n > 0)
                out[n - 1] += c * (lowest_ ? -N * (lam_ + N - ExactScalar(1)) : N * (lam_ - N + ExactScalar(1)));
        }
        std::erase_if(out, [](const auto& p) { return p.second.is_zero(); });
        return out;
    }

    // x applied to v_0, each PBW monomial acting right to left.
    Vec apply(const FinElement& x) const {
        Vec out;
        const bool f_order = x.order() == PbwOrder::F;
        for (const auto& [m, c] : x.terms()) {
            Vec v{{0, c}};
            for (int i = 0; i < m.c; ++i) v = act(f_order ? Gen::e : Gen::f, v);
            for (int i = 0; i < m.b; ++i) v = act(Gen::h, v);
            for (int i = 0; i < m.a; ++i) v = act(f_order ? Gen::f : Gen::e, v);
            for (const auto& [n, d] : v) out[n] += d;
        }
        std::erase_if(out, [](const auto& p) { return p.second.is_zero(); });
        return out;
    }

private:
    ExactScalar lam_;
    bool lowest_;
};

}  // namespace admz::testing
