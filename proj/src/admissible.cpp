#include "admz/admissible.hpp"

#include "admz/errors.hpp"
#include "text_util.hpp"

#include <cctype>
#include <numeric>

namespace admz {

AdmissibleLevel admissible_params(long p, long q) {
    if (q < 1) throw InvalidInput("level denominator must be positive, got " + std::to_string(q));
    if (std::gcd(p, q) != 1)
        throw InvalidInput("level " + std::to_string(p) + "/" + std::to_string(q) + " is not in lowest terms");
    if (2 * q + p - 2 < 0)
        throw InvalidInput("level " + ExactScalar(p, q).to_string() + " is not admissible: 2q+p-2 = " +
                           std::to_string(2 * q + p - 2) + " < 0");
    AdmissibleLevel lv;
    lv.p = p;
    lv.q = q;
    lv.k = ExactScalar(p, q);
    lv.t = lv.k + ExactScalar(2);
    lv.N = static_cast<int>(2 * q + p - 1);
    lv.l = static_cast<int>(q - 1);
    return lv;
}

AdmissibleLevel parse_level(std::string_view text) {
    text = detail::trim(text);
    auto parse_int = [&text](std::string_view s, bool allow_sign) -> long {
        std::size_t i = 0;
        if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
        if (i == s.size()) throw InvalidInput("malformed level '" + std::string(text) + "', expected p/q");
        for (std::size_t j = i; j < s.size(); ++j)
            if (!std::isdigit(static_cast<unsigned char>(s[j])))
                throw InvalidInput("malformed level '" + std::string(text) + "', expected p/q");
        return ExactScalar::parse(s).to_long();
    };
    const auto slash = text.find('/');
    const long p = parse_int(text.substr(0, slash), true);
    const long q = slash == std::string_view::npos ? 1 : parse_int(text.substr(slash + 1), false);
    return admissible_params(p, q);
}

std::vector<ExactScalar> set_S(const AdmissibleLevel& lv) {
    std::vector<ExactScalar> S;
    for (int i = 0; i <= lv.l; ++i)
        for (int j = 1; j <= lv.N; ++j) S.push_back(ExactScalar(lv.N - j) - ExactScalar(i) * lv.t);
    return S;
}

std::vector<AffineWeight> enumerate_Pk(const AdmissibleLevel& lv) {
    std::vector<AffineWeight> weights;
    for (long m = 0; m <= lv.q - 1; ++m) {
        for (long n = 0; n <= 2 * lv.q + lv.p - 2; ++n) {
            const ExactScalar lambda1 = ExactScalar(n) - ExactScalar(m) * lv.t;
            weights.push_back({lv.k, lambda1, ExactScalar(0)});
        }
    }
    return weights;
}

bool is_nonnegative_integer(const ExactScalar& r) { return r.is_integer() && r.sign() >= 0; }

}  // namespace admz
