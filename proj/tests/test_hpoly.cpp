#include "admz/errors.hpp"
#include "admz/hpoly.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace admz;

namespace {
HPoly from_roots(const std::vector<ExactScalar>& roots, const ExactScalar& lead) {
    HPoly p = HPoly::constant(lead);
    for (const auto& r : roots) p = p * HPoly::linear_factor(r);
    return p;
}
}  // namespace

TEST_CASE("hpoly basics") {
    const HPoly p({ExactScalar(0), ExactScalar(2), ExactScalar(2)});
    CHECK(p.to_string() == "2*h^2 + 2*h");
    CHECK(p.degree() == 2);
    CHECK(p(ExactScalar(-1)) == ExactScalar(0));
    CHECK(HPoly().degree() == -1);
    CHECK(HPoly().to_string() == "0");
    CHECK(HPoly({ExactScalar(1), ExactScalar(0), ExactScalar(0)}).degree() == 0);
    CHECK(HPoly::parse("-1/2*h^4 + 1/2*h^3 + 5/8*h^2 - 3/8*h") ==
          HPoly({ExactScalar(0), ExactScalar(-3, 8), ExactScalar(5, 8), ExactScalar(1, 2), ExactScalar(-1, 2)}));
    CHECK(HPoly::parse("h - 1") == HPoly::linear_factor(ExactScalar(1)));
    CHECK_THROWS_AS(HPoly::parse("h^"), InvalidInput);
}

TEST_CASE("hpoly division and roots") {
    const HPoly p = from_roots({ExactScalar(1, 2), ExactScalar(1, 2), ExactScalar(-3)}, ExactScalar(4));
    const auto [q, rem] = p.divide_linear(ExactScalar(-3));
    CHECK(rem.is_zero());
    CHECK(q == from_roots({ExactScalar(1, 2), ExactScalar(1, 2)}, ExactScalar(4)));
    const std::vector<ExactScalar> cands = {ExactScalar(1, 2), ExactScalar(-3), ExactScalar(7)};
    const RootCheck rc = poly_root_check(p, cands);
    CHECK(rc.multiplicity(ExactScalar(1, 2)) == 2);
    CHECK(rc.multiplicity(ExactScalar(-3)) == 1);
    CHECK(rc.multiplicity(ExactScalar(7)) == 0);
    CHECK(rc.cofactor == HPoly::constant(ExactScalar(4)));
    CHECK_THROWS_AS(poly_root_check(HPoly(), cands), InvalidInput);
}

TEST_CASE("hpoly proportional") {
    const HPoly a({ExactScalar(0), ExactScalar(-1, 26), ExactScalar(5, 78)});
    CHECK(poly_proportional(a * ExactScalar(-3, 7), a) == ExactScalar(-3, 7));
    CHECK_FALSE(poly_proportional(a, a + HPoly::constant(ExactScalar(1))).has_value());
    CHECK_FALSE(poly_proportional(a, HPoly()).has_value());
    CHECK(poly_proportional(HPoly(), HPoly()) == ExactScalar(1));
}

TEST_CASE("hpoly ring properties, random") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> deg(0, 5);
    auto rand_poly = [&] {
        std::vector<ExactScalar> c;
        for (int i = 0, d = deg(rng); i <= d; ++i) c.push_back(testing::rand_scalar(rng));
        return HPoly(c);
    };
    for (int n = 0; n < 200; ++n) {
        const HPoly a = rand_poly(), b = rand_poly();
        const ExactScalar x = testing::rand_scalar(rng);
        CHECK((a * b)(x) == a(x) * b(x));
        CHECK((a + b)(x) == a(x) + b(x));
        CHECK(poly_mul(a, b) == b * a);
        CHECK(HPoly::parse(a.to_string()) == a);
        const auto [q, r] = a.divide_linear(x);
        CHECK(q * HPoly::linear_factor(x) + HPoly::constant(r) == a);
        CHECK(r == a(x));
    }
}
