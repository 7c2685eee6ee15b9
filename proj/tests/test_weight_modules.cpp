#include "admz/errors.hpp"
#include "admz/weight_modules.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace admz;

namespace {
constexpr auto F = PbwOrder::F;
const ExactScalar third(1, 3);

// Lagrange interpolation through (x_j, y_j) evaluated at x
ExactScalar interpolate(const std::vector<ExactScalar>& xs, const std::vector<ExactScalar>& ys, const ExactScalar& x) {
    ExactScalar out(0);
    for (std::size_t j = 0; j < xs.size(); ++j) {
        ExactScalar term = ys[j];
        for (std::size_t m = 0; m < xs.size(); ++m)
            if (m != j) term *= (x - xs[m]) / (xs[j] - xs[m]);
        out += term;
    }
    return out;
}
}  // namespace

TEST_CASE("generator action examples") {
    const DenseParams p{ExactScalar(-1, 2), third};
    CHECK(act_generator_on_E(Gen::e, p, 0) == std::pair{-third, -1L});
    CHECK(act_generator_on_E(Gen::h, p, 0) == std::pair{ExactScalar(-7, 6), 0L});
    CHECK(act_generator_on_E(Gen::f, p, 0).second == 1);
    CHECK(act_generator_on_E(Gen::f, DenseParams{ExactScalar(5, 3), ExactScalar(2, 3)}, 1).first.is_zero());
}

TEST_CASE("element action examples") {
    const DenseParams p{ExactScalar(3, 7), ExactScalar(2, 5)};
    for (long i = -3; i <= 3; ++i) {
        const ExactScalar x = p.mu + ExactScalar(i);
        const auto r = act_element_on_E(FinElement::parse("e^2", F), p, i);
        CHECK(r.coefficient == x * (x - ExactScalar(1)));
        CHECK(r.index == i - 2);
        CHECK(r.shift == -2);
        const auto one = act_element_on_E(FinElement::one(F), p, i);
        CHECK((one.coefficient == ExactScalar(1) && one.index == i));
        const auto casimir = act_element_on_E(FinElement::parse("e*f + f*e + 1/2*h^2", F), p, i);
        CHECK(casimir.coefficient == p.r * p.r / ExactScalar(2) + p.r);
        // E order gives the same action
        const auto u = FinElement::parse("f*e^2*h + 3*e", F);
        CHECK(act_element_on_E(u, p, i).coefficient == act_element_on_E(fin_reorder(u, PbwOrder::E), p, i).coefficient);
    }
    CHECK(act_element_on_E(FinElement(F), p, 4).coefficient.is_zero());
    CHECK_THROWS_AS(act_element_on_E(FinElement::parse("e + f", F), p, 0), InvalidInput);
}

TEST_CASE("E_{r,mu} is an sl2-module, random") {
    std::mt19937_64 rng(29);
    const auto e = FinElement::generator(Gen::e, F), h = FinElement::generator(Gen::h, F),
               f = FinElement::generator(Gen::f, F);
    for (int n = 0; n < 40; ++n) {
        const DenseParams p{testing::rand_scalar(rng, 20, 7), testing::rand_scalar(rng, 20, 7)};
        for (long i = -5; i <= 5; ++i) {
            auto on = [&](const FinElement& u) { return act_element_on_E(u, p, i).coefficient; };
            CHECK(on(h * e - e * h) == ExactScalar(2) * on(e));
            CHECK(on(h * f - f * h) == ExactScalar(-2) * on(f));
            CHECK(on(e * f - f * e) == on(h));
            CHECK(on(FinElement::parse("e*f + f*e + 1/2*h^2", F)) == p.r * p.r / ExactScalar(2) + p.r);
        }
    }
}

TEST_CASE("Q action is a polynomial of degree <= N in mu+i") {
    for (const char* s : {"-1/2", "-4/3", "1/2", "2"}) {
        const auto lv = parse_level(s);
        const auto Q = compute_Q(lv);
        const DenseParams p{ExactScalar(2, 9), ExactScalar(3, 11)};
        std::vector<ExactScalar> xs, ys;
        for (long i = 0; i <= lv.N; ++i) {
            xs.push_back(p.mu + ExactScalar(i));
            ys.push_back(act_element_on_E(Q, p, i).coefficient);
        }
        for (long i : {-4L, static_cast<long>(lv.N) + 1, static_cast<long>(lv.N) + 7})
            CHECK(act_element_on_E(Q, p, i).coefficient == interpolate(xs, ys, p.mu + ExactScalar(i)));
        // depends only on mu+i
        for (long i = -2; i <= 2; ++i)
            CHECK(act_element_on_E(Q, p, i).coefficient ==
                  act_element_on_E(Q, DenseParams{p.r, p.mu + ExactScalar(1)}, i - 1).coefficient);
    }
}

TEST_CASE("T membership") {
    const auto lv = parse_level("-1/2");
    CHECK(is_T_member(lv, {ExactScalar(-1, 2), third}));
    CHECK_FALSE(is_T_member(lv, {ExactScalar(0), third}));
    CHECK_FALSE(is_T_member(lv, {ExactScalar(-3, 2), ExactScalar(1, 2)}));
    CHECK_FALSE(is_T_member(lv, {ExactScalar(17, 5), third}));
    CHECK_FALSE((DenseParams{ExactScalar(-3, 2), ExactScalar(1, 2)}).irreducible());
}

TEST_CASE("annihilation examples") {
    CHECK_FALSE(q_annihilates_E(parse_level("1"), {ExactScalar(1, 2), third}));
    CHECK(q_annihilates_E(parse_level("-1/2"), {ExactScalar(-1, 2), third}));
    CHECK_FALSE(q_annihilates_E(parse_level("-1/2"), {ExactScalar(1), third}));
    CHECK(annihilation_indices(parse_level("-1/2")) == std::vector<long>{0, 1, 2, -3, 7});
}

TEST_CASE("annihilation iff T membership on a grid") {
    for (const char* s : {"-1/2", "-4/3", "1/2", "-2/3", "1"}) {
        CAPTURE(s);
        const auto lv = parse_level(s);
        const auto Q = compute_Q(lv);
        auto rs = set_S(lv);
        for (const auto& extra : {ExactScalar(17, 5), ExactScalar(2), ExactScalar(-7, 3), ExactScalar(1, 6),
                                  ExactScalar(-5, 2)})
            rs.push_back(extra);
        for (const auto& r : rs)
            for (const auto& mu : {third, ExactScalar(1, 4), ExactScalar(5, 7), ExactScalar(-2, 9)}) {
                const DenseParams p{r, mu};
                if (!p.irreducible()) continue;
                CAPTURE(r);
                CAPTURE(mu);
                CHECK(q_annihilates_E(lv, Q, p) == is_T_member(lv, p));
            }
    }
}

TEST_CASE("weight module families") {
    const auto f1 = classify_weight_modules(parse_level("1"));
    CHECK(f1.highest_weight == std::vector<ExactScalar>{1, 0});
    CHECK(f1.lowest_weight == std::vector<ExactScalar>{1, 0});
    CHECK(f1.dense_r.empty());
    CHECK(dense_condition(f1) == "empty");
    const auto f2 = classify_weight_modules(parse_level("-1/2"));
    CHECK(dense_condition(f2) == "r in {-1/2, -3/2}, mu not integer, r-mu not integer");
    for (const auto& s : f2.dense_samples) CHECK(s.annihilated);
    const auto f3 = classify_weight_modules(parse_level("-4/3"));
    CHECK(f3.dense_r == std::vector<ExactScalar>{ExactScalar(-2, 3), ExactScalar(-4, 3)});
}
