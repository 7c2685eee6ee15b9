#include "admz/affine.hpp"
#include "admz/errors.hpp"
#include "support.hpp"

#include <doctest.h>

#include <map>

using namespace admz;

namespace {
const ExactScalar k(-1, 2);

// multisets of modes x(-n), n >= 1, counted by a generating-function DP
std::size_t count_monomials(int d, int w) {
    std::map<std::pair<int, int>, std::size_t> ways{{{0, 0}, 1}};
    for (int n = 1; n <= d; ++n)
        for (int charge : {-1, 0, 1}) {
            auto next = ways;
            for (const auto& [key, c] : ways)
                for (int m = 1; key.first + m * n <= d; ++m) next[{key.first + m * n, key.second + m * charge}] += c;
            ways = next;
        }
    const auto it = ways.find({d, w});
    return it == ways.end() ? 0 : it->second;
}

VermaVector single(const std::vector<Mode>& modes, const ExactScalar& level = k) {
    VermaVector v(level);
    v.add_term({modes}, ExactScalar(1));
    return v;
}
}  // namespace

TEST_CASE("mode brackets") {
    const auto b = bracket_modes(e_mode(1), f_mode(-1), k);
    REQUIRE(b.modes.size() == 1);
    CHECK(b.modes[0].first == h_mode(0));
    CHECK(b.modes[0].second == ExactScalar(1));
    CHECK(b.central == k);
    CHECK(bracket_modes(h_mode(2), h_mode(-2), k).central == ExactScalar(4) * k);
    CHECK(bracket_modes(h_mode(2), h_mode(-2), k).modes.empty());
    const auto he = bracket_modes(h_mode(-1), e_mode(-2), k);
    CHECK(he.modes.size() == 1);
    CHECK(he.modes[0].first == e_mode(-3));
    CHECK(he.modes[0].second == ExactScalar(2));
    CHECK(bracket_modes(e_mode(3), e_mode(-3), k).modes.empty());
    CHECK(bracket_modes(e_mode(3), e_mode(-3), k).central.is_zero());
}

TEST_CASE("vacuum action examples") {
    const VacuumModule M(k);
    const auto vac = M.vacuum();
    CHECK(M.act(e_mode(0), vac).is_zero());
    CHECK(M.act(h_mode(3), vac).is_zero());
    CHECK(M.act(e_mode(0), single({e_mode(-1)})).is_zero());
    CHECK(M.act(h_mode(0), single({e_mode(-1)})) == single({e_mode(-1)}) * ExactScalar(2));
    CHECK(M.act(f_mode(1), single({e_mode(-1)})) == vac * k);
    CHECK(M.act(h_mode(1), single({h_mode(-1)})) == vac * (ExactScalar(2) * k));
    CHECK(M.act(e_mode(0), single({f_mode(-1)})) == single({h_mode(-1)}));
    // creation modes land in canonical order
    CHECK(M.act(e_mode(-2), single({f_mode(-1)})) == single({e_mode(-2), f_mode(-1)}));
    CHECK(M.act(f_mode(-1), single({e_mode(-2)})) == single({e_mode(-2), f_mode(-1)}) - single({h_mode(-3)}));
}

TEST_CASE("weight space dimensions") {
    const VacuumModule M(k);
    for (const auto& [d, w, dim] : std::vector<std::tuple<int, int, std::size_t>>{
             {9, 3, 105}, {9, 4, 56}, {8, 2, 94}, {8, 4, 29}, {4, 2, 6}, {2, 2, 1}, {0, 0, 1}, {1, 0, 1}}) {
        CHECK(M.weight_space(d, w).dim() == dim);
        CHECK(count_monomials(d, w) == dim);
    }
    for (int d = 0; d <= 7; ++d)
        for (int w = -d - 1; w <= d + 1; ++w) CHECK(M.weight_space(d, w).dim() == count_monomials(d, w));
    const auto basis = M.weight_space(6, 1).basis;
    CHECK(std::is_sorted(basis.begin(), basis.end()));
    for (const auto& m : basis) {
        CHECK(m.delta_degree() == 6);
        CHECK(m.alpha_weight() == 1);
        CHECK(std::is_sorted(m.modes.begin(), m.modes.end()));
    }
}

TEST_CASE("dimension cap") {
    const VacuumModule small(k, 10);
    CHECK_NOTHROW((void)small.weight_space(4, 2));
    CHECK_THROWS_AS((void)small.weight_space(9, 3), ResourceLimit);
}

TEST_CASE("operator matrix matches direct action") {
    const VacuumModule M(k);
    const auto from = M.weight_space(4, 1), to = M.weight_space(4, 2), down = M.weight_space(3, 0);
    const auto E = M.operator_matrix(e_mode(0), from, to);
    const auto F = M.operator_matrix(f_mode(1), from, down);
    CHECK(E.rows() == to.dim());
    CHECK(E.cols() == from.dim());
    for (std::size_t j = 0; j < from.dim(); ++j) {
        VermaVector v(k);
        v.add_term(from.basis[j], ExactScalar(1));
        RationalVector unit(from.dim(), ExactScalar(0));
        unit[j] = ExactScalar(1);
        CHECK(to.vector(E.apply(unit), k) == M.act(e_mode(0), v));
        CHECK(down.vector(F.apply(unit), k) == M.act(f_mode(1), v));
    }
    CHECK_THROWS_AS((void)M.operator_matrix(e_mode(0), from, down), InvalidInput);
}

TEST_CASE("module axiom, random") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> g(0, 2), deg(-3, 3), d(0, 4);
    for (int n = 0; n < 60; ++n) {
        const ExactScalar level = testing::rand_scalar(rng);
        const VacuumModule M(level);
        const Mode x{static_cast<Gen>(g(rng)), deg(rng)}, y{static_cast<Gen>(g(rng)), deg(rng)};
        const int dd = d(rng);
        const auto space = M.weight_space(dd, 0);
        for (const auto& m : space.basis) {
            VermaVector v(level);
            v.add_term(m, ExactScalar(1));
            const auto b = bracket_modes(x, y, level);
            VermaVector rhs = v * b.central;
            for (const auto& [bm, c] : b.modes) rhs += M.act(bm, v) * c;
            CHECK(M.act(x, M.act(y, v)) - M.act(y, M.act(x, v)) == rhs);
        }
    }
}

TEST_CASE("verma text round trip") {
    const std::string text = "e(-3) e(-1) |0> - 1/3*h(-2) e(-1)^2 |0> - 71/156*e(-2)^2 |0>";
    const auto v = VermaVector::parse(text, k);
    CHECK(v.to_string() == text);
    CHECK(VermaVector::parse("|0>", k) == VermaVector::vacuum(k));
    // modes act right to left: e(-1) f(-1)|0> = f(-1) e(-1)|0> + h(-2)|0>
    CHECK(VermaVector::parse("e(-1) f(-1) |0>", k) ==
          VermaVector::parse("f(-1) e(-1) |0> + h(-2) |0>", k));
    CHECK(VermaVector::parse("e(0) e(-1) |0>", k).is_zero());
    CHECK_THROWS_AS(VermaVector::parse("x(-1) |0>", k), InvalidInput);
    CHECK_THROWS_AS(VermaVector::parse("e(-1)", k), InvalidInput);
}
