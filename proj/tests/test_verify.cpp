#include "admz/verify.hpp"

#include <doctest.h>

using namespace admz;

namespace {
void require_all(const SuiteResult& s) {
    CHECK_FALSE(s.checks.empty());
    for (const auto& c : s.checks) {
        CAPTURE(c.name);
        CAPTURE(c.detail);
        CHECK(c.passed);
    }
}
}  // namespace

TEST_CASE("algebra suite") { require_all(verify_algebra(100, 99)); }

TEST_CASE("lemmas suite") {
    const auto s = verify_lemmas(6);
    require_all(s);
    CHECK(s.checks.size() == 12);
}

TEST_CASE("classification suite") {
    std::vector<AdmissibleLevel> levels;
    for (const char* k : {"1", "2", "3", "-1/2", "1/2", "-4/3", "-2/3"}) levels.push_back(parse_level(k));
    require_all(verify_classification(levels));
}

TEST_CASE("random elements are reproducible") {
    std::mt19937_64 a(1), b(1);
    CHECK(random_fin_element(a, PbwOrder::F) == random_fin_element(b, PbwOrder::F));
}
