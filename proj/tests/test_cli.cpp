#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {
struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + " " + ADMZ_CLI_PATH + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    while (std::fgets(buf.data(), buf.size(), pipe)) out += buf.data();
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

bool has(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }
}  // namespace

TEST_CASE("cli classify") {
    const auto a = run("classify --level 1");
    CHECK(a.code == 0);
    CHECK(has(a.out, "S = {1, 0}"));
    CHECK(has(a.out, "Q = e^2"));
    const auto b = run("classify --level -1/2 --format json");
    CHECK(b.code == 0);
    const auto tree = nlohmann::json::parse(b.out);
    CHECK(tree["S"] == nlohmann::json::array({"1", "0", "-1/2", "-3/2"}));
    CHECK(run("classify --level=-1/2").code == 0);
    CHECK(run("classify --level -3/2").code == 2);
    CHECK(run("classify --level 2/4").code == 2);
    CHECK(run("classify --level x").code == 2);
    CHECK(run("classify").code == 2);
    CHECK(run("classify --level 1 --format yaml").code == 2);
}

TEST_CASE("cli singular") {
    const auto a = run("singular --level 1 --method both");
    CHECK(a.code == 0);
    CHECK(has(a.out, "e(-1)^2 |0>"));
    CHECK(has(a.out, "routes proportional: yes"));
    const auto b = run("singular --level -1/2 --method nullspace");
    CHECK(b.code == 0);
    CHECK(has(b.out, "e(-3) e(-1) |0> - 1/3*h(-2) e(-1)^2 |0>"));
    const auto c = run("singular --level -4/3 --method mff");
    CHECK(c.code == 0);
    CHECK(has(c.out, "closed form: f^2*e^3"));
    CHECK(run("singular --level 1 --method magic").code == 2);
}

TEST_CASE("cli zhu-poly") {
    const auto a = run("zhu-poly --level -1/2");
    CHECK(a.code == 0);
    CHECK(has(a.out, "p2 = -2/39*h^4 + 2/39*h^3 + 5/78*h^2 - 1/26*h"));
    CHECK(has(a.out, "all simple: yes"));
}

TEST_CASE("cli check-dense") {
    const auto a = run("check-dense --level -1/2 --r -1/2 --mu 1/3");
    CHECK(a.code == 0);
    CHECK(has(a.out, "member=true annihilates=true"));
    const auto b = run("check-dense --level 1 --r 1/2 --mu 1/3");
    CHECK(b.code == 0);
    CHECK(has(b.out, "member=false annihilates=false"));
    const auto c = run("check-dense --level -1/2 --r 0 --mu 1/3");
    CHECK(c.code == 0);
    CHECK(has(c.out, "member=false annihilates=false"));
    const auto d = run("check-dense --level -1/2 --r -3/2 --mu 1/2");
    CHECK(d.code == 0);
    CHECK(has(d.out, "reducible"));
    const auto j = nlohmann::json::parse(run("check-dense --level -1/2 --r -1/2 --mu 1/3 --format json").out);
    CHECK(j["member"] == true);
    CHECK(j["profile"].size() == 5);
    CHECK(run("check-dense --level -1/2 --r 1/0 --mu 1/3").code == 2);
}

TEST_CASE("cli verify") {
    CHECK(run("verify --suite lemmas --max-n 5").code == 0);
    CHECK(run("verify --suite algebra").code == 0);
    const auto c = run("verify --suite classification --levels 1,2,-1/2,1/2,-4/3,-2/3");
    CHECK(c.code == 0);
    CHECK(has(c.out, "all checks passed"));
    CHECK(run("verify --suite nope").code == 2);
    CHECK(run("verify --suite lemmas --max-n 0").code == 2);
}

TEST_CASE("cli dimension cap") {
    CHECK(run("classify --level -2/3 --max-dim 50").code == 3);
    CHECK(run("classify --level -2/3", "ADMZ_MAX_WEIGHT_DIM=50").code == 3);
    CHECK(run("classify --level -2/3 --max-dim 1000", "ADMZ_MAX_WEIGHT_DIM=50").code == 0);
    CHECK(run("classify --level 1", "ADMZ_MAX_WEIGHT_DIM=abc").code == 2);
}
