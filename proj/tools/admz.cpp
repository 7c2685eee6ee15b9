#include "admz/errors.hpp"
#include "admz/report_json.hpp"
#include "admz/verify.hpp"
#include "admz/weight_modules.hpp"
#include "admz/zhu.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace admz;
using nlohmann::json;

namespace {

struct Options {
    std::string level;
    std::string format = "text";
    std::string method = "both";
    std::string r;
    std::string mu;
    std::string suite = "algebra";
    std::string levels = "1,2,3,-1/2,1/2,-4/3,-2/3";
    int max_n = 5;
    long long max_dim = -1;
};

std::size_t resolve_cap(const Options& opt) {
    if (opt.max_dim >= 0) {
        if (opt.max_dim == 0) throw InvalidInput("--max-dim must be positive");
        return static_cast<std::size_t>(opt.max_dim);
    }
    if (const char* env = std::getenv("ADMZ_MAX_WEIGHT_DIM")) {
        const std::string text(env);
        if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos || std::stoull(text) == 0)
            throw InvalidInput("ADMZ_MAX_WEIGHT_DIM must be a positive integer, got '" + text + "'");
        return static_cast<std::size_t>(std::stoull(text));
    }
    return default_max_weight_dim;
}

std::string join(const std::vector<ExactScalar>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + xs[i].to_string();
    return out;
}

json scalars(const std::vector<ExactScalar>& xs) {
    json out = json::array();
    for (const auto& x : xs) out.push_back(x.to_string());
    return out;
}

int cmd_classify(const Options& opt) {
    const AdmissibleLevel lv = parse_level(opt.level);
    const VacuumModule module(lv.k, resolve_cap(opt));
    const ClassificationReport report = classify_category_O(lv, module);
    if (opt.format == "json") {
        std::cout << report_to_json(report).dump(2) << "\n";
        return 0;
    }
    std::cout << "level k = " << lv.k << "  (p=" << lv.p << ", q=" << lv.q << ", t=" << lv.t << ", N=" << lv.N
              << ", l=" << lv.l << ")\n";
    std::cout << "S = {" << join(report.S) << "}\n";
    std::cout << "P^k:\n";
    for (const auto& w : report.Pk) std::cout << "  " << w.to_string() << "\n";
    std::cout << "singular vector: " << report.singular_vector.to_string() << "\n";
    std::cout << "Q = " << report.Q.to_string() << "\n";
    std::cout << "p1 = " << report.p1.to_string() << "\n";
    std::cout << "p2 = " << report.p2.to_string() << "\n";
    std::cout << "category O:";
    for (const auto& label : category_O_labels(report)) std::cout << " " << label;
    std::cout << "\nhighest weight V(r w): r in {" << join(report.families.highest_weight) << "}\n";
    std::cout << "lowest weight V(r w)*: r in {" << join(report.families.lowest_weight) << "}\n";
    std::cout << "dense E_{r,mu}: " << dense_condition(report.families) << "\n";
    for (const auto& s : report.families.dense_samples)
        std::cout << "  r=" << s.r << " mu=" << s.mu << " annihilated=" << (s.annihilated ? "true" : "false") << "\n";
    return 0;
}

int cmd_singular(const Options& opt) {
    const AdmissibleLevel lv = parse_level(opt.level);
    if (opt.method != "nullspace" && opt.method != "mff" && opt.method != "both")
        throw InvalidInput("--method must be nullspace, mff or both");
    const VacuumModule module(lv.k, resolve_cap(opt));
    json out = {{"level", lv.k.to_string()}, {"method", opt.method}};
    std::ostringstream text;
    int code = 0;
    HPoly p2_null, p2_mff;
    if (opt.method != "mff") {
        const VermaVector v = singular_vector_nullspace(lv, module);
        const FinElement Q = zhu_image_F(v);
        p2_null = p2_from_Q(Q);
        out["singular_vector"] = v.to_string();
        out["Q"] = Q.to_string();
        out["p2_nullspace"] = p2_null.to_string();
        text << "singular vector: " << v.to_string() << "\nQ = " << Q.to_string() << "\np2 (nullspace) = "
             << p2_null.to_string() << "\n";
    }
    if (opt.method != "nullspace") {
        const FinElement eps = mff_epsilon(lv);
        p2_mff = p2_from_mff(lv);
        out["closed_form"] = eps.to_string();
        out["p2_mff"] = p2_mff.to_string();
        text << "closed form: " << eps.to_string() << "\np2 (mff) = " << p2_mff.to_string() << "\n";
    }
    if (opt.method == "both") {
        const auto c = poly_proportional(p2_null, p2_mff);
        out["proportional"] = c.has_value();
        if (c) out["ratio"] = c->to_string();
        text << "routes proportional: " << (c ? "yes, p2 (nullspace) = " + c->to_string() + " * p2 (mff)" : "no")
             << "\n";
        if (!c) code = 1;
    }
    if (opt.format == "json") std::cout << out.dump(2) << "\n";
    else std::cout << text.str();
    return code;
}

int cmd_zhu_poly(const Options& opt) {
    const AdmissibleLevel lv = parse_level(opt.level);
    const VacuumModule module(lv.k, resolve_cap(opt));
    const FinElement Q = compute_Q(lv, module);
    const HPoly p1 = p1_from_Q(Q);
    const HPoly p2 = p2_from_Q(Q);
    const auto S = set_S(lv);
    std::vector<ExactScalar> minus_S;
    for (const auto& r : S) minus_S.push_back(-r);
    const RootCheck rc1 = poly_root_check(p1, S);
    const RootCheck rc2 = poly_root_check(p2, minus_S);
    json roots = json::array();
    bool ok = p1.degree() == static_cast<int>(S.size()) && p2.degree() == static_cast<int>(S.size()) &&
              rc1.cofactor.degree() == 0 && rc2.cofactor.degree() == 0;
    std::ostringstream text;
    text << "p1 = " << p1.to_string() << "\np2 = " << p2.to_string() << "\n";
    for (const auto& r : S) {
        const int m1 = rc1.multiplicity(r);
        const int m2 = rc2.multiplicity(-r);
        ok = ok && m1 == 1 && m2 == 1;
        roots.push_back({{"r", r.to_string()}, {"p1_multiplicity", m1}, {"p2_multiplicity_at_minus_r", m2}});
        text << "  r = " << r << ": mult of r in p1 = " << m1 << ", mult of -r in p2 = " << m2 << "\n";
    }
    text << "cofactor p1 = " << rc1.cofactor.to_string() << ", cofactor p2 = " << rc2.cofactor.to_string() << "\n";
    text << "roots exactly S / -S, all simple: " << (ok ? "yes" : "no") << "\n";
    if (opt.format == "json") {
        std::cout << json{{"level", lv.k.to_string()},
                          {"S", scalars(S)},
                          {"p1", p1.to_string()},
                          {"p2", p2.to_string()},
                          {"roots", roots},
                          {"cofactor_p1", rc1.cofactor.to_string()},
                          {"cofactor_p2", rc2.cofactor.to_string()},
                          {"simple_roots", ok}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << text.str();
    }
    return ok ? 0 : 1;
}

int cmd_check_dense(const Options& opt) {
    const AdmissibleLevel lv = parse_level(opt.level);
    if (opt.r.empty() || opt.mu.empty()) throw InvalidInput("check-dense needs --r and --mu");
    const DenseParams params{ExactScalar::parse(opt.r), ExactScalar::parse(opt.mu)};
    const VacuumModule module(lv.k, resolve_cap(opt));
    const FinElement Q = compute_Q(lv, module);
    const bool member = is_T_member(lv, params);
    const bool annihilates = q_annihilates_E(lv, Q, params);
    const bool irreducible = params.irreducible();
    const bool agree = member == annihilates;
    const auto profile = action_profile(Q, params, annihilation_indices(lv));
    const long shift = act_element_on_E(Q, params, 0).shift;
    if (opt.format == "json") {
        json prof = json::array();
        for (const auto& [i, c] : profile) prof.push_back({{"i", i}, {"coefficient", c.to_string()}});
        std::cout << json{{"level", lv.k.to_string()}, {"r", params.r.to_string()}, {"mu", params.mu.to_string()},
                          {"irreducible", irreducible}, {"member", member}, {"annihilates", annihilates},
                          {"shift", shift}, {"profile", prof}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "member=" << (member ? "true" : "false") << " annihilates=" << (annihilates ? "true" : "false")
                  << "\n";
        std::cout << "Q.E_i = c_i E_{i" << (shift < 0 ? "" : "+") << shift << "}:\n";
        for (const auto& [i, c] : profile) std::cout << "  i=" << i << ": " << c << "\n";
        if (!irreducible)
            std::cout << "note: mu or r-mu is an integer, E_{r,mu} is reducible and the criterion does not apply\n";
    }
    return irreducible && !agree ? 1 : 0;
}

int cmd_verify(const Options& opt) {
    SuiteResult result;
    if (opt.suite == "algebra") {
        result = verify_algebra();
    } else if (opt.suite == "lemmas") {
        result = verify_lemmas(opt.max_n);
    } else if (opt.suite == "classification") {
        std::vector<AdmissibleLevel> levels;
        std::stringstream in(opt.levels);
        for (std::string item; std::getline(in, item, ',');) levels.push_back(parse_level(item));
        if (levels.empty()) throw InvalidInput("--levels is empty");
        result = verify_classification(levels, resolve_cap(opt));
    } else {
        throw InvalidInput("--suite must be algebra, lemmas or classification");
    }
    if (opt.format == "json") {
        json checks = json::array();
        for (const auto& c : result.checks)
            checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        std::cout << json{{"suite", result.suite}, {"passed", result.passed()}, {"checks", checks}}.dump(2) << "\n";
    } else {
        for (const auto& c : result.checks)
            std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
        std::cout << result.suite << ": " << (result.passed() ? "all checks passed" : "violations found") << "\n";
    }
    return result.passed() ? 0 : 1;
}

// "--level -1/2" would otherwise read -1/2 as an option.
std::vector<std::string> glue_negative_values(int argc, char** argv) {
    static const std::set<std::string> valued = {"--level", "--r", "--mu", "--levels"};
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (valued.count(a) && i + 1 < argc && argv[i + 1][0] == '-' &&
            (std::isdigit(static_cast<unsigned char>(argv[i + 1][1])) != 0)) {
            a += "=" + std::string(argv[++i]);
        }
        args.push_back(a);
    }
    return args;
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"Admissible-level sl2 representation theory: singular vectors, Zhu algebra, module classification"};
    app.require_subcommand(1);
    const auto format_check = CLI::IsMember({"text", "json"});

    auto common = [&](CLI::App* cmd, bool needs_level) {
        auto* level = cmd->add_option("--level", opt.level, "level k as p/q");
        if (needs_level) level->required();
        cmd->add_option("--format", opt.format, "text or json")->check(format_check);
        cmd->add_option("--max-dim", opt.max_dim, "weight-space dimension cap (env ADMZ_MAX_WEIGHT_DIM)");
    };

    auto* classify = app.add_subcommand("classify", "full classification report");
    common(classify, true);
    auto* singular = app.add_subcommand("singular", "singular vector and the two p2 routes");
    common(singular, true);
    singular->add_option("--method", opt.method, "nullspace, mff or both");
    auto* zhu_poly = app.add_subcommand("zhu-poly", "p1, p2 and their roots");
    common(zhu_poly, true);
    auto* dense = app.add_subcommand("check-dense", "Q-annihilation of E_{r,mu} against membership in T");
    common(dense, true);
    dense->add_option("--r", opt.r, "r as p/q")->required();
    dense->add_option("--mu", opt.mu, "mu as p/q")->required();
    auto* verify = app.add_subcommand("verify", "invariant suites");
    common(verify, false);
    verify->add_option("--suite", opt.suite, "algebra, lemmas or classification");
    verify->add_option("--max-n", opt.max_n, "largest N for the lemmas suite");
    verify->add_option("--levels", opt.levels, "comma-separated levels for the classification suite");

    std::vector<std::string> args = glue_negative_values(argc, argv);
    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*classify) return cmd_classify(opt);
        if (*singular) return cmd_singular(opt);
        if (*zhu_poly) return cmd_zhu_poly(opt);
        if (*dense) return cmd_check_dense(opt);
        if (*verify) return cmd_verify(opt);
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ResourceLimit& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const ConsistencyError& e) {
        std::cerr << "violation: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
