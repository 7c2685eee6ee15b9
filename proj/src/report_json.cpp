#include "admz/report_json.hpp"

#include "admz/errors.hpp"
#include "admz/weight_modules.hpp"

namespace admz {

using nlohmann::json;

namespace {

json scalar_list(const std::vector<ExactScalar>& xs) {
    json out = json::array();
    for (const auto& x : xs) out.push_back(x.to_string());
    return out;
}

std::vector<ExactScalar> parse_scalar_list(const json& arr) {
    std::vector<ExactScalar> out;
    for (const auto& x : arr) out.push_back(ExactScalar::parse(x.get<std::string>()));
    return out;
}

json poly_node(const HPoly& p) {
    return {{"text", p.to_string()}, {"coefficients", scalar_list(p.coefficients())}};
}

HPoly parse_poly_node(const json& node) { return HPoly(parse_scalar_list(node.at("coefficients"))); }

}  // namespace

json report_to_json(const ClassificationReport& report) {
    const AdmissibleLevel& lv = report.level;
    json level = {{"p", lv.p}, {"q", lv.q}, {"k", lv.k.to_string()}, {"t", lv.t.to_string()},
                  {"N", lv.N}, {"l", lv.l}};

    json pk = json::array();
    for (const auto& w : report.Pk)
        pk.push_back({{"level", w.level.to_string()},
                      {"lambda0", w.lambda0().to_string()},
                      {"lambda1", w.lambda1.to_string()},
                      {"delta", w.delta.to_string()}});

    json samples = json::array();
    for (const auto& s : report.families.dense_samples)
        samples.push_back({{"r", s.r.to_string()}, {"mu", s.mu.to_string()}, {"annihilated", s.annihilated}});

    json families = {
        {"highest_weight", {{"r", scalar_list(report.families.highest_weight)},
                            {"modules", category_O_labels(report)}}},
        {"lowest_weight", {{"r", scalar_list(report.families.lowest_weight)}}},
        {"dense", {{"r", scalar_list(report.families.dense_r)},
                   {"condition", dense_condition(report.families)},
                   {"samples", samples}}},
    };

    return {{"level", level},
            {"S", scalar_list(report.S)},
            {"Pk", pk},
            {"p1", poly_node(report.p1)},
            {"p2", poly_node(report.p2)},
            {"singular_vector", report.singular_vector.to_string()},
            {"Q", {{"order", "F"}, {"text", report.Q.to_string()}}},
            {"families", families}};
}

ClassificationReport report_from_json(const json& tree) {
    try {
        ClassificationReport report;
        const json& level = tree.at("level");
        report.level = admissible_params(level.at("p").get<long>(), level.at("q").get<long>());
        report.S = parse_scalar_list(tree.at("S"));
        for (const auto& w : tree.at("Pk"))
            report.Pk.push_back({ExactScalar::parse(w.at("level").get<std::string>()),
                                 ExactScalar::parse(w.at("lambda1").get<std::string>()),
                                 ExactScalar::parse(w.at("delta").get<std::string>())});
        report.p1 = parse_poly_node(tree.at("p1"));
        report.p2 = parse_poly_node(tree.at("p2"));
        report.singular_vector = VermaVector::parse(tree.at("singular_vector").get<std::string>(), report.level.k);
        const json& q = tree.at("Q");
        const PbwOrder order = q.at("order").get<std::string>() == "E" ? PbwOrder::E : PbwOrder::F;
        report.Q = FinElement::parse(q.at("text").get<std::string>(), order);
        const json& fam = tree.at("families");
        report.families.highest_weight = parse_scalar_list(fam.at("highest_weight").at("r"));
        report.families.lowest_weight = parse_scalar_list(fam.at("lowest_weight").at("r"));
        report.families.dense_r = parse_scalar_list(fam.at("dense").at("r"));
        for (const auto& s : fam.at("dense").at("samples"))
            report.families.dense_samples.push_back({ExactScalar::parse(s.at("r").get<std::string>()),
                                                     ExactScalar::parse(s.at("mu").get<std::string>()),
                                                     s.at("annihilated").get<bool>()});
        return report;
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("malformed report: ") + e.what());
    }
}

}  // namespace admz
