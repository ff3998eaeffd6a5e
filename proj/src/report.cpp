#include "dunkl/report.hpp"

#include "json.hpp"

namespace dunkl {

namespace {

using Json = nlohmann::ordered_json;

Json report_entry(const Report& r, bool timings) {
    Json e;
    e["identity"] = r.identity;
    e["system"] = r.system;
    e["params"] = Json{{"g", r.g_mode}, {"gamma", r.gamma_mode}};
    e["status"] = r.pass ? "pass" : "fail";
    e["residual"] = r.residual ? Json(*r.residual) : Json(nullptr);
    e["millis"] = timings ? Json(r.millis) : Json(nullptr);
    return e;
}

}  // namespace

std::string suite_json(const SuiteReport& suite, bool timings) {
    Json doc = Json::array();
    for (const auto& r : suite.reports) doc.push_back(report_entry(r, timings));
    return doc.dump(2) + "\n";
}

std::string certificate_json(const superint::IntegralCertificate& cert) {
    Json doc;
    doc["system"] = cert.system;
    doc["N"] = cert.n;
    doc["generators"] = cert.rendered;
    doc["rank"] = cert.rank;
    doc["target"] = cert.target;
    Json comm = Json::array();
    for (const auto& c : cert.checks) {
        Json e;
        e["generator"] = c.generator;
        e["status"] = c.pass() ? "pass" : "fail";
        e["commutes_with_H"] = c.commutes_with_H;
        e["preserves_invariants"] = c.preserves_invariants;
        e["commutes_with_Hloc"] = c.commutes_with_Hloc;
        e["test_functions"] = c.test_functions;
        e["couplings"] = c.couplings;
        comm.push_back(e);
    }
    doc["commutation"] = comm;
    Json pairs = Json::array();
    for (const auto& [ij, commute] : cert.pairwise) pairs.push_back(Json{{"i", ij.first + 1}, {"j", ij.second + 1}, {"commute", commute}});
    doc["pairwise"] = pairs;
    doc["max_degree"] = cert.max_degree;
    doc["D"] = cert.D;
    doc["seed"] = cert.seed;
    doc["status"] = cert.pass() ? "pass" : "fail";
    return doc.dump(2) + "\n";
}

std::string rewrite_json(const Algebra& alg, const std::string& input, const Element& normal, const RewriteStats& stats) {
    Json doc;
    doc["system"] = alg.system()->roots.label;
    doc["input"] = input;
    Json terms = Json::array();
    for (const auto& [m, c] : alg.monomials(normal)) {
        Element single;
        single.add(m.word(alg.n()), Poly(1));
        terms.push_back(Json{{"coefficient", c.to_string()}, {"monomial", alg.to_string(single)}, {"degree", m.degree()}});
    }
    doc["terms"] = terms;
    doc["steps"] = stats.steps;
    return doc.dump(2) + "\n";
}

}  // namespace dunkl
