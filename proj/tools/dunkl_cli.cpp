// dunkl: command-line front end for the identity suite, the rewriting
// system, basis ranks, the central-quotient check and certificates.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "dunkl/classical.hpp"
#include "dunkl/identities.hpp"
#include "dunkl/report.hpp"
#include "dunkl/rgw.hpp"
#include "dunkl/superint.hpp"

using namespace dunkl;

namespace {

struct RunConfig {
    std::string system = "A2";
    std::string gamma = "symbolic";
    std::string couplings = "symbolic";
    std::string identities = "all";
    int max_degree = -1;
    int test_degree = -1;
    std::size_t budget = 1'000'000;
    std::uint64_t seed = 1;
    std::string format = "text";
    std::string out;
    int jobs = 1;
    std::size_t cap = 1200;
    bool timings = false;
};

Rational parse_rational(const std::string& s) {
    Rational q;
    if (s.empty() || q.set_str(s, 10) != 0 || q.get_den() == 0) throw Error(ErrorKind::ParseError, "not a rational number: " + s);
    q.canonicalize();
    return q;
}

Poly gamma_of(const RunConfig& c) {
    if (c.gamma == "symbolic") return Poly::var(vars::kGamma);
    return Poly(parse_rational(c.gamma));
}

std::shared_ptr<const CoxeterSystem> system_of(const RunConfig& c) {
    auto sys = make_system(c.system, c.cap);
    if (c.couplings == "symbolic") return sys;
    std::vector<Poly> values;
    std::stringstream in(c.couplings);
    for (std::string item; std::getline(in, item, ',');) values.push_back(Poly(parse_rational(item)));
    if (values.size() == 1)
        values.resize(sys->roots.num_orbits, values.front());
    if (static_cast<int>(values.size()) != sys->roots.num_orbits)
        throw Error(ErrorKind::BadSpec, "expected " + std::to_string(sys->roots.num_orbits) + " coupling value(s)");
    return with_multiplicity(*sys, values);
}

class Output {
public:
    explicit Output(const std::string& path) : path_(path) {}
    std::ostream& stream() { return path_.empty() ? std::cout : buffer_; }
    void flush() {
        if (path_.empty()) {
            std::cout.flush();
            return;
        }
        std::ofstream f(path_, std::ios::binary);
        if (!f) throw Error(ErrorKind::BadSpec, "cannot write " + path_);
        f << buffer_.str();
    }

private:
    std::string path_;
    std::ostringstream buffer_;
};

bool json(const RunConfig& c) {
    if (c.format != "json" && c.format != "text") throw Error(ErrorKind::BadSpec, "format must be json or text");
    return c.format == "json";
}

int cmd_verify(const RunConfig& c) {
    const bool as_json = json(c);
    const Catalog cat(system_of(c), gamma_of(c));
    std::vector<std::string> selection;
    if (c.identities != "all") {
        std::stringstream in(c.identities);
        for (std::string item; std::getline(in, item, ',');) selection.push_back(find_identity(item).name);
    }
    const SuiteReport suite = check_all(cat, selection, c.jobs);
    Output out(c.out);
    if (as_json) {
        out.stream() << suite_json(suite, c.timings);
    } else {
        auto& s = out.stream();
        for (const auto& r : suite.reports) {
            s << std::left << std::setw(16) << r.identity << std::setw(8) << r.system << (r.pass ? "pass" : "FAIL");
            if (c.timings) s << "  " << std::fixed << std::setprecision(1) << r.millis << " ms";
            if (r.residual) s << "  " << *r.residual;
            s << "\n";
        }
        s << suite.passed << "/" << suite.reports.size() << " pass\n";
    }
    out.flush();
    return suite.failed == 0 ? 0 : 1;
}

int cmd_rewrite(const RunConfig& c, const std::string& expr) {
    const bool as_json = json(c);
    const Algebra alg(system_of(c), gamma_of(c));
    const Element e = alg.parse(expr);
    RewriteStats stats;
    const Element normal = alg.rewrite(e, c.budget, &stats);
    Output out(c.out);
    if (as_json)
        out.stream() << rewrite_json(alg, expr, normal, stats);
    else
        out.stream() << alg.to_string(normal) << "\n";
    out.flush();
    return 0;
}

int cmd_basis(const RunConfig& c, bool l_only, bool identity_only, bool with_rank) {
    const bool as_json = json(c);
    const Algebra alg(system_of(c), gamma_of(c));
    BasisOptions opt;
    opt.max_degree = c.max_degree < 0 ? 2 : c.max_degree;
    if (l_only) {
        opt.with_A = false;
        opt.with_H = false;
    }
    if (identity_only) opt.elements = {GroupTable::identity()};
    const auto basis = enumerate_basis(alg.n(), opt, alg.system()->group.order());
    const int D = c.test_degree < 0 ? 4 : c.test_degree;
    std::optional<std::size_t> rank;
    if (with_rank) rank = independence_rank(basis, alg, D, c.seed);
    Output out(c.out);
    if (as_json) {
        nlohmann::ordered_json doc;
        doc["system"] = alg.system()->roots.label;
        doc["max_degree"] = opt.max_degree;
        nlohmann::ordered_json items = nlohmann::ordered_json::array();
        for (const auto& m : basis) {
            Element single;
            single.add(m.word(alg.n()), Poly(1));
            items.push_back(alg.to_string(single));
        }
        doc["basis"] = items;
        doc["size"] = basis.size();
        doc["rank"] = rank ? nlohmann::ordered_json(*rank) : nlohmann::ordered_json(nullptr);
        doc["D"] = D;
        doc["seed"] = c.seed;
        out.stream() << doc.dump(2) << "\n";
    } else {
        for (const auto& m : basis) {
            Element single;
            single.add(m.word(alg.n()), Poly(1));
            out.stream() << alg.to_string(single) << "\n";
        }
        out.stream() << basis.size() << " monomials";
        if (rank) out.stream() << ", independence rank " << *rank;
        out.stream() << "\n";
    }
    out.flush();
    return !rank || *rank == basis.size() ? 0 : 1;
}

int cmd_phi(const RunConfig& c, const std::string& a_text) {
    const bool as_json = json(c);
    const Algebra alg(system_of(c), gamma_of(c));
    const Report r = phi_check(alg, parse_rational(a_text));
    SuiteReport suite;
    suite.reports.push_back(r);
    (r.pass ? suite.passed : suite.failed) = 1;
    Output out(c.out);
    if (as_json)
        out.stream() << suite_json(suite, c.timings);
    else
        out.stream() << r.identity << " " << r.system << " " << (r.pass ? "pass" : "FAIL") << (r.residual ? "  " + *r.residual : "") << "\n";
    out.flush();
    return r.pass ? 0 : 1;
}

int cmd_superint(const RunConfig& c) {
    const bool as_json = json(c);
    const auto cert = superint::certify(system_of(c), gamma_of(c), c.max_degree < 0 ? 4 : c.max_degree, c.test_degree < 0 ? 6 : c.test_degree,
                                        c.seed, c.jobs);
    Output out(c.out);
    if (as_json) {
        out.stream() << certificate_json(cert);
    } else {
        auto& s = out.stream();
        s << cert.system << ": jacobian rank " << cert.rank << " of " << cert.target << "\n";
        for (const auto& k : cert.checks)
            s << "  " << (k.pass() ? "pass " : "FAIL ") << k.generator << "  [H " << k.commutes_with_H << ", invariant " << k.preserves_invariants
              << ", Hloc " << k.commutes_with_Hloc << "; " << k.couplings << "]\n";
    }
    out.flush();
    return cert.pass() ? 0 : 1;
}

int exit_code(ErrorKind k) {
    switch (k) {
    case ErrorKind::StepBudgetExceeded:
    case ErrorKind::CapExceeded:
        return 3;
    default:
        return 2;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Dunkl-Coulomb operator algebra"};
    app.require_subcommand(1);
    RunConfig c;
    auto common = [&](CLI::App* sub) {
        sub->add_option("--system", c.system, "root system, e.g. A2, B3, A1xA1, G2@4")->capture_default_str();
        sub->add_option("--gamma", c.gamma, "symbolic or a rational value")->capture_default_str();
        sub->add_option("--g", c.couplings, "symbolic, one rational, or one per orbit (comma separated)")->capture_default_str();
        sub->add_option("--seed", c.seed)->capture_default_str();
        sub->add_option("--format", c.format, "json or text")->capture_default_str();
        sub->add_option("--out", c.out, "write the report here instead of stdout");
        sub->add_option("--jobs", c.jobs)->capture_default_str()->check(CLI::PositiveNumber);
        sub->add_option("--cap", c.cap, "largest group order to enumerate")->capture_default_str();
        sub->add_flag("--timings", c.timings, "include millis in reports");
    };
    auto* verify = app.add_subcommand("verify", "check the identity catalog");
    common(verify);
    verify->add_option("--identities", c.identities, "all, or names/numbers separated by commas")->capture_default_str();

    std::string expr;
    auto* rewrite = app.add_subcommand("rewrite", "normal form of an expression");
    common(rewrite);
    rewrite->add_option("expression", expr)->required();
    rewrite->add_option("--budget", c.budget, "rewrite step budget")->capture_default_str();

    bool l_only = false, identity_only = false, with_rank = false;
    auto* basis = app.add_subcommand("basis", "enumerate normal monomials");
    common(basis);
    basis->add_option("--max-degree", c.max_degree, "default 2");
    basis->add_option("--test-degree", c.test_degree, "D for the rank, default 4");
    basis->add_flag("--l-only", l_only, "only L letters");
    basis->add_flag("--identity-only", identity_only, "only w = 1");
    basis->add_flag("--rank", with_rank, "compute the independence rank");

    std::string a_text = "-1";
    auto* phi = app.add_subcommand("phi", "central quotient isomorphism check");
    common(phi);
    phi->add_option("--a", a_text, "central value of H")->capture_default_str();

    auto* super = app.add_subcommand("superint", "superintegrability certificate");
    common(super);
    super->add_option("--max-degree", c.max_degree, "generator degree bound, default 4");
    super->add_option("--test-degree", c.test_degree, "test polynomial degree D, default 6");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    try {
        if (*verify) return cmd_verify(c);
        if (*rewrite) return cmd_rewrite(c, expr);
        if (*basis) return cmd_basis(c, l_only, identity_only, with_rank);
        if (*phi) return cmd_phi(c, a_text);
        if (*super) return cmd_superint(c);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
