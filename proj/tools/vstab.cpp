// vstab: command-line front end for the vertex-stability library.
//
// Exit codes: 0 all pass, 1 claim failure, 2 usage or parse error, 3 inconclusive.

#include "vstab/config.hpp"
#include "vstab/constructions.hpp"
#include "vstab/critical.hpp"
#include "vstab/dimacs.hpp"
#include "vstab/invariants.hpp"
#include "vstab/report.hpp"
#include "vstab/sat.hpp"
#include "vstab/verify.hpp"

#include <CLI11.hpp>
#include <omp.h>

#include <iomanip>
#include <iostream>
#include <sstream>

using namespace vstab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void print_json(const Json& j)
{
    std::cout << j.dump(2) << '\n';
}

std::vector<Parameter> parse_parameters(const std::string& list)
{
    std::vector<Parameter> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "chi")
            out.push_back(Parameter::chi);
        else if (item == "omega")
            out.push_back(Parameter::omega);
        else
            throw UsageError("unknown stability parameter '" + item + "' (use chi, omega)");
    }
    return out;
}

Graph load_graph(const std::string& path)
{
    return read_dimacs_graph(read_text_file(path)).graph;
}

// --- gen ---

struct GenArgs {
    std::string family;
    std::optional<int> chi, copies, delta, k;
    std::string out, dot, meta;
    bool json = false;
};

int run_gen(const GenArgs& a)
{
    auto need = [&](const std::optional<int>& v, const char* flag) {
        if (!v)
            throw UsageError("family " + a.family + " needs " + flag);
        return *v;
    };
    Construction c;
    if (a.family == "prop31")
        c = construct_prop31(need(a.chi, "--chi"), a.copies);
    else if (a.family == "constr1")
        c = construct_constr1(need(a.delta, "--delta"));
    else if (a.family == "c5blowup")
        c = construct_c5blowup(need(a.k, "--k"));
    else
        throw UsageError("unknown family '" + a.family + "' (prop31, constr1, c5blowup)");

    const auto text = write_dimacs_graph(c.graph);
    if (a.out.empty())
        std::cout << text;
    else
        write_text_file(a.out, text);
    if (!a.dot.empty())
        write_text_file(a.dot, write_dot(c.graph, a.family));
    const auto meta = to_json(c.meta);
    std::string meta_path = a.meta;
    if (meta_path.empty() && !a.out.empty())
        meta_path = a.out + ".meta.json";
    if (!meta_path.empty())
        write_text_file(meta_path, meta.dump(2) + "\n");
    if (a.json) {
        Json j = meta;
        j["n"] = c.graph.order();
        j["m"] = c.graph.size();
        print_json(j);
    } else if (!a.out.empty()) {
        std::cerr << "wrote " << a.out << " (" << c.graph.order() << " vertices, " << c.graph.size()
                  << " edges)\n";
    }
    return kExitOk;
}

// --- sat ---

struct SatArgs {
    int m = 0;
    std::string cnf, graph_kind = "plain", out, file;
    bool json = false;
};

int run_sat_gen(const SatArgs& a)
{
    const auto inst = gen_unsat_family(a.m);
    if (!a.cnf.empty())
        write_text_file(a.cnf, write_dimacs_cnf(inst));
    if (!a.out.empty()) {
        const auto g = a.graph_kind == "augmented" ? augmented_independence_graph(inst)
                                                   : independence_graph(inst);
        write_text_file(a.out, write_dimacs_graph(g.graph));
    }
    if (a.json) {
        Json j;
        j["schema_version"] = kSchemaVersion;
        j["m"] = inst.meta->m;
        j["r"] = inst.meta->r;
        j["split_rule"] = inst.meta->split_rule;
        j["variables"] = inst.variable_count;
        j["clauses"] = inst.clauses.size();
        j["formula"] = to_formula(inst);
        print_json(j);
    } else if (a.cnf.empty() && a.out.empty()) {
        std::cout << write_dimacs_cnf(inst);
    }
    return kExitOk;
}

int run_sat_check(const SatArgs& a, Execution exec)
{
    const auto inst = read_dimacs_cnf(read_text_file(a.file));
    if (inst.variable_count > kMaxBruteForceVariables) {
        std::cerr << "error: brute force is limited to " << kMaxBruteForceVariables << " variables\n";
        return kExitInconclusive;
    }
    const auto assignment = is_satisfiable(inst, exec);
    int max_size = 0;
    int min_size = inst.clauses.empty() ? 0 : inst.clauses.front().size();
    for (const auto& c : inst.clauses) {
        max_size = std::max(max_size, c.size());
        min_size = std::min(min_size, c.size());
    }
    if (a.json) {
        Json j;
        j["schema_version"] = kSchemaVersion;
        j["variables"] = inst.variable_count;
        j["clauses"] = inst.clauses.size();
        j["clause_size_min"] = min_size;
        j["clause_size_max"] = max_size;
        j["satisfiable"] = assignment.has_value();
        if (assignment) {
            std::vector<int> bits(assignment->begin(), assignment->end());
            j["assignment"] = bits;
        } else {
            j["assignment"] = nullptr;
        }
        print_json(j);
    } else {
        std::cout << inst.variable_count << " variables, " << inst.clauses.size() << " clauses: "
                  << (assignment ? "satisfiable" : "unsatisfiable") << '\n';
        if (assignment) {
            for (std::size_t v = 0; v < assignment->size(); ++v)
                std::cout << ((*assignment)[v] ? "" : "-") << v + 1 << ' ';
            std::cout << "0\n";
        }
    }
    return kExitOk;
}

int run_sat_certify(const SatArgs& a)
{
    const auto inst = gen_unsat_family(a.m);
    const auto cert = stability_certificates(inst, a.m);
    const auto check = validate_certificate(inst, cert);
    if (a.json) {
        Json j;
        j["schema_version"] = kSchemaVersion;
        j["m"] = a.m;
        j["clauses"] = cert.clause_count;
        j["graph_order"] = cert.graph.order();
        j["check"] = to_json(check);
        Json cliques = Json::array();
        for (const auto& q : cert.disjoint_cliques)
            cliques.push_back(to_json(q));
        j["disjoint_cliques"] = cliques;
        j["removal"] = to_json(cert.removal);
        print_json(j);
    } else {
        std::cout << "m=" << a.m << ": " << (check.ok ? "valid" : "INVALID") << ", vs_chi = vs_omega = "
                  << check.vs_lower << ", ivs_omega > " << check.ivs_omega_above << '\n';
        for (const auto& f : check.failures)
            std::cout << "  " << f << '\n';
    }
    return check.ok ? kExitOk : kExitFail;
}

// --- invariants ---

int run_invariants(const std::string& file, const std::string& stab, bool json,
                   const StabilityOptions& opts)
{
    const auto g = load_graph(file);
    const auto params = stab.empty() ? std::vector<Parameter>{} : parse_parameters(stab);
    const auto outcome = invariants_report(g, params, opts);
    if (json) {
        print_json(outcome.report);
    } else {
        const auto& r = outcome.report;
        std::cout << "n=" << r["n"] << " m=" << r["m"] << " delta=" << r["delta"] << " chi=" << r["chi"]
                  << " omega=" << r["omega"] << '\n';
        if (r.contains("stability"))
            for (const auto& [name, rep] : r["stability"].items())
                if (!rep.is_null())
                    std::cout << name << ": vs=" << rep["vs"] << " ivs=" << rep["ivs"] << " ("
                              << rep["status"].get<std::string>() << ")\n";
    }
    return outcome.exit_code;
}

// --- critical ---

int run_critical(const std::string& file, bool enumerate, std::optional<int> max_order, bool pipeline,
                 bool json, Execution exec)
{
    const auto g = load_graph(file);
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["n"] = g.order();
    const int chi = chromatic_number(g).chi;
    j["chi"] = chi;
    if (chi >= 2)
        j["critical_subgraph"] = to_json(find_critical_subgraph(g));
    else
        j["critical_subgraph"] = nullptr;
    if (enumerate)
        j["union_report"] = to_json(critical_union_report(g, max_order, exec));
    if (pipeline)
        j["pipeline"] = to_json(vs_ivs_pipeline(g, max_order, exec));
    if (json) {
        print_json(j);
        return kExitOk;
    }
    std::cout << "chi=" << chi << " critical subgraph: " << j["critical_subgraph"].dump() << '\n';
    if (enumerate) {
        const auto& r = j["union_report"];
        std::cout << r["critical_subgraphs"].size() << " critical subgraphs of order <= "
                  << r["max_order"] << "; bound delta+1+k_delta = " << r["bound"] << '\n';
        for (const auto& c : r["union_components"])
            std::cout << "  component " << c["vertices"].dump() << " size " << c["size"]
                      << (c["below_bound"].get<bool>() ? " (below bound)" : " (bound exceeded)") << '\n';
    }
    if (pipeline) {
        for (const auto& s : j["pipeline"]["trace"])
            std::cout << "  " << s["step"].get<std::string>() << ": " << (s["ok"].get<bool>() ? "ok" : "failed")
                      << " - " << s["detail"].get<std::string>() << '\n';
        const auto& cert = j["pipeline"]["certificate"];
        std::cout << (cert.is_null() ? "no certificate" : "certificate: vs_chi = ivs_chi = " + cert["r"].dump())
                  << '\n';
    }
    return kExitOk;
}

// --- verify ---

int run_verify(const std::string& suite, const VerifyOptions& vo, bool json)
{
    const auto results = run_suite(suite, vo);
    const int code = verification_exit_code(results);
    if (json) {
        print_json(verification_report(suite, results));
        return code;
    }
    std::size_t width = 8;
    for (const auto& r : results)
        width = std::max(width, r.claim_id.size());
    for (const auto& r : results) {
        std::cout << std::left << std::setw(static_cast<int>(width) + 2) << r.claim_id << std::setw(14)
                  << to_string(r.status) << r.computed;
        if (r.status != ClaimStatus::pass)
            std::cout << "  (expected " << r.expected << ")";
        std::cout << "  [" << r.runtime_ms << " ms]\n";
    }
    return code;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact vertex-stability invariants, extremal constructions and claim verification"};
    app.require_subcommand(1);

    std::string config_path;
    Config flags;
    std::uint64_t budget = 0;
    int threads = 0;
    bool serial = false;
    app.add_option("--config", config_path, "key=value settings file")->check(CLI::ExistingFile);
    app.add_option("--budget", budget, "search node budget per exact computation");
    app.add_option("--threads", threads, "OpenMP threads");
    app.add_flag("--serial", serial, "use the serial reference kernels");

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "generate a construction as DIMACS");
    gen_cmd->add_option("family", gen.family, "prop31, constr1 or c5blowup")->required();
    gen_cmd->add_option("--chi", gen.chi, "prop31: chromatic number");
    gen_cmd->add_option("--copies", gen.copies, "prop31: gadget copies (selects the variant)");
    gen_cmd->add_option("--delta", gen.delta, "constr1: maximum degree");
    gen_cmd->add_option("--k", gen.k, "c5blowup: clique size");
    gen_cmd->add_option("--out", gen.out, "DIMACS output (default stdout)");
    gen_cmd->add_option("--dot", gen.dot, "Graphviz output");
    gen_cmd->add_option("--meta", gen.meta, "JSON sidecar (default <out>.meta.json)");
    gen_cmd->add_flag("--json", gen.json, "print the sidecar to stdout");

    SatArgs sat;
    auto* sat_cmd = app.add_subcommand("sat", "unsatisfiable family and gadgets");
    sat_cmd->require_subcommand(1);
    auto* sat_gen = sat_cmd->add_subcommand("gen", "generate the unsatisfiable family");
    sat_gen->add_option("--m", sat.m, "literal multiplicity m >= 2")->required();
    sat_gen->add_option("--cnf", sat.cnf, "DIMACS CNF output");
    sat_gen->add_option("--graph", sat.graph_kind, "plain or augmented")
        ->check(CLI::IsMember({"plain", "augmented"}));
    sat_gen->add_option("--out", sat.out, "DIMACS graph output");
    sat_gen->add_flag("--json", sat.json);
    auto* sat_check = sat_cmd->add_subcommand("check", "brute-force satisfiability of a CNF file");
    sat_check->add_option("file", sat.file)->required();
    sat_check->add_flag("--json", sat.json);
    auto* sat_certify = sat_cmd->add_subcommand("certify", "stability certificates for the family");
    sat_certify->add_option("--m", sat.m)->required();
    sat_certify->add_flag("--json", sat.json);

    std::string inv_file;
    std::string inv_stability;
    bool inv_json = false;
    auto* inv_cmd = app.add_subcommand("invariants", "n, m, delta, chi, omega and stability numbers");
    inv_cmd->add_option("file", inv_file, "DIMACS graph")->required();
    inv_cmd->add_option("--stability", inv_stability, "comma list of chi, omega");
    inv_cmd->add_flag("--json", inv_json);

    std::string crit_file;
    bool crit_enum = false;
    bool crit_pipeline = false;
    bool crit_json = false;
    std::optional<int> crit_max_order;
    auto* crit_cmd = app.add_subcommand("critical", "critical subgraphs and the transversal recipe");
    crit_cmd->add_option("file", crit_file, "DIMACS graph")->required();
    crit_cmd->add_flag("--enumerate", crit_enum, "enumerate critical subgraphs and their union");
    crit_cmd->add_option("--max-order", crit_max_order, "order cap (default min(n, delta+1))");
    crit_cmd->add_flag("--pipeline", crit_pipeline, "run the singleton-colour transversal recipe");
    crit_cmd->add_flag("--json", crit_json);

    std::string suite;
    std::string chi_range, delta_range, m_range, k_range;
    std::optional<std::uint64_t> seed;
    bool verify_json = false;
    auto* verify_cmd = app.add_subcommand("verify", "recompute the claims of a suite");
    verify_cmd->add_option("suite", suite)->required()->check(CLI::IsMember(suite_names()));
    verify_cmd->add_option("--chi-range", chi_range, "e.g. 4..8");
    verify_cmd->add_option("--delta-range", delta_range, "e.g. 3..10");
    verify_cmd->add_option("--m-range", m_range, "e.g. 2..3");
    verify_cmd->add_option("--k-range", k_range, "e.g. 1..3");
    verify_cmd->add_option("--seed", seed, "seed for random corpora");
    verify_cmd->add_flag("--json", verify_json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        Config cfg;
        if (!config_path.empty())
            cfg = parse_config(read_text_file(config_path));
        if (budget > 0)
            flags.budget = budget;
        if (threads > 0)
            flags.threads = threads;
        if (serial)
            flags.execution = Execution::serial;
        if (seed)
            flags.seed = *seed;
        cfg = merge(cfg, flags);
        if (cfg.threads)
            omp_set_num_threads(*cfg.threads);
        const auto opts = stability_options(cfg);

        if (gen_cmd->parsed())
            return run_gen(gen);
        if (sat_cmd->parsed()) {
            if (sat_gen->parsed())
                return run_sat_gen(sat);
            if (sat_check->parsed())
                return run_sat_check(sat, opts.execution);
            return run_sat_certify(sat);
        }
        if (inv_cmd->parsed())
            return run_invariants(inv_file, inv_stability, inv_json, opts);
        if (crit_cmd->parsed())
            return run_critical(crit_file, crit_enum, crit_max_order, crit_pipeline, crit_json,
                                opts.execution);
        if (verify_cmd->parsed()) {
            VerifyOptions vo;
            vo.stability = opts;
            if (cfg.seed)
                vo.seed = *cfg.seed;
            if (!chi_range.empty())
                vo.chi_range = parse_range(chi_range);
            if (!delta_range.empty())
                vo.delta_range = parse_range(delta_range);
            if (!m_range.empty())
                vo.m_range = parse_range(m_range);
            if (!k_range.empty())
                vo.k_range = parse_range(k_range);
            return run_verify(suite, vo, verify_json);
        }
    } catch (const BudgetExceeded& e) {
        std::cerr << "inconclusive: " << e.what() << '\n';
        return kExitInconclusive;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitFail;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
