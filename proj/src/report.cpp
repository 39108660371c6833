#include "vstab/report.hpp"

#include "vstab/invariants.hpp"

namespace vstab {

Json to_json(const VertexSet& s)
{
    Json a = Json::array();
    s.for_each([&](int v) { a.push_back(v); });
    return a;
}

namespace {

Json optional_value(const std::optional<int>& v, bool final_value)
{
    if (v)
        return *v;
    return final_value ? Json("nonexistent") : Json(nullptr);
}

Json optional_set(const std::optional<VertexSet>& s)
{
    return s ? to_json(*s) : Json(nullptr);
}

std::string comparator_name(Comparator c)
{
    switch (c) {
    case Comparator::equal:
        return "equal";
    case Comparator::at_least:
        return "at_least";
    case Comparator::one_of:
        return "one_of";
    case Comparator::nonexistent:
        return "nonexistent";
    }
    return "unknown";
}

} // namespace

Json to_json(const StabilityReport& r)
{
    Json j;
    j["parameter"] = std::string(to_string(r.parameter));
    j["parameter_value"] = r.parameter_value;
    j["status"] = r.exhausted ? "complete" : "inconclusive";
    j["vs"] = optional_value(r.value, r.exhausted);
    j["vs_witness"] = optional_set(r.witness);
    j["ivs"] = optional_value(r.independent_value, r.exhausted);
    j["ivs_witness"] = optional_set(r.independent_witness);
    return j;
}

Json to_json(const ConstructionMeta& meta)
{
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["family"] = to_string(meta.family);
    Json params = Json::object();
    for (const auto& [k, v] : meta.params)
        params[k] = v;
    j["params"] = params;
    Json expected = Json::array();
    for (const auto& e : meta.expected) {
        Json x;
        x["name"] = e.name;
        x["comparator"] = comparator_name(e.cmp);
        x["values"] = e.values;
        expected.push_back(x);
    }
    j["expected"] = expected;
    return j;
}

Json to_json(const VerificationResult& r)
{
    Json j;
    j["claim_id"] = r.claim_id;
    j["status"] = to_string(r.status);
    j["computed"] = r.computed;
    j["expected"] = r.expected;
    j["runtime_ms"] = r.runtime_ms;
    return j;
}

Json to_json(const CriticalityReport& r)
{
    Json j;
    j["chi"] = r.chi;
    j["delta"] = r.delta;
    j["k_delta"] = r.k_delta;
    j["max_order"] = r.max_order;
    j["bound"] = r.bound;
    Json subs = Json::array();
    for (const auto& s : r.critical_subgraphs)
        subs.push_back(to_json(s));
    j["critical_subgraphs"] = subs;
    Json comps = Json::array();
    for (std::size_t i = 0; i < r.union_components.size(); ++i) {
        Json c;
        c["vertices"] = to_json(r.union_components[i]);
        c["size"] = r.union_components[i].count();
        c["below_bound"] = static_cast<bool>(r.bound_satisfied[i]);
        comps.push_back(c);
    }
    j["union_components"] = comps;
    return j;
}

Json to_json(const PipelineResult& r)
{
    Json j;
    Json trace = Json::array();
    for (const auto& s : r.trace)
        trace.push_back({{"step", s.step}, {"ok", s.ok}, {"detail", s.detail}});
    j["trace"] = trace;
    if (!r.certificate) {
        j["certificate"] = nullptr;
        return j;
    }
    const auto& c = *r.certificate;
    Json cert;
    cert["r"] = c.r;
    Json comps = Json::array();
    for (const auto& s : c.components)
        comps.push_back(to_json(s));
    cert["components"] = comps;
    cert["coloring"] = c.coloring.colors;
    Json singles = Json::array();
    for (const auto& s : c.singleton_colored)
        singles.push_back(to_json(s));
    cert["singleton_colored"] = singles;
    cert["transversal"] = to_json(c.transversal);
    cert["chi_before"] = c.chi_before;
    cert["chi_after"] = c.chi_after;
    cert["vs_chi"] = c.r;
    cert["ivs_chi"] = c.r;
    j["certificate"] = cert;
    return j;
}

Json to_json(const CertificateCheck& c)
{
    Json j;
    j["ok"] = c.ok;
    j["failures"] = c.failures;
    j["vs_chi_lower"] = c.vs_lower;
    j["vs_chi_upper"] = c.vs_upper;
    j["vs_omega"] = c.vs_lower;
    j["ivs_omega_greater_than"] = c.ivs_omega_above;
    return j;
}

InvariantsOutcome invariants_report(const Graph& g, const std::vector<Parameter>& stability_params,
                                    const StabilityOptions& opts)
{
    InvariantsOutcome out;
    Json& j = out.report;
    j["schema_version"] = kSchemaVersion;
    j["status"] = "complete";
    j["n"] = g.order();
    j["m"] = g.size();
    j["delta"] = g.max_degree();
    bool complete = true;
    try {
        Budget budget(opts.node_budget);
        const auto chi = chromatic_number(g, budget);
        j["chi"] = chi.chi;
        j["coloring"] = chi.coloring.colors;
    } catch (const BudgetExceeded&) {
        j["chi"] = nullptr;
        j["coloring"] = nullptr;
        complete = false;
    }
    try {
        Budget budget(opts.node_budget);
        const auto omega = clique_number(g, budget);
        j["omega"] = omega.omega;
        j["clique"] = to_json(omega.witness);
    } catch (const BudgetExceeded&) {
        j["omega"] = nullptr;
        j["clique"] = nullptr;
        complete = false;
    }
    if (!stability_params.empty()) {
        Json st = Json::object();
        for (Parameter p : stability_params) {
            const bool defined = g.order() > 0;
            if (!defined) {
                st[std::string(to_string(p))] = nullptr;
                continue;
            }
            const auto rep = stability(g, p, opts);
            complete = complete && rep.exhausted;
            st[std::string(to_string(p))] = to_json(rep);
        }
        j["stability"] = st;
    }
    if (!complete) {
        j["status"] = "inconclusive";
        out.exit_code = 3;
    }
    return out;
}

Json verification_report(std::string_view suite, const std::vector<VerificationResult>& results)
{
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["suite"] = std::string(suite);
    int pass = 0;
    int fail = 0;
    int inconclusive = 0;
    Json rows = Json::array();
    for (const auto& r : results) {
        rows.push_back(to_json(r));
        pass += r.status == ClaimStatus::pass;
        fail += r.status == ClaimStatus::fail;
        inconclusive += r.status == ClaimStatus::inconclusive;
    }
    j["summary"] = {{"pass", pass}, {"fail", fail}, {"inconclusive", inconclusive}};
    j["results"] = rows;
    j["exit_code"] = verification_exit_code(results);
    return j;
}

} // namespace vstab
