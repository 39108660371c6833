#include "vstab/verify.hpp"

#include "vstab/critical.hpp"
#include "vstab/invariants.hpp"
#include "vstab/naive.hpp"
#include "vstab/random.hpp"
#include "vstab/sat.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>

namespace vstab {

Range parse_range(std::string_view text)
{
    auto number = [&](std::string_view s) {
        int v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
            throw std::invalid_argument("bad range '" + std::string(text) + "'");
        return v;
    };
    const auto dots = text.find("..");
    Range r;
    if (dots == std::string_view::npos) {
        r.lo = r.hi = number(text);
    } else {
        r.lo = number(text.substr(0, dots));
        r.hi = number(text.substr(dots + 2));
    }
    if (r.lo > r.hi)
        throw std::invalid_argument("empty range '" + std::string(text) + "'");
    return r;
}

int verification_exit_code(const std::vector<VerificationResult>& results)
{
    bool inconclusive = false;
    for (const auto& r : results) {
        if (r.status == ClaimStatus::fail)
            return 1;
        inconclusive = inconclusive || r.status == ClaimStatus::inconclusive;
    }
    return inconclusive ? 3 : 0;
}

namespace {

using Clock = std::chrono::steady_clock;

long long elapsed_ms(Clock::time_point t0)
{
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

class Results {
public:
    void add(std::string id, bool ok, std::string computed, std::string expected, long long ms)
    {
        out_.push_back({std::move(id), ok ? ClaimStatus::pass : ClaimStatus::fail,
                        std::move(computed), std::move(expected), ms});
    }
    void inconclusive(std::string id, std::string expected, long long ms)
    {
        out_.push_back({std::move(id), ClaimStatus::inconclusive, "", std::move(expected), ms});
    }
    void add_checks(const std::string& prefix, const std::vector<ClaimCheck>& checks, long long ms,
                    const std::function<std::string(const std::string&)>& rename)
    {
        for (const auto& c : checks)
            out_.push_back({prefix + rename(c.name), c.status, c.computed, c.expected, ms});
    }
    std::vector<VerificationResult> take() { return std::move(out_); }

private:
    std::vector<VerificationResult> out_;
};

std::string same_name(const std::string& s)
{
    return s;
}

Range range_or(const std::optional<Range>& r, Range fallback, int min_lo, const char* what)
{
    const Range out = r.value_or(fallback);
    if (out.lo < min_lo)
        throw std::invalid_argument(std::string(what) + " must be at least " + std::to_string(min_lo));
    return out;
}

std::string opt_text(const std::optional<int>& v)
{
    return v ? std::to_string(*v) : "nonexistent";
}

// --- construction families ---

std::string chi_only_name(const std::string& name)
{
    static const std::map<std::string, std::string> names{
        {"vs_chi", "vs"}, {"ivs_chi", "ivs"}, {"ivs_chi_lower", "ivs_lower"}};
    const auto it = names.find(name);
    return it == names.end() ? name : it->second;
}

void suite_prop31(const VerifyOptions& opts, Results& res)
{
    const Range r = range_or(opts.chi_range, {4, 8}, 4, "chi");
    for (int chi = r.lo; chi <= r.hi; ++chi) {
        const auto t0 = Clock::now();
        const auto c = construct_prop31(chi);
        const auto checks = expected_invariants_check(c.graph, c.meta, opts.stability);
        res.add_checks("prop31.chi" + std::to_string(chi) + ".", checks, elapsed_ms(t0), chi_only_name);
    }
}

void suite_prop31_variant(const VerifyOptions& opts, Results& res)
{
    std::vector<int> chis{9, 16};
    if (opts.chi_range) {
        const Range r = range_or(opts.chi_range, {}, 4, "chi");
        chis.clear();
        for (int chi = r.lo; chi <= r.hi; ++chi)
            if (ceil_div(chi, ceil_sqrt(chi)) - 1 >= 2)
                chis.push_back(chi);
    }
    for (int chi : chis) {
        const auto t0 = Clock::now();
        const int copies = ceil_div(chi, ceil_sqrt(chi)) - 1;
        const auto c = construct_prop31(chi, copies);
        const auto checks = expected_invariants_check(c.graph, c.meta, opts.stability);
        res.add_checks("prop31-variant.chi" + std::to_string(chi) + ".", checks, elapsed_ms(t0),
                       chi_only_name);
    }
}

void suite_constr1(const VerifyOptions& opts, Results& res)
{
    const Range r = range_or(opts.delta_range, {3, 6}, 3, "delta");
    for (int delta = r.lo; delta <= r.hi; ++delta) {
        const auto t0 = Clock::now();
        const auto c = construct_constr1(delta);
        const auto checks = expected_invariants_check(c.graph, c.meta, opts.stability);
        res.add_checks("constr1.delta" + std::to_string(delta) + ".", checks, elapsed_ms(t0),
                       same_name);
    }
}

void suite_c5blowup(const VerifyOptions& opts, Results& res)
{
    const Range r = range_or(opts.k_range, {1, 3}, 1, "k");
    for (int k = r.lo; k <= r.hi; ++k) {
        const auto t0 = Clock::now();
        const auto c = construct_c5blowup(k);
        const auto checks = expected_invariants_check(c.graph, c.meta, opts.stability);
        const long long ms = elapsed_ms(t0);
        const std::string prefix = "c5blowup.k" + std::to_string(k) + ".";
        res.add_checks(prefix, checks, ms, same_name);

        const ClaimCheck* vs = nullptr;
        const ClaimCheck* ivs = nullptr;
        for (const auto& ch : checks) {
            if (ch.name == "vs_chi")
                vs = &ch;
            if (ch.name == "ivs_chi")
                ivs = &ch;
        }
        if (!vs || !ivs || vs->computed.empty() || ivs->computed.empty())
            res.inconclusive(prefix + "vs_chi_equals_ivs_chi", "vs_chi = ivs_chi", ms);
        else
            res.add(prefix + "vs_chi_equals_ivs_chi", vs->computed == ivs->computed,
                    vs->computed + " vs " + ivs->computed, "vs_chi = ivs_chi", ms);
    }
}

// --- satisfiability gadgets ---

void suite_sat(const VerifyOptions& opts, Results& res)
{
    const Range r = range_or(opts.m_range, {2, 4}, 2, "m");
    if (r.hi > 8)
        throw std::invalid_argument("m must be at most 8 for brute-force satisfiability");
    for (int m = r.lo; m <= r.hi; ++m) {
        const std::string p = "sat.m" + std::to_string(m) + ".";
        auto t0 = Clock::now();
        const auto levels = gen_unsat_levels(m);
        const auto& inst = levels.back();
        const int rr = inst.meta->r;

        const auto plit = validate_plit_qsat(inst, m, 2 * m - 1);
        res.add(p + "plit", plit.ok, plit.ok ? "valid" : plit.violation,
                std::to_string(m) + "-LIT " + std::to_string(2 * m - 1) + "-SAT", elapsed_ms(t0));

        t0 = Clock::now();
        {
            const int vars = (1 << (rr + 1)) - 1;
            const int clauses = 1 << (rr + 1);
            std::ostringstream got;
            got << inst.variable_count << " variables, " << inst.clauses.size() << " clauses";
            res.add(p + "shape", inst.variable_count == vars && static_cast<int>(inst.clauses.size()) == clauses,
                    got.str(),
                    std::to_string(vars) + " variables, " + std::to_string(clauses) + " clauses",
                    elapsed_ms(t0));
        }

        t0 = Clock::now();
        {
            bool ok = true;
            std::string detail = "all levels valid and unsatisfiable";
            for (const auto& lv : levels) {
                const int q = 2 * m - (1 << (rr - lv.meta->level));
                const auto chk = validate_plit_qsat(lv, m, q);
                if (!chk.ok || is_satisfiable(lv, opts.stability.execution)) {
                    ok = false;
                    detail = "level " + std::to_string(lv.meta->level) + ": " +
                             (chk.ok ? "satisfiable" : chk.violation);
                    break;
                }
            }
            res.add(p + "levels", ok, detail, "level i is unsatisfiable m-LIT (2m-2^(r-i))-SAT",
                    elapsed_ms(t0));
        }

        t0 = Clock::now();
        const bool sat = is_satisfiable(inst, opts.stability.execution).has_value();
        res.add(p + "unsat", !sat, sat ? "satisfiable" : "unsatisfiable", "unsatisfiable",
                elapsed_ms(t0));

        t0 = Clock::now();
        const auto plain = independence_graph(inst);
        try {
            Budget budget(opts.stability.node_budget);
            const int chi = chromatic_number(plain.graph, budget).chi;
            res.add(p + "chi", chi == 2 * m, std::to_string(chi), std::to_string(2 * m),
                    elapsed_ms(t0));
        } catch (const BudgetExceeded&) {
            res.inconclusive(p + "chi", std::to_string(2 * m), elapsed_ms(t0));
        }

        t0 = Clock::now();
        const auto aug = augmented_independence_graph(inst);
        res.add(p + "augmented_delta", aug.graph.max_degree() == 3 * m,
                std::to_string(aug.graph.max_degree()), std::to_string(3 * m), elapsed_ms(t0));

        const int nc = static_cast<int>(inst.clauses.size());
        t0 = Clock::now();
        try {
            const auto cert = stability_certificates(inst, m);
            const auto chk = validate_certificate(inst, cert);
            std::ostringstream got;
            got << "vs_chi = vs_omega = " << chk.vs_lower << ", ivs_omega > " << chk.ivs_omega_above;
            res.add(p + "certificate", chk.ok && chk.vs_lower == nc && chk.vs_upper == nc, got.str(),
                    "vs_chi = vs_omega = " + std::to_string(nc) + ", ivs_omega > " +
                        std::to_string(nc),
                    elapsed_ms(t0));
        } catch (const BudgetExceeded&) {
            res.inconclusive(p + "certificate", "valid", elapsed_ms(t0));
        } catch (const InternalError& e) {
            res.add(p + "certificate", false, e.what(), "valid", elapsed_ms(t0));
        }

        if (m != 2)
            continue;
        // Full subset search on the 20-vertex augmented graph.
        t0 = Clock::now();
        StabilityOptions chi_opts = opts.stability;
        chi_opts.compute_ivs = false;
        const auto chi_rep = stability(aug.graph, Parameter::chi, chi_opts);
        if (chi_rep.exhausted)
            res.add(p + "vs_chi", chi_rep.value == nc, opt_text(chi_rep.value), std::to_string(nc),
                    elapsed_ms(t0));
        else
            res.inconclusive(p + "vs_chi", std::to_string(nc), elapsed_ms(t0));

        t0 = Clock::now();
        const auto om = stability(aug.graph, Parameter::omega, opts.stability);
        const long long ms = elapsed_ms(t0);
        if (om.exhausted) {
            res.add(p + "vs_omega", om.value == nc, opt_text(om.value), std::to_string(nc), ms);
            res.add(p + "ivs_omega_lower", !om.independent_value || *om.independent_value > nc,
                    opt_text(om.independent_value), ">" + std::to_string(nc) + " or nonexistent", ms);
        } else {
            res.inconclusive(p + "vs_omega", std::to_string(nc), ms);
            res.inconclusive(p + "ivs_omega_lower", ">" + std::to_string(nc), ms);
        }
    }
}

// --- threshold arithmetic ---

long long k_by_search(long long delta)
{
    long long k = 0;
    while ((k + 2) * (k + 3) <= delta)
        ++k;
    return k;
}

// floor(sqrt(delta + 1/4) - 3/2), corrected for floating-point drift at perfect squares.
long long k_by_closed_form(long long delta)
{
    long long k = static_cast<long long>(std::floor(std::sqrt(static_cast<long double>(delta) + 0.25L) - 1.5L));
    // sqrt(delta + 1/4) - 3/2 >= k  <=>  4 delta + 1 >= (2k + 3)^2
    while (k > 0 && 4 * delta + 1 < (2 * k + 3) * (2 * k + 3))
        --k;
    while (4 * delta + 1 >= (2 * k + 5) * (2 * k + 5))
        ++k;
    return k;
}

bool window_by_definition(long long delta, long long k)
{
    return (k + 1) * (k + 2) <= delta && delta <= k * k + 4 * k + 1;
}

void suite_fbounds(const VerifyOptions& opts, Results& res)
{
    const Range r = range_or(opts.delta_range, {3, 10}, 3, "delta");
    for (int delta = r.lo; delta <= r.hi; ++delta) {
        const auto t0 = Clock::now();
        const auto fb = f_bounds(delta);
        long long lower = delta;
        if (delta > 10) {
            const long long k = k_by_search(delta);
            lower = delta + 1 - k + (window_by_definition(delta, k) ? 1 : 0);
        }
        std::ostringstream got;
        got << "lower=" << fb.lower << " upper=" << fb.upper;
        std::ostringstream want;
        want << "lower=" << lower << " upper=" << delta;
        res.add("fbounds.delta" + std::to_string(delta), fb.lower == lower && fb.upper == delta,
                got.str(), want.str(), elapsed_ms(t0));
    }
}

void suite_thm12(const VerifyOptions& opts, Results& res)
{
    const Range r = range_or(opts.delta_range, {3, 10}, 3, "delta");
    if (r.hi > 10)
        throw std::invalid_argument("witness graphs exist for delta in 3..10");
    for (int delta = r.lo; delta <= r.hi; ++delta) {
        const auto t0 = Clock::now();
        const auto c = delta <= 4 ? construct_constr1(delta) : construct_prop31(delta - 1);
        const std::string name = delta <= 4 ? "constr1(" + std::to_string(delta) + ")"
                                            : "prop31(" + std::to_string(delta - 1) + ")";
        const std::string id = "thm12.part1.delta" + std::to_string(delta);
        const std::string want = "delta=" + std::to_string(delta) + " chi=" +
                                 std::to_string(delta - 1) + " vs<ivs";
        try {
            Budget budget(opts.stability.node_budget);
            const int chi = chromatic_number(c.graph, budget).chi;
            const auto rep = stability(c.graph, Parameter::chi, opts.stability);
            if (!rep.exhausted) {
                res.inconclusive(id, want, elapsed_ms(t0));
                continue;
            }
            std::ostringstream got;
            got << name << ": delta=" << c.graph.max_degree() << " chi=" << chi
                << " vs=" << opt_text(rep.value) << " ivs=" << opt_text(rep.independent_value);
            const bool ok = c.graph.max_degree() == delta && chi == delta - 1 && rep.value &&
                            rep.independent_value && *rep.value < *rep.independent_value;
            res.add(id, ok, got.str(), want, elapsed_ms(t0));
        } catch (const BudgetExceeded&) {
            res.inconclusive(id, want, elapsed_ms(t0));
        }
    }

    constexpr long long kMaxDelta = 10'000;
    auto t0 = Clock::now();
    {
        long long bad = -1;
        for (long long d = 2; d <= kMaxDelta && bad < 0; ++d) {
            const long long k = k_delta(d);
            const bool defining = (k + 1) * (k + 2) <= d && d < (k + 2) * (k + 3);
            if (!defining || k != k_by_closed_form(d))
                bad = d;
        }
        res.add("thm12.kdelta", bad < 0, bad < 0 ? "consistent" : "mismatch at delta=" + std::to_string(bad),
                "(k+1)(k+2) <= delta < (k+2)(k+3) and closed form agree for delta in 2..10000",
                elapsed_ms(t0));
    }
    t0 = Clock::now();
    {
        long long bad = -1;
        for (long long d = 3; d <= kMaxDelta && bad < 0; ++d) {
            const auto fb = f_bounds(d);
            const long long k = k_by_search(d);
            bool ok = fb.k_delta == k && fb.in_window == window_by_definition(d, k) && fb.upper == d;
            if (d > 10)
                ok = ok && fb.lower == d + 1 - k + (fb.in_window ? 1 : 0);
            else
                ok = ok && fb.lower == d;
            if (!ok)
                bad = d;
        }
        res.add("thm12.window", bad < 0, bad < 0 ? "consistent" : "mismatch at delta=" + std::to_string(bad),
                "window and lower bound rule hold for delta in 3..10000", elapsed_ms(t0));
    }
    t0 = Clock::now();
    {
        // The lower-bound graphs must fit under the degree cap.
        long long bad = -1;
        for (long long d = 11; d <= kMaxDelta && bad < 0; ++d) {
            const long long k = k_by_search(d);
            std::vector<long long> chis{d - k};
            if (window_by_definition(d, k))
                chis.push_back(d - k + 1);
            for (long long chi : chis) {
                const int c = static_cast<int>(chi);
                const long long deg = chi + std::max(1, ceil_div(c, ceil_sqrt(c)) - 2);
                if (deg > d)
                    bad = d;
            }
        }
        res.add("thm12.part2.construction_degree", bad < 0,
                bad < 0 ? "all fit" : "degree exceeds delta at delta=" + std::to_string(bad),
                "construction degree <= delta for delta in 11..10000", elapsed_ms(t0));
    }
}

// --- random property suites ---

void suite_akbari(const VerifyOptions& opts, Results& res)
{
    const auto t0 = Clock::now();
    Rng rng(opts.seed);
    int agree = 0;
    int inconclusive = 0;
    std::string first_bad;
    for (int i = 0; i < kAkbariSamples; ++i) {
        Graph g;
        int chi = 0;
        do {
            g = random_small_graph(4, 9, rng);
            chi = chromatic_number(g).chi;
        } while (g.max_degree() < 3 || chi < g.max_degree());
        const auto rep = stability(g, Parameter::chi, opts.stability);
        if (!rep.exhausted) {
            ++inconclusive;
            continue;
        }
        if (rep.value == rep.independent_value)
            ++agree;
        else if (first_bad.empty())
            first_bad = "sample " + std::to_string(i);
    }
    std::ostringstream got;
    got << agree << "/" << kAkbariSamples << " agree";
    if (!first_bad.empty())
        got << ", first disagreement: " << first_bad;
    const std::string want = "vs_chi = ivs_chi on all " + std::to_string(kAkbariSamples) +
                             " graphs (n in 4..9) with chi >= delta >= 3";
    if (inconclusive && first_bad.empty())
        res.inconclusive("akbari.random", want, elapsed_ms(t0));
    else
        res.add("akbari.random", agree == kAkbariSamples, got.str(), want, elapsed_ms(t0));
}

void suite_king(const VerifyOptions& opts, Results& res)
{
    const auto t0 = Clock::now();
    Rng rng(opts.seed + 1);
    int agree = 0;
    int inconclusive = 0;
    std::string first_bad;
    for (int i = 0; i < kKingSamples; ++i) {
        Graph g;
        int omega = 0;
        do {
            g = random_small_graph(4, 10, rng);
            omega = clique_number(g).omega;
        } while (omega < 3 || 3 * omega <= 2 * (g.max_degree() + 1));
        const auto rep = stability(g, Parameter::omega, opts.stability);
        if (!rep.exhausted) {
            ++inconclusive;
            continue;
        }
        if (rep.independent_value && rep.independent_value == rep.value)
            ++agree;
        else if (first_bad.empty())
            first_bad = "sample " + std::to_string(i);
    }
    std::ostringstream got;
    got << agree << "/" << kKingSamples << " agree";
    if (!first_bad.empty())
        got << ", first disagreement: " << first_bad;
    const std::string want = "ivs_omega exists and equals vs_omega on all " +
                             std::to_string(kKingSamples) + " graphs (n in 4..10) with omega >= 3 and omega > 2(delta+1)/3";
    if (inconclusive && first_bad.empty())
        res.inconclusive("king.random", want, elapsed_ms(t0));
    else
        res.add("king.random", agree == kKingSamples, got.str(), want, elapsed_ms(t0));
}

void suite_tovey(const VerifyOptions& opts, Results& res)
{
    for (int m : {2, 3}) {
        const auto t0 = Clock::now();
        Rng rng(opts.seed + 10 + m);
        int ok = 0;
        std::string first_bad;
        for (int i = 0; i < kToveySamples; ++i) {
            const auto inst = random_plit_instance(m, 12, rng);
            try {
                const auto a = hall_satisfier(inst, m);
                if (satisfies(inst, a) && is_satisfiable(inst, opts.stability.execution))
                    ++ok;
                else if (first_bad.empty())
                    first_bad = "sample " + std::to_string(i) + ": assignment rejected";
            } catch (const InternalError& e) {
                if (first_bad.empty())
                    first_bad = "sample " + std::to_string(i) + ": " + e.what();
            }
        }
        std::ostringstream got;
        got << ok << "/" << kToveySamples << " satisfied";
        if (!first_bad.empty())
            got << ", " << first_bad;
        res.add("tovey.m" + std::to_string(m) + ".random", ok == kToveySamples, got.str(),
                "matching assignment satisfies all " + std::to_string(kToveySamples) + " " +
                    std::to_string(m) + "-LIT " + std::to_string(2 * m) + "-SAT instances",
                elapsed_ms(t0));
    }
}

bool same_report(const StabilityReport& rep, const NaiveStability& nv)
{
    return rep.exhausted && rep.value == nv.value && rep.witness == nv.witness &&
           rep.independent_value == nv.independent_value &&
           rep.independent_witness == nv.independent_witness;
}

void suite_oracle(const VerifyOptions& opts, Results& res)
{
    Rng rng(opts.seed + 2);
    std::vector<Graph> corpus;
    for (int i = 0; i < kOracleSamples; ++i)
        corpus.push_back(random_small_graph(1, 8, rng));

    auto t0 = Clock::now();
    int solvers = 0;
    std::string bad_solver;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const SubsetTable t(corpus[i]);
        if (chromatic_number(corpus[i]).chi == t.chi(t.full_mask()) &&
            clique_number(corpus[i]).omega == t.omega(t.full_mask()))
            ++solvers;
        else if (bad_solver.empty())
            bad_solver = ", first mismatch: sample " + std::to_string(i);
    }
    res.add("oracle.chi_omega", solvers == kOracleSamples,
            std::to_string(solvers) + "/" + std::to_string(kOracleSamples) + " match" + bad_solver,
            "exact chi and omega equal subset-table values", elapsed_ms(t0));

    for (Parameter p : {Parameter::chi, Parameter::omega}) {
        t0 = Clock::now();
        int match = 0;
        std::string bad;
        for (std::size_t i = 0; i < corpus.size(); ++i) {
            const auto rep = stability(corpus[i], p, opts.stability);
            if (same_report(rep, naive_stability(corpus[i], p)))
                ++match;
            else if (bad.empty())
                bad = ", first mismatch: sample " + std::to_string(i);
        }
        res.add("oracle.stability_" + std::string(to_string(p)), match == kOracleSamples,
                std::to_string(match) + "/" + std::to_string(kOracleSamples) + " match" + bad,
                "values and least witnesses equal the all-subsets scan", elapsed_ms(t0));
    }
}

void suite_critical(const VerifyOptions& opts, Results& res)
{
    Rng rng(opts.seed + 3);
    std::vector<Graph> corpus;
    while (static_cast<int>(corpus.size()) < kCriticalSamples) {
        auto g = random_small_graph(2, 12, rng);
        if (g.size() > 0)
            corpus.push_back(std::move(g));
    }

    auto mask_of = [](const VertexSet& s) {
        std::uint32_t m = 0;
        s.for_each([&](int v) { m |= std::uint32_t{1} << v; });
        return m;
    };
    auto critical_by_table = [&](const SubsetTable& t, const VertexSet& h, int chi) {
        const std::uint32_t m = mask_of(h);
        if (t.chi(m) != chi)
            return false;
        for (int v = h.first(); v >= 0; v = h.next(v))
            if (t.chi(m & ~(std::uint32_t{1} << v)) != chi - 1)
                return false;
        return true;
    };

    auto t0 = Clock::now();
    int graphs_ok = 0;
    int contained = 0;
    long long sets = 0;
    std::string bad;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const auto& g = corpus[i];
        const SubsetTable t(g);
        const int chi = t.chi(t.full_mask());
        const auto found = find_critical_subgraph(g);
        const auto all = enumerate_critical_subgraphs(g, g.order(), opts.stability.execution);
        bool ok = critical_by_table(t, found, chi);
        for (const auto& h : all)
            ok = ok && critical_by_table(t, h, chi);
        sets += static_cast<long long>(all.size()) + 1;
        if (ok)
            ++graphs_ok;
        else if (bad.empty())
            bad = ", first failure: sample " + std::to_string(i);
        if (std::find(all.begin(), all.end(), found) != all.end())
            ++contained;
    }
    res.add("critical.definition", graphs_ok == kCriticalSamples,
            std::to_string(graphs_ok) + "/" + std::to_string(kCriticalSamples) + " graphs, " +
                std::to_string(sets) + " sets checked" + bad,
            "every extracted and enumerated set is chi-critical", elapsed_ms(t0));
    res.add("critical.extracted_in_enumeration", contained == kCriticalSamples,
            std::to_string(contained) + "/" + std::to_string(kCriticalSamples),
            "the peeled set appears in the full enumeration", 0);

    t0 = Clock::now();
    {
        Rng hrng(opts.seed + 4);
        int ok = 0;
        std::uniform_int_distribution<int> rdist(1, 5);
        std::uniform_int_distribution<int> kdist(1, 2);
        for (int i = 0; i < kHaxellSamples; ++i) {
            const auto inst = random_haxell_instance(rdist(hrng), kdist(hrng), hrng);
            const auto tr = independent_transversal(inst.graph, inst.parts);
            bool good = tr && is_independent(inst.graph, *tr);
            if (good)
                for (const auto& part : inst.parts)
                    good = good && part.intersection_count(*tr) == 1;
            ok += good ? 1 : 0;
        }
        res.add("critical.haxell_transversal", ok == kHaxellSamples,
                std::to_string(ok) + "/" + std::to_string(kHaxellSamples) + " found",
                "an independent transversal on every instance", elapsed_ms(t0));
    }

    t0 = Clock::now();
    {
        int certificates = 0;
        int agree = 0;
        for (const auto& g : corpus) {
            const auto pr = vs_ivs_pipeline(g, std::nullopt, opts.stability.execution);
            if (!pr.certificate)
                continue;
            ++certificates;
            const auto rep = stability(g, Parameter::chi, opts.stability);
            if (rep.exhausted && rep.value == pr.certificate->r &&
                rep.independent_value == pr.certificate->r)
                ++agree;
        }
        res.add("critical.pipeline_agreement", agree == certificates,
                std::to_string(agree) + "/" + std::to_string(certificates) + " certificates agree",
                "vs_chi = ivs_chi = r for every certificate", elapsed_ms(t0));
    }
}

using SuiteFn = void (*)(const VerifyOptions&, Results&);

const std::vector<std::pair<std::string, SuiteFn>>& suites()
{
    static const std::vector<std::pair<std::string, SuiteFn>> table{
        {"prop31", suite_prop31}, {"prop31-variant", suite_prop31_variant},
        {"constr1", suite_constr1}, {"c5blowup", suite_c5blowup},
        {"sat", suite_sat},         {"fbounds", suite_fbounds},
        {"thm12", suite_thm12},     {"akbari", suite_akbari},
        {"king", suite_king},       {"tovey", suite_tovey},
        {"oracle", suite_oracle},   {"critical", suite_critical},
    };
    return table;
}

} // namespace

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : suites())
            out.push_back(name);
        out.push_back("all");
        return out;
    }();
    return names;
}

std::vector<VerificationResult> run_suite(std::string_view suite, const VerifyOptions& opts)
{
    Results res;
    bool known = false;
    for (const auto& [name, fn] : suites()) {
        if (suite == "all" || suite == name) {
            fn(opts, res);
            known = true;
        }
    }
    if (!known)
        throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
    auto out = res.take();
    std::stable_sort(out.begin(), out.end(), [](const VerificationResult& a, const VerificationResult& b) {
        return a.claim_id < b.claim_id;
    });
    return out;
}

} // namespace vstab
