#include "vstab/sat.hpp"

#include "vstab/critical.hpp"
#include "vstab/dimacs.hpp"
#include "vstab/invariants.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdint>
#include <map>
#include <sstream>

namespace vstab {

bool operator<(const Literal& a, const Literal& b) noexcept
{
    if (a.variable != b.variable)
        return a.variable < b.variable;
    return a.positive && !b.positive;
}

Clause::Clause(std::vector<Literal> lits) : literals(std::move(lits))
{
    if (literals.empty())
        throw std::invalid_argument("clauses need at least one literal");
    std::stable_sort(literals.begin(), literals.end());
}

namespace {

std::string variable_name(int v)
{
    if (v < 26)
        return std::string(1, static_cast<char>('a' + v));
    return "x" + std::to_string(v);
}

} // namespace

std::string to_formula(const CnfInstance& inst)
{
    std::ostringstream os;
    for (std::size_t c = 0; c < inst.clauses.size(); ++c) {
        if (c)
            os << '&';
        os << '(';
        const auto& lits = inst.clauses[c].literals;
        for (std::size_t i = 0; i < lits.size(); ++i) {
            if (i)
                os << '|';
            os << (lits[i].positive ? "" : "~") << variable_name(lits[i].variable);
        }
        os << ')';
    }
    return os.str();
}

PlitCheck validate_plit_qsat(const CnfInstance& inst, int p, int q)
{
    std::map<std::pair<int, bool>, int> occurrences;
    for (std::size_t c = 0; c < inst.clauses.size(); ++c) {
        const auto& clause = inst.clauses[c];
        if (clause.size() != q)
            return {false, "clause " + std::to_string(c) + " has " + std::to_string(clause.size()) +
                               " literals, expected " + std::to_string(q)};
        for (const auto& l : clause.literals)
            ++occurrences[{l.variable, l.positive}];
    }
    for (const auto& [lit, count] : occurrences)
        if (count > p)
            return {false, "literal " + std::string(lit.second ? "" : "~") + variable_name(lit.first) +
                               " occurs " + std::to_string(count) + " times, limit " +
                               std::to_string(p)};
    return {};
}

std::vector<CnfInstance> gen_unsat_levels(int m)
{
    if (m < 2)
        throw std::invalid_argument("the unsatisfiable family needs m >= 2");
    int r = 0;
    while ((1 << r) < m)
        ++r;

    std::vector<CnfInstance> levels;
    CnfInstance base;
    base.variable_count = 1;
    const int copies = 2 * m - (1 << r);
    base.clauses.emplace_back(std::vector<Literal>(copies, Literal{0, true}));
    base.clauses.emplace_back(std::vector<Literal>(copies, Literal{0, false}));
    base.meta = GenerationMeta{m, r, 0};
    levels.push_back(std::move(base));

    for (int i = 1; i <= r; ++i) {
        const auto& prev = levels.back();
        CnfInstance next;
        next.variable_count = prev.variable_count;
        for (const auto& x : prev.clauses) {
            const int fresh = next.variable_count++;
            std::vector<Literal> plus(m, Literal{fresh, true});
            std::vector<Literal> minus(m, Literal{fresh, false});
            for (std::size_t j = 0; j < x.literals.size(); ++j)
                (j % 2 == 0 ? plus : minus).push_back(x.literals[j]);
            next.clauses.emplace_back(std::move(plus));
            next.clauses.emplace_back(std::move(minus));
        }
        next.meta = GenerationMeta{m, r, i};
        levels.push_back(std::move(next));
    }
    return levels;
}

CnfInstance gen_unsat_family(int m)
{
    return gen_unsat_levels(m).back();
}

bool satisfies(const CnfInstance& inst, const Assignment& a)
{
    for (const auto& c : inst.clauses) {
        const bool sat = std::any_of(c.literals.begin(), c.literals.end(), [&](const Literal& l) {
            return a.at(static_cast<std::size_t>(l.variable)) == l.positive;
        });
        if (!sat)
            return false;
    }
    return true;
}

namespace {

struct ClauseMask {
    std::uint32_t pos = 0;
    std::uint32_t neg = 0;
};

// Variable 0 maps to the most significant bit so that numeric order on the scan index
// is lexicographic order on assignments.
std::vector<ClauseMask> clause_masks(const CnfInstance& inst)
{
    const int nv = inst.variable_count;
    std::vector<ClauseMask> out;
    for (const auto& c : inst.clauses) {
        ClauseMask mk;
        for (const auto& l : c.literals) {
            const std::uint32_t bit = std::uint32_t{1} << (nv - 1 - l.variable);
            (l.positive ? mk.pos : mk.neg) |= bit;
        }
        out.push_back(mk);
    }
    return out;
}

bool eval(const std::vector<ClauseMask>& masks, std::uint32_t x)
{
    for (const auto& mk : masks)
        if (((x & mk.pos) | (~x & mk.neg)) == 0)
            return false;
    return true;
}

Assignment decode(std::uint32_t x, int nv)
{
    Assignment a(static_cast<std::size_t>(nv));
    for (int v = 0; v < nv; ++v)
        a[v] = (x >> (nv - 1 - v)) & 1U;
    return a;
}

} // namespace

std::optional<Assignment> is_satisfiable(const CnfInstance& inst, Execution exec)
{
    const int nv = inst.variable_count;
    if (nv > kMaxBruteForceVariables)
        throw std::invalid_argument("brute-force satisfiability is limited to " +
                                    std::to_string(kMaxBruteForceVariables) + " variables");
    for (const auto& c : inst.clauses)
        for (const auto& l : c.literals)
            if (l.variable < 0 || l.variable >= nv)
                throw std::invalid_argument("literal variable out of range");
    const auto masks = clause_masks(inst);
    const std::uint64_t total = std::uint64_t{1} << nv;

    if (exec == Execution::serial) {
        for (std::uint64_t x = 0; x < total; ++x)
            if (eval(masks, static_cast<std::uint32_t>(x)))
                return decode(static_cast<std::uint32_t>(x), nv);
        return std::nullopt;
    }

    const std::uint64_t chunk = std::max<std::uint64_t>(1, total >> 10);
    const auto chunks = static_cast<long long>((total + chunk - 1) / chunk);
    std::atomic<std::uint64_t> best{total};
#pragma omp parallel for schedule(dynamic, 1)
    for (long long ci = 0; ci < chunks; ++ci) {
        const std::uint64_t start = static_cast<std::uint64_t>(ci) * chunk;
        if (start >= best.load(std::memory_order_relaxed))
            continue;
        const std::uint64_t end = std::min(total, start + chunk);
        for (std::uint64_t x = start; x < end; ++x) {
            if (eval(masks, static_cast<std::uint32_t>(x))) {
                std::uint64_t cur = best.load();
                while (x < cur && !best.compare_exchange_weak(cur, x)) {
                }
                break;
            }
        }
    }
    if (best.load() == total)
        return std::nullopt;
    return decode(static_cast<std::uint32_t>(best.load()), nv);
}

namespace {

bool augment(int clause, const std::vector<std::vector<int>>& vars_of,
             std::vector<int>& match_var, std::vector<char>& seen)
{
    for (int v : vars_of[clause]) {
        if (seen[v])
            continue;
        seen[v] = 1;
        if (match_var[v] < 0 || augment(match_var[v], vars_of, match_var, seen)) {
            match_var[v] = clause;
            return true;
        }
    }
    return false;
}

} // namespace

Assignment hall_satisfier(const CnfInstance& inst, int m)
{
    if (m < 1)
        throw std::invalid_argument("hall_satisfier needs m >= 1");
    const auto check = validate_plit_qsat(inst, m, 2 * m);
    if (!check.ok)
        throw std::invalid_argument("not an m-LIT 2m-SAT instance: " + check.violation);

    const int nc = static_cast<int>(inst.clauses.size());
    std::vector<std::vector<int>> vars_of(nc);
    for (int c = 0; c < nc; ++c) {
        for (const auto& l : inst.clauses[c].literals)
            vars_of[c].push_back(l.variable);
        std::sort(vars_of[c].begin(), vars_of[c].end());
        vars_of[c].erase(std::unique(vars_of[c].begin(), vars_of[c].end()), vars_of[c].end());
    }
    std::vector<int> match_var(static_cast<std::size_t>(inst.variable_count), -1);
    for (int c = 0; c < nc; ++c) {
        std::vector<char> seen(static_cast<std::size_t>(inst.variable_count), 0);
        if (!augment(c, vars_of, match_var, seen))
            throw InternalError("no clause-saturating matching: clause " + std::to_string(c) +
                                " of " + std::to_string(nc) + " over " +
                                std::to_string(inst.variable_count) +
                                " variables is unmatched, contradicting Hall's condition");
    }

    Assignment a(static_cast<std::size_t>(inst.variable_count), true);
    for (int v = 0; v < inst.variable_count; ++v) {
        const int c = match_var[v];
        if (c < 0)
            continue;
        const auto& lits = inst.clauses[c].literals;
        const bool has_positive = std::any_of(lits.begin(), lits.end(), [&](const Literal& l) {
            return l.variable == v && l.positive;
        });
        a[v] = has_positive;
    }
    if (!satisfies(inst, a))
        throw InternalError("matched assignment does not satisfy the instance");
    return a;
}

GadgetGraph independence_graph(const CnfInstance& inst)
{
    GadgetGraph out;
    std::vector<Literal> lits;
    for (const auto& c : inst.clauses) {
        out.clause_start.push_back(static_cast<int>(lits.size()));
        lits.insert(lits.end(), c.literals.begin(), c.literals.end());
    }
    const int n = static_cast<int>(lits.size());
    out.clause_start.push_back(n);
    GraphBuilder b(n);
    for (std::size_t c = 0; c + 1 < out.clause_start.size(); ++c) {
        std::vector<int> block;
        for (int v = out.clause_start[c]; v < out.clause_start[c + 1]; ++v)
            block.push_back(v);
        b.add_clique(block);
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (lits[u] == lits[v].complement())
                b.add_edge(u, v);
    out.graph = std::move(b).build();
    for (std::size_t c = 0; c + 1 < out.clause_start.size(); ++c) {
        VertexSet part(n);
        for (int v = out.clause_start[c]; v < out.clause_start[c + 1]; ++v)
            part.set(v);
        out.parts.parts.push_back(std::move(part));
    }
    return out;
}

GadgetGraph augmented_independence_graph(const CnfInstance& inst)
{
    const auto base = independence_graph(inst);
    const int literals = base.graph.order();
    const int nc = static_cast<int>(inst.clauses.size());
    const int n = literals + 2 * nc;
    GraphBuilder b(n);
    for (const auto& e : base.graph.edges())
        b.add_edge(e.u, e.v);
    for (int c = 0; c < nc; ++c)
        for (int j = 0; j < 2; ++j)
            for (int v = base.clause_start[c]; v < base.clause_start[c + 1]; ++v)
                b.add_edge(literals + 2 * c + j, v);

    GadgetGraph out;
    out.graph = std::move(b).build();
    out.clause_start = base.clause_start;
    for (const auto& p : base.parts.parts) {
        VertexSet part(n);
        p.for_each([&](int v) { part.set(v); });
        out.parts.parts.push_back(std::move(part));
    }
    for (int v = literals; v < n; ++v) {
        VertexSet part(n);
        part.set(v);
        out.parts.parts.push_back(std::move(part));
    }
    return out;
}

VertexSet removal_set(const Graph& g, const CliquePartition& parts, const Coloring& coloring)
{
    if (!is_proper(g, coloring))
        throw std::invalid_argument("removal_set needs a proper coloring");
    if (auto bad = validate_clique_partition(g, parts); !bad.empty())
        throw std::invalid_argument("invalid clique partition: " + bad);
    VertexSet s(g.order());
    int k = 0;
    for (int c : coloring.colors)
        k = std::max(k, c);
    for (const auto& part : parts.parts) {
        int pick = -1;
        part.for_each([&](int v) {
            if (pick < 0 || coloring.colors[v] > coloring.colors[pick])
                pick = v;
        });
        s.set(pick);
    }
    for (int v = 0; v < g.order(); ++v)
        if (!s.test(v) && coloring.colors[v] >= k)
            throw InternalError("a top-colored vertex survived the removal");
    return s;
}

// --- certificates ---

namespace {

VertexSet clause_block(const StabilityCertificate& cert, int c)
{
    VertexSet b(cert.graph.order());
    for (int v = cert.clause_start[c]; v < cert.clause_start[c + 1]; ++v)
        b.set(v);
    return b;
}

} // namespace

CertificateCheck validate_certificate(const CnfInstance& inst, const StabilityCertificate& cert)
{
    CertificateCheck out;
    auto fail = [&](std::string why) { out.failures.push_back(std::move(why)); };
    const Graph& g = cert.graph;
    const int nc = static_cast<int>(inst.clauses.size());
    const int target = 2 * cert.m;

    const auto expect = augmented_independence_graph(inst);
    if (!(expect.graph == g) || expect.clause_start != cert.clause_start || cert.clause_count != nc)
        fail("certificate graph is not the augmented independence graph of the instance");
    if (!out.failures.empty())
        return out;

    // chi = omega = 2m: a 2m-clique and a proper 2m-coloring.
    if (!is_proper(g, cert.full_coloring) || cert.full_coloring.k != target)
        fail("full coloring is not a proper 2m-coloring");

    // (i) pairwise disjoint 2m-cliques, one per clause.
    VertexSet used(g.order());
    if (static_cast<int>(cert.disjoint_cliques.size()) != nc)
        fail("expected one disjoint clique per clause");
    for (std::size_t i = 0; i < cert.disjoint_cliques.size(); ++i) {
        const auto& q = cert.disjoint_cliques[i];
        if (q.universe() != g.order() || q.count() != target || !is_clique(g, q))
            fail("disjoint clique " + std::to_string(i) + " is not a clique of order 2m");
        else if (q.intersects(used))
            fail("disjoint clique " + std::to_string(i) + " overlaps an earlier one");
        else
            used |= q;
    }

    // (ii) one vertex per clause whose removal leaves a proper (2m-1)-coloring.
    if (cert.removal.universe() != g.order() || cert.removal.count() != nc)
        fail("removal set must have one vertex per clause");
    for (int c = 0; c < nc && out.failures.empty(); ++c)
        if (clause_block(cert, c).intersection_count(cert.removal) != 1)
            fail("removal set misses clause " + std::to_string(c));
    if (out.failures.empty()) {
        const auto rest = delete_vertices(g, cert.removal);
        Coloring sub;
        sub.k = target - 1;
        for (int v : rest.new_to_old)
            sub.colors.push_back(cert.reduced_coloring.colors.at(v));
        if (!is_proper(rest.graph, sub))
            fail("reduced coloring is not a proper (2m-1)-coloring of G - S");
    }

    // (iii) per clause, two 2m-cliques meeting exactly in the clause block.
    if (static_cast<int>(cert.clique_pairs.size()) != nc)
        fail("expected one clique pair per clause");
    for (int c = 0; c < static_cast<int>(cert.clique_pairs.size()); ++c) {
        const auto& [x, y] = cert.clique_pairs[c];
        const auto block = clause_block(cert, c);
        if (x.count() != target || y.count() != target || !is_clique(g, x) || !is_clique(g, y) ||
            !((x & y) == block))
            fail("clique pair " + std::to_string(c) + " does not meet exactly in its clause");
    }
    const bool unsat = !is_satisfiable(inst).has_value();
    if (!cert.instance_unsatisfiable || !unsat)
        fail("instance is satisfiable");
    std::vector<VertexSet> blocks;
    for (int c = 0; c < nc; ++c)
        blocks.push_back(clause_block(cert, c));
    if (independent_transversal(g, blocks))
        fail("an independent clause transversal exists");

    out.ok = out.failures.empty();
    if (out.ok) {
        out.vs_lower = nc;
        out.vs_upper = nc;
        out.ivs_omega_above = nc;
    }
    return out;
}

StabilityCertificate stability_certificates(const CnfInstance& inst, int m)
{
    StabilityCertificate cert;
    cert.m = m;
    cert.clause_count = static_cast<int>(inst.clauses.size());
    const auto plain = independence_graph(inst);
    const auto aug = augmented_independence_graph(inst);
    cert.graph = aug.graph;
    cert.clause_start = aug.clause_start;
    const int literals = plain.graph.order();
    const int target = 2 * m;
    const int n = aug.graph.order();

    const auto base = chromatic_number(plain.graph);
    if (base.chi != target)
        throw InternalError("chi(G(I)) = " + std::to_string(base.chi) + ", expected 2m");

    // Augment vertices have 2m-1 neighbors, so a 2m-coloring extends greedily.
    auto extend = [&](const std::vector<int>& lit_colors, const VertexSet& removed, int k) {
        Coloring c;
        c.k = k;
        c.colors.assign(static_cast<std::size_t>(n), 0);
        for (int v = 0; v < literals; ++v)
            c.colors[v] = removed.test(v) ? 0 : lit_colors[v];
        for (int v = literals; v < n; ++v) {
            std::vector<char> taken(static_cast<std::size_t>(k) + 1, 0);
            aug.graph.neighbors(v).for_each([&](int u) {
                if (!removed.test(u) && c.colors[u] > 0)
                    taken[c.colors[u]] = 1;
            });
            int col = 1;
            while (col <= k && taken[col])
                ++col;
            if (col > k)
                throw InternalError("greedy extension ran out of colors");
            c.colors[v] = col;
        }
        return c;
    };
    cert.full_coloring = extend(base.coloring.colors, VertexSet(n), target);

    const auto plain_removal = removal_set(plain.graph, plain.parts, base.coloring);
    cert.removal = VertexSet(n);
    plain_removal.for_each([&](int v) { cert.removal.set(v); });
    cert.reduced_coloring = extend(base.coloring.colors, cert.removal, target - 1);

    for (int c = 0; c < cert.clause_count; ++c) {
        VertexSet block(n);
        for (int v = aug.clause_start[c]; v < aug.clause_start[c + 1]; ++v)
            block.set(v);
        VertexSet x = block;
        VertexSet y = block;
        x.set(literals + 2 * c);
        y.set(literals + 2 * c + 1);
        cert.disjoint_cliques.push_back(x);
        cert.clique_pairs.emplace_back(std::move(x), std::move(y));
    }
    cert.instance_unsatisfiable = !is_satisfiable(inst).has_value();

    const auto check = validate_certificate(inst, cert);
    if (!check.ok) {
        std::string why;
        for (const auto& f : check.failures)
            why += (why.empty() ? "" : "; ") + f;
        throw InternalError("stability certificate failed validation: " + why);
    }
    return cert;
}

// --- DIMACS CNF ---

std::string write_dimacs_cnf(const CnfInstance& inst)
{
    std::ostringstream os;
    os << "p cnf " << inst.variable_count << ' ' << inst.clauses.size() << '\n';
    for (const auto& c : inst.clauses) {
        for (const auto& l : c.literals)
            os << (l.positive ? l.variable + 1 : -(l.variable + 1)) << ' ';
        os << "0\n";
    }
    return os.str();
}

CnfInstance read_dimacs_cnf(std::string_view text)
{
    CnfInstance inst;
    bool have_header = false;
    long long declared_clauses = 0;
    std::vector<Literal> current;
    int line_no = 0;
    int current_line = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        std::istringstream ls{std::string(line)};
        std::string tok;
        if (!(ls >> tok))
            continue;
        if (tok == "c" || tok[0] == 'c')
            continue;
        if (tok == "p") {
            if (have_header)
                throw ParseError(line_no, "duplicate problem line");
            std::string fmt;
            long long nv = -1;
            long long nc = -1;
            std::string extra;
            if (!(ls >> fmt >> nv >> nc) || fmt != "cnf" || nv < 0 || nc < 0 || (ls >> extra))
                throw ParseError(line_no, "malformed header, expected 'p cnf <vars> <clauses>'");
            if (nv > 1'000'000)
                throw ParseError(line_no, "too many variables");
            inst.variable_count = static_cast<int>(nv);
            declared_clauses = nc;
            have_header = true;
            continue;
        }
        if (!have_header)
            throw ParseError(line_no, "clause before problem line");
        std::istringstream all{std::string(line)};
        while (all >> tok) {
            long long lit = 0;
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), lit);
            if (ec != std::errc{} || ptr != tok.data() + tok.size())
                throw ParseError(line_no, "malformed literal '" + tok + "'");
            if (lit == 0) {
                if (current.empty())
                    throw ParseError(line_no, "zero terminator with no literals (empty clause)");
                inst.clauses.emplace_back(std::move(current));
                current.clear();
                continue;
            }
            const long long var = lit > 0 ? lit : -lit;
            if (var > inst.variable_count)
                throw ParseError(line_no, "variable " + std::to_string(var) + " out of range");
            if (current.empty())
                current_line = line_no;
            current.push_back({static_cast<int>(var - 1), lit > 0});
        }
    }
    if (!have_header)
        throw ParseError(line_no, "missing problem line");
    if (!current.empty())
        throw ParseError(current_line, "clause is not terminated by 0");
    if (static_cast<long long>(inst.clauses.size()) != declared_clauses)
        throw ParseError(line_no, "header declares " + std::to_string(declared_clauses) +
                                      " clauses but " + std::to_string(inst.clauses.size()) +
                                      " were read");
    return inst;
}

} // namespace vstab
