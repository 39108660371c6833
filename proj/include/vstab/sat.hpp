#pragma once

#include "vstab/graph.hpp"
#include "vstab/stability.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace vstab {

struct Literal {
    int variable = 0;
    bool positive = true;

    Literal complement() const noexcept { return {variable, !positive}; }
    bool operator==(const Literal&) const = default;
};

/// Canonical literal order: by variable, positive before negative.
bool operator<(const Literal& a, const Literal& b) noexcept;

/// A multiset of literals kept in canonical order; repeats are allowed.
struct Clause {
    std::vector<Literal> literals;

    Clause() = default;
    explicit Clause(std::vector<Literal> lits);
    int size() const noexcept { return static_cast<int>(literals.size()); }
    bool operator==(const Clause&) const = default;
};

struct GenerationMeta {
    int m = 0;
    int r = 0;
    int level = 0;
    std::string split_rule = "round_robin_sorted";
};

struct CnfInstance {
    int variable_count = 0;
    std::vector<Clause> clauses;
    std::optional<GenerationMeta> meta;
};

/// Pretty form such as "(a|b|b)&(a|~b|~b)", naming variables a, b, c, ...
std::string to_formula(const CnfInstance& inst);

struct PlitCheck {
    bool ok = true;
    std::string violation; // first violating clause or literal
};

/// Every clause has exactly q literals and every literal occurs at most p times.
PlitCheck validate_plit_qsat(const CnfInstance& inst, int p, int q);

/// The unsatisfiable levels I_0..I_r (r = ceil(log2 m)). Level i is m-LIT
/// (2m - 2^(r-i))-SAT. Each clause is split by dealing its sorted literals alternately
/// into two groups; fresh variables are numbered in clause order.
std::vector<CnfInstance> gen_unsat_levels(int m);
/// I_r: 2^(r+1) clauses of 2m-1 literals over 2^(r+1)-1 variables.
CnfInstance gen_unsat_family(int m);

inline constexpr int kMaxBruteForceVariables = 24;

using Assignment = std::vector<bool>;

bool satisfies(const CnfInstance& inst, const Assignment& a);

/// Lexicographically least satisfying assignment (false < true, variable 0 first) by
/// exhaustive scan. Throws for more than kMaxBruteForceVariables variables.
std::optional<Assignment> is_satisfiable(const CnfInstance& inst,
                                         Execution exec = Execution::parallel);

/// Satisfying assignment of an m-LIT 2m-SAT instance from a clause-saturating matching
/// between clauses and variables. Unmatched variables are true.
Assignment hall_satisfier(const CnfInstance& inst, int m);

/// Raised when a matching that must exist is not found.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct GadgetGraph {
    Graph graph;
    CliquePartition parts;
    /// Vertex range of clause c's literals: [clause_start[c], clause_start[c+1]).
    std::vector<int> clause_start;
};

/// One vertex per literal occurrence, clause by clause; edges join occurrences in the
/// same clause and complementary literals.
GadgetGraph independence_graph(const CnfInstance& inst);

/// G(I) plus two nonadjacent vertices per clause joined to that clause's literals.
/// Augment vertices follow all literal vertices (clause c gets L+2c and L+2c+1) and are
/// singleton parts.
GadgetGraph augmented_independence_graph(const CnfInstance& inst);

/// One highest-colored vertex per part (ties to the smallest index); the coloring
/// restricted to the rest uses at most k-1 colors.
VertexSet removal_set(const Graph& g, const CliquePartition& parts, const Coloring& coloring);

/// Evidence that vs_chi = vs_omega = |clauses| < ivs_omega on the augmented graph.
struct StabilityCertificate {
    int m = 0;
    int clause_count = 0;
    Graph graph;                                         // augmented independence graph
    std::vector<int> clause_start;
    Coloring full_coloring;                              // proper, 2m colors
    std::vector<VertexSet> disjoint_cliques;             // one 2m-clique per clause
    VertexSet removal;                                   // one vertex per clause
    Coloring reduced_coloring;                           // proper on G - removal, 0 on removal
    std::vector<std::pair<VertexSet, VertexSet>> clique_pairs; // per clause, meeting in the block
    bool instance_unsatisfiable = false;
};

struct CertificateCheck {
    bool ok = false;
    std::vector<std::string> failures;
    int vs_lower = 0;       // from disjoint cliques and chi = omega
    int vs_upper = 0;       // from the removal set
    int ivs_omega_above = 0; // ivs_omega > this
};

CertificateCheck validate_certificate(const CnfInstance& inst, const StabilityCertificate& cert);

/// Builds and validates the certificate for gen_unsat_family(m); throws InternalError if
/// any part fails to validate.
StabilityCertificate stability_certificates(const CnfInstance& inst, int m);

// --- DIMACS CNF ---

/// "p cnf V C", one clause per line as signed 1-based literals ending in 0.
std::string write_dimacs_cnf(const CnfInstance& inst);
CnfInstance read_dimacs_cnf(std::string_view text);

} // namespace vstab
