#include "vstab/constructions.hpp"

#include "vstab/invariants.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace vstab {

std::string to_string(Family f)
{
    switch (f) {
    case Family::prop31:
        return "prop31";
    case Family::prop31_variant:
        return "prop31_variant";
    case Family::constr1:
        return "constr1";
    case Family::c5blowup:
        return "c5blowup";
    }
    return "unknown";
}

std::string to_string(ClaimStatus s)
{
    switch (s) {
    case ClaimStatus::pass:
        return "pass";
    case ClaimStatus::fail:
        return "fail";
    case ClaimStatus::inconclusive:
        return "inconclusive";
    }
    return "unknown";
}

int ceil_sqrt(int x)
{
    int a = 0;
    while (a * a < x)
        ++a;
    return a;
}

int ceil_div(int a, int b)
{
    return (a + b - 1) / b;
}

namespace {

Expectation eq(std::string name, int v)
{
    return {std::move(name), Comparator::equal, {v}};
}

} // namespace

Construction construct_prop31(int chi, std::optional<int> copies)
{
    if (chi < 4)
        throw std::invalid_argument("prop31 needs chi >= 4");
    const int a = ceil_sqrt(chi);
    const int max_part = ceil_div(chi, a);
    const int t = copies.value_or(2);
    if (t != 2 && (t < 2 || t > max_part - 1))
        throw std::invalid_argument("copies must be 2 or lie in [2, ceil(chi/a)-1] = [2, " +
                                    std::to_string(max_part - 1) + "]");

    // Part boundaries of the central clique: contiguous, larger parts first.
    std::vector<int> part_start(a + 1, 0);
    for (int j = 0; j < a; ++j)
        part_start[j + 1] = part_start[j] + chi / a + (j < chi % a ? 1 : 0);

    const int copy_size = chi - 2 + a;
    GraphBuilder b(chi + t * copy_size);
    std::vector<int> central(chi);
    std::iota(central.begin(), central.end(), 0);
    b.add_clique(central);
    for (int c = 0; c < t; ++c) {
        const int base = chi + c * copy_size;
        std::vector<int> clique(chi - 2);
        std::iota(clique.begin(), clique.end(), base);
        b.add_clique(clique);
        for (int j = 0; j < a; ++j) {
            const int x = base + chi - 2 + j;
            for (int u : clique)
                b.add_edge(x, u);
            for (int u = part_start[j]; u < part_start[j + 1]; ++u)
                b.add_edge(x, u);
        }
    }

    Construction out{std::move(b).build(), {}};
    auto& m = out.meta;
    m.family = copies ? Family::prop31_variant : Family::prop31;
    m.params = {{"chi", chi}, {"a", a}, {"copies", t}};
    m.expected = {eq("omega", chi), eq("chi", chi), eq("delta", chi + std::max(1, max_part - 2)),
                  eq("vs_chi", 2), {"ivs_chi_lower", Comparator::at_least, {3}}};
    if (copies && t == max_part - 1)
        m.expected.push_back(eq("ivs_chi", max_part));
    if (!copies && chi == 4)
        m.expected.push_back(eq("ivs_chi", 3));
    return out;
}

Construction construct_constr1(int delta)
{
    if (delta < 3)
        throw std::invalid_argument("constr1 needs delta >= 3 (delta = 2 degenerates to a = 0)");
    const int k = ceil_div(2 * (delta + 1), 3) - 1;
    const int a = 2 * k - delta;
    const int copy_size = 2 * k - a;
    GraphBuilder b(k + k * copy_size);
    std::vector<int> central(k);
    std::iota(central.begin(), central.end(), 0);
    b.add_clique(central);
    for (int i = 0; i < k; ++i) {
        const int base = k + i * copy_size;
        std::vector<int> left;
        std::vector<int> right;
        for (int j = 0; j < a; ++j) {
            left.push_back(base + j);
            right.push_back(base + j);
            b.add_edge(i, base + j);
        }
        for (int j = 0; j < k - a; ++j) {
            left.push_back(base + a + j);
            right.push_back(base + k + j);
        }
        b.add_clique(left);
        b.add_clique(right);
    }

    Construction out{std::move(b).build(), {}};
    auto& m = out.meta;
    m.family = Family::constr1;
    m.params = {{"delta", delta}, {"k", k}, {"a", a}};
    m.expected = {eq("omega", k),        eq("chi", k),          eq("delta", delta),
                  eq("vs_chi", k + 1),   eq("vs_omega", k + 1), eq("ivs_chi", k + 2),
                  eq("ivs_omega", k + 2)};
    return out;
}

Construction construct_c5blowup(int k)
{
    Construction out{blow_up_cycle5(k), {}};
    auto& m = out.meta;
    m.family = Family::c5blowup;
    m.params = {{"k", k}};
    m.expected = {eq("omega", 2 * k),
                  eq("delta", 3 * k - 1),
                  eq("chi", ceil_div(5 * k, 2)),
                  eq("vs_omega", 3),
                  {"ivs_omega", Comparator::nonexistent, {}},
                  {"vs_chi", Comparator::one_of, {1, 2}},
                  {"ivs_chi", Comparator::one_of, {1, 2}}};
    return out;
}

std::string describe(const Expectation& e)
{
    std::ostringstream os;
    switch (e.cmp) {
    case Comparator::equal:
        os << e.values.at(0);
        break;
    case Comparator::at_least:
        os << ">=" << e.values.at(0);
        break;
    case Comparator::one_of:
        os << "one of {";
        for (std::size_t i = 0; i < e.values.size(); ++i)
            os << (i ? "," : "") << e.values[i];
        os << '}';
        break;
    case Comparator::nonexistent:
        os << "nonexistent";
        break;
    }
    return os.str();
}

namespace {

std::string base_invariant(const std::string& name)
{
    const std::string suffix = "_lower";
    if (name.size() > suffix.size() && name.ends_with(suffix))
        return name.substr(0, name.size() - suffix.size());
    return name;
}

struct Computed {
    bool known = false;
    std::optional<int> value; // absent + known => nonexistent
};

class LazyInvariants {
public:
    LazyInvariants(const Graph& g, const StabilityOptions& opts) : g_(g), opts_(opts) {}

    Computed get(const std::string& name)
    {
        if (name == "delta")
            return {true, g_.max_degree()};
        if (name == "chi" || name == "omega") {
            Budget budget(opts_.node_budget);
            try {
                if (name == "chi")
                    return {true, chromatic_number(g_, budget).chi};
                return {true, clique_number(g_, budget).omega};
            } catch (const BudgetExceeded&) {
                return {};
            }
        }
        const bool chi = name.ends_with("_chi");
        auto& rep = chi ? chi_ : omega_;
        if (!rep)
            rep = stability(g_, chi ? Parameter::chi : Parameter::omega, opts_);
        if (!rep->exhausted)
            return {};
        if (name.starts_with("vs_"))
            return {true, rep->value};
        if (name.starts_with("ivs_"))
            return {true, rep->independent_value};
        throw std::invalid_argument("unknown invariant " + name);
    }

private:
    const Graph& g_;
    const StabilityOptions& opts_;
    std::optional<StabilityReport> chi_;
    std::optional<StabilityReport> omega_;
};

} // namespace

std::vector<ClaimCheck> expected_invariants_check(const Graph& g, const ConstructionMeta& meta,
                                                  const StabilityOptions& opts)
{
    LazyInvariants inv(g, opts);
    std::vector<ClaimCheck> out;
    for (const auto& e : meta.expected) {
        ClaimCheck c;
        c.name = e.name;
        c.expected = describe(e);
        const auto got = inv.get(base_invariant(e.name));
        if (!got.known) {
            c.status = ClaimStatus::inconclusive;
            out.push_back(std::move(c));
            continue;
        }
        c.computed = got.value ? std::to_string(*got.value) : "nonexistent";
        bool ok = false;
        switch (e.cmp) {
        case Comparator::equal:
            ok = got.value && *got.value == e.values.at(0);
            break;
        case Comparator::at_least:
            ok = got.value && *got.value >= e.values.at(0);
            break;
        case Comparator::one_of:
            ok = got.value &&
                 std::find(e.values.begin(), e.values.end(), *got.value) != e.values.end();
            break;
        case Comparator::nonexistent:
            ok = !got.value;
            break;
        }
        c.status = ok ? ClaimStatus::pass : ClaimStatus::fail;
        out.push_back(std::move(c));
    }
    return out;
}

} // namespace vstab
