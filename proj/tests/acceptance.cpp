// Acceptance run: one PASS/FAIL line per criterion, each backed by full verify suites.

#include "vstab/verify.hpp"

#include <chrono>
#include <cstdio>
#include <exception>
#include <string>
#include <vector>

namespace {

struct Criterion {
    int id;
    const char* title;
    std::vector<const char*> suites;
    double limit_s;
};

const std::vector<Criterion> kCriteria = {
    {1, "gadget graphs, chi 4..8", {"prop31"}, 300},
    {2, "extra-copies variant, chi 9 and 16", {"prop31-variant"}, 600},
    {3, "shared-clique graphs, delta 3..6", {"constr1"}, 600},
    {4, "C5 blow-ups, k 1..3", {"c5blowup"}, 120},
    {5, "unsatisfiable family, m 2..4", {"sat"}, 900},
    {6, "Hall satisfier on 2-LIT 4-SAT and 3-LIT 6-SAT", {"tovey"}, 120},
    {7, "f(delta) table and k_delta arithmetic", {"thm12", "fbounds"}, 300},
    {8, "chi >= delta implies vs = ivs", {"akbari"}, 600},
    {9, "large omega implies ivs_omega = vs_omega", {"king"}, 600},
    {10, "pruned search vs exhaustive oracles", {"oracle"}, 600},
    {11, "critical subgraphs, transversals, pipeline", {"critical"}, 600},
};

} // namespace

int main()
{
    int failed = 0;
    for (const auto& c : kCriteria) {
        const auto t0 = std::chrono::steady_clock::now();
        int pass = 0;
        int total = 0;
        std::string first_bad;
        try {
            for (const char* suite : c.suites)
                for (const auto& r : vstab::run_suite(suite)) {
                    ++total;
                    if (r.status == vstab::ClaimStatus::pass)
                        ++pass;
                    else if (first_bad.empty())
                        first_bad = r.claim_id + " " + vstab::to_string(r.status) + " (computed " +
                                    r.computed + ", expected " + r.expected + ")";
                }
        } catch (const std::exception& e) {
            first_bad = std::string("error: ") + e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool in_time = secs <= c.limit_s;
        if (first_bad.empty() && !in_time)
            first_bad = "over the time limit";
        const bool ok = first_bad.empty() && total > 0;
        failed += ok ? 0 : 1;
        std::printf("%s criterion %2d: %-48s %4d/%-4d claims  %8.2fs / %4.0fs%s%s\n",
                    ok ? "PASS" : "FAIL", c.id, c.title, pass, total, secs, c.limit_s,
                    ok ? "" : "  ", first_bad.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(kCriteria.size()) - failed,
                kCriteria.size());
    return failed == 0 ? 0 : 1;
}
