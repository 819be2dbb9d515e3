// Acceptance gate: one line per criterion, nonzero exit if any fails.
#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include "csw/verify.hpp"

using namespace csw;

namespace {

bool g_all_ok = true;

void criterion(int n, const std::string& what, long budget_ms,
               const std::vector<VerifyReport>& reports) {
    long elapsed = 0;
    std::size_t cases = 0;
    std::vector<std::string> failures;
    for (const auto& r : reports) {
        elapsed += r.elapsed_ms;
        cases += r.cases;
        for (const auto& f : r.failures)
            failures.push_back(r.check + "/" + r.datum + ": " + f);
    }
    bool ok = failures.empty() && elapsed <= budget_ms;
    g_all_ok = g_all_ok && ok;
    std::cout << "criterion " << n << " (" << what << "): "
              << (ok ? "PASS" : "FAIL") << "  [" << cases << " cases, "
              << elapsed << " ms, budget " << budget_ms << " ms]\n";
    if (!failures.empty()) {
        for (std::size_t i = 0; i < failures.size() && i < 10; ++i)
            std::cout << "    " << failures[i] << "\n";
        if (failures.size() > 10)
            std::cout << "    ... " << failures.size() - 10 << " more\n";
    } else if (!ok) {
        std::cout << "    over time budget\n";
    }
}

}  // namespace

int main() {
    const unsigned seed = 0;

    {
        std::vector<VerifyReport> rs;
        for (const char* name :
             {"A1-adjoint", "A1-sc", "A2-adjoint", "A2-sc", "B2-adjoint",
              "B2-sc", "G2-adjoint", "G2-sc", "BC1", "BC2"})
            rs.push_back(verify_characters(RootDatum::catalog(name), 500));
        criterion(1, "character oracle equivalence", 60000, rs);
    }
    {
        std::vector<VerifyReport> rs;
        for (const auto& name : RootDatum::catalog_names())
            rs.push_back(verify_dual(RootDatum::catalog(name)));
        criterion(2, "dual-group construction", 5000, rs);
    }
    {
        std::vector<VerifyReport> rs;
        for (const char* name :
             {"A1-adjoint", "A1-sc", "A2-adjoint", "A2-sc", "B2-adjoint",
              "B2-sc", "C2-adjoint", "C2-sc", "G2-adjoint", "G2-sc", "BC1",
              "BC2"})
            rs.push_back(verify_commid(RootDatum::catalog(name), 4));
        for (const char* name : {"A2-sc", "B2-adjoint"})
            rs.push_back(
                verify_split_assoc(RootDatum::catalog(name), 100, seed));
        criterion(3, "Bernstein relations", 60000, rs);
    }
    {
        std::vector<VerifyReport> rs;
        rs.push_back(verify_savin(RootDatum::catalog("A1-adjoint"), 4));
        rs.push_back(verify_savin(RootDatum::catalog("A2-adjoint"), 2));
        rs.push_back(verify_savin(RootDatum::catalog("B2-sc"), 2));
        criterion(4, "projection exactness", 30000, rs);
    }
    {
        std::vector<VerifyReport> rs;
        for (const char* name : {"A1-adjoint", "A2-adjoint", "B2-adjoint"})
            rs.push_back(verify_module_iso(RootDatum::catalog(name), 5));
        criterion(5, "module isomorphism", 60000, rs);
    }
    {
        std::vector<VerifyReport> rs;
        for (const auto& name : RootDatum::catalog_names()) {
            auto d = RootDatum::catalog(name);
            rs.push_back(verify_recursion(
                d, static_cast<Coord>(d.semisimple_rank()) + 2,
                d.semisimple_rank() >= 3 ? 1 : 2));
        }
        criterion(6, "Whittaker recursion", 60000, rs);
    }
    {
        std::vector<VerifyReport> rs;
        for (const char* name : {"A1-adjoint", "A2-adjoint", "B2-adjoint"}) {
            auto d = RootDatum::catalog(name);
            rs.push_back(verify_cs_ratio(d, 3));
            rs.push_back(verify_conductor(d, 4));
        }
        criterion(7, "adjoint ratio and conductor swap", 30000, rs);
    }
    {
        std::vector<VerifyReport> rs;
        rs.push_back(verify_uniqueness(RootDatum::catalog("A1-adjoint"), 6));
        rs.push_back(verify_uniqueness(RootDatum::catalog("A2-adjoint"), 5));
        criterion(8, "uniqueness rank", 30000, rs);
    }
    {
        std::vector<VerifyReport> rs;
        rs.push_back(verify_general(RootDatum::catalog("A1-sc"), 6));
        criterion(9, "general-group reduction", 30000, rs);
    }
    criterion(10, "split Schur oracle", 10000, {verify_schur(20, seed)});

    std::cout << (g_all_ok ? "acceptance: all criteria pass\n"
                           : "acceptance: FAILURES\n");
    return g_all_ok ? 0 : 1;
}
