// Acceptance runner: one PASS/FAIL line per criterion with its time budget.
// Usage: acceptance [seed]

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>

#include "gsa/dsl.hpp"
#include "gsa/laws.hpp"
#include "gsa/parity.hpp"

using namespace gsa;

namespace {

struct Outcome {
  bool ok = false;
  std::string summary;
  std::string detail;
};

std::string describe(const SuiteReport& r) {
  std::ostringstream out;
  for (const auto& l : r.laws) {
    out << "      " << (l.ok() ? "pass" : l.informational ? "note" : "FAIL") << "  " << l.cases << "  " << l.law;
    if (l.failures) out << "  [" << l.failures << " failing; first: " << l.first_failure << "]";
    out << "\n";
  }
  return out.str();
}

std::size_t cases_of(const SuiteReport& r, const std::string& law) {
  for (const auto& l : r.laws)
    if (l.law == law) return l.cases;
  return 0;
}

Outcome suite(const std::string& name, const SuiteOptions& o, const std::string& what,
              const std::function<bool(const SuiteReport&)>& extra = {}) {
  auto r = run_suite(name, o);
  bool ok = r.ok() && (!extra || extra(r));
  return {ok, what, describe(r)};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome worked_example() {
  auto doc = load_document(std::string(GSA_TEST_DIR) + "/fixtures/aba.gsa");
  auto text = emit_document({std::make_shared<const Atlas>(total_reversion(*doc.atlas)), std::nullopt});
  const std::string line = "x_pi[1,1] = -x_pi[1,0]*x_pi[0,1] + x_pi[1,1]";
  bool has_line = text.find("    " + line + "\n") != std::string::npos;
  bool golden = text == slurp(std::string(GSA_TEST_DIR) + "/golden/aba_pi.gsa");
  return {has_line && golden, "Pi of x[1,1]' = x[1,1] + x[1,0]x[0,1] gives " + line,
          std::string("      transition line ") + (has_line ? "present" : "MISSING") + ", golden file " +
              (golden ? "identical" : "DIFFERS") + "\n"};
}

}  // namespace

int main(int argc, char** argv) {
  const std::uint64_t seed = argc > 1 ? std::stoull(argv[1]) : 1;
  auto opts = [seed](std::size_t n_max, std::size_t count) { return SuiteOptions{seed, n_max, count}; };

  struct Criterion {
    const char* name;
    double limit;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"worked example (parity reversion of a double vector bundle)", 1, worked_example},
      {"Koszul sign laws, exhaustive at n = 4", 5,
       [&] {
         // 2 + 16 + 288 + 9216 triples for n = 1..4
         return suite("koszul", opts(4, 0), "9216 triples at n = 4 (9522 for n <= 4)", [](const SuiteReport& r) {
           return cases_of(r, "sgn(a, s's) = sgn(a^s', s) sgn(a, s')") == 9522;
         });
       }},
      {"Phi composition and naturality", 60,
       [&] {
         return suite("phi", opts(3, 100), "100 random 3-vector atlases",
                      [](const SuiteReport& r) { return cases_of(r, "Phi naturality") == 600; });
       }},
      {"flip action on T(3) of a (1|1) atlas", 30, [&] { return suite("flip", opts(3, 0), "S_3 group law, kappa^2, cores"); }},
      {"nice coordinates", 60,
       [&] {
         return suite("nice", opts(3, 50), "50 randomized 2- and 3-vector actions",
                      [](const SuiteReport& r) { return cases_of(r, "nice coordinates") == 50; });
       }},
      {"Xi: symmetric to skew", 30, [&] { return suite("xi", opts(3, 0), "swap, tangent flips, polarizations"); }},
      {"polarization roundtrip", 120,
       [&] {
         return suite("polar", opts(3, 50), "50 weighted atlases of degree <= 3 (factorial diag scale)",
                      [](const SuiteReport& r) { return cases_of(r, "roundtrip isomorphism") >= 50; });
       }},
      {"desuperization", 120,
       [&] {
         return suite("desuper", opts(3, 20), "20 N-manifolds of degree 2 and 3",
                      [](const SuiteReport& r) { return cases_of(r, "desuperization preserves composition") == 20; });
       }},
      {"tangent calculus", 30,
       [&] {
         return suite("tangent", opts(3, 100), "100 derivation pairs, Schwarz symmetry",
                      [](const SuiteReport& r) { return cases_of(r, "[d_T X, d_T Y] = d_T [X, Y]") == 100; });
       }},
      {"algebra core", 10,
       [&] {
         return suite("algebra", opts(3, 1000), "1002 random polynomials (334 triples)",
                      [](const SuiteReport& r) { return cases_of(r, "associativity") * 3 >= 1000; });
       }},
  };

  int failed = 0;
  std::printf("acceptance (seed %llu)\n", static_cast<unsigned long long>(seed));
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, "exception", std::string("      ") + e.what() + "\n"};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool pass = out.ok && secs < c.limit;
    failed += !pass;
    std::printf("%s  %2zu  %-58s %8.3f s (limit %g s)  %s\n", pass ? "PASS" : "FAIL", i + 1, c.name, secs, c.limit,
                out.summary.c_str());
    if (!out.ok || !pass || argc > 2) std::fputs(out.detail.c_str(), stdout);
    if (out.ok && secs >= c.limit) std::printf("      over the time limit\n");
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
