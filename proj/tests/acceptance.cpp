// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. All checks are exact integer comparisons.

#include <chrono>
#include <cstdio>
#include <functional>
#include <json.hpp>
#include <set>
#include <sstream>
#include <string>
#include <tuple>

#include "oracles.hpp"
#include "xcl/blade.hpp"
#include "xcl/classify.hpp"
#include "xcl/cli.hpp"
#include "xcl/expr.hpp"
#include "xcl/matrix.hpp"
#include "xcl/oracle.hpp"
#include "xcl/tensor.hpp"

using namespace xcl;
using xcl::testing::for_each_signature;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

int failures = 0;

void criterion(int number, const char* title,
               const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out.pass = false;
    out.detail = std::string("exception: ") + e.what();
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (!out.pass) ++failures;
  std::printf("[%s] %d. %s (%.3f s)%s%s\n", out.pass ? "PASS" : "FAIL", number,
              title, seconds, out.detail.empty() ? "" : " -- ",
              out.detail.c_str());
  std::fflush(stdout);
}

nlohmann::json run_cli(const std::vector<std::string>& args, int& code) {
  std::ostringstream out;
  std::ostringstream err;
  code = cli::run_command(args, out, err);
  return nlohmann::json::parse(out.str());
}

const AlgebraType kTypes[] = {AlgebraType::I, AlgebraType::II, AlgebraType::III,
                              AlgebraType::IV, AlgebraType::V};

}  // namespace

int main() {
  criterion(1, "worked example: iso verdicts and derived parameters", [] {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    struct Case {
      Signature sig;
      DerivedParams expected;
    };
    const Case cases[] = {
        {{3, 0, 7, 15}, {3, 22, 3, 11, 0, 0}},
        {{4, 0, 3, 18}, {4, 21, 5, 10, 1, 1}},
        {{5, 0, 11, 9}, {5, 20, 5, 10, 2, 0}},
    };
    for (const Case& c : cases) {
      const DerivedParams d = derive_params(c.sig);
      o.require(d.m == c.expected.m && d.n == c.expected.n &&
                    d.M == c.expected.M && d.N == c.expected.N &&
                    d.t == c.expected.t,
                "derived parameters of " + to_string(c.sig));
    }
    const char* names[] = {"Cl(3,0|7,15)", "Cl(4,0|3,18)", "Cl(5,0|11,9)"};
    const bool expected_iso[3][3] = {
        {true, false, false}, {false, true, true}, {false, true, true}};
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) {
        int code = -1;
        const auto j = run_cli({"iso", names[a], names[b], "--json"}, code);
        o.require(code == 0, "iso exit code");
        o.require(j["isomorphic"] == expected_iso[a][b],
                  std::string("iso ") + names[a] + " " + names[b]);
        const auto& params = j["results"][0]["params"];
        const DerivedParams& e = cases[a].expected;
        o.require(params["m"] == e.m && params["n"] == e.n && params["M"] == e.M &&
                      params["N"] == e.N && params["t"] == e.t,
                  std::string("reported parameters of ") + names[a]);
      }
    }
    o.require(classify({4, 0, 3, 18}).type == AlgebraType::IV &&
                  classify({5, 0, 11, 9}).type == AlgebraType::IV,
              "both isomorphic algebras are type IV");
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    o.require(seconds < 1.0, "runtime above 1 s");
    return o;
  });

  criterion(2, "type table agrees with brute-force invariants, r+s+p+q <= 10", [] {
    Outcome o;
    long long count = 0;
    for_each_signature(10, [&](const Signature& sig) {
      ++count;
      o.require(profile_to_label(brute_profile(sig)) == classify(sig),
                "disagreement at " + to_string(sig));
    });
    long long expected = 0;
    for (int k = 0; k <= 10; ++k) expected += xcl::testing::signatures_with(k);
    o.require(count == expected && count == 1001,
              "swept " + std::to_string(count) + " signatures");
    if (o.pass) o.detail = std::to_string(count) + " signatures";
    return o;
  });

  criterion(3, "Cartan decomposition of Cl(p,q), p+q <= 8", [] {
    Outcome o;
    for (int p = 0; p <= 8; ++p) {
      for (int q = 0; p + q <= 8; ++q) {
        const int n = p + q;
        const int t = ((p - q) % 8 + 8) % 8;
        // The five lines, written out per residue.
        CanonicalDecomposition expected;
        if (t == 0 || t == 2) {
          expected = {n / 2, false, OddFactor::None, 0};
        } else if (t == 4 || t == 6) {
          expected = {(n - 2) / 2, true, OddFactor::None, 0};
        } else if (t == 3 || t == 7) {
          expected = {(n - 1) / 2, false, OddFactor::Cl01Power, 1};
        } else if (t == 1) {
          expected = {(n - 1) / 2, false, OddFactor::Cl10Power, 1};
        } else {
          expected = {(n - 3) / 2, true, OddFactor::Cl10Power, 1};
        }
        const CanonicalDecomposition got = cartan_decompose(p, q);
        const std::string where = "Cl(" + std::to_string(p) + "," +
                                  std::to_string(q) + ")";
        o.require(got == expected, "case split at " + where);
        o.require(brute_profile(Signature::clifford(p, q)) ==
                      brute_profile(tensor_brute_system(got.factors())),
                  "profile of decomposition at " + where);
      }
    }
    return o;
  });

  criterion(4, "complexified algebras Cl(0,1|p,n-p) coincide, n <= 6", [] {
    Outcome o;
    for (int n = 0; n <= 6; ++n) {
      const Signature first{0, 1, 0, n};
      const ClassLabel label = classify(first);
      const InvariantProfile prof = brute_profile(first);
      for (int p = 0; p <= n; ++p) {
        const Signature sig{0, 1, p, n - p};
        o.require(classify(sig) == label, "label at " + to_string(sig));
        o.require(brute_profile(sig) == prof, "profile at " + to_string(sig));
      }
    }
    return o;
  });

  criterion(5, "tensor profiles multiply, 200 random pairs up to 10 generators", [] {
    Outcome o;
    xcl::testing::SplitMix rng(20240601);
    int pairs = 0;
    while (pairs < 200) {
      const Signature a{rng.uniform(0, 3), rng.uniform(0, 3), rng.uniform(0, 5),
                        rng.uniform(0, 5)};
      const Signature b{rng.uniform(0, 3), rng.uniform(0, 3), rng.uniform(0, 5),
                        rng.uniform(0, 5)};
      if (a.generators() + b.generators() > 10) continue;
      ++pairs;
      const InvariantProfile brute = brute_profile(tensor_brute_system({a, b}));
      const std::string where = to_string(a) + " * " + to_string(b);
      o.require(tensor_profile({a, b}) == brute, "tensor_profile at " + where);
      const InvariantProfile pa = brute_profile(a);
      const InvariantProfile pb = brute_profile(b);
      o.require(brute.log2_dim == pa.log2_dim + pb.log2_dim &&
                    brute.log2_center == pa.log2_center + pb.log2_center &&
                    brute.trace_sig == pa.trace_sig * pb.trace_sig,
                "componentwise combination at " + where);
    }
    return o;
  });

  criterion(6, "center has 2^M blades, r+s+p+q <= 12", [] {
    Outcome o;
    long long count = 0;
    for_each_signature(12, [&](const Signature& sig) {
      ++count;
      const auto center = center_basis(GeneratorSystem::from_signature(sig));
      o.require(center.size() == (std::size_t{1} << derive_params(sig).M),
                "center size at " + to_string(sig));
    });
    if (o.pass) o.detail = std::to_string(count) + " signatures";
    return o;
  });

  criterion(7, "representation relations: canonical M+2N <= 8, regular k <= 10", [] {
    Outcome o;
    int canonical = 0;
    for (AlgebraType t : kTypes) {
      for (int M = 0; M <= 8; ++M) {
        for (int N = 0; M + 2 * N <= 8; ++N) {
          const ClassLabel label{t, M, N};
          if (!label.valid()) continue;
          ++canonical;
          o.require(verify_relations(canonical_rep(label)),
                    "canonical_rep of " + to_string(label));
        }
      }
    }
    int regular = 0;
    for_each_signature(10, [&](const Signature& sig) {
      ++regular;
      o.require(verify_relations(regular_rep(GeneratorSystem::from_signature(sig))),
                "regular_rep of " + to_string(sig));
    });
    if (o.pass) {
      o.detail = std::to_string(canonical) + " canonical, " +
                 std::to_string(regular) + " regular";
    }
    return o;
  });

  criterion(8, "round trips: canonical signatures M,N <= 6 and 50 expressions", [] {
    Outcome o;
    for (AlgebraType t : kTypes) {
      for (int M = 0; M <= 6; ++M) {
        for (int N = 0; N <= 6; ++N) {
          const ClassLabel label{t, M, N};
          if (!label.valid()) continue;
          for (bool pure : {false, true}) {
            o.require(classify(canonical_signature(label, pure)) == label,
                      "canonical_signature of " + to_string(label));
          }
        }
      }
    }
    const auto& corpus = xcl::testing::expression_corpus();
    o.require(corpus.size() == 50, "corpus size");
    for (const std::string& text : corpus) {
      const AlgebraExpr tree = parse(text);
      o.require(parse(print(tree)) == tree, "parse/print of " + text);
    }
    return o;
  });

  std::printf("%s: %d criteria failed\n", failures == 0 ? "ALL PASS" : "FAILED",
              failures);
  return failures == 0 ? 0 : 1;
}
