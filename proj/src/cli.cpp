#include "xcl/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <json.hpp>
#include <ostream>

#include "xcl/blade.hpp"
#include "xcl/classify.hpp"
#include "xcl/error.hpp"
#include "xcl/expr.hpp"
#include "xcl/matrix.hpp"
#include "xcl/oracle.hpp"
#include "xcl/tensor.hpp"

namespace xcl::cli {
namespace {

using json = nlohmann::ordered_json;

constexpr int kSelftestCap = 16;

json to_json(const Signature& s) {
  return {{"r", s.r}, {"s", s.s}, {"p", s.p}, {"q", s.q}};
}

json to_json(const ClassLabel& l) {
  return {{"type", to_string(l.type)}, {"M", l.M}, {"N", l.N}};
}

json to_json(const TraceSignature& t) {
  if (auto v = t.to_integer()) return *v;
  return to_string(t);
}

json to_json(const InvariantProfile& p) {
  return {{"log2_dim", p.log2_dim},
          {"log2_center", p.log2_center},
          {"trace_sig", to_json(p.trace_sig)}};
}

json to_json(const DerivedParams& d) {
  return {{"m", d.m}, {"n", d.n},   {"M", d.M},
          {"N", d.N}, {"t", d.t}, {"sigma", d.sigma}};
}

json to_json(const CanonicalDecomposition& d) {
  const char* odd = d.odd_factor == OddFactor::Cl10Power   ? "Cl(1,0)"
                    : d.odd_factor == OddFactor::Cl01Power ? "Cl(0,1)"
                                                           : "none";
  return {{"count_11", d.count_11},
          {"has_02", d.has_02},
          {"odd_factor", odd},
          {"odd_count", d.odd_count},
          {"text", to_string(d)}};
}

struct Analysis {
  std::string input;
  AlgebraExpr expr;
  TensorList factors;
  ClassLabel label;
  InvariantProfile profile;
};

Analysis analyze(const std::string& input) {
  Analysis a;
  a.input = input;
  a.expr = parse(input);
  a.factors = flatten(a.expr);
  a.profile = tensor_profile(a.factors);
  a.label = tensor_classify(a.factors);
  return a;
}

const Signature* single_atom(const Analysis& a) {
  return std::get_if<Signature>(&a.expr.node);
}

json analysis_json(const Analysis& a, bool pure) {
  json j;
  j["input"] = a.input;
  j["parsed"] = print(a.expr);
  j["class"] = to_json(a.label);
  j["canonical"] = to_json(canonical_signature(a.label, pure));
  j["profile"] = to_json(a.profile);
  if (const Signature* s = single_atom(a)) {
    j["params"] = to_json(derive_params(*s));
  }
  return j;
}

void print_analysis(std::ostream& out, const Analysis& a, bool pure) {
  out << "input:     " << print(a.expr) << '\n';
  if (const Signature* s = single_atom(a)) {
    const DerivedParams d = derive_params(*s);
    out << "params:    m=" << d.m << " n=" << d.n << " M=" << d.M
        << " N=" << d.N << " t=" << d.t << " sigma=" << d.sigma << '\n';
  }
  out << "class:     " << to_string(a.label) << '\n';
  out << "canonical: " << to_string(canonical_signature(a.label, pure)) << '\n';
  out << "shape:     " << to_string(type_decomposition(a.label)) << '\n';
  out << "profile:   " << to_string(a.profile) << '\n';
}

struct SelftestReport {
  json checks = json::array();
  long long passed = 0;
  long long failed = 0;

  template <class F>
  void run(const std::string& name, F&& body) {
    long long ok = 0;
    long long bad = 0;
    body(ok, bad);
    checks.push_back({{"check", name}, {"passed", ok}, {"failed", bad}});
    passed += ok;
    failed += bad;
  }
};

template <class F>
void for_each_signature(int max_generators, F&& f) {
  for (int k = 0; k <= max_generators; ++k) {
    for (int r = 0; r <= k; ++r) {
      for (int s = 0; r + s <= k; ++s) {
        for (int p = 0; r + s + p <= k; ++p) {
          f(Signature{r, s, p, k - r - s - p});
        }
      }
    }
  }
}

SelftestReport selftest(int max_generators) {
  SelftestReport report;
  const int k_max = max_generators;

  report.run("oracle agrees with type table", [&](long long& ok, long long& bad) {
    for_each_signature(k_max, [&](const Signature& sig) {
      const bool agree = profile_to_label(brute_profile(sig)) == classify(sig);
      (agree ? ok : bad)++;
    });
  });
  report.run("center dimension is 2^M", [&](long long& ok, long long& bad) {
    for_each_signature(k_max, [&](const Signature& sig) {
      const auto center = center_basis(GeneratorSystem::from_signature(sig));
      const bool agree =
          center.size() == (std::size_t{1} << derive_params(sig).M);
      (agree ? ok : bad)++;
    });
  });
  report.run("closed-form blade square signs", [&](long long& ok, long long& bad) {
    for_each_signature(std::min(k_max, 10), [&](const Signature& sig) {
      const auto sys = GeneratorSystem::from_signature(sig);
      bool agree = true;
      for (std::uint64_t a = 0; a < sys.blade_count() && agree; ++a) {
        const Blade b = static_cast<Blade>(a);
        agree = blade_square_sign(sys, b) == blade_product(sys, b, b).sign;
      }
      (agree ? ok : bad)++;
    });
  });
  report.run("canonical signature round trip", [&](long long& ok, long long& bad) {
    const AlgebraType types[] = {AlgebraType::I, AlgebraType::II,
                                 AlgebraType::III, AlgebraType::IV,
                                 AlgebraType::V};
    for (AlgebraType t : types) {
      for (int M = 0; M <= k_max; ++M) {
        for (int N = 0; M + 2 * N <= k_max; ++N) {
          const ClassLabel label{t, M, N};
          if (!label.valid()) continue;
          for (bool pure : {false, true}) {
            const bool agree =
                classify(canonical_signature(label, pure)) == label &&
                profile_to_label(predicted_profile(label)) == label;
            (agree ? ok : bad)++;
          }
        }
      }
    }
  });
  report.run("canonical representation relations",
             [&](long long& ok, long long& bad) {
               const AlgebraType types[] = {AlgebraType::I, AlgebraType::II,
                                            AlgebraType::III, AlgebraType::IV,
                                            AlgebraType::V};
               const int limit = std::min(k_max, 8);
               for (AlgebraType t : types) {
                 for (int M = 0; M <= limit; ++M) {
                   for (int N = 0; M + 2 * N <= limit; ++N) {
                     const ClassLabel label{t, M, N};
                     if (!label.valid()) continue;
                     (verify_relations(canonical_rep(label)) ? ok : bad)++;
                   }
                 }
               }
             });
  report.run("regular representation relations",
             [&](long long& ok, long long& bad) {
               for_each_signature(std::min(k_max, 6), [&](const Signature& sig) {
                 const auto reps =
                     regular_rep(GeneratorSystem::from_signature(sig));
                 (verify_relations(reps) ? ok : bad)++;
               });
             });
  return report;
}

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(const std::vector<std::string>& args);

 private:
  void emit(const json& j) { out_ << j.dump(2) << '\n'; }

  int cmd_classify();
  int cmd_canon();
  int cmd_iso();
  int cmd_invariants();
  int cmd_decompose();
  int cmd_rep();
  int cmd_table();
  int cmd_selftest();

  std::ostream& out_;
  std::ostream& err_;

  bool json_ = false;
  bool pure_ = false;
  bool brute_ = false;
  bool regular_ = false;
  int workers_ = 1;
  int max_generators_ = 8;
  int p_ = 0;
  int q_ = 0;
  std::string expr_;
  std::string expr2_;
  std::string current_input_;

  Analysis analyze(const std::string& input) {
    current_input_ = input;
    return cli::analyze(input);
  }
};

int Runner::cmd_classify() {
  const Analysis a = analyze(expr_);
  if (json_) {
    emit(analysis_json(a, false));
  } else {
    print_analysis(out_, a, false);
  }
  return kSuccess;
}

int Runner::cmd_canon() {
  const Analysis a = analyze(expr_);
  const Signature canon = canonical_signature(a.label, pure_);
  if (json_) {
    json j;
    j["input"] = a.input;
    j["class"] = to_json(a.label);
    j["canonical"] = to_json(canon);
    emit(j);
  } else {
    out_ << to_string(canon) << '\n';
  }
  return kSuccess;
}

int Runner::cmd_iso() {
  const Analysis a = analyze(expr_);
  const Analysis b = analyze(expr2_);
  const bool iso = a.label == b.label;
  if (json_) {
    json j;
    j["input"] = {a.input, b.input};
    j["isomorphic"] = iso;
    j["results"] = {analysis_json(a, false), analysis_json(b, false)};
    emit(j);
  } else {
    out_ << (iso ? "isomorphic" : "not isomorphic") << '\n';
    for (const Analysis* x : {&a, &b}) {
      out_ << '\n';
      print_analysis(out_, *x, false);
    }
  }
  return kSuccess;
}

int Runner::cmd_invariants() {
  const Analysis a = analyze(expr_);
  json j;
  j["input"] = a.input;
  j["class"] = to_json(a.label);
  j["predicted"] = to_json(a.profile);
  if (!json_) {
    out_ << "class:     " << to_string(a.label) << '\n';
    out_ << "predicted: " << to_string(a.profile) << '\n';
  }
  if (!brute_) {
    if (json_) emit(j);
    return kSuccess;
  }
  const GeneratorSystem sys = tensor_brute_system(a.factors);
  const InvariantProfile brute = brute_profile(sys, kTraceSweepCap, workers_);
  const bool agree = brute == a.profile;
  j["brute"] = to_json(brute);
  j["agreement"] = agree;
  if (json_) {
    emit(j);
  } else {
    out_ << "brute:     " << to_string(brute) << '\n';
    out_ << (agree ? "agreement" : "DISAGREEMENT") << '\n';
  }
  return agree ? kSuccess : kMismatch;
}

int Runner::cmd_decompose() {
  const CanonicalDecomposition d = cartan_decompose(p_, q_);
  const int t = ((p_ - q_) % 8 + 8) % 8;
  if (json_) {
    json j;
    j["input"] = {{"p", p_}, {"q", q_}};
    j["t"] = t;
    j["decomposition"] = to_json(d);
    emit(j);
  } else {
    out_ << "Cl(" << p_ << ',' << q_ << ") = " << to_string(d) << "   (t=" << t
         << ")\n";
  }
  return kSuccess;
}

int Runner::cmd_rep() {
  const Analysis a = analyze(expr_);
  const RepSet reps = regular_ ? regular_rep(tensor_brute_system(a.factors))
                               : canonical_rep(a.label);
  const bool ok = verify_relations(reps);
  if (json_) {
    json j;
    j["input"] = a.input;
    j["class"] = to_json(a.label);
    j["kind"] = regular_ ? "regular" : "canonical";
    j["dimension"] = reps.dimension;
    json gens = json::array();
    for (int g = 0; g < reps.system.count(); ++g) {
      gens.push_back({{"square", reps.system.square(g)},
                      {"matrix", reps.generators[g].to_dense()}});
    }
    j["generators"] = gens;
    j["relations_ok"] = ok;
    emit(j);
  } else {
    out_ << (regular_ ? "regular" : "canonical") << " representation of "
         << to_string(a.label) << ", dimension " << reps.dimension << '\n';
    for (int g = 0; g < reps.system.count(); ++g) {
      out_ << "\ngenerator " << g << " (square " << reps.system.square(g)
           << "):\n";
      for (const auto& row : reps.generators[g].to_dense()) {
        for (std::size_t c = 0; c < row.size(); ++c) {
          out_ << (c ? " " : "") << (row[c] < 0 ? "" : " ") << row[c];
        }
        out_ << '\n';
      }
    }
    out_ << "\nrelations: " << (ok ? "verified" : "FAILED") << '\n';
  }
  return ok ? kSuccess : kMismatch;
}

int Runner::cmd_table() {
  const Analysis a = analyze(expr_);
  const StructureConstants table(tensor_brute_system(a.factors));
  if (json_) {
    table.write_json(out_);
    out_ << '\n';
  } else {
    table.write_text(out_);
  }
  return kSuccess;
}

int Runner::cmd_selftest() {
  if (max_generators_ > kSelftestCap) {
    throw Error(ErrorKind::TooLarge,
                "selftest supports at most " + std::to_string(kSelftestCap) +
                    " generators");
  }
  const SelftestReport report = selftest(max_generators_);
  if (json_) {
    emit({{"max_generators", max_generators_},
          {"checks", report.checks},
          {"passed", report.passed},
          {"failed", report.failed}});
  } else {
    for (const auto& c : report.checks) {
      out_ << (c["failed"].get<long long>() == 0 ? "PASS " : "FAIL ")
           << c["check"].get<std::string>() << ": " << c["passed"] << " passed, "
           << c["failed"] << " failed\n";
    }
    out_ << "total: " << report.passed << " passed, " << report.failed
         << " failed\n";
  }
  return report.failed == 0 ? kSuccess : kMismatch;
}

int Runner::run(const std::vector<std::string>& args) {
  CLI::App app{"Classify extended Clifford algebras Cl(r,s|p,q)", "xcl"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", json_, "Emit JSON instead of text");

  auto* classify_cmd = app.add_subcommand("classify", "Type and (M,N) of an expression");
  classify_cmd->add_option("expr", expr_, "Algebra expression")->required();

  auto* canon_cmd = app.add_subcommand("canon", "Canonical Cl(r,s|p,q) representative");
  canon_cmd->add_option("expr", expr_, "Algebra expression")->required();
  canon_cmd->add_flag("--pure-clifford", pure_,
                      "Prefer Cl(0,0|p,q) when M <= 1");

  auto* iso_cmd = app.add_subcommand("iso", "Decide isomorphism of two expressions");
  iso_cmd->add_option("left", expr_, "First expression")->required();
  iso_cmd->add_option("right", expr2_, "Second expression")->required();

  auto* inv_cmd = app.add_subcommand("invariants", "Invariant profile (log2 dim, log2 center, trace signature)");
  inv_cmd->add_option("expr", expr_, "Algebra expression")->required();
  inv_cmd->add_flag("--brute", brute_, "Also compute the profile by blade enumeration");
  inv_cmd->add_option("--workers", workers_, "Threads for the brute-force sweep")
      ->check(CLI::Range(1, 256));

  auto* dec_cmd = app.add_subcommand("decompose", "Cartan-Bott decomposition of Cl(p,q)");
  dec_cmd->add_option("p", p_, "Generators squaring to +1")->required()->check(CLI::NonNegativeNumber);
  dec_cmd->add_option("q", q_, "Generators squaring to -1")->required()->check(CLI::NonNegativeNumber);

  auto* rep_cmd = app.add_subcommand("rep", "Integer matrix representation");
  rep_cmd->add_option("expr", expr_, "Algebra expression")->required();
  rep_cmd->add_flag("--regular", regular_, "Left-regular representation on blades");

  auto* table_cmd = app.add_subcommand("table", "Structure constants \"A B sign C\"");
  table_cmd->add_option("expr", expr_, "Algebra expression")->required();

  auto* self_cmd = app.add_subcommand("selftest", "Run the invariant sweeps");
  self_cmd->add_option("--max-generators", max_generators_, "Largest r+s+p+q to sweep")
      ->check(CLI::NonNegativeNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out_, err_);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    if (*classify_cmd) return cmd_classify();
    if (*canon_cmd) return cmd_canon();
    if (*iso_cmd) return cmd_iso();
    if (*inv_cmd) return cmd_invariants();
    if (*dec_cmd) return cmd_decompose();
    if (*rep_cmd) return cmd_rep();
    if (*table_cmd) return cmd_table();
    if (*self_cmd) return cmd_selftest();
  } catch (const ParseError& e) {
    err_ << "error: " << e.what() << '\n'
         << "  " << current_input_ << '\n'
         << "  " << std::string(e.offset(), ' ') << "^\n";
    return kUsage;
  } catch (const Error& e) {
    err_ << "error: " << e.what() << '\n';
    switch (e.kind()) {
      case ErrorKind::TooLarge: return kTooLarge;
      case ErrorKind::InconsistentProfile: return kMismatch;
      default: return kUsage;
    }
  }
  return kUsage;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  Runner runner(out, err);
  return runner.run(args);
}

}  // namespace xcl::cli
