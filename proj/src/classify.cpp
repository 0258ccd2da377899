#include "xcl/classify.hpp"

#include <sstream>

#include "xcl/error.hpp"

namespace xcl {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::InvalidLabel: return "invalid-label";
    case ErrorKind::EmptyInput: return "empty-input";
    case ErrorKind::UnsupportedSystem: return "unsupported-system";
    case ErrorKind::TooLarge: return "too-large";
    case ErrorKind::InconsistentProfile: return "inconsistent-profile";
    case ErrorKind::SyntaxError: return "syntax-error";
  }
  return "unknown";
}

Signature Signature::make(int r, int s, int p, int q) {
  if (r < 0 || s < 0 || p < 0 || q < 0) {
    throw Error(ErrorKind::InvalidArgument,
                "signature fields must be nonnegative");
  }
  return Signature{r, s, p, q};
}

std::string to_string(const Signature& sig) {
  std::ostringstream os;
  os << "Cl(" << sig.r << ',' << sig.s << '|' << sig.p << ',' << sig.q << ')';
  return os.str();
}

std::string to_string(AlgebraType type) {
  switch (type) {
    case AlgebraType::I: return "I";
    case AlgebraType::II: return "II";
    case AlgebraType::III: return "III";
    case AlgebraType::IV: return "IV";
    case AlgebraType::V: return "V";
  }
  return "?";
}

bool ClassLabel::valid() const {
  if (M < 0 || N < 0) return false;
  switch (type) {
    case AlgebraType::I: return M == 0;
    case AlgebraType::II: return M == 0 && N >= 1;
    case AlgebraType::III:
    case AlgebraType::IV: return M >= 1;
    case AlgebraType::V: return M >= 1 && N >= 1;
  }
  return false;
}

std::string to_string(const ClassLabel& label) {
  std::ostringstream os;
  os << '(' << to_string(label.type) << ", M=" << label.M << ", N=" << label.N
     << ')';
  return os.str();
}

std::vector<Signature> CanonicalDecomposition::factors() const {
  std::vector<Signature> out;
  const Signature odd = odd_factor == OddFactor::Cl10Power
                            ? Signature::clifford(1, 0)
                            : Signature::clifford(0, 1);
  if (odd_factor != OddFactor::None) out.insert(out.end(), odd_count, odd);
  if (has_02) out.push_back(Signature::clifford(0, 2));
  out.insert(out.end(), count_11, Signature::clifford(1, 1));
  return out;
}

std::string to_string(const CanonicalDecomposition& d) {
  std::ostringstream os;
  bool first = true;
  auto sep = [&] {
    if (!first) os << " * ";
    first = false;
  };
  if (d.odd_factor != OddFactor::None && d.odd_count > 0) {
    sep();
    os << (d.odd_factor == OddFactor::Cl10Power ? "Cl(1,0)" : "Cl(0,1)");
    if (d.odd_count != 1) os << '^' << d.odd_count;
  }
  if (d.has_02) {
    sep();
    os << "Cl(0,2)";
  }
  if (d.count_11 > 0) {
    sep();
    os << "Cl(1,1)";
    if (d.count_11 != 1) os << '^' << d.count_11;
  }
  if (first) os << 'R';
  return os.str();
}

DerivedParams derive_params(const Signature& sig) {
  DerivedParams d;
  d.m = sig.r + sig.s;
  d.n = sig.p + sig.q;
  d.N = d.n / 2;
  d.sigma = d.n - 2 * d.N;
  d.M = d.m + d.sigma;
  d.t = ((sig.p - sig.q) % 8 + 8) % 8;
  return d;
}

ClassLabel classify(const Signature& sig) {
  const DerivedParams d = derive_params(sig);
  AlgebraType type = AlgebraType::III;
  if (sig.s >= 1) {
    type = AlgebraType::III;
  } else {
    switch (d.t) {
      case 0:
      case 2: type = sig.r == 0 ? AlgebraType::I : AlgebraType::IV; break;
      case 4:
      case 6: type = sig.r == 0 ? AlgebraType::II : AlgebraType::V; break;
      case 3:
      case 7: type = AlgebraType::III; break;
      case 1: type = AlgebraType::IV; break;
      case 5: type = AlgebraType::V; break;
    }
  }
  return ClassLabel{type, d.M, d.N};
}

CanonicalDecomposition cartan_decompose(int p, int q) {
  if (p < 0 || q < 0) {
    throw Error(ErrorKind::InvalidArgument, "p and q must be nonnegative");
  }
  const int n = p + q;
  const int t = ((p - q) % 8 + 8) % 8;
  CanonicalDecomposition d;
  switch (t) {
    case 0:
    case 2: d.count_11 = n / 2; break;
    case 4:
    case 6:
      d.has_02 = true;
      d.count_11 = (n - 2) / 2;
      break;
    case 3:
    case 7:
      d.odd_factor = OddFactor::Cl01Power;
      d.odd_count = 1;
      d.count_11 = (n - 1) / 2;
      break;
    case 1:
      d.odd_factor = OddFactor::Cl10Power;
      d.odd_count = 1;
      d.count_11 = (n - 1) / 2;
      break;
    case 5:
      d.odd_factor = OddFactor::Cl10Power;
      d.odd_count = 1;
      d.has_02 = true;
      d.count_11 = (n - 3) / 2;
      break;
  }
  return d;
}

namespace {

void require_valid(const ClassLabel& label) {
  if (!label.valid()) {
    throw Error(ErrorKind::InvalidLabel,
                "label violates its type invariants: " + to_string(label));
  }
}

}  // namespace

CanonicalDecomposition type_decomposition(const ClassLabel& label) {
  require_valid(label);
  CanonicalDecomposition d;
  switch (label.type) {
    case AlgebraType::I: d.count_11 = label.N; break;
    case AlgebraType::II:
      d.has_02 = true;
      d.count_11 = label.N - 1;
      break;
    case AlgebraType::III:
      d.odd_factor = OddFactor::Cl01Power;
      d.odd_count = label.M;
      d.count_11 = label.N;
      break;
    case AlgebraType::IV:
      d.odd_factor = OddFactor::Cl10Power;
      d.odd_count = label.M;
      d.count_11 = label.N;
      break;
    case AlgebraType::V:
      d.odd_factor = OddFactor::Cl10Power;
      d.odd_count = label.M;
      d.has_02 = true;
      d.count_11 = label.N - 1;
      break;
  }
  return d;
}

bool is_isomorphic(const Signature& a, const Signature& b) {
  return classify(a) == classify(b);
}

Signature canonical_signature(const ClassLabel& label,
                              bool prefer_pure_clifford) {
  require_valid(label);
  const int M = label.M;
  const int N = label.N;
  if (prefer_pure_clifford && M == 1) {
    switch (label.type) {
      case AlgebraType::III: return Signature{0, 0, N, N + 1};
      case AlgebraType::IV: return Signature{0, 0, N + 1, N};
      case AlgebraType::V: return Signature{0, 0, N - 1, N + 2};
      default: break;
    }
  }
  switch (label.type) {
    case AlgebraType::I: return Signature{0, 0, N, N};
    case AlgebraType::II: return Signature{0, 0, N - 1, N + 1};
    case AlgebraType::III: return Signature{0, M - 1, N, N + 1};
    case AlgebraType::IV: return Signature{M, 0, N, N};
    case AlgebraType::V: return Signature{M, 0, N - 1, N + 1};
  }
  return {};
}

KReduction k_reduction(int r, int s) {
  if (r < 0 || s < 0) {
    throw Error(ErrorKind::InvalidArgument, "r and s must be nonnegative");
  }
  if (r + s == 0) {
    throw Error(ErrorKind::EmptyInput, "K(0,0) has no generators to reduce");
  }
  return KReduction{s == 0 ? OddFactor::Cl10Power : OddFactor::Cl01Power,
                    r + s};
}

}  // namespace xcl
