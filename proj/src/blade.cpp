#include "xcl/blade.hpp"

#include <bit>
#include <ostream>

#include "xcl/error.hpp"

namespace xcl {

GeneratorSystem::GeneratorSystem(std::vector<int> squares,
                                 const std::vector<std::vector<int>>& eps)
    : squares_(std::move(squares)) {
  const std::size_t k = squares_.size();
  if (k > static_cast<std::size_t>(kMaxGenerators)) {
    throw Error(ErrorKind::TooLarge, "too many generators");
  }
  if (eps.size() != k) {
    throw Error(ErrorKind::InvalidArgument, "eps must be k x k");
  }
  anti_.assign(k, 0);
  for (std::size_t a = 0; a < k; ++a) {
    if (squares_[a] != 1 && squares_[a] != -1) {
      throw Error(ErrorKind::InvalidArgument, "generator squares must be +-1");
    }
    if (squares_[a] == -1) negative_ |= Blade{1} << a;
    if (eps[a].size() != k) {
      throw Error(ErrorKind::InvalidArgument, "eps must be k x k");
    }
    if (eps[a][a] != 1) {
      throw Error(ErrorKind::InvalidArgument, "eps must have unit diagonal");
    }
    for (std::size_t b = 0; b < k; ++b) {
      const int e = eps[a][b];
      if ((e != 1 && e != -1) || e != eps[b][a]) {
        throw Error(ErrorKind::InvalidArgument,
                    "eps must be symmetric with entries +-1");
      }
      if (e == -1) anti_[a] |= Blade{1} << b;
    }
  }
}

GeneratorSystem GeneratorSystem::from_signature(const Signature& sig) {
  const int m = sig.r + sig.s;
  const int k = sig.generators();
  if (k > kMaxGenerators) {
    throw Error(ErrorKind::TooLarge, "too many generators");
  }
  std::vector<int> squares(k, 1);
  for (int a = sig.r; a < m; ++a) squares[a] = -1;
  for (int a = m + sig.p; a < k; ++a) squares[a] = -1;
  std::vector<std::vector<int>> eps(k, std::vector<int>(k, 1));
  for (int a = m; a < k; ++a) {
    for (int b = m; b < k; ++b) {
      if (a != b) eps[a][b] = -1;
    }
  }
  return GeneratorSystem(std::move(squares), eps);
}

GeneratorSystem GeneratorSystem::tensor(
    std::span<const GeneratorSystem> systems) {
  int total = 0;
  for (const auto& s : systems) total += s.count();
  if (total > kMaxGenerators) {
    throw Error(ErrorKind::TooLarge, "too many generators");
  }
  GeneratorSystem out;
  int offset = 0;
  for (const auto& s : systems) {
    for (int a = 0; a < s.count(); ++a) {
      out.squares_.push_back(s.squares_[a]);
      out.anti_.push_back(s.anti_[a] << offset);
    }
    out.negative_ |= s.negative_ << offset;
    offset += s.count();
  }
  return out;
}

SignedBlade blade_product(const GeneratorSystem& sys, Blade a, Blade b) {
  // Moving generator j of B left past every i in A with i > j costs eps[i][j];
  // each shared generator then contracts to its square.
  int swaps = 0;
  for (Blade rest = b; rest != 0; rest &= rest - 1) {
    const int j = std::countr_zero(rest);
    const Blade above = ~((Blade{2} << j) - 1);
    swaps += std::popcount(a & above & sys.anticommuting(j));
  }
  swaps += std::popcount(a & b & sys.negative_squares());
  return SignedBlade{(swaps & 1) ? -1 : 1, a ^ b};
}

bool is_two_block(const GeneratorSystem& sys) {
  Blade noncentral = 0;
  for (int a = 0; a < sys.count(); ++a) {
    if (sys.anticommuting(a) != 0) noncentral |= Blade{1} << a;
  }
  for (int a = 0; a < sys.count(); ++a) {
    const Blade bit = Blade{1} << a;
    if ((noncentral & bit) && sys.anticommuting(a) != (noncentral & ~bit)) {
      return false;
    }
  }
  return true;
}

int blade_square_sign(const GeneratorSystem& sys, Blade a) {
  if (!is_two_block(sys)) {
    throw Error(ErrorKind::UnsupportedSystem,
                "closed-form square sign needs a two-block system");
  }
  Blade noncentral = 0;
  for (int g = 0; g < sys.count(); ++g) {
    if (sys.anticommuting(g) != 0) noncentral |= Blade{1} << g;
  }
  // A lone anticommuting generator (n = 1) is central; it contributes no
  // transpositions either way.
  const int k = std::popcount(a & noncentral);
  int parity = (k * (k - 1) / 2) & 1;
  parity ^= std::popcount(a & sys.negative_squares()) & 1;
  return parity ? -1 : 1;
}

std::vector<Blade> center_basis(const GeneratorSystem& sys) {
  std::vector<Blade> out;
  const std::uint64_t total = sys.blade_count();
  for (std::uint64_t i = 0; i < total; ++i) {
    const Blade a = static_cast<Blade>(i);
    bool central = true;
    for (int g = 0; g < sys.count() && central; ++g) {
      // g e_A = (-1)^c e_A g with c the number of members of A (other than g)
      // anticommuting with g.
      central = (std::popcount(a & sys.anticommuting(g)) & 1) == 0;
    }
    if (central) out.push_back(a);
  }
  return out;
}

std::vector<int> blade_indices(Blade b) {
  std::vector<int> out;
  for (; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

StructureConstants::StructureConstants(const GeneratorSystem& sys, int cap) {
  if (sys.count() > cap) {
    throw Error(ErrorKind::TooLarge, "structure-constant table beyond cap");
  }
  size_ = static_cast<std::size_t>(sys.blade_count());
  table_.resize(size_ * size_);
  for (std::size_t a = 0; a < size_; ++a) {
    for (std::size_t b = 0; b < size_; ++b) {
      table_[a * size_ + b] =
          blade_product(sys, static_cast<Blade>(a), static_cast<Blade>(b));
    }
  }
}

namespace {

void write_indices(std::ostream& os, Blade b) {
  os << '[';
  bool first = true;
  for (int i : blade_indices(b)) {
    if (!first) os << ',';
    os << i;
    first = false;
  }
  os << ']';
}

}  // namespace

void StructureConstants::write_text(std::ostream& os) const {
  for (std::size_t a = 0; a < size_; ++a) {
    for (std::size_t b = 0; b < size_; ++b) {
      const SignedBlade& e = at(static_cast<Blade>(a), static_cast<Blade>(b));
      write_indices(os, static_cast<Blade>(a));
      os << ' ';
      write_indices(os, static_cast<Blade>(b));
      os << ' ' << (e.sign > 0 ? '+' : '-') << ' ';
      write_indices(os, e.blade);
      os << '\n';
    }
  }
}

void StructureConstants::write_json(std::ostream& os) const {
  os << "{\"generators\":" << std::countr_zero(size_) << ",\"entries\":[";
  for (std::size_t a = 0; a < size_; ++a) {
    for (std::size_t b = 0; b < size_; ++b) {
      const SignedBlade& e = at(static_cast<Blade>(a), static_cast<Blade>(b));
      if (a != 0 || b != 0) os << ',';
      os << '[';
      write_indices(os, static_cast<Blade>(a));
      os << ',';
      write_indices(os, static_cast<Blade>(b));
      os << ',' << e.sign << ',';
      write_indices(os, e.blade);
      os << ']';
    }
  }
  os << "]}";
}

Multivector Multivector::blade(Blade b, Coefficient c) {
  Multivector out;
  out.add_term(b, c);
  return out;
}

Coefficient Multivector::coefficient(Blade b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? 0 : it->second;
}

void Multivector::add_term(Blade b, Coefficient c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(b, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Multivector Multivector::operator-() const {
  Multivector out = *this;
  for (auto& [b, c] : out.terms_) c = -c;
  return out;
}

Multivector operator+(const Multivector& x, const Multivector& y) {
  Multivector out = x;
  for (const auto& [b, c] : y.terms_) out.add_term(b, c);
  return out;
}

Multivector operator-(const Multivector& x, const Multivector& y) {
  return x + (-y);
}

Multivector mv_add(const Multivector& x, const Multivector& y) {
  return x + y;
}

Multivector mv_multiply(const GeneratorSystem& sys, const Multivector& x,
                        const Multivector& y) {
  Multivector out;
  for (const auto& [a, ca] : x.terms()) {
    for (const auto& [b, cb] : y.terms()) {
      const SignedBlade e = blade_product(sys, a, b);
      out.add_term(e.blade, e.sign * ca * cb);
    }
  }
  return out;
}

}  // namespace xcl
