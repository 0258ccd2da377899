#pragma once

// Exact arithmetic in quasi-Clifford algebras: generators with squares +-1
// and an arbitrary symmetric commute/anticommute pattern. Blades are bit
// masks over generator indices, ordered by increasing index.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <vector>

#include "xcl/classify.hpp"

namespace xcl {

using Blade = std::uint32_t;

/// Hard limit on generators so that blades fit a 32-bit mask.
inline constexpr int kMaxGenerators = 30;
inline constexpr int kStructureConstantCap = 12;

class GeneratorSystem {
 public:
  GeneratorSystem() = default;

  /// squares[a] in {+1,-1}; eps is k x k, symmetric, unit diagonal, entries
  /// +1 (commute) or -1 (anticommute). Throws InvalidArgument otherwise.
  GeneratorSystem(std::vector<int> squares,
                  const std::vector<std::vector<int>>& eps);

  /// The r+s commuting generators first, then the p+q anticommuting ones.
  static GeneratorSystem from_signature(const Signature& sig);

  /// Block-diagonal combination: generators of different systems commute.
  static GeneratorSystem tensor(std::span<const GeneratorSystem> systems);

  int count() const { return static_cast<int>(squares_.size()); }
  int square(int a) const { return squares_[a]; }
  int eps(int a, int b) const { return (anti_[a] >> b) & 1U ? -1 : 1; }
  /// Mask of generators anticommuting with generator a.
  Blade anticommuting(int a) const { return anti_[a]; }
  /// Mask of generators whose square is -1.
  Blade negative_squares() const { return negative_; }
  std::uint64_t blade_count() const { return std::uint64_t{1} << count(); }

  friend bool operator==(const GeneratorSystem&,
                         const GeneratorSystem&) = default;

 private:
  std::vector<int> squares_;
  std::vector<Blade> anti_;
  Blade negative_ = 0;
};

struct SignedBlade {
  int sign = 1;
  Blade blade = 0;

  friend bool operator==(const SignedBlade&, const SignedBlade&) = default;
};

/// e_A e_B = sign * e_(A xor B).
SignedBlade blade_product(const GeneratorSystem& sys, Blade a, Blade b);

/// Closed-form sign of e_A^2 for two-block systems (every generator is either
/// central or anticommutes with all other non-central generators).
/// Throws UnsupportedSystem for other systems.
int blade_square_sign(const GeneratorSystem& sys, Blade a);

bool is_two_block(const GeneratorSystem& sys);

/// Blades commuting with every generator.
std::vector<Blade> center_basis(const GeneratorSystem& sys);

class StructureConstants {
 public:
  /// Throws TooLarge beyond `cap` generators.
  explicit StructureConstants(const GeneratorSystem& sys,
                              int cap = kStructureConstantCap);

  std::size_t size() const { return size_; }
  const SignedBlade& at(Blade a, Blade b) const { return table_[a * size_ + b]; }

  /// Rows "A B sign C" with blades as sorted index lists, e.g. "[0,2] [2] + [0]".
  void write_text(std::ostream& os) const;
  /// {"generators":k,"entries":[[A,B,sign,C],...]} with blades as index arrays.
  void write_json(std::ostream& os) const;

 private:
  std::size_t size_ = 1;
  std::vector<SignedBlade> table_;
};

std::vector<int> blade_indices(Blade b);

using Coefficient = std::int64_t;

/// Exact integer linear combination of blades with no stored zeros.
class Multivector {
 public:
  Multivector() = default;
  static Multivector scalar(Coefficient c) { return blade(0, c); }
  static Multivector blade(Blade b, Coefficient c = 1);

  const std::map<Blade, Coefficient>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Coefficient coefficient(Blade b) const;

  void add_term(Blade b, Coefficient c);

  Multivector operator-() const;
  friend Multivector operator+(const Multivector& x, const Multivector& y);
  friend Multivector operator-(const Multivector& x, const Multivector& y);
  friend bool operator==(const Multivector&, const Multivector&) = default;

 private:
  std::map<Blade, Coefficient> terms_;
};

Multivector mv_add(const Multivector& x, const Multivector& y);
Multivector mv_multiply(const GeneratorSystem& sys, const Multivector& x,
                        const Multivector& y);

}  // namespace xcl
