#pragma once

// Signatures Cl(r,s|p,q) = K(r,s) (x) Cl(p,q), their derived parameters,
// the five-type table and the isomorphism decision built on it.

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace xcl {

/// The quadruple naming Cl(r,s|p,q): r commuting generators squaring to +1,
/// s commuting squaring to -1, p anticommuting squaring to +1, q anticommuting
/// squaring to -1.
struct Signature {
  int r = 0;
  int s = 0;
  int p = 0;
  int q = 0;

  /// Throws InvalidArgument when a field is negative.
  static Signature make(int r, int s, int p, int q);
  static Signature clifford(int p, int q) { return make(0, 0, p, q); }
  static Signature commutative(int r, int s) { return make(r, s, 0, 0); }

  int generators() const { return r + s + p + q; }

  friend auto operator<=>(const Signature&, const Signature&) = default;
};

std::string to_string(const Signature& sig);

struct DerivedParams {
  int m = 0;
  int n = 0;
  int M = 0;
  int N = 0;
  int t = 0;      // (p - q) mod 8, always in 0..7
  int sigma = 0;  // parity of n

  friend bool operator==(const DerivedParams&, const DerivedParams&) = default;
};

enum class AlgebraType : std::uint8_t { I = 1, II, III, IV, V };

std::string to_string(AlgebraType type);

struct ClassLabel {
  AlgebraType type = AlgebraType::I;
  int M = 0;
  int N = 0;

  /// M = 0 exactly for types I and II; N >= 1 for types II and V.
  bool valid() const;

  friend bool operator==(const ClassLabel&, const ClassLabel&) = default;
};

std::string to_string(const ClassLabel& label);

enum class OddFactor : std::uint8_t { None, Cl10Power, Cl01Power };

/// One of the shapes
///   Cl(1,0)^a or Cl(0,1)^a, then optionally Cl(0,2), then Cl(1,1)^b.
/// Empty powers are the one-dimensional algebra R.
struct CanonicalDecomposition {
  int count_11 = 0;
  bool has_02 = false;
  OddFactor odd_factor = OddFactor::None;
  int odd_count = 0;

  /// The factors in order (odd factors first, then Cl(0,2), then Cl(1,1)).
  /// The empty decomposition yields an empty list.
  std::vector<Signature> factors() const;

  friend bool operator==(const CanonicalDecomposition&,
                         const CanonicalDecomposition&) = default;
};

std::string to_string(const CanonicalDecomposition& d);

DerivedParams derive_params(const Signature& sig);

ClassLabel classify(const Signature& sig);

/// The Cartan-Bott decomposition of Cl(p,q), keyed on (p - q) mod 8.
CanonicalDecomposition cartan_decompose(int p, int q);

/// The type-list shape of a label: I -> Cl(1,1)^N, II -> Cl(0,2) Cl(1,1)^(N-1),
/// III -> Cl(0,1)^M Cl(1,1)^N, IV -> Cl(1,0)^M Cl(1,1)^N,
/// V -> Cl(1,0)^M Cl(0,2) Cl(1,1)^(N-1). Throws InvalidLabel.
CanonicalDecomposition type_decomposition(const ClassLabel& label);

bool is_isomorphic(const Signature& a, const Signature& b);

/// A fixed representative with classify(canonical_signature(L)) == L.
/// With prefer_pure_clifford and M <= 1 the result has r = s = 0.
/// Throws InvalidLabel.
Signature canonical_signature(const ClassLabel& label,
                              bool prefer_pure_clifford = false);

struct KReduction {
  OddFactor factor = OddFactor::None;  // Cl10Power or Cl01Power
  int count = 0;

  friend bool operator==(const KReduction&, const KReduction&) = default;
};

/// K(r,s) is Cl(1,0)^(r+s) when s = 0 and Cl(0,1)^(r+s) otherwise.
/// Throws EmptyInput for r = s = 0.
KReduction k_reduction(int r, int s);

}  // namespace xcl
