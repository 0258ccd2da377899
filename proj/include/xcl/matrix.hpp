#pragma once

// Exact integer matrix representations: fixed base matrices for the building
// blocks Cl(1,1), Cl(1,0), Cl(0,1), Cl(0,2), Kronecker-built representations
// of the five type shapes, and left-regular representations of arbitrary
// generator systems.

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "xcl/blade.hpp"
#include "xcl/classify.hpp"

namespace xcl {

inline constexpr int kCanonicalRepDimensionCap = 1024;
inline constexpr int kRegularRepCap = 12;

/// Square integer matrix stored as sorted sparse rows. Generators of every
/// representation here are signed permutation matrices, so products stay
/// sparse.
class IntMatrix {
 public:
  struct Entry {
    int col;
    std::int64_t value;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  IntMatrix() = default;
  explicit IntMatrix(int dim) : rows_(dim) {}
  static IntMatrix identity(int dim, std::int64_t scale = 1);
  /// Throws InvalidArgument for a non-square input.
  static IntMatrix from_dense(const std::vector<std::vector<std::int64_t>>& rows);

  int dim() const { return static_cast<int>(rows_.size()); }
  std::int64_t at(int row, int col) const;
  void set(int row, int col, std::int64_t value);
  const std::vector<Entry>& row(int i) const { return rows_[i]; }
  std::int64_t trace() const;
  std::vector<std::vector<std::int64_t>> to_dense() const;

  IntMatrix operator*(const IntMatrix& other) const;
  IntMatrix operator*(std::int64_t scale) const;
  IntMatrix operator+(const IntMatrix& other) const;
  IntMatrix operator-(const IntMatrix& other) const;
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::vector<std::vector<Entry>> rows_;
};

IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b);

/// Rows as JSON arrays of integers: [[1,0],[0,-1]].
void write_json(std::ostream& os, const IntMatrix& m);

struct RepSet {
  GeneratorSystem system;
  std::vector<IntMatrix> generators;
  int dimension = 1;
};

enum class BaseAlgebra { Cl11, Cl10, Cl01, Cl02 };

RepSet base_rep(BaseAlgebra kind);

/// Kronecker product of base representations following type_decomposition
/// order, with identity padding so that generators of different factors
/// commute. Throws InvalidLabel, or TooLarge when the matrix dimension
/// exceeds `dimension_cap`.
RepSet canonical_rep(const ClassLabel& label,
                     int dimension_cap = kCanonicalRepDimensionCap);

/// Left multiplication by each generator on the blade basis (basis index =
/// blade mask). Throws TooLarge beyond `cap` generators.
RepSet regular_rep(const GeneratorSystem& sys, int cap = kRegularRepCap);

/// G_a^2 = squares[a] I and G_a G_b = eps[a][b] G_b G_a for a != b, exactly.
bool verify_relations(const RepSet& reps);

/// Image of blade e_A: product of the generator matrices in increasing index
/// order (identity for the empty blade).
IntMatrix blade_image(const RepSet& reps, Blade a);

/// Rank of the span of all 2^k blade images, computed modulo a large prime
/// (a lower bound for the rational rank). Equal to 2^k exactly when the
/// representation is faithful. Throws TooLarge beyond `cap` generators.
std::int64_t blade_image_rank(const RepSet& reps, int cap = 10);

}  // namespace xcl
