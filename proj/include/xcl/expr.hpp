#pragma once

// Algebra expressions:
//
//   Expr := Term ("*" Term)*
//   Term := Atom ("^" Nat)?
//   Atom := "Cl(" Nat "," Nat ")" | "Cl(" Nat "," Nat "|" Nat "," Nat ")"
//         | "K(" Nat "," Nat ")" | "R" | "C" | "H" | "D" | "(" Expr ")"
//
// "*" is the tensor product. R, C, H and D stand for Cl(0,0|0,0),
// Cl(0,0|0,1), Cl(0,0|0,2) and Cl(0,0|1,0). Whitespace is ignored.

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "xcl/classify.hpp"
#include "xcl/error.hpp"
#include "xcl/tensor.hpp"

namespace xcl {

struct AlgebraExpr;

struct TensorNode {
  std::vector<AlgebraExpr> factors;
};

struct PowerNode {
  std::unique_ptr<AlgebraExpr> base;
  int exponent = 0;
};

struct AlgebraExpr {
  std::variant<Signature, TensorNode, PowerNode> node;

  static AlgebraExpr atom(const Signature& sig) { return {sig}; }
  static AlgebraExpr tensor(std::vector<AlgebraExpr> factors);
  static AlgebraExpr power(AlgebraExpr base, int exponent);

  AlgebraExpr() = default;
  AlgebraExpr(std::variant<Signature, TensorNode, PowerNode> n)
      : node(std::move(n)) {}
  AlgebraExpr(const AlgebraExpr& other);
  AlgebraExpr(AlgebraExpr&&) noexcept = default;
  AlgebraExpr& operator=(const AlgebraExpr& other);
  AlgebraExpr& operator=(AlgebraExpr&&) noexcept = default;

  friend bool operator==(const AlgebraExpr& a, const AlgebraExpr& b);
};

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, std::string expected);

  std::size_t offset() const { return offset_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::string expected_;
};

/// Exponents above this are rejected so that flattening stays bounded.
inline constexpr int kMaxExponent = 4096;

/// Throws ParseError carrying the byte offset of the failure.
AlgebraExpr parse(std::string_view input);

/// Inverse of parse: atoms print as Cl(r,s|p,q), nested tensors and powers are
/// parenthesized, so parse(print(e)) == e for every parsed tree.
std::string print(const AlgebraExpr& expr);

/// The factor list of the expression. A zeroth power contributes R.
/// Throws TooLarge if the list would exceed `max_factors`.
TensorList flatten(const AlgebraExpr& expr, std::size_t max_factors = 1 << 16);

}  // namespace xcl
