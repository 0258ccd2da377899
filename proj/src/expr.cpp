#include "xcl/expr.hpp"

#include <cctype>
#include <limits>

namespace xcl {

AlgebraExpr AlgebraExpr::tensor(std::vector<AlgebraExpr> factors) {
  return AlgebraExpr{TensorNode{std::move(factors)}};
}

AlgebraExpr AlgebraExpr::power(AlgebraExpr base, int exponent) {
  return AlgebraExpr{
      PowerNode{std::make_unique<AlgebraExpr>(std::move(base)), exponent}};
}

namespace {

std::variant<Signature, TensorNode, PowerNode> clone(
    const std::variant<Signature, TensorNode, PowerNode>& n) {
  if (const auto* p = std::get_if<PowerNode>(&n)) {
    return PowerNode{std::make_unique<AlgebraExpr>(*p->base), p->exponent};
  }
  if (const auto* t = std::get_if<TensorNode>(&n)) return TensorNode{t->factors};
  return std::get<Signature>(n);
}

}  // namespace

AlgebraExpr::AlgebraExpr(const AlgebraExpr& other) : node(clone(other.node)) {}

AlgebraExpr& AlgebraExpr::operator=(const AlgebraExpr& other) {
  if (this != &other) node = clone(other.node);
  return *this;
}

bool operator==(const AlgebraExpr& a, const AlgebraExpr& b) {
  if (a.node.index() != b.node.index()) return false;
  if (const auto* s = std::get_if<Signature>(&a.node)) {
    return *s == std::get<Signature>(b.node);
  }
  if (const auto* t = std::get_if<TensorNode>(&a.node)) {
    return t->factors == std::get<TensorNode>(b.node).factors;
  }
  const auto& pa = std::get<PowerNode>(a.node);
  const auto& pb = std::get<PowerNode>(b.node);
  return pa.exponent == pb.exponent && *pa.base == *pb.base;
}

ParseError::ParseError(std::size_t offset, std::string expected)
    : Error(ErrorKind::SyntaxError, "syntax error at offset " +
                                        std::to_string(offset) + ": expected " +
                                        expected),
      offset_(offset),
      expected_(std::move(expected)) {}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  AlgebraExpr parse_all() {
    AlgebraExpr e = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError(pos_, "'*' or end of input");
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) throw ParseError(pos_, std::string("'") + c + "'");
  }

  int parse_nat() {
    skip_ws();
    const std::size_t start = pos_;
    long long value = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > std::numeric_limits<int>::max()) {
        throw ParseError(start, "natural number that fits in an int");
      }
      ++pos_;
    }
    if (pos_ == start) throw ParseError(pos_, "natural number");
    return static_cast<int>(value);
  }

  AlgebraExpr parse_expr() {
    std::vector<AlgebraExpr> terms;
    terms.push_back(parse_term());
    while (accept('*')) terms.push_back(parse_term());
    if (terms.size() == 1) return std::move(terms.front());
    return AlgebraExpr::tensor(std::move(terms));
  }

  AlgebraExpr parse_term() {
    AlgebraExpr atom = parse_atom();
    if (accept('^')) {
      const std::size_t at = pos_;
      const int exponent = parse_nat();
      if (exponent > kMaxExponent) {
        throw ParseError(at, "exponent at most " + std::to_string(kMaxExponent));
      }
      return AlgebraExpr::power(std::move(atom), exponent);
    }
    return atom;
  }

  AlgebraExpr parse_atom() {
    skip_ws();
    if (pos_ >= text_.size()) {
      throw ParseError(pos_, "algebra (Cl, K, R, C, H, D or '(')");
    }
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      AlgebraExpr inner = parse_expr();
      expect(')');
      return inner;
    }
    if (text_.substr(pos_, 2) == "Cl") {
      pos_ += 2;
      expect('(');
      const int a = parse_nat();
      expect(',');
      const int b = parse_nat();
      if (accept('|')) {
        const int p = parse_nat();
        expect(',');
        const int q = parse_nat();
        expect(')');
        return AlgebraExpr::atom(Signature{a, b, p, q});
      }
      if (!accept(')')) throw ParseError(pos_, "'|' or ')'");
      return AlgebraExpr::atom(Signature::clifford(a, b));
    }
    if (c == 'K') {
      ++pos_;
      expect('(');
      const int r = parse_nat();
      expect(',');
      const int s = parse_nat();
      expect(')');
      return AlgebraExpr::atom(Signature::commutative(r, s));
    }
    ++pos_;
    switch (c) {
      case 'R': return AlgebraExpr::atom(Signature{});
      case 'C': return AlgebraExpr::atom(Signature::clifford(0, 1));
      case 'H': return AlgebraExpr::atom(Signature::clifford(0, 2));
      case 'D': return AlgebraExpr::atom(Signature::clifford(1, 0));
      default: break;
    }
    --pos_;
    throw ParseError(pos_, "algebra (Cl, K, R, C, H, D or '(')");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void print_to(std::string& out, const AlgebraExpr& e, bool nested) {
  if (const auto* s = std::get_if<Signature>(&e.node)) {
    out += to_string(*s);
  } else if (const auto* t = std::get_if<TensorNode>(&e.node)) {
    if (nested) out += '(';
    for (std::size_t i = 0; i < t->factors.size(); ++i) {
      if (i) out += " * ";
      print_to(out, t->factors[i], true);
    }
    if (nested) out += ')';
  } else {
    const auto& p = std::get<PowerNode>(e.node);
    const bool wrap = !std::holds_alternative<Signature>(p.base->node);
    if (wrap) out += '(';
    print_to(out, *p.base, false);
    if (wrap) out += ')';
    out += '^' + std::to_string(p.exponent);
  }
}

void flatten_into(TensorList& out, const AlgebraExpr& e, std::size_t max) {
  if (const auto* s = std::get_if<Signature>(&e.node)) {
    if (out.size() >= max) {
      throw Error(ErrorKind::TooLarge, "expression has too many factors");
    }
    out.push_back(*s);
  } else if (const auto* t = std::get_if<TensorNode>(&e.node)) {
    for (const auto& f : t->factors) flatten_into(out, f, max);
  } else {
    const auto& p = std::get<PowerNode>(e.node);
    if (p.exponent == 0) {
      flatten_into(out, AlgebraExpr::atom(Signature{}), max);
      return;
    }
    TensorList once;
    flatten_into(once, *p.base, max);
    for (int i = 0; i < p.exponent; ++i) {
      if (out.size() + once.size() > max) {
        throw Error(ErrorKind::TooLarge, "expression has too many factors");
      }
      out.insert(out.end(), once.begin(), once.end());
    }
  }
}

}  // namespace

AlgebraExpr parse(std::string_view input) { return Parser(input).parse_all(); }

std::string print(const AlgebraExpr& expr) {
  std::string out;
  print_to(out, expr, false);
  return out;
}

TensorList flatten(const AlgebraExpr& expr, std::size_t max_factors) {
  TensorList out;
  flatten_into(out, expr, max_factors);
  return out;
}

}  // namespace xcl
