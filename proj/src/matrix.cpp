#include "xcl/matrix.hpp"

#include <algorithm>
#include <ostream>

#include "xcl/error.hpp"
#include "xcl/tensor.hpp"

namespace xcl {

IntMatrix IntMatrix::identity(int dim, std::int64_t scale) {
  IntMatrix m(dim);
  if (scale == 0) return m;
  for (int i = 0; i < dim; ++i) m.rows_[i].push_back({i, scale});
  return m;
}

IntMatrix IntMatrix::from_dense(
    const std::vector<std::vector<std::int64_t>>& rows) {
  const int dim = static_cast<int>(rows.size());
  IntMatrix m(dim);
  for (int i = 0; i < dim; ++i) {
    if (static_cast<int>(rows[i].size()) != dim) {
      throw Error(ErrorKind::InvalidArgument, "matrix must be square");
    }
    for (int j = 0; j < dim; ++j) {
      if (rows[i][j] != 0) m.rows_[i].push_back({j, rows[i][j]});
    }
  }
  return m;
}

std::int64_t IntMatrix::at(int row, int col) const {
  const auto& r = rows_[row];
  auto it = std::lower_bound(r.begin(), r.end(), col,
                             [](const Entry& e, int c) { return e.col < c; });
  return it != r.end() && it->col == col ? it->value : 0;
}

void IntMatrix::set(int row, int col, std::int64_t value) {
  auto& r = rows_[row];
  auto it = std::lower_bound(r.begin(), r.end(), col,
                             [](const Entry& e, int c) { return e.col < c; });
  if (it != r.end() && it->col == col) {
    if (value == 0) {
      r.erase(it);
    } else {
      it->value = value;
    }
  } else if (value != 0) {
    r.insert(it, {col, value});
  }
}

std::int64_t IntMatrix::trace() const {
  std::int64_t sum = 0;
  for (int i = 0; i < dim(); ++i) sum += at(i, i);
  return sum;
}

std::vector<std::vector<std::int64_t>> IntMatrix::to_dense() const {
  std::vector<std::vector<std::int64_t>> out(
      dim(), std::vector<std::int64_t>(dim(), 0));
  for (int i = 0; i < dim(); ++i) {
    for (const Entry& e : rows_[i]) out[i][e.col] = e.value;
  }
  return out;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (dim() != other.dim()) {
    throw Error(ErrorKind::InvalidArgument, "matrix dimensions differ");
  }
  IntMatrix out(dim());
  std::vector<std::int64_t> acc(dim(), 0);
  std::vector<int> touched;
  for (int i = 0; i < dim(); ++i) {
    touched.clear();
    for (const Entry& a : rows_[i]) {
      for (const Entry& b : other.rows_[a.col]) {
        if (acc[b.col] == 0) touched.push_back(b.col);
        acc[b.col] += a.value * b.value;
      }
    }
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    for (int col : touched) {
      if (acc[col] != 0) out.rows_[i].push_back({col, acc[col]});
      acc[col] = 0;
    }
  }
  return out;
}

IntMatrix IntMatrix::operator*(std::int64_t scale) const {
  if (scale == 0) return IntMatrix(dim());
  IntMatrix out = *this;
  for (auto& r : out.rows_) {
    for (Entry& e : r) e.value *= scale;
  }
  return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& other) const {
  if (dim() != other.dim()) {
    throw Error(ErrorKind::InvalidArgument, "matrix dimensions differ");
  }
  IntMatrix out(dim());
  for (int i = 0; i < dim(); ++i) {
    const auto& a = rows_[i];
    const auto& b = other.rows_[i];
    auto& r = out.rows_[i];
    std::size_t x = 0;
    std::size_t y = 0;
    while (x < a.size() || y < b.size()) {
      if (y == b.size() || (x < a.size() && a[x].col < b[y].col)) {
        r.push_back(a[x++]);
      } else if (x == a.size() || b[y].col < a[x].col) {
        r.push_back(b[y++]);
      } else {
        const std::int64_t v = a[x].value + b[y].value;
        if (v != 0) r.push_back({a[x].col, v});
        ++x;
        ++y;
      }
    }
  }
  return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& other) const {
  return *this + other * -1;
}

IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b) {
  const int db = b.dim();
  IntMatrix out(a.dim() * db);
  for (int i = 0; i < a.dim(); ++i) {
    for (const auto& ea : a.row(i)) {
      for (int k = 0; k < db; ++k) {
        for (const auto& eb : b.row(k)) {
          out.set(i * db + k, ea.col * db + eb.col, ea.value * eb.value);
        }
      }
    }
  }
  return out;
}

void write_json(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (int i = 0; i < m.dim(); ++i) {
    if (i) os << ',';
    os << '[';
    for (int j = 0; j < m.dim(); ++j) {
      if (j) os << ',';
      os << m.at(i, j);
    }
    os << ']';
  }
  os << ']';
}

RepSet base_rep(BaseAlgebra kind) {
  using Dense = std::vector<std::vector<std::int64_t>>;
  RepSet out;
  switch (kind) {
    case BaseAlgebra::Cl11:
      out.system = GeneratorSystem::from_signature(Signature::clifford(1, 1));
      out.generators = {IntMatrix::from_dense(Dense{{0, 1}, {1, 0}}),
                        IntMatrix::from_dense(Dense{{0, 1}, {-1, 0}})};
      out.dimension = 2;
      break;
    case BaseAlgebra::Cl10:
      out.system = GeneratorSystem::from_signature(Signature::clifford(1, 0));
      out.generators = {IntMatrix::from_dense(Dense{{1, 0}, {0, -1}})};
      out.dimension = 2;
      break;
    case BaseAlgebra::Cl01:
      out.system = GeneratorSystem::from_signature(Signature::clifford(0, 1));
      out.generators = {IntMatrix::from_dense(Dense{{0, -1}, {1, 0}})};
      out.dimension = 2;
      break;
    case BaseAlgebra::Cl02:
      // Left multiplication by the quaternion units i and j on (1, i, j, k).
      out.system = GeneratorSystem::from_signature(Signature::clifford(0, 2));
      out.generators = {
          IntMatrix::from_dense(
              Dense{{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}}),
          IntMatrix::from_dense(
              Dense{{0, 0, -1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, -1, 0, 0}}),
      };
      out.dimension = 4;
      break;
  }
  return out;
}

namespace {

BaseAlgebra base_of(const Signature& factor) {
  if (factor == Signature::clifford(1, 1)) return BaseAlgebra::Cl11;
  if (factor == Signature::clifford(1, 0)) return BaseAlgebra::Cl10;
  if (factor == Signature::clifford(0, 1)) return BaseAlgebra::Cl01;
  return BaseAlgebra::Cl02;
}

}  // namespace

RepSet canonical_rep(const ClassLabel& label, int dimension_cap) {
  const TensorList factors = type_decomposition(label).factors();
  std::vector<RepSet> bases;
  long long dimension = 1;
  for (const Signature& f : factors) {
    bases.push_back(base_rep(base_of(f)));
    dimension *= bases.back().dimension;
    if (dimension > dimension_cap) {
      throw Error(ErrorKind::TooLarge,
                  "canonical representation of " + to_string(label) +
                      " exceeds dimension cap " + std::to_string(dimension_cap));
    }
  }

  RepSet out;
  out.system = tensor_brute_system(factors, kMaxGenerators);
  out.dimension = static_cast<int>(dimension);
  int before = 1;
  for (const RepSet& base : bases) {
    const int after = out.dimension / (before * base.dimension);
    const IntMatrix left = IntMatrix::identity(before);
    const IntMatrix right = IntMatrix::identity(after);
    for (const IntMatrix& g : base.generators) {
      out.generators.push_back(kronecker(kronecker(left, g), right));
    }
    before *= base.dimension;
  }
  return out;
}

RepSet regular_rep(const GeneratorSystem& sys, int cap) {
  if (sys.count() > cap) {
    throw Error(ErrorKind::TooLarge, "regular representation beyond cap");
  }
  RepSet out;
  out.system = sys;
  out.dimension = static_cast<int>(sys.blade_count());
  for (int g = 0; g < sys.count(); ++g) {
    IntMatrix m(out.dimension);
    const Blade gen = Blade{1} << g;
    for (int col = 0; col < out.dimension; ++col) {
      const SignedBlade e = blade_product(sys, gen, static_cast<Blade>(col));
      m.set(static_cast<int>(e.blade), col, e.sign);
    }
    out.generators.push_back(std::move(m));
  }
  return out;
}

bool verify_relations(const RepSet& reps) {
  const int k = reps.system.count();
  if (static_cast<int>(reps.generators.size()) != k) return false;
  for (const IntMatrix& g : reps.generators) {
    if (g.dim() != reps.dimension) return false;
  }
  for (int a = 0; a < k; ++a) {
    const IntMatrix& ga = reps.generators[a];
    if (ga * ga != IntMatrix::identity(reps.dimension, reps.system.square(a))) {
      return false;
    }
    for (int b = a + 1; b < k; ++b) {
      const IntMatrix& gb = reps.generators[b];
      if (ga * gb - (gb * ga) * reps.system.eps(a, b) !=
          IntMatrix(reps.dimension)) {
        return false;
      }
    }
  }
  return true;
}

IntMatrix blade_image(const RepSet& reps, Blade a) {
  IntMatrix out = IntMatrix::identity(reps.dimension);
  for (int g : blade_indices(a)) out = out * reps.generators[g];
  return out;
}

std::int64_t blade_image_rank(const RepSet& reps, int cap) {
  const int k = reps.system.count();
  if (k > cap) {
    throw Error(ErrorKind::TooLarge, "blade image rank beyond cap");
  }
  constexpr std::int64_t kPrime = 2147483647;  // 2^31 - 1
  auto reduce = [](std::int64_t v) { return ((v % kPrime) + kPrime) % kPrime; };
  auto power = [&](std::int64_t base, std::int64_t exp) {
    std::int64_t result = 1;
    base = reduce(base);
    while (exp > 0) {
      if (exp & 1) result = result * base % kPrime;
      base = base * base % kPrime;
      exp >>= 1;
    }
    return result;
  };

  const std::size_t cols =
      static_cast<std::size_t>(reps.dimension) * reps.dimension;
  const std::uint64_t count = reps.system.blade_count();
  std::vector<std::vector<std::int64_t>> rows;
  rows.reserve(count);
  for (std::uint64_t a = 0; a < count; ++a) {
    const IntMatrix img = blade_image(reps, static_cast<Blade>(a));
    std::vector<std::int64_t> flat(cols, 0);
    for (int i = 0; i < img.dim(); ++i) {
      for (const auto& e : img.row(i)) {
        flat[static_cast<std::size_t>(i) * reps.dimension + e.col] =
            reduce(e.value);
      }
    }
    rows.push_back(std::move(flat));
  }

  std::int64_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < static_cast<std::int64_t>(rows.size()); ++col) {
    std::size_t pivot = static_cast<std::size_t>(rank);
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    const std::int64_t inv = power(rows[rank][col], kPrime - 2);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      const std::int64_t factor = rows[r][col] * inv % kPrime;
      for (std::size_t c = col; c < cols; ++c) {
        rows[r][c] = reduce(rows[r][c] - factor * rows[rank][c] % kPrime);
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace xcl
