#include <doctest.h>

#include <map>
#include <set>
#include <tuple>

#include "oracles.hpp"
#include "xcl/classify.hpp"
#include "xcl/error.hpp"

using namespace xcl;
using xcl::testing::for_each_signature;

namespace {

const AlgebraType kTypes[] = {AlgebraType::I, AlgebraType::II,
                              AlgebraType::III, AlgebraType::IV,
                              AlgebraType::V};

}  // namespace

TEST_CASE("derive_params reproduces the worked example") {
  CHECK(derive_params({3, 0, 7, 15}) == DerivedParams{3, 22, 3, 11, 0, 0});
  CHECK(derive_params({4, 0, 3, 18}) == DerivedParams{4, 21, 5, 10, 1, 1});
  CHECK(derive_params({5, 0, 11, 9}) == DerivedParams{5, 20, 5, 10, 2, 0});
  CHECK(derive_params({0, 0, 0, 0}) == DerivedParams{0, 0, 0, 0, 0, 0});
}

TEST_CASE("t is the nonnegative residue even when p < q") {
  for (int p = 0; p < 20; ++p) {
    for (int q = 0; q < 20; ++q) {
      const DerivedParams d = derive_params({0, 0, p, q});
      CHECK(d.t >= 0);
      CHECK(d.t < 8);
      CHECK((p - q - d.t) % 8 == 0);
      CHECK(d.m + d.n == d.M + 2 * d.N);
    }
  }
}

TEST_CASE("classify follows the type table") {
  CHECK(classify({4, 0, 3, 18}) == ClassLabel{AlgebraType::IV, 5, 10});
  CHECK(classify({5, 0, 11, 9}) == ClassLabel{AlgebraType::IV, 5, 10});
  CHECK(classify({0, 0, 0, 0}) == ClassLabel{AlgebraType::I, 0, 0});
  CHECK(classify({0, 0, 0, 2}) == ClassLabel{AlgebraType::II, 0, 1});
  CHECK(classify({0, 0, 0, 1}) == ClassLabel{AlgebraType::III, 1, 0});
  CHECK(classify({0, 0, 1, 0}) == ClassLabel{AlgebraType::IV, 1, 0});
  CHECK(classify({0, 0, 0, 3}) == ClassLabel{AlgebraType::V, 1, 1});
  CHECK(classify({1, 0, 0, 0}) == ClassLabel{AlgebraType::IV, 1, 0});
  CHECK(classify({1, 0, 0, 2}) == ClassLabel{AlgebraType::V, 1, 1});
  CHECK(classify({0, 1, 0, 2}) == ClassLabel{AlgebraType::III, 1, 1});
  CHECK(classify({3, 0, 7, 15}).type == AlgebraType::IV);
}

TEST_CASE("table rows are total and disjoint") {
  // Each table row as an independent predicate on (r, s, t).
  struct Row {
    AlgebraType type;
    bool (*match)(int r, int s, int t);
  };
  const Row rows[] = {
      {AlgebraType::I, [](int r, int s, int t) { return r == 0 && s == 0 && (t == 0 || t == 2); }},
      {AlgebraType::II, [](int r, int s, int t) { return r == 0 && s == 0 && (t == 4 || t == 6); }},
      {AlgebraType::III, [](int, int s, int) { return s >= 1; }},
      {AlgebraType::III, [](int, int s, int t) { return s == 0 && (t == 3 || t == 7); }},
      {AlgebraType::IV, [](int, int s, int t) { return s == 0 && t == 1; }},
      {AlgebraType::IV, [](int r, int s, int t) { return r >= 1 && s == 0 && (t == 0 || t == 2); }},
      {AlgebraType::V, [](int, int s, int t) { return s == 0 && t == 5; }},
      {AlgebraType::V, [](int r, int s, int t) { return r >= 1 && s == 0 && (t == 4 || t == 6); }},
  };
  for (int r = 0; r <= 6; ++r) {
    for (int s = 0; s <= 6; ++s) {
      for (int t = 0; t < 8; ++t) {
        int matches = 0;
        AlgebraType matched{};
        for (const Row& row : rows) {
          if (row.match(r, s, t)) {
            ++matches;
            matched = row.type;
          }
        }
        CAPTURE(r);
        CAPTURE(s);
        CAPTURE(t);
        REQUIRE(matches == 1);
        // Realize t with p - q = t.
        CHECK(classify({r, s, t, 0}).type == matched);
      }
    }
  }
}

TEST_CASE("labels produced by classify satisfy their invariants") {
  for_each_signature(9, [](const Signature& sig) {
    CHECK(classify(sig).valid());
  });
}

TEST_CASE("Cartan decomposition lines") {
  CHECK(cartan_decompose(1, 1) == CanonicalDecomposition{1, false, OddFactor::None, 0});
  CHECK(cartan_decompose(0, 2) == CanonicalDecomposition{0, true, OddFactor::None, 0});
  CHECK(cartan_decompose(5, 0) ==
        CanonicalDecomposition{1, true, OddFactor::Cl10Power, 1});
  CHECK(cartan_decompose(0, 0) == CanonicalDecomposition{});
  CHECK(cartan_decompose(0, 1) ==
        CanonicalDecomposition{0, false, OddFactor::Cl01Power, 1});
  CHECK(cartan_decompose(0, 3) ==
        CanonicalDecomposition{0, true, OddFactor::Cl10Power, 1});
  CHECK(to_string(cartan_decompose(5, 0)) == "Cl(1,0) * Cl(0,2) * Cl(1,1)");
  CHECK(to_string(cartan_decompose(0, 0)) == "R");
  CHECK_THROWS_AS(cartan_decompose(-1, 0), Error);
}

TEST_CASE("Cartan decomposition has the right generator count") {
  for (int p = 0; p <= 12; ++p) {
    for (int q = 0; p + q <= 12; ++q) {
      int generators = 0;
      for (const Signature& f : cartan_decompose(p, q).factors()) {
        generators += f.generators();
      }
      CHECK(generators == p + q);
    }
  }
}

TEST_CASE("isomorphism decisions") {
  CHECK(is_isomorphic({4, 0, 3, 18}, {5, 0, 11, 9}));
  CHECK_FALSE(is_isomorphic({3, 0, 7, 15}, {4, 0, 3, 18}));
  CHECK_FALSE(is_isomorphic({3, 0, 7, 15}, {5, 0, 11, 9}));
  CHECK(is_isomorphic({2, 3, 1, 4}, {2, 3, 1, 4}));
}

TEST_CASE("is_isomorphic is an equivalence relation") {
  std::vector<Signature> sigs;
  for_each_signature(8, [&](const Signature& s) { sigs.push_back(s); });
  // Equivalence classes of is_isomorphic coincide with the label partition,
  // which makes transitivity checkable in O(n^2).
  std::map<std::tuple<int, int, int>, std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < sigs.size(); ++i) {
    CHECK(is_isomorphic(sigs[i], sigs[i]));
    const ClassLabel l = classify(sigs[i]);
    classes[{static_cast<int>(l.type), l.M, l.N}].push_back(i);
  }
  for (std::size_t i = 0; i < sigs.size(); i += 7) {
    for (std::size_t j = 0; j < sigs.size(); ++j) {
      const bool ij = is_isomorphic(sigs[i], sigs[j]);
      REQUIRE(ij == is_isomorphic(sigs[j], sigs[i]));
      if (!ij) continue;
      for (std::size_t k = 0; k < sigs.size(); k += 3) {
        if (is_isomorphic(sigs[j], sigs[k])) {
          REQUIRE(is_isomorphic(sigs[i], sigs[k]));
        }
      }
    }
  }
  for (const auto& [key, members] : classes) {
    for (std::size_t a : members) {
      CHECK(is_isomorphic(sigs[members.front()], sigs[a]));
    }
  }
}

TEST_CASE("canonical_signature examples") {
  CHECK(canonical_signature({AlgebraType::III, 1, 0}) == Signature{0, 0, 0, 1});
  CHECK(canonical_signature({AlgebraType::IV, 1, 0}) == Signature{1, 0, 0, 0});
  CHECK(canonical_signature({AlgebraType::V, 1, 1}) == Signature{1, 0, 0, 2});
  CHECK(classify({1, 0, 0, 2}) == ClassLabel{AlgebraType::V, 1, 1});
  CHECK(canonical_signature({AlgebraType::IV, 1, 0}, true) == Signature{0, 0, 1, 0});
  CHECK(canonical_signature({AlgebraType::V, 1, 1}, true) == Signature{0, 0, 0, 3});
  CHECK(canonical_signature({AlgebraType::IV, 3, 2}, true) == Signature{3, 0, 2, 2});
}

TEST_CASE("canonical_signature rejects invalid labels") {
  const ClassLabel bad[] = {{AlgebraType::II, 0, 0}, {AlgebraType::I, 1, 0},
                            {AlgebraType::III, 0, 2}, {AlgebraType::IV, 0, 1},
                            {AlgebraType::V, 2, 0}, {AlgebraType::I, 0, -1}};
  for (const ClassLabel& l : bad) {
    try {
      (void)canonical_signature(l);
      FAIL("expected invalid-label for " << to_string(l));
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::InvalidLabel);
    }
  }
}

TEST_CASE("canonical_signature round trip") {
  for (AlgebraType t : kTypes) {
    for (int M = 0; M <= 6; ++M) {
      for (int N = 0; N <= 6; ++N) {
        const ClassLabel label{t, M, N};
        if (!label.valid()) continue;
        for (bool pure : {false, true}) {
          const Signature sig = canonical_signature(label, pure);
          CAPTURE(to_string(label));
          CHECK(classify(sig) == label);
          if (pure && M <= 1) {
            CHECK(sig.r == 0);
            CHECK(sig.s == 0);
          }
        }
      }
    }
  }
}

TEST_CASE("complexified algebras of equal n coincide") {
  for (int n = 0; n <= 8; ++n) {
    std::set<std::tuple<int, int, int>> labels;
    for (int p = 0; p <= n; ++p) {
      const ClassLabel l = classify({0, 1, p, n - p});
      labels.insert({static_cast<int>(l.type), l.M, l.N});
    }
    CHECK(labels.size() == 1);
  }
}

TEST_CASE("mod-8 periodicity of the type") {
  for (int p = 0; p <= 6; ++p) {
    for (int q = 0; p + q <= 6; ++q) {
      CHECK(classify({0, 0, p + 8, q}).type == classify({0, 0, p, q}).type);
      CHECK(classify({0, 0, p, q + 8}).type == classify({0, 0, p, q}).type);
    }
  }
}

TEST_CASE("k_reduction") {
  CHECK(k_reduction(3, 0) == KReduction{OddFactor::Cl10Power, 3});
  CHECK(k_reduction(0, 1) == KReduction{OddFactor::Cl01Power, 1});
  CHECK(k_reduction(2, 2) == KReduction{OddFactor::Cl01Power, 4});
  try {
    (void)k_reduction(0, 0);
    FAIL("expected empty-input");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::EmptyInput);
  }
}

TEST_CASE("signature construction validates fields") {
  CHECK_THROWS_AS(Signature::make(-1, 0, 0, 0), Error);
  CHECK(Signature::make(1, 2, 3, 4).generators() == 10);
  CHECK(to_string(Signature{3, 0, 7, 15}) == "Cl(3,0|7,15)");
}
