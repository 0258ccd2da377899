#pragma once

#include <utility>
#include <vector>

#include "xcl/blade.hpp"
#include "xcl/classify.hpp"
#include "xcl/oracle.hpp"

namespace xcl {

using TensorList = std::vector<Signature>;

/// Combination of predicted_profile(classify(f)) over the factors.
/// Throws EmptyInput for an empty list.
InvariantProfile tensor_profile(const TensorList& factors);

/// The extended Clifford algebra class of the tensor product. An inconsistent
/// combined profile would contradict closure and is reported as a logic error.
ClassLabel tensor_classify(const TensorList& factors);

/// Canonical Cl(r,s|p,q) for Cl(p1,q1) (x) ... (x) Cl(pk,qk). When at most one
/// factor has an odd generator count the result is a pure Clifford algebra.
/// Throws EmptyInput for an empty list, InvalidArgument for a factor with no
/// generators.
Signature normalize_clifford_tensor(const std::vector<std::pair<int, int>>& factors);

/// One generator system for the whole product: each factor keeps its own
/// relations and generators of different factors commute.
/// Throws TooLarge beyond `cap` total generators.
GeneratorSystem tensor_brute_system(const TensorList& factors,
                                    int cap = kTraceSweepCap);

}  // namespace xcl
