#include "xcl/tensor.hpp"

#include <stdexcept>
#include <string>

#include "xcl/error.hpp"

namespace xcl {

InvariantProfile tensor_profile(const TensorList& factors) {
  if (factors.empty()) {
    throw Error(ErrorKind::EmptyInput, "tensor product of no factors");
  }
  InvariantProfile out;  // profile of R
  for (const Signature& f : factors) {
    out = combine(out, predicted_profile(classify(f)));
  }
  return out;
}

ClassLabel tensor_classify(const TensorList& factors) {
  const InvariantProfile prof = tensor_profile(factors);
  try {
    return profile_to_label(prof);
  } catch (const Error& e) {
    throw std::logic_error(std::string("closure violated: ") + e.what());
  }
}

Signature normalize_clifford_tensor(
    const std::vector<std::pair<int, int>>& factors) {
  if (factors.empty()) {
    throw Error(ErrorKind::EmptyInput, "tensor product of no factors");
  }
  TensorList list;
  int odd = 0;
  for (const auto& [p, q] : factors) {
    if (p < 0 || q < 0 || p + q == 0) {
      throw Error(ErrorKind::InvalidArgument,
                  "each Clifford factor needs at least one generator");
    }
    odd += (p + q) % 2;
    list.push_back(Signature::clifford(p, q));
  }
  return canonical_signature(tensor_classify(list), odd <= 1);
}

GeneratorSystem tensor_brute_system(const TensorList& factors, int cap) {
  int total = 0;
  for (const Signature& f : factors) total += f.generators();
  if (total > cap) {
    throw Error(ErrorKind::TooLarge,
                "tensor product has " + std::to_string(total) +
                    " generators, beyond the cap of " + std::to_string(cap));
  }
  std::vector<GeneratorSystem> systems;
  systems.reserve(factors.size());
  for (const Signature& f : factors) {
    systems.push_back(GeneratorSystem::from_signature(f));
  }
  return GeneratorSystem::tensor(systems);
}

}  // namespace xcl
