#pragma once

// Basis-independent invariants (dimension, center dimension, trace-form
// signature) computed by brute force over blades, and their correspondence
// with class labels.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "xcl/blade.hpp"
#include "xcl/classify.hpp"

namespace xcl {

inline constexpr int kTraceSweepCap = 20;

/// A value in {0, +2^j, -2^j}, stored as sign and exponent so that profiles
/// of arbitrarily many generators stay exact.
struct TraceSignature {
  int sign = 0;       // -1, 0, +1
  int log2_abs = 0;   // meaningful only when sign != 0

  static TraceSignature zero() { return {}; }
  static TraceSignature power(int sign, int log2_abs) {
    return {sign, log2_abs};
  }
  /// Throws InconsistentProfile unless value is 0 or +-2^j.
  static TraceSignature from_integer(std::int64_t value);

  /// Empty when the magnitude does not fit in int64.
  std::optional<std::int64_t> to_integer() const;

  friend TraceSignature operator*(TraceSignature a, TraceSignature b);
  friend bool operator==(const TraceSignature& a, const TraceSignature& b) {
    return a.sign == b.sign && (a.sign == 0 || a.log2_abs == b.log2_abs);
  }
};

std::string to_string(const TraceSignature& t);

struct InvariantProfile {
  int log2_dim = 0;
  int log2_center = 0;
  TraceSignature trace_sig = TraceSignature::power(1, 0);

  friend bool operator==(const InvariantProfile&,
                         const InvariantProfile&) = default;
};

std::string to_string(const InvariantProfile& p);

/// Componentwise tensor combination: dimensions and centers add, trace
/// signatures multiply.
InvariantProfile combine(const InvariantProfile& a, const InvariantProfile& b);

/// #{blades squaring to +1} - #{blades squaring to -1}. `workers` > 1 splits
/// the sweep into chunks; the result does not depend on the split.
/// Throws TooLarge beyond `cap` generators.
std::int64_t trace_form_signature(const GeneratorSystem& sys,
                                  int cap = kTraceSweepCap, int workers = 1);

/// Gram matrix of the regular trace form tr(L_{e_A e_B}) on the blade basis,
/// computed from the structure constants without assuming diagonality.
std::vector<std::vector<std::int64_t>> regular_trace_form(
    const GeneratorSystem& sys, int cap = kStructureConstantCap);

InvariantProfile brute_profile(const GeneratorSystem& sys,
                               int cap = kTraceSweepCap, int workers = 1);
InvariantProfile brute_profile(const Signature& sig, int cap = kTraceSweepCap,
                               int workers = 1);

/// Throws InvalidLabel.
InvariantProfile predicted_profile(const ClassLabel& label);

/// Throws InconsistentProfile when no label has this profile.
ClassLabel profile_to_label(const InvariantProfile& prof);

}  // namespace xcl
