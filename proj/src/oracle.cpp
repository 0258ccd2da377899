#include "xcl/oracle.hpp"

#include <algorithm>
#include <bit>
#include <future>
#include <sstream>

#include "xcl/error.hpp"

namespace xcl {

TraceSignature TraceSignature::from_integer(std::int64_t value) {
  if (value == 0) return zero();
  const std::uint64_t mag =
      value < 0 ? 0 - static_cast<std::uint64_t>(value)
                : static_cast<std::uint64_t>(value);
  if (!std::has_single_bit(mag)) {
    throw Error(ErrorKind::InconsistentProfile,
                "trace signature " + std::to_string(value) +
                    " is not zero or a power of two");
  }
  return power(value < 0 ? -1 : 1, std::countr_zero(mag));
}

std::optional<std::int64_t> TraceSignature::to_integer() const {
  if (sign == 0) return 0;
  if (log2_abs > 62) return std::nullopt;
  return sign * (std::int64_t{1} << log2_abs);
}

TraceSignature operator*(TraceSignature a, TraceSignature b) {
  if (a.sign == 0 || b.sign == 0) return TraceSignature::zero();
  return TraceSignature::power(a.sign * b.sign, a.log2_abs + b.log2_abs);
}

std::string to_string(const TraceSignature& t) {
  if (auto v = t.to_integer()) {
    return (*v > 0 ? "+" : "") + std::to_string(*v);
  }
  return std::string(t.sign < 0 ? "-" : "+") + "2^" +
         std::to_string(t.log2_abs);
}

std::string to_string(const InvariantProfile& p) {
  std::ostringstream os;
  os << '(' << p.log2_dim << ", " << p.log2_center << ", "
     << to_string(p.trace_sig) << ')';
  return os.str();
}

InvariantProfile combine(const InvariantProfile& a,
                         const InvariantProfile& b) {
  return InvariantProfile{a.log2_dim + b.log2_dim,
                          a.log2_center + b.log2_center,
                          a.trace_sig * b.trace_sig};
}

namespace {

std::int64_t signature_chunk(const GeneratorSystem& sys, std::uint64_t begin,
                             std::uint64_t end) {
  std::int64_t sum = 0;
  for (std::uint64_t i = begin; i < end; ++i) {
    const Blade a = static_cast<Blade>(i);
    sum += blade_product(sys, a, a).sign;
  }
  return sum;
}

}  // namespace

std::int64_t trace_form_signature(const GeneratorSystem& sys, int cap,
                                  int workers) {
  if (sys.count() > cap) {
    throw Error(ErrorKind::TooLarge,
                "trace sweep over " + std::to_string(sys.count()) +
                    " generators exceeds cap " + std::to_string(cap));
  }
  const std::uint64_t total = sys.blade_count();
  workers = std::max(1, workers);
  if (workers == 1 || total < 4096) return signature_chunk(sys, 0, total);

  const std::uint64_t chunk = (total + workers - 1) / workers;
  std::vector<std::future<std::int64_t>> parts;
  for (std::uint64_t begin = 0; begin < total; begin += chunk) {
    const std::uint64_t end = std::min(total, begin + chunk);
    parts.push_back(std::async(std::launch::async, signature_chunk,
                               std::cref(sys), begin, end));
  }
  std::int64_t sum = 0;
  for (auto& f : parts) sum += f.get();
  return sum;
}

std::vector<std::vector<std::int64_t>> regular_trace_form(
    const GeneratorSystem& sys, int cap) {
  const StructureConstants table(sys, cap);
  const std::size_t size = table.size();

  // tr(L_{e_C}) = sum over D of the coefficient of e_D in e_C e_D.
  std::vector<std::int64_t> blade_trace(size, 0);
  for (std::size_t c = 0; c < size; ++c) {
    for (std::size_t d = 0; d < size; ++d) {
      const SignedBlade& e =
          table.at(static_cast<Blade>(c), static_cast<Blade>(d));
      if (e.blade == d) blade_trace[c] += e.sign;
    }
  }

  std::vector<std::vector<std::int64_t>> form(
      size, std::vector<std::int64_t>(size, 0));
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = 0; b < size; ++b) {
      const SignedBlade& e =
          table.at(static_cast<Blade>(a), static_cast<Blade>(b));
      form[a][b] = e.sign * blade_trace[e.blade];
    }
  }
  return form;
}

InvariantProfile brute_profile(const GeneratorSystem& sys, int cap,
                               int workers) {
  const std::int64_t sig = trace_form_signature(sys, cap, workers);
  const auto center = center_basis(sys);
  InvariantProfile out;
  out.log2_dim = sys.count();
  out.log2_center = std::countr_zero(center.size());
  if (!std::has_single_bit(center.size())) {
    throw Error(ErrorKind::InconsistentProfile,
                "center dimension is not a power of two");
  }
  out.trace_sig = TraceSignature::from_integer(sig);
  return out;
}

InvariantProfile brute_profile(const Signature& sig, int cap, int workers) {
  if (sig.generators() > cap) {
    throw Error(ErrorKind::TooLarge,
                to_string(sig) + " exceeds the brute-force cap of " +
                    std::to_string(cap) + " generators");
  }
  return brute_profile(GeneratorSystem::from_signature(sig), cap, workers);
}

InvariantProfile predicted_profile(const ClassLabel& label) {
  if (!label.valid()) {
    throw Error(ErrorKind::InvalidLabel,
                "label violates its type invariants: " + to_string(label));
  }
  const int M = label.M;
  const int N = label.N;
  InvariantProfile out{M + 2 * N, M, TraceSignature::zero()};
  switch (label.type) {
    case AlgebraType::I: out.trace_sig = TraceSignature::power(1, N); break;
    case AlgebraType::II: out.trace_sig = TraceSignature::power(-1, N); break;
    case AlgebraType::III: out.trace_sig = TraceSignature::zero(); break;
    case AlgebraType::IV:
      out.trace_sig = TraceSignature::power(1, M + N);
      break;
    case AlgebraType::V:
      out.trace_sig = TraceSignature::power(-1, M + N);
      break;
  }
  return out;
}

ClassLabel profile_to_label(const InvariantProfile& prof) {
  auto fail = [&](const std::string& why) {
    return Error(ErrorKind::InconsistentProfile,
                 "profile " + to_string(prof) + ": " + why);
  };
  const int M = prof.log2_center;
  if (M < 0 || prof.log2_dim < M) throw fail("center larger than algebra");
  if ((prof.log2_dim - M) % 2 != 0) throw fail("log2_dim - M is odd");
  const int N = (prof.log2_dim - M) / 2;
  const TraceSignature& ts = prof.trace_sig;

  ClassLabel label{AlgebraType::III, M, N};
  int expected_log2 = 0;
  if (ts.sign == 0) {
    if (M == 0) throw fail("zero trace signature with trivial center");
    return label;
  }
  if (M == 0) {
    label.type = ts.sign > 0 ? AlgebraType::I : AlgebraType::II;
    expected_log2 = N;
  } else {
    label.type = ts.sign > 0 ? AlgebraType::IV : AlgebraType::V;
    expected_log2 = M + N;
  }
  if (ts.log2_abs != expected_log2) {
    throw fail("|trace_sig| should be 2^" + std::to_string(expected_log2));
  }
  if (!label.valid()) throw fail("no label of type " + to_string(label.type));
  return label;
}

}  // namespace xcl
