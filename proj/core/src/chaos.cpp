#include "srss/chaos.hpp"

#include <cmath>
#include <string>

namespace srss {

namespace {

// round(x * scale) mod m, halves away from zero. Total for any finite x.
std::uint32_t quantize_value(double x, std::uint32_t scale, std::uint32_t modulus) {
  const long long r = std::llround(x * static_cast<double>(scale));
  const long long m = static_cast<long long>(modulus);
  return static_cast<std::uint32_t>(((r % m) + m) % m);
}

}  // namespace

void validate(const LogisticParams& params) {
  if (!(params.mu > 0.0 && params.mu < 4.0)) {
    throw InvalidKey("logistic mu must lie in (0, 4), got " +
                     std::to_string(params.mu));
  }
  if (!(params.x0 > 0.0 && params.x0 < 1.0)) {
    throw InvalidKey("logistic x0 must lie in (0, 1), got " +
                     std::to_string(params.x0));
  }
}

std::vector<double> iterate_logistic(const LogisticParams& params,
                                     std::size_t count) {
  validate(params);
  if (count == 0) {
    throw InvalidParams("iterate_logistic: count must be at least 1");
  }

  std::vector<double> out;
  out.reserve(count);

  // Decryption regenerates this stream, so the recurrence must be evaluated
  // exactly as written: one multiply chain per step, no reassociation.
  // (The build disables FP contraction for this translation unit.)
  const double mu = params.mu;
  double x = params.x0;
  const std::uint64_t total = params.discard + static_cast<std::uint64_t>(count);
  for (std::uint64_t n = 0; n < total; ++n) {
    x = mu * x * (1.0 - x);
    if (!(x > 0.0 && x < 1.0)) {
      throw DegenerateOrbit("logistic orbit left (0,1) at iteration " +
                            std::to_string(n + 1) + " (x = " +
                            std::to_string(x) + ")");
    }
    if (n >= params.discard) {
      out.push_back(x);
    }
  }
  return out;
}

std::vector<std::uint8_t> quantize_to_trits(std::span<const double> seq,
                                            std::uint32_t scale) {
  if (seq.empty()) {
    throw InvalidParams("quantize_to_trits: empty sequence");
  }
  if (scale == 0) {
    throw InvalidParams("quantize_to_trits: scale must be positive");
  }
  std::vector<std::uint8_t> out;
  out.reserve(seq.size());
  for (double x : seq) {
    out.push_back(static_cast<std::uint8_t>(quantize_value(x, scale, 3)));
  }
  return out;
}

std::vector<std::uint8_t> generate_operation_sequence(
    const LogisticParams& params, std::size_t pixel_count) {
  const std::vector<double> seq = iterate_logistic(params, pixel_count);
  return quantize_to_trits(seq);
}

std::vector<std::uint32_t> generate_index_sequence(const LogisticParams& params,
                                                   std::size_t count,
                                                   std::uint32_t modulus,
                                                   std::uint32_t scale) {
  if (modulus < 2) {
    throw InvalidParams("generate_index_sequence: modulus must be >= 2");
  }
  if (scale == 0) {
    throw InvalidParams("generate_index_sequence: scale must be positive");
  }
  const std::vector<double> seq = iterate_logistic(params, count);
  std::vector<std::uint32_t> out;
  out.reserve(seq.size());
  for (double x : seq) {
    out.push_back(quantize_value(x, scale, modulus));
  }
  return out;
}

}  // namespace srss
