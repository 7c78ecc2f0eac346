#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "srss/errors.hpp"

namespace srss {

/// Secret parameters of the logistic-map keystream
/// x_{n+1} = mu * x_n * (1 - x_n).
///
/// Requires mu in (0,4) and x0 in (0,1). `discard` is the number of
/// initial iterations dropped so the orbit settles before any value is
/// used. The defaults are the documented keys used throughout the test
/// corpus; real deployments should pick their own.
struct LogisticParams {
  double mu = 3.99;
  double x0 = 0.37;
  std::uint64_t discard = 1000;
};

/// Throws InvalidKey unless the parameters satisfy mu in (0,4), x0 in (0,1).
void validate(const LogisticParams& params);

/// Iterates the map discard+count times from x0 and returns the last
/// `count` values. Evaluation is strict sequential double precision, so
/// a given key always reproduces the identical bit pattern. Throws
/// DegenerateOrbit if an iterate ever leaves (0,1) exclusive: such an
/// orbit collapses to a constant and must not be used as a keystream.
std::vector<double> iterate_logistic(const LogisticParams& params,
                                     std::size_t count);

/// Element-wise round(x * scale) mod 3, rounding halves away from zero.
std::vector<std::uint8_t> quantize_to_trits(std::span<const double> seq,
                                            std::uint32_t scale = 1000);

/// Keystream of per-pixel operation selectors in {0,1,2}.
std::vector<std::uint8_t> generate_operation_sequence(
    const LogisticParams& params, std::size_t pixel_count);

/// Same pipeline as quantize_to_trits with an arbitrary modulus >= 2;
/// used to select among S-boxes and to drive keyed shuffles.
std::vector<std::uint32_t> generate_index_sequence(const LogisticParams& params,
                                                   std::size_t count,
                                                   std::uint32_t modulus,
                                                   std::uint32_t scale = 1000);

}  // namespace srss
