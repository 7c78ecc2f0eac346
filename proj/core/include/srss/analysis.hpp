#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "srss/errors.hpp"
#include "srss/image.hpp"

namespace srss {

/// 256-bin pixel value histogram.
struct Histogram {
  std::array<std::uint64_t, 256> counts{};
  std::uint64_t total = 0;
};

Histogram histogram(const GrayImage& img);

/// Shannon entropy of the pixel value distribution, in bits (0..8).
double shannon_entropy(const GrayImage& img);

/// Gray-level co-occurrence configuration. Pixels are quantized to
/// `levels` bins by floor(v * levels / 256); pairs are counted at offset
/// (dr, dc), with the transposed pairs added when `symmetric`.
struct GlcmConfig {
  std::uint32_t levels = 8;
  int dr = 0;
  int dc = 1;
  bool symmetric = false;
};

/// Normalized co-occurrence matrix (entries sum to 1), row-major.
class GlcmMatrix {
 public:
  explicit GlcmMatrix(std::uint32_t levels)
      : levels_(levels), values_(static_cast<std::size_t>(levels) * levels, 0.0) {}

  std::uint32_t levels() const { return levels_; }
  double at(std::uint32_t i, std::uint32_t j) const {
    return values_[static_cast<std::size_t>(i) * levels_ + j];
  }
  double& at(std::uint32_t i, std::uint32_t j) {
    return values_[static_cast<std::size_t>(i) * levels_ + j];
  }
  std::span<const double> values() const { return values_; }

 private:
  std::uint32_t levels_;
  std::vector<double> values_;
};

GlcmMatrix glcm(const GrayImage& img, const GlcmConfig& cfg = {});

/// Haralick features of a normalized GLCM.
double glcm_contrast(const GlcmMatrix& m);     // sum p(i,j) * (i-j)^2
double glcm_energy(const GlcmMatrix& m);       // sum p(i,j)^2
double glcm_homogeneity(const GlcmMatrix& m);  // sum p(i,j) / (1 + |i-j|)

/// sum p(i,j)(i-mu_i)(j-mu_j) / (sigma_i * sigma_j). Undefined (nullopt)
/// when either marginal has zero variance, e.g. on a constant image.
std::optional<double> glcm_correlation(const GlcmMatrix& m);

/// log2 of the composite key-space size obtained from n confusion rounds
/// and one diffusion stage, all raised to m overall rounds:
/// m * (n * sum(confusion_bits_per_stage) + diffusion_bits).
double key_space_bits(std::span<const double> confusion_bits_per_stage,
                      double diffusion_bits, std::uint32_t n, std::uint32_t m);

/// All statistical security metrics for one image.
struct SecurityReport {
  double entropy = 0.0;
  double contrast = 0.0;
  std::optional<double> correlation;
  double energy = 0.0;
  double homogeneity = 0.0;
  Histogram hist;
};

SecurityReport build_report(const GrayImage& img, const GlcmConfig& cfg = {});

/// CSV with one metric per column; an undefined correlation is written
/// as the word "undefined".
std::string report_csv(const SecurityReport& report);

/// Aligned text table with metrics as rows and one column per report.
std::string format_report_table(std::span<const std::string> labels,
                                std::span<const SecurityReport> reports);

}  // namespace srss
