#include "srss/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

namespace srss {

namespace {

void require_nonempty(const GrayImage& img) {
  if (img.empty()) {
    throw EmptyImage("analysis: empty image");
  }
}

void validate_config(const GlcmConfig& cfg) {
  if (cfg.levels < 2 || cfg.levels > 256) {
    throw InvalidParams("GLCM levels must lie in [2, 256], got " +
                        std::to_string(cfg.levels));
  }
  if (cfg.dr == 0 && cfg.dc == 0) {
    throw InvalidParams("GLCM offset must not be (0, 0)");
  }
}

std::string format_metric(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string format_metric(const std::optional<double>& v) {
  return v ? format_metric(*v) : std::string("undefined");
}

}  // namespace

Histogram histogram(const GrayImage& img) {
  require_nonempty(img);
  Histogram h;
  for (std::uint8_t v : img.pixels()) {
    ++h.counts[v];
  }
  h.total = img.pixel_count();
  return h;
}

double shannon_entropy(const GrayImage& img) {
  const Histogram h = histogram(img);
  const double total = static_cast<double>(h.total);
  double entropy = 0.0;
  for (std::uint64_t count : h.counts) {
    if (count == 0) continue;
    const double p = static_cast<double>(count) / total;
    entropy -= p * std::log2(p);
  }
  return entropy;
}

GlcmMatrix glcm(const GrayImage& img, const GlcmConfig& cfg) {
  require_nonempty(img);
  validate_config(cfg);

  const std::uint32_t levels = cfg.levels;
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(levels) * levels, 0);
  std::uint64_t total = 0;

  const auto bin = [levels](std::uint8_t v) {
    return static_cast<std::uint32_t>(v) * levels / 256;
  };

  const std::int64_t h = img.height();
  const std::int64_t w = img.width();
  for (std::int64_t r = 0; r < h; ++r) {
    const std::int64_t r2 = r + cfg.dr;
    if (r2 < 0 || r2 >= h) continue;
    for (std::int64_t c = 0; c < w; ++c) {
      const std::int64_t c2 = c + cfg.dc;
      if (c2 < 0 || c2 >= w) continue;
      const std::uint32_t i = bin(img.at(static_cast<std::uint32_t>(r),
                                         static_cast<std::uint32_t>(c)));
      const std::uint32_t j = bin(img.at(static_cast<std::uint32_t>(r2),
                                         static_cast<std::uint32_t>(c2)));
      ++counts[static_cast<std::size_t>(i) * levels + j];
      ++total;
      if (cfg.symmetric) {
        ++counts[static_cast<std::size_t>(j) * levels + i];
        ++total;
      }
    }
  }

  if (total == 0) {
    throw NoPairs("GLCM: no pixel pair fits offset (" + std::to_string(cfg.dr) +
                  ", " + std::to_string(cfg.dc) + ") in a " +
                  std::to_string(img.height()) + "x" + std::to_string(img.width()) +
                  " image");
  }

  GlcmMatrix m(levels);
  for (std::uint32_t i = 0; i < levels; ++i) {
    for (std::uint32_t j = 0; j < levels; ++j) {
      m.at(i, j) = static_cast<double>(counts[static_cast<std::size_t>(i) * levels + j]) /
                   static_cast<double>(total);
    }
  }
  return m;
}

double glcm_contrast(const GlcmMatrix& m) {
  double acc = 0.0;
  for (std::uint32_t i = 0; i < m.levels(); ++i) {
    for (std::uint32_t j = 0; j < m.levels(); ++j) {
      const double d = static_cast<double>(i) - static_cast<double>(j);
      acc += m.at(i, j) * d * d;
    }
  }
  return acc;
}

double glcm_energy(const GlcmMatrix& m) {
  double acc = 0.0;
  for (double p : m.values()) {
    acc += p * p;
  }
  return acc;
}

double glcm_homogeneity(const GlcmMatrix& m) {
  double acc = 0.0;
  for (std::uint32_t i = 0; i < m.levels(); ++i) {
    for (std::uint32_t j = 0; j < m.levels(); ++j) {
      acc += m.at(i, j) / (1.0 + std::abs(static_cast<double>(i) - static_cast<double>(j)));
    }
  }
  return acc;
}

std::optional<double> glcm_correlation(const GlcmMatrix& m) {
  const std::uint32_t n = m.levels();
  std::vector<double> pi(n, 0.0);
  std::vector<double> pj(n, 0.0);
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      pi[i] += m.at(i, j);
      pj[j] += m.at(i, j);
    }
  }
  double mu_i = 0.0, mu_j = 0.0;
  for (std::uint32_t k = 0; k < n; ++k) {
    mu_i += k * pi[k];
    mu_j += k * pj[k];
  }
  double var_i = 0.0, var_j = 0.0;
  for (std::uint32_t k = 0; k < n; ++k) {
    var_i += (k - mu_i) * (k - mu_i) * pi[k];
    var_j += (k - mu_j) * (k - mu_j) * pj[k];
  }
  const double sigma = std::sqrt(var_i) * std::sqrt(var_j);
  if (sigma == 0.0) {
    return std::nullopt;
  }
  double acc = 0.0;
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      acc += m.at(i, j) * (i - mu_i) * (j - mu_j);
    }
  }
  return acc / sigma;
}

double key_space_bits(std::span<const double> confusion_bits_per_stage,
                      double diffusion_bits, std::uint32_t n, std::uint32_t m) {
  double confusion = 0.0;
  for (double b : confusion_bits_per_stage) {
    if (b < 0.0) {
      throw InvalidParams("key_space_bits: negative confusion bits");
    }
    confusion += b;
  }
  if (diffusion_bits < 0.0) {
    throw InvalidParams("key_space_bits: negative diffusion bits");
  }
  return static_cast<double>(m) *
         (static_cast<double>(n) * confusion + diffusion_bits);
}

SecurityReport build_report(const GrayImage& img, const GlcmConfig& cfg) {
  SecurityReport report;
  report.hist = histogram(img);
  report.entropy = shannon_entropy(img);
  const GlcmMatrix m = glcm(img, cfg);
  report.contrast = glcm_contrast(m);
  report.correlation = glcm_correlation(m);
  report.energy = glcm_energy(m);
  report.homogeneity = glcm_homogeneity(m);
  return report;
}

std::string report_csv(const SecurityReport& report) {
  std::string out = "entropy,contrast,correlation,energy,homogeneity\n";
  out += format_metric(report.entropy) + ",";
  out += format_metric(report.contrast) + ",";
  out += format_metric(report.correlation) + ",";
  out += format_metric(report.energy) + ",";
  out += format_metric(report.homogeneity) + "\n";
  return out;
}

std::string format_report_table(std::span<const std::string> labels,
                                std::span<const SecurityReport> reports) {
  if (labels.size() != reports.size()) {
    throw InvalidParams("format_report_table: labels/reports size mismatch");
  }

  const char* row_names[] = {"Entropy", "Contrast", "Correlation", "Energy",
                             "Homogeneity"};
  std::vector<std::vector<std::string>> cells(5);
  for (const SecurityReport& r : reports) {
    cells[0].push_back(format_metric(r.entropy));
    cells[1].push_back(format_metric(r.contrast));
    cells[2].push_back(format_metric(r.correlation));
    cells[3].push_back(format_metric(r.energy));
    cells[4].push_back(format_metric(r.homogeneity));
  }

  std::size_t name_width = 0;
  for (const char* n : row_names) name_width = std::max(name_width, std::string(n).size());
  std::vector<std::size_t> col_width(labels.size());
  for (std::size_t c = 0; c < labels.size(); ++c) {
    col_width[c] = labels[c].size();
    for (const auto& row : cells) col_width[c] = std::max(col_width[c], row[c].size());
  }

  auto pad = [](const std::string& s, std::size_t w) {
    return s + std::string(w - s.size(), ' ');
  };

  std::string out = pad("Metric", name_width);
  for (std::size_t c = 0; c < labels.size(); ++c) {
    out += "  " + pad(labels[c], col_width[c]);
  }
  out += "\n";
  for (std::size_t r = 0; r < 5; ++r) {
    out += pad(row_names[r], name_width);
    for (std::size_t c = 0; c < labels.size(); ++c) {
      out += "  " + pad(cells[r][c], col_width[c]);
    }
    out += "\n";
  }
  return out;
}

}  // namespace srss
