// srss: grayscale image encryption toolkit built around the SRSS
// single-round single-S-box scheme and its CROSS operation selector,
// with the classical substitution baselines and statistical reports.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "srss/analysis.hpp"
#include "srss/chaos.hpp"
#include "srss/cipher.hpp"
#include "srss/imgio.hpp"
#include "srss/sbox.hpp"
#include "srss/substitution.hpp"

namespace {

namespace fs = std::filesystem;

struct FileError : srss::ValidationError {
  using srss::ValidationError::ValidationError;
};

std::string read_text_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw FileError("cannot open '" + path.string() + "' for reading");
  }
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_text_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw FileError("cannot open '" + path.string() + "' for writing");
  }
  out << text;
  if (!out) {
    throw FileError("failed writing '" + path.string() + "'");
  }
}

srss::SBox load_sbox_ref(const std::string& ref) {
  if (ref == "aes") {
    return srss::SBox::aes();
  }
  return srss::parse_sbox(read_text_file(ref));
}

void warn_chaos_band(const srss::LogisticParams& params) {
  if (params.mu < 3.57 || params.mu >= 4.0) {
    std::cerr << "warning: mu=" << params.mu
              << " lies outside the chaotic band [3.57, 4); the keystream "
                 "will be weak\n";
  }
}

void warn_equal_modifiers(const srss::SrssKeyFile& kf) {
  if (kf.m1 == kf.m2 && kf.m2 == kf.m3) {
    std::cerr << "warning: m1 = m2 = m3; CROSS degenerates to a fixed XOR "
                 "and flat regions stay flat\n";
  }
}

struct CipherOptions {
  std::string in;
  std::string out;
  std::string key;
  std::string scheme = "srss";
  std::uint32_t rounds = 5;
  std::vector<std::string> sboxes;
};

std::vector<srss::SBox> gather_sboxes(const CipherOptions& opt) {
  if (opt.sboxes.empty()) {
    return srss::default_multi_sboxes();
  }
  std::vector<srss::SBox> boxes;
  boxes.reserve(opt.sboxes.size());
  for (const std::string& path : opt.sboxes) {
    boxes.push_back(load_sbox_ref(path));
  }
  return boxes;
}

void run_cipher(const CipherOptions& opt, bool decrypt) {
  const srss::GrayImage input = srss::load_pgm(opt.in);
  const srss::SrssKeyFile kf = srss::parse_key_file(read_text_file(opt.key));

  srss::GrayImage output;
  if (opt.scheme == "srss") {
    warn_chaos_band(kf.chaos);
    warn_equal_modifiers(kf);
    srss::SrssKey key{kf.chaos, kf.m1, kf.m2, kf.m3, load_sbox_ref(kf.sbox_ref)};
    output = decrypt ? srss::srss_decrypt(input, key)
                     : srss::srss_encrypt(input, key);
  } else if (opt.scheme == "single") {
    const srss::SBox box = opt.sboxes.empty() ? load_sbox_ref(kf.sbox_ref)
                                              : load_sbox_ref(opt.sboxes[0]);
    output = decrypt ? srss::decrypt_single_sbox(input, box)
                     : srss::encrypt_single_sbox(input, box);
  } else if (opt.scheme == "multi") {
    warn_chaos_band(kf.chaos);
    const auto boxes = gather_sboxes(opt);
    output = decrypt ? srss::decrypt_multi_sbox(input, boxes, kf.chaos)
                     : srss::encrypt_multi_sbox(input, boxes, kf.chaos);
  } else {  // multiround
    warn_chaos_band(kf.chaos);
    const auto boxes = gather_sboxes(opt);
    if (decrypt) {
      output = srss::decrypt_multi_round(input, boxes, opt.rounds, kf.chaos);
    } else {
      output = srss::encrypt_multi_round(input, boxes, opt.rounds, kf.chaos).back();
    }
  }
  srss::save_pgm(opt.out, output);
}

struct AnalyzeOptions {
  std::string in;
  std::uint32_t levels = 8;
  std::string offset = "0,1";
  bool symmetric = false;
  std::string csv;
};

srss::GlcmConfig glcm_config(std::uint32_t levels, const std::string& offset,
                             bool symmetric) {
  srss::GlcmConfig cfg;
  cfg.levels = levels;
  cfg.symmetric = symmetric;
  const std::size_t comma = offset.find(',');
  try {
    cfg.dr = std::stoi(offset.substr(0, comma));
    cfg.dc = std::stoi(offset.substr(comma + 1));
  } catch (const std::exception&) {
    throw srss::InvalidParams("bad GLCM offset '" + offset +
                              "', expected 'dr,dc'");
  }
  return cfg;
}

void run_analyze(const AnalyzeOptions& opt) {
  const srss::GrayImage img = srss::load_pgm(opt.in);
  const srss::GlcmConfig cfg = glcm_config(opt.levels, opt.offset, opt.symmetric);
  const srss::SecurityReport report = srss::build_report(img, cfg);

  const std::vector<std::string> labels{fs::path(opt.in).filename().string()};
  const std::vector<srss::SecurityReport> reports{report};
  std::cout << srss::format_report_table(labels, reports);
  if (!opt.csv.empty()) {
    write_text_file(opt.csv, srss::report_csv(report));
  }
}

struct CompareOptions {
  std::string plain;
  std::string key;
  std::vector<std::string> schemes;
  std::uint32_t rounds = 5;
  std::vector<std::string> sboxes;
  std::uint32_t levels = 8;
  std::string offset = "0,1";
  bool symmetric = false;
};

void run_compare(const CompareOptions& opt) {
  const srss::GrayImage plain = srss::load_pgm(opt.plain);
  const srss::SrssKeyFile kf = srss::parse_key_file(read_text_file(opt.key));
  const srss::GlcmConfig cfg = glcm_config(opt.levels, opt.offset, opt.symmetric);

  std::vector<std::string> labels{"Plain"};
  std::vector<srss::SecurityReport> reports{srss::build_report(plain, cfg)};

  CipherOptions cipher_opt;
  cipher_opt.sboxes = opt.sboxes;

  for (const std::string& scheme : opt.schemes) {
    if (scheme == "srss") {
      warn_chaos_band(kf.chaos);
      warn_equal_modifiers(kf);
      srss::SrssKey key{kf.chaos, kf.m1, kf.m2, kf.m3,
                        load_sbox_ref(kf.sbox_ref)};
      labels.push_back("SRSS");
      reports.push_back(srss::build_report(srss::srss_encrypt(plain, key), cfg));
    } else if (scheme == "single") {
      const srss::SBox box = opt.sboxes.empty() ? load_sbox_ref(kf.sbox_ref)
                                                : load_sbox_ref(opt.sboxes[0]);
      labels.push_back("Single");
      reports.push_back(
          srss::build_report(srss::encrypt_single_sbox(plain, box), cfg));
    } else if (scheme == "multi") {
      warn_chaos_band(kf.chaos);
      const auto boxes = gather_sboxes(cipher_opt);
      labels.push_back("Multi");
      reports.push_back(srss::build_report(
          srss::encrypt_multi_sbox(plain, boxes, kf.chaos), cfg));
    } else {  // multiround
      warn_chaos_band(kf.chaos);
      const auto boxes = gather_sboxes(cipher_opt);
      const auto rounds = srss::encrypt_multi_round(plain, boxes, opt.rounds,
                                                    kf.chaos);
      for (std::size_t r = 0; r < rounds.size(); ++r) {
        labels.push_back("Round " + std::to_string(r + 1));
        reports.push_back(srss::build_report(rounds[r], cfg));
      }
    }
  }
  std::cout << srss::format_report_table(labels, reports);
}

struct GenSboxOptions {
  double mu = 0;
  double x0 = 0;
  std::uint64_t discard = 1000;
  std::string out;
};

void run_gen_sbox(const GenSboxOptions& opt) {
  const srss::LogisticParams params{opt.mu, opt.x0, opt.discard};
  warn_chaos_band(params);
  write_text_file(opt.out, srss::serialize_sbox(srss::generate_chaotic_sbox(params)));
}

struct GenImageOptions {
  std::string kind = "disks";
  std::string size = "256x256";
  std::uint64_t seed = 0;
  std::string out;
};

void run_gen_image(const GenImageOptions& opt) {
  srss::SynthSpec spec = srss::parse_synth_kind(opt.kind);
  const std::size_t x = opt.size.find('x');
  try {
    spec.width = static_cast<std::uint32_t>(std::stoul(opt.size.substr(0, x)));
    spec.height = static_cast<std::uint32_t>(std::stoul(opt.size.substr(x + 1)));
  } catch (const std::exception&) {
    throw srss::InvalidParams("bad image size '" + opt.size +
                              "', expected 'WxH'");
  }
  spec.seed = opt.seed;
  srss::save_pgm(opt.out, srss::synth(spec));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SRSS grayscale image encryption toolkit"};
  app.require_subcommand(1);

  const std::vector<std::string> scheme_names{"srss", "single", "multi",
                                              "multiround"};

  CipherOptions enc;
  CLI::App* encrypt = app.add_subcommand("encrypt", "Encrypt a PGM image");
  encrypt->add_option("--in", enc.in, "Input PGM image")->required();
  encrypt->add_option("--out", enc.out, "Output PGM image")->required();
  encrypt->add_option("--key", enc.key, "Key file")->required();
  encrypt->add_option("--scheme", enc.scheme, "Cipher scheme")
      ->check(CLI::IsMember(scheme_names));
  encrypt->add_option("--rounds", enc.rounds, "Rounds for scheme multiround")
      ->check(CLI::PositiveNumber);
  encrypt->add_option("--sboxes", enc.sboxes,
                      "Comma-separated S-box files for multi schemes")
      ->delimiter(',');

  CipherOptions dec;
  CLI::App* decrypt = app.add_subcommand("decrypt", "Decrypt a PGM image");
  decrypt->add_option("--in", dec.in, "Input PGM image")->required();
  decrypt->add_option("--out", dec.out, "Output PGM image")->required();
  decrypt->add_option("--key", dec.key, "Key file")->required();
  decrypt->add_option("--scheme", dec.scheme, "Cipher scheme")
      ->check(CLI::IsMember(scheme_names));
  decrypt->add_option("--rounds", dec.rounds, "Rounds for scheme multiround")
      ->check(CLI::PositiveNumber);
  decrypt->add_option("--sboxes", dec.sboxes,
                      "Comma-separated S-box files for multi schemes")
      ->delimiter(',');

  AnalyzeOptions ana;
  CLI::App* analyze =
      app.add_subcommand("analyze", "Statistical security report of an image");
  analyze->add_option("--in", ana.in, "Input PGM image")->required();
  analyze->add_option("--glcm-levels", ana.levels, "GLCM quantization levels")
      ->check(CLI::Range(2u, 256u));
  analyze->add_option("--glcm-offset", ana.offset, "GLCM offset as dr,dc");
  analyze->add_flag("--symmetric", ana.symmetric, "Count transposed pairs too");
  analyze->add_option("--csv", ana.csv, "Also write the report as CSV");

  CompareOptions cmp;
  CLI::App* compare = app.add_subcommand(
      "compare", "Encrypt with several schemes and tabulate their reports");
  compare->add_option("--plain", cmp.plain, "Plaintext PGM image")->required();
  compare->add_option("--key", cmp.key, "Key file")->required();
  compare->add_option("--schemes", cmp.schemes, "Schemes to compare")
      ->required()
      ->delimiter(',')
      ->check(CLI::IsMember(scheme_names));
  compare->add_option("--rounds", cmp.rounds, "Rounds for scheme multiround")
      ->check(CLI::PositiveNumber);
  compare->add_option("--sboxes", cmp.sboxes,
                      "Comma-separated S-box files for multi schemes")
      ->delimiter(',');
  compare->add_option("--glcm-levels", cmp.levels, "GLCM quantization levels")
      ->check(CLI::Range(2u, 256u));
  compare->add_option("--glcm-offset", cmp.offset, "GLCM offset as dr,dc");
  compare->add_flag("--symmetric", cmp.symmetric, "Count transposed pairs too");

  GenSboxOptions gsb;
  CLI::App* gen_sbox =
      app.add_subcommand("gen-sbox", "Generate a keyed chaotic S-box file");
  gen_sbox->add_option("--mu", gsb.mu, "Logistic control parameter")->required();
  gen_sbox->add_option("--x0", gsb.x0, "Logistic initial condition")->required();
  gen_sbox->add_option("--discard", gsb.discard, "Transient iterations to drop");
  gen_sbox->add_option("--out", gsb.out, "Output S-box file")->required();

  GenImageOptions gim;
  CLI::App* gen_image =
      app.add_subcommand("gen-image", "Generate a synthetic test image");
  gen_image->add_option("--kind", gim.kind,
                        "disks, gradient, uniform-random, constant(v), "
                        "checkerboard(c)");
  gen_image->add_option("--size", gim.size, "Image size as WxH");
  gen_image->add_option("--seed", gim.seed, "Deterministic seed");
  gen_image->add_option("--out", gim.out, "Output PGM image")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (encrypt->parsed()) {
      run_cipher(enc, false);
    } else if (decrypt->parsed()) {
      run_cipher(dec, true);
    } else if (analyze->parsed()) {
      run_analyze(ana);
    } else if (compare->parsed()) {
      run_compare(cmp);
    } else if (gen_sbox->parsed()) {
      run_gen_sbox(gsb);
    } else if (gen_image->parsed()) {
      run_gen_image(gim);
    }
  } catch (const srss::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  }
  return 0;
}
