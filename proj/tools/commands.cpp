#include "commands.hpp"

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bench.hpp"
#include "blakley/analysis.hpp"
#include "blakley/random.hpp"
#include "blakley/scheme.hpp"
#include "blakley/share_io.hpp"

namespace blakley::tools {

namespace {

namespace fs = std::filesystem;

// Failure that is not a library Error: unreadable files, bad combinations of
// flags.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::AdmissibilityExhausted: return kAdmissibilityExhausted;
    case ErrorCode::SingularShares: return kSingularShares;
    case ErrorCode::EnumerationTooLarge: return kEnumerationTooLarge;
    default: return kUsage;
  }
}

std::unique_ptr<RandomSource> make_rng(const std::optional<std::uint64_t>& seed) {
  if (seed) return std::make_unique<SeededRandom>(*seed);
  return std::make_unique<EntropyRandom>();
}

Share read_share_file(const std::string& path) {
  std::ifstream in(path);
  std::string line;
  if (!in || !std::getline(in, line)) {
    throw UsageError("cannot read share file '" + path + "'");
  }
  try {
    return decode_share(line);
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.detail());
  }
}

std::vector<Share> read_share_files(const std::vector<std::string>& paths) {
  std::vector<Share> shares;
  shares.reserve(paths.size());
  for (const std::string& path : paths) shares.push_back(read_share_file(path));
  return shares;
}

std::vector<std::string> variable_names(std::size_t t) {
  if (t == 2) return {"x", "y"};
  if (t == 3) return {"x", "y", "z"};
  std::vector<std::string> names;
  for (std::size_t j = 1; j <= t; ++j) names.push_back("x" + std::to_string(j));
  return names;
}

struct SplitArgs {
  std::uint64_t secret = 0;
  std::uint64_t prime = 0;
  std::size_t threshold = 0;
  std::size_t shares = 0;
  std::string out_dir;
  std::optional<std::uint64_t> seed;
};

int cmd_split(const SplitArgs& args) {
  const PrimeModulus p(args.prime);
  if (args.secret >= p.value()) {
    throw Error(ErrorCode::InvalidParams, "secret must be < p");
  }
  const SchemeParams params(p, args.threshold, args.shares);
  auto rng = make_rng(args.seed);
  const std::vector<Share> shares = split(FieldElement(args.secret, p), params, *rng);

  std::error_code ec;
  fs::create_directories(args.out_dir, ec);
  if (ec) throw UsageError("cannot create '" + args.out_dir + "': " + ec.message());
  for (const Share& s : shares) {
    const fs::path path =
        fs::path(args.out_dir) / ("share_" + std::to_string(s.index) + ".blk");
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    file << encode_share(s);
    if (!file) throw UsageError("cannot write '" + path.string() + "'");
  }
  return kOk;
}

int cmd_combine(const std::vector<std::string>& files, std::ostream& out) {
  if (files.empty()) throw Error(ErrorCode::WrongShareCount, "no share files given");
  const std::vector<Share> shares = read_share_files(files);
  out << reconstruct(shares).value() << '\n';
  return kOk;
}

struct AnalyzeArgs {
  std::vector<std::string> files;
  std::string csv_path;
  std::optional<std::uint64_t> prime;
  std::optional<std::size_t> threshold;
};

int cmd_analyze(const AnalyzeArgs& args, std::ostream& out) {
  const std::vector<Share> shares = read_share_files(args.files);
  std::optional<SchemeParams> params;
  if (!shares.empty()) {
    params = shares.front().params;
    if ((args.prime && *args.prime != params->modulus().value()) ||
        (args.threshold && *args.threshold != params->threshold())) {
      throw UsageError("--prime/--threshold disagree with the share files");
    }
  } else {
    if (!args.prime || !args.threshold) {
      throw UsageError("with no share files, --prime and --threshold are required");
    }
    params.emplace(PrimeModulus(*args.prime), *args.threshold, *args.threshold);
  }
  const LeakageReport report = candidate_secrets(*params, shares);
  write_text(out, report);
  if (!args.csv_path.empty()) {
    std::ofstream csv(args.csv_path, std::ios::trunc);
    write_csv(csv, report);
    if (!csv) throw UsageError("cannot write '" + args.csv_path + "'");
  }
  return kOk;
}

int cmd_inspect(const std::string& file, std::ostream& out) {
  const Share s = read_share_file(file);
  const SchemeParams& params = s.params;
  out << "p:        " << params.modulus().value() << '\n'
      << "t:        " << params.threshold() << '\n'
      << "n:        " << params.shareholders() << '\n'
      << "index:    " << s.index << '\n'
      << "coeffs:   ";
  for (std::size_t j = 0; j < s.coeffs.size(); ++j) {
    out << (j == 0 ? "" : ", ") << s.coeffs[j];
  }
  out << '\n' << "constant: " << s.constant << '\n';

  const std::vector<std::string> names = variable_names(params.threshold());
  out << names.back() << " = ";
  for (std::size_t j = 0; j < s.coeffs.size(); ++j) {
    out << s.coeffs[j] << names[j] << " + ";
  }
  out << s.constant << " (mod " << params.modulus().value() << ")\n";
  return kOk;
}

struct BenchArgs {
  BenchConfig config;
  std::string out_path;
  std::uint64_t seed = 1;
};

int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& err) {
  if (args.config.primes == 0) throw UsageError("--primes must be >= 1");
  if (args.config.trials == 0) throw UsageError("--trials must be >= 1");
  // Validates t and n before any timing starts.
  static_cast<void>(
      SchemeParams(PrimeModulus(2), args.config.threshold, args.config.shareholders));

  SeededRandom rng(args.seed);
  const std::vector<BenchRow> rows = run_bench(args.config, rng, err);
  if (args.out_path.empty()) {
    write_bench_csv(out, rows);
    return kOk;
  }
  std::ofstream csv(args.out_path, std::ios::trunc);
  write_bench_csv(csv, rows);
  if (!csv) throw UsageError("cannot write '" + args.out_path + "'");
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Blakley (t, n) threshold secret sharing over GF(p)", "blakley"};
  app.require_subcommand(1);

  SplitArgs split_args;
  CLI::App* split_cmd = app.add_subcommand("split", "Deal n share files for a secret");
  split_cmd->add_option("--secret", split_args.secret, "Secret, 0 <= S < p")->required();
  split_cmd->add_option("--prime", split_args.prime, "Prime modulus p")->required();
  split_cmd->add_option("--threshold", split_args.threshold, "Shares needed (t)")->required();
  split_cmd->add_option("--shares", split_args.shares, "Shares dealt (n)")->required();
  split_cmd->add_option("--out", split_args.out_dir, "Output directory")->required();
  split_cmd->add_option("--seed", split_args.seed, "Deterministic RNG seed");

  std::vector<std::string> combine_files;
  CLI::App* combine_cmd =
      app.add_subcommand("combine", "Recover the secret from exactly t share files");
  combine_cmd->add_option("files", combine_files, "Share files")->required();

  AnalyzeArgs analyze_args;
  CLI::App* analyze_cmd = app.add_subcommand(
      "analyze", "Enumerate what fewer than t shares reveal about the secret");
  analyze_cmd->add_option("files", analyze_args.files, "Share files (fewer than t)");
  analyze_cmd->add_option("--csv", analyze_args.csv_path, "Also write value,count CSV");
  analyze_cmd->add_option("--prime", analyze_args.prime, "Modulus when no files are given");
  analyze_cmd->add_option("--threshold", analyze_args.threshold,
                          "Threshold when no files are given");

  std::string inspect_file;
  CLI::App* inspect_cmd = app.add_subcommand("inspect", "Describe one share file");
  inspect_cmd->add_option("file", inspect_file, "Share file")->required();

  BenchArgs bench_args;
  CLI::App* bench_cmd =
      app.add_subcommand("bench", "Time split and reconstruct over the first K primes");
  bench_cmd->add_option("--primes", bench_args.config.primes, "Number of primes (K)");
  bench_cmd->add_option("--shares", bench_args.config.shareholders, "Shareholders (n)");
  bench_cmd->add_option("--threshold", bench_args.config.threshold, "Threshold (t)");
  bench_cmd->add_option("--trials", bench_args.config.trials, "Trials per prime (R)");
  bench_cmd->add_option("--out", bench_args.out_path, "CSV path (default: stdout)");
  bench_cmd->add_option("--seed", bench_args.seed, "RNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*split_cmd) return cmd_split(split_args);
    if (*combine_cmd) return cmd_combine(combine_files, out);
    if (*analyze_cmd) return cmd_analyze(analyze_args, out);
    if (*inspect_cmd) return cmd_inspect(inspect_file, out);
    if (*bench_cmd) return cmd_bench(bench_args, out, err);
  } catch (const Error& e) {
    err << "blakley: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const UsageError& e) {
    err << "blakley: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "blakley: internal error: " << e.what() << '\n';
    return kInternalError;
  }
  return kUsage;
}

}  // namespace blakley::tools
