// Command-line front end: distributions, truncated counts, closed-form
// verification, moment reports, and brute-force cross-checks for the
// occurrence statistics of increasing permutation patterns.
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "gwilf/commands.hpp"
#include "gwilf/common.hpp"
#include "gwilf/errors.hpp"

namespace {

void add_common_options(CLI::App* cmd, gwilf::cli::CommonOptions& opts,
                        bool with_bfile = false) {
  cmd->add_option("--k", opts.k, "Pattern length (increasing pattern 1..k)");
  cmd->add_option("--pattern", opts.pattern, "Pattern as digits, e.g. 123 or 1234");
  const std::vector<std::string> formats =
      with_bfile ? std::vector<std::string>{"text", "json", "bfile"}
                 : std::vector<std::string>{"text", "json"};
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember(formats))
      ->capture_default_str();
  cmd->add_option("--out", opts.out_path, "Write output to a file instead of stdout");
  cmd->add_option("--threads", opts.threads, "Worker threads for one engine run")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--max-states", opts.max_states,
                  "Abort after visiting this many scheme states (0 = unlimited)");
  cmd->add_option("--max-seconds", opts.max_seconds,
                  "Abort after this much wall-clock time (0 = unlimited)");
  cmd->add_flag("--force", opts.force,
                "Lift feasibility guards (explicit budgets still apply)");
  cmd->add_flag("--cache", opts.use_cache,
                "Reuse and update the on-disk result cache (GWILF_CACHE_DIR)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Enumeration of permutations by occurrence counts of increasing "
               "patterns"};
  app.require_subcommand(1);

  gwilf::cli::CommonOptions dist_opts;
  std::string dist_mode = "exact";
  CLI::App* dist = app.add_subcommand(
      "dist", "Full distribution polynomial of occurrence counts over S_n");
  add_common_options(dist, dist_opts);
  dist->add_option("--n", dist_opts.n_spec, "Permutation length")->required();
  dist->add_option("--mode", dist_mode, "exact (engine) or brute (exhaustive)")
      ->check(CLI::IsMember({"exact", "brute"}))
      ->capture_default_str();

  gwilf::cli::CommonOptions counts_opts;
  unsigned counts_r = 0;
  CLI::App* counts = app.add_subcommand(
      "counts", "Number of n-permutations with exactly r occurrences");
  add_common_options(counts, counts_opts, /*with_bfile=*/true);
  counts->add_option("--n", counts_opts.n_spec, "Permutation length or range lo..hi")
      ->required();
  counts->add_option("--r", counts_r, "Occurrence count")->required();

  gwilf::cli::CommonOptions verify_opts;
  std::string verify_r = "0..7";
  CLI::App* verify = app.add_subcommand(
      "verify", "Compare the closed forms for the length-3 pattern against the engine");
  add_common_options(verify, verify_opts);
  verify->add_option("--n", verify_opts.n_spec, "Range of n, e.g. 4..25")->required();
  verify->add_option("--r", verify_r, "Occurrence count or range within 0..7")
      ->capture_default_str();

  gwilf::cli::CommonOptions oracle_opts;
  CLI::App* oracle = app.add_subcommand(
      "oracle", "Cross-check engine distributions against brute-force enumeration");
  add_common_options(oracle, oracle_opts);
  oracle->add_option("--n", oracle_opts.n_spec, "Permutation length or range lo..hi")
      ->required();

  gwilf::cli::CommonOptions moments_opts;
  int moments_order = 6;
  CLI::App* moments = app.add_subcommand(
      "moments", "Mean, centered and standardized moments of the occurrence count");
  add_common_options(moments, moments_opts);
  moments->add_option("--n", moments_opts.n_spec, "Permutation length or range lo..hi")
      ->required();
  moments->add_option("--order", moments_order, "Highest moment order")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;  // usage errors are exit code 1
  }

  try {
    if (app.got_subcommand(dist)) return gwilf::cli::cmd_dist(dist_opts, dist_mode);
    if (app.got_subcommand(counts)) return gwilf::cli::cmd_counts(counts_opts, counts_r);
    if (app.got_subcommand(verify)) return gwilf::cli::cmd_verify(verify_opts, verify_r);
    if (app.got_subcommand(oracle)) return gwilf::cli::cmd_oracle(oracle_opts);
    if (app.got_subcommand(moments))
      return gwilf::cli::cmd_moments(moments_opts, moments_order);
  } catch (const gwilf::ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
