// kspm: fixed points, avalanches, interval transducers and verification
// suites for the Kadanoff sand pile model KSPM(D).

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "kspm/error.hpp"

int main(int argc, char** argv) {
  using namespace kspm::cli;

  CLI::App app{"Kadanoff sand pile model laboratory"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string out_path;
  std::vector<int> verify_ds;
  std::vector<std::uint64_t> pipeline_ns;
  std::optional<std::uint64_t> verify_n_max;
  std::optional<std::uint64_t> samples;

  const auto add_d = [&](CLI::App* cmd) { cmd->add_option("--d", cfg.d, "rule parameter D >= 2"); };
  const auto add_out = [&](CLI::App* cmd) {
    cmd->add_option("--out", out_path, "write output to this file instead of stdout");
  };

  auto* fixedpoint = app.add_subcommand("fixedpoint", "compute pi(N)");
  add_d(fixedpoint);
  fixedpoint->add_option("--n", cfg.n, "number of grains")->required();
  fixedpoint->add_option("--format", cfg.format, "json | heights | ascii");
  add_out(fixedpoint);

  auto* avalanches = app.add_subcommand("avalanches", "long avalanches up to N");
  add_d(avalanches);
  avalanches->add_option("--n", cfg.n, "number of grains")->required();
  avalanches->add_option("--format", cfg.format, "ascii | svg | jsonl (all avalanches)");
  avalanches->add_option("--interval", cfg.interval, "interval whose influent runs are annotated");
  avalanches->add_option("--threshold", cfg.threshold, "strict | relaxed type threshold");
  add_out(avalanches);

  auto* transducer = app.add_subcommand("transducer", "interval word transducer");
  transducer->require_subcommand(1);
  auto* build = transducer->add_subcommand("build", "emit the machine as DOT");
  auto* run = transducer->add_subcommand("run", "transduce one word");
  auto* steps = transducer->add_subcommand("steps", "iterate t until a prefix of (ab)^omega");
  for (auto* cmd : {build, run, steps}) {
    add_d(cmd);
    cmd->add_option("--mode", cfg.mode, "algorithm-exact | figure-suppressed");
    cmd->add_flag("--ab", cfg.ab, "render D = 3 letters as a/b");
    add_out(cmd);
  }
  run->add_option("--input", cfg.input, "input word (digits, or a/b for D = 3)")->required();
  run->add_option("--from", cfg.from, "start state label, e.g. 21");
  steps->add_option("--input", cfg.input, "input word")->required();

  auto* sweep = app.add_subcommand("sweep", "wave start i_N for N = 0..N_max as CSV");
  add_d(sweep);
  sweep->add_option("--n-max", cfg.n_max, "largest N")->required();
  sweep->add_option("--format", cfg.format, "csv");
  add_out(sweep);

  auto* pipeline = app.add_subcommand("pipeline", "simulated type words vs transducer images");
  add_d(pipeline);
  pipeline->add_option("--n", cfg.n, "number of grains")->required();
  pipeline->add_flag("--ab", cfg.ab, "render D = 3 words as a/b");
  add_out(pipeline);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", cfg.suite,
                     "core-laws | avalanche-lemmas | appendix-words | theorem3 | conjectureD")
      ->required();
  verify->add_option("--seed", cfg.verify.seed, "seed for randomized checks");
  verify->add_option("--n-max", verify_n_max, "largest N for the selected suite");
  verify->add_option("--d", verify_ds, "restrict the D values (avalanche-lemmas, conjectureD)");
  verify->add_option("--samples", samples, "random samples");
  verify->add_option("--pipeline-n", pipeline_ns, "N values for the theorem3 pipeline check");
  verify->add_option("--format", cfg.format, "text | json");
  add_out(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  if (samples) cfg.verify.samples = *samples;
  if (!pipeline_ns.empty()) cfg.verify.pipeline_ns = pipeline_ns;
  if (!verify_ds.empty()) {
    cfg.verify.lemma_ds = verify_ds;
    cfg.verify.conjecture_ds = verify_ds;
  }
  if (verify_n_max) {
    if (cfg.suite == "core-laws") cfg.verify.direct_n_max = *verify_n_max;
    if (cfg.suite == "avalanche-lemmas") cfg.verify.lemma_n_max = *verify_n_max;
    if (cfg.suite == "theorem3") cfg.verify.theorem_n_max = *verify_n_max;
    if (cfg.suite == "conjectureD") cfg.verify.conjecture_n_max = *verify_n_max;
  }

  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      std::cerr << "error: cannot open " << out_path << " for writing\n";
      return kExitUsage;
    }
  }
  std::ostream& out = out_path.empty() ? std::cout : file;

  try {
    if (*fixedpoint) return cmd_fixedpoint(cfg, out);
    if (*avalanches) return cmd_avalanches(cfg, out);
    if (*build) return cmd_transducer_build(cfg, out);
    if (*run) return cmd_transducer_run(cfg, out);
    if (*steps) return cmd_transducer_steps(cfg, out);
    if (*sweep) return cmd_sweep(cfg, out);
    if (*pipeline) return cmd_pipeline(cfg, out);
    if (*verify) return cmd_verify(cfg, out);
  } catch (const kspm::InputError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailed;
  }
  return kExitUsage;
}
