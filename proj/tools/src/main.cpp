#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "frobkit_cli/session.hpp"

int main(int argc, char** argv) {
  CLI::App app{"frobkit: Cartier crystals and gamma-sheaves over finite fields"};
  app.require_subcommand(1);

  std::string session_path, out_path;
  frobkit::Budget budget;
  auto* run = app.add_subcommand("run", "Execute the commands of a session file");
  run->add_option("session", session_path, "Session JSON file")->required();
  run->add_option("--out", out_path, "Write JSON-lines here instead of stdout");
  run->add_option("--spair-budget", budget.spair_limit, "S-pairs per Groebner computation");
  run->add_option("--chain-budget", budget.chain_limit, "Levels of a stable-image chain");
  run->add_option("--saturation-budget", budget.saturation_limit, "Quotient rounds in a saturation");
  run->add_option("--point-guard", budget.point_guard, "Candidates in point enumeration");

  std::uint64_t seed = 20240601;
  bool quick = false;
  auto* suite = app.add_subcommand("verify-suite", "Run the acceptance battery");
  suite->add_option("--seed", seed, "Seed for the random instance sets");
  suite->add_flag("--quick", quick, "Smaller instance sets");

  CLI11_PARSE(app, argc, argv);

  if (*suite) return frobkit::cli::run_verify_suite(seed, quick, std::cout, std::cerr);

  std::ifstream in(session_path);
  if (!in) {
    std::cout << R"({"status":"error","error":{"kind":"io_error","message":"cannot read )" << session_path << "\"}}\n";
    return frobkit::cli::kInputError;
  }
  std::stringstream text;
  text << in.rdbuf();
  if (out_path.empty()) return frobkit::cli::run_session(text.str(), std::cout, std::cerr, budget);
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "frobkit: cannot write " << out_path << '\n';
    return frobkit::cli::kInputError;
  }
  return frobkit::cli::run_session(text.str(), out, std::cerr, budget);
}
