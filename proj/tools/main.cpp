// Copyright (c) 2026 slfem contributors
// SPDX-License-Identifier: Apache-2.0

#include <CLI11.hpp>
#include <iostream>

#include "slfem/runner.hpp"

namespace {

slfem::RunConfig load_config(const std::string& path,
                             const std::string& output_dir, int threads,
                             unsigned seed, bool seed_set) {
  slfem::RunConfig cfg = slfem::parse_config_file(path);
  if (!output_dir.empty()) cfg.output_dir = output_dir;
  if (threads > 0) cfg.threads = threads;
  if (seed_set) cfg.seed = seed;
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Crack-tip fields in strain-limiting transversely isotropic "
               "plates (quadrilateral FEM with fixed-point linearization)"};
  app.require_subcommand(1);

  std::string config_path;
  std::string output_dir;
  int threads = 0;
  unsigned seed = 0;
  bool seed_set = false;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("config", config_path, "configuration file")->required();
    sub->add_option("--output-dir", output_dir, "override output directory");
    sub->add_option("--threads", threads, "worker threads for sweep points");
    sub->add_option("--seed", seed, "seed for property-test utilities")
        ->each([&](const std::string&) { seed_set = true; });
  };

  CLI::App* run = app.add_subcommand("run", "run the configured case/sweep");
  add_common(run);
  CLI::App* compare = app.add_subcommand(
      "compare-loads", "contrast load profiles on the crack line");
  add_common(compare);
  CLI::App* info = app.add_subcommand("mesh-info", "print mesh statistics");
  add_common(info);

  CLI11_PARSE(app, argc, argv);

  try {
    const slfem::RunConfig cfg =
        load_config(config_path, output_dir, threads, seed, seed_set);
    if (run->parsed()) return slfem::run_command(cfg, std::cout);
    if (compare->parsed()) return slfem::compare_loads_command(cfg, std::cout);
    if (info->parsed()) return slfem::mesh_info_command(cfg, std::cout);
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }
  return 0;
}
