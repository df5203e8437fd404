// Copyright 2026 The sfft Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
  using sfft::cli::Format;
  sfft::cli::RunConfig cfg;
  CLI::App app{"Fourier transforms of signals with a known spectral frequency support"};
  app.require_subcommand(1);

  std::string format = "text";
  const std::map<std::string, Format> formats{{"text", Format::kText},
                                              {"delimited", Format::kDelimited}};
  auto common = [&](CLI::App* sub) {
    sub->add_option("--output,-o", cfg.output, "Write results here instead of stdout");
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "delimited"}));
  };

  auto* analyze = app.add_subcommand("analyze", "Pivots, conformity, sample set and twiddles");
  analyze->add_option("--input,-i", cfg.input, "Support document")->required();
  common(analyze);

  auto* generate = app.add_subcommand("generate", "Random spectral support document");
  generate->add_option("--n", cfg.n, "Signal length (power of two)");
  generate->add_option("--pivots", cfg.pivots, "Number of pivots r (k = 2^r)");
  generate->add_option("--k", cfg.k, "Support size (power of two)");
  generate->add_option("--seed", cfg.seed, "Generator seed");
  common(generate);

  auto* plan = app.add_subcommand("plan", "Twiddle table of the butterfly plan");
  plan->add_option("--input,-i", cfg.input, "Support document")->required();
  common(plan);

  auto* synth = app.add_subcommand("synthesize", "Samples at the canonical set from coefficients");
  synth->add_option("--input,-i", cfg.input, "Support document")->required();
  synth->add_option("--coefficients", cfg.coefficients,
                    "Coefficient records (default: random from --seed)");
  synth->add_option("--seed", cfg.seed, "Seed for random coefficients");
  common(synth);

  auto* transform = app.add_subcommand("transform", "Coefficients from samples");
  transform->add_option("--input,-i", cfg.input, "Support document")->required();
  transform->add_option("--samples", cfg.samples, "Sample records")->required();
  common(transform);

  auto* verify = app.add_subcommand("verify", "Run the self-check battery");
  verify->add_option("--n", cfg.n, "Largest signal length checked (power of two)");
  verify->add_option("--trials", cfg.trials, "Random instances per length");
  verify->add_option("--seed", cfg.seed, "Generator seed");
  verify->add_option("--tolerance", cfg.tolerance, "Relative error tolerance");
  verify->add_flag("--inject-sign-flip", cfg.inject_sign_flip,
                   "Conjugate all twiddles first (the battery must fail)")
      ->group("");
  common(verify);

  auto* bench = app.add_subcommand("bench", "Time and count operations per strategy");
  bench->add_option("--k", cfg.k_list, "Support sizes")->delimiter(',');
  bench->add_option("--n", cfg.n_list, "Signal lengths")->delimiter(',');
  bench->add_option("--repetitions,--trials", cfg.repetitions, "Repetitions per timing");
  bench->add_option("--seed", cfg.seed, "Generator seed");
  common(bench);

  CLI11_PARSE(app, argc, argv);
  cfg.command = app.get_subcommands().front()->get_name();
  cfg.format = formats.at(format);

  if (cfg.output.empty()) return sfft::cli::run(cfg, std::cout, std::cerr);
  std::ofstream out(cfg.output);
  if (!out) {
    std::cerr << "cannot open " << cfg.output << " for writing\n";
    return sfft::cli::kUsage;
  }
  return sfft::cli::run(cfg, out, std::cerr);
}
