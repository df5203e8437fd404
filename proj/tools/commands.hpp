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

#ifndef SFFT_TOOLS_COMMANDS_HPP_
#define SFFT_TOOLS_COMMANDS_HPP_

// Subcommands of the `sfft` tool. Each returns a process exit code and
// writes to the streams it is given, so tests can drive them in-process.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "sfft/butterfly.hpp"
#include "sfft/io.hpp"
#include "sfft/oracles.hpp"
#include "sfft/random.hpp"
#include "sfft/spectral_sets.hpp"
#include "sfft/verify.hpp"

namespace sfft::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParseError = 2,
  kNotSpectral = 3,
  kVerificationFailed = 4,
};

enum class Format { kText, kDelimited };

struct RunConfig {
  std::string command;
  std::string input;         // support document
  std::string samples;       // sample records (transform)
  std::string coefficients;  // coefficient records (synthesize)
  std::string output;        // empty: stdout
  Index n = 1024;
  std::optional<Index> k;
  std::optional<unsigned> pivots;
  std::uint64_t seed = 1;
  unsigned trials = 20;
  unsigned repetitions = 5;
  double tolerance = 1e-10;
  Format format = Format::kText;
  std::vector<Index> k_list{1, 8, 64};
  std::vector<Index> n_list{1024, 16384, 262144};
  bool inject_sign_flip = false;
};

namespace detail {

inline IndexSet load_support(const std::string& path) {
  if (path.empty()) throw InvalidParameterError("--input is required");
  std::ifstream in(path);
  if (!in) throw InvalidParameterError("cannot open " + path);
  return io::read_support(in);
}

inline std::vector<io::ComplexRecord> load_records(const std::string& path,
                                                   const char* flag) {
  if (path.empty()) throw InvalidParameterError(std::string(flag) + " is required");
  std::ifstream in(path);
  if (!in) throw InvalidParameterError("cannot open " + path);
  return io::read_records(in);
}

template <class Range>
std::string join(const Range& r, const char* sep = " ") {
  std::ostringstream os;
  bool first = true;
  for (const auto& v : r) {
    if (!first) os << sep;
    os << v;
    first = false;
  }
  return os.str();
}

inline std::vector<Index> sorted_copy(std::span<const Index> s) {
  std::vector<Index> v(s.begin(), s.end());
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace detail

/// Pivots, conformity, canonical sample set in both orders and twiddles.
inline int cmd_analyze(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const IndexSet raw = detail::load_support(cfg.input);
  const PivotSet pivots = pivots_of(raw);
  const bool conforming = is_conforming(raw);
  const bool text = cfg.format == Format::kText;
  auto field = [&](const std::string& key, const std::string& value) {
    if (text) {
      out << std::left << std::setw(24) << (key + ":") << value << '\n';
    } else {
      out << key << ',' << value << '\n';
    }
  };
  field("n", std::to_string(raw.modulus().value()));
  field("size", std::to_string(raw.size()));
  field("pivots", detail::join(pivots.positions()));
  field("conforming", conforming ? "yes" : "no");
  if (!conforming) {
    err << "not spectral: |J| = " << raw.size() << ", 2^|pivots| = 2^"
        << pivots.size() << '\n';
    return kNotSpectral;
  }
  const auto support = validate_support(raw);
  const auto plan = build_plan(support);
  const auto& samples = plan.samples();

  std::vector<Index> support_cols = support.vector();
  sort_by_pivots(support_cols, support.pivots(), PivotOrder::kSmallestPivotFirst);
  std::vector<Index> samples_rows = samples.vector();
  sort_by_pivots(samples_rows, samples.pivots(), PivotOrder::kLargestPivotFirst);

  field("support_row_order", detail::join(support.elements()));
  field("support_column_order", detail::join(support_cols));
  field("sample_pivots", detail::join(samples.pivots().positions()));
  field("samples_column_order", detail::join(samples.elements()));
  field("samples_row_order", detail::join(samples_rows));
  field("samples_natural_order", detail::join(detail::sorted_copy(samples.elements())));
  std::ostringstream scale;
  scale << samples.scale();
  field("scale", scale.str());

  const auto flags = out.flags();
  out << std::setprecision(17);
  for (std::size_t l = 0; l < plan.levels().size(); ++l) {
    for (std::size_t j = 0; j < plan.levels()[l].size(); ++j) {
      const Complex t = plan.levels()[l][j] + Complex(0.0, 0.0);  // no "-0"
      if (text) {
        out << "twiddle level " << l << " pivot " << samples.pivots()[l]
            << " m=" << support[j] << ": " << t.real() << ' ' << t.imag() << '\n';
      } else {
        out << "twiddle," << l << ',' << samples.pivots()[l] << ',' << support[j]
            << ',' << t.real() << ',' << t.imag() << '\n';
      }
    }
  }
  out.flags(flags);
  return kOk;
}

/// Random spectral support as a support document.
inline int cmd_generate(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  unsigned r = 0;
  if (cfg.pivots) {
    r = *cfg.pivots;
  } else if (cfg.k) {
    if (*cfg.k == 0 || !std::has_single_bit(*cfg.k)) {
      throw InvalidParameterError("--k must be a power of two");
    }
    r = static_cast<unsigned>(std::countr_zero(*cfg.k));
  } else {
    throw InvalidParameterError("generate needs --pivots or --k");
  }
  const auto support = random_spectral_support(cfg.n, r, cfg.seed);
  io::write_support(out, support.modulus(), detail::sorted_copy(support.elements()));
  return kOk;
}

/// Twiddle table of the butterfly plan, one record per factor.
inline int cmd_plan(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const auto plan = build_plan(validate_support(detail::load_support(cfg.input)));
  const auto flags = out.flags();
  out << std::setprecision(17);
  out << "# n=" << plan.modulus().value() << " k=" << plan.size()
      << " scale=" << plan.scale() << " operations=" << operation_count(plan) << '\n';
  out << "# samples " << detail::join(plan.samples().elements()) << '\n';
  out << "level,pivot,j,m,re,im\n";
  for (std::size_t l = 0; l < plan.levels().size(); ++l)
    for (std::size_t j = 0; j < plan.levels()[l].size(); ++j) {
      const Complex t = plan.levels()[l][j];
      out << l << ',' << plan.samples().pivots()[l] << ',' << j << ','
          << plan.support()[j] << ',' << t.real() << ',' << t.imag() << '\n';
    }
  out.flags(flags);
  return kOk;
}

/// Sample records at the canonical sample set for given (or random)
/// coefficients. Companion of `transform` for round trips.
inline int cmd_synthesize(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const auto support = validate_support(detail::load_support(cfg.input));
  std::vector<Complex> c(support.size());
  if (!cfg.coefficients.empty()) {
    std::map<Index, Complex> by_index;
    for (const auto& r : detail::load_records(cfg.coefficients, "--coefficients"))
      by_index[r.index] = r.value;
    if (by_index.size() != support.size()) {
      throw IndexMismatchError("coefficient file must list every support index once");
    }
    for (std::size_t j = 0; j < support.size(); ++j) {
      const auto it = by_index.find(support[j]);
      if (it == by_index.end()) {
        throw IndexMismatchError("no coefficient for support index " +
                                 std::to_string(support[j]));
      }
      c[j] = it->second;
    }
  } else {
    Rng rng(cfg.seed);
    for (auto& v : c) v = rng.complex();
  }
  const auto samples = build_sample_plan(support);
  const auto x = synthesize(support.elements(), c, samples.elements(), support.modulus());
  io::write_records(out, io::zip_records(samples.elements(), x));
  return kOk;
}

/// Coefficients in natural frequency order from samples at the canonical set.
inline int cmd_transform(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const auto support = validate_support(detail::load_support(cfg.input));
  const auto plan = build_plan(support);
  const auto records = detail::load_records(cfg.samples, "--samples");

  std::map<Index, Complex> by_index;
  bool duplicate = false;
  for (const auto& r : records) duplicate |= !by_index.emplace(r.index, r.value).second;
  const auto expected = detail::sorted_copy(plan.samples().elements());
  std::vector<Index> got;
  for (const auto& [i, v] : by_index) got.push_back(i);
  if (duplicate || got != expected || records.size() != expected.size()) {
    throw IndexMismatchError("sample indices must be exactly the canonical set {" +
                             detail::join(plan.samples().elements(), ",") + "}");
  }
  std::vector<Complex> x(plan.size());
  for (std::size_t i = 0; i < plan.size(); ++i) x[i] = by_index.at(plan.samples()[i]);

  const auto c = transform(plan, x);
  std::vector<io::ComplexRecord> result = io::zip_records(support.elements(), c);
  std::sort(result.begin(), result.end(),
            [](const auto& a, const auto& b) { return a.index < b.index; });
  io::write_records(out, result);
  return kOk;
}

inline int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const Modulus n(cfg.n);
  verify::Options opt;
  opt.max_log_n = n.log2();
  opt.trials = cfg.trials;
  opt.seed = cfg.seed;
  opt.tolerance = cfg.tolerance;
  opt.flip_twiddle_sign = cfg.inject_sign_flip;
  const auto results = verify::run_all(opt);

  bool all = true;
  const auto flags = out.flags();
  out << "# sfft verify seed=" << cfg.seed << " max_n=" << n.value()
      << " trials=" << cfg.trials << " tolerance=" << cfg.tolerance
      << (cfg.inject_sign_flip ? " fault=twiddle-sign" : "") << '\n';
  out << "suite,status,cases,failures,max_error,first_failure\n";
  out << std::setprecision(3) << std::scientific;
  for (const auto& r : results) {
    all = all && r.passed();
    out << r.name << ',' << (r.passed() ? "pass" : "FAIL") << ',' << r.cases << ','
        << r.failures << ',' << r.max_error << ',' << r.first_failure << '\n';
  }
  out.flags(flags);
  out << "summary," << (all ? "pass" : "FAIL") << '\n';
  return all ? kOk : kVerificationFailed;
}

/// Wall time and exact operation counts of the computation strategies.
inline int cmd_bench(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  using Clock = std::chrono::steady_clock;
  constexpr std::size_t kDirectCap = 4096;
  constexpr std::size_t kDenseCap = 256;
  const unsigned reps = std::max(1u, cfg.repetitions);

  struct Row {
    Index k, n;
    std::string strategy;
    std::uint64_t ops;
    double seconds;
    std::string error;
  };
  std::vector<Row> rows;
  std::map<Index, std::set<std::uint64_t>> butterfly_ops;

  for (Index n_value : cfg.n_list) {
    const Modulus n(n_value);
    for (Index k : cfg.k_list) {
      if (k == 0 || !std::has_single_bit(k) || k > n_value) {
        throw InvalidParameterError("every k must be a power of two not above n");
      }
      const unsigned r = static_cast<unsigned>(std::countr_zero(k));
      Rng rng(cfg.seed ^ (n_value * 0x9e3779b97f4a7c15ull) ^ k);
      const auto support = random_spectral_support(n_value, r, rng.next());
      std::vector<Complex> c(k);
      for (auto& v : c) v = rng.complex();
      const auto plan = build_plan(support);
      const auto x = synthesize(support.elements(), c, plan.samples().elements(), n);

      auto time = [&](auto&& fn) {
        const auto t0 = Clock::now();
        for (unsigned i = 0; i < reps; ++i) fn();
        return std::chrono::duration<double>(Clock::now() - t0).count() / reps;
      };
      auto fmt_err = [](double e) {
        std::ostringstream os;
        os << std::setprecision(3) << std::scientific << e;
        return os.str();
      };

      std::vector<Complex> fast;
      const double t_fast = time([&] { fast = transform(plan, x); });
      rows.push_back({k, n_value, "butterfly", operation_count(plan), t_fast,
                      fmt_err(max_relative_error(fast, c))});
      butterfly_ops[k].insert(operation_count(plan));

      if (k <= kDirectCap) {
        const auto f = submatrix(plan, kDirectCap);
        std::vector<Complex> direct;
        const double t = time([&] {
          direct = f.apply(x);
          for (auto& v : direct) v *= plan.scale();
        });
        rows.push_back({k, n_value, "direct", k * k + k * (k - 1), t,
                        fmt_err(max_relative_error(direct, c))});
      } else {
        rows.push_back({k, n_value, "direct", 0, 0.0, "skipped"});
      }

      if (k <= kDenseCap) {
        std::vector<Index> consecutive(k);
        for (Index i = 0; i < k; ++i) consecutive[i] = i;
        const auto xc = synthesize(support.elements(), c, consecutive, n);
        OpCounter counter;
        std::string status;
        double t = 0.0;
        try {
          vandermonde_recover(xc, 0, support.elements(), n, counter);
          std::vector<Complex> dense;
          t = time([&] { dense = vandermonde_recover(xc, 0, support.elements(), n); });
          status = fmt_err(max_relative_error(dense, c));
        } catch (const ConditioningError&) {
          status = "ill-conditioned";
        }
        rows.push_back({k, n_value, "vandermonde", counter.total(), t, status});
      } else {
        rows.push_back({k, n_value, "vandermonde", 0, 0.0, "skipped"});
      }

      // Full-length FFT on the whole signal: n/2 multiplies and n additions
      // per stage.
      const auto full = inverse_full_fft([&] {
        std::vector<Complex> spectrum(n_value);
        for (std::size_t j = 0; j < k; ++j) spectrum[support[j]] = c[j];
        return spectrum;
      }());
      std::vector<Complex> spectrum;
      const double t_fft = time([&] { spectrum = full_fft(full); });
      std::vector<Complex> on_support(k);
      for (std::size_t j = 0; j < k; ++j) on_support[j] = spectrum[support[j]];
      rows.push_back({k, n_value, "full_fft",
                      static_cast<std::uint64_t>(n.log2()) * (n_value / 2 + n_value),
                      t_fft, fmt_err(max_relative_error(on_support, c))});
    }
  }

  const bool text = cfg.format == Format::kText;
  const auto flags = out.flags();
  out << "# sfft bench seed=" << cfg.seed << " repetitions=" << reps << '\n';
  if (text) {
    out << std::left << std::setw(8) << "k" << std::setw(10) << "n" << std::setw(13)
        << "strategy" << std::setw(14) << "ops" << std::setw(14) << "seconds"
        << std::setw(17) << "max_rel_error" << "ops_independent_of_n\n";
  } else {
    out << "k,n,strategy,ops,seconds,max_rel_error,ops_independent_of_n\n";
  }
  for (const auto& row : rows) {
    const std::string same =
        row.strategy == "butterfly" ? (butterfly_ops[row.k].size() == 1 ? "yes" : "no") : "-";
    std::ostringstream secs;
    secs << std::setprecision(3) << std::scientific << row.seconds;
    if (text) {
      out << std::left << std::setw(8) << row.k << std::setw(10) << row.n
          << std::setw(13) << row.strategy << std::setw(14) << row.ops
          << std::setw(14) << secs.str() << std::setw(17) << row.error << same << '\n';
    } else {
      out << row.k << ',' << row.n << ',' << row.strategy << ',' << row.ops << ','
          << secs.str() << ',' << row.error << ',' << same << '\n';
    }
  }
  out.flags(flags);
  return kOk;
}

/// Dispatch with the exit-code mapping of the tool.
inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.command == "analyze") return cmd_analyze(cfg, out, err);
    if (cfg.command == "generate") return cmd_generate(cfg, out, err);
    if (cfg.command == "plan") return cmd_plan(cfg, out, err);
    if (cfg.command == "synthesize") return cmd_synthesize(cfg, out, err);
    if (cfg.command == "transform") return cmd_transform(cfg, out, err);
    if (cfg.command == "verify") return cmd_verify(cfg, out, err);
    if (cfg.command == "bench") return cmd_bench(cfg, out, err);
    err << "unknown command '" << cfg.command << "'\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const IndexMismatchError& e) {
    err << "index mismatch: " << e.what() << '\n';
    return kParseError;
  } catch (const InvalidInputError& e) {
    err << "invalid input: " << e.what() << '\n';
    return kParseError;
  } catch (const NotSpectralError& e) {
    err << e.what() << '\n';
    return kNotSpectral;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace sfft::cli

#endif  // SFFT_TOOLS_COMMANDS_HPP_
