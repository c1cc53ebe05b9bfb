// Copyright 2026 The dcsm Authors
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

#include "dcsm_tools/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <memory>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "dcsm/analysis.hpp"
#include "dcsm/bch.hpp"
#include "dcsm/binary_designs.hpp"
#include "dcsm/combinatorics.hpp"
#include "dcsm/errors.hpp"
#include "dcsm/io.hpp"
#include "dcsm/recovery.hpp"
#include "dcsm/ternary.hpp"

namespace dcsm::tools {

namespace {

// Output sink: "-" is the caller's stream, anything else a file.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) {
    if (path.empty() || path == "-") {
      stream_ = &fallback;
    } else {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw FormatError("cannot open '" + path + "' for writing");
      stream_ = file_.get();
    }
  }
  std::ostream& operator*() { return *stream_; }
  void close() {
    stream_->flush();
    if (!*stream_) throw FormatError("write failed");
  }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_ = nullptr;
};

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open '" + path + "'");
  return in;
}

MatrixFile load_matrix(const std::string& path) {
  auto in = open_input(path);
  try {
    return read_matrix(in);
  } catch (const FormatError& e) {
    throw FormatError(path + ": " + e.what());
  }
}

void check_columns(std::uint64_t n) {
  if (n > kMaxBuildColumns) {
    throw std::invalid_argument("matrix would have " + std::to_string(n) + " columns; the limit is " +
                                std::to_string(kMaxBuildColumns));
  }
}

SensingMatrix build_bch(int mtilde, int i) {
  const auto spec = build_code_spec(mtilde, i);
  check_columns(spec.is_pn_case() ? spec.length : std::uint64_t{1} << (spec.dimension - 1));
  return assemble_bipolar_matrix(spec);
}

ShiftGroupPartition partition_for(const MatrixFile& file) {
  if (file.integer) return shift_group_partition(*file.integer);
  return ShiftGroupPartition::singletons(file.dictionary.rows(), file.dictionary.cols());
}

CorrelationPath path_for(bool fast) { return fast ? CorrelationPath::circulant_fast : CorrelationPath::direct; }

// ---------------------------------------------------------------------------
// analyze

void report_real(std::ostream& out, const Dictionary& a) {
  double best = 0.0;
  std::size_t bi = 0;
  std::size_t bj = 0;
  for (std::size_t i = 0; i < a.cols(); ++i) {
    const auto ci = a.column(i);
    for (std::size_t j = i + 1; j < a.cols(); ++j) {
      const auto cj = a.column(j);
      double acc = 0.0;
      for (std::size_t t = 0; t < a.rows(); ++t) acc += ci[t] * cj[t];
      if (std::abs(acc) > best) {
        best = std::abs(acc);
        bi = i;
        bj = j;
      }
    }
  }
  const std::size_t order = best == 0.0 ? a.cols() : 1 + static_cast<std::size_t>(std::ceil(1.0 / best) - 1);
  out << "coherence ~ " << format_double(best) << " (columns " << bi << ", " << bj << ")\n"
      << "certified k = " << order << "\n";
}

void report_shift_groups(std::ostream& out, const ShiftGroupPartition& p) {
  std::map<std::size_t, std::size_t> by_size;
  std::map<std::size_t, std::size_t> by_period;
  for (const auto& g : p.groups) {
    ++by_size[g.columns.size()];
    ++by_period[g.period];
  }
  out << "shift groups = " << p.groups.size() << " (sizes";
  for (const auto& [size, count] : by_size) out << ' ' << size << 'x' << count;
  out << "; periods";
  for (const auto& [period, count] : by_period) out << ' ' << period << 'x' << count;
  out << ")\n";
}

int cmd_analyze(const std::string& path, std::ostream& out) {
  const auto file = load_matrix(path);
  const auto& d = file.dictionary;
  out << "matrix " << d.rows() << " x " << d.cols() << ' '
      << (file.integer ? std::string(to_string(file.integer->alphabet())) : std::string("real")) << '\n';
  for (const auto& [key, value] : d.descriptor().entries()) out << "param " << key << '=' << value << '\n';
  if (!file.integer) {
    report_real(out, d);
    return kExitOk;
  }
  const auto& a = *file.integer;
  const auto cert = coherence(a);
  out << "max inner = " << cert.max_inner << " (columns " << cert.max_pair_first << ", "
      << cert.max_pair_second << "), norm-square = " << cert.norm_square << '\n';
  out << "coherence = " << cert.max_inner << '/' << cert.norm_square << " = " << cert.coherence.to_string()
      << " (" << format_double(cert.coherence.value()) << ")\n";
  out << "certified k = " << cert.rip_order_max << '\n';
  out << "delta_k:";
  for (std::size_t k = 1; k <= cert.delta_table.size(); ++k) {
    out << " k=" << k << ':' << cert.delta(k).to_string();
  }
  out << '\n';
  out << "degenerate = " << (cert.degenerate ? "yes" : "no") << '\n';
  report_shift_groups(out, shift_group_partition(a));

  if (a.alphabet() == Alphabet::binary) {
    try {
      const auto bound = johnson_bound(a.rows(), static_cast<std::uint64_t>(cert.norm_square),
                                       static_cast<std::uint64_t>(cert.max_inner));
      out << "n = " << a.cols() << (a.cols() <= bound ? " <= " : " > ") << "Johnson bound " << bound << '\n';
    } catch (const std::exception& e) {
      out << "Johnson bound unavailable: " << e.what() << '\n';
    }
  }
  if (a.alphabet() == Alphabet::bipolar) {
    const auto n = static_cast<std::int64_t>(a.rows());
    if (const auto dmin = a.descriptor().get("dmin_lower")) {
      const auto t = code_bound_constants(n, std::stoll(*dmin));
      out << "code bound (dmin >= " << *dmin << "): coherence <= " << t.coherence_bound.to_string()
          << ", order < " << (t.unbounded ? std::string("unbounded") : t.order_threshold.to_string())
          << ", k <= " << (t.unbounded ? std::string("unbounded") : std::to_string(t.max_order)) << '\n';
    }
    if (cert.max_inner < n && (n - cert.max_inner) % 2 == 0) {
      const auto t = code_bound_constants(n, (n - cert.max_inner) / 2);
      out << "code bound (measured distance " << (n - cert.max_inner) / 2
          << "): coherence <= " << t.coherence_bound.to_string() << ", k <= "
          << (t.unbounded ? std::string("unbounded") : std::to_string(t.max_order)) << '\n';
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// count

int cmd_count(int mtilde, int i, std::ostream& out) {
  const auto spec = build_code_spec(mtilde, i);
  const auto report = scaling_report(mtilde, i);
  out << "tau = " << report.tau << '\n';
  out << "deg h = " << spec.dimension;
  if (report.pn_case) {
    out << ", PN case m = n = " << report.m << '\n';
  } else {
    out << ", matrix " << report.m << "x";
    if (report.n == std::numeric_limits<std::uint64_t>::max()) {
      out << "2^" << format_double(report.log2_n) << '\n';
    } else {
      out << report.n << '\n';
    }
  }
  out << "h = " << spec.parity_check.to_string() << "  (modulus " << spec.modulus.to_string() << ")\n";
  out << "certified k = " << report.certified_k << (report.analytic_k ? " (from distance bound)" : "")
      << '\n';
  out << "kappa(" << i << ", b) for b = 0.." << mtilde << ':';
  for (int b = 0; b <= mtilde; ++b) out << ' ' << kappa(i, b);
  out << '\n';
  out << "gamma = " << format_double(gamma_root(i)) << '\n';
  if (i >= 2) {
    const auto d = delta_bound_check(i);
    out << "delta = " << format_double(d.delta) << (d.holds ? " > " : " <= ") << "a^0.7 = "
        << format_double(d.power) << '\n';
  }
  out << "dimension scaling: tau = " << format_double(report.dimension_lhs) << ", 2^((mtilde-i) ln i / i) = "
      << format_double(report.dimension_rhs) << '\n';
  out << "row scaling: m = " << format_double(report.rows_lhs)
      << ", k (log2 n)^(log2 k / ln log2 k) = " << format_double(report.rows_rhs) << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------------------
// recover / measure

int cmd_recover(const std::string& matrix_path, const std::string& samples_path, std::size_t k, bool fast,
                const std::string& out_path, std::ostream& out, std::ostream& err) {
  const auto file = load_matrix(matrix_path);
  auto in = open_input(samples_path);
  const auto y = read_samples(in);
  const auto& a = file.dictionary;
  if (y.size() != a.rows()) {
    throw FormatError("samples have length " + std::to_string(y.size()) + ", matrix has " +
                      std::to_string(a.rows()) + " rows");
  }
  if (k > a.rows()) throw std::invalid_argument("k exceeds the number of rows");
  const Correlator correlator(a, fast ? partition_for(file)
                                      : ShiftGroupPartition::singletons(a.rows(), a.cols()));
  OmpTrace trace;
  try {
    trace = omp(correlator, y, k, path_for(fast));
  } catch (const std::runtime_error& e) {
    err << "warning: degenerate active set: " << e.what() << '\n';
    return kExitData;
  }
  Sink sink(out_path, out);
  write_signal(*sink, trace.estimate);
  sink.close();
  out << "iteration selected residual_norm_square\n";
  for (std::size_t t = 0; t < trace.selected.size(); ++t) {
    out << t + 1 << ' ' << trace.selected[t] << ' ' << format_double(trace.residual_norm_squares[t]) << '\n';
  }
  return kExitOk;
}

int cmd_measure(const std::string& matrix_path, const std::string& signal_path, const std::string& out_path,
                std::ostream& out) {
  const auto file = load_matrix(matrix_path);
  auto in = open_input(signal_path);
  const auto s = read_signal(in);
  if (s.n != file.dictionary.cols()) {
    throw FormatError("signal length differs from the matrix column count");
  }
  Sink sink(out_path, out);
  write_samples(*sink, measure(file.dictionary, s));
  sink.close();
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Deterministic compressed sensing matrices: build, analyze, recover"};
  app.name("dcsm");
  app.require_subcommand(1);

  // build
  auto* build = app.add_subcommand("build", "Construct a sensing matrix");
  build->require_subcommand(1);
  std::string build_out = "-";
  int mtilde = 0;
  int bch_i = 0;
  auto* bch = build->add_subcommand("bch", "Bipolar matrix from a BCH code");
  bch->add_option("--mtilde", mtilde, "Field exponent")->required();
  bch->add_option("--i", bch_i, "Minimum circular spacing")->required();
  std::uint32_t p = 0;
  std::uint32_t r = 0;
  auto* devore = build->add_subcommand("devore", "Binary polynomial-graph matrix");
  devore->add_option("--p", p, "Field order (prime or power of two)")->required();
  devore->add_option("--r", r, "Polynomial degree bound")->required();
  int ooc_a = 0;
  auto* ooc = build->add_subcommand("ooc", "Binary matrix from an optical orthogonal code");
  ooc->add_option("--a", ooc_a, "Code parameter (1 or 2)")->required();
  int x_mtilde = 0;
  int x_i = 0;
  auto* ternary = build->add_subcommand("ternary", "Ternary product of a DeVore and a bipolar matrix");
  ternary->add_option("--p", p, "Mersenne prime field order")->required();
  ternary->add_option("--r", r, "Polynomial degree bound")->required();
  ternary->add_option("--x-mtilde", x_mtilde, "Bipolar factor field exponent")->required();
  ternary->add_option("--x-i", x_i, "Bipolar factor spacing")->required();
  std::size_t g_m = 0;
  std::size_t g_n = 0;
  std::uint64_t seed = 1;
  auto* gaussian = build->add_subcommand("gaussian", "Seeded Gaussian baseline with unit columns");
  gaussian->add_option("--m", g_m, "Rows")->required()->check(CLI::PositiveNumber);
  gaussian->add_option("--n", g_n, "Columns")->required()->check(CLI::PositiveNumber);
  gaussian->add_option("--seed", seed, "Random seed");
  for (auto* sub : {bch, devore, ooc, ternary, gaussian}) {
    sub->add_option("-o,--out", build_out, "Output matrix file ('-' for stdout)");
  }

  // analyze
  std::string matrix_path;
  auto* analyze = app.add_subcommand("analyze", "Coherence certificate and structure report");
  analyze->add_option("matrix", matrix_path, "Matrix file")->required();

  // measure
  std::string signal_path;
  std::string data_out = "-";
  auto* measure_cmd = app.add_subcommand("measure", "Samples y = A s for a signal file");
  measure_cmd->add_option("matrix", matrix_path, "Matrix file")->required();
  measure_cmd->add_option("signal", signal_path, "Signal file")->required();
  measure_cmd->add_option("-o,--out", data_out, "Samples output ('-' for stdout)");

  // recover
  std::string samples_path;
  std::size_t k = 0;
  bool fast = false;
  auto* recover = app.add_subcommand("recover", "Orthogonal matching pursuit on a sample file");
  recover->add_option("matrix", matrix_path, "Matrix file")->required();
  recover->add_option("samples", samples_path, "Sample file")->required();
  recover->add_option("-k,--k", k, "Sparsity (iterations)")->required();
  recover->add_flag("--fast", fast, "Correlate through circulant groups");
  recover->add_option("-o,--out", data_out, "Estimate signal file ('-' for stdout)");

  // sweep
  std::size_t kmin = 1;
  std::size_t kmax = 1;
  std::size_t kstep = 1;
  std::size_t trials = 1000;
  auto* sweep = app.add_subcommand("sweep", "Perfect-recovery rate against sparsity");
  sweep->add_option("matrix", matrix_path, "Matrix file")->required();
  sweep->add_option("--kmin", kmin, "Smallest sparsity")->required()->check(CLI::PositiveNumber);
  sweep->add_option("--kmax", kmax, "Largest sparsity")->required()->check(CLI::PositiveNumber);
  sweep->add_option("--kstep", kstep, "Sparsity step")->check(CLI::PositiveNumber);

  std::vector<std::string> levels;
  auto* noise = app.add_subcommand("noise-sweep", "Mean output SNR against input noise level");
  noise->add_option("matrix", matrix_path, "Matrix file")->required();
  noise->add_option("-k,--k", k, "Sparsity")->required()->check(CLI::PositiveNumber);
  noise->add_option("--levels", levels, "Input SNR levels in dB, comma separated ('inf' = noiseless)")
      ->required()
      ->delimiter(',');
  for (auto* sub : {sweep, noise}) {
    sub->add_option("--trials", trials, "Trials per point")->check(CLI::PositiveNumber);
    sub->add_option("--seed", seed, "Master seed");
    sub->add_flag("--fast", fast, "Correlate through circulant groups");
    sub->add_option("-o,--out", data_out, "CSV output ('-' for stdout)");
  }

  // count
  auto* count = app.add_subcommand("count", "Spacing counts and scaling diagnostics");
  count->add_option("--mtilde", mtilde, "Field exponent")->required();
  count->add_option("--i", bch_i, "Minimum circular spacing")->required();

  std::vector<std::string> args;
  for (int a = argc - 1; a > 0; --a) args.emplace_back(argv[a]);
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (build->parsed()) {
      SensingMatrix a;
      std::optional<Dictionary> real;
      if (bch->parsed()) {
        a = build_bch(mtilde, bch_i);
      } else if (devore->parsed()) {
        if (std::pow(static_cast<double>(p), r + 1.0) > static_cast<double>(kMaxBuildColumns)) {
          check_columns(kMaxBuildColumns + 1);
        }
        a = devore_matrix(p, r);
      } else if (ooc->parsed()) {
        a = ooc_matrix(ooc_a);
      } else if (ternary->parsed()) {
        // validates p against the Mersenne table
        (void)ternary_params(p, 2);
        const auto x = build_bch(x_mtilde, x_i);
        if (std::pow(static_cast<double>(p), r + 1.0) * static_cast<double>(x.cols()) >
            static_cast<double>(kMaxBuildColumns)) {
          check_columns(kMaxBuildColumns + 1);
        }
        a = ternary_matrix(devore_matrix(p, r), x);
      } else {
        check_columns(g_n);
        real = gaussian_baseline(g_m, g_n, seed);
      }
      Sink sink(build_out, out);
      if (real) {
        write_matrix(*sink, *real);
      } else {
        write_matrix(*sink, a);
      }
      sink.close();
      return kExitOk;
    }
    if (analyze->parsed()) return cmd_analyze(matrix_path, out);
    if (measure_cmd->parsed()) return cmd_measure(matrix_path, signal_path, data_out, out);
    if (recover->parsed()) return cmd_recover(matrix_path, samples_path, k, fast, data_out, out, err);
    if (sweep->parsed() || noise->parsed()) {
      const auto file = load_matrix(matrix_path);
      const Correlator correlator(file.dictionary,
                                  fast ? partition_for(file)
                                       : ShiftGroupPartition::singletons(file.dictionary.rows(),
                                                                         file.dictionary.cols()));
      ExperimentResult result;
      if (sweep->parsed()) {
        if (kmin > kmax) throw std::invalid_argument("kmin exceeds kmax");
        if (kmax > file.dictionary.rows()) throw std::invalid_argument("kmax exceeds the number of rows");
        std::vector<std::size_t> ks;
        for (std::size_t v = kmin; v <= kmax; v += kstep) ks.push_back(v);
        result = recovery_sweep(correlator, ks, trials, seed, path_for(fast));
      } else {
        if (k > file.dictionary.rows()) throw std::invalid_argument("k exceeds the number of rows");
        std::vector<double> db;
        for (const auto& l : levels) {
          try {
            db.push_back(parse_double(l));
          } catch (const FormatError&) {
            throw std::invalid_argument("invalid noise level '" + l + "'");
          }
        }
        result = noise_sweep(correlator, k, db, trials, seed, path_for(fast));
      }
      Sink sink(data_out, out);
      write_csv(*sink, result);
      sink.close();
      return kExitOk;
    }
    if (count->parsed()) return cmd_count(mtilde, bch_i, out);
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const FormatError& e) {
    err << "data error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::invalid_argument& e) {
    err << "invalid parameters: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitUsage;
}

}  // namespace dcsm::tools
