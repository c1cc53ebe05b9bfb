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

#include "dcsm/io.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "dcsm/errors.hpp"

namespace dcsm {

std::string format_double(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return {buf, res.ptr};
}

double parse_double(std::string_view token) {
  if (token == "inf" || token == "+inf") return std::numeric_limits<double>::infinity();
  if (token == "-inf") return -std::numeric_limits<double>::infinity();
  double v = 0.0;
  const auto* end = token.data() + token.size();
  const auto res = std::from_chars(token.data(), end, v);
  if (token.empty() || res.ec != std::errc{} || res.ptr != end || !std::isfinite(v)) {
    throw FormatError("invalid number '" + std::string(token) + "'");
  }
  return v;
}

namespace {

template <class T>
T parse_integer(std::string_view token) {
  T v{};
  const auto* end = token.data() + token.size();
  const auto res = std::from_chars(token.data(), end, v);
  if (token.empty() || res.ec != std::errc{} || res.ptr != end) {
    throw FormatError("invalid integer '" + std::string(token) + "'");
  }
  return v;
}

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  std::vector<std::string_view> next(const char* what) {
    if (!std::getline(in_, line_)) throw FormatError(where() + "unexpected end of file, expected " + what);
    ++number_;
    std::vector<std::string_view> tokens;
    std::string_view rest = line_;
    while (!rest.empty()) {
      const auto start = rest.find_first_not_of(' ');
      if (start == std::string_view::npos) break;
      rest.remove_prefix(start);
      const auto stop = std::min(rest.find(' '), rest.size());
      tokens.push_back(rest.substr(0, stop));
      rest.remove_prefix(stop);
    }
    if (line_.find_first_of("\t\r") != std::string::npos) {
      throw FormatError(where() + "tabs and carriage returns are not allowed");
    }
    return tokens;
  }

  // Key line "<key> <values...>"; returns the values.
  std::vector<std::string_view> keyed(std::string_view key) {
    auto tokens = next(std::string(key).c_str());
    if (tokens.empty() || tokens[0] != key) fail("expected '" + std::string(key) + "'");
    tokens.erase(tokens.begin());
    return tokens;
  }

  std::string_view single(std::string_view key) {
    auto values = keyed(key);
    if (values.size() != 1) fail("'" + std::string(key) + "' takes exactly one value");
    return values[0];
  }

  void expect_eof() {
    std::string extra;
    while (std::getline(in_, extra)) {
      ++number_;
      if (!extra.empty()) fail("trailing content after body");
    }
  }

  const std::string& raw() const { return line_; }

  [[noreturn]] void fail(const std::string& msg) const { throw FormatError(where() + msg); }
  std::string where() const { return "line " + std::to_string(number_) + ": "; }

 private:
  std::istream& in_;
  std::string line_;
  std::size_t number_ = 0;
};

void write_header(std::ostream& out, std::size_t rows, std::size_t cols, std::string_view alphabet,
                  const std::string& norm_line, const Descriptor& d) {
  out << "dcsm-matrix 1\n"
      << "rows " << rows << '\n'
      << "cols " << cols << '\n'
      << "alphabet " << alphabet << '\n'
      << norm_line;
  for (const auto& [key, value] : d.entries()) out << "param " << key << '=' << value << '\n';
  out << "end\n";
}

}  // namespace

void write_matrix(std::ostream& out, const SensingMatrix& a) {
  std::string norm_line;
  if (const auto c = a.constant_norm_square(); c || a.cols() == 0) {
    norm_line = "norm-square " + std::to_string(c.value_or(0)) + "\n";
  } else {
    norm_line = "norm-square per-column\nnorms";
    for (auto v : a.norm_squares()) norm_line += " " + std::to_string(v);
    norm_line += "\n";
  }
  write_header(out, a.rows(), a.cols(), to_string(a.alphabet()), norm_line, a.descriptor());
  std::string line;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    line.clear();
    for (auto v : a.column(j)) {
      if (!line.empty()) line += ' ';
      line += std::to_string(static_cast<int>(v));
    }
    out << line << '\n';
  }
}

void write_matrix(std::ostream& out, const Dictionary& a) {
  write_header(out, a.rows(), a.cols(), "real", "norm-square unit\n", a.descriptor());
  std::string line;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    line.clear();
    for (auto v : a.column(j)) {
      if (!line.empty()) line += ' ';
      line += format_double(v);
    }
    out << line << '\n';
  }
}

MatrixFile read_matrix(std::istream& in) {
  LineReader r(in);
  const auto magic = r.next("header");
  if (magic.size() != 2 || magic[0] != "dcsm-matrix" || magic[1] != "1") {
    r.fail("not a version 1 matrix file");
  }
  const auto rows = parse_integer<std::size_t>(r.single("rows"));
  const auto cols = parse_integer<std::size_t>(r.single("cols"));
  if (rows == 0) r.fail("rows must be positive");
  if (rows * cols > (std::size_t{1} << 32)) r.fail("matrix too large");
  const auto alphabet_token = r.single("alphabet");
  const bool real = alphabet_token == "real";
  const auto alphabet = parse_alphabet(alphabet_token);
  if (!real && !alphabet) r.fail("unknown alphabet");

  const auto norm_token = r.single("norm-square");
  std::vector<std::int64_t> norms;
  if (real) {
    if (norm_token != "unit") r.fail("real matrices declare 'norm-square unit'");
  } else if (norm_token == "per-column") {
    const auto values = r.keyed("norms");
    if (values.size() != cols) r.fail("norms count differs from cols");
    for (auto v : values) norms.push_back(parse_integer<std::int64_t>(v));
  } else {
    norms.assign(cols, parse_integer<std::int64_t>(norm_token));
  }

  Descriptor d;
  for (;;) {
    const auto tokens = r.next("param or end");
    if (tokens.size() == 1 && tokens[0] == "end") break;
    // values may contain spaces; the key may not
    const std::string_view raw = r.raw();
    if (tokens.size() < 2 || raw.substr(0, 6) != "param ") r.fail("expected 'param key=value' or 'end'");
    const auto body = raw.substr(6);
    const auto eq = body.find('=');
    if (eq == std::string_view::npos || eq == 0) r.fail("malformed param");
    try {
      d.set(std::string(body.substr(0, eq)), std::string(body.substr(eq + 1)));
    } catch (const std::invalid_argument& e) {
      r.fail(e.what());
    }
  }

  MatrixFile file;
  if (real) {
    std::vector<double> data;
    data.reserve(rows * cols);
    for (std::size_t j = 0; j < cols; ++j) {
      const auto tokens = r.next("column");
      if (tokens.size() != rows) r.fail("column has wrong length");
      for (auto t : tokens) data.push_back(parse_double(t));
    }
    r.expect_eof();
    file.dictionary = Dictionary::from_values(rows, cols, std::move(data), std::move(d));
    return file;
  }

  std::vector<std::int8_t> data;
  data.reserve(rows * cols);
  for (std::size_t j = 0; j < cols; ++j) {
    const auto tokens = r.next("column");
    if (tokens.size() != rows) r.fail("column has wrong length");
    for (auto t : tokens) {
      const auto v = parse_integer<int>(t);
      if (v < -1 || v > 1) r.fail("entry outside {-1, 0, 1}");
      data.push_back(static_cast<std::int8_t>(v));
    }
  }
  r.expect_eof();
  SensingMatrix a;
  try {
    a = SensingMatrix::from_columns(rows, cols, std::move(data), *alphabet, std::move(d));
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
  for (std::size_t j = 0; j < cols; ++j) {
    if (a.norm_squares()[j] != norms[j]) {
      throw FormatError("declared norm-square differs from column " + std::to_string(j));
    }
    if (norms[j] == 0) throw FormatError("column " + std::to_string(j) + " is zero");
  }
  file.dictionary = Dictionary::from_matrix(a);
  file.integer = std::move(a);
  return file;
}

void write_signal(std::ostream& out, const SparseSignal& s) {
  s.validate();
  out << "dcsm-signal 1\n" << "n " << s.n << '\n' << "support";
  for (auto i : s.support) out << ' ' << i;
  out << "\nvalues";
  for (auto v : s.values) out << ' ' << format_double(v);
  out << "\nend\n";
}

SparseSignal read_signal(std::istream& in) {
  LineReader r(in);
  const auto magic = r.next("header");
  if (magic.size() != 2 || magic[0] != "dcsm-signal" || magic[1] != "1") {
    r.fail("not a version 1 signal file");
  }
  SparseSignal s;
  s.n = parse_integer<std::size_t>(r.single("n"));
  for (auto t : r.keyed("support")) s.support.push_back(parse_integer<std::size_t>(t));
  for (auto t : r.keyed("values")) s.values.push_back(parse_double(t));
  const auto end = r.next("end");
  if (end.size() != 1 || end[0] != "end") r.fail("expected 'end'");
  r.expect_eof();
  try {
    s.validate();
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
  return s;
}

void write_samples(std::ostream& out, const std::vector<double>& y) {
  for (auto v : y) out << format_double(v) << '\n';
}

std::vector<double> read_samples(std::istream& in) {
  std::vector<double> y;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    try {
      y.push_back(parse_double(line));
    } catch (const FormatError& e) {
      throw FormatError("line " + std::to_string(number) + ": " + e.what());
    }
  }
  return y;
}

void write_csv(std::ostream& out, const ExperimentResult& r) {
  out << r.axis_name << ',' << r.value_name << ",trials,seed\n";
  for (const auto& p : r.points) {
    out << format_double(p.axis) << ',' << format_double(p.value) << ',' << p.trials << ',' << r.seed
        << '\n';
  }
}

}  // namespace dcsm
