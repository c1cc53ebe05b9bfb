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

#ifndef DCSM_IO_HPP
#define DCSM_IO_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dcsm/recovery.hpp"
#include "dcsm/sensing_matrix.hpp"

namespace dcsm {

/// Shortest round-trip decimal, independent of locale.
std::string format_double(double v);
/// Strict decimal parse of the whole token; throws FormatError.
double parse_double(std::string_view token);

/// Text matrix file:
///
///   dcsm-matrix 1
///   rows <m>
///   cols <n>
///   alphabet binary|bipolar|ternary|real
///   norm-square <v> | norm-square per-column
///   [norms <v_1> ... <v_n>]
///   param <key>=<value>        (zero or more, in descriptor order)
///   end
///
/// followed by n lines, one per column, of m space-separated entries.
/// Real matrices use "norm-square unit" and decimal entries.
void write_matrix(std::ostream& out, const SensingMatrix& a);
void write_matrix(std::ostream& out, const Dictionary& a);

struct MatrixFile {
  std::optional<SensingMatrix> integer;  // empty for real matrices
  Dictionary dictionary;                 // unit-norm view, always present
};

/// Throws FormatError on any deviation from the format.
MatrixFile read_matrix(std::istream& in);

///   dcsm-signal 1
///   n <n>
///   support <i_1> ... <i_k>
///   values <v_1> ... <v_k>
///   end
void write_signal(std::ostream& out, const SparseSignal& s);
SparseSignal read_signal(std::istream& in);

/// One decimal per line.
void write_samples(std::ostream& out, const std::vector<double>& y);
std::vector<double> read_samples(std::istream& in);

/// Header row then one row per point: axis,value,trials,seed.
void write_csv(std::ostream& out, const ExperimentResult& r);

}  // namespace dcsm

#endif  // DCSM_IO_HPP
