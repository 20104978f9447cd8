// Copyright 2026 The Fermbezzle Authors
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

#ifndef FERMBEZZLE_IO_HPP
#define FERMBEZZLE_IO_HPP

#include <string>
#include <vector>

#include "fermbezzle/covariance.hpp"
#include "fermbezzle/embezzle.hpp"
#include "fermbezzle/selfdual.hpp"

namespace fermbezzle::io {

/// Matrix JSON: {"dim": n, "data": [[re, im], ...]} row-major. Spectral data
/// is never serialized; it is recomputed on load. An optional "formalism"
/// tag in {"passive", "selfdual", "majorana"} marks doubled-space objects.
std::string matrix_to_json(const Matrix& m, const std::string& formalism = "");
Matrix matrix_from_json_text(const std::string& text);

void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

Covariance load_covariance(const std::string& path);
void save_covariance(const Covariance& c, const std::string& path);

/// Doubled-space objects share the matrix format; the formalism tag is
/// written on save and checked on load when present.
void save_self_dual(const selfdual::SelfDualCovariance& s,
                    const std::string& path);
selfdual::SelfDualCovariance load_self_dual(const std::string& path);
void save_majorana(const selfdual::MajoranaCovariance& a,
                   const std::string& path);
selfdual::MajoranaCovariance load_majorana(const std::string& path);

std::string plan_to_json(const embezzle::EmbezzlementPlan& plan);
embezzle::EmbezzlementPlan plan_from_json_text(const std::string& text);
embezzle::EmbezzlementPlan load_plan(const std::string& path);

/// Fixed 17-significant-digit formatting used in every CSV cell so that
/// outputs are byte-identical across runs on one platform.
std::string format_double(double v);

struct CsvWriter {
  explicit CsvWriter(std::vector<std::string> header);
  void add_row(const std::vector<std::string>& cells);
  std::string str() const;

 private:
  std::string body_;
  size_t columns_ = 0;
};

}  // namespace fermbezzle::io

#endif
