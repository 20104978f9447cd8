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

#include "fermbezzle/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace fermbezzle::io {

using nlohmann::json;

namespace {

json matrix_to_json_obj(const Matrix& m, const std::string& formalism = "") {
  json j;
  j["dim"] = m.rows();
  json data = json::array();
  for (long r = 0; r < m.rows(); ++r)
    for (long c = 0; c < m.cols(); ++c)
      data.push_back({m(r, c).real(), m(r, c).imag()});
  j["data"] = std::move(data);
  if (!formalism.empty()) j["formalism"] = formalism;
  return j;
}

Matrix matrix_from_json_obj(const json& j) {
  if (!j.contains("dim") || !j.contains("data"))
    throw IoError("matrix JSON needs \"dim\" and \"data\"");
  const long n = j["dim"].get<long>();
  const auto& data = j["data"];
  if (n <= 0 || !data.is_array() ||
      static_cast<long>(data.size()) != n * n)
    throw IoError("matrix JSON has inconsistent dimensions");
  Matrix m(n, n);
  long idx = 0;
  for (long r = 0; r < n; ++r)
    for (long c = 0; c < n; ++c, ++idx) {
      const auto& cell = data[idx];
      if (!cell.is_array() || cell.size() != 2)
        throw IoError("matrix JSON entries must be [re, im] pairs");
      m(r, c) = Complex(cell[0].get<double>(), cell[1].get<double>());
    }
  return m;
}

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw IoError("malformed JSON");
  return j;
}

}  // namespace

std::string matrix_to_json(const Matrix& m, const std::string& formalism) {
  return matrix_to_json_obj(m, formalism).dump();
}

Matrix matrix_from_json_text(const std::string& text) {
  return matrix_from_json_obj(parse(text));
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << text;
  if (!out) throw IoError("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Covariance load_covariance(const std::string& path) {
  return Covariance::validate(matrix_from_json_text(read_text_file(path)));
}

void save_covariance(const Covariance& c, const std::string& path) {
  write_text_file(path, matrix_to_json(c.matrix(), "passive") + "\n");
}

namespace {
Matrix load_tagged(const std::string& path, const std::string& formalism) {
  const json j = parse(read_text_file(path));
  if (j.contains("formalism") &&
      j["formalism"].get<std::string>() != formalism)
    throw IoError("formalism tag mismatch: expected " + formalism);
  return matrix_from_json_obj(j);
}
}  // namespace

void save_self_dual(const selfdual::SelfDualCovariance& s,
                    const std::string& path) {
  write_text_file(path, matrix_to_json(s.matrix(), "selfdual") + "\n");
}

selfdual::SelfDualCovariance load_self_dual(const std::string& path) {
  return selfdual::SelfDualCovariance::validate(load_tagged(path, "selfdual"));
}

void save_majorana(const selfdual::MajoranaCovariance& a,
                   const std::string& path) {
  write_text_file(
      path, matrix_to_json(a.matrix().cast<Complex>(), "majorana") + "\n");
}

selfdual::MajoranaCovariance load_majorana(const std::string& path) {
  const Matrix m = load_tagged(path, "majorana");
  if (m.imag().cwiseAbs().maxCoeff() > 1e-12)
    throw IoError("majorana matrix must be real");
  return selfdual::MajoranaCovariance::validate(m.real());
}

std::string plan_to_json(const embezzle::EmbezzlementPlan& plan) {
  json j;
  j["delta"] = plan.delta;
  j["eps"] = plan.eps;
  j["subspace_indices"] = plan.subspace_indices;
  j["active_indices"] = plan.active_indices;
  j["matching"] = plan.matching;
  j["eta_achieved"] = plan.eta_achieved;
  j["certified_bound"] = plan.certified_bound;
  j["theorem_bound"] = plan.theorem_bound;
  j["unitary"] = matrix_to_json_obj(plan.unitary);
  j["K"] = matrix_to_json_obj(plan.k_matrix, "passive");
  j["F"] = matrix_to_json_obj(plan.f_matrix, "passive");
  j["G"] = matrix_to_json_obj(plan.g_matrix, "passive");
  return j.dump(2);
}

embezzle::EmbezzlementPlan plan_from_json_text(const std::string& text) {
  const json j = parse(text);
  embezzle::EmbezzlementPlan plan;
  try {
    plan.delta = j.at("delta").get<double>();
    plan.eps = j.at("eps").get<double>();
    plan.subspace_indices = j.at("subspace_indices").get<std::vector<int>>();
    plan.active_indices = j.at("active_indices").get<std::vector<int>>();
    plan.matching = j.at("matching").get<std::vector<int>>();
    plan.eta_achieved = j.at("eta_achieved").get<double>();
    plan.certified_bound = j.at("certified_bound").get<double>();
    plan.theorem_bound = j.at("theorem_bound").get<double>();
    plan.unitary = matrix_from_json_obj(j.at("unitary"));
    plan.k_matrix = matrix_from_json_obj(j.at("K"));
    plan.f_matrix = matrix_from_json_obj(j.at("F"));
    plan.g_matrix = matrix_from_json_obj(j.at("G"));
  } catch (const json::exception& e) {
    throw IoError(std::string("malformed plan JSON: ") + e.what());
  }
  return plan;
}

embezzle::EmbezzlementPlan load_plan(const std::string& path) {
  return plan_from_json_text(read_text_file(path));
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

CsvWriter::CsvWriter(std::vector<std::string> header)
    : columns_(header.size()) {
  for (size_t i = 0; i < header.size(); ++i) {
    if (i) body_ += ',';
    body_ += header[i];
  }
  body_ += '\n';
}

void CsvWriter::add_row(const std::vector<std::string>& cells) {
  if (cells.size() != columns_) throw Error("CSV row has wrong arity");
  for (size_t i = 0; i < cells.size(); ++i) {
    if (i) body_ += ',';
    body_ += cells[i];
  }
  body_ += '\n';
}

std::string CsvWriter::str() const { return body_; }

}  // namespace fermbezzle::io
