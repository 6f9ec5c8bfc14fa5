// Copyright 2026 The posmap Authors
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

#include "posmap/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "posmap/errors.hpp"

namespace posmap {

namespace {

Json real_rows(const ComplexMatrix& m, bool imag) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(imag ? m(i, j).imag() : m(i, j).real());
    rows.push_back(std::move(row));
  }
  return rows;
}

std::size_t read_dim(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer() || j.at(key).get<long long>() < 1)
    throw InvalidArgument(std::string("field '") + key + "' must be a positive integer");
  return j.at(key).get<std::size_t>();
}

Json vector_to_json(const ComplexVector& v) {
  Json re = Json::array(), im = Json::array();
  for (const cplx& z : v) {
    re.push_back(z.real());
    im.push_back(z.imag());
  }
  return {{"type", "vector"}, {"re", re}, {"im", im}};
}

Json optional_number(const std::optional<double>& x) { return x ? Json(*x) : Json(nullptr); }

void append_cell(std::string& line, const std::optional<double>& x) {
  line += ',';
  if (x) line += format_double(*x);
}

}  // namespace

Json matrix_to_json(const ComplexMatrix& m) {
  return {{"re", real_rows(m, false)}, {"im", real_rows(m, true)}};
}

ComplexMatrix matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("re") || !j.contains("im"))
    throw InvalidArgument("matrix needs 're' and 'im' fields");
  const Json& re = j.at("re");
  const Json& im = j.at("im");
  if (!re.is_array() || !im.is_array() || re.size() != im.size() || re.empty())
    throw InvalidArgument("'re' and 'im' must be non-empty arrays of equal size");
  const std::size_t n = re.size();
  ComplexMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!re[i].is_array() || !im[i].is_array() || re[i].size() != n || im[i].size() != n)
      throw InvalidArgument("matrix rows must be arrays of length " + std::to_string(n));
    for (std::size_t k = 0; k < n; ++k) {
      if (!re[i][k].is_number() || !im[i][k].is_number())
        throw InvalidArgument("matrix entries must be numbers");
      m(i, k) = cplx(re[i][k].get<double>(), im[i][k].get<double>());
    }
  }
  return m;
}

Json state_to_json(const DensityMatrix& state) {
  Json j = {{"d1", state.split().d1}, {"d2", state.split().d2}};
  j.update(matrix_to_json(state.matrix()));
  return j;
}

DensityMatrix state_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidArgument("state JSON must be an object");
  const Split split{read_dim(j, "d1"), read_dim(j, "d2")};
  return DensityMatrix(matrix_from_json(j), split);
}

Json choi_to_json(const ChoiMatrix& choi) {
  Json j = {{"d_in", choi.d_in()}, {"d_out", choi.d_out()}, {"convention", "in_out"}};
  j.update(matrix_to_json(choi.matrix()));
  return j;
}

ChoiMatrix choi_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidArgument("Choi JSON must be an object");
  if (j.contains("convention") && j.at("convention") != "in_out")
    throw InvalidArgument("unsupported Choi convention");
  const std::size_t d_in = read_dim(j, "d_in"), d_out = read_dim(j, "d_out");
  ComplexMatrix m = matrix_from_json(j);
  if (m.dim() != d_in * d_out)
    throw InvalidArgument("Choi matrix dimension does not equal d_in * d_out");
  return ChoiMatrix(std::move(m), d_in, d_out);
}

Json certificate_to_json(const Certificate& certificate) {
  if (const auto* e = std::get_if<Ensemble>(&certificate)) {
    Json comps = Json::array();
    for (const auto& c : e->components()) comps.push_back(state_to_json(c));
    return {{"type", "ensemble"}, {"weights", e->weights()}, {"components", comps}};
  }
  if (const auto* v = std::get_if<ComplexVector>(&certificate)) return vector_to_json(*v);
  return nullptr;
}

Json report_to_json(const MeasureReport& report) {
  Json j = {{"value", report.value},
            {"converged", report.converged},
            {"restarts_used", report.restarts_used},
            {"upper_bound", report.upper_bound}};
  if (report.argmax) j["argmax"] = {report.argmax->first, report.argmax->second};
  if (!std::holds_alternative<std::monostate>(report.certificate))
    j["certificate"] = certificate_to_json(report.certificate);
  return j;
}

Json track_to_json(const TrackRecord& record) {
  Json rows = Json::array();
  for (const auto& p : record.points)
    rows.push_back({{"t", p.t},
                    {"min_eig", p.min_eigenvalue},
                    {"negativity", optional_number(p.negativity)},
                    {"eof_upper", optional_number(p.eof_upper)},
                    {"dcoef_sup", optional_number(p.dcoef_sup)},
                    {"trace", p.trace}});
  return rows;
}

std::string track_to_csv(const TrackRecord& record) {
  std::string out = "t,min_eig,negativity,eof_upper,dcoef_sup,trace\n";
  for (const auto& p : record.points) {
    std::string line = format_double(p.t) + ',' + format_double(p.min_eigenvalue);
    append_cell(line, p.negativity);
    append_cell(line, p.eof_upper);
    append_cell(line, p.dcoef_sup);
    line += ',' + format_double(p.trace) + '\n';
    out += line;
  }
  return out;
}

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open '" + path.string() + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw InvalidArgument("malformed JSON in '" + path.string() + "': " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw InvalidArgument("failed writing '" + path.string() + "'");
}

}  // namespace posmap
