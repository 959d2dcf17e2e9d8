// Copyright 2026 The qdeg Authors
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

#include "qdeg/io.hpp"

#include <charconv>
#include <fstream>
#include <map>

#include "qdeg/errors.hpp"
#include "qdeg/zoo.hpp"

namespace qdeg {
namespace {

double parse_plain(std::string_view text) {
  double x = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  if (!text.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, x);
  if (ec != std::errc() || ptr != last || text.empty()) {
    throw ParseError("not a number: '" + std::string(text) + "'");
  }
  return x;
}

std::map<std::string, std::string, std::less<>> parse_params(std::string_view text) {
  std::map<std::string, std::string, std::less<>> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view item = text.substr(0, comma);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0) {
      throw ParseError("expected key=value, got '" + std::string(item) + "'");
    }
    if (!out.emplace(std::string(item.substr(0, eq)), std::string(item.substr(eq + 1)))
             .second) {
      throw ParseError("duplicate parameter '" + std::string(item.substr(0, eq)) + "'");
    }
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
  }
  return out;
}

class Params {
 public:
  Params(std::string family, std::string_view text)
      : family_(std::move(family)), values_(parse_params(text)) {}

  double number(std::string_view key) {
    const auto it = values_.find(key);
    if (it == values_.end()) {
      throw ParseError(family_ + ": missing parameter '" + std::string(key) + "'");
    }
    const double v = parse_number(it->second);
    values_.erase(it);
    return v;
  }

  int dimension(std::string_view key) {
    const double v = number(key);
    if (v != static_cast<double>(static_cast<int>(v))) {
      throw ParseError(family_ + ": '" + std::string(key) + "' must be an integer");
    }
    return static_cast<int>(v);
  }

  void finish() const {
    if (!values_.empty()) {
      throw ParseError(family_ + ": unknown parameter '" + values_.begin()->first + "'");
    }
  }

 private:
  std::string family_;
  std::map<std::string, std::string, std::less<>> values_;
};

}  // namespace

std::string format_double(double x) {
  if (x == 0.0) return "0";  // also folds -0
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

double parse_number(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return parse_plain(text);
  const double num = parse_plain(text.substr(0, slash));
  const double den = parse_plain(text.substr(slash + 1));
  if (den == 0.0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return num / den;
}

Json matrix_to_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      row.push_back({m(i, j).real(), m(i, j).imag()});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) {
    throw ParseError("matrix must be a non-empty array of rows");
  }
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  ComplexMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const Json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
      throw ParseError("ragged matrix");
    }
    for (Eigen::Index c = 0; c < cols; ++c) {
      const Json& e = row[static_cast<std::size_t>(c)];
      if (e.is_number()) {
        m(r, c) = e.get<double>();
      } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
        m(r, c) = Complex(e[0].get<double>(), e[1].get<double>());
      } else {
        throw ParseError("matrix entries must be numbers or [re, im] pairs");
      }
    }
  }
  return m;
}

Json channel_to_json(const Channel& c) {
  Json ops = Json::array();
  for (const auto& k : c.kraus().operators()) ops.push_back(matrix_to_json(k));
  return Json{{"schema_version", kSchemaVersion},
              {"kind", "channel"},
              {"label", c.label()},
              {"d_in", c.d_in()},
              {"d_out", c.d_out()},
              {"kraus", std::move(ops)}};
}

Channel channel_from_json(const Json& j, const Tolerance& tol) {
  try {
    if (j.at("schema_version").get<int>() != kSchemaVersion) {
      throw ParseError("unsupported schema_version");
    }
    const int d_in = j.at("d_in").get<int>();
    const int d_out = j.at("d_out").get<int>();
    std::vector<ComplexMatrix> ops;
    for (const auto& k : j.at("kraus")) ops.push_back(matrix_from_json(k));
    Channel c(KrausSet(d_in, d_out, std::move(ops)), j.value("label", std::string{}));
    if (!c.kraus().is_trace_preserving(tol)) {
      throw NotTP("channel '" + c.label() + "' is not trace preserving");
    }
    return c;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed channel document: ") + e.what());
  }
}

Channel parse_channel_spec(std::string_view spec, const Tolerance& tol) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) {
    throw ParseError("channel spec needs the form family:params, got '" + std::string(spec) +
                     "'");
  }
  const std::string family(spec.substr(0, colon));
  const std::string_view rest = spec.substr(colon + 1);
  if (family == "file") return channel_from_json(read_json_file(std::string(rest)), tol);

  Params p(family, rest);
  if (family == "td") {
    const int d = p.dimension("d");
    const double t = p.number("t");
    p.finish();
    return td_channel(TDParams(d, t));
  }
  if (family == "depol") {
    const int d = p.dimension("d");
    const double s = p.number("s");
    p.finish();
    return depolarizing(DepolParams(d, s));
  }
  if (family == "td-comp") {
    const double t = p.number("t");
    p.finish();
    return td_complement_qubit(TDParams(2, t).t, tol);
  }
  if (family == "cloner") {
    const double prob = p.number("p");
    p.finish();
    return td_complement_qubit(cloner_params(prob).t, tol);
  }
  if (family == "id") {
    const int d = p.dimension("d");
    p.finish();
    if (d < 1) throw OutOfRange("dimension must be positive");
    return Channel(KrausSet({ComplexMatrix::Identity(d, d)}), "id:d=" + std::to_string(d));
  }
  throw ParseError("unknown channel family '" + family + "'");
}

Json certificate_to_json(const SuperOp& map, Mode mode) {
  return Json{{"schema_version", kSchemaVersion},
              {"kind", "certificate"},
              {"mode", std::string(to_string(mode))},
              {"d_in", map.d_in()},
              {"d_out", map.d_out()},
              {"superop", matrix_to_json(map.matrix())}};
}

SuperOp certificate_from_json(const Json& j) {
  try {
    const Json& body = j.contains("certificate") ? j.at("certificate") : j;
    if (body.is_null()) throw ParseError("document holds no certificate");
    if (body.at("schema_version").get<int>() != kSchemaVersion) {
      throw ParseError("unsupported schema_version");
    }
    return SuperOp(body.at("d_in").get<int>(), body.at("d_out").get<int>(),
                   matrix_from_json(body.at("superop")));
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed certificate: ") + e.what());
  } catch (const DimensionMismatch& e) {
    throw ParseError(std::string("malformed certificate: ") + e.what());
  }
}

Json verdict_to_json(const Verdict& v) {
  Json eigs = Json::array();
  for (Eigen::Index i = 0; i < v.candidate_choi_eigs.size(); ++i) {
    eigs.push_back(v.candidate_choi_eigs(i));
  }
  Json j{{"schema_version", kSchemaVersion},
         {"kind", "verdict"},
         {"status", std::string(to_string(v.status))},
         {"mode", std::string(to_string(v.mode))},
         {"unique", v.unique},
         {"consistent", v.consistent},
         {"kernel_dim", v.kernel_dim},
         {"residual", v.residual},
         {"eigenvalues", std::move(eigs)},
         {"reason", v.reason}};
  j["certificate"] = v.certificate ? certificate_to_json(*v.certificate, v.mode) : Json();
  return j;
}

Json screen_to_json(const ScreenReport& r) {
  return Json{{"schema_version", kSchemaVersion},
              {"kind", "screen"},
              {"hopeless", r.hopeless},
              {"reasons", r.reasons},
              {"complement_ppt", r.complement_ppt},
              {"complement_choi_rank", r.complement_choi_rank},
              {"d_a", r.d_a},
              {"d_b", r.d_b},
              {"d_e", r.d_e}};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw ParseError("'" + path + "': " + e.what());
  }
}

}  // namespace qdeg
