// Copyright 2026 The optpovm Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "cli/povm_file.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <system_error>

namespace optpovm::cli {

using nlohmann::json;

namespace {

json complex_array(const Complex* data, Eigen::Index n) {
  json out = json::array();
  for (Eigen::Index i = 0; i < n; ++i) out.push_back({data[i].real(), data[i].imag()});
  return out;
}

double finite_number(const json& j, const std::string& what) {
  if (!j.is_number()) throw FormatError(what + ": expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw FormatError(what + ": non-finite value");
  return v;
}

std::vector<Complex> complex_list(const json& j, const std::string& what, std::size_t expected) {
  if (!j.is_array()) throw FormatError(what + ": expected an array");
  if (j.size() != expected) {
    throw FormatError(what + ": expected " + std::to_string(expected) + " entries, got " +
                      std::to_string(j.size()));
  }
  std::vector<Complex> out;
  out.reserve(expected);
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto& z = j[i];
    if (!z.is_array() || z.size() != 2) throw FormatError(what + ": entries must be [re, im] pairs");
    out.emplace_back(finite_number(z[0], what), finite_number(z[1], what));
  }
  return out;
}

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(where + ": missing field '" + key + "'");
  return j.at(key);
}

}  // namespace

json povm_to_json(const POVM& p) {
  json elements = json::array();
  for (const auto& e : p.elements) {
    json guess = json::object();
    if (p.rep.kind == RepKind::SU2_COSET) guess["theta"] = e.guess.theta;
    guess["psi"] = e.guess.psi;
    elements.push_back({
        {"weight", e.weight},
        {"guess", std::move(guess)},
        {"seed_state", complex_array(e.seed_state.data(), e.seed_state.size())},
        {"matrix", complex_array(e.matrix.data(), e.matrix.size())},
    });
  }
  json out = {
      {"schema_version", "1"},
      {"rep", {{"kind", std::string(to_string(p.rep.kind))},
               {"n_copies", p.rep.n_copies},
               {"dim", p.rep.dim}}},
  };
  if (!p.grid.empty()) out["grid"] = p.grid;
  out["elements"] = std::move(elements);
  return out;
}

POVM povm_from_json(const json& j) {
  const auto& version = field(j, "schema_version", "povm");
  if (!version.is_string() || version.get<std::string>() != "1") {
    throw FormatError("povm: unsupported schema_version");
  }
  const auto& rep_j = field(j, "rep", "povm");
  const auto& kind_j = field(rep_j, "kind", "rep");
  const auto& n_j = field(rep_j, "n_copies", "rep");
  const auto& dim_j = field(rep_j, "dim", "rep");
  if (!kind_j.is_string()) throw FormatError("rep.kind: expected a string");
  if (!n_j.is_number_integer() || !dim_j.is_number_integer()) {
    throw FormatError("rep: n_copies and dim must be integers");
  }

  POVM p;
  try {
    p.rep = make_rep(rep_kind_from_string(kind_j.get<std::string>()), n_j.get<int>());
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("rep: ") + e.what());
  }
  if (dim_j.get<int>() != p.rep.dim) throw FormatError("rep: dim must equal n_copies + 1");
  if (j.contains("grid")) {
    if (!j.at("grid").is_string()) throw FormatError("grid: expected a string");
    p.grid = j.at("grid").get<std::string>();
  }

  const auto& elements = field(j, "elements", "povm");
  if (!elements.is_array() || elements.empty()) throw FormatError("elements: expected a non-empty array");
  const auto d = static_cast<std::size_t>(p.rep.dim);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const std::string where = "elements[" + std::to_string(i) + "]";
    const auto& ej = elements[i];
    POVMElement e;
    e.weight = finite_number(field(ej, "weight", where), where + ".weight");

    const auto& g = field(ej, "guess", where);
    e.guess.psi = finite_number(field(g, "psi", where + ".guess"), where + ".guess.psi");
    if (p.rep.kind == RepKind::SU2_COSET) {
      e.guess.theta = finite_number(field(g, "theta", where + ".guess"), where + ".guess.theta");
    } else if (g.contains("theta")) {
      e.guess.theta = finite_number(g.at("theta"), where + ".guess.theta");
    }
    if (e.guess.theta < 0.0 || e.guess.theta > std::numbers::pi ||
        e.guess.psi < 0.0 || e.guess.psi >= 2.0 * std::numbers::pi) {
      throw FormatError(where + ".guess: angles out of range");
    }

    const auto seed = complex_list(field(ej, "seed_state", where), where + ".seed_state", d);
    e.seed_state = Eigen::Map<const StateVector>(seed.data(), p.rep.dim);
    const auto entries = complex_list(field(ej, "matrix", where), where + ".matrix", d * d);
    e.matrix = Eigen::Map<const ComplexMatrix>(entries.data(), p.rep.dim, p.rep.dim);
    p.elements.push_back(std::move(e));
  }
  return p;
}

std::string serialize_povm(const POVM& p) { return povm_to_json(p).dump(1) + "\n"; }

POVM parse_povm(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
  try {
    return povm_from_json(j);
  } catch (const json::exception& e) {
    throw FormatError(std::string("invalid POVM file: ") + e.what());
  }
}

POVM read_povm_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_povm(buf.str());
}

void write_file_atomically(const std::filesystem::path& path, const std::string& contents) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + tmp.string() + "'");
    out << contents;
    out.flush();
    if (!out) throw std::runtime_error("failed writing '" + tmp.string() + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw std::runtime_error("cannot rename onto '" + path.string() + "': " + ec.message());
  }
}

}  // namespace optpovm::cli
