#include "liemirror/json_io.hpp"

#include "liemirror/catalog.hpp"
#include "liemirror/exterior.hpp"
#include "liemirror/structures.hpp"

namespace liemirror {

Json to_json(const Rat& r) { return to_string(r); }

Json to_json(const MatQ& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const LieQ& l) {
  Json j;
  j["dim"] = l.dim();
  Json brackets = Json::array();
  for (const auto& [ij, comps] : l.brackets()) {
    Json entry;
    entry["i"] = ij.first + 1;
    entry["j"] = ij.second + 1;
    Json coeffs;
    for (const auto& [k, c] : comps) coeffs[std::to_string(k + 1)] = to_string(c);
    entry["coeffs"] = coeffs;
    brackets.push_back(entry);
  }
  j["brackets"] = brackets;
  j["labels"] = l.labels();
  return j;
}

Json to_json(const Representation& rho) {
  Json j;
  j["base"] = to_json(rho.base);
  j["fiber_dim"] = rho.fiber_dim;
  Json mats = Json::array();
  for (const auto& m : rho.rho) mats.push_back(to_json(m));
  j["rho"] = mats;
  return j;
}

Json to_json(const SemidirectProduct& sd) {
  Json j;
  j["base"] = to_json(sd.base);
  j["fiber_dim"] = sd.fiber_dim();
  Json mats = Json::array();
  for (const auto& m : sd.rho.rho) mats.push_back(to_json(m));
  j["rho"] = mats;
  return j;
}

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (j.is_string()) {
    try {
      return parse_rat(j.get<std::string>());
    } catch (const std::exception& e) {
      throw ParseError(e.what());
    }
  }
  throw ParseError("expected a rational literal, got: " + j.dump());
}

MatQ matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array())
    throw ParseError("expected a matrix (array of arrays)");
  int rows = static_cast<int>(j.size());
  int cols = static_cast<int>(j[0].size());
  MatQ m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (static_cast<int>(j[i].size()) != cols) throw ParseError("ragged matrix rows");
    for (int c = 0; c < cols; ++c) m(i, c) = rat_from_json(j[i][c]);
  }
  return m;
}

LieQ lie_from_json(const Json& j) {
  if (!j.contains("dim")) throw ParseError("Lie algebra document needs 'dim'");
  int dim = j["dim"].get<int>();
  if (dim < 1 || dim > 9) throw ParseError("Lie algebra dimension out of range");
  BracketTable<Rat> table;
  for (const auto& entry : j.value("brackets", Json::array())) {
    int i = entry.at("i").get<int>() - 1;
    int jj = entry.at("j").get<int>() - 1;
    if (i < 0 || jj < 0 || i >= dim || jj >= dim || i == jj)
      throw ParseError("bad bracket indices in Lie algebra document");
    for (const auto& [k, c] : entry.at("coeffs").items()) {
      int kk = std::stoi(k) - 1;
      if (kk < 0 || kk >= dim) throw ParseError("bad bracket component index");
      Rat v = rat_from_json(c);
      if (i < jj)
        table[{i, jj}][kk] += v;
      else
        table[{jj, i}][kk] -= v;
    }
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
  return LieQ::create(dim, std::move(table), std::move(labels));  // may throw JacobiFailure
}

Representation representation_from_json(const Json& j) {
  Representation rho;
  rho.base = lie_from_json(j.at("base"));
  rho.fiber_dim = j.at("fiber_dim").get<int>();
  for (const auto& m : j.at("rho")) {
    MatQ mat = matrix_from_json(m);
    if (mat.rows() != rho.fiber_dim || mat.cols() != rho.fiber_dim)
      throw ValidationError("representation matrix has the wrong shape");
    rho.rho.push_back(std::move(mat));
  }
  if (static_cast<int>(rho.rho.size()) != rho.base.dim())
    throw ValidationError("representation needs one matrix per base basis vector");
  if (auto bad = rho.violating_pair())
    throw ValidationError("representation law fails on base pair (" +
                          std::to_string(bad->first + 1) + "," +
                          std::to_string(bad->second + 1) + ")");
  return rho;
}

SemidirectProduct semidirect_from_json(const Json& j) {
  Representation rho = representation_from_json(j);
  return build_semidirect(rho.base, rho);
}

MatQ load_two_form(const Json& j, int dim) {
  MatQ b(dim, dim);
  if (j.is_string()) {
    ExtQ w = parse_form(j.get<std::string>(), dim);
    if (w.degree() != 2 && !w.is_zero()) throw ValidationError("two-form must have degree 2");
    b = form_to_matrix(w.degree() == 2 ? w : ExtQ(dim, 2));
  } else {
    b = matrix_from_json(j);
  }
  if (b.rows() != dim || b.cols() != dim) throw ValidationError("two-form shape mismatch");
  if (b.transpose() != -b) throw ValidationError("two-form matrix is not antisymmetric");
  return b;
}

MatQ load_complex_structure(const Json& j, int dim) {
  MatQ m = matrix_from_json(j);
  if (m.rows() != dim || m.cols() != dim)
    throw ValidationError("complex structure shape mismatch");
  if (m * m != -MatQ::identity(dim)) throw ValidationError("J*J != -I");
  return m;
}

}  // namespace liemirror
