#include "io.hpp"

#include "errors.hpp"
#include "pairops.hpp"

namespace modan {

namespace {

using nlohmann::json;

json parse_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(errc::parse, "malformed JSON document");
  return j;
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer())
    return Rational(static_cast<long long>(j.get<long long>()));
  if (!j.is_string())
    fail(errc::parse, "rational entries must be strings like \"p/q\"");
  return parse_rational(j.get<std::string>());
}

Vec vec_from_json(const json& j, const char* what) {
  if (!j.is_array()) fail(errc::parse, std::string(what) + " must be an array");
  Vec v;
  v.reserve(j.size());
  for (const auto& entry : j) v.push_back(rational_from_json(entry));
  return v;
}

std::vector<std::string> names_from_json(const json& j) {
  if (!j.is_array()) fail(errc::parse, "basis must be an array of names");
  std::vector<std::string> names;
  for (const auto& entry : j) {
    if (!entry.is_string()) fail(errc::parse, "basis names must be strings");
    names.push_back(entry.get<std::string>());
  }
  return names;
}

std::vector<std::vector<Vec>> tensor_from_json(const json& j,
                                               const char* what) {
  if (!j.is_array()) fail(errc::parse, std::string(what) + " must be an array");
  std::vector<std::vector<Vec>> tensor;
  for (const auto& row : j) {
    if (!row.is_array())
      fail(errc::parse, std::string(what) + " rows must be arrays");
    std::vector<Vec> out_row;
    for (const auto& cell : row) out_row.push_back(vec_from_json(cell, what));
    tensor.push_back(std::move(out_row));
  }
  return tensor;
}

}  // namespace

Matrix parse_matrix_json(const json& rows) {
  if (!rows.is_array()) fail(errc::parse, "matrix must be an array of rows");
  std::vector<Vec> out;
  for (const auto& row : rows) out.push_back(vec_from_json(row, "matrix row"));
  if (out.empty()) return Matrix(0, 0);
  for (const Vec& row : out)
    if (row.size() != out.front().size())
      fail(errc::parse, "matrix rows have unequal lengths");
  return Matrix::from_rows(out);
}

WorkspaceData parse_workspace(const std::string& json_text) {
  json j = parse_text(json_text);
  if (!j.is_object() || !j.contains("algebra"))
    fail(errc::parse, "workspace needs an \"algebra\" object");
  const json& a = j["algebra"];
  if (!a.is_object()) fail(errc::parse, "\"algebra\" must be an object");
  std::string name = a.value("name", std::string("algebra"));
  std::vector<std::string> basis = names_from_json(a.value("basis", json::array()));
  auto products = tensor_from_json(a.value("products", json::array()), "products");
  if (products.size() != basis.size())
    fail(errc::parse, "products must have one row per basis element");
  for (const auto& row : products)
    if (row.size() != basis.size())
      fail(errc::parse, "products rows must have one entry per basis element");
  for (const auto& row : products)
    for (const Vec& cell : row)
      if (cell.size() != basis.size())
        fail(errc::parse, "product coordinates must match the basis size");

  WorkspaceData ws{Algebra::validated(name, basis, products), {}, {}, {}, {},
                   {}};

  if (j.contains("module")) {
    const json& m = j["module"];
    if (!m.is_object()) fail(errc::parse, "\"module\" must be an object");
    std::string mname = m.value("name", std::string("module"));
    std::vector<std::string> mbasis =
        names_from_json(m.value("basis", json::array()));
    auto action = tensor_from_json(m.value("action", json::array()), "action");
    if (action.size() != basis.size())
      fail(errc::parse, "action must have one row per algebra basis element");
    for (const auto& row : action) {
      if (row.size() != mbasis.size())
        fail(errc::parse, "action rows must have one entry per module basis element");
      for (const Vec& cell : row)
        if (cell.size() != mbasis.size())
          fail(errc::parse, "action coordinates must match the module basis");
    }
    ws.module = Module::validated(ws.algebra, mname, mbasis, action);
  }

  if (j.contains("kappa")) ws.kappa = parse_matrix_json(j["kappa"]);
  if (j.contains("potential")) {
    std::vector<Matrix> pot;
    if (!j["potential"].is_array())
      fail(errc::parse, "potential must be an array of matrices");
    for (const auto& entry : j["potential"])
      pot.push_back(parse_matrix_json(entry));
    ws.potential = std::move(pot);
  }
  if (j.contains("g")) ws.g = parse_matrix_json(j["g"]);
  if (j.contains("pair")) {
    const json& p = j["pair"];
    if (!p.is_object() || !p.contains("top") || !p.contains("bottom"))
      fail(errc::parse, "pair needs \"top\" and \"bottom\" matrices");
    Matrix top = parse_matrix_json(p["top"]);
    Matrix bottom = parse_matrix_json(p["bottom"]);
    ws.pair = join_pair(top, bottom);
  }
  return ws;
}

Matrix parse_matrix_text(const std::string& json_text, const std::string& key) {
  json j = parse_text(json_text);
  if (j.is_array()) return parse_matrix_json(j);
  if (!j.is_object() || !j.contains(key))
    fail(errc::parse, "expected a \"" + key + "\" matrix");
  return parse_matrix_json(j[key]);
}

std::vector<Matrix> parse_potential_text(const std::string& json_text) {
  json j = parse_text(json_text);
  const json* arr = nullptr;
  if (j.is_array()) {
    arr = &j;
  } else if (j.is_object() && j.contains("potential")) {
    arr = &j["potential"];
  } else {
    fail(errc::parse, "expected a \"potential\" array of matrices");
  }
  std::vector<Matrix> pot;
  for (const auto& entry : *arr) pot.push_back(parse_matrix_json(entry));
  return pot;
}

Vec parse_pair_text(const std::string& json_text, std::size_t top_dim,
                    std::size_t bottom_dim) {
  json j = parse_text(json_text);
  if (j.is_object() && j.contains("pair")) j = j["pair"];
  if (!j.is_object() || !j.contains("top") || !j.contains("bottom"))
    fail(errc::parse, "expected a pair with \"top\" and \"bottom\" matrices");
  Matrix top = parse_matrix_json(j["top"]);
  Matrix bottom = parse_matrix_json(j["bottom"]);
  if (top.rows() != top_dim || top.cols() != top_dim)
    fail(errc::dimension_mismatch, "pair top block has the wrong shape");
  if (bottom.rows() != bottom_dim || bottom.cols() != bottom_dim)
    fail(errc::dimension_mismatch, "pair bottom block has the wrong shape");
  return join_pair(top, bottom);
}

nlohmann::json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c)
      row.push_back(format_rational(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json vec_to_json(const Vec& v) {
  json row = json::array();
  for (const Rational& x : v) row.push_back(format_rational(x));
  return row;
}

nlohmann::json subspace_to_json(const Subspace& s) {
  json j;
  j["ambient"] = s.ambient();
  j["dim"] = s.dim();
  json basis = json::array();
  for (std::size_t i = 0; i < s.dim(); ++i)
    basis.push_back(vec_to_json(s.basis_vector(i)));
  j["basis"] = std::move(basis);
  return j;
}

Subspace subspace_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("ambient") || !j.contains("basis"))
    fail(errc::parse, "subspace needs \"ambient\" and \"basis\"");
  const std::size_t ambient = j["ambient"].get<std::size_t>();
  std::vector<Vec> rows;
  for (const auto& row : j["basis"])
    rows.push_back(vec_from_json(row, "basis row"));
  for (const Vec& row : rows)
    if (row.size() != ambient)
      fail(errc::parse, "basis rows must have the ambient length");
  return Subspace::span(rows, ambient);
}

}  // namespace modan
