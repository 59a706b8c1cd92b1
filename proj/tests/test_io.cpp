#include <doctest.h>

#include <fstream>
#include <functional>
#include <sstream>
#include <string>

#include "core/algebra.hpp"
#include "core/derivation.hpp"
#include "core/errors.hpp"
#include "core/io.hpp"
#include "core/module.hpp"
#include "core/multiplier.hpp"
#include "core/pairops.hpp"

using namespace modan;
using nlohmann::json;

namespace {

std::string fixture_path(const std::string& name) {
  return std::string(MODAN_FIXTURE_DIR) + "/" + name;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return errc::internal;
}

}  // namespace

TEST_CASE("workspace fixtures load with the advertised shapes") {
  const WorkspaceData a2 = parse_workspace(read_file(fixture_path("A2.json")));
  CHECK(a2.algebra.name() == "A2");
  CHECK(a2.algebra.dim() == 2);
  CHECK(a2.algebra.unit().has_value());
  CHECK(!a2.module);

  const WorkspaceData m2 = parse_workspace(read_file(fixture_path("A2_M2.json")));
  REQUIRE(m2.module.has_value());
  CHECK(m2.module->dim() == 2);
  CHECK(m2.module->is_free());
  CHECK(m2.module->is_adjoint());

  const WorkspaceData m2r2 = parse_workspace(read_file(fixture_path("A2_M2r2.json")));
  REQUIRE(m2r2.module.has_value());
  CHECK(m2r2.module->dim() == 4);
  CHECK(m2r2.module->is_free());
  CHECK(m2r2.module->free_rank() == 2);
  CHECK(!m2r2.module->is_adjoint());

  const WorkspaceData ad3 = parse_workspace(read_file(fixture_path("A3_AD3.json")));
  REQUIRE(ad3.module.has_value());
  CHECK(ad3.module->is_adjoint());
  CHECK(!ad3.algebra.unit().has_value());
}

TEST_CASE("auxiliary fixture files parse") {
  const Matrix g = parse_matrix_text(read_file(fixture_path("g_unit_shear.json")), "g");
  CHECK(g.rows() == 2);
  CHECK(g.at(1, 0) == Rational(1));

  const Vec pair = parse_pair_text(read_file(fixture_path("pair_nabla_x.json")), 2, 2);
  CHECK(pair.size() == 8);
  const OperatorPair split = split_pair(pair, 2, 2);
  CHECK(split.top == split.bottom);

  const auto potential = parse_potential_text(read_file(fixture_path("potential_x_action.json")));
  REQUIRE(potential.size() == 1);
  CHECK(potential[0].at(1, 0) == Rational(1));
}

TEST_CASE("empty algebra is a valid workspace") {
  const WorkspaceData ws = parse_workspace(R"({"algebra":{"name":"empty","basis":[],"products":[]}})");
  CHECK(ws.algebra.dim() == 0);
  CHECK(multiplier_algebra(ws.algebra).dim() == 0);
  CHECK(derivation_algebra(ws.algebra).dim() == 0);
}

TEST_CASE("malformed documents raise parse errors") {
  CHECK(code_of([] { parse_workspace("{nope"); }) == errc::parse);
  CHECK(code_of([] { parse_workspace("[]"); }) == errc::parse);
  CHECK(code_of([] { parse_workspace(R"({"no_algebra":1})") ; }) == errc::parse);
  CHECK(code_of([] {
          parse_workspace(R"({"algebra":{"basis":["a"],"products":[]}})");
        }) == errc::parse);
  CHECK(code_of([] {
          parse_workspace(R"({"algebra":{"basis":["a"],"products":[[["1","2"]]]}})");
        }) == errc::parse);
  CHECK(code_of([] {
          parse_workspace(R"({"algebra":{"basis":["a"],"products":[[[1.5]]]}})");
        }) == errc::parse);
  CHECK(code_of([] { parse_matrix_text(R"({"wrong":[]})", "g"); }) == errc::parse);
  CHECK(code_of([] { parse_matrix_text(R"([["1","2"],["3"]])", "g"); }) == errc::parse);
  CHECK(code_of([] { parse_potential_text(R"({"g":[]})"); }) == errc::parse);
  CHECK(code_of([] { parse_pair_text(R"({"top":[["1"]]})", 1, 1); }) == errc::parse);
}

TEST_CASE("axiom violations surface as validation errors with witnesses") {
  // a*a = b, a*b = b, b*b = 0 is commutative but (a*a)*b != a*(a*b).
  const std::string nonassoc =
      R"({"algebra":{"name":"bad","basis":["a","b"],
          "products":[[["0","1"],["0","1"]],[["0","1"],["0","0"]]]}})";
  CHECK(code_of([&] { parse_workspace(nonassoc); }) == errc::not_associative);

  const std::string noncomm =
      R"({"algebra":{"name":"bad","basis":["a","b"],
          "products":[[["0","0"],["1","0"]],[["0","1"],["0","0"]]]}})";
  CHECK(code_of([&] { parse_workspace(noncomm); }) == errc::not_commutative);

  // x acts as identity on m, but x*x = 0 in the algebra.
  const std::string badmod =
      R"({"algebra":{"name":"A2","basis":["e","x"],
          "products":[[["1","0"],["0","1"]],[["0","1"],["0","0"]]]},
          "module":{"name":"bad","basis":["m"],"action":[[["1"]],[["1"]]]}})";
  CHECK(code_of([&] { parse_workspace(badmod); }) == errc::not_a_module);
}

TEST_CASE("pair blocks validate their shape") {
  CHECK(code_of([] {
          parse_pair_text(R"({"top":[["1","0"],["0","1"]],"bottom":[["1"]]})", 2, 2);
        }) == errc::dimension_mismatch);
  CHECK(code_of([] {
          parse_pair_text(R"({"top":[["1"]],"bottom":[["1","0"],["0","1"]]})", 2, 2);
        }) == errc::dimension_mismatch);
}

TEST_CASE("rationals parse from integers and strings and canonicalize") {
  const WorkspaceData ws = parse_workspace(
      R"({"algebra":{"name":"f","basis":["e"],"products":[[[1]]]},"g":[["2/4"]]})");
  REQUIRE(ws.g.has_value());
  CHECK(ws.g->at(0, 0) == Rational(1) / 2);
  CHECK(format_rational(ws.g->at(0, 0)) == "1/2");
  CHECK(format_rational(Rational(-3)) == "-3");
}

TEST_CASE("matrix and vector serialization round-trips") {
  Matrix m = Matrix::from_rows({{Rational(1) / 3, Rational(-2)}, {Rational(0), Rational(5) / 7}});
  CHECK(parse_matrix_json(matrix_to_json(m)) == m);

  const Vec v{Rational(2) / 6, Rational(-1)};
  const json jv = vec_to_json(v);
  CHECK(jv[0].get<std::string>() == "1/3");
}

TEST_CASE("subspace serialization round-trips through canonical bases") {
  for (const char* name : {"A2.json", "A3_AD3.json", "A2_M2r2.json"}) {
    const WorkspaceData ws = parse_workspace(read_file(fixture_path(name)));
    const Subspace spaces[] = {multiplier_algebra(ws.algebra), derivation_algebra(ws.algebra)};
    for (const Subspace& s : spaces) CHECK(subspace_from_json(subspace_to_json(s)) == s);
    if (ws.module) {
      const Subspace pair_space = module_derivations(*ws.module);
      CHECK(subspace_from_json(subspace_to_json(pair_space)) == pair_space);
    }
  }
  // A non-canonical spanning set reduces to the same subspace.
  json j;
  j["ambient"] = 3;
  j["basis"] = json::array({json::array({"2", "2", "0"}), json::array({"1", "1", "1"})});
  const Subspace s = subspace_from_json(j);
  CHECK(s.dim() == 2);
  CHECK(subspace_from_json(subspace_to_json(s)) == s);
}

TEST_CASE("workspace auxiliary blocks parse together") {
  const std::string text = R"({
    "algebra":{"name":"A2","basis":["e","x"],
               "products":[[["1","0"],["0","1"]],[["0","1"],["0","0"]]]},
    "module":{"name":"M2","basis":["m_e","m_x"],
              "action":[[["1","0"],["0","1"]],[["0","1"],["0","0"]]]},
    "kappa":[["1","0"],["0","1"]],
    "potential":[[["0","0"],["1","0"]]],
    "g":[["1","0"],["1","1"]],
    "pair":{"top":[["0","0"],["0","1"]],"bottom":[["0","0"],["0","1"]]}
  })";
  const WorkspaceData ws = parse_workspace(text);
  CHECK(ws.kappa.has_value());
  CHECK(ws.potential.has_value());
  CHECK(ws.potential->size() == 1);
  CHECK(ws.g.has_value());
  REQUIRE(ws.pair.has_value());
  CHECK(ws.pair->size() == 8);
}
