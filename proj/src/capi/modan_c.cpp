#include <modan/modan.h>

#include <cctype>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "core/algebra.hpp"
#include "core/checks.hpp"
#include "core/derham.hpp"
#include "core/derivation.hpp"
#include "core/errors.hpp"
#include "core/gauge.hpp"
#include "core/hochschild.hpp"
#include "core/io.hpp"
#include "core/matrix.hpp"
#include "core/module.hpp"
#include "core/multiplier.hpp"
#include "core/opspace.hpp"
#include "core/oracle.hpp"
#include "core/pairops.hpp"
#include "core/subspace.hpp"

using nlohmann::json;

struct modan_workspace {
  modan::WorkspaceData data;
};

namespace {

thread_local std::string t_last_error;

modan_status status_of(modan::errc code) {
  switch (code) {
    case modan::errc::parse:
      return MODAN_ERR_PARSE;
    case modan::errc::not_commutative:
    case modan::errc::not_associative:
    case modan::errc::not_a_module:
      return MODAN_ERR_INVALID;
    case modan::errc::nonzero_residual:
    case modan::errc::nonzero_curvature:
    case modan::errc::cap_exceeded:
      return MODAN_ERR_REFUSED;
    case modan::errc::internal:
      return MODAN_ERR_INTERNAL;
    default:
      return MODAN_ERR_ARGUMENT;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

modan_status report_argument_error(const std::string& message) {
  t_last_error = message;
  return MODAN_ERR_ARGUMENT;
}

/// Runs a producer of one JSON document behind the exception barrier.
template <typename F>
modan_status run_json(modan_workspace* ws, char** out_json, F&& produce) {
  if (!out_json) return report_argument_error("out_json is null");
  *out_json = nullptr;
  if (!ws) return report_argument_error("workspace handle is null");
  try {
    const json doc = produce(ws->data);
    *out_json = dup_string(doc.dump(2));
    t_last_error.clear();
    return MODAN_OK;
  } catch (const modan::Error& e) {
    t_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return MODAN_ERR_INTERNAL;
  } catch (...) {
    t_last_error = "unknown failure";
    return MODAN_ERR_INTERNAL;
  }
}

const modan::Module& require_module(const modan::WorkspaceData& ws) {
  if (!ws.module) modan::fail(modan::errc::no_module, "this verb needs a module block in the workspace");
  return *ws.module;
}

bool spec_missing(const char* spec) { return spec == nullptr || *spec == '\0'; }

bool spec_is(const char* spec, const char* word) {
  return spec != nullptr && std::strcmp(spec, word) == 0;
}

/// A spec whose first non-space character opens a JSON document is treated
/// as literal JSON rather than a preset name.
bool spec_is_inline(const char* spec) {
  if (spec == nullptr) return false;
  for (const char* p = spec; *p; ++p) {
    if (std::isspace(static_cast<unsigned char>(*p))) continue;
    return *p == '{' || *p == '[';
  }
  return false;
}

json pair_to_json(const modan::Vec& pair, std::size_t m, std::size_t n) {
  const modan::OperatorPair split = modan::split_pair(pair, m, n);
  json j;
  j["top"] = modan::matrix_to_json(split.top);
  j["bottom"] = modan::matrix_to_json(split.bottom);
  return j;
}

json describe_doc(const modan::WorkspaceData& ws) {
  const modan::Algebra& a = ws.algebra;
  json ja;
  ja["name"] = a.name();
  ja["dimension"] = a.dim();
  ja["basis"] = a.basis_names();
  ja["commutative"] = true;
  ja["associative"] = true;
  ja["unit"] = a.unit() ? modan::vec_to_json(*a.unit()) : json(nullptr);
  ja["annihilator"] = modan::subspace_to_json(a.annihilator());
  json doc;
  doc["algebra"] = ja;
  if (ws.module) {
    const modan::Module& mod = *ws.module;
    json jm;
    jm["name"] = mod.name();
    jm["dimension"] = mod.dim();
    jm["basis"] = mod.basis_names();
    jm["free"] = mod.is_free();
    if (mod.is_free()) jm["free_rank"] = mod.free_rank();
    jm["adjoint"] = mod.is_adjoint();
    jm["annihilator_of_algebra_in_module"] = modan::subspace_to_json(mod.ann_of_algebra_in_module());
    jm["annihilator_of_module_in_algebra"] = modan::subspace_to_json(mod.ann_of_module_in_algebra());
    doc["module"] = jm;
  } else {
    doc["module"] = nullptr;
  }
  json blocks;
  blocks["kappa"] = ws.kappa.has_value();
  blocks["potential"] = ws.potential.has_value();
  blocks["g"] = ws.g.has_value();
  blocks["pair"] = ws.pair.has_value();
  doc["blocks"] = blocks;
  return doc;
}

json space_doc(const modan::Subspace& space) {
  json doc;
  doc["space"] = modan::subspace_to_json(space);
  return doc;
}

modan::ConnectionSection section_from_spec(const modan::Module& mod,
                                           const std::optional<std::vector<modan::Matrix>>& block,
                                           const char* spec) {
  if (spec_missing(spec) || spec_is(spec, "lift")) return modan::ConnectionSection::free_lift(mod);
  if (spec_is(spec, "potential")) {
    if (!block)
      modan::fail(modan::errc::bad_argument, "kappa preset 'potential' needs a potential block in the workspace");
    return modan::ConnectionSection::from_potential(mod, *block);
  }
  if (spec_is_inline(spec))
    return modan::ConnectionSection::from_potential(mod, modan::parse_potential_text(spec));
  modan::fail(modan::errc::bad_argument,
              std::string("unknown connection spec '") + spec + "' (expected lift, potential, or literal JSON)");
}

json connection_doc(const modan::WorkspaceData& ws, const char* spec) {
  const modan::Module& mod = require_module(ws);
  const modan::ConnectionSection section = section_from_spec(mod, ws.potential, spec);
  const modan::Subspace base = modan::derivation_algebra(mod.base());
  const std::size_t s = base.dim(), n = mod.base().dim(), m = mod.dim();
  json doc;
  doc["base_dimension"] = s;
  doc["a_linear"] = section.is_a_linear();
  doc["lie_morphism"] = section.is_lie_morphism();
  doc["assignment"] = modan::matrix_to_json(section.assignment());
  json sections = json::array();
  std::vector<modan::Matrix> base_matrices;
  for (std::size_t j = 0; j < s; ++j) {
    base_matrices.push_back(modan::Matrix::from_flat(base.basis_vector(j), n, n));
    const modan::Vec pair = section.apply(base_matrices.back());
    json entry;
    entry["base"] = modan::matrix_to_json(base_matrices.back());
    entry["pair"] = pair_to_json(pair, m, n);
    sections.push_back(entry);
  }
  doc["sections"] = sections;
  json entries = json::array();
  bool flat = true;
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = i + 1; j < s; ++j) {
      const modan::Matrix defect = section.curvature(base_matrices[i], base_matrices[j]);
      if (defect.is_zero()) continue;
      flat = false;
      json entry;
      entry["i"] = i;
      entry["j"] = j;
      entry["defect"] = modan::matrix_to_json(defect);
      entries.push_back(entry);
    }
  json curvature;
  curvature["zero"] = flat;
  curvature["entries"] = entries;
  doc["curvature"] = curvature;
  return doc;
}

json gauge_doc(const modan::WorkspaceData& ws, const char* g_json, const char* target,
               const char* pair_json) {
  const modan::Module& mod = require_module(ws);
  const std::size_t m = mod.dim(), n = mod.base().dim();

  modan::Matrix g_matrix = [&] {
    if (!spec_missing(g_json)) return modan::parse_matrix_text(g_json, "g");
    if (ws.g) return *ws.g;
    modan::fail(modan::errc::bad_argument, "no g matrix given and the workspace has no g block");
  }();
  const modan::Vec pair = [&] {
    if (!spec_missing(pair_json)) return modan::parse_pair_text(pair_json, m, n);
    if (ws.pair) return *ws.pair;
    modan::fail(modan::errc::bad_argument, "no pair given and the workspace has no pair block");
  }();

  const bool to_multiplier = spec_is(target, "multiplier");
  if (!to_multiplier && !spec_is(target, "derivation"))
    modan::fail(modan::errc::bad_argument, "gauge target must be 'multiplier' or 'derivation'");
  if (to_multiplier) {
    if (!modan::module_multipliers(mod).contains(pair))
      modan::fail(modan::errc::not_a_multiplier, "input pair is not a module multiplier");
  } else {
    if (!modan::module_derivations(mod).contains(pair))
      modan::fail(modan::errc::not_a_derivation, "input pair is not a module derivation");
  }

  const modan::ModuleAutomorphism aut(mod, g_matrix);
  const modan::Vec image =
      to_multiplier ? modan::gauge_multiplier(mod, aut, pair) : modan::gauge_derivation(mod, aut, pair);
  json doc;
  doc["target"] = to_multiplier ? "multiplier" : "derivation";
  doc["g"] = modan::matrix_to_json(aut.matrix());
  doc["g_inverse"] = modan::matrix_to_json(aut.inverse_matrix());
  doc["input"] = pair_to_json(pair, m, n);
  doc["output"] = pair_to_json(image, m, n);
  return doc;
}

modan::Carrier main_carrier(const modan::WorkspaceData& ws) {
  return ws.module ? modan::Carrier::of_module(*ws.module) : modan::Carrier::of_algebra(ws.algebra);
}

json degree_rows_to_json(const std::vector<modan::HochschildComplex::DegreeRow>& rows) {
  json out = json::array();
  for (const auto& r : rows) {
    json row;
    row["q"] = r.degree;
    row["dim"] = r.space_dim;
    row["rank"] = r.delta_rank;
    row["H"] = r.cohomology_dim;
    out.push_back(row);
  }
  return out;
}

json degree_rows_to_json(const std::vector<modan::DeRhamComplex::DegreeRow>& rows) {
  json out = json::array();
  for (const auto& r : rows) {
    json row;
    row["q"] = r.degree;
    row["dim"] = r.space_dim;
    row["rank"] = r.differential_rank;
    row["H"] = r.cohomology_dim;
    out.push_back(row);
  }
  return out;
}

json hochschild_doc(const modan::WorkspaceData& ws, const char* spec, std::size_t q_max) {
  const modan::Carrier carrier = main_carrier(ws);
  modan::MultSpace u = modan::make_mult_space(carrier);
  const std::size_t s = u.dim();
  modan::Matrix kappa = modan::Matrix::identity(s);
  std::string label = "id";
  if (spec_is(spec, "workspace")) {
    if (!ws.kappa)
      modan::fail(modan::errc::bad_argument, "kappa preset 'workspace' needs a kappa block in the workspace");
    kappa = *ws.kappa;
    label = "workspace";
  } else if (spec_is_inline(spec)) {
    kappa = modan::parse_matrix_text(spec, "kappa");
    label = "explicit";
  } else if (!spec_missing(spec) && !spec_is(spec, "id")) {
    modan::fail(modan::errc::bad_argument,
                std::string("unknown kappa spec '") + spec + "' (expected id, workspace, or literal JSON)");
  }
  if (kappa.rows() != s || kappa.cols() != s)
    modan::fail(modan::errc::dimension_mismatch,
                "kappa must be " + std::to_string(s) + " x " + std::to_string(s) +
                    " on multiplier coordinates, got " + std::to_string(kappa.rows()) + " x " +
                    std::to_string(kappa.cols()));
  modan::HochschildComplex complex(u, u);
  json doc;
  doc["carrier"] = ws.module ? "module" : "algebra";
  doc["kappa"] = label;
  doc["arg_dimension"] = s;
  doc["rows"] = degree_rows_to_json(complex.cohomology(kappa, q_max));
  return doc;
}

/// Assignment matrix of a connection section on solution coordinates:
/// column j holds the module-derivation coordinates of the lift of the j-th
/// base-derivation basis vector.
modan::Matrix section_as_kappa(const modan::ConnectionSection& section, const modan::DerSpace& arg,
                               const modan::DerSpace& value, std::size_t n) {
  modan::Matrix kappa(value.dim(), arg.dim());
  for (std::size_t j = 0; j < arg.dim(); ++j) {
    const modan::Matrix x = modan::Matrix::from_flat(arg.space.basis_vector(j), n, n);
    const auto coords = value.space.coordinates(section.apply(x));
    if (!coords) modan::fail(modan::errc::internal, "section image left the module derivation space");
    for (std::size_t i = 0; i < value.dim(); ++i) kappa.at(i, j) = (*coords)[i];
  }
  return kappa;
}

json derham_doc(const modan::WorkspaceData& ws, const char* spec, std::size_t q_max) {
  json doc;
  const auto finish = [&](modan::DerSpace arg, modan::DerSpace value, const modan::Matrix& kappa) {
    doc["arg_dimension"] = arg.dim();
    modan::DeRhamComplex complex(std::move(arg), std::move(value));
    doc["rows"] = degree_rows_to_json(complex.cohomology(kappa, q_max));
    return doc;
  };

  if (spec_missing(spec) || spec_is(spec, "id")) {
    modan::DerSpace d = modan::make_der_space(main_carrier(ws));
    const modan::Matrix kappa = modan::Matrix::identity(d.dim());
    doc["carrier"] = ws.module ? "module" : "algebra";
    doc["kappa"] = "id";
    return finish(d, d, kappa);
  }

  const bool preset_lift = spec_is(spec, "lift");
  const bool preset_potential = spec_is(spec, "potential");
  std::optional<modan::Matrix> explicit_kappa;
  std::optional<std::vector<modan::Matrix>> inline_potential;
  if (!preset_lift && !preset_potential) {
    if (!spec_is_inline(spec))
      modan::fail(modan::errc::bad_argument,
                  std::string("unknown kappa spec '") + spec +
                      "' (expected id, lift, potential, or literal JSON)");
    const json parsed = json::parse(spec, nullptr, false);
    if (parsed.is_discarded()) modan::fail(modan::errc::parse, "kappa spec is not valid JSON");
    const bool looks_like_potential =
        (parsed.is_object() && parsed.contains("potential")) ||
        (parsed.is_array() && !parsed.empty() && parsed[0].is_array() && !parsed[0].empty() &&
         parsed[0][0].is_array());
    if (looks_like_potential)
      inline_potential = modan::parse_potential_text(spec);
    else
      explicit_kappa = modan::parse_matrix_text(spec, "kappa");
  }

  if (preset_lift || preset_potential || inline_potential) {
    const modan::Module& mod = require_module(ws);
    const char* preset = preset_lift ? "lift" : (preset_potential ? "potential" : nullptr);
    const modan::ConnectionSection section =
        inline_potential ? modan::ConnectionSection::from_potential(mod, *inline_potential)
                         : section_from_spec(mod, ws.potential, preset);
    modan::DerSpace arg = modan::make_der_space(modan::Carrier::of_algebra(mod.base()));
    modan::DerSpace value = modan::make_der_space(modan::Carrier::of_module(mod));
    const modan::Matrix kappa = section_as_kappa(section, arg, value, mod.base().dim());
    doc["carrier"] = "mixed";
    doc["kappa"] = preset ? preset : "potential";
    return finish(std::move(arg), std::move(value), kappa);
  }

  // Explicit matrix: mixed shape when a module is present, self shape otherwise.
  if (ws.module) {
    modan::DerSpace arg = modan::make_der_space(modan::Carrier::of_algebra(ws.algebra));
    modan::DerSpace value = modan::make_der_space(modan::Carrier::of_module(*ws.module));
    if (explicit_kappa->rows() == value.dim() && explicit_kappa->cols() == arg.dim()) {
      doc["carrier"] = "mixed";
      doc["kappa"] = "explicit";
      return finish(std::move(arg), std::move(value), *explicit_kappa);
    }
    modan::DerSpace d = modan::make_der_space(modan::Carrier::of_module(*ws.module));
    if (explicit_kappa->rows() == d.dim() && explicit_kappa->cols() == d.dim()) {
      doc["carrier"] = "module";
      doc["kappa"] = "explicit";
      return finish(d, d, *explicit_kappa);
    }
    modan::fail(modan::errc::dimension_mismatch,
                "kappa must be " + std::to_string(value.dim()) + " x " + std::to_string(arg.dim()) +
                    " (base into module) or " + std::to_string(d.dim()) + " x " + std::to_string(d.dim()) +
                    " (module self-assignment), got " + std::to_string(explicit_kappa->rows()) + " x " +
                    std::to_string(explicit_kappa->cols()));
  }
  modan::DerSpace d = modan::make_der_space(modan::Carrier::of_algebra(ws.algebra));
  if (explicit_kappa->rows() != d.dim() || explicit_kappa->cols() != d.dim())
    modan::fail(modan::errc::dimension_mismatch,
                "kappa must be " + std::to_string(d.dim()) + " x " + std::to_string(d.dim()) +
                    " on derivation coordinates, got " + std::to_string(explicit_kappa->rows()) + " x " +
                    std::to_string(explicit_kappa->cols()));
  doc["carrier"] = "algebra";
  doc["kappa"] = "explicit";
  return finish(d, d, *explicit_kappa);
}

modan::Form add_forms(const modan::Form& x, const modan::Form& y) {
  modan::Form out = x;
  for (std::size_t t = 0; t < out.values.size(); ++t)
    for (std::size_t k = 0; k < out.values[t].size(); ++k) out.values[t][k] += y.values[t][k];
  return out;
}

json check_magic_doc(const modan::WorkspaceData& ws, std::size_t q_max) {
  modan::DerSpace d = modan::make_der_space(main_carrier(ws));
  const std::size_t s = d.dim();
  const modan::Matrix id = modan::Matrix::identity(s);
  modan::DeRhamComplex complex(d, d);
  json rows = json::array();
  bool all_hold = true;
  for (std::size_t q = 0; q <= q_max; ++q) {
    bool holds = true;
    const std::size_t forms = complex.space_dim(q);
    for (std::size_t i = 0; i < forms && holds; ++i) {
      const modan::Form omega = complex.basis_form(q, i);
      for (std::size_t dir = 0; dir < s && holds; ++dir) {
        modan::Vec xi(s, modan::Rational(0));
        xi[dir] = 1;
        const modan::Form lie = complex.lie(id, xi, omega);
        modan::Form rhs = complex.interior(xi, complex.differential(id, omega));
        if (q > 0) rhs = add_forms(rhs, complex.differential(id, complex.interior(xi, omega)));
        holds = lie.values == rhs.values;
      }
    }
    all_hold = all_hold && holds;
    json row;
    row["q"] = q;
    row["forms"] = forms;
    row["directions"] = s;
    row["holds"] = holds;
    rows.push_back(row);
  }
  json doc;
  doc["carrier"] = ws.module ? "module" : "algebra";
  doc["rows"] = rows;
  doc["all_hold"] = all_hold;
  return doc;
}

json homotopy_doc(const modan::WorkspaceData& ws, std::size_t q_max) {
  const modan::Module& mod = require_module(ws);
  modan::DerSpace d = modan::make_der_space(modan::Carrier::of_module(mod));
  modan::DeRhamComplex complex(d, d);
  json rows = json::array();
  bool all_hold = true;
  for (const auto& r : complex.homotopy_check(q_max)) {
    json row;
    row["q"] = r.degree;
    row["identity_holds"] = r.identity_holds;
    row["lie_identity_holds"] = r.lie_identity_holds;
    all_hold = all_hold && r.identity_holds && r.lie_identity_holds;
    rows.push_back(row);
  }
  json doc;
  doc["rows"] = rows;
  doc["all_hold"] = all_hold;
  return doc;
}

json check_doc(const modan::WorkspaceData& ws, std::size_t q_max, std::uint64_t seed) {
  modan::CheckOptions options;
  options.q_max = q_max;
  options.seed = seed;
  const std::vector<modan::CheckResult> results = modan::run_checks(ws.algebra, ws.module, options);
  json rows = json::array();
  std::size_t pass = 0, failed = 0, skip = 0;
  for (const auto& r : results) {
    json row;
    row["tag"] = r.tag;
    row["status"] = modan::to_string(r.status);
    row["detail"] = r.detail;
    rows.push_back(row);
    if (r.status == modan::CheckStatus::pass) ++pass;
    if (r.status == modan::CheckStatus::fail) ++failed;
    if (r.status == modan::CheckStatus::skip) ++skip;
  }
  json counts;
  counts["pass"] = pass;
  counts["fail"] = failed;
  counts["skip"] = skip;
  json doc;
  doc["q_max"] = q_max;
  doc["seed"] = seed;
  doc["results"] = rows;
  doc["counts"] = counts;
  doc["all_pass"] = failed == 0;
  return doc;
}

json oracle_doc(const modan::WorkspaceData& ws, std::size_t q_max) {
  modan::OracleOptions options;
  options.q_max = q_max;
  const std::vector<modan::OracleRow> rows = modan::run_oracle(ws.algebra, ws.module, options);
  json out = json::array();
  bool all_agree = true;
  for (const auto& r : rows) {
    json row;
    row["statement"] = r.statement;
    row["primary"] = r.primary;
    row["oracle"] = r.oracle;
    row["status"] = modan::to_string(r.status);
    if (r.status == modan::OracleStatus::mismatch) all_agree = false;
    out.push_back(row);
  }
  json doc;
  doc["q_max"] = q_max;
  doc["rows"] = out;
  doc["all_agree"] = all_agree;
  return doc;
}

}  // namespace

extern "C" {

const char* modan_version(void) { return "1.0.0"; }

const char* modan_last_error(void) { return t_last_error.c_str(); }

void modan_string_free(char* s) { std::free(s); }

modan_status modan_workspace_open(const char* json_text, modan_workspace** out) {
  if (!out) return report_argument_error("out is null");
  *out = nullptr;
  if (!json_text) return report_argument_error("json_text is null");
  try {
    auto ws = new modan_workspace{modan::parse_workspace(json_text)};
    *out = ws;
    t_last_error.clear();
    return MODAN_OK;
  } catch (const modan::Error& e) {
    t_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return MODAN_ERR_INTERNAL;
  }
}

modan_status modan_workspace_open_file(const char* path, modan_workspace** out) {
  if (!out) return report_argument_error("out is null");
  *out = nullptr;
  if (!path) return report_argument_error("path is null");
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    t_last_error = std::string("cannot open file: ") + path;
    return MODAN_ERR_ARGUMENT;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return modan_workspace_open(buffer.str().c_str(), out);
}

void modan_workspace_close(modan_workspace* ws) { delete ws; }

modan_status modan_describe(modan_workspace* ws, char** out_json) {
  return run_json(ws, out_json, [](const modan::WorkspaceData& data) { return describe_doc(data); });
}

modan_status modan_multipliers(modan_workspace* ws, char** out_json) {
  return run_json(ws, out_json, [](const modan::WorkspaceData& data) {
    return space_doc(modan::multiplier_algebra(data.algebra));
  });
}

modan_status modan_module_multipliers(modan_workspace* ws, char** out_json) {
  return run_json(ws, out_json, [](const modan::WorkspaceData& data) {
    const modan::Module& mod = require_module(data);
    json doc = space_doc(modan::module_multipliers(mod));
    doc["value_block_dim"] = mod.dim() * mod.dim();
    doc["base_block_dim"] = mod.base().dim() * mod.base().dim();
    return doc;
  });
}

modan_status modan_derivations(modan_workspace* ws, char** out_json) {
  return run_json(ws, out_json, [](const modan::WorkspaceData& data) {
    return space_doc(modan::derivation_algebra(data.algebra));
  });
}

modan_status modan_module_derivations(modan_workspace* ws, char** out_json) {
  return run_json(ws, out_json, [](const modan::WorkspaceData& data) {
    const modan::Module& mod = require_module(data);
    json doc = space_doc(modan::module_derivations(mod));
    doc["value_block_dim"] = mod.dim() * mod.dim();
    doc["base_block_dim"] = mod.base().dim() * mod.base().dim();
    return doc;
  });
}

modan_status modan_connection(modan_workspace* ws, const char* kappa_spec, char** out_json) {
  return run_json(ws, out_json, [kappa_spec](const modan::WorkspaceData& data) {
    return connection_doc(data, kappa_spec);
  });
}

modan_status modan_gauge(modan_workspace* ws, const char* g_json, const char* target,
                         const char* pair_json, char** out_json) {
  return run_json(ws, out_json, [g_json, target, pair_json](const modan::WorkspaceData& data) {
    return gauge_doc(data, g_json, target, pair_json);
  });
}

modan_status modan_hochschild(modan_workspace* ws, const char* kappa_spec, size_t q_max,
                              char** out_json) {
  return run_json(ws, out_json, [kappa_spec, q_max](const modan::WorkspaceData& data) {
    return hochschild_doc(data, kappa_spec, q_max);
  });
}

modan_status modan_derham(modan_workspace* ws, const char* kappa_spec, size_t q_max,
                          char** out_json) {
  return run_json(ws, out_json, [kappa_spec, q_max](const modan::WorkspaceData& data) {
    return derham_doc(data, kappa_spec, q_max);
  });
}

modan_status modan_check_magic(modan_workspace* ws, size_t q_max, char** out_json) {
  return run_json(ws, out_json,
                  [q_max](const modan::WorkspaceData& data) { return check_magic_doc(data, q_max); });
}

modan_status modan_homotopy(modan_workspace* ws, size_t q_max, char** out_json) {
  return run_json(ws, out_json,
                  [q_max](const modan::WorkspaceData& data) { return homotopy_doc(data, q_max); });
}

modan_status modan_check(modan_workspace* ws, size_t q_max, unsigned long long seed,
                         char** out_json) {
  return run_json(ws, out_json,
                  [q_max, seed](const modan::WorkspaceData& data) { return check_doc(data, q_max, seed); });
}

modan_status modan_oracle(modan_workspace* ws, size_t q_max, char** out_json) {
  return run_json(ws, out_json,
                  [q_max](const modan::WorkspaceData& data) { return oracle_doc(data, q_max); });
}

}  // extern "C"
