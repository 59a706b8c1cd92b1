#ifndef MODAN_IO_HPP
#define MODAN_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "algebra.hpp"
#include "matrix.hpp"
#include "module.hpp"
#include "subspace.hpp"

namespace modan {

/// A parsed and validated workspace file: an algebra, optionally a module
/// over it, and optional auxiliary blocks used by specific commands.
struct WorkspaceData {
  Algebra algebra;
  std::optional<Module> module;
  std::optional<Matrix> kappa;
  std::optional<std::vector<Matrix>> potential;
  std::optional<Matrix> g;
  std::optional<Vec> pair;  // flattened (top, bottom) pair coordinates
};

/// Parses a workspace JSON document; throws Error(parse) on malformed input
/// and the validation errors of Algebra/Module on broken axioms.
WorkspaceData parse_workspace(const std::string& json_text);

/// Parses auxiliary documents of the shared rational-string format.
Matrix parse_matrix_json(const nlohmann::json& rows);
Matrix parse_matrix_text(const std::string& json_text, const std::string& key);
std::vector<Matrix> parse_potential_text(const std::string& json_text);
Vec parse_pair_text(const std::string& json_text, std::size_t top_dim,
                    std::size_t bottom_dim);

nlohmann::json matrix_to_json(const Matrix& m);
nlohmann::json vec_to_json(const Vec& v);
nlohmann::json subspace_to_json(const Subspace& s);
Subspace subspace_from_json(const nlohmann::json& j);

}  // namespace modan

#endif
