// Command-line front end. All computation goes through the C API in
// <modan/modan.h>; this file only parses arguments, reads auxiliary files,
// and renders the returned JSON documents as aligned tables.

#include <modan/modan.h>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

namespace {

using nlohmann::json;

struct GlobalOptions {
  std::size_t qmax = 3;
  unsigned long long seed = 0;
  bool json_out = false;
};

[[noreturn]] void die_usage(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  std::exit(2);
}

[[noreturn]] void die_api() {
  std::cerr << "error: " << modan_last_error() << "\n";
  std::exit(1);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) die_usage("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

modan_workspace* open_workspace(const std::string& path) {
  modan_workspace* ws = nullptr;
  const modan_status st = modan_workspace_open_file(path.c_str(), &ws);
  if (st == MODAN_OK) return ws;
  std::cerr << "error: " << modan_last_error() << "\n";
  // An unreadable path is a usage problem; unparseable or invalid content is
  // a validation failure.
  std::exit(st == MODAN_ERR_ARGUMENT ? 2 : 1);
}

json invoke(const std::function<modan_status(char**)>& call) {
  char* out = nullptr;
  if (call(&out) != MODAN_OK) die_api();
  json doc = json::parse(out);
  modan_string_free(out);
  return doc;
}

[[noreturn]] void finish(const json& doc, const GlobalOptions& opt, int code,
                         const std::function<void(const json&)>& render) {
  if (opt.json_out)
    std::cout << doc.dump(2) << "\n";
  else
    render(doc);
  std::exit(code);
}

// ---------------------------------------------------------------------------
// rendering helpers
// ---------------------------------------------------------------------------

std::string yesno(bool b) { return b ? "yes" : "no"; }

/// ["1","-1/2"] -> "[1 -1/2]"
std::string vec_line(const json& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += " ";
    out += v[i].get<std::string>();
  }
  return out + "]";
}

/// [["1","0"],["0","1"]] -> "[1 0; 0 1]"
std::string matrix_line(const json& rows) {
  std::string out = "[";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r) out += "; ";
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (c) out += " ";
      out += rows[r][c].get<std::string>();
    }
  }
  return out + "]";
}

void print_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  const auto emit = [&](const std::vector<std::string>& row) {
    std::string line = " ";
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += " ";
      line += row[c];
      if (c + 1 < row.size()) line.append(width[c] - row[c].size(), ' ');
    }
    std::cout << line << "\n";
  };
  emit(header);
  for (const auto& row : rows) emit(row);
}

void print_space(const std::string& title, const json& doc) {
  const json& space = doc["space"];
  std::cout << title << ": dimension " << space["dim"].get<std::size_t>() << ", ambient "
            << space["ambient"].get<std::size_t>() << "\n";
  if (doc.contains("value_block_dim"))
    std::cout << "  pair coordinates: module block " << doc["value_block_dim"].get<std::size_t>()
              << " + algebra block " << doc["base_block_dim"].get<std::size_t>() << "\n";
  for (const auto& row : space["basis"]) std::cout << "  " << vec_line(row) << "\n";
}

void print_degree_table(const std::string& title, const json& doc) {
  std::cout << title << " (carrier " << doc["carrier"].get<std::string>() << ", kappa "
            << doc["kappa"].get<std::string>() << ", argument dimension "
            << doc["arg_dimension"].get<std::size_t>() << ")\n";
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : doc["rows"])
    rows.push_back({std::to_string(r["q"].get<std::size_t>()), std::to_string(r["dim"].get<std::size_t>()),
                    std::to_string(r["rank"].get<std::size_t>()), std::to_string(r["H"].get<std::size_t>())});
  print_table({"q", "dim", "rank", "H"}, rows);
}

void print_describe(const json& doc) {
  const json& a = doc["algebra"];
  std::cout << "algebra " << a["name"].get<std::string>() << ": dimension "
            << a["dimension"].get<std::size_t>() << "\n";
  std::string basis;
  for (const auto& b : a["basis"]) {
    if (!basis.empty()) basis += ", ";
    basis += b.get<std::string>();
  }
  if (!basis.empty()) std::cout << "  basis: " << basis << "\n";
  if (a["unit"].is_null())
    std::cout << "  unit: none\n";
  else
    std::cout << "  unit: " << vec_line(a["unit"]) << "\n";
  std::cout << "  annihilator dimension: " << a["annihilator"]["dim"].get<std::size_t>() << "\n";
  if (!doc["module"].is_null()) {
    const json& m = doc["module"];
    std::cout << "module " << m["name"].get<std::string>() << ": dimension "
              << m["dimension"].get<std::size_t>() << "\n";
    std::cout << "  free: " << yesno(m["free"].get<bool>());
    if (m.contains("free_rank")) std::cout << " (rank " << m["free_rank"].get<std::size_t>() << ")";
    std::cout << ", adjoint: " << yesno(m["adjoint"].get<bool>()) << "\n";
    std::cout << "  ann of algebra in module: dimension "
              << m["annihilator_of_algebra_in_module"]["dim"].get<std::size_t>() << "\n";
    std::cout << "  ann of module in algebra: dimension "
              << m["annihilator_of_module_in_algebra"]["dim"].get<std::size_t>() << "\n";
  }
  std::cout << "workspace valid\n";
}

// ---------------------------------------------------------------------------
// command handlers
// ---------------------------------------------------------------------------

[[noreturn]] void run_validate(const std::string& file, const GlobalOptions& opt) {
  modan_workspace* ws = open_workspace(file);
  const json doc = invoke([&](char** out) { return modan_describe(ws, out); });
  finish(doc, opt, 0, print_describe);
}

[[noreturn]] void run_space(const std::string& file, const GlobalOptions& opt, const std::string& title,
                            modan_status (*verb)(modan_workspace*, char**)) {
  modan_workspace* ws = open_workspace(file);
  const json doc = invoke([&](char** out) { return verb(ws, out); });
  finish(doc, opt, 0, [&](const json& d) { print_space(title, d); });
}

[[noreturn]] void run_connection(const std::string& file, const std::string& potential_path,
                                 const GlobalOptions& opt) {
  modan_workspace* ws = open_workspace(file);
  std::string spec;
  if (!potential_path.empty()) spec = slurp(potential_path);
  const json doc = invoke([&](char** out) {
    return modan_connection(ws, spec.empty() ? nullptr : spec.c_str(), out);
  });
  finish(doc, opt, 0, [](const json& d) {
    std::cout << "connection: base dimension " << d["base_dimension"].get<std::size_t>() << "\n";
    std::cout << "  a-linear: " << yesno(d["a_linear"].get<bool>())
              << ", lie morphism: " << yesno(d["lie_morphism"].get<bool>()) << "\n";
    std::size_t index = 0;
    for (const auto& s : d["sections"]) {
      std::cout << "  base " << matrix_line(s["base"]) << "  ->  module part "
                << matrix_line(s["pair"]["top"]) << "\n";
      ++index;
    }
    const json& curvature = d["curvature"];
    if (curvature["zero"].get<bool>()) {
      std::cout << "  curvature: zero\n";
    } else {
      std::cout << "  curvature: nonzero\n";
      for (const auto& e : curvature["entries"])
        std::cout << "    F(" << e["i"].get<std::size_t>() << ", " << e["j"].get<std::size_t>()
                  << ") = " << matrix_line(e["defect"]) << "\n";
    }
  });
}

[[noreturn]] void run_gauge(const std::string& file, const std::string& g_path, const std::string& target,
                            const std::string& input_path, const GlobalOptions& opt) {
  modan_workspace* ws = open_workspace(file);
  std::string g_text, pair_text;
  if (!g_path.empty()) g_text = slurp(g_path);
  if (!input_path.empty()) pair_text = slurp(input_path);
  const json doc = invoke([&](char** out) {
    return modan_gauge(ws, g_text.empty() ? nullptr : g_text.c_str(), target.c_str(),
                       pair_text.empty() ? nullptr : pair_text.c_str(), out);
  });
  finish(doc, opt, 0, [](const json& d) {
    std::cout << "gauge transform, target " << d["target"].get<std::string>() << "\n";
    std::cout << "  g:        " << matrix_line(d["g"]) << "\n";
    std::cout << "  inverse:  " << matrix_line(d["g_inverse"]) << "\n";
    std::cout << "  input:    top " << matrix_line(d["input"]["top"]) << ", bottom "
              << matrix_line(d["input"]["bottom"]) << "\n";
    std::cout << "  output:   top " << matrix_line(d["output"]["top"]) << ", bottom "
              << matrix_line(d["output"]["bottom"]) << "\n";
  });
}

/// Presets pass through; anything else is read as a file and sent inline.
std::string resolve_kappa_spec(const std::string& kappa, const std::vector<std::string>& presets) {
  for (const auto& p : presets)
    if (kappa == p) return kappa;
  const std::string file_prefix = "potential:";
  if (kappa.rfind(file_prefix, 0) == 0) return slurp(kappa.substr(file_prefix.size()));
  return slurp(kappa);
}

[[noreturn]] void run_hochschild(const std::string& file, const std::string& kappa,
                                 const GlobalOptions& opt) {
  modan_workspace* ws = open_workspace(file);
  const std::string spec = resolve_kappa_spec(kappa, {"id", "workspace"});
  const json doc =
      invoke([&](char** out) { return modan_hochschild(ws, spec.c_str(), opt.qmax, out); });
  finish(doc, opt, 0,
         [](const json& d) { print_degree_table("multiplier-complex cohomology", d); });
}

[[noreturn]] void run_derham(const std::string& file, const std::string& kappa, const GlobalOptions& opt) {
  modan_workspace* ws = open_workspace(file);
  const std::string spec = resolve_kappa_spec(kappa, {"id", "lift", "potential"});
  const json doc = invoke([&](char** out) { return modan_derham(ws, spec.c_str(), opt.qmax, out); });
  finish(doc, opt, 0, [](const json& d) { print_degree_table("form-complex cohomology", d); });
}

[[noreturn]] void run_check_magic(const std::string& file, const GlobalOptions& opt) {
  modan_workspace* ws = open_workspace(file);
  const json doc = invoke([&](char** out) { return modan_check_magic(ws, opt.qmax, out); });
  finish(doc, opt, doc["all_hold"].get<bool>() ? 0 : 1, [](const json& d) {
    std::cout << "Lie-derivative identity on basis forms (carrier " << d["carrier"].get<std::string>()
              << ")\n";
    std::vector<std::vector<std::string>> rows;
    for (const auto& r : d["rows"])
      rows.push_back({std::to_string(r["q"].get<std::size_t>()),
                      std::to_string(r["forms"].get<std::size_t>()),
                      std::to_string(r["directions"].get<std::size_t>()),
                      yesno(r["holds"].get<bool>())});
    print_table({"q", "forms", "directions", "holds"}, rows);
    std::cout << (d["all_hold"].get<bool>() ? "all identities hold" : "IDENTITY FAILED") << "\n";
  });
}

[[noreturn]] void run_homotopy(const std::string& file, const GlobalOptions& opt) {
  modan_workspace* ws = open_workspace(file);
  const json doc = invoke([&](char** out) { return modan_homotopy(ws, opt.qmax, out); });
  finish(doc, opt, doc["all_hold"].get<bool>() ? 0 : 1, [](const json& d) {
    std::cout << "contraction homotopy on basis forms\n";
    std::vector<std::vector<std::string>> rows;
    for (const auto& r : d["rows"])
      rows.push_back({std::to_string(r["q"].get<std::size_t>()), yesno(r["identity_holds"].get<bool>()),
                      yesno(r["lie_identity_holds"].get<bool>())});
    print_table({"q", "identity", "lie identity"}, rows);
    std::cout << (d["all_hold"].get<bool>() ? "complex is exact" : "IDENTITY FAILED") << "\n";
  });
}

[[noreturn]] void run_check(const std::string& file, const GlobalOptions& opt) {
  modan_workspace* ws = open_workspace(file);
  const json doc = invoke([&](char** out) { return modan_check(ws, opt.qmax, opt.seed, out); });
  finish(doc, opt, doc["all_pass"].get<bool>() ? 0 : 1, [](const json& d) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& r : d["results"])
      rows.push_back({r["status"].get<std::string>(), r["tag"].get<std::string>(),
                      r["detail"].get<std::string>()});
    print_table({"status", "check", "detail"}, rows);
    const json& counts = d["counts"];
    std::cout << counts["pass"].get<std::size_t>() << " passed, " << counts["fail"].get<std::size_t>()
              << " failed, " << counts["skip"].get<std::size_t>() << " skipped\n";
  });
}

[[noreturn]] void run_oracle(const std::string& file, const GlobalOptions& opt) {
  modan_workspace* ws = open_workspace(file);
  const json doc = invoke([&](char** out) { return modan_oracle(ws, opt.qmax, out); });
  finish(doc, opt, doc["all_agree"].get<bool>() ? 0 : 1, [](const json& d) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& r : d["rows"])
      rows.push_back({r["status"].get<std::string>(), r["statement"].get<std::string>(),
                      std::to_string(r["primary"].get<std::size_t>()),
                      std::to_string(r["oracle"].get<std::size_t>())});
    print_table({"status", "statement", "primary", "oracle"}, rows);
    std::cout << (d["all_agree"].get<bool>() ? "primary and oracle agree" : "MISMATCH") << "\n";
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact calculus of multipliers, derivations, connections, and cohomology"};
  app.require_subcommand(1);
  app.set_version_flag("--version", modan_version());

  GlobalOptions opt;
  app.add_option("--qmax", opt.qmax, "maximum degree for cohomology towers and degree checks")
      ->capture_default_str();
  app.add_option("--seed", opt.seed, "seed for randomized checks")->capture_default_str();
  app.add_flag("--json", opt.json_out, "emit raw JSON instead of tables");

  std::string file, potential_path, g_path, target, input_path, kappa = "id";

  const auto add_file = [&](CLI::App* sub) {
    sub->add_option("file", file, "workspace JSON file")->required();
    sub->fallthrough();
    return sub;
  };

  add_file(app.add_subcommand("validate", "load a workspace and verify every structural axiom"))
      ->callback([&] { run_validate(file, opt); });

  add_file(app.add_subcommand("multipliers", "basis of the multiplier space of the algebra"))
      ->callback([&] { run_space(file, opt, "multiplier space", modan_multipliers); });
  add_file(app.add_subcommand("module-multipliers", "basis of the module multiplier pair space"))
      ->callback([&] { run_space(file, opt, "module multiplier space", modan_module_multipliers); });
  add_file(app.add_subcommand("derivations", "basis of the derivation space of the algebra"))
      ->callback([&] { run_space(file, opt, "derivation space", modan_derivations); });
  add_file(app.add_subcommand("module-derivations", "basis of the module derivation pair space"))
      ->callback([&] { run_space(file, opt, "module derivation space", modan_module_derivations); });

  {
    CLI::App* sub = add_file(app.add_subcommand(
        "connection", "lift base derivations to module derivation pairs and measure curvature"));
    sub->add_option("--potential", potential_path,
                    "JSON file with one module matrix per base derivation");
    sub->callback([&] { run_connection(file, potential_path, opt); });
  }

  {
    CLI::App* sub = add_file(
        app.add_subcommand("gauge", "conjugate the module part of a pair by an invertible map"));
    sub->add_option("--g", g_path, "JSON file with the transformation matrix (workspace g block if omitted)");
    sub->add_option("--target", target, "multiplier or derivation")->required();
    sub->add_option("--input", input_path, "JSON file with the pair (workspace pair block if omitted)");
    sub->callback([&] { run_gauge(file, g_path, target, input_path, opt); });
  }

  {
    CLI::App* coh = app.add_subcommand("cohomology", "cohomology of the two attached complexes");
    coh->require_subcommand(1);
    coh->fallthrough();
    CLI::App* hoch = add_file(coh->add_subcommand("hochschild", "multiplier-space complex"));
    hoch->add_option("--kappa", kappa, "id, workspace, or a matrix file")->capture_default_str();
    hoch->callback([&] { run_hochschild(file, kappa, opt); });
    CLI::App* rham = add_file(coh->add_subcommand("derham", "derivation-space form complex"));
    rham->add_option("--kappa", kappa, "id, lift, potential, potential:<file>, or a matrix file")
        ->capture_default_str();
    rham->callback([&] { run_derham(file, kappa, opt); });
  }

  add_file(app.add_subcommand("check-magic",
                              "verify the Lie-derivative identity on all basis forms"))
      ->callback([&] { run_check_magic(file, opt); });
  add_file(app.add_subcommand("homotopy", "verify the contraction homotopy that makes the module "
                                          "form complex exact"))
      ->callback([&] { run_homotopy(file, opt); });
  add_file(app.add_subcommand("check", "run the full deterministic property suite"))
      ->callback([&] { run_check(file, opt); });
  add_file(app.add_subcommand("oracle", "cross-validate dimensions against a brute-force path"))
      ->callback([&] { run_oracle(file, opt); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    app.exit(e);
    return 2;
  }
  return 0;
}
