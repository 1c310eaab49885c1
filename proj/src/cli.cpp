#include "lsa/cli.hpp"

#include <CLI11.hpp>
#include <complex>
#include <fstream>
#include <ostream>
#include <sstream>

#include "lsa/catalog.hpp"
#include "lsa/io.hpp"

namespace lsa {

namespace {

struct CliError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(std::ostream& out, bool as_json, const std::string& command,
          const Json& result, const std::string& plain) {
  if (as_json)
    out << Json{{"command", command}, {"result", result}}.dump(2) << "\n";
  else
    out << plain << "\n";
}

std::string case_name(ExtCase tag) {
  switch (tag) {
    case ExtCase::NotLeftSymmetric: return "not-left-symmetric";
    case ExtCase::Case1: return "1";
    case ExtCase::Case2: return "2";
    case ExtCase::Case3: return "3";
    case ExtCase::Case4: return "4";
    case ExtCase::Case5: return "5";
    case ExtCase::Case6: return "6";
    case ExtCase::Case7: return "7";
  }
  return "?";
}

Vector parse_vector_arg(const std::string& text) {
  std::vector<Scalar> coords;
  std::string tok;
  std::stringstream ss(text);
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) coords.push_back(Scalar::parse(tok));
  if (coords.empty()) throw CliError("empty vector literal");
  return Vector(std::move(coords));
}

void write_or_print(std::ostream& out, const std::string& path, const Json& j) {
  if (path.empty())
    out << j.dump(2) << "\n";
  else
    save_json_file(path, j);
}

int cmd_catalog_list(std::ostream& out, bool as_json, int dim) {
  struct Row {
    const char* name;
    const char* params;
    const char* products;
  };
  const Row rows[] = {
      {"a1:k", "0 <= k <= n-1", "e_j e_j = e_1, j = 2..k+1"},
      {"a2", "", "e_1 e_1 = e_1"},
      {"a3.1", "", "e_1 e_1 = 2e_1, e_1 e_j = e_j, e_j e_j = e_1"},
      {"a3.2:k", "0 <= k <= n-2",
       "e_1 e_1 = 2e_1, e_1 e_j = e_j, e_l e_l = e_1, l = 3..k+2"},
      {"a3.3:k", "0 <= k <= n-2",
       "e_1 e_2 = e_1, e_2 e_1 = 2e_1, e_2 e_2 = e_2, e_2 e_j = e_j, e_l e_l = e_1"},
      {"a4.1", "", "e_1 e_1 = e_1 + e_2, e_1 e_j = e_j"},
      {"a4:lambda", "lambda != 1, 2", "e_1 e_1 = lambda e_1, e_1 e_j = e_j"},
      {"a5:k", "0 <= k <= n-2",
       "e_2 e_1 = -e_1, e_2 e_2 = e_2, e_j e_2 = e_j, e_l e_l = e_1"},
      {"a6", "", "e_1 e_1 = e_1 + e_2, e_j e_1 = e_j"},
      {"a7:alpha", "alpha != 0",
       "e_1 e_1 = alpha e_1, e_1 e_j = e_j, e_j e_1 = alpha e_j"},
      {"assocL", "", "e_1 e_j = e_j (L_{e_1} = Id)"},
      {"assocR", "", "e_j e_1 = e_j (R_{e_1} = Id)"},
      {"trivial", "", "all products zero"},
      {"lie24", "", "Lie bracket [e_1, e_j] = e_j"},
  };
  if (as_json) {
    Json arr = Json::array();
    for (const Row& r : rows)
      arr.push_back(Json{{"family", r.name},
                         {"parameters", r.params},
                         {"products", r.products}});
    emit(out, true, "catalog-list", Json{{"dim", dim}, {"families", arr}}, "");
    return 0;
  }
  for (const Row& r : rows) {
    out << r.name;
    if (*r.params) out << "  (" << r.params << ")";
    out << "  " << r.products << "\n";
  }
  return 0;
}

int cmd_catalog_gen(std::ostream& out, bool as_json, const std::string& name,
                    int dim, const std::string& out_path) {
  CatalogId id = CatalogId::parse(name);
  Algebra a = generate(id, dim);
  Json j = algebra_to_json(a);
  write_or_print(out, out_path, j);
  if (!out_path.empty())
    emit(out, as_json, "catalog-gen",
         Json{{"family", id.str()}, {"dim", dim}, {"path", out_path}},
         "wrote " + out_path + " (" + id.str() + ", dim " + std::to_string(dim) +
             ")");
  return 0;
}

int cmd_verify(std::ostream& out, bool as_json, const std::string& path) {
  Algebra a = algebra_from_json(load_json_file(path));
  bool ls = is_left_symmetric(a);
  emit(out, as_json, "verify", Json{{"left_symmetric", ls}, {"dim", a.dim()}},
       std::string("left-symmetric: ") + (ls ? "true" : "false"));
  return ls ? 0 : 1;
}

int cmd_construct(std::ostream& out, bool as_json, const std::string& path,
                  const std::string& inner, const std::string& out_path) {
  if (!inner.empty()) {
    Algebra a = algebra_from_inner_product(parse_vector_arg(inner));
    write_or_print(out, out_path, algebra_to_json(a));
    return 0;
  }
  Json j = load_json_file(path);
  if (looks_like_pair_spec(j)) {
    PairResult r = algebra_from_pair(pair_from_json(j));
    bool ok = r.verdict == PairVerdict::LeftSymmetricAssociative;
    write_or_print(out, out_path, algebra_to_json(r.algebra));
    emit(out, as_json, "construct", Json{{"left_symmetric_associative", ok}},
         std::string("left-symmetric associative: ") + (ok ? "true" : "false"));
    return ok ? 0 : 1;
  }
  if (looks_like_spec(j)) {
    Algebra a = algebra_from_extended(spec_from_json(j));
    write_or_print(out, out_path, algebra_to_json(a));
    return 0;
  }
  throw CliError("construct: file is neither a pair spec nor an extended spec");
}

int cmd_classify(std::ostream& out, bool as_json, const std::string& path) {
  Json j = load_json_file(path);
  if (looks_like_spec(j)) {
    CaseVerdict v = classify_extended(spec_from_json(j));
    Json res{{"case", case_name(v.tag)}};
    std::string plain = "case: " + case_name(v.tag);
    if (v.h_rank) {
      res["h_rank"] = *v.h_rank;
      plain += " (rank h = " + std::to_string(*v.h_rank) + ")";
    }
    if (v.alpha) {
      res["alpha"] = v.alpha->str();
      plain += " alpha = " + v.alpha->str();
    }
    if (v.a1) {
      res["a1"] = v.a1->str();
      plain += " a1 = " + v.a1->str();
    }
    emit(out, as_json, "classify", res, plain);
    return v.tag == ExtCase::NotLeftSymmetric ? 1 : 0;
  }
  Algebra a = algebra_from_json(j);
  auto m = match_catalog(a);
  if (!m) {
    emit(out, as_json, "classify", Json{{"catalog", nullptr}},
         "catalog: unknown");
    return 1;
  }
  std::ostringstream res;
  res << m->residual;
  emit(out, as_json, "classify",
       Json{{"catalog", m->id.str()}, {"witness_residual", m->residual}},
       "catalog: " + m->id.str() + " (witness residual " + res.str() + ")");
  return 0;
}

int cmd_identify(std::ostream& out, bool as_json, const std::string& path) {
  ExtendedSpec spec = spec_from_json(load_json_file(path));
  IdentifyResult r = identify(spec);
  std::ostringstream res;
  res << r.residual;
  emit(out, as_json, "identify",
       Json{{"catalog", r.id.str()},
            {"witness_residual", r.residual},
            {"witness_exact", r.exact}},
       "catalog: " + r.id.str() + " (witness residual " + res.str() + ")");
  return 0;
}

int cmd_iso(std::ostream& out, bool as_json, const std::string& pa,
            const std::string& pb) {
  Algebra a = algebra_from_json(load_json_file(pa));
  Algebra b = algebra_from_json(load_json_file(pb));
  IsoVerdict v = are_isomorphic(a, b);
  switch (v.kind) {
    case IsoVerdict::Kind::Isomorphic:
      emit(out, as_json, "iso",
           Json{{"verdict", "isomorphic"},
                {"witness", matrix_to_json(*v.witness)}},
           "isomorphic (witness verified)");
      return 0;
    case IsoVerdict::Kind::NonIsomorphic:
      emit(out, as_json, "iso",
           Json{{"verdict", "non-isomorphic"}, {"invariant", v.invariant}},
           "non-isomorphic (invariant: " + v.invariant + ")");
      return 1;
    case IsoVerdict::Kind::Unknown:
      emit(out, as_json, "iso", Json{{"verdict", "unknown"}}, "unknown");
      return 1;
  }
  return 2;
}

int cmd_properties(std::ostream& out, bool as_json, const std::string& path) {
  Algebra a = algebra_from_json(load_json_file(path));
  PropertyReport rep = property_report(a);
  Json j = report_to_json(rep);
  if (as_json) {
    emit(out, true, "properties", j, "");
  } else {
    for (auto it = j.begin(); it != j.end(); ++it)
      out << it.key() << ": " << it.value().dump() << "\n";
  }
  return 0;
}

int cmd_rmatrix_verify(std::ostream& out, bool as_json, const std::string& pl,
                       const std::string& pr) {
  LieAlgebra l = lie_from_json(load_json_file(pl));
  Matrix r = matrix_from_json(load_json_file(pr));
  bool ok = is_r_matrix(l, r);
  emit(out, as_json, "rmatrix-verify", Json{{"r_matrix", ok}},
       std::string("classical r-matrix: ") + (ok ? "true" : "false"));
  return ok ? 0 : 1;
}

int cmd_rmatrix_lsa(std::ostream& out, bool as_json, const std::string& pl,
                    const std::string& pr, const std::string& out_path) {
  LieAlgebra l = lie_from_json(load_json_file(pl));
  Matrix r = matrix_from_json(load_json_file(pr));
  if (!is_r_matrix(l, r)) {
    emit(out, as_json, "rmatrix-lsa", Json{{"r_matrix", false}},
         "not a classical r-matrix");
    return 1;
  }
  Algebra a = lsa_from_r_matrix(l, r);
  write_or_print(out, out_path, algebra_to_json(a));
  return 0;
}

int cmd_burgers(std::ostream& out, bool as_json, const std::string& alg_path,
                const std::string& ic_path, int grid, double length, double dt,
                double tmax, int stride, const std::string& out_path) {
  Algebra a = algebra_from_json(load_json_file(alg_path));
  FloatAlgebra fa(a);
  auto ic = ic_from_json(load_json_file(ic_path));
  if (static_cast<int>(ic.size()) != a.dim())
    throw CliError("burgers: initial condition has " +
                   std::to_string(ic.size()) + " components, algebra dim is " +
                   std::to_string(a.dim()));
  FieldState u0 = initial_state(ic, grid, length);
  SimConfig cfg{dt, tmax, stride};
  Trajectory<double> traj = integrate(fa, u0, cfg);
  std::ofstream os(out_path);
  if (!os) throw CliError("cannot write " + out_path);
  write_trajectory_csv(os, traj);
  emit(out, as_json, "burgers",
       Json{{"samples", traj.times.size()},
            {"final_time", traj.times.back()},
            {"path", out_path}},
       "wrote " + out_path + " (" + std::to_string(traj.times.size()) +
           " samples, final t = " + std::to_string(traj.times.back()) + ")");
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact left-symmetric algebra toolkit"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "wrap output as {command, result}");

  int dim = 2;
  std::string name, path, path2, out_path, inner;
  int grid = 128, stride = 1;
  double length = 6.283185307179586, dt = 1e-4, tmax = 0.1;

  auto* list = app.add_subcommand("catalog-list", "list the catalog families");
  list->add_option("--dim", dim, "dimension context");

  auto* gen = app.add_subcommand("catalog-gen", "generate a catalog algebra");
  gen->add_option("family", name, "family id, e.g. a3.1 or a4:5/2")->required();
  gen->add_option("--dim", dim, "dimension (>= 2)")->required();
  gen->add_option("-o,--output", out_path, "output algebra file");

  auto* ver = app.add_subcommand("verify", "check left-symmetry of an algebra file");
  ver->add_option("file", path, "algebra json")->required();

  auto* cons = app.add_subcommand("construct", "build an algebra from a spec");
  cons->add_option("file", path, "pair or extended spec json");
  cons->add_option("--inner-product", inner,
                   "comma-separated vector a: u*v = (u,v)a + (u,a)v");
  cons->add_option("-o,--output", out_path, "output algebra file");

  auto* cls = app.add_subcommand(
      "classify", "classify a spec (construction case) or an algebra (catalog)");
  cls->add_option("file", path, "spec or algebra json")->required();

  auto* ident = app.add_subcommand("identify",
                                   "normalize a spec to its catalog family");
  ident->add_option("file", path, "extended spec json")->required();

  auto* iso = app.add_subcommand("iso", "isomorphism verdict for two algebras");
  iso->add_option("a", path, "first algebra json")->required();
  iso->add_option("b", path2, "second algebra json")->required();

  auto* props = app.add_subcommand("properties", "property report for an algebra");
  props->add_option("file", path, "algebra json")->required();

  auto* rver = app.add_subcommand("rmatrix-verify",
                                  "check the classical r-matrix identity");
  rver->add_option("lie", path, "Lie algebra json")->required();
  rver->add_option("r", path2, "square matrix json")->required();

  auto* rlsa = app.add_subcommand("rmatrix-lsa",
                                  "left-symmetric algebra x*y = [R(x),y]");
  rlsa->add_option("lie", path, "Lie algebra json")->required();
  rlsa->add_option("r", path2, "square matrix json")->required();
  rlsa->add_option("-o,--output", out_path, "output algebra file");

  auto* burg = app.add_subcommand("burgers", "integrate the generalized Burgers equation");
  burg->add_option("--algebra", path, "algebra json")->required();
  burg->add_option("--ic", path2, "initial condition json")->required();
  burg->add_option("--grid", grid, "grid points (>= 8)");
  burg->add_option("--length", length, "domain length (default 2*pi)");
  burg->add_option("--dt", dt, "time step (<= 0.2 dx^2)")->required();
  burg->add_option("--tmax", tmax, "final time")->required();
  burg->add_option("--stride", stride, "output stride in steps");
  burg->add_option("-o,--output", out_path, "output csv")->required();

  std::vector<const char*> argv;
  argv.push_back("lsa");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (list->parsed()) return cmd_catalog_list(out, as_json, dim);
    if (gen->parsed()) return cmd_catalog_gen(out, as_json, name, dim, out_path);
    if (ver->parsed()) return cmd_verify(out, as_json, path);
    if (cons->parsed()) return cmd_construct(out, as_json, path, inner, out_path);
    if (cls->parsed()) return cmd_classify(out, as_json, path);
    if (ident->parsed()) return cmd_identify(out, as_json, path);
    if (iso->parsed()) return cmd_iso(out, as_json, path, path2);
    if (props->parsed()) return cmd_properties(out, as_json, path);
    if (rver->parsed()) return cmd_rmatrix_verify(out, as_json, path, path2);
    if (rlsa->parsed()) return cmd_rmatrix_lsa(out, as_json, path, path2, out_path);
    if (burg->parsed())
      return cmd_burgers(out, as_json, path, path2, grid, length, dt, tmax,
                         stride, out_path);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace lsa
