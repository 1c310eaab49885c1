#include "lsa/io.hpp"

#include <fstream>
#include <set>

namespace lsa {

Json scalar_to_json(const Scalar& s) {
  return Json{{"re", s.re().get_str()}, {"im", s.im().get_str()}};
}

Scalar scalar_from_json(const Json& j) {
  if (j.is_number_integer())
    return Scalar(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return Scalar::parse(j.get<std::string>());
  if (j.is_object()) {
    Scalar re = j.contains("re") ? Scalar::parse(j.at("re").get<std::string>())
                                 : Scalar(0);
    Scalar im = j.contains("im") ? Scalar::parse(j.at("im").get<std::string>())
                                 : Scalar(0);
    if (!re.is_real() || !im.is_real())
      throw std::invalid_argument("scalar: re/im fields must be rational");
    return Scalar(re.re(), im.re());
  }
  throw std::invalid_argument("scalar: expected object, string or integer");
}

Json algebra_to_json(const Algebra& a) {
  int n = a.dim();
  Json structure = Json::array();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (!a.c(i, j, k).is_zero())
          structure.push_back(
              Json::array({i + 1, j + 1, k + 1, scalar_to_json(a.c(i, j, k))}));
  return Json{{"dim", n}, {"structure", std::move(structure)}};
}

namespace {

void fill_tensor_from_json(const Json& j, int& n,
                           std::vector<Scalar>& tensor) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("structure"))
    throw std::invalid_argument("algebra: need {dim, structure}");
  n = j.at("dim").get<int>();
  if (n < 1) throw std::invalid_argument("algebra: dim must be >= 1");
  tensor.assign(static_cast<size_t>(n) * n * n, Scalar(0));
  std::set<std::tuple<int, int, int>> seen;
  for (const Json& e : j.at("structure")) {
    if (!e.is_array() || e.size() != 4)
      throw std::invalid_argument("algebra: structure entries are [i,j,k,scalar]");
    int i = e[0].get<int>(), jj = e[1].get<int>(), k = e[2].get<int>();
    if (i < 1 || i > n || jj < 1 || jj > n || k < 1 || k > n)
      throw std::invalid_argument("algebra: index out of range");
    if (!seen.insert({i, jj, k}).second)
      throw std::invalid_argument("algebra: duplicate (i,j,k) entry");
    tensor[(static_cast<size_t>(i - 1) * n + (jj - 1)) * n + (k - 1)] =
        scalar_from_json(e[3]);
  }
}

}  // namespace

Algebra algebra_from_json(const Json& j) {
  int n = 0;
  std::vector<Scalar> tensor;
  fill_tensor_from_json(j, n, tensor);
  Algebra a(n);
  size_t p = 0;
  for (int i = 0; i < n; ++i)
    for (int jj = 0; jj < n; ++jj)
      for (int k = 0; k < n; ++k) a.set_c(i, jj, k, tensor[p++]);
  return a;
}

LieAlgebra lie_from_json(const Json& j) {
  int n = 0;
  std::vector<Scalar> tensor;
  fill_tensor_from_json(j, n, tensor);
  return LieAlgebra(n, std::move(tensor));
}

namespace {

Json functional_to_json(const LinearFunctional& f) {
  Json arr = Json::array();
  for (int i = 0; i < f.dim(); ++i) arr.push_back(scalar_to_json(f[i]));
  return arr;
}

Json vector_to_json(const Vector& v) {
  Json arr = Json::array();
  for (int i = 0; i < v.dim(); ++i) arr.push_back(scalar_to_json(v[i]));
  return arr;
}

std::vector<Scalar> scalar_list(const Json& j, int n, const char* what) {
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    throw std::invalid_argument(std::string("spec: ") + what + " must list " +
                                std::to_string(n) + " scalars");
  std::vector<Scalar> out;
  for (const Json& e : j) out.push_back(scalar_from_json(e));
  return out;
}

}  // namespace

Json spec_to_json(const ExtendedSpec& s) {
  int n = s.dim();
  Json h = Json::array();
  for (int i = 0; i < n; ++i) {
    Json row = Json::array();
    for (int j = 0; j < n; ++j) row.push_back(scalar_to_json(s.h.at(i, j)));
    h.push_back(std::move(row));
  }
  return Json{{"dim", n},
              {"f", functional_to_json(s.f)},
              {"g", functional_to_json(s.g)},
              {"h", std::move(h)},
              {"c", vector_to_json(s.c)}};
}

ExtendedSpec spec_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dim"))
    throw std::invalid_argument("spec: need {dim, f, g, h, c}");
  int n = j.at("dim").get<int>();
  if (n < 2) throw std::invalid_argument("spec: dim must be >= 2");
  LinearFunctional f(scalar_list(j.at("f"), n, "f"));
  LinearFunctional g(scalar_list(j.at("g"), n, "g"));
  const Json& hj = j.at("h");
  if (!hj.is_array() || static_cast<int>(hj.size()) != n)
    throw std::invalid_argument("spec: h must be an n x n grid");
  Matrix gram(n, n);
  for (int r = 0; r < n; ++r) {
    auto row = scalar_list(hj[r], n, "h row");
    for (int c = 0; c < n; ++c) gram.at(r, c) = row[c];
  }
  Vector c(scalar_list(j.at("c"), n, "c"));
  return ExtendedSpec(std::move(f), std::move(g), SymBilinearForm(gram),
                      std::move(c));
}

bool looks_like_pair_spec(const Json& j) {
  return j.is_object() && j.contains("f") && j.contains("g") &&
         !j.contains("h") && !j.contains("c");
}

bool looks_like_spec(const Json& j) {
  return j.is_object() && j.contains("f") && j.contains("g") &&
         j.contains("h") && j.contains("c");
}

PairSpec pair_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dim"))
    throw std::invalid_argument("pair spec: need {dim, f, g}");
  int n = j.at("dim").get<int>();
  if (n < 2) throw std::invalid_argument("pair spec: dim must be >= 2");
  return PairSpec(LinearFunctional(scalar_list(j.at("f"), n, "f")),
                  LinearFunctional(scalar_list(j.at("g"), n, "g")));
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return Json{{"dim", m.rows()}, {"entries", std::move(rows)}};
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("entries"))
    throw std::invalid_argument("matrix: need {dim, entries}");
  int n = j.at("dim").get<int>();
  const Json& e = j.at("entries");
  if (!e.is_array() || static_cast<int>(e.size()) != n)
    throw std::invalid_argument("matrix: entries must be n rows");
  Matrix m(n, n);
  for (int r = 0; r < n; ++r) {
    auto row = scalar_list(e[r], n, "matrix row");
    for (int c = 0; c < n; ++c) m.at(r, c) = row[c];
  }
  return m;
}

std::vector<std::vector<WaveTerm>> ic_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("components"))
    throw std::invalid_argument("initial condition: need {components}");
  std::vector<std::vector<WaveTerm>> out;
  for (const Json& comp : j.at("components")) {
    std::vector<WaveTerm> terms;
    for (const Json& t : comp) {
      WaveTerm w;
      std::string kind = t.at("type").get<std::string>();
      if (kind == "sin")
        w.kind = WaveTerm::Kind::Sin;
      else if (kind == "cos")
        w.kind = WaveTerm::Kind::Cos;
      else if (kind == "const")
        w.kind = WaveTerm::Kind::Const;
      else
        throw std::invalid_argument("initial condition: type must be sin/cos/const");
      w.amplitude = t.value("amplitude", 0.0);
      w.wavenumber = t.value("wavenumber", 0.0);
      w.phase = t.value("phase", 0.0);
      terms.push_back(w);
    }
    out.push_back(std::move(terms));
  }
  if (out.empty()) throw std::invalid_argument("initial condition: no components");
  return out;
}

Json report_to_json(const PropertyReport& rep) {
  return Json{{"commutative", rep.commutative},
              {"associative", rep.associative},
              {"left_symmetric", rep.left_symmetric},
              {"novikov", rep.novikov},
              {"bisymmetric", rep.bisymmetric},
              {"transitive", rep.transitive},
              {"transitive_mode", rep.transitive_mode == TransitivityMode::ExactGrid
                                      ? "exact-grid"
                                      : "randomized"},
              {"interior_derivation", rep.interior_derivation},
              {"simple", rep.simple}};
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  Json j;
  in >> j;
  return j;
}

void save_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace lsa
