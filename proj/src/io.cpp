#include "homcheck/io.hpp"

#include <fstream>
#include <sstream>

#include "homcheck/checks.hpp"
#include "json.hpp"

namespace homcheck::io {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& what) {
  throw validation_error(what);
}

json rational_json(const Rational& r) { return r.str(); }

Rational rational_from(const json& j, const std::string& ctx) {
  if (!j.is_string()) bad(ctx + ": rationals must be strings");
  return Rational::from_string(j.get<std::string>());
}

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(rational_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from(const json& j, const std::string& ctx) {
  if (!j.is_array()) bad(ctx + ": expected an array of rows");
  const int rows = static_cast<int>(j.size());
  int cols = -1;
  for (const auto& row : j) {
    if (!row.is_array()) bad(ctx + ": expected an array of rows");
    if (cols < 0)
      cols = static_cast<int>(row.size());
    else if (static_cast<int>(row.size()) != cols)
      bad(ctx + ": ragged rows");
  }
  Matrix m(rows, cols < 0 ? 0 : cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < m.cols(); ++c)
      m(r, c) = rational_from(j[r][c], ctx);
  return m;
}

Matrix square_matrix_from(const json& j, int dim, const std::string& ctx) {
  Matrix m = matrix_from(j, ctx);
  if (m.rows() != dim || m.cols() != dim)
    bad(ctx + ": expected a " + std::to_string(dim) + "x" +
        std::to_string(dim) + " matrix");
  return m;
}

json tensor_json(const Tensor3& t) {
  json out = json::array();
  for (int i = 0; i < t.dim(); ++i) {
    json plane = json::array();
    for (int j = 0; j < t.dim(); ++j) {
      json fiber = json::array();
      for (int k = 0; k < t.dim(); ++k)
        fiber.push_back(rational_json(t(i, j, k)));
      plane.push_back(std::move(fiber));
    }
    out.push_back(std::move(plane));
  }
  return out;
}

Tensor3 tensor_from(const json& j, int dim, const std::string& ctx) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim)
    bad(ctx + ": expected dim x dim x dim structure constants");
  Tensor3 t(dim);
  for (int i = 0; i < dim; ++i) {
    if (!j[i].is_array() || static_cast<int>(j[i].size()) != dim)
      bad(ctx + ": shape mismatch");
    for (int jj = 0; jj < dim; ++jj) {
      if (!j[i][jj].is_array() || static_cast<int>(j[i][jj].size()) != dim)
        bad(ctx + ": shape mismatch");
      for (int k = 0; k < dim; ++k)
        t(i, jj, k) = rational_from(j[i][jj][k], ctx);
    }
  }
  return t;
}

struct KindInfo {
  std::string productA;
  std::string productB;  // empty for single-product kinds
};

KindInfo product_names(Kind k) {
  switch (k) {
    case Kind::hom_associative:
    case Kind::commutative_hom_associative: return {"dot", ""};
    case Kind::hom_lie: return {"bracket", ""};
    case Kind::hom_pre_lie: return {"prelie", ""};
    case Kind::hom_zinbiel: return {"zinbiel", ""};
    case Kind::hom_permutative: return {"perm", ""};
    case Kind::hom_leibniz: return {"leibniz", ""};
  }
  bad("unknown kind");
}

KindInfo product_names(PairKind k) {
  switch (k) {
    case PairKind::hom_poisson: return {"dot", "bracket"};
    case PairKind::hom_pre_poisson: return {"zinbiel", "prelie"};
    case PairKind::hom_dendriform: return {"prec", "succ"};
    case PairKind::dual_hom_pre_poisson: return {"perm", "leibniz"};
  }
  bad("unknown kind");
}

KindInfo product_names(GradedKind k) {
  return k == GradedKind::hom_gerstenhaber ? KindInfo{"dot", "bracket"}
                                           : KindInfo{"zinbiel", "prelie"};
}

const std::map<std::string, Kind> kSingleKinds = {
    {"hom-associative", Kind::hom_associative},
    {"commutative-hom-associative", Kind::commutative_hom_associative},
    {"hom-lie", Kind::hom_lie},
    {"hom-pre-lie", Kind::hom_pre_lie},
    {"hom-zinbiel", Kind::hom_zinbiel},
    {"hom-permutative", Kind::hom_permutative},
    {"hom-leibniz", Kind::hom_leibniz},
};

const std::map<std::string, PairKind> kPairKinds = {
    {"hom-poisson", PairKind::hom_poisson},
    {"hom-pre-poisson", PairKind::hom_pre_poisson},
    {"hom-dendriform", PairKind::hom_dendriform},
    {"dual-hom-pre-poisson", PairKind::dual_hom_pre_poisson},
};

const std::map<std::string, GradedKind> kGradedKinds = {
    {"hom-gerstenhaber", GradedKind::hom_gerstenhaber},
    {"hom-pre-gerstenhaber", GradedKind::hom_pre_gerstenhaber},
};

json algebra_json(const HomAlgebra& a) {
  json j;
  j["format_version"] = "1";
  j["type"] = "algebra";
  j["kind"] = kind_name(a.kind);
  j["dim"] = a.dim();
  j["twist"] = matrix_json(a.twist);
  j["products"][product_names(a.kind).productA] = tensor_json(a.product);
  return j;
}

json algebra_json(const HomTwoProductAlgebra& a) {
  json j;
  j["format_version"] = "1";
  j["type"] = "algebra";
  j["kind"] = kind_name(a.kind);
  j["dim"] = a.dim();
  j["twist"] = matrix_json(a.twist);
  const KindInfo names = product_names(a.kind);
  j["products"][names.productA] = tensor_json(a.productA);
  j["products"][names.productB] = tensor_json(a.productB);
  return j;
}

json algebra_json(const GradedAlgebra& a) {
  json j;
  j["format_version"] = "1";
  j["type"] = "algebra";
  j["kind"] = kind_name(a.kind);
  j["dim"] = a.dim();
  j["degrees"] = a.basis.degrees;
  j["twist"] = matrix_json(a.twist);
  const KindInfo names = product_names(a.kind);
  j["products"][names.productA] = tensor_json(a.product0);
  j["products"][names.productB] = tensor_json(a.productM1);
  return j;
}

int dim_from(const json& j) {
  if (!j.contains("dim") || !j["dim"].is_number_integer() ||
      j["dim"].get<int>() < 0)
    bad("algebra: missing or invalid dim");
  return j["dim"].get<int>();
}

Tensor3 product_from(const json& j, int dim, const std::string& name) {
  if (!j.contains("products") || !j["products"].is_object())
    bad("algebra: missing products");
  if (!j["products"].contains(name))
    bad("algebra: missing product \"" + name + "\"");
  return tensor_from(j["products"][name], dim, "product \"" + name + "\"");
}

void check_product_count(const json& j, std::size_t expected) {
  if (j["products"].size() != expected)
    bad("algebra: unexpected extra products for this kind");
}

std::variant<HomAlgebra, HomTwoProductAlgebra, GradedAlgebra> algebra_from(
    const json& j) {
  if (!j.contains("kind") || !j["kind"].is_string())
    bad("algebra: missing kind");
  const std::string kind = j["kind"].get<std::string>();
  const int dim = dim_from(j);
  Matrix twist = square_matrix_from(j.value("twist", json::array()), dim,
                                    "twist");

  if (j.contains("degrees")) {
    auto it = kGradedKinds.find(kind);
    if (it == kGradedKinds.end())
      bad("algebra: degrees given for ungraded kind \"" + kind + "\"");
    if (!j["degrees"].is_array() || static_cast<int>(j["degrees"].size()) != dim)
      bad("algebra: degrees length must equal dim");
    GradedBasis basis;
    for (const auto& d : j["degrees"]) {
      if (!d.is_number_integer()) bad("algebra: degrees must be integers");
      basis.degrees.push_back(d.get<long>());
    }
    const KindInfo names = product_names(it->second);
    Tensor3 p0 = product_from(j, dim, names.productA);
    Tensor3 pm1 = product_from(j, dim, names.productB);
    check_product_count(j, 2);
    try {
      return GradedAlgebra::make(it->second, std::move(basis), std::move(p0),
                                 std::move(pm1), std::move(twist));
    } catch (const error& e) {
      bad(std::string("algebra: ") + e.what());
    }
  }

  if (auto it = kSingleKinds.find(kind); it != kSingleKinds.end()) {
    Tensor3 p = product_from(j, dim, product_names(it->second).productA);
    check_product_count(j, 1);
    try {
      return HomAlgebra::make(it->second, std::move(p), std::move(twist));
    } catch (const error& e) {
      bad(std::string("algebra: ") + e.what());
    }
  }
  if (auto it = kPairKinds.find(kind); it != kPairKinds.end()) {
    const KindInfo names = product_names(it->second);
    Tensor3 a = product_from(j, dim, names.productA);
    Tensor3 b = product_from(j, dim, names.productB);
    check_product_count(j, 2);
    try {
      return HomTwoProductAlgebra::make(it->second, std::move(a), std::move(b),
                                        std::move(twist));
    } catch (const error& e) {
      bad(std::string("algebra: ") + e.what());
    }
  }
  if (kGradedKinds.count(kind))
    bad("algebra: graded kind \"" + kind + "\" needs a degrees array");
  bad("algebra: unknown kind \"" + kind + "\"");
}

json actions_json(const ActionMap& a) {
  json out = json::array();
  for (const auto& m : a) out.push_back(matrix_json(m));
  return out;
}

ActionMap actions_from(const json& j, int dim_a, int dim_v,
                       const std::string& ctx) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim_a)
    bad(ctx + ": expected one matrix per algebra basis element");
  ActionMap out;
  for (int i = 0; i < dim_a; ++i) {
    Matrix m = matrix_from(j[i], ctx);
    if (m.rows() != dim_v || m.cols() != dim_v)
      bad(ctx + ": action matrices must be carrier_dim x carrier_dim");
    out.push_back(std::move(m));
  }
  return out;
}

json rep_json(const Representation& r) {
  json j;
  j["format_version"] = "1";
  j["type"] = "representation";
  j["rep_kind"] = kind_name(r.algebra.kind);
  j["algebra"] = algebra_json(r.algebra);
  j["carrier_dim"] = r.carrier_dim();
  j["beta"] = matrix_json(r.beta);
  j["actions"][r.algebra.kind == Kind::hom_lie ? "rho" : "mu"] =
      actions_json(r.action);
  return j;
}

json rep_json(const PoissonRepresentation& r) {
  json j;
  j["format_version"] = "1";
  j["type"] = "representation";
  j["rep_kind"] = "hom-poisson";
  j["algebra"] = algebra_json(r.algebra);
  j["carrier_dim"] = r.carrier_dim();
  j["beta"] = matrix_json(r.beta);
  j["actions"]["mu"] = actions_json(r.mu);
  j["actions"]["rho"] = actions_json(r.rho);
  return j;
}

std::variant<Representation, PoissonRepresentation> rep_from(const json& j) {
  if (!j.contains("rep_kind") || !j["rep_kind"].is_string())
    bad("representation: missing rep_kind");
  if (!j.contains("algebra")) bad("representation: missing algebra");
  if (!j.contains("carrier_dim") || !j["carrier_dim"].is_number_integer())
    bad("representation: missing carrier_dim");
  const int dim_v = j["carrier_dim"].get<int>();
  Matrix beta = square_matrix_from(j.value("beta", json::array()), dim_v,
                                   "beta");
  if (!j.contains("actions") || !j["actions"].is_object())
    bad("representation: missing actions");
  const std::string rk = j["rep_kind"].get<std::string>();
  auto algebra = algebra_from(j["algebra"]);

  if (rk == "hom-poisson") {
    auto* pa = std::get_if<HomTwoProductAlgebra>(&algebra);
    if (!pa || pa->kind != PairKind::hom_poisson)
      bad("representation: algebra must be hom-poisson");
    ActionMap mu = actions_from(j["actions"].value("mu", json()), pa->dim(),
                                dim_v, "actions.mu");
    ActionMap rho = actions_from(j["actions"].value("rho", json()), pa->dim(),
                                 dim_v, "actions.rho");
    return PoissonRepresentation::make(std::move(*pa), std::move(beta),
                                       std::move(rho), std::move(mu));
  }
  auto* sa = std::get_if<HomAlgebra>(&algebra);
  if (!sa) bad("representation: algebra kind does not match rep_kind");
  const bool lie = rk == "hom-lie";
  if (!lie && rk != "commutative-hom-associative")
    bad("representation: unknown rep_kind \"" + rk + "\"");
  if (kind_name(sa->kind) != rk)
    bad("representation: algebra kind does not match rep_kind");
  ActionMap act = actions_from(j["actions"].value(lie ? "rho" : "mu", json()),
                               sa->dim(), dim_v,
                               lie ? "actions.rho" : "actions.mu");
  return Representation::make(std::move(*sa), std::move(beta), std::move(act));
}

json value_json(const DocumentValue& value) {
  return std::visit(
      [](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, HomAlgebra> ||
                      std::is_same_v<T, HomTwoProductAlgebra> ||
                      std::is_same_v<T, GradedAlgebra>) {
          return algebra_json(v);
        } else if constexpr (std::is_same_v<T, Representation> ||
                             std::is_same_v<T, PoissonRepresentation>) {
          return rep_json(v);
        } else if constexpr (std::is_same_v<T, OperatorDocument>) {
          json j;
          j["format_version"] = "1";
          j["type"] = "o-operator";
          j["representation"] = std::visit(
              [](const auto& r) { return rep_json(r); }, v.rep);
          j["matrix"] = matrix_json(v.matrix);
          return j;
        } else if constexpr (std::is_same_v<T, OperatorListDocument>) {
          json j;
          j["format_version"] = "1";
          j["type"] = "o-operator-list";
          j["representation"] = std::visit(
              [](const auto& r) { return rep_json(r); }, v.rep);
          json ops = json::array();
          for (const auto& m : v.operators) ops.push_back(matrix_json(m));
          j["operators"] = std::move(ops);
          return j;
        } else if constexpr (std::is_same_v<T, AverageOperatorDocument>) {
          json j;
          j["format_version"] = "1";
          j["type"] = "average-operator";
          j["algebra"] = std::visit(
              [](const auto& a) { return algebra_json(a); }, v.algebra);
          j["matrix"] = matrix_json(v.matrix);
          return j;
        } else if constexpr (std::is_same_v<T, CocycleDocument>) {
          json j;
          j["format_version"] = "1";
          j["type"] = "two-cocycle";
          j["algebra"] = algebra_json(v.algebra);
          j["omega"] = matrix_json(v.cocycle.omega);
          return j;
        } else {
          static_assert(std::is_same_v<T, TruncatedDeformation>);
          json j;
          j["format_version"] = "1";
          j["type"] = "deformation";
          j["base"] = algebra_json(v.base);
          j["order"] = v.order;
          json prec = json::array(), succ = json::array();
          for (int i = 1; i <= v.order; ++i) {
            prec.push_back(tensor_json(v.prec[static_cast<std::size_t>(i)]));
            succ.push_back(tensor_json(v.succ[static_cast<std::size_t>(i)]));
          }
          j["prec"] = std::move(prec);
          j["succ"] = std::move(succ);
          return j;
        }
      },
      value);
}

DocumentValue value_from(const json& j) {
  if (!j.is_object()) bad("document: expected a JSON object");
  const std::string type = j.value("type", "");
  if (type == "algebra") {
    auto a = algebra_from(j);
    return std::visit([](auto&& v) -> DocumentValue { return std::move(v); },
                      std::move(a));
  }
  if (type == "representation") {
    auto r = rep_from(j);
    return std::visit([](auto&& v) -> DocumentValue { return std::move(v); },
                      std::move(r));
  }
  if (type == "o-operator") {
    if (!j.contains("representation")) bad("o-operator: missing representation");
    auto rep = rep_from(j["representation"]);
    Matrix m = matrix_from(j.value("matrix", json::array()), "matrix");
    const int dim_a = std::visit(
        [](const auto& r) { return r.algebra.dim(); }, rep);
    const int dim_v = std::visit(
        [](const auto& r) { return r.carrier_dim(); }, rep);
    if (m.rows() != dim_a || m.cols() != dim_v)
      bad("o-operator: matrix must be dim_A x dim_V");
    return OperatorDocument{std::move(rep), std::move(m)};
  }
  if (type == "o-operator-list") {
    if (!j.contains("representation"))
      bad("o-operator-list: missing representation");
    auto rep = rep_from(j["representation"]);
    std::vector<Matrix> ops;
    for (const auto& m : j.value("operators", json::array()))
      ops.push_back(matrix_from(m, "operators"));
    return OperatorListDocument{std::move(rep), std::move(ops)};
  }
  if (type == "average-operator") {
    if (!j.contains("algebra")) bad("average-operator: missing algebra");
    auto alg = algebra_from(j["algebra"]);
    Matrix m = matrix_from(j.value("matrix", json::array()), "matrix");
    if (std::holds_alternative<GradedAlgebra>(alg))
      bad("average-operator: graded algebras are not supported here");
    const int dim = std::visit([](const auto& a) { return a.dim(); }, alg);
    if (m.rows() != dim || m.cols() != dim)
      bad("average-operator: matrix must be dim x dim");
    if (std::holds_alternative<HomAlgebra>(alg))
      return AverageOperatorDocument{std::get<HomAlgebra>(std::move(alg)),
                                     std::move(m)};
    return AverageOperatorDocument{
        std::get<HomTwoProductAlgebra>(std::move(alg)), std::move(m)};
  }
  if (type == "two-cocycle") {
    if (!j.contains("algebra")) bad("two-cocycle: missing algebra");
    auto alg = algebra_from(j["algebra"]);
    auto* pa = std::get_if<HomTwoProductAlgebra>(&alg);
    if (!pa || pa->kind != PairKind::hom_poisson)
      bad("two-cocycle: algebra must be hom-poisson");
    Matrix m = square_matrix_from(j.value("omega", json::array()), pa->dim(),
                                  "omega");
    try {
      return CocycleDocument{std::move(*pa), TwoCocycle::make(std::move(m))};
    } catch (const error& e) {
      bad(std::string("two-cocycle: ") + e.what());
    }
  }
  if (type == "deformation") {
    if (!j.contains("base")) bad("deformation: missing base");
    auto base = algebra_from(j["base"]);
    auto* ba = std::get_if<HomAlgebra>(&base);
    if (!ba || ba->kind != Kind::hom_zinbiel)
      bad("deformation: base must be hom-zinbiel");
    const int order = j.value("order", 0);
    if (order < 1) bad("deformation: order must be >= 1");
    auto tensors = [&](const char* key) {
      std::vector<Tensor3> out;
      const json arr = j.value(key, json::array());
      if (static_cast<int>(arr.size()) != order)
        bad(std::string("deformation: ") + key + " needs `order` tensors");
      for (const auto& t : arr)
        out.push_back(tensor_from(t, ba->dim(), key));
      return out;
    };
    try {
      return TruncatedDeformation::make(std::move(*ba), tensors("prec"),
                                        tensors("succ"));
    } catch (const error& e) {
      bad(std::string("deformation: ") + e.what());
    }
  }
  bad("document: unknown type \"" + type + "\"");
}

}  // namespace

Document parse_document(const std::string& bytes) {
  json j;
  try {
    j = json::parse(bytes);
  } catch (const json::exception& e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
  Document doc{value_from(j), {}};
  if (j.contains("metadata")) {
    if (!j["metadata"].is_object()) bad("metadata must be an object");
    for (const auto& [k, v] : j["metadata"].items()) {
      if (!v.is_string()) bad("metadata values must be strings");
      doc.metadata[k] = v.get<std::string>();
    }
  }
  return doc;
}

std::string serialize_document(const Document& doc) {
  json j = value_json(doc.value);
  if (!doc.metadata.empty()) {
    json meta;
    for (const auto& [k, v] : doc.metadata) meta[k] = v;
    j["metadata"] = std::move(meta);
  }
  return j.dump(2) + "\n";
}

Document load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) bad("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_document(ss.str());
  } catch (const validation_error& e) {
    bad(path + ": " + e.what());
  }
}

void write_file(const std::string& path, const Document& doc) {
  std::ofstream out(path, std::ios::binary);
  if (!out) bad("cannot write " + path);
  out << serialize_document(doc);
  if (!out) bad("write failed: " + path);
}

void validate_document(const Document& doc) {
  const CheckOptions firstOnly{true, false};
  CheckReport r;
  if (const auto* a = std::get_if<HomAlgebra>(&doc.value))
    r = check_by_kind(*a, firstOnly);
  else if (const auto* a = std::get_if<HomTwoProductAlgebra>(&doc.value))
    r = check_by_kind(*a, firstOnly);
  else if (const auto* g = std::get_if<GradedAlgebra>(&doc.value))
    r = g->kind == GradedKind::hom_gerstenhaber
            ? check_hom_gerstenhaber(*g, firstOnly)
            : check_hom_pre_gerstenhaber(*g, firstOnly);
  if (!r.passed())
    throw precondition_error("refusing to write a failing document: " +
                             r.first().str());
}

void write_validated(const std::string& path, const Document& doc) {
  validate_document(doc);
  write_file(path, doc);
}

std::string report_to_json(const CheckReport& r) {
  json j;
  j["passed"] = r.passed();
  json vs = json::array();
  for (const auto& v : r.violations()) {
    json vj;
    vj["identity"] = v.identity;
    json at = json::array();
    for (int i : v.where) at.push_back(i + 1);
    vj["at"] = std::move(at);
    json disc = json::array();
    for (int i = 0; i < v.discrepancy.dim(); ++i)
      disc.push_back(v.discrepancy[i].str());
    vj["discrepancy"] = std::move(disc);
    vs.push_back(std::move(vj));
  }
  j["violations"] = std::move(vs);
  return j.dump(2) + "\n";
}

Matrix parse_matrix_file(const std::string& bytes) {
  json j;
  try {
    j = json::parse(bytes);
  } catch (const json::exception& e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
  if (j.is_object() && j.contains("matrix"))
    return matrix_from(j["matrix"], "matrix");
  return matrix_from(j, "matrix");
}

}  // namespace homcheck::io
