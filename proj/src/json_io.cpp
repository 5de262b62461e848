#include "json_io.hpp"

namespace ceswit {

json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2)
    throw std::invalid_argument("complex scalar must be [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

json vec_to_json(const CVec& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v(i)));
  return out;
}

CVec vec_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("vector must be a JSON array");
  CVec v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i)
    v(static_cast<Eigen::Index>(i)) = complex_from_json(j[i]);
  return v;
}

json mat_to_json(const CMat& a) {
  json data = json::array();
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      data.push_back(complex_to_json(a(i, j)));
  return json{{"rows", a.rows()}, {"cols", a.cols()}, {"data", data}};
}

CMat mat_from_json(const json& j) {
  const auto rows = j.at("rows").get<Eigen::Index>();
  const auto cols = j.at("cols").get<Eigen::Index>();
  const json& data = j.at("data");
  if (!data.is_array() || static_cast<Eigen::Index>(data.size()) != rows * cols)
    throw std::invalid_argument("matrix data has wrong length");
  CMat a(rows, cols);
  Eigen::Index k = 0;
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index jj = 0; jj < cols; ++jj)
      a(i, jj) = complex_from_json(data[static_cast<std::size_t>(k++)]);
  return a;
}

json subspace_to_json(const Subspace& s) {
  json basis = json::array();
  for (const CVec& b : s.basis()) basis.push_back(vec_to_json(b));
  return json{{"m", s.m()}, {"n", s.n()}, {"basis", basis}};
}

Subspace subspace_from_json(const json& j, const ToleranceConfig& tol) {
  const int m = j.at("m").get<int>();
  const int n = j.at("n").get<int>();
  std::vector<CVec> basis;
  for (const json& b : j.at("basis")) basis.push_back(vec_from_json(b));
  // Accept any spanning set; orthonormality is re-established when needed.
  return make_subspace(m, n, basis, tol);
}

json family_spec_to_json(const FamilySpec& f) {
  json out{{"kind", family_kind_name(f.kind)}, {"m", f.m}, {"n", f.n}};
  if (f.a_tilde) out["a_tilde"] = mat_to_json(*f.a_tilde);
  return out;
}

FamilySpec family_spec_from_json(const json& j) {
  FamilySpec f;
  f.kind = family_kind_from_name(j.at("kind").get<std::string>());
  f.m = j.at("m").get<int>();
  f.n = j.at("n").get<int>();
  if (j.contains("a_tilde")) f.a_tilde = mat_from_json(j["a_tilde"]);
  f.validate();
  return f;
}

json ces_certificate_to_json(const CesCertificate& c) {
  json out{{"is_ces", c.is_ces}, {"best_product_overlap", c.best_product_overlap}};
  if (c.witness) {
    out["witness"] = json{{"e", vec_to_json(c.witness->first)},
                          {"f", vec_to_json(c.witness->second)}};
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

json product_vector_to_json(const ProductVector& p) {
  return json{{"e", vec_to_json(p.e)},
              {"f", vec_to_json(p.f)},
              {"class", solution_class_name(p.cls)},
              {"residual", p.residual}};
}

json span_report_to_json(const SpanReport& r) {
  json kernel = json::array();
  for (const CVec& k : r.kernel_basis) kernel.push_back(vec_to_json(k));
  json out{{"span_dim", r.span_dim},
           {"kernel", kernel},
           {"samples_used", r.samples_used},
           {"sufficient", r.sufficient}};
  out["kernel_match"] = r.kernel_match ? json(*r.kernel_match) : json(nullptr);
  return out;
}

json witness_pair_to_json(const WitnessPair& w) {
  json lambdas = json::array();
  for (Eigen::Index i = 0; i < w.lambdas.size(); ++i) lambdas.push_back(w.lambdas(i));
  return json{{"subspace", subspace_to_json(w.v)},
              {"lambdas", lambdas},
              {"Q", mat_to_json(w.q)},
              {"W", mat_to_json(w.w)},
              {"min_eig_W", w.min_eig_w}};
}

json optimality_report_to_json(const OptimalityReport& r) {
  json kernel = json::array();
  for (const CVec& k : r.kernel) kernel.push_back(vec_to_json(k));
  json cells = json::array();
  for (const auto& c : r.cells) {
    json cell{{"P", c.p_desc},
              {"eps", c.eps},
              {"value", c.value},
              {"strategy", c.strategy},
              {"negative", c.negative},
              {"u", vec_to_json(c.u)},
              {"v_conj", vec_to_json(c.v_conj)}};
    cell["closed_form"] = c.closed_form ? json(*c.closed_form) : json(nullptr);
    cells.push_back(std::move(cell));
  }
  return json{{"kernel", kernel},
              {"cells", cells},
              {"all_negative", r.all_negative},
              {"kernel_trivial", r.kernel_trivial},
              {"note", r.note}};
}

json suite_report_to_json(const SuiteReport& r) {
  json criteria = json::array();
  for (const auto& c : r.criteria)
    criteria.push_back(json{{"id", c.id},
                            {"name", c.name},
                            {"pass", c.pass},
                            {"detail", c.detail}});
  return json{{"seed", r.seed}, {"criteria", criteria}, {"all_pass", r.all_pass}};
}

}  // namespace ceswit
