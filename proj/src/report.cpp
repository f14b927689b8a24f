#include "liegeo/report.hpp"

#include "liegeo/structure.hpp"

namespace liegeo {

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const Vector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

Json to_json(const Matrix& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
  return a;
}

Json to_json(const Polynomial& p) {
  return Json{{"ascending", to_json(p.coefficients())}, {"text", p.to_string()}};
}

Json to_json(const Signature& s) {
  return Json{{"positive", s.positive}, {"negative", s.negative}, {"zero", s.zero}};
}

Json to_json(const GridCertificate& c) {
  return Json{{"coordinates", c.coordinates},
              {"points_per_coordinate", c.points_per_coordinate},
              {"degree_bound", c.degree_bound},
              {"evaluations", c.evaluations}};
}

Json to_json(const IdentityViolation& v) {
  return Json{{"kind", v.kind == IdentityViolation::Kind::Jacobi ? "jacobi" : "antisymmetry"},
              {"indices", {v.i + 1, v.j + 1, v.k + 1}},
              {"text", v.describe()}};
}

Json algebra_json(const LieAlgebra& L) {
  Json brackets = Json::array();
  for (const auto& e : L.entries()) brackets.push_back({e.i + 1, e.j + 1, e.k + 1, to_string(e.coeff)});
  return Json{{"name", L.name()}, {"dim", L.dim()}, {"basis", L.basis_names()}, {"brackets", brackets}};
}

Json info_report(const LieAlgebra& L) {
  Json j{{"name", L.name()}, {"dim", L.dim()}};
  j["solvable"] = is_solvable(L);
  j["nilpotent"] = is_nilpotent(L);
  j["semisimple"] = is_semisimple(L);
  j["unimodular"] = is_unimodular(L);
  j["center_dim"] = center(L).dim();
  j["derived_ideal_codim"] = derived_ideal(L).codim();
  j["radical_dim"] = radical(L).dim();
  return j;
}

Json validate_report(const AlgebraFile& file, const std::vector<IdentityViolation>& violations) {
  Json v = Json::array();
  for (const auto& x : violations) v.push_back(to_json(x));
  return Json{{"name", file.name}, {"dim", file.dim}, {"valid", violations.empty()}, {"violations", v}};
}

Json contact_check_report(const LieAlgebra& L, const Covector& eta) {
  Json j{{"form", to_json(eta)}};
  if (L.dim() % 2 == 1) {
    const Rational s = contact_scalar(L, eta);
    j["contact_scalar"] = to_json(s);
    j["contact"] = sgn(s) != 0;
    if (sgn(s) != 0) j["reeb"] = to_json(reeb(L, eta));
  } else {
    j["contact"] = false;
    j["note"] = "even dimension";
  }
  return j;
}

Json decision_report(const DecisionOutcome& o) {
  Json j{{"verdict", o.verdict == Verdict::Exists ? "EXISTS" : "NONE"}};
  if (o.witness) {
    j["witness"] = to_json(*o.witness);
    j["witness_value"] = to_json(*o.witness_value);
    j["witness_source"] = o.witness_source;
  }
  if (o.certificate) j["certificate"] = to_json(*o.certificate);
  if (!o.note.empty()) j["note"] = o.note;
  return j;
}

Json biinvariant_report(const BiinvariantReport& rep) {
  Json j{{"verdict", rep.found() ? "EXISTS" : "NONE"}, {"invariant_space_dim", rep.invariant_space_dim}};
  if (rep.nondegenerate_witness) {
    j["witness"] = to_json(*rep.nondegenerate_witness);
    j["signature"] = to_json(*rep.signature);
  }
  if (rep.certificate) {
    Json c = Json::object();
    if (rep.certificate->common_radical_vector) c["common_radical_vector"] = to_json(*rep.certificate->common_radical_vector);
    if (rep.certificate->grid) c["grid"] = to_json(*rep.certificate->grid);
    j["certificate"] = c;
  }
  return j;
}

Json curvature_report(const LieAlgebra& L, const Metric& g, std::optional<double> einstein_tolerance) {
  const CurvatureTensor R = curvature_tensor(L, g);
  const Matrix ric = ricci(R);
  Json j{{"metric", to_json(g.matrix())}, {"riemannian", g.riemannian()}};
  j["flat"] = R.is_zero();
  const auto lambda = is_einstein(L, g);
  j["einstein"] = lambda.has_value();
  j["einstein_lambda"] = lambda ? to_json(*lambda) : Json(nullptr);
  if (einstein_tolerance) {
    const EinsteinFit fit = einstein_fit(L, g);
    j["einstein_tolerance"] = *einstein_tolerance;
    j["einstein_fit"] = {{"lambda", to_json(fit.lambda)},
                         {"residual", to_json(fit.residual)},
                         {"within_tolerance", fit.residual.get_d() <= *einstein_tolerance}};
  }
  j["ricci"] = to_json(ric);
  j["ricci_signature"] = to_json(symmetric_signature(ric));
  j["scalar_curvature"] = to_json((g.inverse() * ric).trace());
  if (g.riemannian()) {
    Json planes = Json::array();
    for (std::size_t a = 0; a < L.dim(); ++a)
      for (std::size_t b = a + 1; b < L.dim(); ++b)
        planes.push_back({{"plane", {a + 1, b + 1}},
                          {"K", to_json(sectional(R, g, unit_vector(L.dim(), a), unit_vector(L.dim(), b)))}});
    j["sectional"] = planes;
  }
  j["locally_symmetric"] = is_locally_symmetric(L, g);
  return j;
}

Json heintze_report(const HeintzeReport& rep) {
  Json j{{"passes", rep.passes}, {"solvable", rep.solvable}, {"derived_ideal_codim", rep.derived_codim}};
  if (rep.witness) j["witness"] = to_json(*rep.witness);
  if (rep.char_poly) j["char_poly"] = to_json(*rep.char_poly);
  j["samples_tried"] = rep.samples_tried;
  j["budget"] = rep.budget;
  if (!rep.reason.empty()) j["reason"] = rep.reason;
  return j;
}

Json kcontact_report(const LieAlgebra& L, const Metric& g, const Covector& eta) {
  Json j{{"form", to_json(eta)}};
  if (L.dim() % 2 == 0 || !is_contact(L, eta)) {
    j["contact"] = false;
    j["contact_metric"] = false;
    j["k_contact"] = false;
    return j;
  }
  j["contact"] = true;
  const Matrix phi = solve_phi(L, g, eta);
  const Vector xi = reeb(L, eta);
  j["phi"] = to_json(phi);
  j["reeb"] = to_json(xi);
  j["contact_metric"] = contact_metric_check(L, g, eta, phi);
  j["k_contact"] = is_K_contact(L, g, eta);
  j["ricci_reeb"] = to_json(dot(xi, ricci(L, g) * xi));
  return j;
}

Json einstein_extension_report(const EinsteinContactResult& res) {
  Json j{{"algebra", algebra_json(res.algebra)}, {"metric", to_json(res.metric.matrix())}};
  j["einstein_found"] = res.einstein_found;
  j["mode"] = res.mode;
  j["t"] = res.t ? to_json(*res.t) : Json(nullptr);
  j["t_approx"] = res.t ? Json(res.t->get_d()) : Json(nullptr);
  j["lambda"] = res.lambda ? to_json(*res.lambda) : Json(nullptr);
  j["residual"] = to_json(res.residual);
  j["residual_approx"] = res.residual_approx;
  j["scale_polynomial"] = to_json(res.scale_polynomial);
  j["witness"] = res.witness ? to_json(*res.witness) : Json(nullptr);
  j["witness_value"] = res.witness_value ? to_json(*res.witness_value) : Json(nullptr);
  if (!res.reason.empty()) j["reason"] = res.reason;
  return j;
}

}  // namespace liegeo
