#pragma once

// Machine-readable reports shared by the command line tool and the
// acceptance runner. Rationals are always strings.

#include "liegeo/construct.hpp"
#include "liegeo/io.hpp"
#include "liegeo/orthogonal.hpp"

#include "json.hpp"

namespace liegeo {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Json to_json(const Vector& v);
Json to_json(const Matrix& m);
Json to_json(const Polynomial& p);
Json to_json(const Signature& s);
Json to_json(const GridCertificate& c);
Json to_json(const IdentityViolation& v);

Json algebra_json(const LieAlgebra& L);
Json info_report(const LieAlgebra& L);
Json validate_report(const AlgebraFile& file, const std::vector<IdentityViolation>& violations);
/// contact_scalar, is_contact and the Reeb vector when contact.
Json contact_check_report(const LieAlgebra& L, const Covector& eta);
Json decision_report(const DecisionOutcome& outcome);
Json biinvariant_report(const BiinvariantReport& rep);
/// flat, Einstein constant, Ricci tensor and signature, basis-plane
/// sectional curvatures (definite metrics only), locally symmetric.
/// With a tolerance the Einstein entry also carries the residual fit.
Json curvature_report(const LieAlgebra& L, const Metric& g, std::optional<double> einstein_tolerance = std::nullopt);
Json heintze_report(const HeintzeReport& rep);
Json kcontact_report(const LieAlgebra& L, const Metric& g, const Covector& eta);
Json einstein_extension_report(const EinsteinContactResult& res);

}  // namespace liegeo
