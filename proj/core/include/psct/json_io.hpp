#pragma once

#include <nlohmann/json.hpp>

#include "psct/catalog.hpp"

namespace psct {

// Objects use nlohmann::json, whose keys are sorted, so output is deterministic.
using Json = nlohmann::json;

// Exact values are strings: "p/q" for rationals, "a+b*sqrt(r)" otherwise.
Json to_json(const Scalar& s);
Json to_json(const Vector& v);
Json to_json(const Matrix& m);
Json to_json(const KForm& f);
Json to_json(const SkewEndo& a);
Json to_json(const AlmostHermitian& J);
Json to_json(const SubalgebraBasis& h);
Json to_json(const PsctCertificate& c);
Json to_json(const Subspace& s);
Json to_json(const FactorReport& r);
Json to_json(const MetricLieAlgebra& L);
Json to_json(const RootDecomp& rd);
Json to_json(const RootSystem& R);
Json to_json(const WellBalancedResult& w);
Json to_json(const GrayHervellaReport& r);
Json to_json(const W1W4Residual& r);
Json to_json(const Fixture& f);

// Parsers throw DomainError on malformed input.
Scalar scalar_from_json(const Json& j);
Vector vector_from_json(const Json& j);
Matrix matrix_from_json(const Json& j);
KForm kform_from_json(const Json& j);
AlmostHermitian almost_hermitian_from_json(const Json& j);
SubalgebraBasis subalgebra_from_json(const Json& j);
MetricLieAlgebra lie_algebra_from_json(const Json& j);

}  // namespace psct
