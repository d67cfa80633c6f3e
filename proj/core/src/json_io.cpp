#include "psct/json_io.hpp"

#include <set>

namespace psct {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw DomainError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw DomainError(std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

Json optional_triple(const std::optional<std::array<int, 3>>& t) {
  if (!t) return nullptr;
  return Json::array({(*t)[0], (*t)[1], (*t)[2]});
}

}  // namespace

Json to_json(const Scalar& s) { return s.str(); }

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (const Scalar& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

Json to_json(const KForm& f) {
  Json terms = Json::array();
  for (const auto& [m, c] : f.terms()) {
    Json idx = Json::array();
    for (int i : mask_indices(m)) idx.push_back(i + 1);
    terms.push_back({{"idx", idx}, {"coeff", to_json(c)}});
  }
  return {{"dim", f.dim()}, {"degree", f.degree()}, {"terms", terms}};
}

Json to_json(const SkewEndo& a) { return to_json(a.matrix()); }

Json to_json(const AlmostHermitian& J) {
  return {{"dim", J.dim()}, {"J", to_json(J.matrix())}, {"omega", to_json(fundamental_form(J))}};
}

Json to_json(const SubalgebraBasis& h) {
  Json gens = Json::array();
  for (const SkewEndo& g : h.generators) gens.push_back(to_json(g));
  return {{"dim", h.dim}, {"closed", h.closed}, {"size", h.size()}, {"generators", gens}};
}

Json to_json(const PsctCertificate& c) {
  Json action = nullptr;
  if (c.action_defect_witness) action = *c.action_defect_witness;
  return {{"passes", c.passes},
          {"b_tau2", to_json(c.bianchi_b_tau2)},
          {"witnesses", {{"jacobi", optional_triple(c.jacobi_defect_witness)}, {"action", action}}},
          {"gtau_in_stab", c.gtau_in_stab},
          {"dims", {{"stab", c.stab_dim}, {"gtau", c.gtau_dim}, {"ker", c.ker_dim}}}};
}

Json to_json(const Subspace& s) {
  Json basis = Json::array();
  for (const Vector& v : s.basis) basis.push_back(to_json(v));
  return {{"dim", s.dim}, {"basis", basis}};
}

Json to_json(const FactorReport& r) {
  Json factors = Json::array();
  for (const Factor& f : r.factors) {
    Json also = Json::array();
    for (FactorKind k : f.also) also.push_back(to_string(k));
    factors.push_back({{"subspace", to_json(f.subspace)},
                       {"tau", to_json(f.tau_restricted)},
                       {"kind", to_string(f.kind)},
                       {"also", also},
                       {"detail", f.detail},
                       {"killing",
                        {{"positive", f.killing.positive}, {"zero", f.killing.zero}, {"negative", f.killing.negative}}}});
  }
  return {{"kernel", to_json(r.kernel_factor)}, {"factors", factors}};
}

Json to_json(const MetricLieAlgebra& L) {
  Json brackets = Json::array();
  for (const StructureConstant& s : L.structure_constants()) {
    brackets.push_back({{"i", s.i}, {"j", s.j}, {"k", s.k}, {"c", to_json(s.c)}});
  }
  return {{"dim", L.dim()}, {"name", L.name()}, {"brackets", brackets}};
}

Json to_json(const RootDecomp& rd) {
  Json roots = Json::array();
  for (const Root& r : rd.roots) {
    roots.push_back({{"alpha", to_json(Vector(r.alpha))}, {"x", to_json(r.x)}, {"y", to_json(r.y)}});
  }
  return {{"cartan", to_json(rd.cartan)}, {"roots", roots}};
}

Json to_json(const RootSystem& R) {
  return {{"name", R.name()}, {"ambient", R.ambient}, {"count", R.size()}, {"positive", R.positive}};
}

Json to_json(const WellBalancedResult& w) {
  return {{"S", w.S}, {"signs", w.signs}, {"complement", w.complement}};
}

Json to_json(const GrayHervellaReport& r) {
  Json nij = nullptr;
  if (r.nijenhuis_zero) nij = *r.nijenhuis_zero;
  return {{"w1_part", to_json(r.w1_part)},
          {"w3_part", to_json(r.w3_part)},
          {"w4_part", to_json(r.w4_part)},
          {"w4_vector", to_json(r.w4_vector)},
          {"nijenhuis_zero", nij},
          {"class_label", r.class_label}};
}

Json to_json(const W1W4Residual& r) {
  return {{"residual", to_json(r.residual)}, {"witness", Json::array({r.witness[0], r.witness[1]})}};
}

Json to_json(const Fixture& f) {
  Json payload = std::visit(
      [](const auto& p) -> Json {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, TorsionDatum>) {
          return {{"torsion", to_json(p.tau())}};
        } else if constexpr (std::is_same_v<T, MetricLieAlgebra>) {
          return {{"algebra", to_json(p)}};
        } else if constexpr (std::is_same_v<T, AlmostHermitian>) {
          return {{"almost_hermitian", to_json(p)}};
        } else {
          return {{"form", to_json(p)}};
        }
      },
      f.payload);
  Json assertions = Json::array();
  for (const Assertion& a : f.assertions) {
    assertions.push_back({{"name", a.name}, {"expected", a.expected}, {"actual", a.actual}, {"passed", a.passed()}});
  }
  return {{"name", f.name},
          {"description", f.description},
          {"payload", payload},
          {"assertions", assertions},
          {"passed", f.passed()}};
}

Scalar scalar_from_json(const Json& j) {
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (j.is_string()) return Scalar::parse(j.get<std::string>());
  throw DomainError("exact values must be strings or integers, got " + j.dump());
}

Vector vector_from_json(const Json& j) {
  if (!j.is_array()) throw DomainError("expected an array of exact values");
  Vector v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v[i] = scalar_from_json(j[i]);
  return v;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw DomainError("expected a matrix as an array of rows");
  std::vector<Vector> rows;
  for (const Json& r : j) rows.push_back(vector_from_json(r));
  const std::size_t cols = rows.empty() ? 0 : rows.front().dim();
  for (const Vector& r : rows) {
    if (r.dim() != cols) throw DomainError("matrix rows have different lengths");
  }
  return Matrix::from_rows(rows, cols);
}

KForm kform_from_json(const Json& j) {
  const int n = int_field(j, "dim");
  const int k = int_field(j, "degree");
  if (n < 0 || n > 64) throw DimensionError("form dimension must lie in 0..64");
  if (k < 0 || k > n) throw DimensionError("form degree must lie in 0..dim");
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) throw DomainError("\"terms\" must be an array");
  KForm f(n, k);
  std::set<Mask> seen;
  for (const Json& t : terms) {
    const Json& idx = field(t, "idx");
    if (!idx.is_array() || static_cast<int>(idx.size()) != k) {
      throw DomainError("term index list must have length " + std::to_string(k));
    }
    Mask m = 0;
    int prev = 0;
    for (const Json& i : idx) {
      if (!i.is_number_integer()) throw DomainError("indices must be integers");
      const int v = i.get<int>();
      if (v < 1 || v > n) throw DimensionError("index " + std::to_string(v) + " out of range 1.." + std::to_string(n));
      if (v <= prev) throw DomainError("indices must be strictly increasing");
      prev = v;
      m |= Mask{1} << (v - 1);
    }
    if (!seen.insert(m).second) throw DomainError("repeated multi-index in terms");
    f.add_term(m, scalar_from_json(field(t, "coeff")));
  }
  return f;
}

AlmostHermitian almost_hermitian_from_json(const Json& j) {
  const Json& m = j.is_object() ? field(j, "J") : j;
  const Matrix M = matrix_from_json(m);
  if (M.rows() != M.cols()) throw DimensionError("J must be square");
  return AlmostHermitian(SkewEndo(M));
}

SubalgebraBasis subalgebra_from_json(const Json& j) {
  const int n = int_field(j, "dim");
  const Json& gens = field(j, "generators");
  if (!gens.is_array()) throw DomainError("\"generators\" must be an array");
  SubalgebraBasis h{n, {}, false};
  for (const Json& g : gens) {
    Matrix M;
    if (g.is_object()) {
      KForm f = kform_from_json(g);
      if (f.degree() != 2 || f.dim() != n) throw DimensionError("generators must be 2-forms on R^dim");
      M = SkewEndo::from_form(f).matrix();
    } else {
      M = matrix_from_json(g);
    }
    if (M.rows() != static_cast<std::size_t>(n) || M.cols() != static_cast<std::size_t>(n)) {
      throw DimensionError("generator has the wrong size");
    }
    if (!M.is_skew()) throw DomainError("generators must be skew");
    h.generators.emplace_back(M);
  }
  h.verify_closed();
  return h;
}

MetricLieAlgebra lie_algebra_from_json(const Json& j) {
  if (j.is_string()) return matrix_model(j.get<std::string>());
  const int n = int_field(j, "dim");
  std::string name = j.contains("name") && j.at("name").is_string() ? j.at("name").get<std::string>() : "";
  std::vector<StructureConstant> constants;
  const Json& br = field(j, "brackets");
  if (!br.is_array()) throw DomainError("\"brackets\" must be an array");
  for (const Json& b : br) {
    constants.push_back({int_field(b, "i"), int_field(b, "j"), int_field(b, "k"), scalar_from_json(field(b, "c"))});
  }
  return MetricLieAlgebra::from_structure_constants(n, constants, std::move(name));
}

}  // namespace psct
