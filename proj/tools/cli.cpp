#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <regex>
#include <sstream>

#include "psct/json_io.hpp"

namespace psct::cli {

namespace {

// Bad invocation: missing or conflicting input sources, flags that do not apply.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input;
  std::string inline_json;
  std::string algebra;
  std::string fixture;
  std::string form;
  std::string structure = "semikaehler";
  std::string type;
  int rank = 0;
  int random_dim = 0;
  std::uint64_t seed = 0;
  std::size_t cap_roots = 24;
  std::size_t cap_results = 64;
  bool json = false;
  bool text = false;
  bool forbid_singleton = false;
  bool seed_given = false;
};

struct Report {
  Json json;
  std::string text;
  int code = kExitOk;
};

std::string kform_text(const KForm& f) { return f.is_zero() ? "0" : f.str(); }

std::string vector_text(const Vector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.dim(); ++i) s += (i ? ", " : "") + v[i].str();
  return s + ")";
}

std::string bool_text(bool b) { return b ? "yes" : "no"; }

Json read_json(const Options& o) {
  std::string text;
  if (!o.input.empty()) {
    std::ifstream in(o.input);
    if (!in) throw DomainError("cannot read input file " + o.input);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  } else {
    text = o.inline_json;
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw DomainError(std::string("input is not valid JSON: ") + e.what());
  }
}

bool has_json(const Options& o) { return !o.input.empty() || !o.inline_json.empty(); }

void require_one_source(const Options& o, bool allow_random) {
  int n = (o.input.empty() ? 0 : 1) + (o.inline_json.empty() ? 0 : 1) + (o.algebra.empty() ? 0 : 1) +
          (o.fixture.empty() ? 0 : 1) + (o.random_dim > 0 ? 1 : 0);
  if (n != 1) {
    throw UsageError("exactly one input source is required (--input, --inline, --algebra, --fixture" +
                     std::string(allow_random ? ", --random-dim)" : ")"));
  }
  if (o.random_dim > 0 && !allow_random) throw UsageError("--random-dim does not apply to this command");
  if (o.random_dim > 0 && !o.seed_given) throw UsageError("--random-dim needs --seed");
}

std::optional<MetricLieAlgebra> algebra_in(const Json& j) {
  if (j.is_object() && j.contains("algebra")) return lie_algebra_from_json(j.at("algebra"));
  if (j.is_object() && j.contains("brackets")) return lie_algebra_from_json(j);
  return std::nullopt;
}

MetricLieAlgebra resolve_algebra(const Options& o) {
  require_one_source(o, false);
  if (!o.algebra.empty()) return matrix_model(o.algebra);
  if (!o.fixture.empty()) {
    Fixture f = fixture(o.fixture);
    if (auto* L = std::get_if<MetricLieAlgebra>(&f.payload)) return *L;
    throw DomainError("fixture " + o.fixture + " does not carry a Lie algebra");
  }
  const Json j = read_json(o);
  if (j.is_string()) return matrix_model(j.get<std::string>());
  if (auto L = algebra_in(j)) return *L;
  throw DomainError("input does not describe a Lie algebra");
}

TorsionDatum resolve_torsion(const Options& o) {
  require_one_source(o, true);
  if (!o.algebra.empty()) return TorsionDatum(canonical_three_form(matrix_model(o.algebra)));
  if (o.random_dim > 0) {
    if (o.random_dim < 3 || o.random_dim > 12) throw DomainError("--random-dim must lie in 3..12");
    Rng rng(o.seed);
    return TorsionDatum(random_form(o.random_dim, 3, rng));
  }
  if (!o.fixture.empty()) {
    Fixture f = fixture(o.fixture);
    if (auto* t = std::get_if<TorsionDatum>(&f.payload)) return *t;
    if (auto* L = std::get_if<MetricLieAlgebra>(&f.payload)) return TorsionDatum(canonical_three_form(*L));
    if (auto* k = std::get_if<KForm>(&f.payload); k && k->degree() == 3) return TorsionDatum(*k);
    throw DomainError("fixture " + o.fixture + " does not carry a 3-form");
  }
  const Json j = read_json(o);
  if (j.is_object() && j.contains("terms")) return TorsionDatum(kform_from_json(j));
  if (j.is_object() && j.contains("torsion")) return TorsionDatum(kform_from_json(j.at("torsion")));
  if (auto L = algebra_in(j)) return TorsionDatum(canonical_three_form(*L));
  throw DomainError("input does not describe a 3-form");
}

AlmostHermitian structure_for(const MetricLieAlgebra& L, const std::string& kind) {
  if (kind == "samelson") return samelson_J(L, root_space_decomposition(L, default_cartan(L)));
  if (kind == "semikaehler") return semikaehler_structure(L).J;
  throw UsageError("--structure must be semikaehler or samelson");
}

// Torsion, J and (when known) the bracket for the Hermitian commands.
struct HermitianInput {
  TorsionDatum tau;
  AlmostHermitian J;
  std::optional<MetricLieAlgebra> L;
};

HermitianInput resolve_hermitian(const Options& o) {
  require_one_source(o, false);
  if (!o.algebra.empty() || !o.fixture.empty()) {
    const MetricLieAlgebra L = resolve_algebra(o);
    return {TorsionDatum(canonical_three_form(L)), structure_for(L, o.structure), L};
  }
  const Json j = read_json(o);
  std::optional<MetricLieAlgebra> L = algebra_in(j);
  if (!j.is_object() || !j.contains("J")) {
    if (!L) throw DomainError("input needs \"J\" or an algebra");
    return {TorsionDatum(canonical_three_form(*L)), structure_for(*L, o.structure), L};
  }
  AlmostHermitian J = almost_hermitian_from_json(j.at("J"));
  if (j.contains("torsion")) return {TorsionDatum(kform_from_json(j.at("torsion"))), J, L};
  if (!L) throw DomainError("input needs \"torsion\" or an algebra next to \"J\"");
  return {TorsionDatum(canonical_three_form(*L)), J, L};
}

Report certify(const Options& o) {
  const PsctCertificate c = psct_certificate(resolve_torsion(o));
  std::ostringstream t;
  t << "PSCT: " << (c.passes ? "passes" : "fails") << "\n";
  t << "b(tau^2): " << kform_text(c.bianchi_b_tau2) << "\n";
  if (c.jacobi_defect_witness) {
    const auto& w = *c.jacobi_defect_witness;
    t << "Jacobi defect at (" << w[0] << ", " << w[1] << ", " << w[2] << ")\n";
  }
  if (c.action_defect_witness) t << "(tau_e" << *c.action_defect_witness << ")_* tau != 0\n";
  t << "g_tau in stab: " << bool_text(c.gtau_in_stab) << "\n";
  t << "dim stab = " << c.stab_dim << ", dim g_tau = " << c.gtau_dim << ", dim ker = " << c.ker_dim << "\n";
  return {to_json(c), t.str()};
}

std::string subalgebra_text(const std::string& label, const SubalgebraBasis& h) {
  std::ostringstream t;
  t << "dim " << label << " = " << h.size() << "\n";
  for (const SkewEndo& g : h.generators) t << "  " << kform_text(g.to_form()) << "\n";
  return t.str();
}

Report stab(const Options& o) {
  const SubalgebraBasis h = stabilizer(resolve_torsion(o));
  return {to_json(h), subalgebra_text("stab", h)};
}

Report gtau(const Options& o) {
  const SubalgebraBasis h = generated_algebra(resolve_torsion(o));
  return {to_json(h), subalgebra_text("g_tau", h)};
}

Report decompose(const Options& o) {
  const FactorReport r = psct_factorization(resolve_torsion(o));
  std::ostringstream t;
  t << "kernel: dim " << r.kernel_factor.size() << "\n";
  for (std::size_t i = 0; i < r.factors.size(); ++i) {
    const Factor& f = r.factors[i];
    t << "factor " << i + 1 << ": dim " << f.subspace.size() << ", " << to_string(f.kind);
    for (FactorKind k : f.also) t << ", " << to_string(k);
    t << "\n  tau: " << kform_text(f.tau_restricted) << "\n  " << f.detail << "\n";
  }
  return {to_json(r), t.str()};
}

Report canonical_form(const Options& o) {
  const MetricLieAlgebra L = resolve_algebra(o);
  const KForm sigma = canonical_three_form(L);
  return {{{"algebra", L.name()}, {"sigma", to_json(sigma)}}, "sigma = " + kform_text(sigma) + "\n"};
}

Report ce_d(const Options& o) {
  const MetricLieAlgebra L = resolve_algebra(o);
  KForm a = canonical_three_form(L);
  if (!o.form.empty()) {
    try {
      a = kform_from_json(Json::parse(o.form));
    } catch (const Json::parse_error& e) {
      throw DomainError(std::string("--form is not valid JSON: ") + e.what());
    }
  }
  const KForm d = ce_differential(L, a);
  return {{{"form", to_json(a)}, {"d", to_json(d)}}, "d(" + kform_text(a) + ") = " + kform_text(d) + "\n"};
}

std::string int_vector_text(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s + ")";
}

RootSystem resolve_root_system(const Options& o) {
  if (!o.type.empty()) {
    if (has_json(o) || !o.algebra.empty() || !o.fixture.empty()) throw UsageError("--type excludes other input sources");
    if (o.type.size() != 1) throw UsageError("--type must be one of A B C D E F G");
    return positive_roots(o.type[0], o.rank);
  }
  const MetricLieAlgebra L = resolve_algebra(o);
  return root_system_of(root_space_decomposition(L, default_cartan(L)));
}

Report roots(const Options& o) {
  if (o.type.empty()) {
    const MetricLieAlgebra L = resolve_algebra(o);
    const RootDecomp rd = root_space_decomposition(L, default_cartan(L));
    std::ostringstream t;
    t << "Cartan dimension " << rd.cartan.size() << ", " << rd.roots.size() << " positive roots\n";
    for (const Root& r : rd.roots) t << "  alpha = " << vector_text(Vector(r.alpha)) << "\n";
    Json j = to_json(rd);
    j["system"] = to_json(root_system_of(rd));
    return {j, t.str()};
  }
  const RootSystem R = resolve_root_system(o);
  std::ostringstream t;
  t << R.name() << ": " << R.size() << " positive roots\n";
  for (const IntVector& v : R.positive) t << "  " << int_vector_text(v) << "\n";
  return {to_json(R), t.str()};
}

Report well_balanced(const Options& o) {
  const RootSystem R = resolve_root_system(o);
  WellBalancedOptions options;
  options.forbid_singleton_complement = o.forbid_singleton;
  options.cap_roots = o.cap_roots;
  options.cap_results = o.cap_results;
  const auto results = well_balanced_search(R, options);
  Json list = Json::array();
  std::ostringstream t;
  t << R.name() << ": " << results.size() << " well-balanced subsets\n";
  for (const auto& w : results) {
    list.push_back(to_json(w));
    t << "  S = {";
    for (std::size_t i = 0; i < w.S.size(); ++i) t << (i ? ", " : "") << (w.signs[i] > 0 ? "+" : "-") << w.S[i];
    t << "}, complement = {";
    for (std::size_t i = 0; i < w.complement.size(); ++i) t << (i ? ", " : "") << w.complement[i];
    t << "}\n";
  }
  return {{{"system", R.name()}, {"forbid_singleton_complement", o.forbid_singleton}, {"results", list}}, t.str()};
}

Report build_j(const Options& o) {
  const MetricLieAlgebra L = resolve_algebra(o);
  const SemiKaehlerConstruction c = semikaehler_structure(L);
  const Vector w = w4_vector(TorsionDatum(canonical_three_form(L)), c.J);
  Json j{{"algebra", L.name()}, {"path", c.path}, {"J", to_json(c.J)}, {"w4_vector", to_json(w)}};
  j["subset"] = c.subset ? to_json(*c.subset) : Json(nullptr);
  std::ostringstream t;
  t << L.name() << ": " << c.path << " construction\n";
  t << "omega = " << kform_text(fundamental_form(c.J)) << "\n";
  t << "omega contract sigma = " << vector_text(w) << "\n";
  return {j, t.str()};
}

Report gray_hervella(const Options& o) {
  const HermitianInput in = resolve_hermitian(o);
  const GrayHervellaReport r = gh_components(in.tau, in.J, in.L ? &*in.L : nullptr);
  std::ostringstream t;
  t << "class: {";
  for (std::size_t i = 0; i < r.class_label.size(); ++i) t << (i ? ", " : "") << r.class_label[i];
  t << "}\n";
  t << "W1 part: " << kform_text(r.w1_part) << "\n";
  t << "W3 part: " << kform_text(r.w3_part) << "\n";
  t << "omega contract tau: " << vector_text(r.w4_vector) << "\n";
  if (r.nijenhuis_zero) t << "integrable: " << bool_text(*r.nijenhuis_zero) << "\n";
  return {to_json(r), t.str()};
}

Report nijenhuis_cmd(const Options& o) {
  const HermitianInput in = resolve_hermitian(o);
  if (!in.L) throw DomainError("the Nijenhuis tensor needs a Lie bracket");
  const auto slices = nijenhuis(*in.L, in.J);
  Json list = Json::array();
  bool zero = true;
  std::ostringstream t;
  for (std::size_t k = 0; k < slices.size(); ++k) {
    list.push_back(to_json(slices[k]));
    if (slices[k].is_zero()) continue;
    zero = false;
    t << "  e" << k + 1 << " component: " << slices[k].str() << "\n";
  }
  return {{{"zero", zero}, {"slices", list}}, std::string("N = ") + (zero ? "0" : "nonzero") + "\n" + t.str()};
}

Report w1w4(const Options& o) {
  const HermitianInput in = resolve_hermitian(o);
  const W1W4Residual r = w1w4_residual(in.tau, in.J);
  std::ostringstream t;
  t << "residual = " << r.residual.str();
  if (!r.residual.is_zero()) t << " at (" << r.witness[0] << ", " << r.witness[1] << ")";
  t << "\n";
  return {to_json(r), t.str()};
}

// "u(m)", "sp(q)+sp(1)" or "so(n)".
SubalgebraBasis named_subalgebra(const std::string& name) {
  std::string s;
  for (char c : name) {
    if (c != ' ') s.push_back(c);
  }
  std::smatch m;
  auto value = [&](int lo, int hi) {
    const int v = std::stoi(m[1].str());
    if (v < lo || v > hi) throw DomainError("subalgebra size out of range in " + name);
    return v;
  };
  if (std::regex_match(s, m, std::regex(R"(u\((\d{1,2})\))"))) return unitary_algebra(AlmostHermitian::standard(2 * value(1, 6)));
  if (std::regex_match(s, m, std::regex(R"(sp\((\d{1,2})\)\+sp\(1\))"))) return quaternionic_algebra(value(1, 3));
  if (std::regex_match(s, m, std::regex(R"(so\((\d{1,2})\))"))) return full_so(value(1, 12));
  throw DomainError("unknown subalgebra " + name + "; expected u(m), sp(q)+sp(1) or so(n)");
}

Report skew_torsion(const Options& o) {
  require_one_source(o, false);
  if (!o.fixture.empty()) throw UsageError("skew-torsion-in takes --algebra, --input or --inline");
  const SubalgebraBasis h = o.algebra.empty() ? subalgebra_from_json(read_json(o)) : named_subalgebra(o.algebra);
  const auto basis = skew_torsion_in(h);
  Json list = Json::array();
  std::ostringstream t;
  t << "dim h = " << h.size() << ", dim {tau : tau_X in h} = " << basis.size() << "\n";
  for (const KForm& f : basis) {
    list.push_back(to_json(f));
    t << "  " << f.str() << "\n";
  }
  return {{{"h_dim", h.size()}, {"count", basis.size()}, {"basis", list}}, t.str()};
}

Report verify(const Options& o) {
  if (o.fixture.empty() || has_json(o) || !o.algebra.empty()) throw UsageError("verify takes exactly --fixture");
  const Fixture f = fixture(o.fixture);
  std::ostringstream t;
  for (const Assertion& a : f.assertions) {
    t << (a.passed() ? "PASS " : "FAIL ") << a.name;
    if (!a.passed()) t << ": expected " << a.expected << ", got " << a.actual;
    t << "\n";
  }
  t << f.name << ": " << (f.passed() ? "all assertions pass" : "assertion failures") << "\n";
  return {to_json(f), t.str(), f.passed() ? kExitOk : kExitDomain};
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--input", o.input, "Read JSON input from a file");
  sub->add_option("--inline", o.inline_json, "JSON input given on the command line");
  sub->add_option("--algebra", o.algebra, "Matrix model such as \"su(3) + R^2\"");
  sub->add_option("--fixture", o.fixture, "Catalog fixture name");
  auto* json = sub->add_flag("--json", o.json, "Emit JSON");
  auto* text = sub->add_flag("--text", o.text, "Emit text (default)");
  json->excludes(text);
}

void add_random(CLI::App* sub, Options& o) {
  sub->add_option("--random-dim", o.random_dim, "Use a seeded random 3-form on R^n");
  sub->add_option("--seed", o.seed, "Seed for --random-dim")->each([&o](const std::string&) { o.seed_given = true; });
}

void add_hermitian(CLI::App* sub, Options& o) {
  sub->add_option("--structure", o.structure, "J for --algebra: semikaehler or samelson");
}

void add_roots(CLI::App* sub, Options& o) {
  sub->add_option("--type", o.type, "Root system type A..G");
  sub->add_option("--rank", o.rank, "Root system rank");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact PSCT toolkit: certificates, decompositions, root systems, almost Hermitian structures", "psct"};
  app.require_subcommand(0, 1);
  Options o;
  bool list_fixtures = false;
  app.add_flag("--list-fixtures", list_fixtures, "List catalog fixtures");
  app.add_flag("--json", o.json, "Emit JSON");

  std::map<CLI::App*, std::function<Report(const Options&)>> commands;
  auto add = [&](const char* name, const char* help, std::function<Report(const Options&)> fn) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_common(sub, o);
    commands[sub] = std::move(fn);
    return sub;
  };
  add_random(add("certify", "PSCT certificate of a 3-form", certify), o);
  add_random(add("stab", "Stabilizer of a 3-form in so(n)", stab), o);
  add_random(add("gtau", "Lie algebra generated by the tau_X", gtau), o);
  add_random(add("decompose", "Invariant splitting and factor typing", decompose), o);
  add("canonical-form", "Canonical 3-form of a metric Lie algebra", canonical_form);
  add("ce-d", "Chevalley-Eilenberg differential", ce_d)->add_option("--form", o.form, "KForm JSON (default: sigma)");
  add_roots(add("roots", "Positive roots", roots), o);
  CLI::App* wb = add("well-balanced", "Well-balanced subsets of positive roots", well_balanced);
  add_roots(wb, o);
  wb->add_flag("--forbid-singleton", o.forbid_singleton, "Reject complements with one root");
  wb->add_option("--cap-roots", o.cap_roots, "Largest root system searched");
  wb->add_option("--cap-results", o.cap_results, "Maximum number of results");
  add("build-j", "Almost Hermitian J with omega contract sigma = 0", build_j);
  add_hermitian(add("gray-hervella", "Gray-Hervella components of tau for J", gray_hervella), o);
  add_hermitian(add("nijenhuis", "Nijenhuis tensor of J", nijenhuis_cmd), o);
  add_hermitian(add("w1w4-residual", "Residual of the W1+W4 identity", w1w4), o);
  add("skew-torsion-in", "3-forms with every tau_X in a subalgebra", skew_torsion);
  add("verify", "Evaluate a catalog fixture", verify);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "psct: " << e.what() << "\n";
    return kExitUsage;
  }

  if (list_fixtures) {
    const auto names = fixture_names();
    if (o.json) {
      out << Json(names).dump(2) << "\n";
    } else {
      for (const auto& n : names) out << n << "\n";
    }
    return kExitOk;
  }
  auto selected = app.get_subcommands();
  if (selected.empty()) {
    err << "psct: a command is required\n" << app.help();
    return kExitUsage;
  }
  try {
    const Report r = commands.at(selected.front())(o);
    if (o.json) {
      out << r.json.dump(2) << "\n";
    } else {
      out << r.text;
    }
    return r.code;
  } catch (const UsageError& e) {
    err << "psct: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "psct: invalid input: " << e.what() << "\n";
    return kExitDomain;
  } catch (const InconsistencyError& e) {
    err << "psct: internal check failed: " << e.what() << "\n";
    return kExitDomain;
  } catch (const Json::exception& e) {
    err << "psct: invalid input: " << e.what() << "\n";
    return kExitDomain;
  }
}

}  // namespace psct::cli
