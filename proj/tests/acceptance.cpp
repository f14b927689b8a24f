// Acceptance runner: one PASS/FAIL line per criterion.
//
//   liegeo_acceptance [--catalog DIR] [--report FILE] [--expect-fail N]...
//
// Exit status is 0 when every criterion matches its expectation (pass,
// unless listed with --expect-fail).

#include "liegeo/construct.hpp"
#include "liegeo/io.hpp"
#include "liegeo/orthogonal.hpp"
#include "liegeo/report.hpp"
#include "liegeo/structure.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>

using namespace liegeo;

namespace {

constexpr double kEinsteinTolerance = 1e-12;
constexpr std::uint64_t kDim7GridCap = 78125;  // 5^7
constexpr int kOracleSamples = 500;
constexpr double kTimeBudgetSeconds = 60.0;

struct Criterion {
  bool pass = true;
  std::string detail;
  Json report = Json::object();

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

struct Context {
  std::filesystem::path catalog;
  SearchOptions search;
  LieAlgebra load(const std::string& name) const { return load_algebra(catalog / (name + ".lie")); }
};

bool full_grid(const DecisionOutcome& o) {
  if (!o.certificate) return false;
  std::uint64_t expect = 1;
  for (std::size_t i = 0; i < o.certificate->coordinates; ++i) expect *= o.certificate->points_per_coordinate;
  return o.certificate->evaluations == expect && o.certificate->points_per_coordinate == o.certificate->degree_bound + 1;
}

Matrix block(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() + b.rows(), a.rows() + b.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.rows(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.rows(); ++j) m(a.rows() + i, a.rows() + j) = b(i, j);
  return m;
}

Criterion semisimple_and_orthogonal(const Context& ctx) {
  Criterion c;
  for (const std::string name : {"sl2", "so3"}) {
    const auto out = decide_contact_exists(ctx.load(name), ctx.search);
    c.report["contact"][name] = decision_report(out);
    c.require(out.verdict == Verdict::Exists, name + " contact not found");
  }
  for (const std::string name : {"r5_abelian", "r7_abelian", "so3_r4"}) {
    const LieAlgebra L = ctx.load(name);
    const auto out = decide_contact_exists(L, ctx.search);
    c.report["contact"][name] = decision_report(out);
    c.require(out.verdict == Verdict::None && full_grid(out), name + " lacks a full NONE certificate");
    if (L.dim() == 7 && out.certificate)
      c.require(out.certificate->evaluations <= kDim7GridCap, name + " grid exceeds 5^7");
  }
  // so(3) + R^4 with the block form (-Killing/2) + I.
  const Matrix b = block(frac(-1, 2) * killing_form(so3()), Matrix::identity(4));
  c.require(is_ad_invariant(ctx.load("so3_r4"), b) && sgn(determinant(b)) != 0, "block form is not bi-invariant");
  for (const std::string name : {"sl2", "so3", "oscillator", "r5_abelian", "r7_abelian", "so3_r4", "so3_r2"}) {
    const auto rep = find_biinvariant_metric(ctx.load(name), ctx.search);
    c.report["biinvariant"][name] = biinvariant_report(rep);
    c.require(rep.found(), name + " has no bi-invariant witness");
  }
  for (const std::string name : {"heisenberg1", "heisenberg2"}) {
    const auto rep = find_biinvariant_metric(ctx.load(name), ctx.search);
    c.report["biinvariant"][name] = biinvariant_report(rep);
    c.require(!rep.found() && rep.certificate, name + " should have no bi-invariant metric");
  }
  return c;
}

Criterion direct_sums(const Context& ctx) {
  Criterion c;
  const auto yes = decide_contact_exists(ctx.load("sl2_aff1"), ctx.search);
  const auto no = decide_contact_exists(ctx.load("so3_r2"), ctx.search);
  c.report["sl2_aff1"] = decision_report(yes);
  c.report["so3_r2"] = decision_report(no);
  c.require(yes.verdict == Verdict::Exists, "sl2+aff1 contact not found");
  c.require(no.verdict == Verdict::None && full_grid(no), "so3+R2 not certified NONE");
  return c;
}

Criterion flat_metrics(const Context& ctx) {
  Criterion c;
  const LieAlgebra e = ctx.load("e2"), f = ctx.load("flat5");
  const auto ce = decide_contact_exists(e, ctx.search), cf = decide_contact_exists(f, ctx.search);
  const bool e_flat = is_flat(e, Metric::identity(3)), f_flat = is_flat(f, Metric::identity(5));
  c.report["e2"] = {{"flat", e_flat}, {"contact", decision_report(ce)}};
  c.report["flat5"] = {{"flat", f_flat}, {"contact", decision_report(cf)}};
  c.require(e_flat && ce.verdict == Verdict::Exists, "e(2) not flat and contact");
  c.require(f_flat, "flat5 not flat");
  c.require(cf.verdict == Verdict::None && cf.certificate && cf.certificate->evaluations == 1024,
            "flat5 lacks the 1024-point NONE certificate");
  return c;
}

Criterion codim_one_abelian(const Context& ctx) {
  Criterion c;
  const LieAlgebra h4 = ctx.load("hyperbolic4"), h3 = ctx.load("hyperbolic3");
  const auto a = decide_contact_exists(h4, ctx.search);
  const auto b = decide_exact_symplectic_exists(h3, ctx.search);
  c.report["hyperbolic4_contact"] = decision_report(a);
  c.report["hyperbolic3_symplectic"] = decision_report(b);
  c.require(derived_ideal(h4).codim() == 1 && is_abelian_subspace(h4, derived_ideal(h4)), "ideal shape");
  c.require(a.verdict == Verdict::None && full_grid(a), "hyperbolic4 contact not certified NONE");
  c.require(b.verdict == Verdict::None && full_grid(b), "hyperbolic3 symplectic not certified NONE");
  return c;
}

Criterion bracket_shape(const Context& ctx) {
  Criterion c;
  for (std::size_t n = 2; n <= 5; ++n) {
    const LieAlgebra L = ctx.load("hyperbolic" + std::to_string(n));
    const auto l = bracket_shape_form(L);
    Json j{{"l", l ? to_json(*l) : Json(nullptr)}};
    c.require(l.has_value(), L.name() + ": no l");
    if (l) {
      for (std::size_t i = 0; i < L.dim(); ++i)
        for (std::size_t k = 0; k < L.dim(); ++k) {
          const Vector x = unit_vector(L.dim(), i), y = unit_vector(L.dim(), k);
          c.require(L.bracket(x, y) == dot(*l, y) * x - dot(*l, x) * y, L.name() + ": bracket shape mismatch");
        }
    }
    const auto out = L.dim() % 2 ? decide_contact_exists(L, ctx.search) : decide_exact_symplectic_exists(L, ctx.search);
    j["decision"] = decision_report(out);
    c.require(out.verdict == Verdict::None && full_grid(out), L.name() + ": not certified NONE");
    // The other parity is NONE by dimension.
    c.report[L.name()] = j;
  }
  return c;
}

Criterion gn_family_instance(const Context& ctx) {
  Criterion c;
  const LieAlgebra g = ctx.load("gn1");
  const Covector eta{0, 0, 1, 1, 0};
  const Rational s = contact_scalar(g, eta);
  const Rational s_degenerate = contact_scalar(gn_family(1, 2, {Rational(1)}, 2), eta);
  const auto h = heintze_negative_possible(g, 256, ctx.search.seed);
  c.report = {{"witness_scalar", to_json(s)}, {"witness_scalar_q_eq_p", to_json(s_degenerate)}, {"heintze", heintze_report(h)}};
  c.require(sgn(s) != 0, "witness not contact");
  c.require(sgn(s_degenerate) == 0, "witness scalar nonzero at q = p");
  c.require(h.passes && h.char_poly && *h.char_poly == Polynomial::from_roots({1, 1, 2, 3}), "spectrum is not {1,1,2,3}");
  return c;
}

Criterion r4_so3_instance(const Context& ctx) {
  Criterion c;
  const LieAlgebra L = ctx.load("r4_so3");
  c.require(validate(L.constants()).empty(), "validate failed");
  for (std::size_t w = 3; w < 7; ++w) c.require(is_contact(L, unit_vector(7, w)), "e" + std::to_string(w + 1) + "* not contact");
  const Matrix ric = ricci(L, Metric::identity(7));
  const Signature sig = symmetric_signature(ric);
  c.require(sig.negative == 0, "Ricci has a negative direction");
  c.require(is_unimodular(L), "not unimodular");
  c.report = {{"sign_mask", r4_so3_sign_mask()}, {"ricci", to_json(ric)}, {"ricci_signature", to_json(sig)}};
  return c;
}

Criterion curvature_engine(const Context& ctx) {
  Criterion c;
  std::size_t pairs = 0;
  for (const auto& entry : std::filesystem::directory_iterator(ctx.catalog)) {
    const LieAlgebra L = load_algebra(entry.path());
    if (L.dim() > 7) continue;
    Matrix skewed = Matrix::identity(L.dim());
    for (std::size_t i = 0; i + 1 < L.dim(); ++i) skewed(i, i + 1) = skewed(i + 1, i) = frac(1, 3);
    for (const Matrix& gm : {Matrix::identity(L.dim()), skewed}) {
      const Metric g(gm);
      const Connection nabla = levi_civita(L, g);
      c.require(is_torsion_free(L, nabla) && is_metric_compatible(g, nabla), L.name() + ": connection contract");
      c.require(check_symmetries(curvature_tensor(L, g, nabla)).all(), L.name() + ": curvature symmetries");
      ++pairs;
    }
  }
  const LieAlgebra so = ctx.load("so3");
  const Metric id3 = Metric::identity(3);
  const CurvatureTensor R = curvature_tensor(so, id3);
  RationalSampler s(ctx.search.seed);
  for (int trial = 0; trial < 50; ++trial) {
    const Vector x = s.vector(3), y = s.vector(3);
    const Rational area = id3(x, x) * id3(y, y) - id3(x, y) * id3(x, y);
    if (sgn(area) == 0) continue;
    const Vector xy = so.bracket(x, y);
    c.require(sectional(R, id3, x, y) * area == frac(1, 4) * id3(xy, xy), "so(3) bi-invariant cross-check");
  }
  for (std::size_t n = 2; n <= 5; ++n) {
    const LieAlgebra L = ctx.load("hyperbolic" + std::to_string(n));
    const Metric g = Metric::identity(n + 1);
    const CurvatureTensor Rh = curvature_tensor(L, g);
    for (std::size_t a = 0; a <= n; ++a)
      for (std::size_t b = a + 1; b <= n; ++b)
        c.require(sectional(Rh, g, unit_vector(n + 1, a), unit_vector(n + 1, b)) == -1, L.name() + ": sectional");
    c.require(ricci(Rh) == Rational(-static_cast<long>(n)) * g.matrix(), L.name() + ": Ricci");
  }
  c.report = {{"fixture_metric_pairs", pairs}};
  return c;
}

Criterion sasakian(const Context& ctx) {
  Criterion c;
  const LieAlgebra L = ctx.load("so3");
  const Metric g(frac(1, 4) * Matrix::identity(3));
  const Covector eta{frac(1, 2), 0, 0};
  c.report = kcontact_report(L, g, eta);
  c.require(c.report["contact_metric"].get<bool>(), "contact metric identities fail");
  c.require(c.report["k_contact"].get<bool>(), "not K-contact");
  c.require(c.report["ricci_reeb"] == "2", "Ric(xi, xi) != 2");
  return c;
}

Criterion einstein_extension(const Context& ctx) {
  Criterion c;
  const Covector alpha{0, 1};
  const auto res =
      einstein_contact_extension(ctx.load("aff1"), alpha, Metric::identity(2), Matrix::diagonal({0, 1}), kEinsteinTolerance);
  c.report["aff1"] = einstein_extension_report(res);
  c.require(res.algebra.dim() == 3, "dimension");
  c.require(res.witness && Vector(res.witness->begin(), res.witness->begin() + 2) == alpha &&
                is_contact(res.algebra, *res.witness),
            "no contact witness restricting to alpha");
  const bool einstein = res.einstein_found && res.t && res.lambda &&
                        (res.mode == "exact" ? sgn(res.residual) == 0 : res.residual_approx <= kEinsteinTolerance);
  c.require(einstein, res.reason.empty() ? "no Einstein metric" : res.reason);
  // Companion instance on the solvable part of CH^2, reported only.
  const auto ch2 = einstein_contact_extension(ctx.load("ch2_solvable"), {0, 0, 1, 0}, Metric::identity(4),
                                              Matrix::diagonal({1, -1, 0, 0}), kEinsteinTolerance);
  c.report["ch2_solvable"] = einstein_extension_report(ch2);
  if (ch2.einstein_found)
    c.detail += (c.detail.empty() ? "" : "; ") + std::string("ch2_solvable companion: Einstein at t ~ ") +
                std::to_string(ch2.t->get_d()) + " (" + ch2.mode + ")";
  return c;
}

Criterion oracle_equivalence(const Context& ctx) {
  Criterion c;
  std::size_t fixtures = 0, samples = 0, disagreements = 0;
  for (const auto& entry : std::filesystem::directory_iterator(ctx.catalog)) {
    const LieAlgebra L = load_algebra(entry.path());
    if (L.dim() % 2 == 0) continue;
    ++fixtures;
    RationalSampler s(ctx.search.seed);
    for (int trial = 0; trial < kOracleSamples; ++trial) {
      const Covector eta = trial % 3 == 0 ? s.sparse_vector(L.dim()) : s.vector(L.dim());
      const Matrix d = differential(L, eta);
      bool geometric = false;
      if (rank(d) == L.dim() - 1) {
        const Subspace rad = two_form_radical(d);
        for (const auto& v : rad.basis()) geometric = geometric || sgn(dot(eta, v)) != 0;
      }
      ++samples;
      if ((sgn(contact_scalar(L, eta)) != 0) != geometric) ++disagreements;
    }
  }
  c.report = {{"fixtures", fixtures}, {"samples", samples}, {"disagreements", disagreements}};
  c.require(disagreements == 0, std::to_string(disagreements) + " disagreements");
  return c;
}

using Runner = std::function<Criterion(const Context&)>;

const std::vector<std::pair<std::string, Runner>>& criteria() {
  static const std::vector<std::pair<std::string, Runner>> list{
      {"contact and bi-invariant decisions on semisimple and orthogonal fixtures", semisimple_and_orthogonal},
      {"direct sums sl2+aff1 (contact) and so3+R2 (none)", direct_sums},
      {"flat e(2) is contact, flat 5-dim fixture is not", flat_metrics},
      {"codimension-one abelian ideal: hyperbolic4 contact none, hyperbolic3 symplectic none", codim_one_abelian},
      {"bracket shape l recovered for hyperbolic(n), both decisions none", bracket_shape},
      {"G_n family witness, its degeneration at q = p, and Heintze spectrum", gn_family_instance},
      {"R^4 x so(3): valid, four contact forms, nonnegative Ricci, unimodular", r4_so3_instance},
      {"curvature engine identities on all fixtures", curvature_engine},
      {"Sasakian su(2): contact metric, K-contact, Ric(xi,xi) = 2", sasakian},
      {"Einstein contact extension of aff(1) by diag(0,1)", einstein_extension},
      {"contact scalar agrees with the rank characterization", oracle_equivalence},
  };
  return list;
}

Json run_all(const Context& ctx, std::vector<Criterion>* out) {
  Json all = Json::object();
  for (std::size_t i = 0; i < criteria().size(); ++i) {
    Criterion c;
    try {
      c = criteria()[i].second(ctx);
    } catch (const std::exception& e) {
      c.pass = false;
      c.detail = std::string("exception: ") + e.what();
    }
    all[std::to_string(i + 1)] = {{"pass", c.pass}, {"report", c.report}};
    if (out) out->push_back(std::move(c));
  }
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance runner"};
  std::string catalog = LIEGEO_CATALOG_DIR;
  std::string report_path;
  std::vector<int> expect_fail;
  std::uint64_t seed = kDefaultSeed;
  app.add_option("--catalog", catalog, "Directory of .lie fixtures");
  app.add_option("--report", report_path, "Write the JSON report here");
  app.add_option("--expect-fail", expect_fail, "Criterion numbers that are known to fail");
  app.add_option("--seed", seed, "Search seed");
  CLI11_PARSE(app, argc, argv);

  Context ctx{catalog, SearchOptions{}};
  ctx.search.seed = seed;
  const auto start = std::chrono::steady_clock::now();
  std::vector<Criterion> results;
  const Json first = run_all(ctx, &results);

  // Criterion 12: rerun everything (single-threaded sweeps) and compare bytes.
  Context serial = ctx;
  serial.search.threads = 1;
  const Json second = run_all(serial, nullptr);
  Criterion det;
  det.require(first.dump() == second.dump(), "JSON reports differ between runs");
  det.report = {{"bytes", first.dump().size()}};
  results.push_back(det);

  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const std::set<int> expected_failures(expect_fail.begin(), expect_fail.end());
  int mismatches = 0, passed = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const int id = static_cast<int>(i + 1);
    const std::string label = i < criteria().size() ? criteria()[i].first : "byte-identical JSON across two runs";
    const Criterion& c = results[i];
    passed += c.pass;
    std::cout << (c.pass ? "PASS" : "FAIL") << ' ' << id << "  " << label;
    if (!c.detail.empty()) std::cout << "  [" << c.detail << ']';
    std::cout << '\n';
    if (c.pass == expected_failures.count(id)) ++mismatches;
  }
  std::cout << passed << '/' << results.size() << " criteria passed in " << seconds << " s (budget "
            << kTimeBudgetSeconds << " s)\n";
  if (seconds > kTimeBudgetSeconds) {
    std::cout << "time budget exceeded\n";
    ++mismatches;
  }
  if (!report_path.empty()) {
    Json out = first;
    out["12"] = {{"pass", det.pass}, {"report", det.report}};
    std::ofstream(report_path) << out.dump(2) << '\n';
  }
  if (!expected_failures.empty()) {
    std::cout << "declared failing:";
    for (int id : expected_failures) std::cout << ' ' << id;
    std::cout << (mismatches ? "  (outcomes differ from declaration)" : "  (outcomes match declaration)") << '\n';
  }
  return mismatches == 0 ? 0 : 1;
}
