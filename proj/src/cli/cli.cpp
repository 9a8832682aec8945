#include "humbert/cli/cli.hpp"

#include <cstdio>
#include <fstream>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "humbert/acceptance/acceptance.hpp"
#include "humbert/cycles/cycles.hpp"
#include "humbert/error.hpp"
#include "humbert/fock/cochain.hpp"
#include "humbert/fock/harmonics.hpp"
#include "humbert/lie/exterior.hpp"
#include "humbert/lie/parabolic.hpp"
#include "humbert/plucker/plucker.hpp"
#include "humbert/surface/humbert.hpp"
#include "humbert/weyl/omega.hpp"
#include "humbert/weyl/sl2.hpp"
#include "humbert/weyl/weyl.hpp"

namespace humbert::cli {

using nlohmann::json;

void Report::check(std::string name, bool pass, std::string detail) {
  checks.push_back({std::move(name), pass, std::move(detail)});
}

bool Report::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

json Report::to_json() const {
  json cs = json::array();
  for (const auto& c : checks) cs.push_back({{"name", c.name}, {"status", c.pass ? "pass" : "fail"}, {"detail", c.detail}});
  return {{"command", command}, {"inputs", inputs}, {"results", results}, {"checks", cs}, {"version", kReportVersion}};
}

std::string render_text(const json& report) {
  std::ostringstream os;
  os << "command: " << report.value("command", "") << "\n";
  os << "version: " << report.value("version", "") << "\n";
  if (report.contains("inputs")) os << "inputs: " << report["inputs"].dump() << "\n";
  if (report.contains("error")) os << "error: " << report["error"].dump() << "\n";
  if (report.contains("results")) {
    os << "results:\n";
    for (const auto& [key, value] : report["results"].items()) {
      if (value.is_array() && !value.empty() && (value.front().is_object() || value.front().is_array())) {
        os << "  " << key << ":\n";
        for (const auto& item : value) os << "    " << item.dump() << "\n";
      } else if (value.is_string()) {
        os << "  " << key << ": " << value.get<std::string>() << "\n";
      } else {
        os << "  " << key << ": " << value.dump() << "\n";
      }
    }
  }
  if (report.contains("checks")) {
    os << "checks:\n";
    for (const auto& c : report["checks"]) {
      const std::string status = c.value("status", "");
      os << "  [" << (status == "pass" ? "PASS" : "FAIL") << "] " << c.value("name", "");
      const std::string detail = c.value("detail", "");
      if (!detail.empty()) os << ": " << detail;
      os << "\n";
    }
  }
  return os.str();
}

namespace {

using exact::GaussRational;
using exact::MatrixQ;
using exact::Rational;
using exact::VectorQ;
using weyl::Poly5;

constexpr std::array<const char*, 6> kPNames{"p14", "p15", "p24", "p25", "p34", "p35"};

std::string fixed(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10f", x);
  std::string s = buf;
  if (s.find_first_not_of("-0.") == std::string::npos) s = "0.0000000000";
  return s;
}

json vec_json(const VectorQ& v) { return exact::to_json(v); }

json matrix_json(const MatrixQ& m) { return exact::to_json(m); }

std::vector<std::int64_t> parse_int_list(const std::string& text, std::size_t n) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "not an integer: '" + item + "'");
    }
  }
  if (out.size() != n) throw Error(ErrorCode::ParseError, "expected " + std::to_string(n) + " comma-separated integers");
  return out;
}

cycles::LatticeVector parse_lattice(const std::string& text) {
  const auto v = parse_int_list(text, 5);
  return {v[0], v[1], v[2], v[3], v[4]};
}

surface::SiegelPointExact load_tau(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open tau file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, "tau file '" + path + "': " + e.what());
  }
  return surface::SiegelPointExact::from_json(j);
}

MatrixQ random_word(std::mt19937_64& rng, int length) {
  const auto gens = plucker::symplectic_generators();
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  MatrixQ g = MatrixQ::identity(4);
  for (int k = 0; k < length; ++k) g = g * gens[pick(rng)].matrix;
  return g;
}

GaussRational weight_of(const Poly5& p) {
  const auto& e = p.terms().begin()->first;
  const long a = e[0] + e[1] + e[2], m = e[3] + e[4];
  return GaussRational(Rational(2 * (a - m) + 1, 2));
}

// Options shared across subcommands.
struct Options {
  std::string format = "json";
  std::uint64_t seed = acceptance::kDefaultSeed;
  int cap_degree = fock::kDefaultDegreeCap;
  int degree = 0;
  std::string ktype;
  int dmax = 6;
  std::string x1 = "1", x2 = "0";
  std::string tau;
  std::string rel;
  std::int64_t disc = 1;
  std::int64_t level = 1;
  int box = 3;
  std::int64_t height = 12;
  std::string h;
  int word_cap = cycles::kDefaultWordCap;
  std::string vectors;
};

Report fock_decompose(const Options& o) {
  Report r{"fock decompose"};
  r.inputs = {{"degree", o.degree}, {"cap_degree", o.cap_degree}};
  json comps = json::array();
  std::size_t total = 0;
  for (const auto& c : fock::decompose_degree(o.degree, o.cap_degree)) {
    comps.push_back({{"ktype", c.ktype.str()}, {"multiplicity", c.multiplicity()}, {"dim", c.basis.size()}});
    total += c.basis.size();
  }
  const std::size_t expected = weyl::monomial_count(o.degree);
  r.results = {{"components", comps}, {"monomials", expected}};
  r.check("isotypic dimensions sum to the monomial count", total == expected,
          std::to_string(total) + " of " + std::to_string(expected));
  return r;
}

Report fock_harmonics(const Options& o) {
  Report r{"fock harmonics"};
  const KType k = KType::parse(o.ktype);
  r.inputs = {{"ktype", k.str()}, {"cap_degree", o.cap_degree}};
  const auto h = fock::harmonics(k, o.cap_degree);
  json basis = json::array();
  for (const auto& p : h.basis) basis.push_back(p.str());
  const auto& t = weyl::sl2_triples();
  const auto hp = weyl::weight_operator();
  const GaussRational w = weight_of(h.basis.front());
  bool lowered = true, eigen = true;
  for (const auto& p : h.basis) {
    lowered = lowered && weyl::apply(t.alpha.y, p).is_zero() && weyl::apply(t.mu.y, p).is_zero();
    eigen = eigen && weyl::apply(hp, p) == p * w;
  }
  r.results = {{"degree", h.degree}, {"dim", h.basis.size()}, {"basis", basis}, {"weight", w.str()}};
  r.check("dimension is a multiple of the SO(3) dimension", h.basis.size() % k.so3_dim == 0,
          std::to_string(h.basis.size()));
  r.check("annihilated by Y_alpha and Y_mu", lowered);
  r.check("H' eigenvector", eigen, "eigenvalue " + w.str());
  if (k == KType{5, 0})
    r.check("spans the traceless quadratics", fock::same_span(h.basis, fock::traceless_quadratics(), 2));
  return r;
}

Report fock_howe(const Options& o) {
  Report r{"fock howe"};
  const KType k = KType::parse(o.ktype);
  r.inputs = {{"ktype", k.str()}, {"dmax", o.dmax}, {"cap_degree", o.cap_degree}};
  const auto cert = fock::howe_span_check(k, o.dmax, o.cap_degree);
  json rows = json::array();
  for (const auto& row : cert.rows)
    rows.push_back({{"degree", row.degree},
                    {"isotypic_dim", row.isotypic_dim},
                    {"span_dim", row.span_dim},
                    {"contained", row.contained}});
  r.results = {{"rows", rows}};
  r.check("isotypic component equals U(l')·H(K) degree by degree", cert.ok);
  return r;
}

Report fock_phi_plus(const Options&) {
  Report r{"fock phi-plus"};
  const auto& om = weyl::default_omega();
  const auto phi = fock::phi_plus();
  json values = json::object();
  const auto subs = lie::subsets(6, 2);
  for (std::size_t s = 0; s < subs.size(); ++s)
    if (!phi.values[s].is_zero())
      values[std::string(kPNames[subs[s][0]]) + "^" + kPNames[subs[s][1]]] = phi.values[s].str();
  json bideg = json::array();
  for (const auto& [p, q] : fock::bidegree_support(phi)) bideg.push_back({p, q});
  r.results = {{"values", values}, {"bidegrees", bideg}, {"omega", om.convention()}};
  r.check("K-equivariant", fock::equivariance_failures(phi, om) == 0);
  r.check("closed", fock::rel_lie_differential(phi, om).is_zero());
  r.check("closed in the gauge -i", fock::rel_lie_differential(phi, weyl::build_omega_so32(-GaussRational::i())).is_zero());
  r.check("bidegree (1,1)", fock::bidegree_support(phi) == std::vector<lie::Bidegree>{{1, 1}});
  return r;
}

Report fock_wedge(const Options&) {
  Report r{"fock wedge"};
  const auto w = fock::wedge_decompose_p11();
  json pieces = json::array();
  std::map<KType, int> mult;
  for (const auto& p : w.pieces) {
    pieces.push_back({{"ktype", p.ktype.str()}, {"dim", p.basis.size()}});
    mult[p.ktype] += static_cast<int>(p.basis.size()) / p.ktype.so3_dim;
  }
  r.results = {{"pieces", pieces}, {"total_dim", w.total_dim}};
  r.check("multiplicities 1x1, 3x1, 5x1 once each",
          mult == std::map<KType, int>{{{1, 0}, 1}, {{3, 0}, 1}, {{5, 0}, 1}});
  r.check("total dimension 9", w.total_dim == 9);
  return r;
}

json bidegrees_json(std::vector<lie::Bidegree> b) {
  std::sort(b.begin(), b.end());
  json out = json::array();
  for (const auto& [p, q] : b) out.push_back({p, q});
  return out;
}

json parabolic_json(const lie::ParabolicData& q) {
  json u = json::array();
  for (const auto& root : q.u_roots) u.push_back(root.str());
  json vz = nullptr;
  try {
    vz = lie::vz_ktype(q).str();
  } catch (const Error&) {
  }
  return {{"x1", q.x1.str()},        {"x2", q.x2.str()},        {"family", q.family},
          {"levi", q.levi_label},    {"u_roots", u},            {"r_plus", q.r_plus},
          {"r_minus", q.r_minus},    {"dim_l", q.dim_l()},      {"dim_u", q.dim_u()},
          {"bidegrees", bidegrees_json(q.bidegrees)},           {"vz_ktype", vz}};
}

Report lie_table(const Options&) {
  Report r{"lie table"};
  json rows = json::array();
  std::set<int> families;
  bool all = true;
  for (const auto& [x1, x2] : lie::table_sample_points()) {
    const auto q = lie::parabolic_from(x1, x2);
    families.insert(q.family);
    json row = parabolic_json(q);
    row["computed_bidegrees"] = bidegrees_json(lie::computed_bidegrees(q));
    all = all && row["computed_bidegrees"] == row["bidegrees"];
    rows.push_back(row);
  }
  r.results = {{"parabolics", rows}};
  r.check("computed (l∩k)-invariants match the bidegree table", all);
  r.check("all five families sampled", families.size() == 5);
  const auto q10 = lie::parabolic_from(1, 0);
  r.check("minimal K-type of the (1,0) parabolic is 5x1", lie::vz_ktype(q10) == KType{5, 0});
  r.check("cohomology_dim(1,1) = 1 for the (1,0) parabolic", lie::cohomology_dim(q10, 1, 1) == 1);
  return r;
}

Report lie_roots(const Options&) {
  Report r{"lie roots"};
  const auto& rd = lie::root_datum();
  json roots = json::array();
  bool eigen = true;
  const Rational x1(1), x2(1, 3);
  const auto t = lie::torus(x1, x2);
  for (const auto& root : rd.roots) {
    roots.push_back({{"root", root.str()},
                     {"compact", root.compact()},
                     {"space", root.compact() ? "k" : (root.in_p_plus() ? "p+" : "p-")}});
    const auto& x = rd.vector(root);
    eigen = eigen && lie::bracket(t, x) == x * lie::evaluate(root, x1, x2);
  }
  r.results = {{"roots", roots}};
  r.check("eight roots", rd.roots.size() == 8);
  r.check("root vectors are torus eigenvectors", eigen);
  return r;
}

Report lie_parabolic(const Options& o) {
  Report r{"lie parabolic"};
  const Rational x1 = Rational::parse(o.x1), x2 = Rational::parse(o.x2);
  r.inputs = {{"x1", x1.str()}, {"x2", x2.str()}};
  const auto q = lie::parabolic_from(x1, x2);
  json res = parabolic_json(q);
  json dims = json::object();
  for (int p = 0; p <= 3; ++p)
    for (int qq = 0; qq <= 3; ++qq) {
      const int d = lie::cohomology_dim(q, p, qq);
      if (d) dims["(" + std::to_string(p) + "," + std::to_string(qq) + ")"] = d;
    }
  res["cohomology_dims"] = dims;
  r.results = res;
  r.check("dim l + 2 dim u = 10", q.dim_l() + 2 * q.dim_u() == 10);
  r.check("computed bidegrees match the table", bidegrees_json(lie::computed_bidegrees(q)) == res["bidegrees"]);
  return r;
}

Report plucker_verify(const Options& o) {
  Report r{"plucker verify"};
  r.inputs = {{"seed", o.seed}};
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<int> dist(-4, 4);
  auto rv = [&](std::size_t n) {
    VectorQ v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(Rational(dist(rng)));
    return v;
  };
  bool det_ok = true, quad_ok = true;
  for (int t = 0; t < 50; ++t) {
    const auto x1 = rv(4), x2 = rv(4), y1 = rv(4), y2 = rv(4);
    det_ok = det_ok && plucker::b_form(plucker::wedge_of(x1, x2), plucker::wedge_of(y1, y2)) ==
                           exact::determinant(MatrixQ::from_columns({x1, x2, y1, y2}, 4));
    quad_ok = quad_ok && plucker::plucker_quadric_check(x1, x2);
  }
  bool b0_ok = true;
  for (int t = 0; t < 50; ++t) {
    const auto xi = rv(6), eta = rv(6);
    const auto m = plucker::skew_from_wedge(xi), n = plucker::skew_from_wedge(eta);
    b0_ok = b0_ok && plucker::b_form(xi, eta) == plucker::b0_form(m, n) &&
            plucker::b0_form(m, n) == plucker::b0_coordinates(m, n);
  }
  const MatrixQ gram = plucker::delta_gram();
  bool rho_ok = true, hom_ok = true;
  for (int t = 0; t < 20; ++t) {
    const MatrixQ g = random_word(rng, 6), h = random_word(rng, 6);
    const MatrixQ rg = plucker::iso_rho(g);
    rho_ok = rho_ok && rg.transpose() * gram * rg == gram && exact::determinant(rg) == Rational(1);
    hom_ok = hom_ok && plucker::iso_rho(g * h) == rg * plucker::iso_rho(h);
  }
  const auto sig = exact::signature_of_symmetric(gram);
  r.results = {{"delta_gram", matrix_json(gram)},
               {"rho_J", matrix_json(plucker::iso_rho(plucker::psi_matrix()))},
               {"psi", vec_json(plucker::psi_wedge())},
               {"signature", json::array({sig.plus, sig.minus, sig.zero})}};
  r.check("b is the 4x4 determinant on decomposable pairs", det_ok);
  r.check("decomposable bivectors lie on the Plücker quadric", quad_ok);
  r.check("b = b0 under the bijection", b0_ok);
  r.check("psi maps to Psi", plucker::skew_from_wedge(plucker::psi_wedge()) == plucker::psi_matrix());
  r.check("delta has signature (3,2)", sig == exact::Signature{3, 2, 0});
  r.check("iso_rho(-1) = 1", plucker::iso_rho(-MatrixQ::identity(4)) == MatrixQ::identity(5));
  r.check("iso_rho preserves delta with det 1", rho_ok);
  r.check("iso_rho is multiplicative", hom_ok);
  return r;
}

json tau_json(const surface::SiegelPointExact& tau) {
  json labels = json::array();
  for (std::size_t k = 0; k < tau.algebra()->dim(); ++k) labels.push_back(tau.algebra()->label(k));
  return {{"algebra", labels}, {"tau1", tau.tau1().str()}, {"tau2", tau.tau2().str()}, {"tau12", tau.tau12().str()}};
}

std::optional<surface::SingularRelation> integral_relation(const VectorQ& v) {
  mpz_class l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.denominator().get_mpz_t());
  const Rational lr(l);
  std::array<std::int64_t, 5> c{};
  for (std::size_t k = 0; k < 5; ++k) c[k] = (v[k] * lr).to_int64();
  return surface::SingularRelation{c[0], c[1], c[2], c[3], c[4]};
}

Report humbert_ns(const Options& o) {
  Report r{"humbert ns"};
  r.inputs = {{"tau", o.tau}};
  const auto tau = load_tau(o.tau);
  const auto ns = surface::t11_and_ns_rank(tau);
  json basis = json::array();
  bool exact_ok = true;
  for (const auto& v : ns.t11_basis) {
    basis.push_back(vec_json(v));
    exact_ok = exact_ok && surface::membership(tau, *integral_relation(v));
  }
  r.results = {{"tau", tau_json(tau)}, {"t11_basis", basis}, {"kernel_dim", ns.kernel_dim()}, {"nsRank", ns.ns_rank()}};
  r.check("basis relations hold exactly at tau", exact_ok);
  r.check("nsRank = 1 + kernel dimension", ns.ns_rank() == ns.kernel_dim() + 1);
  return r;
}

Report humbert_member(const Options& o) {
  Report r{"humbert member"};
  r.inputs = {{"tau", o.tau}, {"rel", o.rel}};
  const auto tau = load_tau(o.tau);
  const auto v = parse_int_list(o.rel, 5);
  const surface::SingularRelation rel{v[0], v[1], v[2], v[3], v[4]};
  const bool member = surface::membership(tau, rel);
  const auto fiber = surface::z_tau(tau);
  Eigen::VectorXd f(5);
  const auto five = rel.five_coords();
  for (int k = 0; k < 5; ++k) f(k) = five[k].to_double();
  const double dist = rel.content() == 0 ? 0.0 : surface::distance_to_subspace(f, fiber.z_tau);
  r.results = {{"relation", rel.str()},
               {"discriminant", rel.discriminant()},
               {"content", rel.content()},
               {"member", member},
               {"value", surface::relation_value(tau, rel).str()}};
  r.check("membership agrees with the relation lying in Z_tau", rel.content() == 0 || member == (dist < 1e-6));
  return r;
}

Report humbert_ztau(const Options& o) {
  Report r{"humbert ztau"};
  r.inputs = {{"tau", o.tau}, {"seed", o.seed}};
  const auto tau = load_tau(o.tau);
  const auto fiber = surface::z_tau(tau);
  json rows = json::array();
  for (int i = 0; i < 3; ++i) {
    json row = json::array();
    for (int k = 0; k < 5; ++k) row.push_back(fixed(fiber.z_tau(i, k)));
    rows.push_back(row);
  }
  json eig = json::array();
  for (int k = 0; k < 3; ++k) eig.push_back(fixed(fiber.delta_eigenvalues(k)));
  std::mt19937_64 rng(o.seed);
  double worst = 0;
  const auto t0 = tau.numeric();
  for (int t = 0; t < acceptance::kZTauWords; ++t) {
    const MatrixQ g = t == 0 ? plucker::psi_matrix() : random_word(rng, 5);
    const Eigen::MatrixXd moved = (surface::to_eigen(surface::z_action(g)) * fiber.z_tau.transpose()).transpose();
    worst = std::max(worst, surface::subspace_distance(surface::z_tau_numeric(surface::act_numeric(g, t0)), moved));
  }
  r.results = {{"tau", tau_json(tau)}, {"z_tau", rows}, {"delta_eigenvalues", eig}, {"nsRank", fiber.ns.ns_rank()}};
  r.check("delta is positive definite on Z_tau", fiber.delta_eigenvalues.minCoeff() > surface::kPositivityTolerance);
  r.check("Z_{g tau} = rho(g^-t) Z_tau", worst < acceptance::kZTauTolerance,
          std::to_string(acceptance::kZTauWords) + " words, tolerance 1e-6");
  return r;
}

Report humbert_normal_form(const Options& o) {
  Report r{"humbert normal-form"};
  r.inputs = {{"disc", o.disc}};
  const auto nf = surface::normal_form(o.disc);
  r.results = {{"relation", nf.str()}, {"five_coords", vec_json(nf.five_coords())}};
  r.check("discriminant matches", nf.discriminant() == o.disc);
  r.check("primitive", nf.is_primitive());
  return r;
}

Report cycles_report(const Options& o) {
  Report r{"cycles report"};
  std::optional<cycles::LatticeVector> h;
  if (!o.h.empty()) h = parse_lattice(o.h);
  r.inputs = {{"disc", o.disc}, {"level", o.level}, {"box", o.box}, {"height", o.height}, {"word_cap", o.word_cap},
              {"h", h ? cycles::to_json(*h) : json(nullptr)}};
  r.results = cycles::cycle_report(o.disc, h, o.level, o.box, o.height, o.word_cap);
  r.check("stable range n < m/4", r.results["stable_range"]["holds"].get<bool>(), "1 < 5/4");
  const bool exact_flag = r.results["exact"].get<bool>();
  r.check("orbit partition certified", exact_flag,
          exact_flag ? "classes separated by (delta, content, x mod N)"
                     : "some classes share invariants; raise --height or --word-cap");
  const auto& nf = r.results["normal_form"];
  if (!nf.is_null() && (!h || cycles::CongClass{*h, o.level}.contains(cycles::LatticeVector{
                                  nf["vector"][0], nf["vector"][1], nf["vector"][2], nf["vector"][3], nf["vector"][4]})))
    r.check("normal form lies in an enumerated class", !nf["class"].is_null());
  return r;
}

Report cycles_enumerate(const Options& o) {
  Report r{"cycles enumerate"};
  std::optional<cycles::CongClass> cc;
  if (!o.h.empty()) cc = cycles::CongClass{parse_lattice(o.h), o.level};
  r.inputs = {{"disc", o.disc}, {"box", o.box}, {"level", o.level}, {"h", o.h.empty() ? json(nullptr) : json(o.h)}};
  const auto vs = cycles::enumerate_box(o.disc, o.box, cc);
  json list = json::array();
  for (const auto& x : vs) list.push_back(cycles::to_json(x));
  r.results = {{"count", vs.size()}, {"vectors", list}};
  bool disc_ok = true;
  for (const auto& x : vs) disc_ok = disc_ok && cycles::delta(x) == o.disc;
  r.check("every vector has the requested discriminant", disc_ok);
  if (!cc) {
    std::set<cycles::LatticeVector> s(vs.begin(), vs.end());
    bool sym = true;
    for (auto x : vs) {
      for (auto& c : x) c = -c;
      sym = sym && s.count(x);
    }
    r.check("symmetric under x -> -x", sym);
  }
  return r;
}

Report cycles_frame(const Options& o) {
  Report r{"cycles frame"};
  r.inputs = {{"vectors", o.vectors}};
  cycles::Frame f;
  std::stringstream ss(o.vectors);
  std::string item;
  while (std::getline(ss, item, ';')) f.vectors.push_back(parse_lattice(item));
  const auto c = cycles::frame_classify(f);
  const MatrixQ g = f.gram();
  r.results = {{"gram", matrix_json(g)},
               {"gram_rank", c.gram_rank},
               {"span_dim", c.span_dim},
               {"nonsingular", c.nonsingular},
               {"nondegenerate", c.nondegenerate}};
  r.check("gram matrix symmetric", g.is_symmetric());
  return r;
}

Report verify_all(const Options& o) {
  Report r{"verify-all"};
  r.inputs = {{"seed", o.seed}};
  json list = json::array();
  for (const auto& c : acceptance::run_all(o.seed)) {
    list.push_back({{"id", c.id}, {"name", c.name}, {"pass", c.pass}});
    char id[8];
    std::snprintf(id, sizeof id, "%02d", c.id);
    r.check(std::string(id) + " " + c.name, c.pass, c.detail);
  }
  r.results = {{"criteria", list}};
  return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Oscillator, isogeny and Humbert surface computations", "humbert"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", o.seed, "seed for randomized checks");

  std::function<Report()> action;
  auto leaf = [&](CLI::App* parent, const char* name, const char* desc, std::function<Report(const Options&)> fn) {
    auto* sub = parent->add_subcommand(name, desc);
    sub->callback([&action, &o, fn] { action = [&o, fn] { return fn(o); }; });
    return sub;
  };

  auto* fock_cmd = app.add_subcommand("fock", "Fock model and K-types");
  fock_cmd->require_subcommand(1);
  fock_cmd->add_option("--cap-degree", o.cap_degree, "polynomial degree cap (at most 8)");
  leaf(fock_cmd, "decompose", "K-isotypic decomposition of one degree", fock_decompose)
      ->add_option("--degree", o.degree)
      ->required();
  leaf(fock_cmd, "harmonics", "harmonics of a K-type", fock_harmonics)->add_option("--ktype", o.ktype)->required();
  auto* howe = leaf(fock_cmd, "howe", "Howe truncation span check", fock_howe);
  howe->add_option("--ktype", o.ktype)->required();
  howe->add_option("--dmax", o.dmax);
  leaf(fock_cmd, "phi-plus", "the (1,1) cochain phi+", fock_phi_plus);
  leaf(fock_cmd, "wedge", "K-types of wedge^{1,1} p", fock_wedge);

  auto* lie_cmd = app.add_subcommand("lie", "so(3,2) roots and theta-stable parabolics");
  lie_cmd->require_subcommand(1);
  leaf(lie_cmd, "table", "cohomological table", lie_table);
  leaf(lie_cmd, "roots", "roots and root spaces", lie_roots);
  auto* par = leaf(lie_cmd, "parabolic", "parabolic defined by a torus element", lie_parabolic);
  par->add_option("--x1", o.x1);
  par->add_option("--x2", o.x2);

  auto* plucker_cmd = app.add_subcommand("plucker", "isogeny Sp(4) -> SO(3,2)");
  plucker_cmd->require_subcommand(1);
  leaf(plucker_cmd, "verify", "identity suite", plucker_verify);

  auto* humbert_cmd = app.add_subcommand("humbert", "singular relations and Neron-Severi ranks");
  humbert_cmd->require_subcommand(1);
  leaf(humbert_cmd, "ns", "T^{1,1} basis and NS rank", humbert_ns)->add_option("--tau", o.tau)->required();
  auto* mem = leaf(humbert_cmd, "member", "exact membership in a Humbert surface", humbert_member);
  mem->add_option("--tau", o.tau)->required();
  mem->add_option("--rel", o.rel, "a,b,c,d,e")->required();
  leaf(humbert_cmd, "ztau", "numeric Z_tau", humbert_ztau)->add_option("--tau", o.tau)->required();
  leaf(humbert_cmd, "normal-form", "normal form of a discriminant", humbert_normal_form)
      ->add_option("--disc", o.disc)
      ->required();

  auto* cycles_cmd = app.add_subcommand("cycles", "lattice vectors, orbits and frames");
  cycles_cmd->require_subcommand(1);
  auto* rep = leaf(cycles_cmd, "report", "orbit skeleton of C_{D,h,N}", cycles_report);
  rep->add_option("--disc", o.disc)->required();
  rep->add_option("--level", o.level);
  rep->add_option("--box", o.box);
  rep->add_option("--height", o.height);
  rep->add_option("--residue", o.h, "congruence class h as a,b,c,d,e");
  rep->add_option("--word-cap", o.word_cap);
  auto* en = leaf(cycles_cmd, "enumerate", "vectors of one discriminant in a box", cycles_enumerate);
  en->add_option("--disc", o.disc)->required();
  en->add_option("--box", o.box);
  en->add_option("--level", o.level);
  en->add_option("--residue", o.h, "congruence class h as a,b,c,d,e");
  leaf(cycles_cmd, "frame", "classify a frame", cycles_frame)
      ->add_option("--vectors", o.vectors, "a,b,c,d,e;a,b,c,d,e")
      ->required();

  leaf(&app, "verify-all", "run the acceptance suite", verify_all);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    err << "run 'humbert --help' for usage\n";
    return kUsageError;
  }
  if (!action) {
    err << "usage error: missing subcommand\n";
    return kUsageError;
  }

  json report;
  int code = kSuccess;
  try {
    const Report r = action();
    report = r.to_json();
    code = r.ok() ? kSuccess : kCheckFailed;
  } catch (const Error& e) {
    report = {{"command", "error"},
              {"error", {{"code", std::string(to_string(e.code()))}, {"message", e.what()}}},
              {"version", kReportVersion}};
    err << e.what() << "\n";
    code = kUsageError;
  }
  if (o.format == "text")
    out << render_text(report);
  else
    out << report.dump(2) << "\n";
  return code;
}

}  // namespace humbert::cli
