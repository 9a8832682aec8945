#include "humbert/surface/humbert.hpp"

#include <numeric>
#include <sstream>

#include "humbert/error.hpp"
#include "humbert/plucker/plucker.hpp"

namespace humbert::surface {

namespace {

AlgebraPtr algebra_by_name(const std::string& name) {
  if (name == "Q") return exact::AlgebraSpec::rationals();
  if (name == "Q(i)") return exact::AlgebraSpec::gaussian();
  if (name == "Q(i,sqrt2)") return exact::AlgebraSpec::gaussian_sqrt2();
  throw Error(ErrorCode::ParseError, "unknown algebra name '" + name + "'");
}

void require_size(const VectorQ& v) {
  if (v.size() != 5) throw Error(ErrorCode::DimensionMismatch, "expected 5 coordinates");
}

std::int64_t integer_coord(const Rational& r) {
  if (!r.is_integer()) throw Error(ErrorCode::ParseError, "relation coordinate " + r.str() + " is not an integer");
  return r.to_int64();
}

}  // namespace

std::int64_t SingularRelation::discriminant() const { return b * b - 4 * a * c - 4 * d * e; }

std::int64_t SingularRelation::content() const {
  std::int64_t g = 0;
  for (std::int64_t x : {a, b, c, d, e}) g = std::gcd(g, x < 0 ? -x : x);
  return g;
}

VectorQ SingularRelation::five_coords() const {
  return relation_to_five({Rational(a), Rational(b), Rational(c), Rational(d), Rational(e)});
}

SingularRelation SingularRelation::from_five_coords(const VectorQ& f) {
  const VectorQ r = five_to_relation(f);
  return {integer_coord(r[0]), integer_coord(r[1]), integer_coord(r[2]), integer_coord(r[3]), integer_coord(r[4])};
}

std::string SingularRelation::str() const {
  std::ostringstream os;
  os << '(' << a << ',' << b << ',' << c << ',' << d << ',' << e << ')';
  return os.str();
}

std::int64_t discriminant(const SingularRelation& rel) { return rel.discriminant(); }

SingularRelation normal_form(std::int64_t delta) {
  const std::int64_t r = ((delta % 4) + 4) % 4;
  if (delta <= 0 || r > 1)
    throw Error(ErrorCode::BadDiscriminant, "discriminant " + std::to_string(delta) + " is not a positive 0,1 mod 4");
  const std::int64_t k = delta % 2;
  return {1, k, (k * k - delta) / 4, 0, 0};
}

VectorQ relation_to_five(const VectorQ& rel) {
  require_size(rel);
  return {rel[3], rel[1], rel[4], rel[0], rel[2]};
}

VectorQ five_to_relation(const VectorQ& f) {
  require_size(f);
  return {f[3], f[1], f[4], f[0], f[2]};
}

SiegelPointExact::SiegelPointExact(AlgebraElement tau1, AlgebraElement tau2, AlgebraElement tau12)
    : tau1_(std::move(tau1)), tau2_(std::move(tau2)), tau12_(std::move(tau12)) {
  if (tau1_.algebra() != tau2_.algebra() || tau1_.algebra() != tau12_.algebra())
    throw Error(ErrorCode::MixedAlgebras, "tau entries must share one algebra");
  const Eigen::Matrix2d y = numeric().imag();
  if (!(y(0, 0) > kPositivityTolerance && y.determinant() > kPositivityTolerance))
    throw Error(ErrorCode::NotInSiegelSpace, "Im tau is not positive definite");
}

SiegelPointExact SiegelPointExact::from_json(const nlohmann::json& j) {
  try {
    const auto& a = j.at("algebra");
    const AlgebraPtr algebra = a.is_string() ? algebra_by_name(a.get<std::string>()) : exact::algebra_from_json(a);
    auto entry = [&](const char* key) { return AlgebraElement(algebra, exact::vector_from_json(j.at(key))); };
    return SiegelPointExact(entry("tau1"), entry("tau2"), entry("tau12"));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("tau file: ") + e.what());
  }
}

nlohmann::json SiegelPointExact::to_json() const {
  return {{"algebra", exact::to_json(*algebra())},
          {"tau1", exact::to_json(tau1_.coords())},
          {"tau2", exact::to_json(tau2_.coords())},
          {"tau12", exact::to_json(tau12_.coords())}};
}

Eigen::Matrix2cd SiegelPointExact::numeric() const {
  Eigen::Matrix2cd t;
  t << tau1_.to_complex(), tau12_.to_complex(), tau12_.to_complex(), tau2_.to_complex();
  return t;
}

AlgebraElement relation_value(const SiegelPointExact& tau, const SingularRelation& rel) {
  const AlgebraPtr& alg = tau.algebra();
  const AlgebraElement quad = tau.tau12() * tau.tau12() - tau.tau1() * tau.tau2();
  return tau.tau1() * Rational(rel.a) + tau.tau12() * Rational(rel.b) + tau.tau2() * Rational(rel.c) +
         quad * Rational(rel.d) + AlgebraElement::scalar(alg, Rational(rel.e));
}

bool membership(const SiegelPointExact& tau, const SingularRelation& rel) { return relation_value(tau, rel).is_zero(); }

NsResult t11_and_ns_rank(const SiegelPointExact& tau) {
  const AlgebraElement quad = tau.tau12() * tau.tau12() - tau.tau1() * tau.tau2();
  const MatrixQ system = exact::restrict_scalars(
      {tau.tau1(), tau.tau12(), tau.tau2(), quad, AlgebraElement::scalar(tau.algebra(), Rational(1))});
  return {exact::kernel_basis(system)};
}

ZMatrix z_tau_numeric(const Eigen::Matrix2cd& tau) {
  const std::complex<double> t1 = tau(0, 0), t2 = tau(1, 1), t12 = tau(0, 1);
  // Coefficients of the relation on five coordinates (d, b, e, a, c).
  const std::array<std::complex<double>, 5> w{t12 * t12 - t1 * t2, t12, 1.0, t1, t2};
  Eigen::Matrix<double, 2, 5> system;
  for (int k = 0; k < 5; ++k) {
    system(0, k) = w[k].real();
    system(1, k) = w[k].imag();
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(system, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  if (sv(1) <= kPositivityTolerance * std::max(1.0, sv(0)))
    throw Error(ErrorCode::NumericalRankDeficiency, "real solution space of the relation is not 3-dimensional");
  return svd.matrixV().rightCols(3).transpose();
}

HodgeFiber z_tau(const SiegelPointExact& tau) {
  HodgeFiber fiber{t11_and_ns_rank(tau), z_tau_numeric(tau.numeric()), {}};
  const Eigen::MatrixXd gram = to_eigen(plucker::delta_gram());
  const Eigen::Matrix3d restricted = fiber.z_tau * gram * fiber.z_tau.transpose();
  fiber.delta_eigenvalues = Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d>(restricted).eigenvalues();
  return fiber;
}

Eigen::MatrixXd orthonormal_rows(const Eigen::MatrixXd& m) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  Eigen::Index r = 0;
  while (r < sv.size() && sv(r) > 1e-12 * std::max(1.0, sv(0))) ++r;
  return svd.matrixV().leftCols(r).transpose();
}

double subspace_distance(const Eigen::MatrixXd& rows1, const Eigen::MatrixXd& rows2) {
  const Eigen::MatrixXd q1 = orthonormal_rows(rows1), q2 = orthonormal_rows(rows2);
  const Eigen::MatrixXd diff = q1.transpose() * q1 - q2.transpose() * q2;
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(diff).eigenvalues().cwiseAbs().maxCoeff();
}

double distance_to_subspace(const Eigen::VectorXd& v, const Eigen::MatrixXd& rows) {
  const Eigen::MatrixXd q = orthonormal_rows(rows);
  const Eigen::VectorXd u = v.normalized();
  return (u - q.transpose() * (q * u)).norm();
}

Eigen::Matrix2cd act_numeric(const MatrixQ& g, const Eigen::Matrix2cd& tau) {
  const Eigen::MatrixXd ge = to_eigen(g);
  const Eigen::Matrix2cd a = ge.block(0, 0, 2, 2).cast<std::complex<double>>();
  const Eigen::Matrix2cd b = ge.block(0, 2, 2, 2).cast<std::complex<double>>();
  const Eigen::Matrix2cd c = ge.block(2, 0, 2, 2).cast<std::complex<double>>();
  const Eigen::Matrix2cd d = ge.block(2, 2, 2, 2).cast<std::complex<double>>();
  return (a * tau + b) * (c * tau + d).inverse();
}

SiegelPointExact act_exact(const MatrixQ& g, const SiegelPointExact& tau) {
  if (!plucker::is_symplectic(g)) throw Error(ErrorCode::NotSymplectic, "act_exact needs a symplectic matrix");
  const AlgebraPtr& alg = tau.algebra();
  const std::array<std::array<AlgebraElement, 2>, 2> t{{{tau.tau1(), tau.tau12()}, {tau.tau12(), tau.tau2()}}};
  // block(r0, c0) * tau + block(r0, c0 + 2)
  auto affine = [&](std::size_t r0) {
    std::array<std::array<AlgebraElement, 2>, 2> out{{{AlgebraElement::scalar(alg, 0), AlgebraElement::scalar(alg, 0)},
                                                      {AlgebraElement::scalar(alg, 0), AlgebraElement::scalar(alg, 0)}}};
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) {
        AlgebraElement s = AlgebraElement::scalar(alg, g(r0 + i, 2 + j));
        for (std::size_t k = 0; k < 2; ++k) s += t[k][j] * g(r0 + i, k);
        out[i][j] = s;
      }
    return out;
  };
  const auto num = affine(0), den = affine(2);
  const AlgebraElement det_inv = (den[0][0] * den[1][1] - den[0][1] * den[1][0]).inverse();
  const std::array<std::array<AlgebraElement, 2>, 2> den_inv{
      {{den[1][1] * det_inv, -den[0][1] * det_inv}, {-den[1][0] * det_inv, den[0][0] * det_inv}}};
  auto entry = [&](std::size_t i, std::size_t j) { return num[i][0] * den_inv[0][j] + num[i][1] * den_inv[1][j]; };
  return SiegelPointExact(entry(0, 0), entry(1, 1), entry(0, 1));
}

MatrixQ z_action(const MatrixQ& g) { return plucker::iso_rho(exact::inverse(g).transpose()); }

Eigen::MatrixXd to_eigen(const MatrixQ& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).to_double();
  return out;
}

}  // namespace humbert::surface
