#include "cdyn/dyn_system.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "cdyn/error.hpp"

namespace cdyn {

namespace {

constexpr double kRepTol = 1e-10;

Mat unit(Eigen::Index d, Eigen::Index i, Eigen::Index j) {
  Mat m = Mat::Zero(d, d);
  m(i, j) = 1.0;
  return m;
}

}  // namespace

DynSystem::DynSystem(FiniteAbelianGroup group, std::vector<Mat> unitaries, Subspace algebra,
                     double tol)
    : group_(std::move(group)),
      dim_(algebra.rows()),
      unitaries_(std::move(unitaries)),
      algebra_(std::move(algebra)),
      tol_(tol) {
  const std::size_t n = group_.order();
  if (!(tol_ > 0.0)) throw ConfigError("tolerance must be positive");
  if (algebra_.rows() != algebra_.cols()) throw ConfigError("algebra must consist of square matrices");
  if (unitaries_.size() != n)
    throw ConfigError("expected " + std::to_string(n) + " unitaries, got " +
                      std::to_string(unitaries_.size()));
  const Mat id = Mat::Identity(dim_, dim_);
  for (std::size_t t = 0; t < n; ++t) {
    const Mat& u = unitaries_[t];
    if (u.rows() != dim_ || u.cols() != dim_)
      throw ConfigError("unitary for element " + std::to_string(t) + " has wrong shape");
    if (!u.allFinite()) throw ConfigError("unitary has non-finite entries");
    if (op_norm(u * u.adjoint() - id) > kRepTol)
      throw ConfigError("matrix for group element " + std::to_string(t) + " is not unitary");
  }
  if (op_norm(unitaries_[0] - id) > kRepTol) throw ConfigError("u_e is not the identity");
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t)
      if (op_norm(unitaries_[s] * unitaries_[t] - unitaries_[group_.mul(s, t)]) > kRepTol)
        throw ConfigError("u is not a representation: u_s u_t != u_st for s=" + std::to_string(s) +
                          ", t=" + std::to_string(t));

  if (algebra_.dim() == 0) throw ConfigError("algebra is zero-dimensional");
  const auto& basis = algebra_.basis();
  for (const Mat& b : basis) {
    if (algebra_.residual(b.adjoint()) > tol_) throw ConfigError("algebra is not closed under adjoint");
    for (std::size_t t = 0; t < n; ++t)
      if (algebra_.residual(alpha(t, b)) > tol_) throw ConfigError("algebra is not alpha-invariant");
    for (const Mat& c : basis)
      if (algebra_.residual(b * c) > tol_) throw ConfigError("algebra is not closed under products");
  }
  // Non-degeneracy: the ranges of the basis elements span C^d.
  Mat ranges(dim_, dim_ * static_cast<Eigen::Index>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i) ranges.middleCols(static_cast<Eigen::Index>(i) * dim_, dim_) = basis[i];
  Eigen::JacobiSVD<Mat> svd(ranges);
  const auto& s = svd.singularValues();
  const Eigen::Index rank = (s.array() > 1e-9 * s(0)).count();
  if (rank < dim_) throw ConfigError("algebra acts degenerately on C^d");
}

void DynSystem::check_square(const Mat& a) const {
  if (a.rows() != dim_ || a.cols() != dim_)
    throw StructuralError("expected a " + std::to_string(dim_) + "x" + std::to_string(dim_) +
                          " matrix, got " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
}

Mat DynSystem::alpha(std::size_t t, const Mat& a) const {
  check_square(a);
  return unitaries_.at(t) * a * unitaries_[t].adjoint();
}

double DynSystem::spectral_defect(const Mat& m, std::size_t w) const {
  double r = 0.0;
  for (std::size_t t = 0; t < order(); ++t)
    r = std::max(r, op_norm(alpha(t, m) - std::conj(group_.pairing_at(w, t)) * m));
  return r;
}

Mat DynSystem::random_element(std::mt19937_64& rng) const {
  std::normal_distribution<double> nd;
  Mat a = Mat::Zero(dim_, dim_);
  for (const Mat& b : algebra_.basis()) a += cplx(nd(rng), nd(rng)) * b;
  return a;
}

Subspace make_algebra(Eigen::Index d, AlgebraKind kind, const std::vector<Mat>& basis) {
  std::vector<Mat> gens;
  switch (kind) {
    case AlgebraKind::Full:
      for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j) gens.push_back(unit(d, i, j));
      break;
    case AlgebraKind::Diagonal:
      for (Eigen::Index i = 0; i < d; ++i) gens.push_back(unit(d, i, i));
      break;
    case AlgebraKind::Explicit:
      if (basis.empty()) throw ConfigError("explicit algebra needs a non-empty basis");
      gens = basis;
      break;
  }
  return span_of(d, d, gens);
}

DynSystem trivial_system(const FiniteAbelianGroup& g, Eigen::Index d, AlgebraKind kind,
                         const std::vector<Mat>& basis, double tol) {
  std::vector<Mat> u(g.order(), Mat::Identity(d, d));
  return DynSystem(g, std::move(u), make_algebra(d, kind, basis), tol);
}

DynSystem cyclic_shift_system(const FiniteAbelianGroup& g, AlgebraKind kind,
                              const std::vector<Mat>& basis, double tol) {
  if (g.rank() != 1) throw ConfigError("cyclic-shift action requires a cyclic group");
  const auto n = static_cast<Eigen::Index>(g.order());
  std::vector<Mat> u;
  for (Eigen::Index t = 0; t < n; ++t) {
    Mat p = Mat::Zero(n, n);
    for (Eigen::Index j = 0; j < n; ++j) p((j + t) % n, j) = 1.0;
    u.push_back(p);
  }
  return DynSystem(g, std::move(u), make_algebra(n, kind, basis), tol);
}

DynSystem diagonal_character_system(const FiniteAbelianGroup& g, const std::vector<DualElement>& chars,
                                    AlgebraKind kind, const std::vector<Mat>& basis, double tol) {
  const auto d = static_cast<Eigen::Index>(chars.size());
  if (d == 0) throw ConfigError("diagonal-characters action needs at least one character");
  std::vector<std::size_t> idx;
  for (const auto& x : chars) idx.push_back(g.index_of(x));
  std::vector<Mat> u;
  for (std::size_t t = 0; t < g.order(); ++t) {
    Mat m = Mat::Zero(d, d);
    for (Eigen::Index j = 0; j < d; ++j) m(j, j) = g.pairing_at(idx[static_cast<std::size_t>(j)], t);
    u.push_back(m);
  }
  return DynSystem(g, std::move(u), make_algebra(d, kind, basis), tol);
}

Mat fourier_coeff(const DynSystem& sys, const Mat& a, std::size_t x) {
  sys.check_square(a);
  Mat acc = Mat::Zero(sys.dim(), sys.dim());
  for (std::size_t t = 0; t < sys.order(); ++t) acc += sys.group().pairing_at(x, t) * sys.alpha(t, a);
  return acc;
}

Mat fourier_coeff(const DynSystem& sys, const Mat& a, const DualElement& x) {
  return fourier_coeff(sys, a, sys.group().index_of(x));
}

std::vector<Mat> fourier_table(const DynSystem& sys, const Mat& a) {
  sys.check_square(a);
  const std::size_t n = sys.order();
  std::vector<Mat> orbit(n);
  for (std::size_t t = 0; t < n; ++t) orbit[t] = sys.alpha(t, a);
  std::vector<Mat> out(n, Mat::Zero(sys.dim(), sys.dim()));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t t = 0; t < n; ++t) out[x] += sys.group().pairing_at(x, t) * orbit[t];
  return out;
}

Mat inverse_fourier(const DynSystem& sys, const std::vector<Mat>& coeffs, std::size_t t) {
  const std::size_t n = sys.order();
  if (coeffs.size() != n)
    throw StructuralError("inverse_fourier: coefficients cover " + std::to_string(coeffs.size()) +
                          " of " + std::to_string(n) + " dual elements");
  Mat acc = Mat::Zero(sys.dim(), sys.dim());
  for (std::size_t x = 0; x < n; ++x) {
    sys.check_square(coeffs[x]);
    acc += std::conj(sys.group().pairing_at(x, t)) * coeffs[x];
  }
  return acc / static_cast<double>(n);
}

Mat inverse_fourier(const DynSystem& sys, const std::vector<Mat>& coeffs, const GroupElement& t) {
  return inverse_fourier(sys, coeffs, sys.group().index_of(t));
}

cplx ghat(const DynSystem& sys, const ScalarFn& g, std::size_t x) {
  if (g.size() != sys.order()) throw StructuralError("ghat: function not defined on all of G");
  cplx acc = 0.0;
  for (std::size_t t = 0; t < sys.order(); ++t) acc += std::conj(sys.group().pairing_at(x, t)) * g[t];
  return acc;
}

Mat smooth(const DynSystem& sys, const Mat& a, const ScalarFn& g) {
  if (g.size() != sys.order()) throw StructuralError("smooth: function not defined on all of G");
  Mat acc = Mat::Zero(sys.dim(), sys.dim());
  for (std::size_t t = 0; t < sys.order(); ++t) acc += g[t] * sys.alpha(t, a);
  return acc;
}

FourierRulesReport fourier_product_rules(const DynSystem& sys, const Mat& a, const Mat& b,
                                         std::size_t x, std::size_t y) {
  const auto& g = sys.group();
  const std::size_t xy = g.mul(x, y);
  const Mat fax = fourier_coeff(sys, a, x);
  const Mat fby = fourier_coeff(sys, b, y);

  FourierRulesReport r;
  r.scale = op_norm(a) * op_norm(b) * static_cast<double>(sys.order() * sys.order());
  r.adjoint = op_norm(fax.adjoint() - fourier_coeff(sys, a.adjoint(), g.inv(x)));
  // m = F(b, y) lies in M_y.
  const Mat& m = fby;
  r.multiplier = std::max(op_norm(m * fax - fourier_coeff(sys, m * a, g.mul(y, x))),
                          op_norm(fax * m - fourier_coeff(sys, a * m, xy)));
  const Mat lhs = fax * fby;
  r.product = std::max(op_norm(lhs - fourier_coeff(sys, a * fby, xy)),
                       op_norm(lhs - fourier_coeff(sys, fax * b, xy)));
  return r;
}

double support_inequality_defect(const DynSystem& sys, const Symbol& f) {
  if (f.values.size() != sys.order()) throw StructuralError("symbol not defined on all of G");
  Mat total = Mat::Zero(sys.dim(), sys.dim());
  Mat gram = Mat::Zero(sys.dim(), sys.dim());
  int support = 0;
  for (const Mat& v : f.values) {
    sys.check_square(v);
    total += v;
    gram += v.adjoint() * v;
    if (v.norm() > 0.0) ++support;
  }
  return psd_defect(static_cast<double>(support) * gram - total.adjoint() * total);
}

std::pair<double, double> one_norm_bracket(const DynSystem& sys, const Mat& a, int samples,
                                           std::uint64_t seed) {
  if (samples < 1) throw PreconditionError("one_norm_bracket: samples must be >= 1");
  const std::size_t n = sys.order();
  std::vector<Mat> orbit(n);
  for (std::size_t t = 0; t < n; ++t) orbit[t] = sys.alpha(t, a);
  const double upper = static_cast<double>(n) * op_norm(a);

  auto weighted = [&](const std::vector<cplx>& phi) {
    Mat acc = Mat::Zero(sys.dim(), sys.dim());
    for (std::size_t t = 0; t < n; ++t) acc += phi[t] * orbit[t];
    return op_norm(acc);
  };
  double lower = weighted(std::vector<cplx>(n, 1.0));
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ang(0.0, 2.0 * std::numbers::pi);
  std::vector<cplx> phi(n);
  for (int s = 0; s < samples; ++s) {
    for (auto& p : phi) p = std::polar(1.0, ang(rng));
    lower = std::max(lower, weighted(phi));
  }
  return {lower, upper};
}

}  // namespace cdyn
