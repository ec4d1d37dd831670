#include "cdyn/numeric_core.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "cdyn/error.hpp"

namespace cdyn {

namespace {

void require_finite(const Mat& m) {
  if (!m.allFinite()) throw NumericError("matrix has non-finite entries");
}

Vec flatten(const Mat& m) { return Eigen::Map<const Vec>(m.data(), m.size()); }

Mat unflatten(const Vec& v, Eigen::Index rows, Eigen::Index cols) {
  return Eigen::Map<const Mat>(v.data(), rows, cols);
}

}  // namespace

double op_norm(const Mat& m) {
  require_finite(m);
  if (m.size() == 0) return 0.0;
  if (std::max(m.rows(), m.cols()) <= kDenseNormLimit) {
    if (std::max(m.rows(), m.cols()) <= 16) {
      Eigen::JacobiSVD<Mat> svd(m);
      return svd.singularValues()(0);
    }
    // Top eigenvalue of the smaller Gram matrix. The divide-and-conquer SVD of
    // the installed Eigen misreports sigma_max on some inputs, so it is avoided.
    const Mat gram = m.rows() <= m.cols() ? Mat(m * m.adjoint()) : Mat(m.adjoint() * m);
    Eigen::SelfAdjointEigenSolver<Mat> es(gram, Eigen::EigenvaluesOnly);
    return std::sqrt(std::max(0.0, es.eigenvalues()(gram.rows() - 1)));
  }
  return op_norm_lanczos(
      m.cols(), [&](const Vec& v) -> Vec { return m * v; },
      [&](const Vec& v) -> Vec { return m.adjoint() * v; });
}

double hs_norm(const Mat& m) { return m.norm(); }

cplx hs_inner(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw StructuralError("hs_inner: shape mismatch");
  return (a.adjoint() * b).trace();
}

Mat hermitian_part(const Mat& m) {
  if (m.rows() != m.cols()) throw StructuralError("hermitian_part: matrix not square");
  return (m + m.adjoint()) * 0.5;
}

double psd_defect(const Mat& m) {
  require_finite(m);
  if (m.rows() != m.cols()) throw StructuralError("psd_defect: matrix not square");
  if (m.size() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Mat> es(hermitian_part(m), Eigen::EigenvaluesOnly);
  return std::max(0.0, -es.eigenvalues()(0));
}

Mat psd_sqrt(const Mat& m) {
  require_finite(m);
  Eigen::SelfAdjointEigenSolver<Mat> es(hermitian_part(m));
  Eigen::VectorXd ev = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
}

Mat pseudo_inverse(const Mat& m, double rel_tol) {
  require_finite(m);
  Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& s = svd.singularValues();
  const double cut = s.size() > 0 ? rel_tol * s(0) : 0.0;
  Eigen::VectorXd inv(s.size());
  for (Eigen::Index i = 0; i < s.size(); ++i) inv(i) = s(i) > cut ? 1.0 / s(i) : 0.0;
  return svd.matrixV() * inv.asDiagonal() * svd.matrixU().adjoint();
}

double op_norm_lanczos(Eigen::Index n, const std::function<Vec(const Vec&)>& apply,
                       const std::function<Vec(const Vec&)>& apply_adjoint,
                       const LanczosOptions& opts) {
  if (n == 0) return 0.0;
  std::mt19937_64 rng(opts.seed);
  std::normal_distribution<double> nd;
  Vec q(n);
  for (Eigen::Index i = 0; i < n; ++i) q(i) = cplx(nd(rng), nd(rng));
  q.normalize();

  const int steps = static_cast<int>(std::min<Eigen::Index>(opts.max_steps, n));
  Eigen::MatrixXcd basis(n, steps + 1);
  basis.col(0) = q;
  std::vector<double> alpha, beta;
  double prev = -1.0;
  double ritz = 0.0;
  for (int k = 0; k < steps; ++k) {
    Vec w = apply_adjoint(apply(basis.col(k)));
    if (!w.allFinite()) throw NumericError("Lanczos: non-finite iterate");
    const double a = std::real(basis.col(k).dot(w));
    alpha.push_back(a);
    // Full reorthogonalisation, applied twice.
    for (int pass = 0; pass < 2; ++pass)
      w -= basis.leftCols(k + 1) * (basis.leftCols(k + 1).adjoint() * w);
    const double b = w.norm();

    const Eigen::VectorXd diag = Eigen::Map<const Eigen::VectorXd>(alpha.data(), k + 1);
    const Eigen::VectorXd sub = Eigen::Map<const Eigen::VectorXd>(beta.data(), k);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    ritz = std::max(0.0, es.eigenvalues()(k));
    if (prev >= 0.0 && std::abs(ritz - prev) <= opts.rel_tol * ritz) break;
    prev = ritz;
    if (b <= 1e-14 * std::max(1.0, ritz)) break;  // invariant subspace found
    beta.push_back(b);
    basis.col(k + 1) = w / b;
  }
  return std::sqrt(ritz);
}

Subspace::Subspace(Eigen::Index rows, Eigen::Index cols, std::vector<Mat> basis, double tol)
    : rows_(rows), cols_(cols), basis_(std::move(basis)), tol_(tol) {
  frame_.resize(rows_ * cols_, static_cast<Eigen::Index>(basis_.size()));
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    check_shape(basis_[i]);
    frame_.col(static_cast<Eigen::Index>(i)) = flatten(basis_[i]);
  }
}

void Subspace::check_shape(const Mat& m) const {
  if (m.rows() != rows_ || m.cols() != cols_)
    throw StructuralError("subspace shape " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                          " does not match matrix " + std::to_string(m.rows()) + "x" +
                          std::to_string(m.cols()));
}

Mat Subspace::project(const Mat& m) const {
  check_shape(m);
  if (basis_.empty()) return Mat::Zero(rows_, cols_);
  const Vec v = flatten(m);
  return unflatten(frame_ * (frame_.adjoint() * v), rows_, cols_);
}

double Subspace::residual(const Mat& m) const {
  check_shape(m);
  if (basis_.empty()) return m.norm();
  const Vec v = flatten(m);
  return (v - frame_ * (frame_.adjoint() * v)).norm();
}

Subspace span_of(const std::vector<Mat>& mats, double tol) {
  if (mats.empty()) throw StructuralError("span_of: empty list needs an explicit shape");
  return span_of(mats.front().rows(), mats.front().cols(), mats, tol);
}

Subspace span_of(Eigen::Index rows, Eigen::Index cols, const std::vector<Mat>& mats, double tol) {
  double scale = 0.0;
  for (const Mat& m : mats) {
    if (m.rows() != rows || m.cols() != cols) throw StructuralError("span_of: shape mismatch");
    require_finite(m);
    scale = std::max(scale, m.norm());
  }
  if (tol < 0.0) tol = 1e-9 * scale;
  if (mats.empty() || scale == 0.0) return Subspace(rows, cols, {}, std::max(tol, 1e-300));

  Eigen::MatrixXcd stack(rows * cols, static_cast<Eigen::Index>(mats.size()));
  for (std::size_t i = 0; i < mats.size(); ++i)
    stack.col(static_cast<Eigen::Index>(i)) = flatten(mats[i]);

  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(stack, Eigen::ComputeThinU);
  const auto& s = svd.singularValues();
  std::vector<Mat> basis;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) <= tol) break;
    basis.push_back(unflatten(svd.matrixU().col(i), rows, cols));
  }
  return Subspace(rows, cols, std::move(basis), tol);
}

double residual(const Mat& m, const Subspace& s) { return s.residual(m); }

double mutual_residual(const Subspace& a, const Subspace& b) {
  double r = 0.0;
  for (const Mat& m : a.basis()) r = std::max(r, b.residual(m));
  for (const Mat& m : b.basis()) r = std::max(r, a.residual(m));
  return r;
}

}  // namespace cdyn
