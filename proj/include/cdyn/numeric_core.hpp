#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace cdyn {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

// Largest singular value. Dense SVD up to kDenseNormLimit rows/cols, Lanczos on
// M*M above that. Throws NumericError on non-finite entries.
inline constexpr Eigen::Index kDenseNormLimit = 512;
double op_norm(const Mat& m);

double hs_norm(const Mat& m);
cplx hs_inner(const Mat& a, const Mat& b);  // tr(a* b)

// (M + M*) / 2
Mat hermitian_part(const Mat& m);

// max(0, -lambda_min((M + M*)/2)); zero means M is positive semidefinite.
double psd_defect(const Mat& m);

// Positive square root of the Hermitian part of m (negative eigenvalues clipped).
Mat psd_sqrt(const Mat& m);

// Moore-Penrose pseudo-inverse with singular values below rel_tol * sigma_max dropped.
Mat pseudo_inverse(const Mat& m, double rel_tol = 1e-12);

// Largest singular value of a linear operator C^n -> C^m given by callbacks.
// Block-free Lanczos on A*A with full reorthogonalisation; the returned Ritz
// value never exceeds the true norm.
struct LanczosOptions {
  int max_steps = 200;
  double rel_tol = 1e-12;
  std::uint64_t seed = 0x5eed;
};
double op_norm_lanczos(Eigen::Index n, const std::function<Vec(const Vec&)>& apply,
                       const std::function<Vec(const Vec&)>& apply_adjoint,
                       const LanczosOptions& opts = {});

// Finite-dimensional subspace of matrices of one shape, with an orthonormal
// basis for the Hilbert-Schmidt inner product.
class Subspace {
 public:
  Subspace() = default;
  Subspace(Eigen::Index rows, Eigen::Index cols, std::vector<Mat> basis, double tol);

  Eigen::Index rows() const { return rows_; }
  Eigen::Index cols() const { return cols_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Mat>& basis() const { return basis_; }
  double tol() const { return tol_; }

  Mat project(const Mat& m) const;
  // ||m - Proj(m)||_HS
  double residual(const Mat& m) const;
  bool contains(const Mat& m) const { return residual(m) <= tol_; }

 private:
  void check_shape(const Mat& m) const;

  Eigen::Index rows_ = 0;
  Eigen::Index cols_ = 0;
  std::vector<Mat> basis_;
  Eigen::MatrixXcd frame_;  // basis vectors as columns (column-major flattening)
  double tol_ = 0.0;
};

// Orthonormal basis of span(mats). Dimension is the numerical rank at
// threshold `tol`; a negative tol selects 1e-9 * (largest HS norm of inputs).
Subspace span_of(const std::vector<Mat>& mats, double tol = -1.0);

// Same, with an explicit shape so that an empty or all-zero list is allowed.
Subspace span_of(Eigen::Index rows, Eigen::Index cols, const std::vector<Mat>& mats,
                 double tol = -1.0);

double residual(const Mat& m, const Subspace& s);

// max over basis elements of a of residual(b, a) and of residual(a_i, b):
// zero iff the two subspaces coincide.
double mutual_residual(const Subspace& a, const Subspace& b);

}  // namespace cdyn
