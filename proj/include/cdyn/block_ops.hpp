#pragma once

#include <vector>

#include "cdyn/dyn_system.hpp"

namespace cdyn {

// Operator H -> l2(G, H), v |-> (t |-> blocks[t] v). Materialises as a
// (|G| d) x d matrix in group-enumeration block order.
class ColumnOp {
 public:
  ColumnOp(const DynSystem& sys, std::vector<Mat> blocks);

  const DynSystem& system() const { return *sys_; }
  const std::vector<Mat>& blocks() const { return blocks_; }
  const Mat& block(std::size_t t) const { return blocks_[t]; }
  Mat as_matrix() const;

 private:
  const DynSystem* sys_;
  std::vector<Mat> blocks_;
};

// Operator on l2(G, H) = C^{|G| d}; block (t, s) is the d x d kernel value k(t, s).
class BigOp {
 public:
  BigOp(const DynSystem& sys, Mat dense);
  static BigOp zero(const DynSystem& sys);
  static BigOp identity(const DynSystem& sys);

  const DynSystem& system() const { return *sys_; }
  const Mat& matrix() const { return m_; }
  Mat block(std::size_t t, std::size_t s) const;
  void set_block(std::size_t t, std::size_t s, const Mat& b);

  BigOp adjoint() const { return BigOp(*sys_, m_.adjoint()); }
  BigOp operator*(const BigOp& o) const;
  BigOp operator+(const BigOp& o) const;
  BigOp operator-(const BigOp& o) const;
  BigOp operator*(cplx s) const { return BigOp(*sys_, m_ * s); }

  double norm() const { return op_norm(m_); }

 private:
  void check_same(const BigOp& o) const;

  const DynSystem* sys_;
  Mat m_;
};

// Largest |G| * d accepted for dense block storage.
inline constexpr Eigen::Index kMaxBigDim = 4096;

}  // namespace cdyn
