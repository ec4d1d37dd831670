#include "cdyn/block_ops.hpp"

#include <string>

#include "cdyn/error.hpp"

namespace cdyn {

namespace {

Eigen::Index big_dim(const DynSystem& sys) {
  const Eigen::Index n = static_cast<Eigen::Index>(sys.order()) * sys.dim();
  if (n > kMaxBigDim)
    throw StructuralError("|G| d = " + std::to_string(n) + " exceeds the dense limit " +
                          std::to_string(kMaxBigDim));
  return n;
}

}  // namespace

ColumnOp::ColumnOp(const DynSystem& sys, std::vector<Mat> blocks) : sys_(&sys), blocks_(std::move(blocks)) {
  if (blocks_.size() != sys.order()) throw StructuralError("column operator needs one block per group element");
  for (const Mat& b : blocks_) sys.check_square(b);
}

Mat ColumnOp::as_matrix() const {
  const Eigen::Index d = sys_->dim();
  Mat m(big_dim(*sys_), d);
  for (std::size_t t = 0; t < blocks_.size(); ++t) m.middleRows(static_cast<Eigen::Index>(t) * d, d) = blocks_[t];
  return m;
}

BigOp::BigOp(const DynSystem& sys, Mat dense) : sys_(&sys), m_(std::move(dense)) {
  const Eigen::Index n = big_dim(sys);
  if (m_.rows() != n || m_.cols() != n) throw StructuralError("BigOp: dense matrix has wrong shape");
}

BigOp BigOp::zero(const DynSystem& sys) {
  const Eigen::Index n = big_dim(sys);
  return BigOp(sys, Mat::Zero(n, n));
}

BigOp BigOp::identity(const DynSystem& sys) {
  const Eigen::Index n = big_dim(sys);
  return BigOp(sys, Mat::Identity(n, n));
}

Mat BigOp::block(std::size_t t, std::size_t s) const {
  const Eigen::Index d = sys_->dim();
  return m_.block(static_cast<Eigen::Index>(t) * d, static_cast<Eigen::Index>(s) * d, d, d);
}

void BigOp::set_block(std::size_t t, std::size_t s, const Mat& b) {
  const Eigen::Index d = sys_->dim();
  sys_->check_square(b);
  m_.block(static_cast<Eigen::Index>(t) * d, static_cast<Eigen::Index>(s) * d, d, d) = b;
}

void BigOp::check_same(const BigOp& o) const {
  if (sys_ != o.sys_) throw StructuralError("BigOp: operands belong to different systems");
}

BigOp BigOp::operator*(const BigOp& o) const {
  check_same(o);
  return BigOp(*sys_, m_ * o.m_);
}

BigOp BigOp::operator+(const BigOp& o) const {
  check_same(o);
  return BigOp(*sys_, m_ + o.m_);
}

BigOp BigOp::operator-(const BigOp& o) const {
  check_same(o);
  return BigOp(*sys_, m_ - o.m_);
}

}  // namespace cdyn
