#include "cdyn/hilbert_module.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cdyn/crossed_product.hpp"
#include "cdyn/error.hpp"

namespace cdyn {

ColumnOp zeta(const DynSystem& sys, const Mat& a) {
  sys.check_square(a);
  const auto& g = sys.group();
  std::vector<Mat> blocks(sys.order());
  for (std::size_t t = 0; t < sys.order(); ++t) blocks[t] = sys.alpha(g.inv(t), a);
  return ColumnOp(sys, std::move(blocks));
}

Mat rip(const DynSystem& sys, const Mat& a, const Mat& b) {
  sys.check_square(a);
  sys.check_square(b);
  const Mat ab = a.adjoint() * b;
  Mat out = Mat::Zero(sys.dim(), sys.dim());
  for (std::size_t t = 0; t < sys.order(); ++t) out += sys.alpha(t, ab);
  return out;
}

BigOp lip(const ColumnOp& t, const ColumnOp& s) {
  if (&t.system() != &s.system()) throw StructuralError("lip: column operators belong to different systems");
  return BigOp(t.system(), t.as_matrix() * s.as_matrix().adjoint());
}

double column_norm(const ColumnOp& t) { return op_norm(t.as_matrix()); }

double ModuleAxiomsReport::max() const {
  return std::max({isometry, right_action, left_action, translation});
}

ModuleAxiomsReport module_axioms(const DynSystem& sys, const Mat& a, const Mat& m, const Mat& b,
                                 std::size_t t) {
  sys.check_square(m);
  const double fixed = sys.fixed_defect(m);
  if (fixed > sys.tol() * std::max(1.0, op_norm(m)))
    throw PreconditionError("module_axioms: m is not fixed by the action (defect " + std::to_string(fixed) + ")");

  ModuleAxiomsReport r;
  const Mat za = zeta(sys, a).as_matrix();
  const double n = op_norm(za);
  r.isometry = std::abs(n * n - op_norm(rip(sys, a, a)));
  r.right_action = op_norm(za * m - zeta(sys, a * m).as_matrix());
  r.left_action = op_norm(pi(sys, b).matrix() * za - zeta(sys, b * a).as_matrix());
  r.translation = op_norm(lambda_op(sys, t).matrix() * za - zeta(sys, sys.alpha(t, a)).as_matrix());
  return r;
}

ModuleAxiomsReport module_axioms(const DynSystem& sys, const Mat& a, const Mat& m, const Mat& b,
                                 const GroupElement& t) {
  return module_axioms(sys, a, m, b, sys.group().index_of(t));
}

double ternary_identity(const DynSystem& sys, const Mat& a, const Mat& b, const Mat& c) {
  const Mat lhs = zeta(sys, a).as_matrix() * (zeta(sys, b).as_matrix().adjoint() * zeta(sys, c).as_matrix());
  return op_norm(lhs - zeta(sys, a * rip(sys, b, c)).as_matrix());
}

}  // namespace cdyn
