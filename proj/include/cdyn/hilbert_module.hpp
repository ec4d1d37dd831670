#pragma once

#include "cdyn/block_ops.hpp"

namespace cdyn {

// zeta(a) v |_t = alpha_{t^-1}(a) v
ColumnOp zeta(const DynSystem& sys, const Mat& a);

// Right inner product sum_t alpha_t(a* b); lands in the fixed-point algebra.
Mat rip(const DynSystem& sys, const Mat& a, const Mat& b);

// Left inner product T S*, block (t, s) = T_t S_s*.
BigOp lip(const ColumnOp& t, const ColumnOp& s);

double column_norm(const ColumnOp& t);

struct ModuleAxiomsReport {
  double isometry = 0.0;        // | ||zeta(a)||^2 - ||rip(a,a)|| |
  double right_action = 0.0;    // ||zeta(a) m - zeta(a m)||
  double left_action = 0.0;     // ||pi(b) zeta(a) - zeta(b a)||
  double translation = 0.0;     // ||Lambda_t zeta(a) - zeta(alpha_t(a))||
  double max() const;
};

// Throws PreconditionError when m is not alpha-fixed.
ModuleAxiomsReport module_axioms(const DynSystem& sys, const Mat& a, const Mat& m, const Mat& b,
                                 std::size_t t);
ModuleAxiomsReport module_axioms(const DynSystem& sys, const Mat& a, const Mat& m, const Mat& b,
                                 const GroupElement& t);

// ||zeta(a) zeta(b)* zeta(c) - zeta(a rip(b, c))||
double ternary_identity(const DynSystem& sys, const Mat& a, const Mat& b, const Mat& c);

}  // namespace cdyn
