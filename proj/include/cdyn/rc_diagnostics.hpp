#pragma once

#include <string>
#include <vector>

#include "cdyn/dyn_system.hpp"

namespace cdyn {

// Relative-continuity moduli of a pair (p, q), indexed by z in the dual:
//   d(z)  = max_{x,y} ||F(p,xz)F(q,y) - F(p,x)F(q,zy)||
//   c1(z) = ||F(p,z)F(q,e) - F(p,e)F(q,z)||
//   c2(z) = ||F(p,z)F(q,z^-1) - F(p,e)F(q,e)||
struct RcTable {
  std::vector<double> d;
  std::vector<double> c1;
  std::vector<double> c2;
  double sup() const;
};

// Parallel over z; Fourier tables are computed once.
RcTable rc_modulus(const DynSystem& sys, const Mat& p, const Mat& q);
// Triple loop recomputing every coefficient; reference for the kernel.
RcTable rc_modulus_serial(const DynSystem& sys, const Mat& p, const Mat& q);

// One inequality checked pointwise over the dual. slack(z) = rhs(z) - lhs(z).
struct InequalityReport {
  std::string name;
  bool evaluated = true;
  std::string note;  // reason when not evaluated
  std::vector<double> lhs;
  std::vector<double> rhs;
  double min_slack = 0.0;
  bool holds(double tol) const { return evaluated && min_slack >= -tol; }
};

// d_{a*a, b*b}(z) <= ||zeta(a)|| m_T(z) ||zeta(b)||, T = zeta(a) zeta(b)*.
InequalityReport rc_chain_inequality(const DynSystem& sys, const Mat& a, const Mat& b);

// 0 <= a <= b and c >= 0 required. With a1, b1, c1 the square roots and T the
// contraction in A with T b1 = a1:
//   d_{a,c}(z) <= ||zeta(a1)|| ||T|| m_S(z) ||zeta(c1)||,  S = zeta(b1) zeta(c1)*.
// Reports not-evaluated when the order hypotheses fail or no contraction exists.
InequalityReport hereditary_probe(const DynSystem& sys, const Mat& a, const Mat& b, const Mat& c);

struct RcSuiteReport {
  std::vector<InequalityReport> items;  // additivity, adjoint, multiplier, smoothing, hereditary
  bool all_hold(double tol) const;
};

// (1) d_{a+b,c} <= d_{a,c} + d_{b,c}
// (2) d_{b*,a*}(z) = d_{a,b}(z^-1); lhs/rhs hold the two tables, slack = -|difference|
// (3) d_{ma,b} <= ||m|| d_{a,b} for m in the w-spectral subspace
// (4) d_{a',b} <= sup_x |g^(xz) - g^(x)| U(a) U(b) + ||g^||_inf d_{a,b}, a' = smooth(a, g)
// (5) hereditary probe on (a*a, a*a + b*b, c*c)
RcSuiteReport rc_property_suite(const DynSystem& sys, const Mat& a, const Mat& b, const Mat& c,
                                const Mat& m, std::size_t w, const ScalarFn& g);

// s(z) = max_x ||F(a,zx) b - F(a,x) b||
std::vector<double> strict_continuity_modulus(const DynSystem& sys, const Mat& a, const Mat& b);

}  // namespace cdyn
