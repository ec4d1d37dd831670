#pragma once

#include <vector>

#include "cdyn/block_ops.hpp"

namespace cdyn {

// pi(a): block-diagonal, block (t, t) = alpha_{t^-1}(a)
BigOp pi(const DynSystem& sys, const Mat& a);

// Lambda_t = lambda_t (x) id: block (r, t^-1 r) = I
BigOp lambda_op(const DynSystem& sys, std::size_t t);
BigOp lambda_op(const DynSystem& sys, const GroupElement& t);

// rho(f) = sum_t pi(f(t)) Lambda_t; block (t, s) = alpha_{t^-1}(f(t s^-1))
BigOp rho(const DynSystem& sys, const Symbol& f);

// (f * g)(t) = sum_s f(s) alpha_s(g(s^-1 t))
Symbol convolve(const DynSystem& sys, const Symbol& f, const Symbol& g);
// f#(t) = alpha_t(f(t^-1)*)
Symbol involution(const DynSystem& sys, const Symbol& f);

Symbol delta_symbol(const DynSystem& sys, std::size_t t, const Mat& a);
Symbol random_symbol(const DynSystem& sys, std::mt19937_64& rng);

// V_x: block-diagonal, block (t, t) = conj<x,t> I
BigOp big_V(const DynSystem& sys, std::size_t x);
BigOp big_V(const DynSystem& sys, const DualElement& x);

// (dual_action(f, x))(r) = conj<x,r> f(r)
Symbol dual_action(const DynSystem& sys, const Symbol& f, std::size_t x);
Symbol dual_action(const DynSystem& sys, const Symbol& f, const DualElement& x);

struct LaurentReport {
  bool laurent = false;
  double defect = 0.0;             // max_{t,s,r} ||k(tr, sr) - alpha_r^-1(k(t, s))||
  double in_algebra_defect = 0.0;  // max_r HS residual of alpha_r(k(r, e)) against A
};
LaurentReport is_laurent(const DynSystem& sys, const BigOp& t, double tol);

// f(r) = alpha_r(k(r, e)). Throws PreconditionError carrying the defect when
// the kernel is not translation-covariant at tolerance tol.
Symbol symbol_of(const DynSystem& sys, const BigOp& t, double tol);

struct MembershipReport {
  bool member = false;
  double residual = 0.0;  // ||T - rho(symbol)|| when Laurent, else the Laurent defect
  LaurentReport laurent;
};
MembershipReport in_crossed_product(const DynSystem& sys, const BigOp& t, double tol);

// ||zeta(a)* V_x zeta(b) - F(a* b, x)||
double fourier_via_V(const DynSystem& sys, const Mat& a, const Mat& b, std::size_t x);

// m(x) = ||V_x T V_x* - T|| over the whole dual, enumeration order.
std::vector<double> v_continuity_modulus(const DynSystem& sys, const BigOp& t);
std::vector<double> v_continuity_modulus_serial(const DynSystem& sys, const BigOp& t);

// max over symbols of ||symbol_a - symbol_b||
double symbol_distance(const Symbol& a, const Symbol& b);

}  // namespace cdyn
