#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "cdyn/finite_group.hpp"
#include "cdyn/numeric_core.hpp"

namespace cdyn {

// Function G -> M_d, indexed by the group enumeration. Used both for
// crossed-product integrands f in C(G, A) and for Laurent symbols.
struct Symbol {
  std::vector<Mat> values;
};

// Scalar function on G (or on the dual), indexed by enumeration.
using ScalarFn = std::vector<cplx>;

// A finite C*-dynamical system (A, G, alpha) with alpha_t = Ad(u_t) on
// H = C^d. Multipliers of A are carried as d x d matrices.
//
// The constructor validates: u is a unitary representation of G, A is a
// *-subalgebra of M_d that is alpha-invariant, and A acts non-degenerately.
// Any failure throws ConfigError.
class DynSystem {
 public:
  DynSystem(FiniteAbelianGroup group, std::vector<Mat> unitaries, Subspace algebra,
            double tol = 1e-9);

  const FiniteAbelianGroup& group() const { return group_; }
  std::size_t order() const { return group_.order(); }
  Eigen::Index dim() const { return dim_; }
  const Subspace& algebra() const { return algebra_; }
  double tol() const { return tol_; }
  const Mat& unitary(std::size_t t) const { return unitaries_[t]; }

  // alpha_t(a) = u_t a u_t*
  Mat alpha(std::size_t t, const Mat& a) const;
  Mat alpha(const GroupElement& t, const Mat& a) const { return alpha(group_.index_of(t), a); }

  // max_t ||alpha_t(m) - conj<w,t> m||; zero iff m lies in the w-spectral subspace.
  double spectral_defect(const Mat& m, std::size_t w) const;
  // Same with w = e: zero iff m is alpha-fixed.
  double fixed_defect(const Mat& m) const { return spectral_defect(m, 0); }

  // Random element of A: Gaussian combination of the orthonormal basis.
  Mat random_element(std::mt19937_64& rng) const;

  void check_square(const Mat& a) const;

 private:
  FiniteAbelianGroup group_;
  Eigen::Index dim_;
  std::vector<Mat> unitaries_;
  Subspace algebra_;
  double tol_;
};

// --- Named constructors --------------------------------------------------

enum class AlgebraKind { Full, Diagonal, Explicit };

Subspace make_algebra(Eigen::Index d, AlgebraKind kind, const std::vector<Mat>& basis = {});

// u_t = I
DynSystem trivial_system(const FiniteAbelianGroup& g, Eigen::Index d, AlgebraKind kind,
                         const std::vector<Mat>& basis = {}, double tol = 1e-9);
// Cyclic G, d = |G|, u_t e_j = e_{j+t}
DynSystem cyclic_shift_system(const FiniteAbelianGroup& g, AlgebraKind kind,
                              const std::vector<Mat>& basis = {}, double tol = 1e-9);
// u_t = diag(<x_1,t>, ..., <x_d,t>)
DynSystem diagonal_character_system(const FiniteAbelianGroup& g, const std::vector<DualElement>& chars,
                                    AlgebraKind kind, const std::vector<Mat>& basis = {},
                                    double tol = 1e-9);

// --- Fourier calculus -------------------------------------------------------

// F(a, x) = sum_t <x,t> alpha_t(a)
Mat fourier_coeff(const DynSystem& sys, const Mat& a, std::size_t x);
Mat fourier_coeff(const DynSystem& sys, const Mat& a, const DualElement& x);
// F(a, .) over the whole dual, in enumeration order.
std::vector<Mat> fourier_table(const DynSystem& sys, const Mat& a);

// (1/|G|) sum_x conj<x,t> coeffs[x]. coeffs must cover the whole dual.
Mat inverse_fourier(const DynSystem& sys, const std::vector<Mat>& coeffs, std::size_t t);
Mat inverse_fourier(const DynSystem& sys, const std::vector<Mat>& coeffs, const GroupElement& t);

// ghat(x) = sum_t conj<x,t> g(t)
cplx ghat(const DynSystem& sys, const ScalarFn& g, std::size_t x);

// a' = sum_t g(t) alpha_t(a)
Mat smooth(const DynSystem& sys, const Mat& a, const ScalarFn& g);

struct FourierRulesReport {
  double adjoint = 0.0;     // F(a,x)* vs F(a*, x^-1)
  double multiplier = 0.0;  // m F(a,x) = F(ma, yx), F(a,x) m = F(am, xy), m = F(b,y)
  double product = 0.0;     // F(a,x)F(b,y) = F(aF(b,y), xy) = F(F(a,x)b, xy)
  double scale = 0.0;       // ||a|| ||b|| |G|^2, the natural size of the terms
};
FourierRulesReport fourier_product_rules(const DynSystem& sys, const Mat& a, const Mat& b,
                                         std::size_t x, std::size_t y);

// psd_defect(|supp f| sum f(t)*f(t) - (sum f)*(sum f))
double support_inequality_defect(const DynSystem& sys, const Symbol& f);

// Bracket lower <= ||a||_1 <= upper. upper = |G| ||a||; lower = max over the
// constant weight and `samples` random unimodular weights phi of
// ||sum_t phi(t) alpha_t(a)||.
std::pair<double, double> one_norm_bracket(const DynSystem& sys, const Mat& a, int samples,
                                           std::uint64_t seed);

}  // namespace cdyn
