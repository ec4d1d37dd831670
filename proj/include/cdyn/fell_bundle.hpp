#pragma once

#include <vector>

#include "cdyn/block_ops.hpp"

namespace cdyn {

// Spectral Fell bundle over the dual: B_x = span{F(a, x) : a in the
// spectrally invariant hull of W u W*}.
class FellBundle {
 public:
  const DynSystem& system() const { return *sys_; }
  const std::vector<Subspace>& fibers() const { return fibers_; }
  const Subspace& fiber(std::size_t x) const { return fibers_[x]; }
  const Subspace& hull() const { return hull_; }
  const std::vector<Mat>& generators() const { return generators_; }
  std::size_t total_dim() const;
  int hull_rounds() const { return rounds_; }

 private:
  friend FellBundle build_bundle(const DynSystem& sys, const std::vector<Mat>& w);

  const DynSystem* sys_ = nullptr;
  std::vector<Mat> generators_;
  Subspace hull_;
  std::vector<Subspace> fibers_;
  int rounds_ = 0;
};

// Iterates S <- S + F(S, x) S + S F(S, x) from S = span(W u W*) until the
// dimension stops growing. Throws NumericError if that takes more than d^2 rounds.
FellBundle build_bundle(const DynSystem& sys, const std::vector<Mat>& w);

// Smallest alpha-invariant *-algebra containing W, by closure iteration.
Subspace generated_algebra(const DynSystem& sys, const std::vector<Mat>& w);

struct BundleAxiomsReport {
  double product = 0.0;     // max residual(u v, B_xy)
  double involution = 0.0;  // max residual(u*, B_x^-1)
  double spectral = 0.0;    // max spectral defect of fiber basis elements
  double max() const;
};
BundleAxiomsReport bundle_axioms(const FellBundle& b);

// Section: one value per dual element, values[x] in B_x.
struct Section {
  std::vector<Mat> values;
};

Section fourier_section(const FellBundle& b, const Mat& a);
Section random_section(const FellBundle& b, std::mt19937_64& rng);
// (s1 * s2)(x) = (1/|G|) sum_y s1(y) s2(y^-1 x)
Section convolve_sections(const FellBundle& b, const Section& s1, const Section& s2);
// s#(x) = s(x^-1)*
Section section_adjoint(const FellBundle& b, const Section& s);

// (1/|G|) sum_x s(x). Throws StructuralError when a value leaves its fiber.
Mat kappa(const FellBundle& b, const Section& s);

struct CovarianceReport {
  double residual = 0.0;             // ||alpha_t(kappa(s)) - kappa(beta_t s)||
  std::size_t kappa_span_dim = 0;    // dim of sum_x B_x
  std::size_t algebra_dim = 0;       // dim Alg(W)
  double span_mismatch = 0.0;        // mutual residual of the two spans
};
CovarianceReport covariance_check(const FellBundle& b, const Section& s, std::size_t t);

// ||F pi(a') F* - (kappa x lambda)(eta)||, a' = smooth(a, g), eta(x) = F(a', x).
double diagram_check(const FellBundle& b, const Mat& a, const ScalarFn& g);

// Finite-scale Morita data.
struct MoritaReport {
  std::size_t rip_span_dim = 0;   // span{rip(a, b) : a, b in module}
  std::size_t unit_fiber_dim = 0;
  double rip_vs_unit_fiber = 0.0;  // mutual residual
  std::size_t lip_span_dim = 0;    // span{zeta(a) zeta(b)*} over A
  double left_ideal = 0.0;         // max residual of pi(e_i) L and Lambda_g L in the lip span
  double rip_fourier = 0.0;        // max ||rip(a,b) - F(a* b, e)||
};
// The rip span is taken over the hull of the bundle; the lip span and its
// ideal property over the whole algebra A.
MoritaReport morita_report(const FellBundle& b);

}  // namespace cdyn
