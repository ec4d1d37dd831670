#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "cdyn/numeric_core.hpp"

// Truncated models of the two infinite examples: the bilateral shift acting
// on K(l2(Z)) by conjugation, and free or translation actions on discrete
// spaces.
//
// Conventions for the shift lab. l2(Z) is identified with L2(S1) through
// e_n <-> w^n. U e_n = e_{n+1} and alpha_k(T) = U^k T U^-k. The dual of Z is
// the circle, <z, k> = z^k, so F(T, z) = sum_k z^k alpha_k(T). W_z e_n = z^n e_n
// and M_f is the Laurent matrix [M_f]_{ij} = fhat(i - j).
namespace cdyn::labs {

// Trigonometric polynomial sum_{|n| <= B} c_n w^n. When it stands for a
// truncated series, tail() is the two-norm of what was dropped.
class CircleFunction {
 public:
  CircleFunction() = default;
  // coeffs[k] multiplies w^(k - B) with coeffs.size() = 2B + 1.
  explicit CircleFunction(std::vector<cplx> coeffs, double tail = 0.0);
  static CircleFunction from_map(const std::map<int, cplx>& coeffs, double tail = 0.0);
  static CircleFunction monomial(int n, cplx c = 1.0);

  // Largest |n| with a nonzero coefficient.
  int bandwidth() const { return bw_; }
  cplx coeff(int n) const;
  double tail() const { return tail_; }
  double two_norm() const;

  cplx operator()(double theta) const;
  // Values at theta_j = 2 pi j / m, j = 0..m-1.
  std::vector<cplx> samples(int m) const;
  // Maximum modulus over m equispaced samples, a lower bound for the sup-norm.
  // m = 0 picks max(16 B, 64).
  double sup_norm(int m = 0) const;

  CircleFunction conj() const;           // w -> conj(f(w))
  CircleFunction rotate(cplx a) const;   // w -> f(a w), |a| = 1
  CircleFunction normalized() const;     // two-norm 1
  CircleFunction scaled(cplx s) const;

  friend CircleFunction operator*(const CircleFunction& f, const CircleFunction& g);
  friend CircleFunction operator+(const CircleFunction& f, const CircleFunction& g);
  friend CircleFunction operator-(const CircleFunction& f, const CircleFunction& g);

 private:
  void trim();

  int bw_ = 0;
  std::vector<cplx> c_{cplx(0.0)};
  double tail_ = 0.0;
};

// L2 inner product <f, g> = sum conj(fhat(n)) ghat(n).
cplx inner(const CircleFunction& f, const CircleFunction& g);

// Truncation of l2(Z) to span{e_n : |n| <= N}. Matrix index of e_n is n + N.
struct ShiftWindow {
  int N = 0;
  Eigen::Index dim() const { return 2 * static_cast<Eigen::Index>(N) + 1; }
  Eigen::Index index(int n) const { return static_cast<Eigen::Index>(n) + N; }
};

// 10 * (largest tail two-norm) + 1e-9.
double truncation_budget(const std::vector<const CircleFunction*>& fs);

// --- Fixtures ---------------------------------------------------------------

// Fourier series of sign(Im w), chat_k = -2i / (pi k) for odd k, cut at
// bandwidth B and renormalized.
CircleFunction step_function(int B);
// Truncated exp(i kappa S_b), S_b the unnormalized bandwidth-b partial sum of
// the sign series. Unimodular up to the recorded tail.
CircleFunction phase_step(int b, double kappa, int bandwidth);
// Continuous pair with geometrically decaying coefficients, bandwidth 8.
CircleFunction smooth_phi();
CircleFunction smooth_psi();
// Look up a bundled fixture by name: e<n> (monomial w^n), smooth-phi, smooth-psi, wide,
// step (bandwidth N/8), phase-step. Unknown names throw
// PreconditionError.
CircleFunction named_fixture(const std::string& name, const ShiftWindow& w);

// --- Windowed operators -----------------------------------------------------

// P[i, j] = phihat(i) conj(phihat(j)).
Mat rank_one_projection(const CircleFunction& phi, const ShiftWindow& w);

// U^k T U^-k on the window; entries pushed past the edge are dropped.
Mat shift_conjugate(const Mat& t, const ShiftWindow& w, int k);

// Smallest b with T vanishing outside [-b, b]^2.
int support_radius(const Mat& t, const ShiftWindow& w);

// sum_{|k| <= K} alpha_k(P). Requires K <= N - support_radius(P).
Mat shift_sum(const Mat& p, const ShiftWindow& w, int K);

// sum_{|k| <= K} z^k alpha_k(P), same window guard.
Mat shifted_fourier(const Mat& p, cplx z, const ShiftWindow& w, int K);

// [M_f]_{ij} = fhat(i - j) on the window.
Mat laurent_matrix(const CircleFunction& f, const ShiftWindow& w);

// [M_phi W_z M_phi*]_{ij} = sum_n z^n phihat(i - n) conj(phihat(j - n)).
Mat fourier_closed_form(const CircleFunction& phi, cplx z, const ShiftWindow& w);

// max |a_ij - b_ij| over |i|, |j| <= radius.
double interior_residual(const Mat& a, const Mat& b, const ShiftWindow& w, int radius);

// Restriction to indices |i|, |j| <= radius.
Mat interior_block(const Mat& a, const ShiftWindow& w, int radius);

struct ShiftSumReport {
  int N = 0;
  int K = 0;
  int radius = 0;  // entries with |i|, |j| <= K - B are complete
  double residual = 0.0;
};
// shift_sum(P_phi) against the Laurent matrix of |phi|^2.
ShiftSumReport shift_sum_check(const CircleFunction& phi, const ShiftWindow& w, int K);

struct FourierShiftReport {
  cplx z;
  int K = 0;       // N - B
  int radius = 0;  // K - B
  double residual = 0.0;
};
FourierShiftReport fourier_coeff_shift(const CircleFunction& phi, cplx z, const ShiftWindow& w);

// --- Relative continuity of rank-one projections -----------------------------

// Norm of the finite section [-R, R] of the Toeplitz matrix with symbol q;
// dense SVD up to 65 rows, Lanczos to 1e-10 relative beyond.
double toeplitz_section_norm(const CircleFunction& q, int R);

// ||F(A, a)F(B, b) - F(A, a')F(B, b')|| on the interior [-R, R], for the rank-one
// projections onto alpha and beta and ab = a'b' = c. The difference equals
// M_alpha (M_k(a.) - M_k(a'.)) W_c M_beta*, k = conj(alpha) beta, so its
// interior block is the section of a Toeplitz matrix times a diagonal unitary.
double pair_difference_norm(const CircleFunction& alpha, const CircleFunction& beta, cplx a,
                            cplx a2, cplx c, int R);

struct DichotomyRow {
  int k = 0;  // z = exp(2 pi i k / zgrid)
  cplx z;
  double d_tilde = 0.0;
  double omega = 0.0;      // sampled sup |h(zw) - h(w)|, h = conj(phi) psi
  double bound_rhs = 0.0;  // ||phi|| ||psi|| omega + eps
  bool pass = false;       // d_tilde <= bound_rhs
};

struct DichotomyTable {
  int N = 0;
  int zgrid = 0;
  int xygrid = 0;
  int radius = 0;  // interior [-R, R], R = N - 2 (B_phi + B_psi)
  int samples = 0;
  double sup_phi = 0.0;
  double sup_psi = 0.0;
  double eps = 0.0;
  std::vector<DichotomyRow> rows;

  bool all_pass() const;
  // d_tilde at k = 1, the grid point next to z = 1.
  double near_one() const;
};

// d_tilde(z) = max over grid x, y of ||F(P, xz)F(Q, y) - F(P, x)F(Q, zy)|| on the
// interior. Maximum via a sampled upper bound per (x, y) and Lanczos section
// norms in decreasing order of that bound. d_tilde is a lower bound resolved to
// 1e-10 + 2e-3 * bound; evaluation continues until the bounds also settle the
// pass column. OpenMP over z.
// Throws PreconditionError for grids under 8 points or unnormalized inputs,
// WindowError when a bandwidth exceeds N / 4.
DichotomyTable rc_dichotomy(const CircleFunction& phi, const CircleFunction& psi,
                            const ShiftWindow& w, int zgrid = 64, int xygrid = 64);
// One row of the same table.
DichotomyRow rc_dichotomy_at(const CircleFunction& phi, const CircleFunction& psi,
                             const ShiftWindow& w, int k, int zgrid = 64, int xygrid = 64);
// Reference: builds every windowed F(P, x) and F(Q, y) and takes dense norms of
// the interior blocks. Serial, for small windows.
DichotomyTable rc_dichotomy_serial(const CircleFunction& phi, const CircleFunction& psi,
                                   const ShiftWindow& w, int zgrid = 64, int xygrid = 64);

struct CubeReport {
  cplx z;
  double omega = 0.0;
  double lhs = 0.0;  // omega^3
  double terms[4] = {0.0, 0.0, 0.0, 0.0};
  double rhs = 0.0;  // ||phi|| ||psi|| (t1 + t2 + t3 + t4)
  double eps = 0.0;
  double slack = 0.0;  // rhs - lhs
  bool holds() const { return slack >= -eps; }
};
// omega(z)^3 against ||phi|| ||psi|| times
//   ||F(Q,1)F(P,1) - F(Q,z^-1)F(P,z)|| + ||F(Q,1)F(P,z^-1) - F(Q,z^-1)F(P,1)||
// + ||F(Q,z)F(P,1) - F(Q,1)F(P,z)||    + ||F(Q,z)F(P,z^-1) - F(Q,1)F(P,1)||.
CubeReport reverse_cube_bound(const CircleFunction& phi, const CircleFunction& psi,
                              const ShiftWindow& w, cplx z);

struct PositiveReport {
  double sup_symbol = 0.0;       // sampled sup of sum lambda_n |phi_n|^2
  double strict_sum_sup = 0.0;   // same, from the symbol read off the windowed strict sum
  double section_norm = 0.0;     // norm of the interior block (a lower bound)
  double laurent_residual = 0.0; // windowed strict sum vs Laurent matrix of the symbol
  double eps = 0.0;
  bool agree = false;
};
// T = sum lambda_n P_n. Throws PreconditionError for non-orthogonal families,
// non-positive weights or mismatched lengths.
PositiveReport positive_decomposition(const std::vector<double>& lambdas,
                                      const std::vector<CircleFunction>& phis, const ShiftWindow& w);

struct TwistReport {
  DichotomyTable plain;    // (P, Q)
  DichotomyTable twisted;  // (Delta P, Delta Q)
  DichotomyTable mixed;    // (P, Delta Q)
  double commute_residual = 0.0;  // max_n ||Delta(alpha_n T) - alpha_n(Delta T)||
};
// Delta = conjugation by M_delta. Requires |delta| = 1 to 1e-10 on samples.
TwistReport delta_twist_demo(const CircleFunction& delta, const CircleFunction& phi,
                             const CircleFunction& psi, const ShiftWindow& w, int zgrid = 64,
                             int xygrid = 64);

// --- Proper actions -----------------------------------------------------------

struct ProperActionReport {
  int n = 0;
  int k = 0;
  std::size_t fixed_dim = 0;        // dim span{F(f, e) : f diagonal}
  double orbit_defect = 0.0;        // departure of those elements from orbit-constant diagonals
  std::size_t rip_span_dim = 0;
  double rip_mismatch = 0.0;        // mutual residual of span{rip} and the fixed span
  double left_ideal = 0.0;
  std::size_t crossed_dim = 0;      // dim span{pi(f) Lambda_t}
  std::size_t crossed_dim_expected = 0;  // n * (n k)
  bool ok(double tol) const;
};
// Z_n acting freely on Z_n x {1..k} by translation of the first coordinate,
// A = diagonal matrices on C^{nk}.
ProperActionReport proper_free_action_report(int n, int k);

// Finitely supported function on Z.
using ZFunction = std::map<int, cplx>;

struct TranslationRow {
  std::size_t f = 0;
  std::size_t g = 0;
  int k = 0;
  cplx z;
  double d_tilde = 0.0;      // windowed, over the interior diagonal entries
  double closed_form = 0.0;  // max |ft(xz) gt(y) - ft(x) gt(zy)|, ft(x) = sum_j f(j) x^-j
  double lipschitz = 0.0;    // |1 - z| (L_f |g|_1 + |f|_1 L_g), L_f = sum |j||f(j)|
};
struct TranslationReport {
  int N = 0;
  int K = 0;
  int radius = 0;
  std::vector<TranslationRow> rows;
  double max_closed_form_gap = 0.0;
  bool lipschitz_holds = true;
};
// Z acting on Z by translation, windowed to [-N, N], for every ordered pair of
// the given functions. Supports must lie in [-N/2, N/2] (WindowError).
TranslationReport translation_on_Z_report(int N, const std::vector<ZFunction>& fs, int zgrid = 16,
                                          int xygrid = 16);

}  // namespace cdyn::labs
