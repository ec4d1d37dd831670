#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <tuple>
#include <unsupported/Eigen/FFT>

#include "cdyn/error.hpp"
#include "cdyn/labs.hpp"

namespace cdyn::labs {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

cplx grid_point(int k, int m) { return std::polar(1.0, kTwoPi * k / m); }

bool is_monomial(const CircleFunction& f) {
  int nonzero = 0;
  for (int n = -f.bandwidth(); n <= f.bandwidth(); ++n) nonzero += f.coeff(n) != cplx(0.0);
  return nonzero <= 1;
}

void check_pair(const CircleFunction& phi, const CircleFunction& psi, const ShiftWindow& w) {
  for (const CircleFunction* f : {&phi, &psi}) {
    if (std::abs(f->two_norm() - 1.0) > 1e-12) throw PreconditionError("symbols must have two-norm 1");
    if (4 * f->bandwidth() > w.N)
      throw WindowError("bandwidth " + std::to_string(f->bandwidth()) + " exceeds N/4 for N = " +
                        std::to_string(w.N));
  }
}

void check_grids(int zgrid, int xygrid) {
  if (zgrid < 8 || xygrid < 8) throw PreconditionError("circle grids need at least 8 points");
}

// phi, h and conj(psi) on L equispaced points. h and conj(psi) are stored twice
// over, so shifted reads need no wrap-around.
struct SampleSet {
  int L = 0;
  double cos_factor = 1.0;
  std::vector<cplx> phi, h, psibar;

  SampleSet() = default;
  SampleSet(const CircleFunction& phi_, const CircleFunction& h_, const CircleFunction& psi_, int L_, int nq)
      : L(L_), cos_factor(std::cos(std::numbers::pi * nq / L_)), phi(phi_.samples(L_)), h(h_.samples(L_)),
        psibar(psi_.conj().samples(L_)) {
    h.insert(h.end(), h.begin(), h.end());
    psibar.insert(psibar.end(), psibar.begin(), psibar.end());
  }
};

// Shared data for one dichotomy run. Rotations by grid points are index
// shifts on the sample grid, which is a multiple of both grid sizes.
struct DichotomyContext {
  int R = 0;
  int zgrid = 0;
  int xygrid = 0;
  int nq = 0;  // bandwidth bound of every difference symbol
  bool collapse_x = false;
  bool collapse_y = false;
  SampleSet coarse, fine;
  DichotomyTable table;
};

// Rows of candidates that survive the coarse bound are re-bounded on this many
// times as many points before any section norm is taken.
constexpr int kFineFactor = 16;

DichotomyContext make_context(const CircleFunction& phi, const CircleFunction& psi, const ShiftWindow& w,
                              int zgrid, int xygrid) {
  check_grids(zgrid, xygrid);
  check_pair(phi, psi, w);
  const CircleFunction h = phi.conj() * psi;
  DichotomyContext c;
  c.R = w.N - 2 * (phi.bandwidth() + psi.bandwidth());
  c.zgrid = zgrid;
  c.xygrid = xygrid;
  c.nq = phi.bandwidth() + h.bandwidth() + psi.bandwidth();
  const int base = std::lcm(zgrid, xygrid);
  const int want = std::max({64 * c.nq, 16 * std::max(phi.bandwidth(), psi.bandwidth()), 64});
  const int L = base * ((want + base - 1) / base);
  // A monomial psi only contributes a constant phase and a diagonal similarity,
  // so y drops out; likewise x for a monomial phi.
  c.collapse_x = is_monomial(phi);
  c.collapse_y = is_monomial(psi);
  c.coarse = SampleSet(phi, h, psi, L, c.nq);
  c.fine = SampleSet(phi, h, psi, kFineFactor * L, c.nq);

  DichotomyTable& t = c.table;
  t.N = w.N;
  t.zgrid = zgrid;
  t.xygrid = xygrid;
  t.radius = c.R;
  t.samples = c.coarse.L;
  t.sup_phi = phi.sup_norm(L);
  t.sup_psi = psi.sup_norm(L);
  t.eps = truncation_budget({&phi, &psi});
  return c;
}

// h holds two periods.
double omega_at(const std::vector<cplx>& h, int shift) {
  const int L = static_cast<int>(h.size() / 2);
  double best = 0.0;
  for (int j = 0; j < L; ++j) best = std::max(best, std::norm(h[j + shift % L] - h[j]));
  return std::sqrt(best);
}

// Candidates whose upper bound is within kResolution + kRelResolution * bound of
// the running maximum are not evaluated once the pass decision is also settled by
// the bounds; the pass test charges the unresolved gap.
constexpr double kResolution = 1e-10;
constexpr double kRelResolution = 2e-3;

void finish_row(const DichotomyTable& t, DichotomyRow& row, double gap = 0.0) {
  row.bound_rhs = t.sup_phi * t.sup_psi * row.omega + t.eps;
  row.pass = row.d_tilde + gap <= row.bound_rhs;
}

// Coefficients -nq..nq of a sampled symbol.
CircleFunction symbol_from_samples(const std::vector<cplx>& q, int nq, Eigen::FFT<double>& fft) {
  const int L = static_cast<int>(q.size());
  std::vector<cplx> hat;
  fft.fwd(hat, q);
  std::vector<cplx> coeffs(2 * static_cast<std::size_t>(nq) + 1);
  for (int n = -nq; n <= nq; ++n)
    coeffs[static_cast<std::size_t>(n + nq)] = hat[static_cast<std::size_t>((n + L) % L)] / static_cast<double>(L);
  return CircleFunction(std::move(coeffs));
}

// True iff bound^2 I - T*T is positive definite for the section T of q on
// [-R, R], i.e. the section norm is below bound. Banded Cholesky.
bool section_norm_below(const CircleFunction& q, int R, double bound) {
  const int n = 2 * R + 1, b = q.bandwidth(), m = std::min(2 * b, n - 1);
  std::vector<cplx> c(2 * static_cast<std::size_t>(b) + 1);
  for (int d = -b; d <= b; ++d) c[static_cast<std::size_t>(d + b)] = q.coeff(d);
  auto t = [&](int d) { return c[static_cast<std::size_t>(d + b)]; };
  // U(k, i) = conj(L(i, k)) for the Cholesky factor L; column i holds rows i - m..i.
  Mat U = Mat::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = std::max(0, i - m); j <= i; ++j) {
      cplx acc = 0.0;  // (T*T)(j, i)
      for (int k = std::max({0, i - b, j - b}); k <= std::min({n - 1, i + b, j + b}); ++k)
        acc += std::conj(t(k - j)) * t(k - i);
      U(j, i) = (i == j ? cplx(bound * bound) : cplx(0.0)) - acc;
    }
  for (int i = 0; i < n; ++i) {
    const int lo = std::max(0, i - m);
    for (int j = lo; j <= i; ++j) {
      const int k0 = std::max(lo, j - m);
      const cplx dot = U.col(j).segment(k0, j - k0).dot(U.col(i).segment(k0, j - k0));
      const cplx acc = U(j, i) - dot;
      if (j == i) {
        if (!(acc.real() > 0.0)) return false;
        U(i, i) = std::sqrt(acc.real());
      } else {
        U(j, i) = acc / U(j, j).real();
      }
    }
  }
  return true;
}

// q(w) = phi(w) (h(xzw) - h(xw)) conj(psi(xzyw)) on the sample grid, for the
// grid points x = a, y = b, z = k.
void fill_symbol(const DichotomyContext& c, const SampleSet& S, int k, int a, int b, std::vector<cplx>& q) {
  const int L = S.L;
  const int step = L / c.xygrid, sz = (k % c.zgrid) * (L / c.zgrid);
  const int sx = (a * step) % L, sxz = (a * step + sz) % L, sxzy = (a * step + sz + b * step) % L;
  const cplx* hx = S.h.data() + sx;
  const cplx* hxz = S.h.data() + sxz;
  const cplx* py = S.psibar.data() + sxzy;
  q.resize(static_cast<std::size_t>(L));
  for (int j = 0; j < L; ++j) q[j] = S.phi[j] * (hxz[j] - hx[j]) * py[j];
}

// Bernstein-Szego: a degree-n trigonometric polynomial is within a factor
// cos(pi n / L) of its sup-norm at the best of L equispaced samples.
double sup_upper(const std::vector<cplx>& q, const SampleSet& S) {
  double m2 = 0.0;
  for (const cplx& v : q) m2 = std::max(m2, std::norm(v));
  return std::sqrt(m2) / S.cos_factor;
}

DichotomyRow row_at(const DichotomyContext& c, int k) {
  DichotomyRow row;
  row.k = k;
  row.z = grid_point(k, c.zgrid);
  const int L = c.coarse.L;
  const int sz = (k % c.zgrid) * (L / c.zgrid);
  row.omega = omega_at(c.coarse.h, sz);
  if (sz % L == 0 || c.R < 0) {
    finish_row(c.table, row);
    return row;
  }

  // Best-first over (x, y): pop the largest upper bound. A coarse bound is first
  // tightened on the fine grid; a fine bound above the threshold is settled by a
  // Cholesky certificate; what remains gets its section norm.
  enum Stage { kCoarse, kFine, kCertified };
  struct Candidate {
    double upper;
    Stage stage;
    int a, b;
    bool operator<(const Candidate& o) const {
      return upper != o.upper ? upper < o.upper : std::tie(o.a, o.b) < std::tie(a, b);
    }
  };
  const int xs = c.collapse_x ? 1 : c.xygrid, ys = c.collapse_y ? 1 : c.xygrid;
  std::vector<Candidate> heap;
  heap.reserve(static_cast<std::size_t>(xs) * ys);
  std::vector<cplx> q;
  for (int a = 0; a < xs; ++a)
    for (int b = 0; b < ys; ++b) {
      fill_symbol(c, c.coarse, k, a, b, q);
      heap.push_back({sup_upper(q, c.coarse), kCoarse, a, b});
    }
  std::make_heap(heap.begin(), heap.end());

  Eigen::FFT<double> fft;
  const double rhs = c.table.sup_phi * c.table.sup_psi * row.omega + c.table.eps;
  double best = 0.0, gap = 0.0;
  bool exceeded = false;  // some section norm is certified above rhs
  while (!heap.empty()) {
    const double upper = heap.front().upper;
    // The section norm never exceeds the symbol sup.
    const bool resolved = best + kResolution + kRelResolution * upper >= upper;
    const bool decided = exceeded || best > rhs || upper <= rhs;
    if (resolved && decided) {
      gap = std::max(0.0, upper - best);
      break;
    }
    std::pop_heap(heap.begin(), heap.end());
    const Candidate cd = heap.back();
    heap.pop_back();
    if (cd.stage == kCoarse) {
      fill_symbol(c, c.fine, k, cd.a, cd.b, q);
      heap.push_back({std::min(cd.upper, sup_upper(q, c.fine)), kFine, cd.a, cd.b});
      std::push_heap(heap.begin(), heap.end());
      continue;
    }
    fill_symbol(c, c.coarse, k, cd.a, cd.b, q);
    const CircleFunction sym = symbol_from_samples(q, c.nq, fft);
    if (cd.stage == kFine && cd.upper > rhs && !exceeded && best <= rhs) {
      if (section_norm_below(sym, c.R, rhs)) {
        heap.push_back({rhs, kCertified, cd.a, cd.b});
        std::push_heap(heap.begin(), heap.end());
        continue;
      }
      exceeded = true;
    }
    best = std::max(best, toeplitz_section_norm(sym, c.R));
  }
  row.d_tilde = best;
  finish_row(c.table, row, gap);
  if (exceeded) row.pass = false;
  return row;
}

}  // namespace

double toeplitz_section_norm(const CircleFunction& q, int R) {
  if (R < 0) return 0.0;
  const int n = 2 * R + 1;
  const int b = q.bandwidth();
  if (n <= 64) {
    Mat t(n, n);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) t(i, j) = q.coeff(i - j);
    return op_norm(t);
  }
  std::vector<cplx> c(2 * static_cast<std::size_t>(b) + 1);
  for (int m = -b; m <= b; ++m) c[static_cast<std::size_t>(m + b)] = q.coeff(m);
  auto apply = [&](const Vec& v) -> Vec {
    Vec out = Vec::Zero(n);
    for (int i = 0; i < n; ++i) {
      cplx acc = 0.0;
      const int lo = std::max(-b, i - (n - 1)), hi = std::min(b, i);
      for (int m = lo; m <= hi; ++m) acc += c[static_cast<std::size_t>(m + b)] * v(i - m);
      out(i) = acc;
    }
    return out;
  };
  auto apply_adjoint = [&](const Vec& v) -> Vec {
    Vec out = Vec::Zero(n);
    for (int j = 0; j < n; ++j) {
      cplx acc = 0.0;
      const int lo = std::max(-b, -j), hi = std::min(b, n - 1 - j);
      for (int m = lo; m <= hi; ++m) acc += std::conj(c[static_cast<std::size_t>(m + b)]) * v(j + m);
      out(j) = acc;
    }
    return out;
  };
  LanczosOptions opts;
  opts.max_steps = n;
  opts.rel_tol = 1e-10;
  return op_norm_lanczos(n, apply, apply_adjoint, opts);
}

double pair_difference_norm(const CircleFunction& alpha, const CircleFunction& beta, cplx a, cplx a2, cplx c,
                            int R) {
  const CircleFunction k = alpha.conj() * beta;
  const CircleFunction s = alpha * (k.rotate(a) - k.rotate(a2)) * beta.rotate(c).conj();
  return toeplitz_section_norm(s, R);
}

bool DichotomyTable::all_pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const DichotomyRow& r) { return r.pass; });
}

double DichotomyTable::near_one() const { return rows.size() > 1 ? rows[1].d_tilde : 0.0; }

DichotomyTable rc_dichotomy(const CircleFunction& phi, const CircleFunction& psi, const ShiftWindow& w, int zgrid,
                            int xygrid) {
  const DichotomyContext c = make_context(phi, psi, w, zgrid, xygrid);
  DichotomyTable t = c.table;
  t.rows.resize(static_cast<std::size_t>(zgrid));
#pragma omp parallel for schedule(dynamic)
  for (int k = 0; k < zgrid; ++k) t.rows[static_cast<std::size_t>(k)] = row_at(c, k);
  return t;
}

DichotomyRow rc_dichotomy_at(const CircleFunction& phi, const CircleFunction& psi, const ShiftWindow& w, int k,
                             int zgrid, int xygrid) {
  if (k < 0 || k >= zgrid) throw PreconditionError("grid index out of range");
  return row_at(make_context(phi, psi, w, zgrid, xygrid), k);
}

DichotomyTable rc_dichotomy_serial(const CircleFunction& phi, const CircleFunction& psi, const ShiftWindow& w,
                                   int zgrid, int xygrid) {
  check_grids(zgrid, xygrid);
  check_pair(phi, psi, w);
  const Mat p = rank_one_projection(phi, w), q = rank_one_projection(psi, w);
  const int kp = w.N - phi.bandwidth(), kq = w.N - psi.bandwidth();
  const int R = w.N - 2 * (phi.bandwidth() + psi.bandwidth());
  const CircleFunction h = phi.conj() * psi;

  DichotomyTable t;
  t.N = w.N;
  t.zgrid = zgrid;
  t.xygrid = xygrid;
  t.radius = R;
  const int nq = phi.bandwidth() + h.bandwidth() + psi.bandwidth();
  const int base = std::lcm(zgrid, xygrid);
  const int want = std::max({64 * nq, 16 * std::max(phi.bandwidth(), psi.bandwidth()), 64});
  t.samples = base * ((want + base - 1) / base);
  t.sup_phi = phi.sup_norm(t.samples);
  t.sup_psi = psi.sup_norm(t.samples);
  t.eps = truncation_budget({&phi, &psi});

  std::vector<Mat> fq(static_cast<std::size_t>(xygrid));
  for (int b = 0; b < xygrid; ++b) fq[b] = shifted_fourier(q, grid_point(b, xygrid), w, kq);
  for (int k = 0; k < zgrid; ++k) {
    DichotomyRow row;
    row.k = k;
    row.z = grid_point(k, zgrid);
    for (int j = 0; j < t.samples; ++j) {
      const double th = kTwoPi * j / t.samples;
      row.omega = std::max(row.omega, std::abs(h(th + kTwoPi * k / zgrid) - h(th)));
    }
    for (int a = 0; a < xygrid; ++a) {
      const cplx x = grid_point(a, xygrid);
      const Mat fpxz = shifted_fourier(p, x * row.z, w, kp), fpx = shifted_fourier(p, x, w, kp);
      for (int b = 0; b < xygrid; ++b) {
        const Mat fqzy = shifted_fourier(q, row.z * grid_point(b, xygrid), w, kq);
        const Mat diff = fpxz * fq[b] - fpx * fqzy;
        row.d_tilde = std::max(row.d_tilde, op_norm(interior_block(diff, w, R)));
      }
    }
    row.bound_rhs = t.sup_phi * t.sup_psi * row.omega + t.eps;
    row.pass = row.d_tilde <= row.bound_rhs;
    t.rows.push_back(row);
  }
  return t;
}

CubeReport reverse_cube_bound(const CircleFunction& phi, const CircleFunction& psi, const ShiftWindow& w, cplx z) {
  if (std::abs(std::abs(z) - 1.0) > 1e-12) throw DomainError("reverse_cube_bound: z is not on the unit circle");
  check_pair(phi, psi, w);
  const int R = w.N - 2 * (phi.bandwidth() + psi.bandwidth());
  const CircleFunction h = phi.conj() * psi;
  const int m = std::max(64, 16 * (phi.bandwidth() + psi.bandwidth()));
  const std::vector<cplx> h0 = h.samples(m), hz = h.rotate(z).samples(m);

  CubeReport r;
  r.z = z;
  for (int j = 0; j < m; ++j) r.omega = std::max(r.omega, std::abs(hz[j] - h0[j]));
  r.lhs = r.omega * r.omega * r.omega;
  const cplx one = 1.0, zi = std::conj(z);
  // Products F(Q, a)F(P, b): alpha = psi, beta = phi.
  r.terms[0] = pair_difference_norm(psi, phi, one, zi, one, R);
  r.terms[1] = pair_difference_norm(psi, phi, one, zi, zi, R);
  r.terms[2] = pair_difference_norm(psi, phi, z, one, z, R);
  r.terms[3] = pair_difference_norm(psi, phi, z, one, one, R);
  const int sm = std::max(64, 16 * std::max(phi.bandwidth(), psi.bandwidth()));
  r.rhs = phi.sup_norm(sm) * psi.sup_norm(sm) * (r.terms[0] + r.terms[1] + r.terms[2] + r.terms[3]);
  r.eps = truncation_budget({&phi, &psi});
  r.slack = r.rhs - r.lhs;
  return r;
}

PositiveReport positive_decomposition(const std::vector<double>& lambdas, const std::vector<CircleFunction>& phis,
                                      const ShiftWindow& w) {
  if (lambdas.empty() || lambdas.size() != phis.size())
    throw PreconditionError("positive_decomposition: need one weight per function");
  for (double l : lambdas)
    if (!(l > 0.0)) throw PreconditionError("positive_decomposition: weights must be positive");
  for (std::size_t i = 0; i < phis.size(); ++i)
    for (std::size_t j = i + 1; j < phis.size(); ++j)
      if (std::abs(inner(phis[i], phis[j])) > 1e-10)
        throw PreconditionError("positive_decomposition: family is not orthogonal");
  int B = 0;
  for (const auto& f : phis) B = std::max(B, f.bandwidth());
  if (4 * B > w.N) throw WindowError("positive_decomposition: need N >= 4 B");

  const int K = w.N - B, radius = K - B;
  Mat s = Mat::Zero(w.dim(), w.dim());
  CircleFunction symbol;
  std::vector<const CircleFunction*> all;
  for (std::size_t n = 0; n < phis.size(); ++n) {
    s += lambdas[n] * shift_sum(rank_one_projection(phis[n], w), w, K);
    symbol = symbol + (phis[n].conj() * phis[n]).scaled(lambdas[n]);
    all.push_back(&phis[n]);
  }

  PositiveReport r;
  r.laurent_residual = interior_residual(s, laurent_matrix(symbol, w), w, radius);
  // A Laurent operator has norm equal to the sup of its symbol; read the symbol
  // off the central column of the windowed strict sum.
  std::map<int, cplx> read;
  for (int m = -2 * B; m <= 2 * B; ++m) read[m] = s(w.index(m), w.index(0));
  const int samples = std::max(256, 32 * B);
  r.sup_symbol = symbol.sup_norm(samples);
  r.strict_sum_sup = CircleFunction::from_map(read).sup_norm(samples);
  r.section_norm = op_norm(interior_block(s, w, radius));
  r.eps = truncation_budget(all);
  r.agree = std::abs(r.sup_symbol - r.strict_sum_sup) <= r.eps;
  return r;
}

TwistReport delta_twist_demo(const CircleFunction& delta, const CircleFunction& phi, const CircleFunction& psi,
                             const ShiftWindow& w, int zgrid, int xygrid) {
  double defect = 0.0;
  for (const cplx& v : delta.samples(std::max(256, 16 * delta.bandwidth())))
    defect = std::max(defect, std::abs(std::abs(v) - 1.0));
  if (defect > 1e-10) throw PreconditionError("delta_twist_demo: |delta| departs from 1 by " + std::to_string(defect));

  // |delta| = 1 keeps the two-norm up to the truncation tail; rescale only past roundoff.
  auto twist = [&](const CircleFunction& f) {
    const CircleFunction g = delta * f;
    return std::abs(g.two_norm() - 1.0) > 1e-14 ? g.normalized() : g;
  };
  const CircleFunction dphi = twist(phi), dpsi = twist(psi);
  TwistReport r;
  r.plain = rc_dichotomy(phi, psi, w, zgrid, xygrid);
  r.twisted = rc_dichotomy(dphi, dpsi, w, zgrid, xygrid);
  r.mixed = rc_dichotomy(phi, dpsi, w, zgrid, xygrid);

  const Mat t = rank_one_projection(phi, w);
  const Mat ld = laurent_matrix(delta, w);
  const Mat dt = ld * t * ld.adjoint();
  for (int n : {-2, -1, 1, 2}) {
    if (std::abs(n) + phi.bandwidth() + delta.bandwidth() > w.N) continue;
    const Mat lhs = ld * shift_conjugate(t, w, n) * ld.adjoint();
    r.commute_residual = std::max(r.commute_residual, op_norm(lhs - shift_conjugate(dt, w, n)));
  }
  return r;
}

}  // namespace cdyn::labs
