#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <unsupported/Eigen/FFT>

#include "cdyn/error.hpp"
#include "cdyn/labs.hpp"

namespace cdyn::labs {

namespace {

void check_unimodular(cplx a, const char* what) {
  if (std::abs(std::abs(a) - 1.0) > 1e-12)
    throw DomainError(std::string(what) + ": point is not on the unit circle");
}

void check_window(const ShiftWindow& w) {
  if (w.N < 0) throw WindowError("window size N must be non-negative");
}

}  // namespace

CircleFunction::CircleFunction(std::vector<cplx> coeffs, double tail) : c_(std::move(coeffs)), tail_(tail) {
  if (c_.size() % 2 == 0) throw StructuralError("CircleFunction: coefficient list must have odd length");
  for (const cplx& v : c_)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw NumericError("CircleFunction: non-finite coefficient");
  bw_ = static_cast<int>(c_.size() / 2);
  trim();
}

CircleFunction CircleFunction::from_map(const std::map<int, cplx>& coeffs, double tail) {
  int b = 0;
  for (const auto& [n, v] : coeffs) b = std::max(b, std::abs(n));
  std::vector<cplx> c(2 * static_cast<std::size_t>(b) + 1, 0.0);
  for (const auto& [n, v] : coeffs) c[static_cast<std::size_t>(n + b)] += v;
  return CircleFunction(std::move(c), tail);
}

CircleFunction CircleFunction::monomial(int n, cplx c) { return from_map({{n, c}}); }

void CircleFunction::trim() {
  int b = bw_;
  while (b > 0 && c_[static_cast<std::size_t>(bw_ - b)] == cplx(0.0) &&
         c_[static_cast<std::size_t>(bw_ + b)] == cplx(0.0))
    --b;
  if (b == bw_) return;
  c_ = std::vector<cplx>(c_.begin() + (bw_ - b), c_.begin() + (bw_ + b + 1));
  bw_ = b;
}

cplx CircleFunction::coeff(int n) const {
  return std::abs(n) <= bw_ ? c_[static_cast<std::size_t>(n + bw_)] : cplx(0.0);
}

double CircleFunction::two_norm() const {
  double s = 0.0;
  for (const cplx& v : c_) s += std::norm(v);
  return std::sqrt(s);
}

cplx CircleFunction::operator()(double theta) const {
  cplx acc = 0.0;
  for (int n = -bw_; n <= bw_; ++n) acc += coeff(n) * std::polar(1.0, n * theta);
  return acc;
}

std::vector<cplx> CircleFunction::samples(int m) const {
  if (m <= 0) throw PreconditionError("samples: grid size must be positive");
  // Folding the coefficients mod m is exact on the m-point grid.
  std::vector<cplx> buf(static_cast<std::size_t>(m), 0.0);
  for (int n = -bw_; n <= bw_; ++n) buf[static_cast<std::size_t>(((n % m) + m) % m)] += coeff(n);
  Eigen::FFT<double> fft;
  fft.SetFlag(Eigen::FFT<double>::Unscaled);
  std::vector<cplx> out;
  fft.inv(out, buf);
  return out;
}

double CircleFunction::sup_norm(int m) const {
  if (m == 0) m = std::max(16 * bw_, 64);
  double s = 0.0;
  for (const cplx& v : samples(m)) s = std::max(s, std::abs(v));
  return s;
}

CircleFunction CircleFunction::conj() const {
  std::vector<cplx> c(c_.size());
  for (int n = -bw_; n <= bw_; ++n) c[static_cast<std::size_t>(n + bw_)] = std::conj(coeff(-n));
  return CircleFunction(std::move(c), tail_);
}

CircleFunction CircleFunction::rotate(cplx a) const {
  check_unimodular(a, "rotate");
  std::vector<cplx> c(c_.size());
  for (int n = -bw_; n <= bw_; ++n) c[static_cast<std::size_t>(n + bw_)] = coeff(n) * std::pow(a, n);
  return CircleFunction(std::move(c), tail_);
}

CircleFunction CircleFunction::normalized() const {
  const double nrm = two_norm();
  if (nrm == 0.0) throw PreconditionError("cannot normalize the zero function");
  return scaled(1.0 / nrm);
}

CircleFunction CircleFunction::scaled(cplx s) const {
  std::vector<cplx> c = c_;
  for (cplx& v : c) v *= s;
  return CircleFunction(std::move(c), tail_ * std::abs(s));
}

CircleFunction operator*(const CircleFunction& f, const CircleFunction& g) {
  const int b = f.bw_ + g.bw_;
  std::vector<cplx> c(2 * static_cast<std::size_t>(b) + 1, 0.0);
  for (int i = -f.bw_; i <= f.bw_; ++i)
    for (int j = -g.bw_; j <= g.bw_; ++j) c[static_cast<std::size_t>(i + j + b)] += f.coeff(i) * g.coeff(j);
  return CircleFunction(std::move(c), std::max(f.tail_, g.tail_));
}

CircleFunction operator+(const CircleFunction& f, const CircleFunction& g) {
  const int b = std::max(f.bw_, g.bw_);
  std::vector<cplx> c(2 * static_cast<std::size_t>(b) + 1);
  for (int n = -b; n <= b; ++n) c[static_cast<std::size_t>(n + b)] = f.coeff(n) + g.coeff(n);
  return CircleFunction(std::move(c), std::max(f.tail_, g.tail_));
}

CircleFunction operator-(const CircleFunction& f, const CircleFunction& g) { return f + g.scaled(-1.0); }

cplx inner(const CircleFunction& f, const CircleFunction& g) {
  cplx acc = 0.0;
  const int b = std::min(f.bandwidth(), g.bandwidth());
  for (int n = -b; n <= b; ++n) acc += std::conj(f.coeff(n)) * g.coeff(n);
  return acc;
}

double truncation_budget(const std::vector<const CircleFunction*>& fs) {
  double t = 0.0;
  for (const CircleFunction* f : fs) t = std::max(t, f->tail());
  return 10.0 * t + 1e-9;
}

// --- Fixtures -----------------------------------------------------------------

CircleFunction step_function(int B) {
  if (B < 1) throw PreconditionError("step_function: bandwidth must be at least 1");
  std::map<int, cplx> c;
  double kept = 0.0;
  for (int k = -B; k <= B; ++k) {
    if (k % 2 == 0) continue;
    const cplx v(0.0, -2.0 / (std::numbers::pi * k));
    c[k] = v;
    kept += std::norm(v);
  }
  // sign(Im w) has two-norm 1, so the dropped part has norm sqrt(1 - kept).
  const double tail = std::sqrt(std::max(0.0, 1.0 - kept));
  for (auto& [k, v] : c) v /= std::sqrt(kept);
  return CircleFunction::from_map(c, tail);
}

CircleFunction phase_step(int b, double kappa, int bandwidth) {
  if (b < 1 || bandwidth < b) throw PreconditionError("phase_step: need 1 <= b <= bandwidth");
  int m = 4096;
  while (m < 16 * bandwidth) m *= 2;
  std::map<int, cplx> sc;
  for (int k = -b; k <= b; ++k)
    if (k % 2 != 0) sc[k] = cplx(0.0, -2.0 / (std::numbers::pi * k));
  const std::vector<cplx> s = CircleFunction::from_map(sc).samples(m);
  std::vector<cplx> e(s.size());
  for (std::size_t j = 0; j < s.size(); ++j) e[j] = std::polar(1.0, kappa * s[j].real());
  Eigen::FFT<double> fft;
  std::vector<cplx> hat;
  fft.fwd(hat, e);
  std::map<int, cplx> c;
  double tail2 = 0.0;
  for (int j = 0; j < m; ++j) {
    const int n = j <= m / 2 ? j : j - m;
    const cplx v = hat[static_cast<std::size_t>(j)] / static_cast<double>(m);
    if (std::abs(n) <= bandwidth)
      c[n] = v;
    else
      tail2 += std::norm(v);
  }
  return CircleFunction::from_map(c, std::sqrt(tail2));
}

CircleFunction smooth_phi() {
  std::map<int, cplx> c;
  for (int n = -8; n <= 8; ++n) c[n] = std::pow(0.12, std::abs(n)) * std::polar(1.0, 0.7 * n);
  return CircleFunction::from_map(c).normalized();
}

CircleFunction smooth_psi() {
  std::map<int, cplx> c;
  for (int n = -8; n <= 8; ++n) c[n] = std::pow(0.1, std::abs(n)) * (n >= 0 ? 1.0 : 0.5) * std::polar(1.0, -0.3 * n);
  return CircleFunction::from_map(c).normalized();
}

CircleFunction named_fixture(const std::string& name, const ShiftWindow& w) {
  if (name.size() > 1 && name[0] == 'e') {
    int n = 0;
    const char* end = name.data() + name.size();
    const auto [ptr, ec] = std::from_chars(name.data() + 1, end, n);
    if (ec == std::errc() && ptr == end) return CircleFunction::monomial(n);
  }
  if (name == "smooth-phi") return smooth_phi();
  if (name == "smooth-psi") return smooth_psi();
  if (name == "wide") return CircleFunction::from_map({{0, 1.0}, {8, 1.0}}).normalized();
  if (name == "step") return step_function(std::max(1, w.N / 8));
  if (name == "phase-step") return phase_step(3, std::numbers::pi / 2, 32);
  throw PreconditionError("unknown circle fixture '" + name + "'");
}

// --- Windowed operators ---------------------------------------------------------

Mat rank_one_projection(const CircleFunction& phi, const ShiftWindow& w) {
  check_window(w);
  if (std::abs(phi.two_norm() - 1.0) > 1e-12)
    throw PreconditionError("rank_one_projection: phi must have two-norm 1");
  if (phi.bandwidth() > w.N) throw WindowError("rank_one_projection: bandwidth exceeds the window");
  Vec v = Vec::Zero(w.dim());
  for (int n = -phi.bandwidth(); n <= phi.bandwidth(); ++n) v(w.index(n)) = phi.coeff(n);
  return v * v.adjoint();
}

Mat shift_conjugate(const Mat& t, const ShiftWindow& w, int k) {
  const Eigen::Index d = w.dim();
  if (t.rows() != d || t.cols() != d) throw StructuralError("shift_conjugate: matrix does not fit the window");
  Mat out = Mat::Zero(d, d);
  const Eigen::Index len = d - std::abs(k);
  if (len <= 0) return out;
  const Eigen::Index src = k >= 0 ? 0 : -k, dst = k >= 0 ? k : 0;
  out.block(dst, dst, len, len) = t.block(src, src, len, len);
  return out;
}

int support_radius(const Mat& t, const ShiftWindow& w) {
  if (t.rows() != w.dim() || t.cols() != w.dim()) throw StructuralError("support_radius: matrix does not fit the window");
  int r = 0;
  for (Eigen::Index j = 0; j < t.cols(); ++j)
    for (Eigen::Index i = 0; i < t.rows(); ++i)
      if (t(i, j) != cplx(0.0))
        r = std::max({r, std::abs(static_cast<int>(i) - w.N), std::abs(static_cast<int>(j) - w.N)});
  return r;
}

namespace {

Mat weighted_shift_sum(const Mat& p, cplx z, const ShiftWindow& w, int K, const char* what) {
  check_window(w);
  const int b = support_radius(p, w);
  if (K < 0) throw PreconditionError(std::string(what) + ": K must be non-negative");
  if (K > w.N - b)
    throw WindowError(std::string(what) + ": K = " + std::to_string(K) + " exceeds N - support = " +
                      std::to_string(w.N - b));
  const Eigen::Index s = 2 * b + 1;
  const Mat core = p.block(w.index(-b), w.index(-b), s, s);
  Mat out = Mat::Zero(w.dim(), w.dim());
  for (int k = -K; k <= K; ++k) out.block(w.index(k - b), w.index(k - b), s, s) += std::pow(z, k) * core;
  return out;
}

}  // namespace

Mat shift_sum(const Mat& p, const ShiftWindow& w, int K) { return weighted_shift_sum(p, 1.0, w, K, "shift_sum"); }

Mat shifted_fourier(const Mat& p, cplx z, const ShiftWindow& w, int K) {
  check_unimodular(z, "shifted_fourier");
  return weighted_shift_sum(p, z, w, K, "shifted_fourier");
}

Mat laurent_matrix(const CircleFunction& f, const ShiftWindow& w) {
  check_window(w);
  Mat out(w.dim(), w.dim());
  for (int j = -w.N; j <= w.N; ++j)
    for (int i = -w.N; i <= w.N; ++i) out(w.index(i), w.index(j)) = f.coeff(i - j);
  return out;
}

Mat fourier_closed_form(const CircleFunction& phi, cplx z, const ShiftWindow& w) {
  check_window(w);
  check_unimodular(z, "fourier_closed_form");
  const int b = phi.bandwidth();
  Mat out = Mat::Zero(w.dim(), w.dim());
  for (int j = -w.N; j <= w.N; ++j)
    for (int i = -w.N; i <= w.N; ++i) {
      cplx acc = 0.0;
      for (int n = std::max(i, j) - b; n <= std::min(i, j) + b; ++n)
        acc += std::pow(z, n) * phi.coeff(i - n) * std::conj(phi.coeff(j - n));
      out(w.index(i), w.index(j)) = acc;
    }
  return out;
}

Mat interior_block(const Mat& a, const ShiftWindow& w, int radius) {
  if (radius > w.N) throw WindowError("interior radius exceeds the window");
  if (radius < 0) return Mat(0, 0);
  return a.block(w.index(-radius), w.index(-radius), 2 * radius + 1, 2 * radius + 1);
}

double interior_residual(const Mat& a, const Mat& b, const ShiftWindow& w, int radius) {
  if (a.rows() != w.dim() || b.rows() != w.dim() || a.cols() != w.dim() || b.cols() != w.dim())
    throw StructuralError("interior_residual: matrices do not fit the window");
  if (radius < 0) return 0.0;
  return (interior_block(a, w, radius) - interior_block(b, w, radius)).cwiseAbs().maxCoeff();
}

ShiftSumReport shift_sum_check(const CircleFunction& phi, const ShiftWindow& w, int K) {
  const Mat p = rank_one_projection(phi, w);
  ShiftSumReport r;
  r.N = w.N;
  r.K = K;
  r.radius = K - phi.bandwidth();
  r.residual = interior_residual(shift_sum(p, w, K), laurent_matrix(phi.conj() * phi, w), w, r.radius);
  return r;
}

FourierShiftReport fourier_coeff_shift(const CircleFunction& phi, cplx z, const ShiftWindow& w) {
  check_unimodular(z, "fourier_coeff_shift");
  const Mat p = rank_one_projection(phi, w);
  FourierShiftReport r;
  r.z = z;
  r.K = w.N - phi.bandwidth();
  r.radius = r.K - phi.bandwidth();
  r.residual = interior_residual(shifted_fourier(p, z, w, r.K), fourier_closed_form(phi, z, w), w, r.radius);
  return r;
}

}  // namespace cdyn::labs
