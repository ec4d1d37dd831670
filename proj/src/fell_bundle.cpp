#include "cdyn/fell_bundle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cdyn/crossed_product.hpp"
#include "cdyn/error.hpp"
#include "cdyn/hilbert_module.hpp"

namespace cdyn {

namespace {

// Grow span(mats) by `step` until the dimension is stable.
template <class Step>
Subspace close_span(const DynSystem& sys, std::vector<Mat> seed, Step step, int* rounds_out) {
  const Eigen::Index d = sys.dim();
  Subspace s = span_of(d, d, seed);
  const int cap = static_cast<int>(d * d) + 1;
  for (int round = 1; round <= cap; ++round) {
    std::vector<Mat> mats = s.basis();
    step(s.basis(), mats);
    Subspace next = span_of(d, d, mats);
    if (next.dim() == s.dim()) {
      if (rounds_out) *rounds_out = round;
      return s;
    }
    s = std::move(next);
  }
  throw NumericError("span closure did not stabilise within d^2 rounds");
}

double fiber_tol(const DynSystem& sys, const Mat& m) { return sys.tol() * std::max(1.0, hs_norm(m)); }

}  // namespace

std::size_t FellBundle::total_dim() const {
  std::size_t n = 0;
  for (const auto& f : fibers_) n += f.dim();
  return n;
}

FellBundle build_bundle(const DynSystem& sys, const std::vector<Mat>& w) {
  if (w.empty()) throw PreconditionError("build_bundle: generating set is empty");
  std::vector<Mat> seed;
  for (const Mat& a : w) {
    sys.check_square(a);
    seed.push_back(a);
    seed.push_back(a.adjoint());
  }
  const std::size_t n = sys.order();

  FellBundle b;
  b.sys_ = &sys;
  b.generators_ = w;
  b.hull_ = close_span(
      sys, seed,
      [&](const std::vector<Mat>& basis, std::vector<Mat>& out) {
        for (const Mat& m : basis)
          for (std::size_t x = 0; x < n; ++x) {
            const Mat f = fourier_coeff(sys, m, x);
            for (const Mat& s : basis) {
              out.push_back(f * s);
              out.push_back(s * f);
            }
          }
      },
      &b.rounds_);

  // One threshold for every fiber: a fiber that only sees roundoff must come out empty.
  std::vector<std::vector<Mat>> coeffs(n);
  double scale = 0.0;
  for (std::size_t x = 0; x < n; ++x)
    for (const Mat& s : b.hull_.basis()) {
      coeffs[x].push_back(fourier_coeff(sys, s, x));
      scale = std::max(scale, coeffs[x].back().norm());
    }
  for (std::size_t x = 0; x < n; ++x) b.fibers_.push_back(span_of(sys.dim(), sys.dim(), coeffs[x], 1e-9 * scale));
  return b;
}

Subspace generated_algebra(const DynSystem& sys, const std::vector<Mat>& w) {
  return close_span(
      sys, w,
      [&](const std::vector<Mat>& basis, std::vector<Mat>& out) {
        for (const Mat& m : basis) {
          out.push_back(m.adjoint());
          for (std::size_t t = 1; t < sys.order(); ++t) out.push_back(sys.alpha(t, m));
          for (const Mat& s : basis) out.push_back(m * s);
        }
      },
      nullptr);
}

double BundleAxiomsReport::max() const { return std::max({product, involution, spectral}); }

BundleAxiomsReport bundle_axioms(const FellBundle& b) {
  const DynSystem& sys = b.system();
  const auto& g = sys.group();
  const std::size_t n = sys.order();
  BundleAxiomsReport r;
  for (std::size_t x = 0; x < n; ++x) {
    const Subspace& bx = b.fiber(x);
    for (const Mat& u : bx.basis()) {
      r.involution = std::max(r.involution, b.fiber(g.inv(x)).residual(u.adjoint()));
      r.spectral = std::max(r.spectral, sys.spectral_defect(u, x));
      for (std::size_t y = 0; y < n; ++y) {
        const Subspace& bxy = b.fiber(g.mul(x, y));
        for (const Mat& v : b.fiber(y).basis()) r.product = std::max(r.product, bxy.residual(u * v));
      }
    }
  }
  return r;
}

Section fourier_section(const FellBundle& b, const Mat& a) { return Section{fourier_table(b.system(), a)}; }

Section random_section(const FellBundle& b, std::mt19937_64& rng) {
  std::normal_distribution<double> nd;
  const Eigen::Index d = b.system().dim();
  Section s;
  for (const Subspace& f : b.fibers()) {
    Mat v = Mat::Zero(d, d);
    for (const Mat& e : f.basis()) v += cplx(nd(rng), nd(rng)) * e;
    s.values.push_back(v);
  }
  return s;
}

Section convolve_sections(const FellBundle& b, const Section& s1, const Section& s2) {
  const auto& g = b.system().group();
  const std::size_t n = g.order();
  if (s1.values.size() != n || s2.values.size() != n) throw StructuralError("section has the wrong length");
  const Eigen::Index d = b.system().dim();
  Section out{std::vector<Mat>(n, Mat::Zero(d, d))};
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) out.values[x] += s1.values[y] * s2.values[g.mul(g.inv(y), x)];
    out.values[x] /= static_cast<double>(n);
  }
  return out;
}

Section section_adjoint(const FellBundle& b, const Section& s) {
  const auto& g = b.system().group();
  if (s.values.size() != g.order()) throw StructuralError("section has the wrong length");
  Section out{std::vector<Mat>(g.order())};
  for (std::size_t x = 0; x < g.order(); ++x) out.values[x] = s.values[g.inv(x)].adjoint();
  return out;
}

Mat kappa(const FellBundle& b, const Section& s) {
  const DynSystem& sys = b.system();
  const std::size_t n = sys.order();
  if (s.values.size() != n) throw StructuralError("kappa: section must cover the whole dual");
  Mat acc = Mat::Zero(sys.dim(), sys.dim());
  for (std::size_t x = 0; x < n; ++x) {
    const Mat& v = s.values[x];
    sys.check_square(v);
    const double res = b.fiber(x).residual(v);
    if (res > fiber_tol(sys, v))
      throw StructuralError("kappa: section value at dual index " + std::to_string(x) +
                            " is not in its fiber (residual " + std::to_string(res) + ")");
    acc += v;
  }
  return acc / static_cast<double>(n);
}

CovarianceReport covariance_check(const FellBundle& b, const Section& s, std::size_t t) {
  const DynSystem& sys = b.system();
  const std::size_t n = sys.order();
  Section twisted = s;
  for (std::size_t x = 0; x < n; ++x) twisted.values[x] *= std::conj(sys.group().pairing_at(x, t));

  CovarianceReport r;
  r.residual = op_norm(sys.alpha(t, kappa(b, s)) - kappa(b, twisted));

  std::vector<Mat> all;
  for (const Subspace& f : b.fibers())
    for (const Mat& e : f.basis()) all.push_back(e);
  const Subspace image = span_of(sys.dim(), sys.dim(), all);
  const Subspace alg = generated_algebra(sys, b.generators());
  r.kappa_span_dim = image.dim();
  r.algebra_dim = alg.dim();
  r.span_mismatch = mutual_residual(image, alg);
  return r;
}

double diagram_check(const FellBundle& b, const Mat& a, const ScalarFn& g) {
  const DynSystem& sys = b.system();
  const auto& grp = sys.group();
  const std::size_t n = sys.order();
  const Eigen::Index d = sys.dim();
  const auto nd = static_cast<Eigen::Index>(n) * d;
  const Mat ap = smooth(sys, a, g);

  // (F xi)(x) = |G|^{-1/2} sum_t conj<x,t> xi(t)
  Mat fourier = Mat::Zero(nd, nd);
  const double norm = 1.0 / std::sqrt(static_cast<double>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t t = 0; t < n; ++t)
      fourier.block(static_cast<Eigen::Index>(x) * d, static_cast<Eigen::Index>(t) * d, d, d) =
          (norm * std::conj(grp.pairing_at(x, t))) * Mat::Identity(d, d);
  const Mat lhs = fourier * pi(sys, ap).matrix() * fourier.adjoint();

  // (kappa x lambda)(eta) = (1/|G|) sum_x eta(x) (x) lambda_x, lambda_x e_w = e_{xw}
  const std::vector<Mat> eta = fourier_table(sys, ap);
  Mat rhs = Mat::Zero(nd, nd);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t w = 0; w < n; ++w)
      rhs.block(static_cast<Eigen::Index>(grp.mul(x, w)) * d, static_cast<Eigen::Index>(w) * d, d, d) +=
          eta[x] / static_cast<double>(n);
  return op_norm(lhs - rhs);
}

MoritaReport morita_report(const FellBundle& b) {
  const DynSystem& sys = b.system();
  const Eigen::Index d = sys.dim();
  MoritaReport r;

  const auto& hull = b.hull().basis();
  std::vector<Mat> rips;
  for (const Mat& x : hull)
    for (const Mat& y : hull) {
      const Mat ip = rip(sys, x, y);
      rips.push_back(ip);
      r.rip_fourier = std::max(r.rip_fourier, op_norm(ip - fourier_coeff(sys, x.adjoint() * y, 0)));
    }
  const Subspace rip_span = span_of(d, d, rips);
  r.rip_span_dim = rip_span.dim();
  r.unit_fiber_dim = b.fiber(0).dim();
  r.rip_vs_unit_fiber = mutual_residual(rip_span, b.fiber(0));

  const auto& abasis = sys.algebra().basis();
  std::vector<Mat> cols;
  for (const Mat& e : abasis) cols.push_back(zeta(sys, e).as_matrix());
  std::vector<Mat> lips;
  for (const Mat& x : cols)
    for (const Mat& y : cols) lips.push_back(x * y.adjoint());
  const Eigen::Index nd = cols.front().rows();
  const Subspace lip_span = span_of(nd, nd, lips);
  r.lip_span_dim = lip_span.dim();

  std::vector<Mat> left;
  for (const Mat& e : abasis) left.push_back(pi(sys, e).matrix());
  for (std::size_t j = 0; j < sys.group().rank(); ++j)
    left.push_back(lambda_op(sys, sys.group().generator(j)).matrix());
  for (const Mat& p : left)
    for (const Mat& l : lip_span.basis()) r.left_ideal = std::max(r.left_ideal, lip_span.residual(p * l));
  return r;
}

}  // namespace cdyn
