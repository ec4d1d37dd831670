#include <algorithm>
#include <cmath>
#include <numbers>

#include "cdyn/crossed_product.hpp"
#include "cdyn/error.hpp"
#include "cdyn/fell_bundle.hpp"
#include "cdyn/hilbert_module.hpp"
#include "cdyn/labs.hpp"

namespace cdyn::labs {

bool ProperActionReport::ok(double tol) const {
  return fixed_dim == static_cast<std::size_t>(k) && rip_span_dim == fixed_dim && orbit_defect <= tol &&
         rip_mismatch <= tol && left_ideal <= tol && crossed_dim == crossed_dim_expected;
}

ProperActionReport proper_free_action_report(int n, int k) {
  if (n < 1 || k < 1) throw PreconditionError("proper_free_action_report: need n, k >= 1");
  const FiniteAbelianGroup g({n});
  const Eigen::Index d = static_cast<Eigen::Index>(n) * k;
  // Point (p, i) of Z_n x {1..k} sits at index p k + i.
  std::vector<Mat> u;
  for (int t = 0; t < n; ++t) {
    Mat m = Mat::Zero(d, d);
    for (int p = 0; p < n; ++p)
      for (int i = 0; i < k; ++i) m(((p + t) % n) * k + i, p * k + i) = 1.0;
    u.push_back(m);
  }
  const DynSystem sys(g, u, make_algebra(d, AlgebraKind::Diagonal));
  const auto& basis = sys.algebra().basis();

  ProperActionReport r;
  r.n = n;
  r.k = k;
  std::vector<Mat> fixed;
  for (const Mat& f : basis) fixed.push_back(fourier_coeff(sys, f, 0));
  const Subspace fix = span_of(d, d, fixed);
  r.fixed_dim = fix.dim();
  for (const Mat& e : fix.basis()) {
    Mat off = e;
    off.diagonal().setZero();
    r.orbit_defect = std::max(r.orbit_defect, off.cwiseAbs().maxCoeff());
    for (int p = 0; p < n; ++p)
      for (int i = 0; i < k; ++i) r.orbit_defect = std::max(r.orbit_defect, std::abs(e(p * k + i, p * k + i) - e(i, i)));
  }

  std::vector<Mat> rips;
  for (const Mat& a : basis)
    for (const Mat& b : basis) rips.push_back(rip(sys, a, b));
  const Subspace rs = span_of(d, d, rips);
  r.rip_span_dim = rs.dim();
  r.rip_mismatch = mutual_residual(rs, fix);

  const MoritaReport mr = morita_report(build_bundle(sys, basis));
  r.left_ideal = mr.left_ideal;

  std::vector<Mat> cross;
  for (const Mat& a : basis)
    for (std::size_t t = 0; t < sys.order(); ++t) cross.push_back((pi(sys, a) * lambda_op(sys, t)).matrix());
  r.crossed_dim = span_of(cross).dim();
  r.crossed_dim_expected = static_cast<std::size_t>(n) * static_cast<std::size_t>(d);
  return r;
}

namespace {

// ft(x) = sum_j f(j) x^-j
cplx transform(const ZFunction& f, cplx x) {
  cplx acc = 0.0;
  for (const auto& [j, v] : f) acc += v * std::pow(x, -j);
  return acc;
}

int radius_of(const ZFunction& f) {
  int r = 0;
  for (const auto& [j, v] : f)
    if (v != cplx(0.0)) r = std::max(r, std::abs(j));
  return r;
}

// Diagonal of the windowed F(f, x) = sum_{|n| <= K} x^n alpha_n(f).
Vec windowed_fourier(const ZFunction& f, cplx x, int N, int K) {
  Vec out = Vec::Zero(2 * N + 1);
  for (int n = -K; n <= K; ++n) {
    const cplx xn = std::pow(x, n);
    for (const auto& [j, v] : f)
      if (std::abs(j + n) <= N) out(j + n + N) += xn * v;
  }
  return out;
}

}  // namespace

TranslationReport translation_on_Z_report(int N, const std::vector<ZFunction>& fs, int zgrid, int xygrid) {
  if (fs.empty()) throw PreconditionError("translation_on_Z_report: no functions given");
  if (zgrid < 1 || xygrid < 1) throw PreconditionError("translation_on_Z_report: grids must be non-empty");
  int s = 0;
  for (const ZFunction& f : fs) s = std::max(s, radius_of(f));
  if (2 * s > N) throw WindowError("translation_on_Z_report: supports must lie in [-N/2, N/2]");

  TranslationReport rep;
  rep.N = N;
  rep.K = N - s;
  rep.radius = rep.K - s;
  const double two_pi = 2.0 * std::numbers::pi;
  auto point = [&](int k, int m) { return std::polar(1.0, two_pi * k / m); };

  std::vector<std::vector<Vec>> table(fs.size());
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (int a = 0; a < xygrid; ++a) table[i].push_back(windowed_fourier(fs[i], point(a, xygrid), N, rep.K));

  for (std::size_t fi = 0; fi < fs.size(); ++fi)
    for (std::size_t gi = 0; gi < fs.size(); ++gi) {
      const ZFunction& f = fs[fi];
      const ZFunction& g = fs[gi];
      double lf = 0.0, nf = 0.0, lg = 0.0, ng = 0.0;
      for (const auto& [j, v] : f) lf += std::abs(j) * std::abs(v), nf += std::abs(v);
      for (const auto& [j, v] : g) lg += std::abs(j) * std::abs(v), ng += std::abs(v);
      for (int k = 0; k < zgrid; ++k) {
        TranslationRow row;
        row.f = fi;
        row.g = gi;
        row.k = k;
        row.z = point(k, zgrid);
        for (int a = 0; a < xygrid; ++a) {
          const cplx x = point(a, xygrid);
          const Vec fxz = windowed_fourier(f, x * row.z, N, rep.K);
          for (int b = 0; b < xygrid; ++b) {
            const cplx y = point(b, xygrid);
            const Vec gzy = windowed_fourier(g, row.z * y, N, rep.K);
            const Vec diff = fxz.cwiseProduct(table[gi][b]) - table[fi][a].cwiseProduct(gzy);
            if (rep.radius >= 0)
              row.d_tilde = std::max(row.d_tilde, diff.segment(N - rep.radius, 2 * rep.radius + 1).cwiseAbs().maxCoeff());
            row.closed_form = std::max(
                row.closed_form, std::abs(transform(f, x * row.z) * transform(g, y) - transform(f, x) * transform(g, row.z * y)));
          }
        }
        row.lipschitz = std::abs(1.0 - row.z) * (lf * ng + nf * lg);
        rep.max_closed_form_gap = std::max(rep.max_closed_form_gap, std::abs(row.d_tilde - row.closed_form));
        if (row.d_tilde > row.lipschitz + 1e-12) rep.lipschitz_holds = false;
        rep.rows.push_back(row);
      }
    }
  return rep;
}

}  // namespace cdyn::labs
