#include "cdyn/rc_diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cdyn/crossed_product.hpp"
#include "cdyn/error.hpp"
#include "cdyn/hilbert_module.hpp"

namespace cdyn {

namespace {

InequalityReport finish(std::string name, std::vector<double> lhs, std::vector<double> rhs) {
  InequalityReport r;
  r.name = std::move(name);
  r.min_slack = lhs.empty() ? 0.0 : rhs[0] - lhs[0];
  for (std::size_t i = 0; i < lhs.size(); ++i) r.min_slack = std::min(r.min_slack, rhs[i] - lhs[i]);
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  return r;
}

InequalityReport skipped(std::string name, std::string why) {
  InequalityReport r;
  r.name = std::move(name);
  r.evaluated = false;
  r.note = std::move(why);
  return r;
}

double positivity_tol(const DynSystem& sys, const Mat& m) { return sys.tol() * std::max(1.0, op_norm(m)); }

}  // namespace

double RcTable::sup() const { return d.empty() ? 0.0 : *std::max_element(d.begin(), d.end()); }

RcTable rc_modulus(const DynSystem& sys, const Mat& p, const Mat& q) {
  const auto& g = sys.group();
  const std::size_t n = sys.order();
  const std::vector<Mat> fp = fourier_table(sys, p);
  const std::vector<Mat> fq = fourier_table(sys, q);
  RcTable out{std::vector<double>(n, 0.0), std::vector<double>(n, 0.0), std::vector<double>(n, 0.0)};
#pragma omp parallel for schedule(dynamic)
  for (std::size_t z = 0; z < n; ++z) {
    double best = 0.0;
    if (z != 0) {
      for (std::size_t x = 0; x < n; ++x) {
        const std::size_t xz = g.mul(x, z);
        for (std::size_t y = 0; y < n; ++y)
          best = std::max(best, op_norm(fp[xz] * fq[y] - fp[x] * fq[g.mul(z, y)]));
      }
    }
    out.d[z] = best;
    out.c1[z] = op_norm(fp[z] * fq[0] - fp[0] * fq[z]);
    out.c2[z] = op_norm(fp[z] * fq[g.inv(z)] - fp[0] * fq[0]);
  }
  return out;
}

RcTable rc_modulus_serial(const DynSystem& sys, const Mat& p, const Mat& q) {
  const auto& g = sys.group();
  const std::size_t n = sys.order();
  RcTable out{std::vector<double>(n, 0.0), std::vector<double>(n, 0.0), std::vector<double>(n, 0.0)};
  for (std::size_t z = 0; z < n; ++z) {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        const Mat diff = fourier_coeff(sys, p, g.mul(x, z)) * fourier_coeff(sys, q, y) -
                         fourier_coeff(sys, p, x) * fourier_coeff(sys, q, g.mul(z, y));
        out.d[z] = std::max(out.d[z], op_norm(diff));
      }
    out.c1[z] = op_norm(fourier_coeff(sys, p, z) * fourier_coeff(sys, q, 0) -
                        fourier_coeff(sys, p, 0) * fourier_coeff(sys, q, z));
    out.c2[z] = op_norm(fourier_coeff(sys, p, z) * fourier_coeff(sys, q, g.inv(z)) -
                        fourier_coeff(sys, p, 0) * fourier_coeff(sys, q, 0));
  }
  return out;
}

InequalityReport rc_chain_inequality(const DynSystem& sys, const Mat& a, const Mat& b) {
  const ColumnOp za = zeta(sys, a), zb = zeta(sys, b);
  const std::vector<double> lhs = rc_modulus(sys, a.adjoint() * a, b.adjoint() * b).d;
  const std::vector<double> m = v_continuity_modulus(sys, lip(za, zb));
  const double scale = column_norm(za) * column_norm(zb);
  std::vector<double> rhs(m.size());
  for (std::size_t z = 0; z < m.size(); ++z) rhs[z] = scale * m[z];
  return finish("chain", lhs, std::move(rhs));
}

InequalityReport hereditary_probe(const DynSystem& sys, const Mat& a, const Mat& b, const Mat& c) {
  const std::string name = "hereditary";
  if (psd_defect(a) > positivity_tol(sys, a)) return skipped(name, "a is not positive");
  if (psd_defect(b - a) > positivity_tol(sys, b)) return skipped(name, "a <= b fails");
  if (psd_defect(c) > positivity_tol(sys, c)) return skipped(name, "c is not positive");

  const Mat a1 = psd_sqrt(a), b1 = psd_sqrt(b), c1 = psd_sqrt(c);
  const Mat t = a1 * pseudo_inverse(b1, 1e-10);
  const double tnorm = op_norm(t);
  const double fit = op_norm(t * b1 - a1);
  const double ftol = 1e-8 * std::max(1.0, op_norm(a1));
  if (fit > ftol || tnorm > 1.0 + 1e-8) {
    std::ostringstream msg;
    msg << "no contraction with T b1 = a1 (fit " << fit << ", ||T|| " << tnorm << ")";
    return skipped(name, msg.str());
  }
  if (sys.algebra().residual(t) > sys.tol() * std::max(1.0, hs_norm(t)))
    return skipped(name, "contraction does not lie in A");

  const std::vector<double> lhs = rc_modulus(sys, a, c).d;
  const std::vector<double> m = v_continuity_modulus(sys, lip(zeta(sys, b1), zeta(sys, c1)));
  const double scale = column_norm(zeta(sys, a1)) * tnorm * column_norm(zeta(sys, c1));
  std::vector<double> rhs(m.size());
  for (std::size_t z = 0; z < m.size(); ++z) rhs[z] = scale * m[z];
  return finish(name, lhs, std::move(rhs));
}

bool RcSuiteReport::all_hold(double tol) const {
  return std::all_of(items.begin(), items.end(), [&](const InequalityReport& r) { return r.holds(tol); });
}

RcSuiteReport rc_property_suite(const DynSystem& sys, const Mat& a, const Mat& b, const Mat& c,
                                const Mat& m, std::size_t w, const ScalarFn& g) {
  const auto& grp = sys.group();
  const std::size_t n = sys.order();
  RcSuiteReport rep;

  const RcTable dac = rc_modulus(sys, a, c), dbc = rc_modulus(sys, b, c);
  const RcTable dab = rc_modulus(sys, a, b);

  {
    const std::vector<double> lhs = rc_modulus(sys, a + b, c).d;
    std::vector<double> rhs(n);
    for (std::size_t z = 0; z < n; ++z) rhs[z] = dac.d[z] + dbc.d[z];
    rep.items.push_back(finish("additivity", lhs, std::move(rhs)));
  }
  {
    const std::vector<double> lhs = rc_modulus(sys, b.adjoint(), a.adjoint()).d;
    std::vector<double> rhs(n);
    for (std::size_t z = 0; z < n; ++z) rhs[z] = dab.d[grp.inv(z)];
    InequalityReport r = finish("adjoint", lhs, rhs);
    r.min_slack = 0.0;
    for (std::size_t z = 0; z < n; ++z) r.min_slack = std::min(r.min_slack, -std::abs(lhs[z] - rhs[z]));
    rep.items.push_back(std::move(r));
  }
  if (m.rows() != sys.dim() || m.cols() != sys.dim()) {
    rep.items.push_back(skipped("multiplier", "m has the wrong shape"));
  } else if (sys.spectral_defect(m, w) > positivity_tol(sys, m)) {
    rep.items.push_back(skipped("multiplier", "m is not in the w-spectral subspace"));
  } else {
    const std::vector<double> lhs = rc_modulus(sys, m * a, b).d;
    const double mn = op_norm(m);
    std::vector<double> rhs(n);
    for (std::size_t z = 0; z < n; ++z) rhs[z] = mn * dab.d[z];
    rep.items.push_back(finish("multiplier", lhs, std::move(rhs)));
  }
  {
    const std::vector<double> lhs = rc_modulus(sys, smooth(sys, a, g), b).d;
    std::vector<cplx> gh(n);
    double ghmax = 0.0;
    for (std::size_t x = 0; x < n; ++x) {
      gh[x] = ghat(sys, g, x);
      ghmax = std::max(ghmax, std::abs(gh[x]));
    }
    const double ua = one_norm_bracket(sys, a, 1, 0).second;
    const double ub = one_norm_bracket(sys, b, 1, 0).second;
    std::vector<double> rhs(n);
    for (std::size_t z = 0; z < n; ++z) {
      double osc = 0.0;
      for (std::size_t x = 0; x < n; ++x) osc = std::max(osc, std::abs(gh[grp.mul(x, z)] - gh[x]));
      rhs[z] = osc * ua * ub + ghmax * dab.d[z];
    }
    rep.items.push_back(finish("smoothing", lhs, std::move(rhs)));
  }
  const Mat ah = a.adjoint() * a;
  rep.items.push_back(hereditary_probe(sys, ah, ah + b.adjoint() * b, c.adjoint() * c));
  return rep;
}

std::vector<double> strict_continuity_modulus(const DynSystem& sys, const Mat& a, const Mat& b) {
  sys.check_square(b);
  const auto& g = sys.group();
  const std::size_t n = sys.order();
  const std::vector<Mat> fa = fourier_table(sys, a);
  std::vector<Mat> fab(n);
  for (std::size_t x = 0; x < n; ++x) fab[x] = fa[x] * b;
  std::vector<double> out(n, 0.0);
  for (std::size_t z = 1; z < n; ++z)
    for (std::size_t x = 0; x < n; ++x) out[z] = std::max(out[z], op_norm(fab[g.mul(z, x)] - fab[x]));
  return out;
}

}  // namespace cdyn
