#include "cdyn/crossed_product.hpp"

#include <algorithm>
#include <sstream>

#include "cdyn/error.hpp"
#include "cdyn/hilbert_module.hpp"

namespace cdyn {

namespace {

void check_symbol(const DynSystem& sys, const Symbol& f) {
  if (f.values.size() != sys.order()) throw StructuralError("symbol needs one value per group element");
  for (const Mat& m : f.values) sys.check_square(m);
}

}  // namespace

BigOp pi(const DynSystem& sys, const Mat& a) {
  sys.check_square(a);
  BigOp out = BigOp::zero(sys);
  for (std::size_t t = 0; t < sys.order(); ++t) out.set_block(t, t, sys.alpha(sys.group().inv(t), a));
  return out;
}

BigOp lambda_op(const DynSystem& sys, std::size_t t) {
  const auto& g = sys.group();
  const Mat id = Mat::Identity(sys.dim(), sys.dim());
  BigOp out = BigOp::zero(sys);
  for (std::size_t r = 0; r < sys.order(); ++r) out.set_block(r, g.mul(g.inv(t), r), id);
  return out;
}

BigOp lambda_op(const DynSystem& sys, const GroupElement& t) {
  return lambda_op(sys, sys.group().index_of(t));
}

BigOp rho(const DynSystem& sys, const Symbol& f) {
  check_symbol(sys, f);
  const auto& g = sys.group();
  BigOp out = BigOp::zero(sys);
  for (std::size_t t = 0; t < sys.order(); ++t)
    for (std::size_t s = 0; s < sys.order(); ++s)
      out.set_block(t, s, sys.alpha(g.inv(t), f.values[g.mul(t, g.inv(s))]));
  return out;
}

Symbol convolve(const DynSystem& sys, const Symbol& f, const Symbol& h) {
  check_symbol(sys, f);
  check_symbol(sys, h);
  const auto& g = sys.group();
  Symbol out{std::vector<Mat>(sys.order(), Mat::Zero(sys.dim(), sys.dim()))};
  for (std::size_t t = 0; t < sys.order(); ++t)
    for (std::size_t s = 0; s < sys.order(); ++s)
      out.values[t] += f.values[s] * sys.alpha(s, h.values[g.mul(g.inv(s), t)]);
  return out;
}

Symbol involution(const DynSystem& sys, const Symbol& f) {
  check_symbol(sys, f);
  const auto& g = sys.group();
  Symbol out{std::vector<Mat>(sys.order())};
  for (std::size_t t = 0; t < sys.order(); ++t) out.values[t] = sys.alpha(t, f.values[g.inv(t)].adjoint());
  return out;
}

Symbol delta_symbol(const DynSystem& sys, std::size_t t, const Mat& a) {
  sys.check_square(a);
  Symbol out{std::vector<Mat>(sys.order(), Mat::Zero(sys.dim(), sys.dim()))};
  out.values.at(t) = a;
  return out;
}

Symbol random_symbol(const DynSystem& sys, std::mt19937_64& rng) {
  Symbol out{std::vector<Mat>(sys.order())};
  for (Mat& m : out.values) m = sys.random_element(rng);
  return out;
}

BigOp big_V(const DynSystem& sys, std::size_t x) {
  const Mat id = Mat::Identity(sys.dim(), sys.dim());
  BigOp out = BigOp::zero(sys);
  for (std::size_t t = 0; t < sys.order(); ++t)
    out.set_block(t, t, std::conj(sys.group().pairing_at(x, t)) * id);
  return out;
}

BigOp big_V(const DynSystem& sys, const DualElement& x) { return big_V(sys, sys.group().index_of(x)); }

Symbol dual_action(const DynSystem& sys, const Symbol& f, std::size_t x) {
  check_symbol(sys, f);
  Symbol out = f;
  for (std::size_t r = 0; r < sys.order(); ++r) out.values[r] *= std::conj(sys.group().pairing_at(x, r));
  return out;
}

Symbol dual_action(const DynSystem& sys, const Symbol& f, const DualElement& x) {
  return dual_action(sys, f, sys.group().index_of(x));
}

LaurentReport is_laurent(const DynSystem& sys, const BigOp& t, double tol) {
  const auto& g = sys.group();
  const std::size_t n = sys.order();
  std::vector<Mat> blocks(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) blocks[i * n + j] = t.block(i, j);

  LaurentReport rep;
  for (std::size_t r = 1; r < n; ++r) {
    const std::size_t rinv = g.inv(r);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Mat diff = blocks[g.mul(i, r) * n + g.mul(j, r)] - sys.alpha(rinv, blocks[i * n + j]);
        rep.defect = std::max(rep.defect, op_norm(diff));
      }
  }
  for (std::size_t r = 0; r < n; ++r)
    rep.in_algebra_defect = std::max(rep.in_algebra_defect, sys.algebra().residual(sys.alpha(r, blocks[r * n])));
  rep.laurent = rep.defect <= tol && rep.in_algebra_defect <= tol;
  return rep;
}

Symbol symbol_of(const DynSystem& sys, const BigOp& t, double tol) {
  const LaurentReport rep = is_laurent(sys, t, tol);
  if (rep.defect > tol) {
    std::ostringstream msg;
    msg << "symbol_of: operator is not Laurent (defect " << rep.defect << ", tol " << tol << ")";
    throw PreconditionError(msg.str());
  }
  Symbol out{std::vector<Mat>(sys.order())};
  for (std::size_t r = 0; r < sys.order(); ++r) out.values[r] = sys.alpha(r, t.block(r, 0));
  return out;
}

MembershipReport in_crossed_product(const DynSystem& sys, const BigOp& t, double tol) {
  MembershipReport out;
  out.laurent = is_laurent(sys, t, tol);
  if (out.laurent.defect > tol) {
    out.residual = out.laurent.defect;
    return out;
  }
  Symbol f{std::vector<Mat>(sys.order())};
  for (std::size_t r = 0; r < sys.order(); ++r) f.values[r] = sys.alpha(r, t.block(r, 0));
  out.residual = op_norm(t.matrix() - rho(sys, f).matrix());
  out.member = out.laurent.laurent && out.residual <= tol;
  return out;
}

double fourier_via_V(const DynSystem& sys, const Mat& a, const Mat& b, std::size_t x) {
  const Mat lhs = zeta(sys, a).as_matrix().adjoint() * big_V(sys, x).matrix() * zeta(sys, b).as_matrix();
  return op_norm(lhs - fourier_coeff(sys, a.adjoint() * b, x));
}

std::vector<double> v_continuity_modulus(const DynSystem& sys, const BigOp& t) {
  const auto& g = sys.group();
  const std::size_t n = sys.order();
  const Eigen::Index d = sys.dim();
  const Mat& k = t.matrix();
  std::vector<double> out(n, 0.0);
#pragma omp parallel for schedule(dynamic)
  for (std::size_t x = 1; x < n; ++x) {
    // V_x T V_x* - T has block (t, s) equal to (conj<x,t> <x,s> - 1) k(t, s)
    Mat diff(k.rows(), k.cols());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const cplx c = std::conj(g.pairing_at(x, i)) * g.pairing_at(x, j) - 1.0;
        diff.block(static_cast<Eigen::Index>(i) * d, static_cast<Eigen::Index>(j) * d, d, d) =
            c * k.block(static_cast<Eigen::Index>(i) * d, static_cast<Eigen::Index>(j) * d, d, d);
      }
    out[x] = op_norm(diff);
  }
  return out;
}

std::vector<double> v_continuity_modulus_serial(const DynSystem& sys, const BigOp& t) {
  std::vector<double> out(sys.order(), 0.0);
  for (std::size_t x = 0; x < sys.order(); ++x) {
    const BigOp v = big_V(sys, x);
    out[x] = op_norm((v * t * v.adjoint() - t).matrix());
  }
  return out;
}

double symbol_distance(const Symbol& a, const Symbol& b) {
  if (a.values.size() != b.values.size()) throw StructuralError("symbol_distance: size mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i) m = std::max(m, op_norm(a.values[i] - b.values[i]));
  return m;
}

}  // namespace cdyn
