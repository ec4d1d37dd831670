#include <gtest/gtest.h>

#include <random>

#include "cdyn/crossed_product.hpp"
#include "cdyn/error.hpp"
#include "cdyn/hilbert_module.hpp"
#include "test_util.hpp"

using namespace cdyn;
using cdyn::testing::kSeeds;
using cdyn::testing::swap_system;
using cdyn::testing::unit;

namespace {

// rho(f) assembled as sum_t pi(f(t)) Lambda_t.
Mat rho_oracle(const DynSystem& sys, const Symbol& f) {
  const Eigen::Index n = static_cast<Eigen::Index>(sys.order()) * sys.dim();
  Mat out = Mat::Zero(n, n);
  for (std::size_t t = 0; t < sys.order(); ++t) out += pi(sys, f.values[t]).matrix() * lambda_op(sys, t).matrix();
  return out;
}

double symbol_scale(const Symbol& f) {
  double s = 0.0;
  for (const Mat& m : f.values) s += op_norm(m);
  return s;
}

}  // namespace

TEST(Pi, Examples) {
  const DynSystem sys = random_system(1);
  const Mat id = Mat::Identity(sys.dim(), sys.dim());
  EXPECT_LE(op_norm(pi(sys, id).matrix() - BigOp::identity(sys).matrix()), 1e-14);

  const DynSystem triv = trivial_system(FiniteAbelianGroup({3}), 2, AlgebraKind::Full);
  std::mt19937_64 rng(1);
  const Mat a = random_matrix(2, 2, rng);
  const BigOp p = pi(triv, a);
  for (std::size_t t = 0; t < 3; ++t)
    for (std::size_t s = 0; s < 3; ++s) EXPECT_EQ(p.block(t, s), t == s ? a : Mat(Mat::Zero(2, 2)));
  EXPECT_THROW(pi(triv, Mat::Identity(3, 3)), StructuralError);
}

TEST(Pi, Covariance) {
  for (auto seed : kSeeds) {
    const DynSystem sys = random_system(seed);
    std::mt19937_64 rng(seed);
    const Mat a = sys.random_element(rng);
    for (std::size_t t = 0; t < sys.order(); ++t) {
      const BigOp l = lambda_op(sys, t);
      EXPECT_LE(op_norm((l * pi(sys, a) * l.adjoint() - pi(sys, sys.alpha(t, a))).matrix()), 1e-10 * op_norm(a));
    }
  }
}

TEST(Lambda, RegularRepresentation) {
  const DynSystem sys = random_system(2);
  const auto& g = sys.group();
  EXPECT_LE(op_norm(lambda_op(sys, 0).matrix() - BigOp::identity(sys).matrix()), 0.0);
  for (std::size_t s = 0; s < sys.order(); ++s)
    for (std::size_t t = 0; t < sys.order(); ++t)
      EXPECT_LE(op_norm((lambda_op(sys, s) * lambda_op(sys, t)).matrix() - lambda_op(sys, g.mul(s, t)).matrix()),
                1e-12);

  const DynSystem sw = swap_system();
  const BigOp l = lambda_op(sw, GroupElement{{1}});
  const Mat id = Mat::Identity(2, 2);
  EXPECT_EQ(l.block(0, 1), id);
  EXPECT_EQ(l.block(1, 0), id);
  EXPECT_EQ(l.block(0, 0), Mat(Mat::Zero(2, 2)));
}

TEST(Rho, Examples) {
  const DynSystem sys = random_system(3);
  const Mat id = Mat::Identity(sys.dim(), sys.dim());
  EXPECT_LE(op_norm(rho(sys, delta_symbol(sys, 0, id)).matrix() - BigOp::identity(sys).matrix()), 1e-14);
  std::mt19937_64 rng(3);
  const Mat a = sys.random_element(rng);
  EXPECT_LE(op_norm(rho(sys, delta_symbol(sys, 0, a)).matrix() - pi(sys, a).matrix()), 1e-14);
}

TEST(Rho, MatchesPiLambdaExpansion) {
  for (auto seed : kSeeds) {
    const DynSystem sys = random_system(seed, {8, 3, 1});
    std::mt19937_64 rng(seed);
    const Symbol f = random_symbol(sys, rng);
    EXPECT_LE(op_norm(rho(sys, f).matrix() - rho_oracle(sys, f)), 1e-12 * symbol_scale(f));
  }
}

TEST(Rho, HomomorphismAndStarMap) {
  for (auto seed : kSeeds) {
    const DynSystem sys = random_system(seed, {8, 3, 1});
    std::mt19937_64 rng(seed);
    const Symbol f = random_symbol(sys, rng), h = random_symbol(sys, rng);
    const double scale = symbol_scale(f) * symbol_scale(h);
    EXPECT_LE(op_norm((rho(sys, f) * rho(sys, h)).matrix() - rho(sys, convolve(sys, f, h)).matrix()), 1e-9 * scale);
    EXPECT_LE(op_norm(rho(sys, f).adjoint().matrix() - rho(sys, involution(sys, f)).matrix()), 1e-9 * symbol_scale(f));
  }
}

TEST(BigV, Examples) {
  const DynSystem sys = random_system(4);
  EXPECT_LE(op_norm(big_V(sys, 0).matrix() - BigOp::identity(sys).matrix()), 0.0);
  const DynSystem sw = swap_system();
  const BigOp v = big_V(sw, DualElement{{1}});
  EXPECT_LE(op_norm(v.block(0, 0) - Mat::Identity(2, 2)), 1e-15);
  EXPECT_LE(op_norm(v.block(1, 1) + Mat::Identity(2, 2)), 1e-15);
}

TEST(BigV, GroupLawAndCommutesWithPi) {
  const DynSystem sys = random_system(5);
  const auto& g = sys.group();
  std::mt19937_64 rng(5);
  const Mat a = sys.random_element(rng);
  for (std::size_t x = 0; x < sys.order(); ++x) {
    const BigOp v = big_V(sys, x);
    EXPECT_LE(op_norm((v * v.adjoint()).matrix() - BigOp::identity(sys).matrix()), 1e-13);
    EXPECT_LE(op_norm((v * pi(sys, a) * v.adjoint() - pi(sys, a)).matrix()), 1e-12 * op_norm(a));
    for (std::size_t y = 0; y < sys.order(); ++y)
      EXPECT_LE(op_norm((v * big_V(sys, y)).matrix() - big_V(sys, g.mul(x, y)).matrix()), 1e-13);
  }
}

TEST(DualAction, Covariance) {
  for (auto seed : kSeeds) {
    const DynSystem sys = random_system(seed, {8, 3, 1});
    std::mt19937_64 rng(seed);
    const Symbol f = random_symbol(sys, rng);
    for (std::size_t x = 0; x < sys.order(); ++x) {
      const BigOp v = big_V(sys, x);
      EXPECT_LE(op_norm((v * rho(sys, f) * v.adjoint()).matrix() - rho(sys, dual_action(sys, f, x)).matrix()),
                1e-10 * symbol_scale(f));
    }
  }
  const DynSystem sys = random_system(6);
  std::mt19937_64 rng(6);
  const Symbol f = random_symbol(sys, rng);
  EXPECT_EQ(symbol_distance(dual_action(sys, f, 0), f), 0.0);
  const Symbol d = delta_symbol(sys, 0, sys.random_element(rng));
  EXPECT_EQ(symbol_distance(dual_action(sys, d, sys.order() - 1), d), 0.0);
}

TEST(Laurent, Detection) {
  for (auto seed : kSeeds) {
    const DynSystem sys = random_system(seed, {8, 3, 1});
    std::mt19937_64 rng(seed);
    const Symbol f = random_symbol(sys, rng);
    const BigOp t = rho(sys, f);
    const auto rep = is_laurent(sys, t, 1e-9 * symbol_scale(f));
    EXPECT_TRUE(rep.laurent);
    EXPECT_LE(rep.defect, 1e-10 * symbol_scale(f));
    EXPECT_LE(rep.in_algebra_defect, 1e-10 * symbol_scale(f));
    EXPECT_LE(symbol_distance(symbol_of(sys, t, 1e-9 * symbol_scale(f)), f), 1e-12 * symbol_scale(f));
  }
  const DynSystem sys = random_system(7);
  const auto z = is_laurent(sys, BigOp::zero(sys), 1e-12);
  EXPECT_TRUE(z.laurent);
  EXPECT_EQ(z.defect, 0.0);
}

TEST(Laurent, CorruptedBlock) {
  const DynSystem sys = random_system(8, {8, 3, 2});
  ASSERT_GE(sys.order(), 2u);
  std::mt19937_64 rng(8);
  const Symbol f = random_symbol(sys, rng);
  BigOp t = rho(sys, f);
  Mat bump = Mat::Zero(sys.dim(), sys.dim());
  bump(0, 0) = 0.25;
  t.set_block(1, 0, t.block(1, 0) + bump);
  const auto rep = is_laurent(sys, t, 1e-9);
  EXPECT_FALSE(rep.laurent);
  EXPECT_NEAR(rep.defect, 0.25, 1e-10 * symbol_scale(f));
  EXPECT_THROW(symbol_of(sys, t, 1e-9), PreconditionError);
}

TEST(Laurent, IdentityHasDeltaSymbol) {
  const DynSystem sys = random_system(9);
  const Symbol f = symbol_of(sys, BigOp::identity(sys), 1e-12);
  const Mat id = Mat::Identity(sys.dim(), sys.dim());
  EXPECT_LE(symbol_distance(f, delta_symbol(sys, 0, id)), 1e-14);
}

TEST(Membership, Cases) {
  for (auto seed : kSeeds) {
    const DynSystem sys = random_system(seed, {8, 3, 1});
    std::mt19937_64 rng(seed);
    const Symbol f = random_symbol(sys, rng);
    const auto m = in_crossed_product(sys, rho(sys, f), 1e-9 * symbol_scale(f));
    EXPECT_TRUE(m.member);
    EXPECT_LE(m.residual, 1e-10 * symbol_scale(f));

    const Mat a = sys.random_element(rng), b = sys.random_element(rng);
    EXPECT_TRUE(in_crossed_product(sys, lip(zeta(sys, a), zeta(sys, b)), 1e-9 * op_norm(a) * op_norm(b)).member);
  }
  const DynSystem triv = trivial_system(FiniteAbelianGroup({3}), 2, AlgebraKind::Full);
  for (std::size_t x = 1; x < 3; ++x) {
    const auto m = in_crossed_product(triv, big_V(triv, x), 1e-9);
    EXPECT_FALSE(m.member);
    EXPECT_GT(m.residual, 0.5);
  }
}

TEST(Membership, ClosedUnderProductsAndAdjoints) {
  for (auto seed : kSeeds) {
    const DynSystem sys = random_system(seed, {8, 3, 1});
    std::mt19937_64 rng(seed);
    const Symbol f = random_symbol(sys, rng), h = random_symbol(sys, rng);
    const BigOp p = rho(sys, f) * rho(sys, h);
    const double scale = symbol_scale(f) * symbol_scale(h);
    EXPECT_LE(is_laurent(sys, p, 1e-9 * scale).defect, 1e-9 * scale);
    EXPECT_TRUE(in_crossed_product(sys, p, 1e-9 * scale).member);
    EXPECT_TRUE(in_crossed_product(sys, rho(sys, f).adjoint(), 1e-9 * symbol_scale(f)).member);
  }
}

TEST(Membership, NotInAlgebra) {
  // Laurent kernel whose symbol leaves the diagonal algebra.
  const DynSystem sys = trivial_system(FiniteAbelianGroup({2}), 2, AlgebraKind::Diagonal);
  const Symbol f = delta_symbol(sys, 1, unit(2, 0, 1));
  const auto m = in_crossed_product(sys, rho(sys, f), 1e-9);
  EXPECT_FALSE(m.member);
  EXPECT_NEAR(m.laurent.in_algebra_defect, 1.0, 1e-12);
}

TEST(ZetaIntertwining, SmoothedLeftAction) {
  for (auto seed : kSeeds) {
    const DynSystem sys = random_system(seed, {8, 3, 1});
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> nd;
    ScalarFn g(sys.order());
    for (auto& v : g) v = cplx(nd(rng), nd(rng));
    const Mat a = sys.random_element(rng), c = sys.random_element(rng);
    Symbol f{std::vector<Mat>(sys.order())};
    for (std::size_t t = 0; t < sys.order(); ++t) f.values[t] = g[t] * c;
    const Mat lhs = rho(sys, f).matrix() * zeta(sys, a).as_matrix();
    const Mat rhs = zeta(sys, c * smooth(sys, a, g)).as_matrix();
    EXPECT_LE(op_norm(lhs - rhs), 1e-9 * symbol_scale(f) * op_norm(a));
  }
}

TEST(FourierViaV, Identity) {
  for (auto seed : kSeeds) {
    const DynSystem sys = random_system(seed, {4, 2, 1});
    std::mt19937_64 rng(seed);
    const Mat a = sys.random_element(rng), b = sys.random_element(rng);
    for (std::size_t x = 0; x < sys.order(); ++x)
      EXPECT_LE(fourier_via_V(sys, a, b, x), 1e-10 * op_norm(a) * op_norm(b) * sys.order());
    EXPECT_EQ(fourier_via_V(sys, a, Mat::Zero(sys.dim(), sys.dim()), 1 % sys.order()), 0.0);
  }
}

TEST(VContinuity, Examples) {
  const DynSystem sys = random_system(10);
  std::mt19937_64 rng(10);
  const Mat a = sys.random_element(rng);
  for (double m : v_continuity_modulus(sys, pi(sys, a))) EXPECT_LE(m, 1e-13 * op_norm(a));

  // Z_2: V_1 Lambda_1 V_1* = -Lambda_1, so m(1) = 2.
  const DynSystem sw = swap_system();
  const auto table = v_continuity_modulus(sw, rho(sw, delta_symbol(sw, 1, Mat::Identity(2, 2))));
  EXPECT_EQ(table[0], 0.0);
  EXPECT_NEAR(table[1], 2.0, 1e-14);
}

TEST(VContinuity, KernelMatchesSerialAndIsSymmetric) {
  for (auto seed : kSeeds) {
    const DynSystem sys = random_system(seed);
    std::mt19937_64 rng(seed);
    const Mat a = sys.random_element(rng), b = sys.random_element(rng);
    const BigOp t = lip(zeta(sys, a), zeta(sys, b));
    const auto fast = v_continuity_modulus(sys, t);
    const auto ref = v_continuity_modulus_serial(sys, t);
    const double scale = op_norm(a) * op_norm(b) * sys.order();
    EXPECT_EQ(fast[0], 0.0);
    for (std::size_t x = 0; x < sys.order(); ++x) {
      EXPECT_NEAR(fast[x], ref[x], 1e-12 * scale);
      EXPECT_NEAR(fast[x], fast[sys.group().inv(x)], 1e-12 * scale);
    }
  }
}
