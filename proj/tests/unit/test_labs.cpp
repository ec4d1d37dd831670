#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "cdyn/error.hpp"
#include "cdyn/labs.hpp"

using namespace cdyn;
using namespace cdyn::labs;

namespace {

constexpr double kPi = std::numbers::pi;

CircleFunction random_trig(std::mt19937_64& rng, int B) {
  std::normal_distribution<double> nd;
  std::vector<cplx> c(2 * B + 1);
  for (auto& v : c) v = cplx(nd(rng), nd(rng));
  return CircleFunction(c).normalized();
}

cplx direct_eval(const CircleFunction& f, double theta) {
  cplx acc = 0.0;
  for (int n = -f.bandwidth(); n <= f.bandwidth(); ++n) acc += f.coeff(n) * std::polar(1.0, n * theta);
  return acc;
}

// Coefficients of |phi|^2: sum_n phihat(n + m) conj(phihat(n)).
cplx abs2_coeff(const CircleFunction& phi, int m) {
  cplx acc = 0.0;
  for (int n = -phi.bandwidth(); n <= phi.bandwidth(); ++n) acc += phi.coeff(n + m) * std::conj(phi.coeff(n));
  return acc;
}

// Dense windowed F(P_phi, z) summed term by term.
Mat windowed_fourier(const CircleFunction& phi, cplx z, const ShiftWindow& w) {
  const int K = w.N - phi.bandwidth();
  const Mat p = rank_one_projection(phi, w);
  Mat f = Mat::Zero(w.dim(), w.dim());
  for (int k = -K; k <= K; ++k) f += std::pow(z, k) * shift_conjugate(p, w, k);
  return f;
}

const std::uint64_t kSeeds[] = {3, 17, 29, 43, 71};

}  // namespace

TEST(Circle, SamplesMatchDirectEvaluation) {
  for (auto seed : kSeeds) {
    std::mt19937_64 rng(seed);
    const CircleFunction f = random_trig(rng, 5);
    const auto s = f.samples(32);
    for (int j = 0; j < 32; ++j) EXPECT_LT(std::abs(s[j] - direct_eval(f, 2 * kPi * j / 32)), 1e-13);
    EXPECT_LT(std::abs(f(0.7) - direct_eval(f, 0.7)), 1e-13);
    EXPECT_NEAR(f.two_norm(), 1.0, 1e-14);
    EXPECT_LE(f.sup_norm(), 2 * 5 + 1.0);
    EXPECT_GE(f.sup_norm() + 1e-14, std::abs(direct_eval(f, 0.0)));
  }
}

TEST(Circle, Arithmetic) {
  std::mt19937_64 rng(5);
  const CircleFunction f = random_trig(rng, 3), g = random_trig(rng, 2);
  const CircleFunction h = f * g;
  EXPECT_EQ(h.bandwidth(), 5);
  for (double t : {0.0, 0.3, 2.1, 5.9}) {
    EXPECT_LT(std::abs(h(t) - f(t) * g(t)), 1e-13);
    EXPECT_LT(std::abs(f.conj()(t) - std::conj(f(t))), 1e-13);
    const cplx a = std::polar(1.0, 0.4);
    EXPECT_LT(std::abs(f.rotate(a)(t) - f(t + 0.4)), 1e-13);
  }
  EXPECT_THROW(f.rotate(2.0), DomainError);
  EXPECT_THROW(CircleFunction(std::vector<cplx>(3, 0.0)).normalized(), PreconditionError);
  EXPECT_NEAR(std::abs(inner(f, f)), 1.0, 1e-14);
}

TEST(Circle, StepFixture) {
  const CircleFunction s = step_function(32);
  EXPECT_NEAR(s.two_norm(), 1.0, 1e-14);
  EXPECT_GT(s.tail(), 0.0);
  // Odd real function: sign(Im w) is positive on the upper half circle.
  EXPECT_GT(s(kPi / 2).real(), 0.9);
  EXPECT_LT(s(3 * kPi / 2).real(), -0.9);
  EXPECT_LT(std::abs(s(kPi / 2).imag()), 1e-12);
  const CircleFunction d = phase_step(3, kPi / 2, 32);
  for (const cplx& v : d.samples(512)) EXPECT_NEAR(std::abs(v), 1.0, 1e-10);
}

TEST(RankOne, Examples) {
  const ShiftWindow w{4};
  const Mat e00 = rank_one_projection(CircleFunction::monomial(0), w);
  Mat oracle = Mat::Zero(9, 9);
  oracle(4, 4) = 1.0;
  EXPECT_EQ(e00, oracle);

  const CircleFunction h = CircleFunction::from_map({{0, 1.0}, {1, 1.0}}).normalized();
  const Mat p = rank_one_projection(h, w);
  for (Eigen::Index i = 0; i < 9; ++i)
    for (Eigen::Index j = 0; j < 9; ++j) {
      const bool in = (i == 4 || i == 5) && (j == 4 || j == 5);
      EXPECT_NEAR(std::abs(p(i, j) - (in ? 0.5 : 0.0)), 0.0, 1e-15);
    }
}

TEST(RankOne, IdempotentAndSelfAdjoint) {
  for (auto seed : kSeeds) {
    std::mt19937_64 rng(seed);
    const Mat p = rank_one_projection(random_trig(rng, 3), ShiftWindow{10});
    EXPECT_LE((p * p - p).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LE((p - p.adjoint()).cwiseAbs().maxCoeff(), 1e-15);
  }
}

TEST(RankOne, Errors) {
  EXPECT_THROW(rank_one_projection(CircleFunction::from_map({{0, 2.0}}), ShiftWindow{4}), PreconditionError);
  EXPECT_THROW(rank_one_projection(CircleFunction::monomial(5), ShiftWindow{4}), WindowError);
}

TEST(ShiftSum, MonomialGivesIndicator) {
  const ShiftWindow w{12};
  const Mat s = shift_sum(rank_one_projection(CircleFunction::monomial(0), w), w, 5);
  for (int n = -12; n <= 12; ++n) EXPECT_EQ(s(w.index(n), w.index(n)), cplx(std::abs(n) <= 5 ? 1.0 : 0.0));
  EXPECT_EQ((s - Mat(s.diagonal().asDiagonal())).cwiseAbs().maxCoeff(), 0.0);
  EXPECT_LE(shift_sum_check(CircleFunction::monomial(0), w, 5).residual, 1e-15);
}

TEST(ShiftSum, InteriorIsLaurentOfAbsSquare) {
  std::mt19937_64 rng(8);
  const CircleFunction phi = random_trig(rng, 2);
  const ShiftWindow w{64};
  const int K = 32, R = K - 2;
  const Mat s = shift_sum(rank_one_projection(phi, w), w, K);
  double worst = 0.0;
  for (int i = -R; i <= R; ++i)
    for (int j = -R; j <= R; ++j) worst = std::max(worst, std::abs(s(w.index(i), w.index(j)) - abs2_coeff(phi, i - j)));
  EXPECT_LE(worst, 1e-12);
  const ShiftSumReport rep = shift_sum_check(phi, w, K);
  EXPECT_EQ(rep.radius, R);
  EXPECT_LE(rep.residual, 1e-12);
}

TEST(ShiftSum, Errors) {
  const ShiftWindow w{10};
  const Mat p = rank_one_projection(CircleFunction::from_map({{-3, 1.0}}), w);
  EXPECT_THROW(shift_sum(p, w, 8), WindowError);
  EXPECT_THROW(shift_sum(p, w, -1), PreconditionError);
  EXPECT_NO_THROW(shift_sum(p, w, 7));
}

TEST(FourierShift, AtOneIsShiftSum) {
  std::mt19937_64 rng(2);
  const CircleFunction phi = random_trig(rng, 3);
  const ShiftWindow w{20};
  const Mat p = rank_one_projection(phi, w);
  EXPECT_LE((shifted_fourier(p, 1.0, w, 17) - shift_sum(p, w, 17)).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(FourierShift, MonomialEntries) {
  const ShiftWindow w{8};
  const cplx z = std::polar(1.0, 0.9);
  const Mat f = shifted_fourier(rank_one_projection(CircleFunction::monomial(0), w), z, w, 8);
  for (int n = -8; n <= 8; ++n) EXPECT_LT(std::abs(f(w.index(n), w.index(n)) - std::pow(z, n)), 1e-14);
  EXPECT_LT(fourier_coeff_shift(CircleFunction::monomial(0), z, w).residual, 1e-14);
}

TEST(FourierShift, DoubleSumOracle) {
  std::mt19937_64 rng(13);
  const CircleFunction phi = random_trig(rng, 2);
  const ShiftWindow w{64};
  const cplx z(0.0, 1.0);
  const Mat f = windowed_fourier(phi, z, w);
  const int R = w.N - 2 * phi.bandwidth();
  double worst = 0.0;
  for (int i = -R; i <= R; ++i)
    for (int j = -R; j <= R; ++j) {
      cplx acc = 0.0;
      for (int n = i - 2; n <= i + 2; ++n) acc += std::pow(z, n) * phi.coeff(i - n) * std::conj(phi.coeff(j - n));
      worst = std::max(worst, std::abs(f(w.index(i), w.index(j)) - acc));
    }
  EXPECT_LE(worst, 1e-10);
  const FourierShiftReport rep = fourier_coeff_shift(phi, z, w);
  EXPECT_EQ(rep.K, 62);
  EXPECT_LE(rep.residual, 1e-10);
  EXPECT_THROW(fourier_coeff_shift(phi, cplx(1.1, 0.0), w), DomainError);
}

TEST(FourierShift, GridProperty) {
  for (auto seed : kSeeds) {
    std::mt19937_64 rng(seed);
    const CircleFunction phi = random_trig(rng, 1 + static_cast<int>(seed % 8));
    for (int k = 0; k < 16; ++k)
      EXPECT_LE(fourier_coeff_shift(phi, std::polar(1.0, 2 * kPi * k / 16), ShiftWindow{64}).residual, 1e-10);
  }
}

TEST(Toeplitz, SectionNormMatchesSvd) {
  std::mt19937_64 rng(4);
  for (int R : {5, 40}) {
    const CircleFunction q = random_trig(rng, 6);
    const int n = 2 * R + 1;
    Mat t = Mat::Zero(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) t(i, j) = q.coeff(i - j);
    const double oracle = Eigen::JacobiSVD<Mat>(t).singularValues()(0);
    EXPECT_NEAR(toeplitz_section_norm(q, R), oracle, 1e-10 * oracle);
  }
}

TEST(Toeplitz, PairDifferenceMatchesWindowedProduct) {
  for (auto seed : kSeeds) {
    std::mt19937_64 rng(seed);
    const CircleFunction a = random_trig(rng, 3), b = random_trig(rng, 2);
    const ShiftWindow w{30};
    const int R = w.N - 2 * (a.bandwidth() + b.bandwidth());
    std::uniform_real_distribution<double> u(0.0, 2 * kPi);
    const cplx x = std::polar(1.0, u(rng)), x2 = std::polar(1.0, u(rng)), c = std::polar(1.0, u(rng));
    const Mat lhs = windowed_fourier(a, x, w) * windowed_fourier(b, c / x, w) -
                    windowed_fourier(a, x2, w) * windowed_fourier(b, c / x2, w);
    const double oracle = Eigen::JacobiSVD<Mat>(interior_block(lhs, w, R)).singularValues()(0);
    EXPECT_NEAR(pair_difference_norm(a, b, x, x2, c, R), oracle, 1e-10) << "seed " << seed;
  }
}

TEST(Dichotomy, KernelMatchesSerial) {
  for (auto seed : {3, 17}) {
    std::mt19937_64 rng(seed);
    const CircleFunction phi = random_trig(rng, 2), psi = random_trig(rng, 3);
    const ShiftWindow w{24};
    const DichotomyTable fast = rc_dichotomy(phi, psi, w, 8, 8);
    const DichotomyTable ref = rc_dichotomy_serial(phi, psi, w, 8, 8);
    ASSERT_EQ(fast.rows.size(), ref.rows.size());
    EXPECT_EQ(fast.radius, ref.radius);
    for (std::size_t k = 0; k < fast.rows.size(); ++k) {
      // The kernel stops once the remaining candidates cannot beat it by the resolution.
      EXPECT_LE(fast.rows[k].d_tilde, ref.rows[k].d_tilde + 1e-9);
      EXPECT_GE(fast.rows[k].d_tilde, ref.rows[k].d_tilde * (1.0 - 2.5e-3) - 1e-9);
      EXPECT_NEAR(fast.rows[k].omega, ref.rows[k].omega, 1e-9);
      EXPECT_EQ(fast.rows[k].pass, ref.rows[k].pass);
    }
    const DichotomyRow one = rc_dichotomy_at(phi, psi, w, 3, 8, 8);
    EXPECT_EQ(one.d_tilde, fast.rows[3].d_tilde);
  }
}

TEST(Dichotomy, ConstantSymbolIsTrivial) {
  const CircleFunction e0 = CircleFunction::monomial(0);
  const DichotomyTable t = rc_dichotomy(e0, e0, ShiftWindow{32}, 16, 16);
  for (const auto& r : t.rows) {
    EXPECT_LE(r.d_tilde, t.eps);
    EXPECT_TRUE(r.pass);
  }
  EXPECT_EQ(t.rows.size(), 16u);
}

TEST(Dichotomy, LipschitzBoundProperty) {
  for (auto seed : kSeeds) {
    std::mt19937_64 rng(seed);
    const CircleFunction phi = random_trig(rng, 1 + static_cast<int>(seed % 3)), psi = random_trig(rng, 2);
    const DichotomyTable t = rc_dichotomy(phi, psi, ShiftWindow{32}, 8, 8);
    EXPECT_TRUE(t.all_pass()) << "seed " << seed;
    EXPECT_EQ(t.rows[0].d_tilde, 0.0);
    // omega(z) <= |arg z| sum |n| |hhat(n)|
    const CircleFunction h = phi.conj() * psi;
    double lip = 0.0;
    for (int n = -h.bandwidth(); n <= h.bandwidth(); ++n) lip += std::abs(n) * std::abs(h.coeff(n));
    for (const auto& r : t.rows) EXPECT_LE(r.omega, std::abs(std::arg(r.z)) * lip + 1e-12);
  }
}

TEST(Dichotomy, StepAgainstConstantHasFloor) {
  const ShiftWindow w{64};
  const DichotomyRow r = rc_dichotomy_at(step_function(8), CircleFunction::monomial(0), w, 1, 64, 64);
  EXPECT_GT(r.d_tilde, 0.5);
}

TEST(Dichotomy, Errors) {
  const CircleFunction e0 = CircleFunction::monomial(0);
  EXPECT_THROW(rc_dichotomy(e0, e0, ShiftWindow{32}, 4, 8), PreconditionError);
  EXPECT_THROW(rc_dichotomy(e0, e0, ShiftWindow{32}, 8, 7), PreconditionError);
  EXPECT_THROW(rc_dichotomy(CircleFunction::monomial(9), e0, ShiftWindow{32}, 8, 8), WindowError);
  EXPECT_THROW(rc_dichotomy(CircleFunction::from_map({{0, 0.5}}), e0, ShiftWindow{32}, 8, 8), PreconditionError);
}

TEST(Cube, Cases) {
  const ShiftWindow w{48};
  const CircleFunction phi = smooth_phi(), psi = smooth_psi();
  const CubeReport at_one = reverse_cube_bound(phi, psi, w, 1.0);
  EXPECT_EQ(at_one.lhs, 0.0);
  EXPECT_LE(at_one.rhs, 1e-12);
  for (int k = 1; k < 8; ++k) {
    const CubeReport c = reverse_cube_bound(phi, psi, w, std::polar(1.0, 2 * kPi * k / 8));
    EXPECT_TRUE(c.holds());
    EXPECT_NEAR(c.lhs, std::pow(c.omega, 3), 1e-15);
  }
  const CubeReport s = reverse_cube_bound(step_function(6), CircleFunction::monomial(0), w, std::polar(1.0, 2 * kPi / 64));
  EXPECT_TRUE(s.holds());
  EXPECT_GT(s.rhs, 0.5);
}

TEST(Positive, Examples) {
  const ShiftWindow w{32};
  const PositiveReport one = positive_decomposition({1.0}, {CircleFunction::monomial(0)}, w);
  EXPECT_NEAR(one.sup_symbol, 1.0, 1e-14);
  EXPECT_NEAR(one.strict_sum_sup, 1.0, 1e-14);
  EXPECT_TRUE(one.agree);

  std::vector<CircleFunction> es;
  for (int n = 0; n < 4; ++n) es.push_back(CircleFunction::monomial(n));
  const PositiveReport geo = positive_decomposition({1.0, 0.5, 0.25, 0.125}, es, w);
  EXPECT_NEAR(geo.sup_symbol, 15.0 / 8.0, 1e-14);
  EXPECT_NEAR(geo.strict_sum_sup, 15.0 / 8.0, 1e-12);
  EXPECT_TRUE(geo.agree);
}

TEST(Positive, RandomOrthogonalFamilies) {
  for (auto seed : kSeeds) {
    std::mt19937_64 rng(seed);
    // Gram-Schmidt on random bandwidth-2 polynomials.
    std::vector<CircleFunction> fam;
    for (int i = 0; i < 3; ++i) {
      CircleFunction f = random_trig(rng, 2);
      for (const auto& g : fam) f = f - g.scaled(inner(g, f));
      fam.push_back(f.normalized());
    }
    std::uniform_real_distribution<double> u(0.1, 2.0);
    const std::vector<double> lam{u(rng), u(rng), u(rng)};
    const PositiveReport r = positive_decomposition(lam, fam, ShiftWindow{32});
    EXPECT_TRUE(r.agree) << "seed " << seed;
    EXPECT_LE(r.section_norm, r.strict_sum_sup + 1e-12);
    EXPECT_LE(r.laurent_residual, 1e-12);
  }
}

TEST(Positive, Errors) {
  const ShiftWindow w{16};
  const CircleFunction a = CircleFunction::monomial(0);
  const CircleFunction b = CircleFunction::from_map({{0, 1.0}, {1, 1.0}}).normalized();
  EXPECT_THROW(positive_decomposition({1.0, 1.0}, {a, b}, w), PreconditionError);
  EXPECT_THROW(positive_decomposition({-1.0}, {a}, w), PreconditionError);
  EXPECT_THROW(positive_decomposition({1.0, 2.0}, {a}, w), PreconditionError);
}

TEST(Twist, TrivialDeltaGivesIdenticalTables) {
  const CircleFunction one = CircleFunction::monomial(0);
  const TwistReport r = delta_twist_demo(one, smooth_phi(), smooth_psi(), ShiftWindow{40}, 8, 8);
  for (std::size_t k = 0; k < r.plain.rows.size(); ++k) {
    EXPECT_EQ(r.plain.rows[k].d_tilde, r.twisted.rows[k].d_tilde);
    EXPECT_EQ(r.plain.rows[k].d_tilde, r.mixed.rows[k].d_tilde);
  }
  EXPECT_EQ(r.commute_residual, 0.0);
}

TEST(Twist, DiscontinuousDelta) {
  const CircleFunction delta = phase_step(3, kPi / 2, 32);
  const CircleFunction e0 = CircleFunction::monomial(0);
  const TwistReport r = delta_twist_demo(delta, e0, e0, ShiftWindow{128}, 16, 16);
  EXPECT_TRUE(r.plain.all_pass());
  EXPECT_TRUE(r.twisted.all_pass());
  EXPECT_GT(r.mixed.near_one(), 0.25);
  EXPECT_LE(r.commute_residual, 1e-10);
  EXPECT_THROW(delta_twist_demo(CircleFunction::from_map({{0, 1.0}, {1, 0.5}}), e0, e0, ShiftWindow{64}, 8, 8),
               PreconditionError);
}

TEST(Proper, Dimensions) {
  for (int k : {1, 2, 3}) {
    const ProperActionReport r = proper_free_action_report(1, k);
    EXPECT_EQ(r.fixed_dim, static_cast<std::size_t>(k));
    EXPECT_TRUE(r.ok(1e-9));
  }
  const ProperActionReport a = proper_free_action_report(3, 2);
  EXPECT_EQ(a.fixed_dim, 2u);
  EXPECT_EQ(a.rip_span_dim, 2u);
  EXPECT_TRUE(a.ok(1e-9));
  const ProperActionReport b = proper_free_action_report(4, 1);
  EXPECT_EQ(b.crossed_dim, 16u);
  EXPECT_TRUE(b.ok(1e-9));
  EXPECT_THROW(proper_free_action_report(0, 1), PreconditionError);
}

TEST(Translation, DeltaClosedForm) {
  const TranslationReport r = translation_on_Z_report(16, {ZFunction{{0, 1.0}}}, 8, 8);
  for (const auto& row : r.rows) {
    // ft = 1 identically, so both moduli vanish.
    EXPECT_LE(row.d_tilde, 1e-13);
    EXPECT_LE(row.closed_form, 1e-13);
  }
  EXPECT_LE(r.max_closed_form_gap, 1e-12);
}

TEST(Translation, ZeroAndBumps) {
  const TranslationReport z = translation_on_Z_report(16, {ZFunction{}}, 8, 8);
  for (const auto& row : z.rows) EXPECT_EQ(row.d_tilde, 0.0);

  const ZFunction bump1{{-1, 0.5}, {0, 1.0}, {1, 0.5}};
  const ZFunction bump2{{2, 1.0}, {3, cplx(0.0, 1.0)}};
  const TranslationReport r = translation_on_Z_report(24, {bump1, bump2}, 16, 16);
  EXPECT_TRUE(r.lipschitz_holds);
  EXPECT_LE(r.max_closed_form_gap, 1e-12);
  for (const auto& row : r.rows) EXPECT_LE(row.d_tilde, row.lipschitz + 1e-12);
  EXPECT_THROW(translation_on_Z_report(4, {bump2}, 8, 8), WindowError);
}
