#include "cdyn/fixtures.hpp"

namespace cdyn {

Mat random_matrix(Eigen::Index rows, Eigen::Index cols, std::mt19937_64& rng) {
  std::normal_distribution<double> nd;
  Mat m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = cplx(nd(rng), nd(rng));
  return m;
}

Mat random_unitary(Eigen::Index d, std::mt19937_64& rng) {
  Eigen::HouseholderQR<Mat> qr(random_matrix(d, d, rng));
  Mat q = qr.householderQ();
  const Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < d; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0.0) q.col(j) *= r(j, j) / mag;
  }
  return q;
}

DynSystem random_system(std::uint64_t seed, const RandomSystemOptions& opts) {
  std::mt19937_64 rng(seed);
  auto pick = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };

  std::vector<int> factors;
  const std::size_t n1 = pick(2, opts.max_order);
  factors.push_back(static_cast<int>(n1));
  if (opts.max_order / n1 >= 2 && pick(0, 1) == 1) factors.push_back(static_cast<int>(pick(2, opts.max_order / n1)));
  FiniteAbelianGroup g(factors);

  const auto d = static_cast<Eigen::Index>(pick(static_cast<std::size_t>(opts.min_dim), static_cast<std::size_t>(opts.max_dim)));
  std::vector<std::size_t> chars(static_cast<std::size_t>(d));
  for (auto& x : chars) x = pick(0, g.order() - 1);
  const Mat q = random_unitary(d, rng);

  std::vector<Mat> u;
  for (std::size_t t = 0; t < g.order(); ++t) {
    Vec diag(d);
    for (Eigen::Index j = 0; j < d; ++j) diag(j) = g.pairing_at(chars[static_cast<std::size_t>(j)], t);
    u.push_back(q * diag.asDiagonal() * q.adjoint());
  }

  std::vector<Mat> gens;
  if (d >= 2 && pick(0, 1) == 1) {
    const auto d1 = static_cast<Eigen::Index>(pick(1, static_cast<std::size_t>(d - 1)));
    for (Eigen::Index i = 0; i < d; ++i)
      for (Eigen::Index j = 0; j < d; ++j)
        if ((i < d1) == (j < d1)) gens.push_back(q.col(i) * q.col(j).adjoint());
  } else {
    for (Eigen::Index i = 0; i < d; ++i)
      for (Eigen::Index j = 0; j < d; ++j) {
        Mat e = Mat::Zero(d, d);
        e(i, j) = 1.0;
        gens.push_back(e);
      }
  }
  return DynSystem(std::move(g), std::move(u), span_of(d, d, gens));
}

}  // namespace cdyn
