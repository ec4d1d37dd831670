#include "cdyn/finite_group.hpp"

#include <numbers>
#include <string>

#include "cdyn/error.hpp"

namespace cdyn {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<int> factors) : factors_(std::move(factors)) {
  for (int n : factors_) {
    if (n < 1) throw StructuralError("group factor must be >= 1, got " + std::to_string(n));
    order_ *= static_cast<std::size_t>(n);
  }
  mul_.resize(order_ * order_);
  inv_.resize(order_);
  pair_.resize(order_ * order_);

  std::vector<std::vector<int>> res(order_);
  for (std::size_t i = 0; i < order_; ++i) res[i] = decode(i);

  for (std::size_t i = 0; i < order_; ++i) {
    std::vector<int> r(rank());
    for (std::size_t k = 0; k < rank(); ++k) r[k] = (factors_[k] - res[i][k]) % factors_[k];
    inv_[i] = encode(r);
    for (std::size_t j = 0; j < order_; ++j) {
      double phase = 0.0;
      for (std::size_t k = 0; k < rank(); ++k) {
        r[k] = (res[i][k] + res[j][k]) % factors_[k];
        // Reduce the product mod n_k first so that the angle stays in [0, 2pi).
        phase += static_cast<double>((static_cast<long>(res[i][k]) * res[j][k]) % factors_[k]) /
                 factors_[k];
      }
      mul_[i * order_ + j] = encode(r);
      pair_[i * order_ + j] = std::polar(1.0, 2.0 * std::numbers::pi * phase);
    }
  }
}

void FiniteAbelianGroup::check(const std::vector<int>& residues) const {
  if (residues.size() != rank())
    throw StructuralError("element has " + std::to_string(residues.size()) +
                          " residues, group has rank " + std::to_string(rank()));
  for (std::size_t k = 0; k < rank(); ++k)
    if (residues[k] < 0 || residues[k] >= factors_[k])
      throw StructuralError("residue " + std::to_string(residues[k]) + " out of range for Z_" +
                            std::to_string(factors_[k]));
}

std::size_t FiniteAbelianGroup::encode(const std::vector<int>& residues) const {
  std::size_t idx = 0;
  for (std::size_t k = 0; k < rank(); ++k)
    idx = idx * static_cast<std::size_t>(factors_[k]) + static_cast<std::size_t>(residues[k]);
  return idx;
}

std::vector<int> FiniteAbelianGroup::decode(std::size_t i) const {
  std::vector<int> r(rank());
  for (std::size_t k = rank(); k-- > 0;) {
    r[k] = static_cast<int>(i % static_cast<std::size_t>(factors_[k]));
    i /= static_cast<std::size_t>(factors_[k]);
  }
  return r;
}

std::size_t FiniteAbelianGroup::index_of(const GroupElement& t) const {
  check(t.residues);
  return encode(t.residues);
}

std::size_t FiniteAbelianGroup::index_of(const DualElement& x) const {
  check(x.residues);
  return encode(x.residues);
}

GroupElement FiniteAbelianGroup::element(std::size_t i) const {
  if (i >= order_) throw StructuralError("group index out of range");
  return {decode(i)};
}

DualElement FiniteAbelianGroup::dual_element(std::size_t i) const {
  if (i >= order_) throw StructuralError("dual index out of range");
  return {decode(i)};
}

GroupElement FiniteAbelianGroup::identity() const { return {std::vector<int>(rank(), 0)}; }
DualElement FiniteAbelianGroup::dual_identity() const { return {std::vector<int>(rank(), 0)}; }

GroupElement FiniteAbelianGroup::multiply(const GroupElement& s, const GroupElement& t) const {
  return element(mul(index_of(s), index_of(t)));
}

GroupElement FiniteAbelianGroup::inverse(const GroupElement& t) const {
  return element(inv(index_of(t)));
}

DualElement FiniteAbelianGroup::multiply(const DualElement& x, const DualElement& y) const {
  return dual_element(mul(index_of(x), index_of(y)));
}

DualElement FiniteAbelianGroup::inverse(const DualElement& x) const {
  return dual_element(inv(index_of(x)));
}

cplx FiniteAbelianGroup::pairing(const DualElement& x, const GroupElement& t) const {
  return pairing_at(index_of(x), index_of(t));
}

std::size_t FiniteAbelianGroup::generator(std::size_t j) const {
  if (j >= rank()) throw StructuralError("generator slot out of range");
  std::vector<int> r(rank(), 0);
  if (factors_[j] > 1) r[j] = 1;
  return encode(r);
}

cplx character_sum(const FiniteAbelianGroup& g, const DualElement& x) {
  const std::size_t xi = g.index_of(x);
  cplx sum = 0.0;
  for (std::size_t t = 0; t < g.order(); ++t) sum += g.pairing_at(xi, t);
  return sum;
}

}  // namespace cdyn
