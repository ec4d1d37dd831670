#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace cdyn {

using cplx = std::complex<double>;

// Element of G = Z_{n1} x ... x Z_{nk}, stored as residues r_j in [0, n_j).
struct GroupElement {
  std::vector<int> residues;
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

// Character of G. Finite abelian groups are self-dual, so a character is
// labelled by a residue tuple of the same shape; see FiniteAbelianGroup::pairing.
struct DualElement {
  std::vector<int> residues;
  friend bool operator==(const DualElement&, const DualElement&) = default;
};

// G = Z_{n1} x ... x Z_{nk}. Elements are enumerated lexicographically on the
// residue tuple (last factor fastest); the same enumeration indexes the dual.
//
// Haar measure on G is counting measure. Haar measure on the dual is
// (1/|G|) * counting measure, which makes Fourier inversion exact.
//
// All index-based helpers (mul, inv, pairing_at) run on precomputed tables.
class FiniteAbelianGroup {
 public:
  explicit FiniteAbelianGroup(std::vector<int> factors);

  const std::vector<int>& factors() const { return factors_; }
  std::size_t order() const { return order_; }
  std::size_t rank() const { return factors_.size(); }

  std::size_t index_of(const GroupElement& t) const;
  std::size_t index_of(const DualElement& x) const;
  GroupElement element(std::size_t i) const;
  DualElement dual_element(std::size_t i) const;

  GroupElement identity() const;
  DualElement dual_identity() const;
  GroupElement multiply(const GroupElement& s, const GroupElement& t) const;
  GroupElement inverse(const GroupElement& t) const;
  DualElement multiply(const DualElement& x, const DualElement& y) const;
  DualElement inverse(const DualElement& x) const;

  // <x, t> = exp(2 pi i sum_j x_j t_j / n_j). Throws StructuralError when
  // either argument does not belong to this group.
  cplx pairing(const DualElement& x, const GroupElement& t) const;

  // Index arithmetic. The same tables serve G and its dual.
  std::size_t mul(std::size_t i, std::size_t j) const { return mul_[i * order_ + j]; }
  std::size_t inv(std::size_t i) const { return inv_[i]; }
  cplx pairing_at(std::size_t x, std::size_t t) const { return pair_[x * order_ + t]; }

  // Index of the generator of the j-th cyclic factor (residue 1 in slot j).
  std::size_t generator(std::size_t j) const;

  friend bool operator==(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
    return a.factors_ == b.factors_;
  }

 private:
  void check(const std::vector<int>& residues) const;
  std::size_t encode(const std::vector<int>& residues) const;
  std::vector<int> decode(std::size_t i) const;

  std::vector<int> factors_;
  std::size_t order_ = 1;
  std::vector<std::size_t> mul_;
  std::vector<std::size_t> inv_;
  std::vector<cplx> pair_;
};

// sum_{t in G} <x, t>: |G| for the trivial character, 0 otherwise.
cplx character_sum(const FiniteAbelianGroup& g, const DualElement& x);

}  // namespace cdyn
