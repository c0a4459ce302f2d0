#pragma once

#include "orbitkit/lattice.hpp"
#include "orbitkit/numeric.hpp"

#include <optional>
#include <vector>

namespace orbitkit {

// The section-3 diagram:
//
//   0 -> B(G) --rho--> C(G) --psi--> Obs(G) -> 0
//   0 -> B(G) --eta--> C(G) -gamma-> Obs(G) -> 0
//
// with theta / theta_inv the vertical Möbius transforms, psi = gamma∘theta,
// and Obs(G) = ⊕_classes Z/|W_G(K)|Z.  Everything is indexed by the lattice's
// class order.

struct BurnsideElement {
  std::vector<Int> coeff;  // coefficient of [G/K] per class
  bool operator==(const BurnsideElement&) const = default;
};

struct SuperClassFunction {
  std::vector<Int> value;  // one integer per class
  bool operator==(const SuperClassFunction&) const = default;
};

struct ObsElement {
  std::vector<Int> residue;  // reduced into [0, weyl(c)); modulus-1 slots stay 0
  bool operator==(const ObsElement&) const = default;
  bool is_zero() const;
};

struct ConlonInvariant {
  long p = 0;
  std::vector<int> classes;     // the p-hypoelementary classes
  std::vector<Int> marks;       // marks restricted to them
  bool operator==(const ConlonInvariant&) const = default;
};

// Immutable after construction (the orbit-basis product table is filled
// eagerly), so contexts can be shared across threads.  The group and lattice
// are referenced, not copied: they must outlive the context and must not
// move.
class BurnsideContext {
 public:
  BurnsideContext(const FiniteGroup& g, const SubgroupLattice& lat);

  const FiniteGroup& group() const { return *g_; }
  const SubgroupLattice& lattice() const { return *lat_; }
  int classes() const { return lat_->num_classes; }

  // marks[c][d] = |(G/K_c)^{L_d}|; lower-triangular, diagonal = Weyl orders
  const std::vector<std::vector<long long>>& marks() const { return marks_; }

  BurnsideElement zero_element() const;
  BurnsideElement basis_element(int cls) const;  // [G/K_cls]
  SuperClassFunction zero_function() const;

  SuperClassFunction rho(const BurnsideElement& x) const;
  std::optional<BurnsideElement> rho_solve(const SuperClassFunction& v) const;  // nullopt: NotInImage
  SuperClassFunction theta(const SuperClassFunction& f) const;
  SuperClassFunction theta_inv(const SuperClassFunction& f) const;
  SuperClassFunction eta(const BurnsideElement& x) const;
  ObsElement gamma(const SuperClassFunction& f) const;
  ObsElement psi(const SuperClassFunction& f) const;

  BurnsideElement add(const BurnsideElement& x, const BurnsideElement& y) const;
  BurnsideElement mul(const BurnsideElement& x, const BurnsideElement& y) const;
  ObsElement obs_add(const ObsElement& x, const ObsElement& y) const;

  // orbit decomposition of a concrete G-set; realize() is its inverse for
  // nonnegative elements (disjoint union of coset sets)
  BurnsideElement orbit_decomposition(const ConcreteGSet& x) const;
  ConcreteGSet realize(const BurnsideElement& x) const;  // throws on negative coefficients

  bool conlon_equal(const BurnsideElement& x, const BurnsideElement& y, long p) const;
  ConlonInvariant conlon_invariant(const BurnsideElement& x, long p) const;

 private:
  const FiniteGroup* g_;
  const SubgroupLattice* lat_;
  std::vector<std::vector<long long>> marks_;
  std::vector<std::vector<BurnsideElement>> basis_product_;
};

}  // namespace orbitkit
