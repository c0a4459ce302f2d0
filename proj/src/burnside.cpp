#include "orbitkit/burnside.hpp"

#include "orbitkit/classify.hpp"

namespace orbitkit {

bool ObsElement::is_zero() const {
  for (const Int& r : residue)
    if (r != 0) return false;
  return true;
}

BurnsideContext::BurnsideContext(const FiniteGroup& g, const SubgroupLattice& lat)
    : g_(&g), lat_(&lat) {
  const int nc = lat.num_classes;
  marks_.assign(nc, std::vector<long long>(nc, 0));
  std::vector<ConcreteGSet> orbits_by_class;
  for (int c = 0; c < nc; ++c) {
    orbits_by_class.push_back(coset_gset(g, lat.members[lat.class_rep[c]]));
    for (int d = 0; d < nc; ++d)
      marks_[c][d] = static_cast<long long>(
          fixed_points(g, orbits_by_class[c], lat.members[lat.class_rep[d]]).size());
  }
  // basis products up front; everything after construction is read-only
  basis_product_.assign(nc, std::vector<BurnsideElement>(nc));
  for (int c = 0; c < nc; ++c)
    for (int d = c; d < nc; ++d) {
      basis_product_[c][d] = BurnsideElement{
          orbit_class_counts(g, lat, product_gset(g, orbits_by_class[c], orbits_by_class[d]))};
      basis_product_[d][c] = basis_product_[c][d];
    }
}

BurnsideElement BurnsideContext::zero_element() const {
  return {std::vector<Int>(classes(), Int(0))};
}

BurnsideElement BurnsideContext::basis_element(int cls) const {
  BurnsideElement x = zero_element();
  x.coeff[cls] = 1;
  return x;
}

SuperClassFunction BurnsideContext::zero_function() const {
  return {std::vector<Int>(classes(), Int(0))};
}

SuperClassFunction BurnsideContext::rho(const BurnsideElement& x) const {
  SuperClassFunction v = zero_function();
  for (int d = 0; d < classes(); ++d)
    for (int c = 0; c < classes(); ++c)
      if (x.coeff[c] != 0 && marks_[c][d] != 0) v.value[d] += x.coeff[c] * marks_[c][d];
  return v;
}

std::optional<BurnsideElement> BurnsideContext::rho_solve(const SuperClassFunction& v) const {
  // triangular back-substitution; diagonal entries are the Weyl orders
  BurnsideElement x = zero_element();
  for (int d = classes() - 1; d >= 0; --d) {
    Int t = v.value[d];
    for (int c = d + 1; c < classes(); ++c)
      if (marks_[c][d] != 0) t -= x.coeff[c] * marks_[c][d];
    if (t % marks_[d][d] != 0) return std::nullopt;
    x.coeff[d] = t / marks_[d][d];
  }
  return x;
}

SuperClassFunction BurnsideContext::theta(const SuperClassFunction& f) const {
  SuperClassFunction out = zero_function();
  const auto& w = lat_->sup_mobius;
  for (int c = 0; c < classes(); ++c)
    for (int d = 0; d < classes(); ++d)
      if (w[c][d] != 0 && f.value[d] != 0) out.value[c] += Int(w[c][d]) * f.value[d];
  return out;
}

SuperClassFunction BurnsideContext::theta_inv(const SuperClassFunction& f) const {
  SuperClassFunction out = zero_function();
  const auto& w = lat_->sup_count;
  for (int c = 0; c < classes(); ++c)
    for (int d = 0; d < classes(); ++d)
      if (w[c][d] != 0 && f.value[d] != 0) out.value[c] += Int(w[c][d]) * f.value[d];
  return out;
}

SuperClassFunction BurnsideContext::eta(const BurnsideElement& x) const {
  SuperClassFunction out = zero_function();
  for (int c = 0; c < classes(); ++c) out.value[c] = x.coeff[c] * lat_->weyl[c];
  return out;
}

ObsElement BurnsideContext::gamma(const SuperClassFunction& f) const {
  ObsElement out;
  out.residue.resize(classes());
  for (int c = 0; c < classes(); ++c) {
    Int m = lat_->weyl[c];
    Int r = f.value[c] % m;
    if (r < 0) r += m;
    out.residue[c] = r;
  }
  return out;
}

ObsElement BurnsideContext::psi(const SuperClassFunction& f) const { return gamma(theta(f)); }

BurnsideElement BurnsideContext::add(const BurnsideElement& x, const BurnsideElement& y) const {
  BurnsideElement z = x;
  for (int c = 0; c < classes(); ++c) z.coeff[c] += y.coeff[c];
  return z;
}

ObsElement BurnsideContext::obs_add(const ObsElement& x, const ObsElement& y) const {
  ObsElement z;
  z.residue.resize(classes());
  for (int c = 0; c < classes(); ++c) z.residue[c] = (x.residue[c] + y.residue[c]) % lat_->weyl[c];
  return z;
}

BurnsideElement BurnsideContext::mul(const BurnsideElement& x, const BurnsideElement& y) const {
  // bilinear extension over the orbit basis
  BurnsideElement z = zero_element();
  for (int c = 0; c < classes(); ++c) {
    if (x.coeff[c] == 0) continue;
    for (int d = 0; d < classes(); ++d) {
      if (y.coeff[d] == 0) continue;
      const BurnsideElement& p = basis_product_[c][d];
      Int f = x.coeff[c] * y.coeff[d];
      for (int e = 0; e < classes(); ++e)
        if (p.coeff[e] != 0) z.coeff[e] += f * p.coeff[e];
    }
  }
  return z;
}

BurnsideElement BurnsideContext::orbit_decomposition(const ConcreteGSet& x) const {
  return {orbit_class_counts(*g_, *lat_, x)};
}

ConcreteGSet BurnsideContext::realize(const BurnsideElement& x) const {
  ConcreteGSet acc = trivial_gset(*g_, 0);
  for (int c = 0; c < classes(); ++c) {
    if (x.coeff[c] < 0) throw GroupError("realize: negative coefficient");
    ConcreteGSet orbit = coset_gset(*g_, lat_->members[lat_->class_rep[c]]);
    for (Int k = 0; k < x.coeff[c]; ++k) acc = disjoint_union_gset(*g_, acc, orbit);
  }
  return acc;
}

bool BurnsideContext::conlon_equal(const BurnsideElement& x, const BurnsideElement& y,
                                   long p) const {
  return conlon_invariant(x, p) == conlon_invariant(y, p);
}

ConlonInvariant BurnsideContext::conlon_invariant(const BurnsideElement& x, long p) const {
  ConlonInvariant inv;
  inv.p = p;
  inv.classes = hypoelementary_classes(*g_, *lat_, p);
  SuperClassFunction v = rho(x);
  for (int c : inv.classes) inv.marks.push_back(v.value[c]);
  return inv;
}

}  // namespace orbitkit
