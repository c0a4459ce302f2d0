#pragma once

#include "orbitkit/group.hpp"

#include <vector>

namespace orbitkit {

// A finite right G-set given by its full action table.
struct ConcreteGSet {
  int size = 0;
  std::vector<int> act;  // act[g*size + x] = x·g

  int apply(int g, int x) const { return act[static_cast<size_t>(g) * size + x]; }
};

void validate_gset(const FiniteGroup& g, const ConcreteGSet& x);  // throws GroupError

ConcreteGSet trivial_gset(const FiniteGroup& g, int n_points);
ConcreteGSet regular_gset(const FiniteGroup& g);

// the defining permutation action of a permutation-backed group
ConcreteGSet natural_gset(const FiniteGroup& g);

// Right cosets Hg with action by right translation; points ordered by their
// minimal element, so the layout is deterministic.
ConcreteGSet coset_gset(const FiniteGroup& g, const std::vector<int>& subgroup_members);

ConcreteGSet product_gset(const FiniteGroup& g, const ConcreteGSet& x, const ConcreteGSet& y);
ConcreteGSet disjoint_union_gset(const FiniteGroup& g, const ConcreteGSet& x,
                                 const ConcreteGSet& y);

// Extend a generator action to the whole group along the closure words;
// validates the result.
ConcreteGSet gset_from_generator_action(const FiniteGroup& g, int n_points,
                                        const std::vector<Perm>& gen_images);

std::vector<int> fixed_points(const FiniteGroup& g, const ConcreteGSet& x,
                              const std::vector<int>& subgroup_members);

std::vector<int> point_stabilizer(const FiniteGroup& g, const ConcreteGSet& x, int point);

struct OrbitData {
  int count = 0;
  std::vector<int> orbit_of;   // point -> orbit id
  std::vector<int> rep;        // orbit -> representative point (minimal index)
  std::vector<int> transport;  // point -> some g with rep·g = point
};
OrbitData orbits(const FiniteGroup& g, const ConcreteGSet& x);

}  // namespace orbitkit
