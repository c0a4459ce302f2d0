#pragma once

#include "orbitkit/lattice.hpp"

#include <vector>

namespace orbitkit {

// Dress classes.  G_p^1 = p-hypoelementary groups (normal p-subgroup with
// cyclic quotient of order prime to p); G_p^q = groups with a normal G_p^1
// subgroup of q-power index; G_p = union over q.

// O_p(H): the largest normal p-subgroup, computed as the intersection of the
// Sylow p-subgroups of H.  Returns a subgroup index of the ambient lattice.
int largest_normal_p_subgroup(const FiniteGroup& g, const SubgroupLattice& lat, int subgroup,
                              long p);

bool is_p_hypoelementary(const FiniteGroup& g, const SubgroupLattice& lat, int subgroup, long p);

// true iff H has a normal (= unique) Sylow p-subgroup
bool has_normal_sylow(const FiniteGroup& g, const SubgroupLattice& lat, int subgroup, long p);

// Classes whose representatives are p-hypoelementary, ascending.
std::vector<int> hypoelementary_classes(const FiniteGroup& g, const SubgroupLattice& lat, long p);

bool in_gpq(const FiniteGroup& g, const SubgroupLattice& lat, long p, long q);
bool in_gp(const FiniteGroup& g, const SubgroupLattice& lat, long p);

struct DressClassification {
  long p = 0;
  std::vector<int> hypoelementary;  // class ids
  std::vector<long> gpq_primes;     // primes q with G in G_p^q
  bool in_gp = false;
};
DressClassification classify_group(const FiniteGroup& g, const SubgroupLattice& lat, long p);

}  // namespace orbitkit
