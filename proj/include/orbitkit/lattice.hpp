#pragma once

#include "orbitkit/group.hpp"
#include "orbitkit/gset.hpp"
#include "orbitkit/numeric.hpp"

#include <map>
#include <string>
#include <vector>

namespace orbitkit {

struct NotComparable : GroupError {
  using GroupError::GroupError;
};

// Every subgroup of G, the conjugation classes with a canonical representative
// each, the containment order, normalizers, Weyl orders, and the full Möbius
// table of the subgroup poset.
//
// Classes are sorted by (subgroup order, lexicographically least member list
// of the representative); this makes the table of marks lower-triangular and
// all downstream output deterministic.
struct SubgroupLattice {
  std::vector<std::vector<int>> members;  // sorted element lists
  std::vector<int> sub_order;

  int num_classes = 0;
  std::vector<int> class_of;
  std::vector<int> class_rep;                    // class -> subgroup index
  std::vector<std::vector<int>> class_members;   // class -> subgroup indices
  std::vector<std::string> class_name;

  std::vector<std::vector<char>> leq;  // leq[s][t] : s <= t
  std::vector<int> normalizer;         // subgroup -> subgroup index of N_G(K)
  std::vector<long long> weyl;         // class -> |N_G(K)/K|

  std::vector<std::vector<long long>> mobius_table;  // [s][t], 0 when s !<= t

  // per class pair (c, d): subgroups L in class d with L >= rep(c), counted
  // plainly and with Möbius weights (these aggregate the theta sums)
  std::vector<std::vector<long long>> sup_count;
  std::vector<std::vector<long long>> sup_mobius;

  std::map<std::vector<int>, int> index_of;

  int subgroup_index(const std::vector<int>& m) const;
  int trivial_class() const { return 0; }
  int full_class() const { return num_classes - 1; }
  long long mobius(int s, int t) const;   // throws NotComparable unless s <= t
  int class_by_name(const std::string& name) const;  // -1 if unknown
};

SubgroupLattice subgroup_lattice(const FiniteGroup& g);

// Orbit counts of X per stabilizer class (the coefficients of the Burnside
// decomposition).
std::vector<Int> orbit_class_counts(const FiniteGroup& g, const SubgroupLattice& lat,
                                    const ConcreteGSet& x);

}  // namespace orbitkit
