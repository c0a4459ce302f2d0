#pragma once

#include "orbitkit/exact_linalg.hpp"
#include "orbitkit/lattice.hpp"

#include <string>
#include <vector>

namespace orbitkit {

struct NotInFamily : GroupError {
  using GroupError::GroupError;
};

// A family of subgroups closed under conjugation and under passing to
// subgroups; objects of the orbit category are G/K for K in the family.
struct Family {
  std::string label;
  std::vector<int> subgroups;  // sorted subgroup indices
  std::vector<char> member;    // indexed by subgroup
  std::vector<int> classes;    // lattice class ids, ascending
};

Family all_subgroup_family(const SubgroupLattice& lat);
Family p_subgroup_family(const SubgroupLattice& lat, long p);
void validate_family(const FiniteGroup& g, const SubgroupLattice& lat, const Family& fam);

// Morphisms G/V -> G/K are the cosets Kg with gVg^-1 <= K, equivalently the
// V-fixed points of G/K; each is stored by the minimal element of its coset.
// A morphism with rep g sends the coset Vx to K(gx); composition multiplies
// reps.  Only a chosen representative V, K per conjugacy class is carried
// (one object per isomorphism class).
//
// The group and lattice are referenced, not copied: they must outlive the
// category and must not move.  Everything is immutable after construction.
class OrbitCategory {
 public:
  OrbitCategory(const FiniteGroup& g, const SubgroupLattice& lat, Family fam);

  const FiniteGroup& group() const { return *g_; }
  const SubgroupLattice& lattice() const { return *lat_; }
  const Family& family() const { return fam_; }

  int objects() const { return static_cast<int>(fam_.classes.size()); }
  int object_class(int fc) const { return fam_.classes[fc]; }
  int object_subgroup(int fc) const { return lat_->class_rep[fam_.classes[fc]]; }
  int fc_of_class(int cls) const;  // -1 when the class is not in the family

  // morphisms G/V -> G/K for the objects at family positions v, k
  const std::vector<int>& mor_reps(int v, int k) const { return mor_[v][k]; }
  int mor_count(int v, int k) const { return static_cast<int>(mor_[v][k].size()); }

  // composite of outer in Mor(k, q) with inner in Mor(v, k), as an index into
  // Mor(v, q)
  int compose(int v, int k, int q, int outer, int inner) const;
  int identity_morphism(int fc) const;

  // Aut(G/Q) = Mor(q, q) is N_G(Q)/Q
  const QuotientGroup& weyl_group(int fc) const { return weyl_[fc]; }
  int morphism_to_weyl(int fc, int m) const;
  int weyl_to_morphism(int fc, int w) const;

 private:
  const FiniteGroup* g_;
  const SubgroupLattice* lat_;
  Family fam_;
  std::vector<std::vector<std::vector<int>>> mor_;        // [v][k] -> coset reps
  std::vector<std::vector<std::vector<int>>> mor_index_;  // [v][k][coset rep elem] -> index
  std::vector<std::vector<int>> coset_min_;               // [k][elem] -> min of K·elem
  std::vector<QuotientGroup> weyl_;
};

// A right R(orbit category)-module on the family objects: a free value module
// per object and one exact matrix per morphism, contravariantly
// (mats[v][k][m] : value(k) -> value(v) for m in Mor(v, k)).
struct OrbitModule {
  Ring ring;
  std::vector<int> rank;
  std::vector<std::vector<std::vector<RatMatrix>>> mats;
};

// identity morphisms map to identities, composites to products (exhaustive)
void validate_orbit_module(const OrbitCategory& cat, const OrbitModule& m);

// A module over R[N_G(Q)/Q], right action given per Weyl element;
// action[mul(w1,w2)] = action[w2] * action[w1] in column convention.
struct WeylModule {
  Ring ring;
  int rank = 0;
  std::vector<RatMatrix> action;
};

WeylModule regular_weyl_module(const QuotientGroup& w, const Ring& ring);
void validate_weyl_module(const QuotientGroup& w, const WeylModule& n);

// R[X] as an orbit-category module: value at [Q] is free on X^Q, morphisms
// act by translating fixed points.
OrbitModule fixed_point_module(const OrbitCategory& cat, const ConcreteGSet& x, const Ring& ring);

// S_Q(M) = M(Q) / (images of everything induced from strictly larger family
// members).  Over a field the quotient carries the residual Weyl action;
// over Z the quotient is reported as free rank plus invariant factors.
struct SplitModule {
  Ring ring;
  long quotient_rank = 0;
  std::vector<Int> invariant_factors;   // entries > 1, Z only
  std::vector<RatMatrix> weyl_action;   // fields only
};
SplitModule split_functor(const OrbitCategory& cat, const OrbitModule& m, int q_fc);

// E_Q(N) = N tensored over R[W_G(Q)] with the free module R[G/Q]
OrbitModule extension_functor(const OrbitCategory& cat, const WeylModule& n, int q_fc);

// I_Q(N): value N at [Q] and zero elsewhere
OrbitModule inclusion_functor(const OrbitCategory& cat, const WeylModule& n, int q_fc);

// Res_Q(M) = M(Q) with its Weyl action
WeylModule restriction_functor(const OrbitCategory& cat, const OrbitModule& m, int q_fc);

// number of N_G(Q)-orbits in (G/H)^Q
long n_hq(const FiniteGroup& g, const SubgroupLattice& lat, int h_subgroup, int q_subgroup);

// the projectivity criterion used for the permutation basis modules R[G/H]
// over the p-subgroup family: H must have a normal Sylow p-subgroup
bool is_projective_orbit_basis(const FiniteGroup& g, const SubgroupLattice& lat, int h_subgroup,
                               long p);

}  // namespace orbitkit
