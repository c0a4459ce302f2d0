#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace orbitkit {

struct GroupError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct OrderCapExceeded : GroupError {
  using GroupError::GroupError;
};
struct NotAPermutation : GroupError {
  using GroupError::GroupError;
};
struct UnknownPreset : GroupError {
  using GroupError::GroupError;
};

// A permutation on {0..degree-1}, stored as its image list.
using Perm = std::vector<int>;

Perm perm_identity(int degree);
Perm perm_compose(const Perm& first, const Perm& then);  // x -> then[first[x]]
Perm perm_inverse(const Perm& p);

inline constexpr int kDefaultOrderCap = 400;

// Convention fixed once for the whole project: groups act on the RIGHT.
// mul(a, b) is "a then b", i.e. x·mul(a,b) = (x·a)·b, and for the backing
// permutations perm[mul(a,b)] = perm_compose(perm[a], perm[b]).
// Element 0 is the identity.
struct FiniteGroup {
  int order = 1;
  std::vector<int> mul_table;
  std::vector<int> inv_table;
  int degree = 1;
  std::vector<Perm> element_perm;
  std::vector<int> gen_elems;   // generator element indices
  std::vector<int> bfs_parent;  // element = mul(bfs_parent, gen_elems[bfs_gen])
  std::vector<int> bfs_gen;
  std::string name = "G";

  int mul(int a, int b) const { return mul_table[static_cast<size_t>(a) * order + b]; }
  int inv(int a) const { return inv_table[a]; }
  int conjugate(int x, int g) const { return mul(inv(g), mul(x, g)); }  // g^-1 x g
  int element_order(int a) const;
  bool is_cyclic() const;

  // g^-1 M g as a sorted element set
  std::vector<int> conjugate_set(const std::vector<int>& members, int g) const;
};

// Checks the Cayley axioms exhaustively; throws GroupError on violation.
void validate_group(const FiniteGroup& g);

FiniteGroup group_from_generators(int degree, const std::vector<Perm>& gens,
                                  int order_cap = kDefaultOrderCap);

// Catalog: C n, S n, A n, D n (dihedral of order 2n, n >= 3), Q 8,
// E p^k (elementary abelian).
FiniteGroup group_preset(const std::string& family, int n, int order_cap = kDefaultOrderCap);

// "S3" -> ("S", 3); nullopt if the label does not parse.
std::optional<std::pair<std::string, int>> parse_preset_label(const std::string& label);

// Subgroups as sorted element-index sets.
std::vector<int> closure_subgroup(const FiniteGroup& g, std::vector<int> seed);
bool is_subgroup_set(const FiniteGroup& g, const std::vector<int>& members);

// H/N for N normal in H (not checked against non-normal N: throws).
struct QuotientGroup {
  FiniteGroup group;           // degree 0, no backing permutations
  std::vector<int> coset_rep;  // quotient element -> representative in G
  std::vector<int> coset_of;   // G element -> quotient element, -1 outside H
};
QuotientGroup quotient_group(const FiniteGroup& g, const std::vector<int>& h_members,
                             const std::vector<int>& n_members);

}  // namespace orbitkit
