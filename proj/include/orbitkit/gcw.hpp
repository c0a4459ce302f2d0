#pragma once

#include "orbitkit/burnside.hpp"
#include "orbitkit/chain.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace orbitkit {

struct NotRegular : GroupError {
  using GroupError::GroupError;
};

// A finite simplicial complex with a G-action on its vertex set that
// permutes the simplices.  Regular means: whenever g maps a simplex to
// itself it fixes it pointwise ("gcw" = the complexes feeding the chain
// machinery).
struct GSimplicialComplex {
  ConcreteGSet vertices;
  std::vector<std::vector<std::vector<int>>> simplices;  // [dim] -> sorted vertex lists

  int top_dim() const { return static_cast<int>(simplices.size()) - 1; }
  long simplex_count(int dim) const {
    return dim >= 0 && dim <= top_dim() ? static_cast<long>(simplices[dim].size()) : 0;
  }
};

// validates face closure and G-stability; throws GroupError
GSimplicialComplex make_complex(const FiniteGroup& g, const ConcreteGSet& vertices,
                                const std::vector<std::vector<int>>& simplices);

// full simplex / boundary of the simplex on the vertex gset
GSimplicialComplex full_simplex(const FiniteGroup& g, const ConcreteGSet& vertices);
GSimplicialComplex boundary_simplex(const FiniteGroup& g, const ConcreteGSet& vertices);

// nullopt when regular; otherwise a witness (group element, dim, simplex
// index) that fixes the simplex setwise but not pointwise
struct RegularityWitness {
  int g_elem;
  int dim;
  int simplex;
};
std::optional<RegularityWitness> validate_regular(const FiniteGroup& g,
                                                  const GSimplicialComplex& k);

// vertices = simplices of K, simplices = chains of faces; always regular
GSimplicialComplex barycentric_subdivision(const FiniteGroup& g, const GSimplicialComplex& k);

// adds a fresh G-fixed apex; requires K regular
GSimplicialComplex cone(const FiniteGroup& g, const GSimplicialComplex& k);

// the subcomplex of simplices fixed pointwise by H (K must be regular);
// returned with vertices reindexed
struct FixedComplex {
  int vertex_count = 0;
  std::vector<int> vertex_ids;  // original vertex index per new index
  std::vector<std::vector<std::vector<int>>> simplices;  // new vertex indices
};
FixedComplex fixed_complex(const FiniteGroup& g, const GSimplicialComplex& k,
                           const std::vector<int>& subgroup_members);
long euler_characteristic(const FiniteGroup& g, const GSimplicialComplex& k,
                          const std::vector<int>& subgroup_members);

// cellular chains as a special complex; boundary signs come from transporting
// an ordered representative along each orbit (well defined by regularity)
SpecialComplex cellular_chain_complex(const FiniteGroup& g, const SubgroupLattice& lat,
                                      const GSimplicialComplex& k, const Ring& ring,
                                      bool augmented);

// sum over dimensions of (-1)^k [orbits of k-simplices] in B(G)
BurnsideElement burnside_class(const BurnsideContext& ctx, const GSimplicialComplex& k);

}  // namespace orbitkit
