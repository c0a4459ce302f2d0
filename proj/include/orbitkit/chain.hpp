#pragma once

#include "orbitkit/exact_linalg.hpp"
#include "orbitkit/lattice.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace orbitkit {

struct ChainValidationError : GroupError {
  enum class Kind { shape, not_equivariant, not_admissible, boundary_square, augmentation };
  Kind kind;
  int degree = -1;
  int cls = -1;
  ChainValidationError(Kind k, int degree_, int cls_, const std::string& msg)
      : GroupError(msg), kind(k), degree(degree_), cls(cls_) {}
};

struct ConstructionFailed : GroupError {
  using GroupError::GroupError;
};

// A chain complex of based permutation modules whose boundary maps are
// equivariant and admissible (they carry R[X^H] into R[Y^H] for every
// subgroup H).  The augmentation, when present, is the standard one (every
// degree-0 basis point maps to 1).
struct SpecialComplex {
  Ring ring;
  std::vector<ConcreteGSet> basis;     // degree 0 .. top
  std::vector<RatMatrix> boundaries;   // boundaries[i-1] : C_i -> C_{i-1}
  bool augmented = false;

  int top() const { return static_cast<int>(basis.size()) - 1; }
  int dim(int i) const {
    return (i >= 0 && i <= top()) ? basis[i].size : 0;
  }
  const RatMatrix& d(int i) const { return boundaries[i - 1]; }  // i in 1..top
};

// validates and returns the complex; throws ChainValidationError
SpecialComplex make_special_complex(const FiniteGroup& g, const SubgroupLattice& lat, Ring ring,
                                    std::vector<ConcreteGSet> bases,
                                    std::vector<RatMatrix> boundaries, bool augmented);

void validate_special_complex(const FiniteGroup& g, const SubgroupLattice& lat,
                              const SpecialComplex& c);

// A plain (non-equivariant) chain complex over the same rings.
struct PlainComplex {
  Ring ring;
  std::vector<int> dims;              // degree 0 .. top
  std::vector<RatMatrix> boundaries;  // boundaries[i-1] : C_i -> C_{i-1}

  int top() const { return static_cast<int>(dims.size()) - 1; }
  int dim(int i) const { return (i >= 0 && i <= top()) ? dims[i] : 0; }
  const RatMatrix& d(int i) const { return boundaries[i - 1]; }
};

PlainComplex underlying_complex(const SpecialComplex& c);

// restriction to the H-fixed bases; admissibility makes this a subcomplex
PlainComplex fixed_subcomplex(const FiniteGroup& g, const SpecialComplex& c,
                              const std::vector<int>& subgroup_members);

struct HomologySummary {
  long betti = 0;
  std::vector<Int> torsion;  // invariant factors > 1 (Z coefficients only)
  bool operator==(const HomologySummary&) const = default;
};

// per-degree homology: field dimensions, or Betti numbers plus torsion via
// the Smith form over Z
std::vector<HomologySummary> homology(const PlainComplex& c);

// reduced = false: H_0 = R and everything else vanishes.
// reduced = true: the complex augmented by the all-ones map to R is exact.
bool is_acyclic(const PlainComplex& c, bool reduced);
bool is_acyclic(const SpecialComplex& c, bool reduced);

struct AdmissibleChainMap {
  std::vector<RatMatrix> maps;  // maps[i] : C_i -> D_i, i = 0 .. max top
};

void validate_chain_map(const FiniteGroup& g, const SubgroupLattice& lat,
                        const SpecialComplex& src, const SpecialComplex& dst,
                        const AdmissibleChainMap& f);

AdmissibleChainMap identity_chain_map(const SpecialComplex& c);

// --------------------------------------------------------------------------
// G-splitting of an augmented Z-complex: equivariant integral sections s_i of
// every cycle sequence 0 -> Z_i -> C_i -> Z_{i-1} -> 0 of the augmented
// complex (Z_{-1} = Z below the augmentation).

struct SplitCertificate {
  // cycle_basis[i] : columns span Z_{i-1} inside the augmented complex
  // (for i = 0 this is the 1x1 matrix [1] spanning Z below epsilon);
  // section[i] : C_i -> ... with  d~_i * section[i] = cycle_basis[i]
  std::vector<IntMatrix> cycle_basis;
  std::vector<IntMatrix> section;
};

struct SplitFailure {
  int degree;
  std::string reason;
};

std::variant<SplitCertificate, SplitFailure> g_split_check(const FiniteGroup& g,
                                                           const SubgroupLattice& lat,
                                                           const SpecialComplex& c);

bool verify_split_certificate(const FiniteGroup& g, const SpecialComplex& c,
                              const SplitCertificate& cert);

// --------------------------------------------------------------------------
// Kropholler-Wall harness over a field: if f restricts to a quasi-isomorphism
// on every H-fixed subcomplex, produce a verified chain homotopy inverse
//   g f - id = d s + s d      on the source,
//   f g - id = d t + t d      on the target,
// with g, s, t all equivariant and admissible.

struct HomotopyCertificate {
  AdmissibleChainMap inverse;   // g : D -> C
  std::vector<RatMatrix> s;     // s[i] : C_i -> C_{i+1}
  std::vector<RatMatrix> t;     // t[i] : D_i -> D_{i+1}
};

struct QuasiIsoFailure {
  int cls;     // lattice class of the witnessing subgroup
  int degree;
};

std::variant<HomotopyCertificate, QuasiIsoFailure> kw_equivalence(const FiniteGroup& g,
                                                                  const SubgroupLattice& lat,
                                                                  const SpecialComplex& src,
                                                                  const SpecialComplex& dst,
                                                                  const AdmissibleChainMap& f);

bool verify_homotopy_certificate(const FiniteGroup& g, const SubgroupLattice& lat,
                                 const SpecialComplex& src, const SpecialComplex& dst,
                                 const AdmissibleChainMap& f, const HomotopyCertificate& cert);

// C tensored down to the orbits: basis per degree = G-orbits of the basis,
// boundary induced by collapsing each orbit
PlainComplex quotient_complex(const FiniteGroup& g, const SpecialComplex& c);

// the permutation matrix of g on a basis gset
RatMatrix basis_perm_matrix(const ConcreteGSet& x, int g_elem);

}  // namespace orbitkit
