#pragma once

#include "orbitkit/burnside.hpp"
#include "orbitkit/chain.hpp"
#include "orbitkit/gcw.hpp"
#include "orbitkit/orbit_cat.hpp"
#include "orbitkit/resolving.hpp"

#include "json.hpp"

#include <string>

namespace orbitkit {

using Json = nlohmann::json;

struct JsonFormatError : GroupError {
  using GroupError::GroupError;
};

// scalars: integers are emitted as JSON numbers when they fit, otherwise as
// decimal strings; rationals with denominator != 1 as "a/b"
Json int_to_json(const Int& v);
Json rat_to_json(const Rat& v);
Int int_from_json(const Json& j);
Rat rat_from_json(const Json& j);

Json ring_to_json(const Ring& r);
Ring ring_from_json(const Json& j);

// {"preset": "S", "n": 3} or {"degree": d, "generators": [[...], ...]}
FiniteGroup group_from_json(const Json& j, int order_cap = kDefaultOrderCap);
Json group_to_json(const FiniteGroup& g);

Json lattice_to_json(const FiniteGroup& g, const SubgroupLattice& lat);
Json marks_to_json(const BurnsideContext& ctx);

// {"act": [[...] per group element]} or {"orbits": ["C2", "1", ...]}
ConcreteGSet gset_from_json(const FiniteGroup& g, const SubgroupLattice& lat, const Json& j);
Json gset_to_json(const ConcreteGSet& x);

Json matrix_to_json(const RatMatrix& m);
RatMatrix matrix_from_json(const Json& j, int rows, int cols);

// {"ring": ..., "augmented": ..., "bases": [...], "boundaries": [...]}
SpecialComplex complex_from_json(const FiniteGroup& g, const SubgroupLattice& lat, const Json& j);
Json complex_to_json(const SpecialComplex& c);

Json plain_complex_to_json(const PlainComplex& c);
Json homology_to_json(const std::vector<HomologySummary>& h);

// {"vertices": n, "action": [[...] per group generator], "simplices": [...]}
GSimplicialComplex simplicial_from_json(const FiniteGroup& g, const Json& j);
Json simplicial_to_json(const GSimplicialComplex& k);

// value ranks and morphism matrices of an orbit-category module
Json orbit_module_to_json(const OrbitCategory& cat, const OrbitModule& m);

Json split_certificate_to_json(const SplitCertificate& cert);
Json homotopy_certificate_to_json(const HomotopyCertificate& cert);
Json resolving_certificate_to_json(const SubgroupLattice& lat, const ResolvingCertificate& cert);

// signed integer combinations of [G/NAME] tokens, e.g. "[G/1]+2[G/G]"
BurnsideElement parse_burnside_expr(const SubgroupLattice& lat, const std::string& expr);
std::string burnside_to_string(const SubgroupLattice& lat, const BurnsideElement& x);

// comma-separated integers in class order
SuperClassFunction parse_class_function(const SubgroupLattice& lat, const std::string& csv);

Json burnside_to_json(const SubgroupLattice& lat, const BurnsideElement& x);
Json class_function_to_json(const SubgroupLattice& lat, const SuperClassFunction& f);

}  // namespace orbitkit
