#include "orbitkit/resolving.hpp"

#include "orbitkit/classify.hpp"

#include <algorithm>
#include <set>

namespace orbitkit {

std::variant<ResolvingCertificate, ResolvingFailure> is_resolving(const BurnsideContext& ctx,
                                                                  const SuperClassFunction& phi,
                                                                  long p) {
  const SubgroupLattice& lat = ctx.lattice();
  ResolvingCertificate cert;
  cert.p = p;
  cert.phi = phi;
  for (int c = 0; c < ctx.classes(); ++c) {
    if (phi.value[c] % lat.weyl[c] != 0)
      return ResolvingFailure{ResolvingFailure::Condition::divisibility, c, phi.value[c]};
    cert.divisibility.push_back({c, phi.value[c], lat.weyl[c]});
  }
  SuperClassFunction sums = ctx.theta_inv(phi);
  for (int c : hypoelementary_classes(ctx.group(), lat, p)) {
    if (sums.value[c] != 0)
      return ResolvingFailure{ResolvingFailure::Condition::vanishing, c, sums.value[c]};
    cert.vanishing.push_back({c, sums.value[c]});
  }
  return cert;
}

bool verify_certificate(const BurnsideContext& ctx, const ResolvingCertificate& cert) {
  const SubgroupLattice& lat = ctx.lattice();
  for (const DivisibilityRecord& r : cert.divisibility) {
    if (r.modulus != lat.weyl[r.cls]) return false;
    if (cert.phi.value[r.cls] != r.value || r.value % r.modulus != 0) return false;
  }
  SuperClassFunction sums = ctx.theta_inv(cert.phi);
  for (const VanishingRecord& r : cert.vanishing)
    if (r.sum != 0 || sums.value[r.cls] != 0) return false;
  if (cert.p) {
    // every hypoelementary class must be covered
    std::set<int> covered;
    for (const VanishingRecord& r : cert.vanishing) covered.insert(r.cls);
    for (int c : hypoelementary_classes(ctx.group(), lat, *cert.p))
      if (!covered.count(c)) return false;
  }
  return cert.divisibility.size() == static_cast<size_t>(ctx.classes());
}

namespace {

// Substituting phi(d) = weyl(d) * y_d turns condition (2) into one linear
// constraint per hypoelementary class; the resolving lattice is the integer
// kernel, mapped back to phi-coordinates.
ResolvingLattice lattice_from_constraints(const BurnsideContext& ctx,
                                          const std::vector<int>& constraint_classes,
                                          std::optional<long> p) {
  const SubgroupLattice& lat = ctx.lattice();
  const int nc = ctx.classes();
  IntMatrix b(static_cast<int>(constraint_classes.size()), nc);
  for (size_t r = 0; r < constraint_classes.size(); ++r)
    for (int d = 0; d < nc; ++d)
      b.at(static_cast<int>(r), d) =
          Int(lat.sup_count[constraint_classes[r]][d]) * lat.weyl[d];
  ResolvingLattice out;
  out.p = p;
  for (const std::vector<Int>& y : kernel_basis(b)) {
    SuperClassFunction phi = ctx.zero_function();
    for (int d = 0; d < nc; ++d) phi.value[d] = y[d] * lat.weyl[d];
    out.basis.push_back(std::move(phi));
  }
  return out;
}

Int lattice_gcd_at_full_class(const BurnsideContext& ctx, const ResolvingLattice& l) {
  Int g = 0;
  for (const SuperClassFunction& phi : l.basis) g = int_gcd(g, phi.value[ctx.classes() - 1]);
  return int_abs(g);
}

}  // namespace

ResolvingLattice resolving_lattice(const BurnsideContext& ctx, long p) {
  return lattice_from_constraints(ctx, hypoelementary_classes(ctx.group(), ctx.lattice(), p), p);
}

ResolvingLattice integral_resolving_lattice(const BurnsideContext& ctx) {
  std::vector<int> constraints;
  for (long p : distinct_prime_factors(ctx.group().order))
    for (int c : hypoelementary_classes(ctx.group(), ctx.lattice(), p)) constraints.push_back(c);
  if (ctx.group().order == 1) constraints.push_back(0);  // trivial group: K = 1 = G
  return lattice_from_constraints(ctx, constraints, std::nullopt);
}

Int m_p_lattice(const BurnsideContext& ctx, long p) {
  return lattice_gcd_at_full_class(ctx, resolving_lattice(ctx, p));
}

Int m_p_closed_form(const BurnsideContext& ctx, long p) {
  const FiniteGroup& g = ctx.group();
  const SubgroupLattice& lat = ctx.lattice();
  if (is_p_hypoelementary(g, lat, static_cast<int>(lat.members.size()) - 1, p)) return 0;
  if (!in_gp(g, lat, p)) return 1;
  Int m = 1;
  for (long q : distinct_prime_factors(g.order))
    if (in_gpq(g, lat, p, q)) m *= q;
  return m;
}

Int m_integral(const BurnsideContext& ctx) {
  return lattice_gcd_at_full_class(ctx, integral_resolving_lattice(ctx));
}

bool realizable_fixed_euler(const BurnsideContext& ctx, long p, const Int& chi) {
  if (is_prime_power_of(ctx.group().order, p))
    throw PPowerOrder("realizable_fixed_euler: |G| is a power of p");
  Int m = m_p_lattice(ctx, p);
  if (m == 0) return chi == 1;
  return (chi - 1) % m == 0;
}

BurnsideElement oliver_burnside_element(const BurnsideContext& ctx, const SuperClassFunction& phi,
                                        long p) {
  auto check = is_resolving(ctx, phi, p);
  if (!std::holds_alternative<ResolvingCertificate>(check))
    throw GroupError("oliver_burnside_element: phi is not a mod-p resolving function");
  SuperClassFunction v = ctx.theta_inv(phi);
  for (Int& x : v.value) x += 1;
  auto elt = ctx.rho_solve(v);
  if (!elt)
    throw GroupError("oliver_burnside_element: 1 + theta_inv(phi) not in the image of rho");
  return *elt;
}

}  // namespace orbitkit
