#pragma once

#include "orbitkit/burnside.hpp"
#include "orbitkit/exact_linalg.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace orbitkit {

struct PPowerOrder : GroupError {
  using GroupError::GroupError;
};

// A mod-p resolving function is a super class function phi with
//   (1) |W_G(K)| divides phi(K) for every class, and
//   (2) sum_{K <= L} phi([L]) = 0 over actual subgroups L, for every
//       p-hypoelementary K.
// The certificate carries both families of checks so they can be re-verified
// independently of the decision path.

struct DivisibilityRecord {
  int cls;
  Int value;
  long long modulus;
};

struct VanishingRecord {
  int cls;  // a p-hypoelementary class
  Int sum;  // must be zero
};

struct ResolvingCertificate {
  std::optional<long> p;  // absent for the integral case
  SuperClassFunction phi;
  std::vector<DivisibilityRecord> divisibility;
  std::vector<VanishingRecord> vanishing;
};

struct ResolvingFailure {
  enum class Condition { divisibility, vanishing };
  Condition condition;
  int cls;
  Int value;  // offending value (phi(K) or the nonzero sum)
};

std::variant<ResolvingCertificate, ResolvingFailure> is_resolving(const BurnsideContext& ctx,
                                                                  const SuperClassFunction& phi,
                                                                  long p);

bool verify_certificate(const BurnsideContext& ctx, const ResolvingCertificate& cert);

struct ResolvingLattice {
  std::optional<long> p;
  std::vector<SuperClassFunction> basis;
};

ResolvingLattice resolving_lattice(const BurnsideContext& ctx, long p);
ResolvingLattice integral_resolving_lattice(const BurnsideContext& ctx);

// gcd of |phi(G)| over the lattice basis; 0 when the coordinate vanishes
// identically
Int m_p_lattice(const BurnsideContext& ctx, long p);
Int m_p_closed_form(const BurnsideContext& ctx, long p);
Int m_integral(const BurnsideContext& ctx);

// chi realizable as chi(X^G) of a finite mod-p acyclic complex:
// chi ≡ 1 (mod m_p); m_p = 0 demands chi = 1, m_p = 1 accepts everything.
// Throws PPowerOrder when |G| is a power of p.
bool realizable_fixed_euler(const BurnsideContext& ctx, long p, const Int& chi);

// The Burnside element with marks 1 + theta_inv(phi); exists whenever phi is
// resolving (Lemma: theta_inv(phi) lies in the image of rho).
BurnsideElement oliver_burnside_element(const BurnsideContext& ctx, const SuperClassFunction& phi,
                                        long p);

}  // namespace orbitkit
