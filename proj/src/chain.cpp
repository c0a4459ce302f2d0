#include "orbitkit/chain.hpp"

#include "orbitkit/gset.hpp"

#include <algorithm>
#include <utility>

namespace orbitkit {

RatMatrix basis_perm_matrix(const ConcreteGSet& x, int g_elem) {
  RatMatrix p(x.size, x.size);
  for (int z = 0; z < x.size; ++z) p.at(x.apply(g_elem, z), z) = 1;
  return p;
}

namespace {

void check_ring_entries(const Ring& ring, const RatMatrix& m, int degree) {
  for (const Rat& e : m.a) {
    if (ring.kind == Ring::Kind::rationals) continue;
    if (boost::multiprecision::denominator(e) != 1)
      throw ChainValidationError(ChainValidationError::Kind::shape, degree, -1,
                                 "non-integral entry for this ring");
    if (ring.kind == Ring::Kind::gf) {
      Int n = boost::multiprecision::numerator(e);
      if (n < 0 || n >= ring.p)
        throw ChainValidationError(ChainValidationError::Kind::shape, degree, -1,
                                   "GF(p) entry out of range");
    }
  }
}

RatMatrix all_ones_row(int cols) {
  RatMatrix e(1, cols);
  for (int j = 0; j < cols; ++j) e.at(0, j) = 1;
  return e;
}

}  // namespace

SpecialComplex make_special_complex(const FiniteGroup& g, const SubgroupLattice& lat, Ring ring,
                                    std::vector<ConcreteGSet> bases,
                                    std::vector<RatMatrix> boundaries, bool augmented) {
  SpecialComplex c;
  c.ring = ring;
  c.basis = std::move(bases);
  for (RatMatrix& b : boundaries) c.boundaries.push_back(ring_normalize(ring, std::move(b)));
  c.augmented = augmented;
  validate_special_complex(g, lat, c);
  return c;
}

void validate_special_complex(const FiniteGroup& g, const SubgroupLattice& lat,
                              const SpecialComplex& c) {
  if (c.basis.empty())
    throw ChainValidationError(ChainValidationError::Kind::shape, -1, -1, "no degrees");
  if (c.boundaries.size() + 1 != c.basis.size())
    throw ChainValidationError(ChainValidationError::Kind::shape, -1, -1,
                               "need exactly one boundary per positive degree");
  for (int i = 0; i <= c.top(); ++i) validate_gset(g, c.basis[i]);
  for (int i = 1; i <= c.top(); ++i) {
    const RatMatrix& d = c.d(i);
    if (d.rows != c.dim(i - 1) || d.cols != c.dim(i))
      throw ChainValidationError(ChainValidationError::Kind::shape, i, -1,
                                 "boundary shape mismatch");
    check_ring_entries(c.ring, d, i);
  }

  // equivariance: d * P_g = P_g * d for every group element
  for (int i = 1; i <= c.top(); ++i)
    for (int e = 0; e < g.order; ++e) {
      RatMatrix lhs = rat_mul(c.d(i), basis_perm_matrix(c.basis[i], e));
      RatMatrix rhs = rat_mul(basis_perm_matrix(c.basis[i - 1], e), c.d(i));
      if (lhs != rhs)
        throw ChainValidationError(ChainValidationError::Kind::not_equivariant, i, -1,
                                   "boundary is not equivariant");
    }

  // admissibility: columns of H-fixed basis points stay in the H-fixed span
  for (int cls = 0; cls < lat.num_classes; ++cls) {
    const std::vector<int>& h = lat.members[lat.class_rep[cls]];
    for (int i = 1; i <= c.top(); ++i) {
      std::vector<char> fixed_row(c.dim(i - 1), 0);
      for (int r : fixed_points(g, c.basis[i - 1], h)) fixed_row[r] = 1;
      for (int col : fixed_points(g, c.basis[i], h))
        for (int r = 0; r < c.dim(i - 1); ++r)
          if (!fixed_row[r] && c.d(i).at(r, col) != 0)
            throw ChainValidationError(ChainValidationError::Kind::not_admissible, i, cls,
                                       "boundary is not admissible");
    }
  }

  for (int i = 2; i <= c.top(); ++i)
    if (!ring_mul(c.ring, c.d(i - 1), c.d(i)).is_zero())
      throw ChainValidationError(ChainValidationError::Kind::boundary_square, i, -1,
                                 "boundary squared is nonzero");
  if (c.augmented && c.top() >= 1)
    if (!ring_mul(c.ring, all_ones_row(c.dim(0)), c.d(1)).is_zero())
      throw ChainValidationError(ChainValidationError::Kind::augmentation, 1, -1,
                                 "augmentation does not kill boundaries");
}

PlainComplex underlying_complex(const SpecialComplex& c) {
  PlainComplex p;
  p.ring = c.ring;
  for (int i = 0; i <= c.top(); ++i) p.dims.push_back(c.dim(i));
  p.boundaries = c.boundaries;
  return p;
}

PlainComplex fixed_subcomplex(const FiniteGroup& g, const SpecialComplex& c,
                              const std::vector<int>& subgroup_members) {
  PlainComplex p;
  p.ring = c.ring;
  std::vector<std::vector<int>> fixed;
  for (int i = 0; i <= c.top(); ++i) {
    fixed.push_back(fixed_points(g, c.basis[i], subgroup_members));
    p.dims.push_back(static_cast<int>(fixed[i].size()));
  }
  for (int i = 1; i <= c.top(); ++i) {
    RatMatrix d(p.dims[i - 1], p.dims[i]);
    for (int col = 0; col < p.dims[i]; ++col)
      for (int row = 0; row < p.dims[i - 1]; ++row)
        d.at(row, col) = c.d(i).at(fixed[i - 1][row], fixed[i][col]);
    p.boundaries.push_back(std::move(d));
  }
  return p;
}

std::vector<HomologySummary> homology(const PlainComplex& c) {
  std::vector<HomologySummary> out(c.top() + 1);
  std::vector<int> rank(c.top() + 2, 0);
  std::vector<std::vector<Int>> torsion(c.top() + 2);
  for (int i = 1; i <= c.top(); ++i) {
    if (c.ring.is_field()) {
      rank[i] = field_rank(c.ring, c.d(i));
    } else {
      SmithDecomposition snf = smith_normal_form(to_int(c.d(i)));
      rank[i] = snf.rank;
      for (int k = 0; k < snf.rank; ++k)
        if (snf.diag(k) > 1) torsion[i].push_back(snf.diag(k));
    }
  }
  for (int i = 0; i <= c.top(); ++i) {
    out[i].betti = c.dim(i) - rank[i] - rank[i + 1];
    out[i].torsion = torsion[i + 1];
  }
  return out;
}

bool is_acyclic(const PlainComplex& c, bool reduced) {
  if (!reduced) {
    std::vector<HomologySummary> h = homology(c);
    if (h[0].betti != 1 || !h[0].torsion.empty()) return false;
    for (size_t i = 1; i < h.size(); ++i)
      if (h[i].betti != 0 || !h[i].torsion.empty()) return false;
    return true;
  }
  // exactness of the complex augmented by the all-ones map
  PlainComplex aug;
  aug.ring = c.ring;
  aug.dims.push_back(1);
  for (int d : c.dims) aug.dims.push_back(d);
  aug.boundaries.push_back(all_ones_row(c.dim(0)));
  for (const RatMatrix& b : c.boundaries) aug.boundaries.push_back(b);
  for (const HomologySummary& h : homology(aug))
    if (h.betti != 0 || !h.torsion.empty()) return false;
  return true;
}

bool is_acyclic(const SpecialComplex& c, bool reduced) {
  return is_acyclic(underlying_complex(c), reduced);
}

void validate_chain_map(const FiniteGroup& g, const SubgroupLattice& lat,
                        const SpecialComplex& src, const SpecialComplex& dst,
                        const AdmissibleChainMap& f) {
  if (src.ring != dst.ring)
    throw ChainValidationError(ChainValidationError::Kind::shape, -1, -1, "ring mismatch");
  int topmax = std::max(src.top(), dst.top());
  if (f.maps.size() != static_cast<size_t>(topmax) + 1)
    throw ChainValidationError(ChainValidationError::Kind::shape, -1, -1,
                               "one matrix per degree 0..max(top) required");
  for (int i = 0; i <= topmax; ++i) {
    if (f.maps[i].rows != dst.dim(i) || f.maps[i].cols != src.dim(i))
      throw ChainValidationError(ChainValidationError::Kind::shape, i, -1, "map shape mismatch");
    check_ring_entries(src.ring, f.maps[i], i);
  }
  for (int i = 0; i <= std::min(src.top(), dst.top()); ++i)
    for (int e = 0; e < g.order; ++e)
      if (rat_mul(f.maps[i], basis_perm_matrix(src.basis[i], e)) !=
          rat_mul(basis_perm_matrix(dst.basis[i], e), f.maps[i]))
        throw ChainValidationError(ChainValidationError::Kind::not_equivariant, i, -1,
                                   "chain map is not equivariant");
  for (int cls = 0; cls < lat.num_classes; ++cls) {
    const std::vector<int>& h = lat.members[lat.class_rep[cls]];
    for (int i = 0; i <= std::min(src.top(), dst.top()); ++i) {
      std::vector<char> fixed_row(dst.dim(i), 0);
      for (int r : fixed_points(g, dst.basis[i], h)) fixed_row[r] = 1;
      for (int col : fixed_points(g, src.basis[i], h))
        for (int r = 0; r < dst.dim(i); ++r)
          if (!fixed_row[r] && f.maps[i].at(r, col) != 0)
            throw ChainValidationError(ChainValidationError::Kind::not_admissible, i, cls,
                                       "chain map is not admissible");
    }
  }
  for (int i = 1; i <= topmax; ++i) {
    RatMatrix lhs = i <= dst.top() ? ring_mul(dst.ring, dst.d(i), f.maps[i])
                                   : RatMatrix(dst.dim(i - 1), src.dim(i));
    RatMatrix rhs = i <= src.top() ? ring_mul(dst.ring, f.maps[i - 1], src.d(i))
                                   : RatMatrix(dst.dim(i - 1), src.dim(i));
    if (lhs != rhs)
      throw ChainValidationError(ChainValidationError::Kind::shape, i, -1,
                                 "not a chain map: d f != f d");
  }
}

AdmissibleChainMap identity_chain_map(const SpecialComplex& c) {
  AdmissibleChainMap f;
  for (int i = 0; i <= c.top(); ++i) f.maps.push_back(RatMatrix::identity(c.dim(i)));
  return f;
}

// ---------------------------------------------------------------------------
// The shared search: an equivariant u : R[Xa] -> R[Xb] with  d u d = d,
// where d : R[Xb] -> R[Xa].  Restricted to the cycles Z = ker(next lower
// boundary), such a u is a section of d whenever an equivariant section
// exists at this degree and everything below already split.
//
// Unknowns are one column per Xa-orbit: coefficients of the Stab(rep)-orbit
// sums of Xb (plain equivariance), or of the single points of Xb^Stab(rep)
// (equivariance + admissibility).  Equations d(u(d e_y)) = d e_y are imposed
// on one y per Xb-orbit; equivariance propagates them to every column.

namespace {

struct UnknownBlock {
  int first = 0;                           // offset into the unknown vector
  std::vector<std::vector<int>> supports;  // generator columns as point sets
};

struct SectionProblem {
  OrbitData xa_orbits;
  std::vector<UnknownBlock> blocks;  // per xa orbit
  int total_unknowns = 0;
};

SectionProblem build_problem(const FiniteGroup& g, const ConcreteGSet& xa, const ConcreteGSet& xb,
                             bool admissible) {
  SectionProblem pr;
  pr.xa_orbits = orbits(g, xa);
  for (int o = 0; o < pr.xa_orbits.count; ++o) {
    UnknownBlock blk;
    blk.first = pr.total_unknowns;
    std::vector<int> stab = point_stabilizer(g, xa, pr.xa_orbits.rep[o]);
    if (admissible) {
      for (int y : fixed_points(g, xb, stab)) blk.supports.push_back({y});
    } else {
      std::vector<char> seen(xb.size, 0);
      for (int y = 0; y < xb.size; ++y) {
        if (seen[y]) continue;
        std::vector<int> orbit;
        for (int e : stab)
          if (!seen[xb.apply(e, y)]) {
            seen[xb.apply(e, y)] = 1;
            orbit.push_back(xb.apply(e, y));
          }
        blk.supports.push_back(std::move(orbit));
      }
    }
    pr.total_unknowns += static_cast<int>(blk.supports.size());
    pr.blocks.push_back(std::move(blk));
  }
  return pr;
}

// u's column at xa-point x for a given unknown assignment is
// P_{transport(x)} * (sum of the chosen generator columns); this expands the
// generator supports through the transport.
std::vector<int> transported_support(const ConcreteGSet& xb, const std::vector<int>& support,
                                     int transport) {
  std::vector<int> out;
  out.reserve(support.size());
  for (int z : support) out.push_back(xb.apply(transport, z));
  return out;
}

std::optional<RatMatrix> solve_pseudo_section(const FiniteGroup& g, const ConcreteGSet& xa,
                                              const ConcreteGSet& xb, const RatMatrix& d,
                                              const Ring& ring, bool admissible) {
  SectionProblem pr = build_problem(g, xa, xb, admissible);
  OrbitData xb_orbits = orbits(g, xb);

  const int eq_rows = xb_orbits.count * xa.size;
  RatMatrix sys(eq_rows, pr.total_unknowns);
  RatMatrix rhs(eq_rows, 1);

  for (int ey = 0; ey < xb_orbits.count; ++ey) {
    int y = xb_orbits.rep[ey];
    int row0 = ey * xa.size;
    for (int r = 0; r < xa.size; ++r) rhs.at(row0 + r, 0) = d.at(r, y);
    // d e_y = sum_x v_x e_x; each x routes its orbit's unknowns through the
    // transport element and then back down through d
    for (int x = 0; x < xa.size; ++x) {
      const Rat& vx = d.at(x, y);
      if (vx == 0) continue;
      int o = pr.xa_orbits.orbit_of[x];
      int tr = pr.xa_orbits.transport[x];
      const UnknownBlock& blk = pr.blocks[o];
      for (size_t k = 0; k < blk.supports.size(); ++k) {
        for (int z : transported_support(xb, blk.supports[k], tr))
          for (int r = 0; r < xa.size; ++r)
            if (d.at(r, z) != 0)
              sys.at(row0 + r, blk.first + static_cast<int>(k)) += vx * d.at(r, z);
      }
    }
  }

  std::vector<Rat> lambda(pr.total_unknowns);
  if (ring.kind == Ring::Kind::integers) {
    IntMatrix isys = to_int(sys);
    std::vector<Int> irhs(eq_rows);
    for (int r = 0; r < eq_rows; ++r) {
      if (boost::multiprecision::denominator(rhs.at(r, 0)) != 1)
        throw LinalgError("integer section with non-integer boundary");
      irhs[r] = boost::multiprecision::numerator(rhs.at(r, 0));
    }
    auto sol = solve_integer(isys, irhs);
    if (!sol) return std::nullopt;
    for (int k = 0; k < pr.total_unknowns; ++k) lambda[k] = (*sol)[k];
  } else {
    auto sol = field_solve(ring, ring_normalize(ring, sys), ring_normalize(ring, rhs));
    if (!sol) return std::nullopt;
    for (int k = 0; k < pr.total_unknowns; ++k) lambda[k] = sol->at(k, 0);
  }

  RatMatrix u(xb.size, xa.size);
  for (int x = 0; x < xa.size; ++x) {
    int o = pr.xa_orbits.orbit_of[x];
    int tr = pr.xa_orbits.transport[x];
    const UnknownBlock& blk = pr.blocks[o];
    for (size_t k = 0; k < blk.supports.size(); ++k) {
      const Rat& coef = lambda[blk.first + static_cast<int>(k)];
      if (coef == 0) continue;
      for (int z : transported_support(xb, blk.supports[k], tr)) u.at(z, x) += coef;
    }
  }
  return ring_normalize(ring, std::move(u));
}

}  // namespace

// ---------------------------------------------------------------------------

std::variant<SplitCertificate, SplitFailure> g_split_check(const FiniteGroup& g,
                                                           const SubgroupLattice&,
                                                           const SpecialComplex& c) {
  if (!c.augmented)
    throw ChainValidationError(ChainValidationError::Kind::augmentation, -1, -1,
                               "g_split_check needs an augmented complex");
  if (!(c.ring == Ring::Z()))
    throw ChainValidationError(ChainValidationError::Kind::shape, -1, -1,
                               "g_split_check works over Z");

  // augmented complex: degree j in 0..top+1 with C'_0 = Z on one fixed point
  std::vector<ConcreteGSet> bases{trivial_gset(g, 1)};
  for (const ConcreteGSet& b : c.basis) bases.push_back(b);
  std::vector<RatMatrix> bds{all_ones_row(c.dim(0))};
  for (const RatMatrix& b : c.boundaries) bds.push_back(b);

  SplitCertificate cert;
  for (int j = 1; j <= c.top() + 1; ++j) {
    // Z_{j-2} in external terms = ker of the boundary leaving C'_{j-1}
    IntMatrix cycles;
    if (j == 1) {
      cycles = IntMatrix::identity(1);
    } else {
      auto kb = kernel_basis(to_int(bds[j - 2]));
      cycles = IntMatrix(bases[j - 1].size, static_cast<int>(kb.size()));
      for (size_t col = 0; col < kb.size(); ++col)
        for (int r = 0; r < cycles.rows; ++r) cycles.at(r, static_cast<int>(col)) = kb[col][r];
    }
    auto u = solve_pseudo_section(g, bases[j - 1], bases[j], bds[j - 1], Ring::Z(), false);
    if (!u)
      return SplitFailure{j - 1, "no equivariant integral section at this degree"};
    IntMatrix section = mat_mul(to_int(*u), cycles);
    // d section = cycles certifies both exactness here and the splitting
    IntMatrix reached = mat_mul(to_int(bds[j - 1]), section);
    if (reached != cycles)
      return SplitFailure{j - 1, "cycles are not covered by boundaries at this degree"};
    cert.cycle_basis.push_back(std::move(cycles));
    cert.section.push_back(std::move(section));
  }
  // a chain contraction also needs vanishing cycles above the top boundary:
  // the would-be section Z_top -> 0 exists only when Z_top = 0
  if (!kernel_basis(to_int(bds[c.top()])).empty())
    return SplitFailure{c.top(), "nonzero cycles at the top degree (complex is not exact)"};
  return cert;
}

bool verify_split_certificate(const FiniteGroup& g, const SpecialComplex& c,
                              const SplitCertificate& cert) {
  if (!c.augmented || cert.section.size() != static_cast<size_t>(c.top()) + 1) return false;
  std::vector<ConcreteGSet> bases{trivial_gset(g, 1)};
  for (const ConcreteGSet& b : c.basis) bases.push_back(b);
  std::vector<RatMatrix> bds{all_ones_row(c.dim(0))};
  for (const RatMatrix& b : c.boundaries) bds.push_back(b);

  for (int j = 1; j <= c.top() + 1; ++j) {
    const IntMatrix& b = cert.cycle_basis[j - 1];
    const IntMatrix& s = cert.section[j - 1];
    if (b.rows != bases[j - 1].size || s.rows != bases[j].size || s.cols != b.cols) return false;
    // columns of the cycle basis really are cycles, and they span the full
    // kernel lattice: every independently computed kernel vector must be an
    // integer combination of them
    if (j >= 2) {
      IntMatrix killed = mat_mul(to_int(bds[j - 2]), b);
      for (const Int& e : killed.a)
        if (e != 0) return false;
      auto kb = kernel_basis(to_int(bds[j - 2]));
      if (static_cast<size_t>(b.cols) != kb.size()) return false;
      IntMatrix kmat(b.rows, static_cast<int>(kb.size()));
      for (size_t col = 0; col < kb.size(); ++col)
        for (int r = 0; r < b.rows; ++r) kmat.at(r, static_cast<int>(col)) = kb[col][r];
      if (!solve_integer_matrix(b, kmat)) return false;
    }
    if (mat_mul(to_int(bds[j - 1]), s) != b) return false;
    // equivariance: P_g s = s A_g where A_g expresses the action on cycles
    for (int e = 0; e < g.order; ++e) {
      IntMatrix pb = j >= 2 ? to_int(rat_mul(basis_perm_matrix(bases[j - 1], e), to_rat(b)))
                            : IntMatrix::identity(1);
      IntMatrix bmat = j >= 2 ? b : IntMatrix::identity(1);
      auto a = solve_integer_matrix(bmat, pb);
      if (!a) return false;
      if (to_int(rat_mul(basis_perm_matrix(bases[j], e), to_rat(s))) != mat_mul(s, *a))
        return false;
    }
  }
  return kernel_basis(to_int(bds[c.top()])).empty();
}

// ---------------------------------------------------------------------------

namespace {

struct FieldComplexData {
  std::vector<RatMatrix> cycles;  // nullspace basis per degree, as columns
};

int matrix_rank_or_zero(const Ring& ring, const RatMatrix& m) {
  if (m.rows == 0 || m.cols == 0) return 0;
  return field_rank(ring, m);
}

// homology dimensions and cycle bases of a field complex
FieldComplexData cycle_data(const PlainComplex& c) {
  FieldComplexData out;
  for (int i = 0; i <= c.top(); ++i) {
    if (i == 0) {
      out.cycles.push_back(RatMatrix::identity(c.dim(0)));
      continue;
    }
    auto ns = field_nullspace(c.ring, c.d(i));
    RatMatrix z(c.dim(i), static_cast<int>(ns.size()));
    for (size_t col = 0; col < ns.size(); ++col)
      for (int r = 0; r < c.dim(i); ++r) z.at(r, static_cast<int>(col)) = ns[col][r];
    out.cycles.push_back(std::move(z));
  }
  return out;
}

// the induced maps H_i(cf) -> H_i(df) are isomorphisms
std::optional<int> quasi_iso_failure_degree(const PlainComplex& cf, const PlainComplex& df,
                                            const std::vector<RatMatrix>& fmaps) {
  const Ring ring = cf.ring;
  FieldComplexData zc = cycle_data(cf), zd = cycle_data(df);
  int topmax = std::max(cf.top(), df.top());
  for (int i = 0; i <= topmax; ++i) {
    int zc_dim = i <= cf.top() ? zc.cycles[i].cols : 0;
    int zd_dim = i <= df.top() ? zd.cycles[i].cols : 0;
    int bc_rank = i + 1 <= cf.top() ? matrix_rank_or_zero(ring, cf.d(i + 1)) : 0;
    int bd_rank = i + 1 <= df.top() ? matrix_rank_or_zero(ring, df.d(i + 1)) : 0;
    int hc = zc_dim - bc_rank, hd = zd_dim - bd_rank;
    if (hc != hd) return i;
    if (hc == 0) continue;
    // [B_D | f(Z_C)] must add exactly hc new directions to B_D
    RatMatrix fz = ring_mul(ring, fmaps[i], zc.cycles[i]);
    int bcols = i + 1 <= df.top() ? df.d(i + 1).cols : 0;
    RatMatrix stacked(df.dim(i), bcols + fz.cols);
    for (int r = 0; r < df.dim(i); ++r) {
      for (int j = 0; j < bcols; ++j) stacked.at(r, j) = df.d(i + 1).at(r, j);
      for (int j = 0; j < fz.cols; ++j) stacked.at(r, bcols + j) = fz.at(r, j);
    }
    if (matrix_rank_or_zero(ring, stacked) != bd_rank + hc) return i;
  }
  return std::nullopt;
}

}  // namespace

std::variant<HomotopyCertificate, QuasiIsoFailure> kw_equivalence(const FiniteGroup& g,
                                                                  const SubgroupLattice& lat,
                                                                  const SpecialComplex& src,
                                                                  const SpecialComplex& dst,
                                                                  const AdmissibleChainMap& f) {
  if (!src.ring.is_field())
    throw ChainValidationError(ChainValidationError::Kind::shape, -1, -1,
                               "kw_equivalence needs field coefficients");
  validate_chain_map(g, lat, src, dst, f);
  const Ring ring = src.ring;

  // step 1: quasi-isomorphism on every fixed subcomplex
  for (int cls = 0; cls < lat.num_classes; ++cls) {
    const std::vector<int>& h = lat.members[lat.class_rep[cls]];
    PlainComplex cf = fixed_subcomplex(g, src, h);
    PlainComplex df = fixed_subcomplex(g, dst, h);
    std::vector<std::vector<int>> cfix, dfix;
    int topmax = std::max(src.top(), dst.top());
    std::vector<RatMatrix> fmaps;
    for (int i = 0; i <= topmax; ++i) {
      std::vector<int> ci = i <= src.top() ? fixed_points(g, src.basis[i], h) : std::vector<int>{};
      std::vector<int> di = i <= dst.top() ? fixed_points(g, dst.basis[i], h) : std::vector<int>{};
      RatMatrix m(static_cast<int>(di.size()), static_cast<int>(ci.size()));
      for (size_t col = 0; col < ci.size(); ++col)
        for (size_t row = 0; row < di.size(); ++row)
          m.at(static_cast<int>(row), static_cast<int>(col)) =
              i < static_cast<int>(f.maps.size()) ? f.maps[i].at(di[row], ci[col]) : Rat(0);
      fmaps.push_back(std::move(m));
    }
    if (auto degree = quasi_iso_failure_degree(cf, df, fmaps))
      return QuasiIsoFailure{cls, *degree};
  }

  // step 2: contract the mapping cone degreewise; cone_j = C_{j-1} + D_j
  const int n = std::max(src.top(), dst.top());
  std::vector<ConcreteGSet> cone_basis;
  std::vector<RatMatrix> cone_bd;  // cone_bd[j-1] : cone_j -> cone_{j-1}
  auto src_basis = [&](int i) { return i >= 0 && i <= src.top() ? src.basis[i] : trivial_gset(g, 0); };
  auto dst_basis = [&](int i) { return i >= 0 && i <= dst.top() ? dst.basis[i] : trivial_gset(g, 0); };
  for (int j = 0; j <= n + 1; ++j)
    cone_basis.push_back(disjoint_union_gset(g, src_basis(j - 1), dst_basis(j)));
  for (int j = 1; j <= n + 1; ++j) {
    int rows = cone_basis[j - 1].size, cols = cone_basis[j].size;
    int rc = src.dim(j - 2), cc = src.dim(j - 1);
    RatMatrix b(rows, cols);
    // block [[-dC, 0], [f, dD]]
    for (int r = 0; r < rc; ++r)
      for (int col = 0; col < cc; ++col) b.at(r, col) = -src.d(j - 1).at(r, col);
    if (j - 1 < static_cast<int>(f.maps.size()))
      for (int r = 0; r < dst.dim(j - 1); ++r)
        for (int col = 0; col < cc; ++col) b.at(rc + r, col) = f.maps[j - 1].at(r, col);
    if (j <= dst.top())
      for (int r = 0; r < dst.dim(j - 1); ++r)
        for (int col = 0; col < dst.dim(j); ++col) b.at(rc + r, cc + col) = dst.d(j).at(r, col);
    cone_bd.push_back(ring_normalize(ring, std::move(b)));
  }

  // u_j : cone_{j-1} -> cone_j with d u d = d; then Phi_j = u_{j+1}(id - u_j d_j)
  std::vector<RatMatrix> u(n + 3);
  u[0] = RatMatrix(cone_basis[0].size, 0);
  for (int j = 1; j <= n + 1; ++j) {
    auto uj = solve_pseudo_section(g, cone_basis[j - 1], cone_basis[j], cone_bd[j - 1], ring, true);
    if (!uj)
      throw ConstructionFailed("kw_equivalence: no admissible contraction step (bug)");
    u[j] = std::move(*uj);
  }
  u[n + 2] = RatMatrix(0, cone_basis[n + 1].size);

  std::vector<RatMatrix> phi(n + 2);
  for (int j = 0; j <= n + 1; ++j) {
    RatMatrix pi = RatMatrix::identity(cone_basis[j].size);
    if (j >= 1) pi = rat_sub(pi, rat_mul(u[j], cone_bd[j - 1]));
    if (j <= n)
      phi[j] = ring_mul(ring, u[j + 1], pi);
    else
      phi[j] = RatMatrix(0, cone_basis[j].size);
  }

  HomotopyCertificate cert;
  for (int i = 0; i <= n; ++i) {
    // g_i : D_i -> C_i from Phi_i; s_i : C_i -> C_{i+1} from Phi_{i+1};
    // t_i = -(D-block of Phi_i)
    RatMatrix gi(src.dim(i), dst.dim(i));
    for (int r = 0; r < src.dim(i); ++r)
      for (int col = 0; col < dst.dim(i); ++col)
        gi.at(r, col) = phi[i].at(r, src.dim(i - 1) + col);
    cert.inverse.maps.push_back(std::move(gi));

    RatMatrix si(src.dim(i + 1), src.dim(i));
    for (int r = 0; r < src.dim(i + 1); ++r)
      for (int col = 0; col < src.dim(i); ++col) si.at(r, col) = phi[i + 1].at(r, col);
    cert.s.push_back(std::move(si));

    RatMatrix ti(dst.dim(i + 1), dst.dim(i));
    for (int r = 0; r < dst.dim(i + 1); ++r)
      for (int col = 0; col < dst.dim(i); ++col)
        ti.at(r, col) =
            field_sub(ring, Rat(0), phi[i].at(src.dim(i) + r, src.dim(i - 1) + col));
    cert.t.push_back(std::move(ti));
  }

  if (!verify_homotopy_certificate(g, lat, src, dst, f, cert))
    throw ConstructionFailed("kw_equivalence: certificate failed verification (bug)");
  return cert;
}

bool verify_homotopy_certificate(const FiniteGroup& g, const SubgroupLattice& lat,
                                 const SpecialComplex& src, const SpecialComplex& dst,
                                 const AdmissibleChainMap& f, const HomotopyCertificate& cert) {
  const Ring ring = src.ring;
  const int topmax = std::max(src.top(), dst.top());
  if (cert.inverse.maps.size() != static_cast<size_t>(topmax) + 1) return false;
  try {
    validate_chain_map(g, lat, dst, src, cert.inverse);
  } catch (const ChainValidationError&) {
    return false;
  }

  auto block_ok = [&](const std::vector<RatMatrix>& hs, const SpecialComplex& cx) {
    // homotopies must be equivariant and admissible degree by degree
    for (int i = 0; i <= topmax; ++i) {
      const RatMatrix& m = hs[i];
      if (m.rows != cx.dim(i + 1) || m.cols != cx.dim(i)) return false;
      if (i > cx.top()) continue;
      for (int e = 0; e < g.order; ++e) {
        RatMatrix pg_next = i + 1 <= cx.top() ? basis_perm_matrix(cx.basis[i + 1], e)
                                              : RatMatrix::identity(0);
        if (rat_mul(m, basis_perm_matrix(cx.basis[i], e)) != rat_mul(pg_next, m)) return false;
      }
      for (int cls = 0; cls < lat.num_classes; ++cls) {
        const std::vector<int>& h = lat.members[lat.class_rep[cls]];
        std::vector<char> fixed_row(cx.dim(i + 1), 0);
        if (i + 1 <= cx.top())
          for (int r : fixed_points(g, cx.basis[i + 1], h)) fixed_row[r] = 1;
        for (int col : fixed_points(g, cx.basis[i], h))
          for (int r = 0; r < cx.dim(i + 1); ++r)
            if (!fixed_row[r] && m.at(r, col) != 0) return false;
      }
    }
    return true;
  };
  if (!block_ok(cert.s, src) || !block_ok(cert.t, dst)) return false;

  auto dmat = [&](const SpecialComplex& cx, int i) {
    return (i >= 1 && i <= cx.top()) ? cx.d(i) : RatMatrix(cx.dim(i - 1), cx.dim(i));
  };
  auto fmat = [&](const std::vector<RatMatrix>& maps, int i, int rows, int cols) {
    return i < static_cast<int>(maps.size()) ? maps[i] : RatMatrix(rows, cols);
  };
  for (int i = 0; i <= topmax; ++i) {
    // g f - id = d s + s d on the source
    RatMatrix gf = ring_mul(ring, fmat(cert.inverse.maps, i, src.dim(i), dst.dim(i)),
                            fmat(f.maps, i, dst.dim(i), src.dim(i)));
    RatMatrix lhs = rat_sub(gf, RatMatrix::identity(src.dim(i)));
    RatMatrix rhs = rat_add(ring_mul(ring, dmat(src, i + 1), cert.s[i]),
                            i >= 1 ? ring_mul(ring, cert.s[i - 1], dmat(src, i))
                                   : RatMatrix(src.dim(i), src.dim(i)));
    if (ring_normalize(ring, lhs) != ring_normalize(ring, rhs)) return false;
    // f g - id = d t + t d on the target
    RatMatrix fg = ring_mul(ring, fmat(f.maps, i, dst.dim(i), src.dim(i)),
                            fmat(cert.inverse.maps, i, src.dim(i), dst.dim(i)));
    RatMatrix lhs2 = rat_sub(fg, RatMatrix::identity(dst.dim(i)));
    RatMatrix rhs2 = rat_add(ring_mul(ring, dmat(dst, i + 1), cert.t[i]),
                             i >= 1 ? ring_mul(ring, cert.t[i - 1], dmat(dst, i))
                                    : RatMatrix(dst.dim(i), dst.dim(i)));
    if (ring_normalize(ring, lhs2) != ring_normalize(ring, rhs2)) return false;
  }
  return true;
}

PlainComplex quotient_complex(const FiniteGroup& g, const SpecialComplex& c) {
  PlainComplex p;
  p.ring = c.ring;
  std::vector<OrbitData> od;
  for (int i = 0; i <= c.top(); ++i) {
    od.push_back(orbits(g, c.basis[i]));
    p.dims.push_back(od[i].count);
  }
  for (int i = 1; i <= c.top(); ++i) {
    RatMatrix d(p.dims[i - 1], p.dims[i]);
    for (int o = 0; o < od[i].count; ++o) {
      int y = od[i].rep[o];
      for (int r = 0; r < c.dim(i - 1); ++r)
        if (c.d(i).at(r, y) != 0) {
          Rat& slot = d.at(od[i - 1].orbit_of[r], o);
          slot += c.d(i).at(r, y);
        }
    }
    p.boundaries.push_back(ring_normalize(c.ring, std::move(d)));
  }
  return p;
}

}  // namespace orbitkit
