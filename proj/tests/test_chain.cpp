#include "doctest.h"

#include "orbitkit/gcw.hpp"
#include "orbitkit/orbit_cat.hpp"

#include <variant>

using namespace orbitkit;

namespace {

struct Ctx {
  FiniteGroup g;
  SubgroupLattice lat;
  explicit Ctx(const char* label)
      : g(group_preset(parse_preset_label(label)->first, parse_preset_label(label)->second)),
        lat(subgroup_lattice(g)) {}
};

// the hexagon: sd of the boundary 2-simplex with the natural S3 action
GSimplicialComplex hexagon(const Ctx& t) {
  ConcreteGSet three = coset_gset(t.g, t.lat.members[t.lat.class_rep[1]]);
  return barycentric_subdivision(t.g, boundary_simplex(t.g, three));
}

SpecialComplex point_complex(const Ctx& t, Ring ring, bool augmented) {
  return make_special_complex(t.g, t.lat, ring, {trivial_gset(t.g, 1)}, {}, augmented);
}

// 0 -> R[G/K] --id--> R[G/K] -> 0 in degrees (deg, deg-1), padded below with
// empty basis sets
SpecialComplex elementary_complex(const Ctx& t, int cls, int deg, Ring ring) {
  std::vector<ConcreteGSet> bases;
  std::vector<RatMatrix> bds;
  ConcreteGSet orbit = coset_gset(t.g, t.lat.members[t.lat.class_rep[cls]]);
  for (int i = 0; i <= deg; ++i) {
    if (i == deg || i == deg - 1)
      bases.push_back(orbit);
    else
      bases.push_back(trivial_gset(t.g, 0));
    if (i == deg)
      bds.push_back(RatMatrix::identity(orbit.size));
    else if (i > 0)
      bds.push_back(RatMatrix(bases[i - 1].size, bases[i].size));
  }
  return make_special_complex(t.g, t.lat, ring, std::move(bases), std::move(bds), false);
}

SpecialComplex direct_sum(const Ctx& t, const SpecialComplex& a, const SpecialComplex& b) {
  int top = std::max(a.top(), b.top());
  std::vector<ConcreteGSet> bases;
  std::vector<RatMatrix> bds;
  auto basis_of = [&](const SpecialComplex& c, int i) {
    return i <= c.top() ? c.basis[i] : trivial_gset(t.g, 0);
  };
  for (int i = 0; i <= top; ++i) bases.push_back(disjoint_union_gset(t.g, basis_of(a, i), basis_of(b, i)));
  for (int i = 1; i <= top; ++i) {
    RatMatrix d(bases[i - 1].size, bases[i].size);
    int ra = basis_of(a, i - 1).size, ca = basis_of(a, i).size;
    if (i <= a.top())
      for (int r = 0; r < a.dim(i - 1); ++r)
        for (int c = 0; c < a.dim(i); ++c) d.at(r, c) = a.d(i).at(r, c);
    if (i <= b.top())
      for (int r = 0; r < b.dim(i - 1); ++r)
        for (int c = 0; c < b.dim(i); ++c) d.at(ra + r, ca + c) = b.d(i).at(r, c);
    bds.push_back(std::move(d));
  }
  return make_special_complex(t.g, t.lat, a.ring, std::move(bases), std::move(bds),
                              a.augmented);
}

// projection C (+) E -> C
AdmissibleChainMap projection_map(const SpecialComplex& sum, const SpecialComplex& c) {
  AdmissibleChainMap f;
  for (int i = 0; i <= std::max(sum.top(), c.top()); ++i) {
    RatMatrix m(c.dim(i), sum.dim(i));
    for (int r = 0; r < c.dim(i); ++r) m.at(r, r) = 1;
    f.maps.push_back(std::move(m));
  }
  return f;
}

}  // namespace

TEST_CASE("special complex validation") {
  Ctx t("S3");
  SUBCASE("a single fixed point is a valid complex with chi = 1") {
    SpecialComplex c = point_complex(t, Ring::Z(), false);
    auto h = homology(underlying_complex(c));
    CHECK(h.size() == 1);
    CHECK(h[0].betti == 1);
  }
  SUBCASE("the hexagon chain complex validates") {
    SpecialComplex c = cellular_chain_complex(t.g, t.lat, hexagon(t), Ring::Z(), false);
    CHECK(c.dim(0) == 6);
    CHECK(c.dim(1) == 6);
  }
  SUBCASE("a single tampered entry breaks equivariance") {
    SpecialComplex c = cellular_chain_complex(t.g, t.lat, hexagon(t), Ring::Z(), false);
    RatMatrix bad = c.d(1);
    bad.at(0, 0) += 1;
    try {
      make_special_complex(t.g, t.lat, Ring::Z(), c.basis, {bad}, false);
      FAIL("tampered complex was accepted");
    } catch (const ChainValidationError& e) {
      CHECK(e.kind == ChainValidationError::Kind::not_equivariant);
      CHECK(e.degree == 1);
    }
  }
  SUBCASE("an equivariant tamper can still break admissibility") {
    // add the invariant all-vertices vector to every column: still
    // equivariant, but the C2-fixed apex edges now hit vertices outside the
    // C2-fixed span
    SpecialComplex c =
        cellular_chain_complex(t.g, t.lat, cone(t.g, hexagon(t)), Ring::Z(), false);
    RatMatrix bad = c.d(1);
    for (int col = 0; col < c.dim(1); ++col)
      for (int r = 0; r < c.dim(0); ++r) bad.at(r, col) += 1;
    try {
      make_special_complex(t.g, t.lat, Ring::Z(), c.basis, {bad, c.d(2)}, false);
      FAIL("inadmissible complex was accepted");
    } catch (const ChainValidationError& e) {
      CHECK(e.kind == ChainValidationError::Kind::not_admissible);
      CHECK(e.degree == 1);
      CHECK(t.lat.class_name[e.cls] == "C2");
    }
  }
  SUBCASE("boundary square must vanish") {
    // two copies of the point in degrees 0,1,2 with identity boundaries
    ConcreteGSet pt = trivial_gset(t.g, 1);
    CHECK_THROWS_AS(
        make_special_complex(t.g, t.lat, Ring::Z(), {pt, pt, pt},
                             {RatMatrix::identity(1), RatMatrix::identity(1)}, false),
        ChainValidationError);
  }
}

TEST_CASE("fixed subcomplexes") {
  Ctx t("S3");
  SpecialComplex hex = cellular_chain_complex(t.g, t.lat, hexagon(t), Ring::Z(), false);
  SUBCASE("H = 1 is the underlying complex") {
    PlainComplex p = fixed_subcomplex(t.g, hex, {0});
    CHECK(p.dims == std::vector<int>{6, 6});
    CHECK(p.boundaries == underlying_complex(hex).boundaries);
  }
  SUBCASE("H = C2 leaves two vertices and no edges") {
    PlainComplex p = fixed_subcomplex(t.g, hex, t.lat.members[t.lat.class_rep[1]]);
    CHECK(p.dims == std::vector<int>{2, 0});
  }
  SUBCASE("H = G on a free complex is zero") {
    SpecialComplex freec = make_special_complex(t.g, t.lat, Ring::Z(), {regular_gset(t.g)}, {}, false);
    PlainComplex p = fixed_subcomplex(t.g, freec, t.lat.members.back());
    CHECK(p.dims == std::vector<int>{0});
  }
}

TEST_CASE("homology over the three rings") {
  Ctx t("S3");
  SUBCASE("point") {
    SpecialComplex c = point_complex(t, Ring::Z(), false);
    auto h = homology(underlying_complex(c));
    CHECK(h[0] == HomologySummary{1, {}});
  }
  SUBCASE("hexagon is a circle: H0 = Z, H1 = Z") {
    SpecialComplex c = cellular_chain_complex(t.g, t.lat, hexagon(t), Ring::Z(), false);
    auto h = homology(underlying_complex(c));
    CHECK(h[0] == HomologySummary{1, {}});
    CHECK(h[1] == HomologySummary{1, {}});
    CHECK(!is_acyclic(c, false));
  }
  SUBCASE("multiplication by 2 has homology Z/2") {
    PlainComplex p;
    p.ring = Ring::Z();
    p.dims = {1, 1};
    RatMatrix two(1, 1);
    two.at(0, 0) = 2;
    p.boundaries = {two};
    auto h = homology(p);
    CHECK(h[0] == HomologySummary{0, {Int(2)}});
    CHECK(h[1] == HomologySummary{0, {}});
    // over GF(2) the same complex has two-dimensional homology
    PlainComplex p2 = p;
    p2.ring = Ring::GF(2);
    p2.boundaries[0] = ring_normalize(p2.ring, p2.boundaries[0]);
    auto h2 = homology(p2);
    CHECK(h2[0].betti == 1);
    CHECK(h2[1].betti == 1);
  }
  SUBCASE("cone over the hexagon is acyclic") {
    Ctx s3("S3");
    GSimplicialComplex c = cone(s3.g, hexagon(s3));
    SpecialComplex chains = cellular_chain_complex(s3.g, s3.lat, c, Ring::Z(), false);
    CHECK(is_acyclic(chains, false));
    CHECK(is_acyclic(chains, true));
  }
}

TEST_CASE("g_split_check") {
  Ctx t("S3");
  SUBCASE("the point complex splits") {
    SpecialComplex c = point_complex(t, Ring::Z(), true);
    auto r = g_split_check(t.g, t.lat, c);
    REQUIRE(std::holds_alternative<SplitCertificate>(r));
    CHECK(verify_split_certificate(t.g, c, std::get<SplitCertificate>(r)));
  }
  SUBCASE("two swapped points fail at degree 0") {
    Ctx c2("C2");
    SpecialComplex c = make_special_complex(c2.g, c2.lat, Ring::Z(), {regular_gset(c2.g)}, {}, true);
    auto r = g_split_check(c2.g, c2.lat, c);
    REQUIRE(std::holds_alternative<SplitFailure>(r));
    CHECK(std::get<SplitFailure>(r).degree == 0);
  }
  SUBCASE("the cone over the hexagon splits in every degree") {
    GSimplicialComplex k = cone(t.g, hexagon(t));
    SpecialComplex c = cellular_chain_complex(t.g, t.lat, k, Ring::Z(), true);
    auto r = g_split_check(t.g, t.lat, c);
    REQUIRE(std::holds_alternative<SplitCertificate>(r));
    CHECK(verify_split_certificate(t.g, c, std::get<SplitCertificate>(r)));
  }
  SUBCASE("a non-augmented complex is rejected") {
    SpecialComplex c = point_complex(t, Ring::Z(), false);
    CHECK_THROWS_AS((void)g_split_check(t.g, t.lat, c), ChainValidationError);
  }
  SUBCASE("non-acyclic complexes fail even when every cycle sequence splits") {
    // the hexagon with trivial group: all sections exist below the top, but
    // ker of the top boundary is the fundamental cycle, so no contraction
    Ctx c1("C1");
    GSimplicialComplex hex6 = barycentric_subdivision(
        c1.g, make_complex(c1.g, trivial_gset(c1.g, 3), {{0, 1}, {1, 2}, {0, 2}}));
    SpecialComplex c = cellular_chain_complex(c1.g, c1.lat, hex6, Ring::Z(), true);
    auto r = g_split_check(c1.g, c1.lat, c);
    REQUIRE(std::holds_alternative<SplitFailure>(r));
    CHECK(std::get<SplitFailure>(r).degree == 1);
    // with the S3 action the failure appears earlier: no fixed vector of
    // augmentation 1 exists over two 3-point orbits
    SpecialComplex hs3 = cellular_chain_complex(t.g, t.lat, hexagon(t), Ring::Z(), true);
    auto r2 = g_split_check(t.g, t.lat, hs3);
    REQUIRE(std::holds_alternative<SplitFailure>(r2));
    CHECK(std::get<SplitFailure>(r2).degree == 0);
  }
}

TEST_CASE("kw_equivalence") {
  Ctx t("S3");
  for (Ring ring : {Ring::GF(2), Ring::GF(3), Ring::Q()}) {
    CAPTURE(ring.label());
    SpecialComplex hex = cellular_chain_complex(t.g, t.lat, hexagon(t), ring, false);

    SUBCASE("identity maps certify") {
      auto r = kw_equivalence(t.g, t.lat, hex, hex, identity_chain_map(hex));
      REQUIRE(std::holds_alternative<HomotopyCertificate>(r));
      CHECK(verify_homotopy_certificate(t.g, t.lat, hex, hex, identity_chain_map(hex),
                                        std::get<HomotopyCertificate>(r)));
    }
    SUBCASE("projection off an elementary summand certifies") {
      SpecialComplex e = elementary_complex(t, 1, 2, ring);
      SpecialComplex sum = direct_sum(t, hex, e);
      AdmissibleChainMap f = projection_map(sum, hex);
      auto r = kw_equivalence(t.g, t.lat, sum, hex, f);
      REQUIRE(std::holds_alternative<HomotopyCertificate>(r));
      CHECK(verify_homotopy_certificate(t.g, t.lat, sum, hex, f,
                                        std::get<HomotopyCertificate>(r)));
    }
    SUBCASE("collapsing an acyclic complex to the point certifies") {
      // every fixed subcomplex of the cone is contractible, so the
      // augmentation-like map to the trivial complex is an equivalence; the
      // solver has to build a genuine contraction of the source
      SpecialComplex src =
          cellular_chain_complex(t.g, t.lat, cone(t.g, hexagon(t)), ring, false);
      SpecialComplex dst = point_complex(t, ring, false);
      AdmissibleChainMap collapse;
      RatMatrix f0(1, src.dim(0));
      for (int c = 0; c < src.dim(0); ++c) f0.at(0, c) = 1;
      collapse.maps.push_back(std::move(f0));
      for (int i = 1; i <= src.top(); ++i) collapse.maps.push_back(RatMatrix(0, src.dim(i)));
      auto r = kw_equivalence(t.g, t.lat, src, dst, collapse);
      REQUIRE(std::holds_alternative<HomotopyCertificate>(r));
      CHECK(verify_homotopy_certificate(t.g, t.lat, src, dst, collapse,
                                        std::get<HomotopyCertificate>(r)));
    }
    SUBCASE("the zero map is rejected with a witness") {
      AdmissibleChainMap zero;
      for (int i = 0; i <= hex.top(); ++i) zero.maps.push_back(RatMatrix(hex.dim(i), hex.dim(i)));
      auto r = kw_equivalence(t.g, t.lat, hex, hex, zero);
      REQUIRE(std::holds_alternative<QuasiIsoFailure>(r));
      CHECK(std::get<QuasiIsoFailure>(r).cls == 0);  // already fails at H = 1
    }
  }
  SUBCASE("integral coefficients are rejected") {
    SpecialComplex hex = cellular_chain_complex(t.g, t.lat, hexagon(t), Ring::Z(), false);
    CHECK_THROWS_AS((void)kw_equivalence(t.g, t.lat, hex, hex, identity_chain_map(hex)),
                    ChainValidationError);
  }
}

TEST_CASE("quotient complexes") {
  Ctx t("S3");
  SUBCASE("trivial group: the quotient is the complex itself") {
    Ctx c1("C1");
    ConcreteGSet two = trivial_gset(c1.g, 2);
    RatMatrix d(2, 1);
    d.at(0, 0) = 1;
    d.at(1, 0) = -1;
    SpecialComplex c = make_special_complex(c1.g, c1.lat, Ring::Z(),
                                            {two, trivial_gset(c1.g, 1)}, {d}, false);
    PlainComplex q = quotient_complex(c1.g, c);
    CHECK(q.dims == std::vector<int>{2, 1});
    CHECK(q.boundaries == c.boundaries);
  }
  SUBCASE("hexagon / S3 is an interval") {
    SpecialComplex hex = cellular_chain_complex(t.g, t.lat, hexagon(t), Ring::Z(), false);
    PlainComplex q = quotient_complex(t.g, hex);
    CHECK(q.dims == std::vector<int>{2, 1});
    auto h = homology(q);
    CHECK(h[0] == HomologySummary{1, {}});
    CHECK(h[1] == HomologySummary{0, {}});
  }
  SUBCASE("cone(hexagon) / S3 is acyclic") {
    SpecialComplex c = cellular_chain_complex(t.g, t.lat, cone(t.g, hexagon(t)), Ring::Z(), false);
    CHECK(is_acyclic(quotient_complex(t.g, c), false));
  }
}

TEST_CASE("the boundary is a natural map of fixed-point orbit modules") {
  // The chain complex, read as a complex of orbit-category modules, evaluates
  // at [H] to the H-fixed subcomplex: value ranks match the fixed dimensions,
  // and the restricted boundaries commute with every morphism matrix.  This
  // is the algebraic content of H_*(C(H)) = H_*(C)(H).
  Ctx t("S3");
  GSimplicialComplex k = cone(t.g, hexagon(t));
  SpecialComplex c = cellular_chain_complex(t.g, t.lat, k, Ring::Q(), false);
  OrbitCategory cat(t.g, t.lat, all_subgroup_family(t.lat));
  std::vector<OrbitModule> basis_modules;
  for (int i = 0; i <= c.top(); ++i) {
    basis_modules.push_back(fixed_point_module(cat, c.basis[i], Ring::Q()));
    validate_orbit_module(cat, basis_modules[i]);
  }

  // the boundary evaluated at each object = the fixed subcomplex boundary
  std::vector<std::vector<RatMatrix>> d_at(cat.objects());
  for (int fc = 0; fc < cat.objects(); ++fc) {
    const std::vector<int>& h = t.lat.members[cat.object_subgroup(fc)];
    PlainComplex direct = fixed_subcomplex(t.g, c, h);
    for (int i = 0; i <= c.top(); ++i) CHECK(direct.dims[i] == basis_modules[i].rank[fc]);
    for (int i = 1; i <= c.top(); ++i) d_at[fc].push_back(direct.d(i));
  }

  // naturality: M_{i-1}(f) d_k = d_v M_i(f) for every morphism f : v -> k
  for (int v = 0; v < cat.objects(); ++v)
    for (int kk = 0; kk < cat.objects(); ++kk)
      for (int m = 0; m < cat.mor_count(v, kk); ++m)
        for (int i = 1; i <= c.top(); ++i) {
          RatMatrix lhs = rat_mul(basis_modules[i - 1].mats[v][kk][m], d_at[kk][i - 1]);
          RatMatrix rhs = rat_mul(d_at[v][i - 1], basis_modules[i].mats[v][kk][m]);
          CHECK(lhs == rhs);
        }
}
