#include "orbitkit/orbit_cat.hpp"

#include "orbitkit/classify.hpp"

#include <algorithm>

namespace orbitkit {

Family all_subgroup_family(const SubgroupLattice& lat) {
  Family f;
  f.label = "all";
  f.member.assign(lat.members.size(), 1);
  for (size_t s = 0; s < lat.members.size(); ++s) f.subgroups.push_back(static_cast<int>(s));
  for (int c = 0; c < lat.num_classes; ++c) f.classes.push_back(c);
  return f;
}

Family p_subgroup_family(const SubgroupLattice& lat, long p) {
  Family f;
  f.label = std::to_string(p) + "-subgroups";
  f.member.assign(lat.members.size(), 0);
  for (size_t s = 0; s < lat.members.size(); ++s)
    if (is_prime_power_of(lat.sub_order[s], p)) {
      f.member[s] = 1;
      f.subgroups.push_back(static_cast<int>(s));
    }
  for (int c = 0; c < lat.num_classes; ++c)
    if (f.member[lat.class_rep[c]]) f.classes.push_back(c);
  return f;
}

void validate_family(const FiniteGroup& g, const SubgroupLattice& lat, const Family& fam) {
  for (int s : fam.subgroups) {
    for (int e = 0; e < g.order; ++e) {
      int t = lat.subgroup_index(g.conjugate_set(lat.members[s], e));
      if (!fam.member[t]) throw NotInFamily("family is not closed under conjugation");
    }
    for (size_t u = 0; u < lat.members.size(); ++u)
      if (lat.leq[u][s] && !fam.member[u])
        throw NotInFamily("family is not closed under subgroups");
  }
}

OrbitCategory::OrbitCategory(const FiniteGroup& g, const SubgroupLattice& lat, Family fam)
    : g_(&g), lat_(&lat), fam_(std::move(fam)) {
  validate_family(g, lat, fam_);
  const int n = objects();

  coset_min_.assign(n, std::vector<int>(g.order, -1));
  for (int k = 0; k < n; ++k) {
    const std::vector<int>& km = lat.members[object_subgroup(k)];
    for (int e = 0; e < g.order; ++e) {
      if (coset_min_[k][e] >= 0) continue;
      for (int h : km) coset_min_[k][g.mul(h, e)] = e;  // e is minimal in K·e
    }
  }

  mor_.assign(n, std::vector<std::vector<int>>(n));
  mor_index_.assign(n, std::vector<std::vector<int>>(n));
  for (int v = 0; v < n; ++v) {
    const std::vector<int>& vm = lat.members[object_subgroup(v)];
    for (int k = 0; k < n; ++k) {
      const std::vector<int>& km = lat.members[object_subgroup(k)];
      std::vector<char> in_k(g.order, 0);
      for (int e : km) in_k[e] = 1;
      mor_index_[v][k].assign(g.order, -1);
      for (int e = 0; e < g.order; ++e) {
        if (coset_min_[k][e] != e) continue;  // one candidate per coset
        bool ok = true;                       // g V g^-1 <= K
        for (int m : vm)
          if (!in_k[g.mul(e, g.mul(m, g.inv(e)))]) {
            ok = false;
            break;
          }
        if (!ok) continue;
        mor_index_[v][k][e] = static_cast<int>(mor_[v][k].size());
        mor_[v][k].push_back(e);
      }
    }
  }

  for (int q = 0; q < n; ++q) {
    int s = object_subgroup(q);
    weyl_.push_back(
        quotient_group(g, lat.members[lat.normalizer[s]], lat.members[s]));
  }
}

int OrbitCategory::fc_of_class(int cls) const {
  for (int fc = 0; fc < objects(); ++fc)
    if (fam_.classes[fc] == cls) return fc;
  return -1;
}

int OrbitCategory::compose(int v, int k, int q, int outer, int inner) const {
  int h = mor_[k][q][outer];
  int g0 = mor_[v][k][inner];
  int rep = coset_min_[q][g_->mul(h, g0)];
  int idx = mor_index_[v][q][rep];
  if (idx < 0) throw GroupError("compose: composite is not a morphism (bug)");
  return idx;
}

int OrbitCategory::identity_morphism(int fc) const {
  int idx = mor_index_[fc][fc][0];
  if (idx < 0) throw GroupError("identity_morphism: missing (bug)");
  return idx;
}

int OrbitCategory::morphism_to_weyl(int fc, int m) const {
  return weyl_[fc].coset_of[mor_[fc][fc][m]];
}

int OrbitCategory::weyl_to_morphism(int fc, int w) const {
  int idx = mor_index_[fc][fc][coset_min_[fc][weyl_[fc].coset_rep[w]]];
  if (idx < 0) throw GroupError("weyl_to_morphism: missing (bug)");
  return idx;
}

void validate_orbit_module(const OrbitCategory& cat, const OrbitModule& m) {
  const int n = cat.objects();
  for (int v = 0; v < n; ++v)
    for (int k = 0; k < n; ++k) {
      if (m.mats[v][k].size() != static_cast<size_t>(cat.mor_count(v, k)))
        throw GroupError("orbit module: morphism matrix count mismatch");
      for (const RatMatrix& a : m.mats[v][k])
        if (a.rows != m.rank[v] || a.cols != m.rank[k])
          throw GroupError("orbit module: matrix shape mismatch");
    }
  for (int v = 0; v < n; ++v)
    if (m.mats[v][v][cat.identity_morphism(v)] != RatMatrix::identity(m.rank[v]))
      throw GroupError("orbit module: identity morphism is not the identity matrix");
  // functoriality: M(outer ∘ inner) = M(inner) * M(outer)
  for (int v = 0; v < n; ++v)
    for (int k = 0; k < n; ++k)
      for (int q = 0; q < n; ++q)
        for (int mo = 0; mo < cat.mor_count(k, q); ++mo)
          for (int mi = 0; mi < cat.mor_count(v, k); ++mi) {
            int c = cat.compose(v, k, q, mo, mi);
            RatMatrix lhs = m.mats[v][q][c];
            RatMatrix rhs = ring_mul(m.ring, m.mats[v][k][mi], m.mats[k][q][mo]);
            if (lhs != rhs) throw GroupError("orbit module: functoriality fails");
          }
}

WeylModule regular_weyl_module(const QuotientGroup& w, const Ring& ring) {
  WeylModule n;
  n.ring = ring;
  n.rank = w.group.order;
  for (int e = 0; e < w.group.order; ++e) {
    RatMatrix a(n.rank, n.rank);
    for (int b = 0; b < n.rank; ++b) a.at(w.group.mul(b, e), b) = 1;
    n.action.push_back(std::move(a));
  }
  return n;
}

void validate_weyl_module(const QuotientGroup& w, const WeylModule& n) {
  if (n.action.size() != static_cast<size_t>(w.group.order))
    throw GroupError("weyl module: one matrix per element required");
  if (n.action[0] != RatMatrix::identity(n.rank))
    throw GroupError("weyl module: identity must act trivially");
  for (int a = 0; a < w.group.order; ++a)
    for (int b = 0; b < w.group.order; ++b)
      if (n.action[w.group.mul(a, b)] != ring_mul(n.ring, n.action[b], n.action[a]))
        throw GroupError("weyl module: not a right action");
}

OrbitModule fixed_point_module(const OrbitCategory& cat, const ConcreteGSet& x, const Ring& ring) {
  const FiniteGroup& g = cat.group();
  const SubgroupLattice& lat = cat.lattice();
  const int n = cat.objects();
  OrbitModule m;
  m.ring = ring;

  std::vector<std::vector<int>> fix(n);
  std::vector<std::vector<int>> pos(n, std::vector<int>(x.size, -1));
  for (int v = 0; v < n; ++v) {
    fix[v] = fixed_points(g, x, lat.members[cat.object_subgroup(v)]);
    for (size_t i = 0; i < fix[v].size(); ++i) pos[v][fix[v][i]] = static_cast<int>(i);
    m.rank.push_back(static_cast<int>(fix[v].size()));
  }

  m.mats.assign(n, std::vector<std::vector<RatMatrix>>(n));
  for (int v = 0; v < n; ++v)
    for (int k = 0; k < n; ++k)
      for (int rep : cat.mor_reps(v, k)) {
        RatMatrix a(m.rank[v], m.rank[k]);
        for (int col = 0; col < m.rank[k]; ++col) {
          int image = x.apply(rep, fix[k][col]);
          int row = pos[v][image];
          if (row < 0) throw GroupError("fixed_point_module: image leaves the fixed set (bug)");
          a.at(row, col) = 1;
        }
        m.mats[v][k].push_back(std::move(a));
      }
  return m;
}

SplitModule split_functor(const OrbitCategory& cat, const OrbitModule& m, int q_fc) {
  const SubgroupLattice& lat = cat.lattice();
  const int r = m.rank[q_fc];
  const int q_order = lat.sub_order[cat.object_subgroup(q_fc)];

  // stack the images of every morphism G/Q -> G/K with |K| > |Q|
  std::vector<const RatMatrix*> blocks;
  int total = 0;
  for (int k = 0; k < cat.objects(); ++k) {
    if (lat.sub_order[cat.object_subgroup(k)] <= q_order) continue;
    for (const RatMatrix& a : m.mats[q_fc][k]) {
      blocks.push_back(&a);
      total += a.cols;
    }
  }
  RatMatrix span(r, total);
  int at = 0;
  for (const RatMatrix* b : blocks) {
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < b->cols; ++j) span.at(i, at + j) = b->at(i, j);
    at += b->cols;
  }

  SplitModule out;
  out.ring = m.ring;
  if (m.ring.is_field()) {
    // image basis, completed to a full basis; the quotient block of each Weyl
    // matrix in that basis is the residual action
    RatMatrix echelon = ring_normalize(m.ring, span);
    int rank_s = field_rank(m.ring, echelon);
    RatMatrix basis(r, r);
    int got = 0;
    {
      RatMatrix probe(r, 0);
      auto try_add = [&](const std::vector<Rat>& col) {
        RatMatrix cand(r, got + 1);
        for (int i = 0; i < r; ++i)
          for (int j = 0; j < got; ++j) cand.at(i, j) = basis.at(i, j);
        for (int i = 0; i < r; ++i) cand.at(i, got) = col[i];
        if (field_rank(m.ring, cand) == got + 1) {
          for (int i = 0; i < r; ++i) basis.at(i, got) = col[i];
          ++got;
        }
      };
      for (int j = 0; j < span.cols && got < rank_s; ++j) {
        std::vector<Rat> col(r);
        for (int i = 0; i < r; ++i) col[i] = span.at(i, j);
        try_add(col);
      }
      for (int j = 0; j < r && got < r; ++j) {
        std::vector<Rat> col(r);
        col[j] = 1;
        try_add(col);
      }
      (void)probe;
    }
    out.quotient_rank = r - rank_s;
    const QuotientGroup& w = cat.weyl_group(q_fc);
    for (int we = 0; we < w.group.order; ++we) {
      const RatMatrix& a = m.mats[q_fc][q_fc][cat.weyl_to_morphism(q_fc, we)];
      auto coords = field_solve(m.ring, basis, ring_mul(m.ring, a, basis));
      if (!coords) throw GroupError("split_functor: change of basis failed (bug)");
      RatMatrix quo(static_cast<int>(out.quotient_rank), static_cast<int>(out.quotient_rank));
      for (int i = 0; i < out.quotient_rank; ++i)
        for (int j = 0; j < out.quotient_rank; ++j)
          quo.at(i, j) = coords->at(rank_s + i, rank_s + j);
      // the submodule part must be invariant
      for (int i = rank_s; i < r; ++i)
        for (int j = 0; j < rank_s; ++j)
          if (coords->at(i, j) != 0)
            throw GroupError("split_functor: image span is not Weyl-stable (bug)");
      out.weyl_action.push_back(std::move(quo));
    }
  } else {
    SmithDecomposition snf = smith_normal_form(to_int(span));
    out.quotient_rank = r - snf.rank;
    for (int i = 0; i < snf.rank; ++i)
      if (snf.diag(i) > 1) out.invariant_factors.push_back(snf.diag(i));
  }
  return out;
}

namespace {

// W-orbit decomposition of Mor(v, q) under post-composition; the action is
// free, so every orbit has |W| elements.
struct MorOrbits {
  std::vector<int> reps;      // orbit -> morphism index
  std::vector<int> orbit_of;  // morphism -> orbit
  std::vector<int> weyl_of;   // morphism -> w with m = w ∘ rep
};

MorOrbits mor_orbits(const OrbitCategory& cat, int v, int q) {
  const QuotientGroup& w = cat.weyl_group(q);
  MorOrbits mo;
  int count = cat.mor_count(v, q);
  mo.orbit_of.assign(count, -1);
  mo.weyl_of.assign(count, -1);
  for (int m = 0; m < count; ++m) {
    if (mo.orbit_of[m] >= 0) continue;
    int orbit = static_cast<int>(mo.reps.size());
    mo.reps.push_back(m);
    for (int we = 0; we < w.group.order; ++we) {
      int image = cat.compose(v, q, q, cat.weyl_to_morphism(q, we), m);
      if (mo.orbit_of[image] >= 0 && !(image == m && we == 0))
        throw GroupError("mor_orbits: Weyl action is not free (bug)");
      mo.orbit_of[image] = orbit;
      mo.weyl_of[image] = we;
    }
  }
  return mo;
}

}  // namespace

OrbitModule extension_functor(const OrbitCategory& cat, const WeylModule& n, int q_fc) {
  validate_weyl_module(cat.weyl_group(q_fc), n);
  const int nobj = cat.objects();
  OrbitModule m;
  m.ring = n.ring;
  std::vector<MorOrbits> orbits_at(nobj);
  for (int v = 0; v < nobj; ++v) {
    orbits_at[v] = mor_orbits(cat, v, q_fc);
    m.rank.push_back(static_cast<int>(orbits_at[v].reps.size()) * n.rank);
  }

  m.mats.assign(nobj, std::vector<std::vector<RatMatrix>>(nobj));
  for (int vp = 0; vp < nobj; ++vp)
    for (int v = 0; v < nobj; ++v)
      for (int mi = 0; mi < cat.mor_count(vp, v); ++mi) {
        // value(v) -> value(v'): n_i ⊗ f_j  ->  (n_i · w) ⊗ f_{j'}
        // where f_j ∘ m = w ∘ f_{j'}
        RatMatrix a(m.rank[vp], m.rank[v]);
        for (size_t j = 0; j < orbits_at[v].reps.size(); ++j) {
          int composite = cat.compose(vp, v, q_fc, orbits_at[v].reps[j], mi);
          int jp = orbits_at[vp].orbit_of[composite];
          int we = orbits_at[vp].weyl_of[composite];
          const RatMatrix& act = n.action[we];
          for (int krow = 0; krow < n.rank; ++krow)
            for (int i = 0; i < n.rank; ++i)
              a.at(jp * n.rank + krow, static_cast<int>(j) * n.rank + i) = act.at(krow, i);
        }
        m.mats[vp][v].push_back(std::move(a));
      }
  return m;
}

OrbitModule inclusion_functor(const OrbitCategory& cat, const WeylModule& n, int q_fc) {
  validate_weyl_module(cat.weyl_group(q_fc), n);
  const int nobj = cat.objects();
  OrbitModule m;
  m.ring = n.ring;
  for (int v = 0; v < nobj; ++v) m.rank.push_back(v == q_fc ? n.rank : 0);
  m.mats.assign(nobj, std::vector<std::vector<RatMatrix>>(nobj));
  for (int v = 0; v < nobj; ++v)
    for (int k = 0; k < nobj; ++k)
      for (int mi = 0; mi < cat.mor_count(v, k); ++mi) {
        if (v == q_fc && k == q_fc)
          m.mats[v][k].push_back(n.action[cat.morphism_to_weyl(q_fc, mi)]);
        else
          m.mats[v][k].push_back(RatMatrix(m.rank[v], m.rank[k]));
      }
  return m;
}

WeylModule restriction_functor(const OrbitCategory& cat, const OrbitModule& m, int q_fc) {
  WeylModule n;
  n.ring = m.ring;
  n.rank = m.rank[q_fc];
  const QuotientGroup& w = cat.weyl_group(q_fc);
  for (int we = 0; we < w.group.order; ++we)
    n.action.push_back(m.mats[q_fc][q_fc][cat.weyl_to_morphism(q_fc, we)]);
  return n;
}

long n_hq(const FiniteGroup& g, const SubgroupLattice& lat, int h_subgroup, int q_subgroup) {
  ConcreteGSet cosets = coset_gset(g, lat.members[h_subgroup]);
  std::vector<int> fixed = fixed_points(g, cosets, lat.members[q_subgroup]);
  const std::vector<int>& nq = lat.members[lat.normalizer[q_subgroup]];
  std::vector<char> seen(cosets.size, 0);
  long count = 0;
  for (int p : fixed) {
    if (seen[p]) continue;
    ++count;
    for (int e : nq) seen[cosets.apply(e, p)] = 1;
  }
  return count;
}

bool is_projective_orbit_basis(const FiniteGroup& g, const SubgroupLattice& lat, int h_subgroup,
                               long p) {
  return has_normal_sylow(g, lat, h_subgroup, p);
}

}  // namespace orbitkit
