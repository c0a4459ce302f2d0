#include "orbitkit/gset.hpp"

#include <algorithm>
#include <map>

namespace orbitkit {

void validate_gset(const FiniteGroup& g, const ConcreteGSet& x) {
  if (x.act.size() != static_cast<size_t>(g.order) * x.size)
    throw GroupError("validate_gset: malformed action table");
  for (int p = 0; p < x.size; ++p)
    if (x.apply(0, p) != p) throw GroupError("validate_gset: identity must act trivially");
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b) {
      int ab = g.mul(a, b);
      for (int p = 0; p < x.size; ++p)
        if (x.apply(ab, p) != x.apply(b, x.apply(a, p)))
          throw GroupError("validate_gset: not a right action");
    }
}

ConcreteGSet trivial_gset(const FiniteGroup& g, int n_points) {
  ConcreteGSet x;
  x.size = n_points;
  x.act.resize(static_cast<size_t>(g.order) * n_points);
  for (int e = 0; e < g.order; ++e)
    for (int p = 0; p < n_points; ++p) x.act[static_cast<size_t>(e) * n_points + p] = p;
  return x;
}

ConcreteGSet regular_gset(const FiniteGroup& g) {
  ConcreteGSet x;
  x.size = g.order;
  x.act.resize(static_cast<size_t>(g.order) * g.order);
  for (int e = 0; e < g.order; ++e)
    for (int p = 0; p < g.order; ++p) x.act[static_cast<size_t>(e) * g.order + p] = g.mul(p, e);
  return x;
}

ConcreteGSet natural_gset(const FiniteGroup& g) {
  if (g.degree <= 0 || g.element_perm.empty())
    throw GroupError("natural_gset: group has no permutation backing");
  ConcreteGSet x;
  x.size = g.degree;
  x.act.resize(static_cast<size_t>(g.order) * g.degree);
  for (int e = 0; e < g.order; ++e)
    for (int p = 0; p < g.degree; ++p)
      x.act[static_cast<size_t>(e) * g.degree + p] = g.element_perm[e][p];
  return x;
}

ConcreteGSet coset_gset(const FiniteGroup& g, const std::vector<int>& subgroup_members) {
  std::vector<int> coset_id(g.order, -1);
  std::vector<int> coset_min;
  for (int e = 0; e < g.order; ++e) {
    if (coset_id[e] >= 0) continue;
    int id = static_cast<int>(coset_min.size());
    coset_min.push_back(e);  // e is minimal in He because elements scan upward
    for (int h : subgroup_members) coset_id[g.mul(h, e)] = id;
  }
  ConcreteGSet x;
  x.size = static_cast<int>(coset_min.size());
  x.act.resize(static_cast<size_t>(g.order) * x.size);
  for (int e = 0; e < g.order; ++e)
    for (int p = 0; p < x.size; ++p)
      x.act[static_cast<size_t>(e) * x.size + p] = coset_id[g.mul(coset_min[p], e)];
  return x;
}

ConcreteGSet product_gset(const FiniteGroup& g, const ConcreteGSet& x, const ConcreteGSet& y) {
  ConcreteGSet z;
  z.size = x.size * y.size;
  z.act.resize(static_cast<size_t>(g.order) * z.size);
  for (int e = 0; e < g.order; ++e)
    for (int p = 0; p < x.size; ++p)
      for (int q = 0; q < y.size; ++q)
        z.act[static_cast<size_t>(e) * z.size + (p * y.size + q)] =
            x.apply(e, p) * y.size + y.apply(e, q);
  return z;
}

ConcreteGSet disjoint_union_gset(const FiniteGroup& g, const ConcreteGSet& x,
                                 const ConcreteGSet& y) {
  ConcreteGSet z;
  z.size = x.size + y.size;
  z.act.resize(static_cast<size_t>(g.order) * z.size);
  for (int e = 0; e < g.order; ++e) {
    for (int p = 0; p < x.size; ++p) z.act[static_cast<size_t>(e) * z.size + p] = x.apply(e, p);
    for (int q = 0; q < y.size; ++q)
      z.act[static_cast<size_t>(e) * z.size + x.size + q] = x.size + y.apply(e, q);
  }
  return z;
}

ConcreteGSet gset_from_generator_action(const FiniteGroup& g, int n_points,
                                        const std::vector<Perm>& gen_images) {
  if (gen_images.size() != g.gen_elems.size())
    throw GroupError("gset_from_generator_action: one permutation per group generator required");
  for (const Perm& p : gen_images)
    if (static_cast<int>(p.size()) != n_points)
      throw GroupError("gset_from_generator_action: permutation size mismatch");
  std::vector<Perm> elem_perm(g.order);
  elem_perm[0] = perm_identity(n_points);
  // elements are BFS-ordered, so parents are always filled first
  for (int e = 1; e < g.order; ++e)
    elem_perm[e] = perm_compose(elem_perm[g.bfs_parent[e]], gen_images[g.bfs_gen[e]]);
  ConcreteGSet x;
  x.size = n_points;
  x.act.resize(static_cast<size_t>(g.order) * n_points);
  for (int e = 0; e < g.order; ++e)
    for (int p = 0; p < n_points; ++p)
      x.act[static_cast<size_t>(e) * n_points + p] = elem_perm[e][p];
  validate_gset(g, x);
  return x;
}

std::vector<int> fixed_points(const FiniteGroup&, const ConcreteGSet& x,
                              const std::vector<int>& subgroup_members) {
  std::vector<int> out;
  for (int p = 0; p < x.size; ++p) {
    bool fixed = true;
    for (int h : subgroup_members)
      if (x.apply(h, p) != p) {
        fixed = false;
        break;
      }
    if (fixed) out.push_back(p);
  }
  return out;
}

std::vector<int> point_stabilizer(const FiniteGroup& g, const ConcreteGSet& x, int point) {
  std::vector<int> out;
  for (int e = 0; e < g.order; ++e)
    if (x.apply(e, point) == point) out.push_back(e);
  return out;
}

OrbitData orbits(const FiniteGroup& g, const ConcreteGSet& x) {
  OrbitData od;
  od.orbit_of.assign(x.size, -1);
  od.transport.assign(x.size, 0);
  for (int p = 0; p < x.size; ++p) {
    if (od.orbit_of[p] >= 0) continue;
    int id = od.count++;
    od.rep.push_back(p);
    od.orbit_of[p] = id;
    od.transport[p] = 0;
    // one pass over the whole group is enough (orbit = p·G)
    for (int e = 0; e < g.order; ++e) {
      int q = x.apply(e, p);
      if (od.orbit_of[q] < 0) {
        od.orbit_of[q] = id;
        od.transport[q] = e;
      }
    }
  }
  return od;
}

}  // namespace orbitkit
