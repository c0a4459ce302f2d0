#include "orbitkit/gcw.hpp"

#include <algorithm>
#include <map>

namespace orbitkit {

namespace {

std::vector<int> apply_to_simplex(const ConcreteGSet& vertices, int e,
                                  const std::vector<int>& simplex) {
  std::vector<int> out;
  out.reserve(simplex.size());
  for (int v : simplex) out.push_back(vertices.apply(e, v));
  std::sort(out.begin(), out.end());
  return out;
}

struct SimplexIndex {
  std::vector<std::map<std::vector<int>, int>> by_dim;
  int find(int dim, const std::vector<int>& s) const {
    if (dim < 0 || dim >= static_cast<int>(by_dim.size())) return -1;
    auto it = by_dim[dim].find(s);
    return it == by_dim[dim].end() ? -1 : it->second;
  }
};

SimplexIndex index_simplices(const GSimplicialComplex& k) {
  SimplexIndex idx;
  idx.by_dim.resize(k.simplices.size());
  for (int d = 0; d <= k.top_dim(); ++d)
    for (size_t i = 0; i < k.simplices[d].size(); ++i)
      idx.by_dim[d][k.simplices[d][i]] = static_cast<int>(i);
  return idx;
}

// the induced G-set on the dim-simplices
ConcreteGSet simplex_gset(const FiniteGroup& g, const GSimplicialComplex& k,
                          const SimplexIndex& idx, int dim) {
  ConcreteGSet x;
  x.size = static_cast<int>(k.simplices[dim].size());
  x.act.resize(static_cast<size_t>(g.order) * x.size);
  for (int e = 0; e < g.order; ++e)
    for (int i = 0; i < x.size; ++i) {
      int j = idx.find(dim, apply_to_simplex(k.vertices, e, k.simplices[dim][i]));
      if (j < 0) throw GroupError("simplex_gset: action does not preserve the complex");
      x.act[static_cast<size_t>(e) * x.size + i] = j;
    }
  return x;
}

}  // namespace

GSimplicialComplex make_complex(const FiniteGroup& g, const ConcreteGSet& vertices,
                                const std::vector<std::vector<int>>& simplices) {
  validate_gset(g, vertices);
  GSimplicialComplex k;
  k.vertices = vertices;
  int top = 0;
  for (const auto& s : simplices) {
    if (s.empty()) throw GroupError("make_complex: empty simplex");
    top = std::max(top, static_cast<int>(s.size()) - 1);
  }
  k.simplices.resize(top + 1);
  std::vector<std::map<std::vector<int>, int>> seen(top + 1);
  // close under faces
  std::vector<std::vector<int>> stack;
  for (const auto& s : simplices) {
    std::vector<int> t = s;
    std::sort(t.begin(), t.end());
    if (std::adjacent_find(t.begin(), t.end()) != t.end())
      throw GroupError("make_complex: repeated vertex in a simplex");
    for (int v : t)
      if (v < 0 || v >= vertices.size) throw GroupError("make_complex: vertex out of range");
    stack.push_back(std::move(t));
  }
  while (!stack.empty()) {
    std::vector<int> s = std::move(stack.back());
    stack.pop_back();
    int d = static_cast<int>(s.size()) - 1;
    if (seen[d].count(s)) continue;
    seen[d][s] = 1;
    if (d > 0)
      for (size_t drop = 0; drop < s.size(); ++drop) {
        std::vector<int> face;
        for (size_t i = 0; i < s.size(); ++i)
          if (i != drop) face.push_back(s[i]);
        stack.push_back(std::move(face));
      }
  }
  for (int d = 0; d <= top; ++d) {
    for (auto& [s, unused] : seen[d]) k.simplices[d].push_back(s);
    std::sort(k.simplices[d].begin(), k.simplices[d].end());
  }
  // G-stability
  SimplexIndex idx = index_simplices(k);
  for (int e = 0; e < g.order; ++e)
    for (int d = 0; d <= top; ++d)
      for (const auto& s : k.simplices[d])
        if (idx.find(d, apply_to_simplex(vertices, e, s)) < 0)
          throw GroupError("make_complex: simplex set is not G-stable");
  return k;
}

GSimplicialComplex full_simplex(const FiniteGroup& g, const ConcreteGSet& vertices) {
  std::vector<int> all(vertices.size);
  for (int i = 0; i < vertices.size; ++i) all[i] = i;
  return make_complex(g, vertices, {all});
}

GSimplicialComplex boundary_simplex(const FiniteGroup& g, const ConcreteGSet& vertices) {
  if (vertices.size < 2) throw GroupError("boundary_simplex: need at least 2 vertices");
  std::vector<std::vector<int>> facets;
  for (int drop = 0; drop < vertices.size; ++drop) {
    std::vector<int> f;
    for (int i = 0; i < vertices.size; ++i)
      if (i != drop) f.push_back(i);
    facets.push_back(std::move(f));
  }
  return make_complex(g, vertices, facets);
}

std::optional<RegularityWitness> validate_regular(const FiniteGroup& g,
                                                  const GSimplicialComplex& k) {
  // every group element is checked: setwise fixing can appear for elements
  // that no generator set exhibits
  for (int e = 0; e < g.order; ++e)
    for (int d = 0; d <= k.top_dim(); ++d)
      for (size_t i = 0; i < k.simplices[d].size(); ++i) {
        const std::vector<int>& s = k.simplices[d][i];
        if (apply_to_simplex(k.vertices, e, s) != s) continue;
        for (int v : s)
          if (k.vertices.apply(e, v) != v)
            return RegularityWitness{e, d, static_cast<int>(i)};
      }
  return std::nullopt;
}

GSimplicialComplex barycentric_subdivision(const FiniteGroup& g, const GSimplicialComplex& k) {
  // sd-vertex = simplex of K, in (dim, index) order
  std::vector<std::pair<int, int>> sd_vertex;
  SimplexIndex idx = index_simplices(k);
  std::vector<std::vector<int>> vertex_id(k.top_dim() + 1);
  for (int d = 0; d <= k.top_dim(); ++d) {
    vertex_id[d].resize(k.simplices[d].size());
    for (size_t i = 0; i < k.simplices[d].size(); ++i) {
      vertex_id[d][i] = static_cast<int>(sd_vertex.size());
      sd_vertex.push_back({d, static_cast<int>(i)});
    }
  }

  ConcreteGSet verts;
  verts.size = static_cast<int>(sd_vertex.size());
  verts.act.resize(static_cast<size_t>(g.order) * verts.size);
  for (int e = 0; e < g.order; ++e)
    for (int i = 0; i < verts.size; ++i) {
      auto [d, s] = sd_vertex[i];
      int j = idx.find(d, apply_to_simplex(k.vertices, e, k.simplices[d][s]));
      verts.act[static_cast<size_t>(e) * verts.size + i] = vertex_id[d][j];
    }

  // maximal chains in the face poset; their subchains arrive by closure
  std::vector<std::vector<int>> chains;
  std::vector<int> current;
  auto extend = [&](auto&& self, int d, int s) -> void {
    current.push_back(vertex_id[d][s]);
    chains.push_back(current);
    const std::vector<int>& simplex = k.simplices[d][s];
    if (d > 0)
      for (size_t drop = 0; drop < simplex.size(); ++drop) {
        std::vector<int> face;
        for (size_t i = 0; i < simplex.size(); ++i)
          if (i != drop) face.push_back(simplex[i]);
        self(self, d - 1, idx.find(d - 1, face));
      }
    current.pop_back();
  };
  for (int d = 0; d <= k.top_dim(); ++d)
    for (size_t s = 0; s < k.simplices[d].size(); ++s) extend(extend, d, static_cast<int>(s));

  return make_complex(g, verts, chains);
}

GSimplicialComplex cone(const FiniteGroup& g, const GSimplicialComplex& k) {
  if (validate_regular(g, k)) throw NotRegular("cone: input complex is not regular");
  ConcreteGSet verts = disjoint_union_gset(g, k.vertices, trivial_gset(g, 1));
  int apex = k.vertices.size;
  std::vector<std::vector<int>> simplices{{apex}};
  for (int d = 0; d <= k.top_dim(); ++d)
    for (const auto& s : k.simplices[d]) {
      std::vector<int> cone_s = s;
      cone_s.push_back(apex);
      simplices.push_back(std::move(cone_s));
    }
  return make_complex(g, verts, simplices);
}

FixedComplex fixed_complex(const FiniteGroup& g, const GSimplicialComplex& k,
                           const std::vector<int>& subgroup_members) {
  if (validate_regular(g, k)) throw NotRegular("fixed_complex: input complex is not regular");
  FixedComplex out;
  std::vector<int> new_id(k.vertices.size, -1);
  for (int v : fixed_points(g, k.vertices, subgroup_members)) {
    new_id[v] = out.vertex_count++;
    out.vertex_ids.push_back(v);
  }
  out.simplices.resize(k.simplices.size());
  for (int d = 0; d <= k.top_dim(); ++d)
    for (const auto& s : k.simplices[d]) {
      std::vector<int> t;
      for (int v : s) {
        if (new_id[v] < 0) break;
        t.push_back(new_id[v]);
      }
      if (static_cast<int>(t.size()) == d + 1) out.simplices[d].push_back(std::move(t));
    }
  while (!out.simplices.empty() && out.simplices.back().empty()) out.simplices.pop_back();
  return out;
}

long euler_characteristic(const FiniteGroup& g, const GSimplicialComplex& k,
                          const std::vector<int>& subgroup_members) {
  FixedComplex f = fixed_complex(g, k, subgroup_members);
  long chi = 0;
  for (size_t d = 0; d < f.simplices.size(); ++d)
    chi += (d % 2 == 0 ? 1 : -1) * static_cast<long>(f.simplices[d].size());
  return chi;
}

SpecialComplex cellular_chain_complex(const FiniteGroup& g, const SubgroupLattice& lat,
                                      const GSimplicialComplex& k, const Ring& ring,
                                      bool augmented) {
  if (validate_regular(g, k))
    throw NotRegular("cellular_chain_complex: input complex is not regular");
  SimplexIndex idx = index_simplices(k);

  std::vector<ConcreteGSet> bases;
  for (int d = 0; d <= k.top_dim(); ++d) bases.push_back(simplex_gset(g, k, idx, d));

  // orientation transport: each orbit representative keeps its sorted vertex
  // order; every other simplex inherits the image ordering.  Stabilizers fix
  // simplices pointwise, so the ordering does not depend on the transport.
  std::vector<std::vector<std::vector<int>>> oriented(k.top_dim() + 1);
  for (int d = 0; d <= k.top_dim(); ++d) {
    OrbitData od = orbits(g, bases[d]);
    oriented[d].resize(k.simplices[d].size());
    for (size_t i = 0; i < k.simplices[d].size(); ++i) {
      const std::vector<int>& rep = k.simplices[d][od.rep[od.orbit_of[i]]];
      int tr = od.transport[i];
      std::vector<int> tuple;
      tuple.reserve(rep.size());
      for (int v : rep) tuple.push_back(k.vertices.apply(tr, v));
      oriented[d][static_cast<int>(i)] = std::move(tuple);
    }
  }

  auto tuple_sign = [](std::vector<int> t, const std::vector<int>& target) {
    // parity of the permutation aligning t with target
    int sign = 1;
    for (size_t i = 0; i < t.size(); ++i) {
      if (t[i] == target[i]) continue;
      size_t j = i + 1;
      while (t[j] != target[i]) ++j;
      std::swap(t[i], t[j]);
      sign = -sign;
    }
    return sign;
  };

  std::vector<RatMatrix> boundaries;
  for (int d = 1; d <= k.top_dim(); ++d) {
    RatMatrix b(static_cast<int>(k.simplices[d - 1].size()),
                static_cast<int>(k.simplices[d].size()));
    for (size_t i = 0; i < k.simplices[d].size(); ++i) {
      const std::vector<int>& tuple = oriented[d][i];
      for (size_t drop = 0; drop < tuple.size(); ++drop) {
        std::vector<int> face_tuple;
        for (size_t v = 0; v < tuple.size(); ++v)
          if (v != drop) face_tuple.push_back(tuple[v]);
        std::vector<int> face_sorted = face_tuple;
        std::sort(face_sorted.begin(), face_sorted.end());
        int face = idx.find(d - 1, face_sorted);
        int sign = (drop % 2 == 0 ? 1 : -1) * tuple_sign(face_tuple, oriented[d - 1][face]);
        b.at(face, static_cast<int>(i)) += sign;
      }
    }
    boundaries.push_back(std::move(b));
  }

  return make_special_complex(g, lat, ring, std::move(bases), std::move(boundaries), augmented);
}

BurnsideElement burnside_class(const BurnsideContext& ctx, const GSimplicialComplex& k) {
  if (validate_regular(ctx.group(), k))
    throw NotRegular("burnside_class: input complex is not regular");
  SimplexIndex idx = index_simplices(k);
  BurnsideElement out = ctx.zero_element();
  for (int d = 0; d <= k.top_dim(); ++d) {
    BurnsideElement part = ctx.orbit_decomposition(simplex_gset(ctx.group(), k, idx, d));
    for (int c = 0; c < ctx.classes(); ++c)
      out.coeff[c] += (d % 2 == 0 ? 1 : -1) * part.coeff[c];
  }
  return out;
}

}  // namespace orbitkit
