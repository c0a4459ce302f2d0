#include "orbitkit/lattice.hpp"

#include <algorithm>
#include <set>

namespace orbitkit {

int SubgroupLattice::subgroup_index(const std::vector<int>& m) const {
  auto it = index_of.find(m);
  return it == index_of.end() ? -1 : it->second;
}

long long SubgroupLattice::mobius(int s, int t) const {
  if (!leq[s][t]) throw NotComparable("mobius: subgroups are not nested");
  return mobius_table[s][t];
}

int SubgroupLattice::class_by_name(const std::string& name) const {
  for (int c = 0; c < num_classes; ++c)
    if (class_name[c] == name) return c;
  return -1;
}

namespace {

bool subset_of(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// cyclic iff some member has order |K|
bool subgroup_is_cyclic(const FiniteGroup& g, const std::vector<int>& members) {
  for (int m : members)
    if (g.element_order(m) == static_cast<int>(members.size())) return true;
  return false;
}

}  // namespace

SubgroupLattice subgroup_lattice(const FiniteGroup& g) {
  SubgroupLattice lat;

  // seed with all cyclic subgroups, then close under pairwise join
  std::set<std::vector<int>> pool;
  for (int e = 0; e < g.order; ++e) pool.insert(closure_subgroup(g, {e}));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<int>> snapshot(pool.begin(), pool.end());
    for (size_t i = 0; i < snapshot.size(); ++i)
      for (size_t j = i + 1; j < snapshot.size(); ++j) {
        if (subset_of(snapshot[i], snapshot[j]) || subset_of(snapshot[j], snapshot[i])) continue;
        std::vector<int> seed = snapshot[i];
        seed.insert(seed.end(), snapshot[j].begin(), snapshot[j].end());
        if (pool.insert(closure_subgroup(g, seed)).second) grew = true;
      }
  }

  // order subgroups by (order, member list); std::set already sorts by member
  // list, so a stable sort by order finishes the job
  lat.members.assign(pool.begin(), pool.end());
  std::stable_sort(lat.members.begin(), lat.members.end(),
                   [](const std::vector<int>& a, const std::vector<int>& b) {
                     return a.size() < b.size();
                   });
  const int ns = static_cast<int>(lat.members.size());
  for (int s = 0; s < ns; ++s) {
    lat.sub_order.push_back(static_cast<int>(lat.members[s].size()));
    lat.index_of[lat.members[s]] = s;
  }

  // conjugacy classes; members are already sorted so the first subgroup seen
  // in each class is its canonical representative
  lat.class_of.assign(ns, -1);
  for (int s = 0; s < ns; ++s) {
    if (lat.class_of[s] >= 0) continue;
    int c = lat.num_classes++;
    lat.class_rep.push_back(s);
    lat.class_members.push_back({});
    for (int e = 0; e < g.order; ++e) {
      int t = lat.subgroup_index(g.conjugate_set(lat.members[s], e));
      if (lat.class_of[t] < 0) {
        lat.class_of[t] = c;
        lat.class_members[c].push_back(t);
      }
    }
    std::sort(lat.class_members[c].begin(), lat.class_members[c].end());
  }

  lat.leq.assign(ns, std::vector<char>(ns, 0));
  for (int s = 0; s < ns; ++s)
    for (int t = 0; t < ns; ++t)
      lat.leq[s][t] = lat.sub_order[s] <= lat.sub_order[t] && subset_of(lat.members[s], lat.members[t]);

  lat.normalizer.assign(ns, -1);
  for (int s = 0; s < ns; ++s) {
    std::vector<int> nrm;
    for (int e = 0; e < g.order; ++e)
      if (g.conjugate_set(lat.members[s], e) == lat.members[s]) nrm.push_back(e);
    lat.normalizer[s] = lat.subgroup_index(nrm);
  }
  for (int c = 0; c < lat.num_classes; ++c) {
    int s = lat.class_rep[c];
    lat.weyl.push_back(lat.sub_order[lat.normalizer[s]] / lat.sub_order[s]);
  }

  // Möbius by recursion over intervals: mu(s,s) = 1,
  // mu(s,t) = -sum_{s <= m < t} mu(s,m); subgroups are sorted by order so an
  // upward scan visits every m before t
  lat.mobius_table.assign(ns, std::vector<long long>(ns, 0));
  for (int s = 0; s < ns; ++s) {
    lat.mobius_table[s][s] = 1;
    for (int t = s + 1; t < ns; ++t) {
      if (!lat.leq[s][t]) continue;
      long long acc = 0;
      for (int m = s; m < t; ++m)
        if (lat.leq[s][m] && lat.leq[m][t]) acc += lat.mobius_table[s][m];
      lat.mobius_table[s][t] = -acc;
    }
  }

  lat.sup_count.assign(lat.num_classes, std::vector<long long>(lat.num_classes, 0));
  lat.sup_mobius.assign(lat.num_classes, std::vector<long long>(lat.num_classes, 0));
  for (int c = 0; c < lat.num_classes; ++c) {
    int s = lat.class_rep[c];
    for (int t = 0; t < ns; ++t)
      if (lat.leq[s][t]) {
        lat.sup_count[c][lat.class_of[t]] += 1;
        lat.sup_mobius[c][lat.class_of[t]] += lat.mobius_table[s][t];
      }
  }

  // canonical class names: 1, C<n> / H<n> with b, c, ... suffixes, G
  std::map<std::string, int> seen;
  for (int c = 0; c < lat.num_classes; ++c) {
    int s = lat.class_rep[c];
    std::string base;
    if (lat.sub_order[s] == 1)
      base = "1";
    else if (lat.sub_order[s] == g.order)
      base = "G";
    else if (subgroup_is_cyclic(g, lat.members[s]))
      base = "C" + std::to_string(lat.sub_order[s]);
    else
      base = "H" + std::to_string(lat.sub_order[s]);
    int n = seen[base]++;
    if (n > 0) base += static_cast<char>('a' + n);
    lat.class_name.push_back(base);
  }

  return lat;
}

std::vector<Int> orbit_class_counts(const FiniteGroup& g, const SubgroupLattice& lat,
                                    const ConcreteGSet& x) {
  std::vector<Int> counts(lat.num_classes, 0);
  OrbitData od = orbits(g, x);
  for (int o = 0; o < od.count; ++o) {
    std::vector<int> stab = point_stabilizer(g, x, od.rep[o]);
    int s = lat.subgroup_index(stab);
    if (s < 0) throw GroupError("orbit_class_counts: stabilizer missing from lattice");
    counts[lat.class_of[s]] += 1;
  }
  return counts;
}

}  // namespace orbitkit
