#include "orbitkit/classify.hpp"

#include <algorithm>

namespace orbitkit {

namespace {

std::vector<int> intersect_sorted(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

int largest_normal_p_subgroup(const FiniteGroup&, const SubgroupLattice& lat, int subgroup,
                              long p) {
  int h_order = lat.sub_order[subgroup];
  long sylow = p_part(h_order, p);
  std::vector<int> acc = lat.members[subgroup];
  for (size_t s = 0; s < lat.members.size(); ++s) {
    if (lat.sub_order[s] != sylow || !lat.leq[s][subgroup]) continue;
    acc = intersect_sorted(acc, lat.members[s]);
  }
  int idx = lat.subgroup_index(acc);
  if (idx < 0) throw GroupError("largest_normal_p_subgroup: intersection missing");
  return idx;
}

bool has_normal_sylow(const FiniteGroup&, const SubgroupLattice& lat, int subgroup, long p) {
  int h_order = lat.sub_order[subgroup];
  long sylow = p_part(h_order, p);
  int count = 0;
  for (size_t s = 0; s < lat.members.size(); ++s)
    if (lat.sub_order[s] == sylow && lat.leq[s][subgroup]) ++count;
  return count == 1;
}

bool is_p_hypoelementary(const FiniteGroup& g, const SubgroupLattice& lat, int subgroup, long p) {
  int op = largest_normal_p_subgroup(g, lat, subgroup, p);
  int quotient_order = lat.sub_order[subgroup] / lat.sub_order[op];
  if (quotient_order % p == 0) return false;  // O_p was not a full Sylow
  QuotientGroup q = quotient_group(g, lat.members[subgroup], lat.members[op]);
  return q.group.is_cyclic();
}

std::vector<int> hypoelementary_classes(const FiniteGroup& g, const SubgroupLattice& lat, long p) {
  std::vector<int> out;
  for (int c = 0; c < lat.num_classes; ++c)
    if (is_p_hypoelementary(g, lat, lat.class_rep[c], p)) out.push_back(c);
  return out;
}

bool in_gpq(const FiniteGroup& g, const SubgroupLattice& lat, long p, long q) {
  for (size_t s = 0; s < lat.members.size(); ++s) {
    if (lat.sub_order[lat.normalizer[s]] != g.order) continue;  // need H normal in G
    long index = g.order / lat.sub_order[s];
    if (!is_prime_power_of(index, q)) continue;
    if (is_p_hypoelementary(g, lat, static_cast<int>(s), p)) return true;
  }
  return false;
}

bool in_gp(const FiniteGroup& g, const SubgroupLattice& lat, long p) {
  if (is_p_hypoelementary(g, lat, static_cast<int>(lat.members.size()) - 1, p)) return true;
  for (long q : distinct_prime_factors(g.order))
    if (in_gpq(g, lat, p, q)) return true;
  return false;
}

DressClassification classify_group(const FiniteGroup& g, const SubgroupLattice& lat, long p) {
  DressClassification out;
  out.p = p;
  out.hypoelementary = hypoelementary_classes(g, lat, p);
  for (long q : distinct_prime_factors(g.order))
    if (in_gpq(g, lat, p, q)) out.gpq_primes.push_back(q);
  out.in_gp = in_gp(g, lat, p);
  return out;
}

}  // namespace orbitkit
