#include "orbitkit/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace orbitkit {

Perm perm_identity(int degree) {
  Perm p(degree);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm perm_compose(const Perm& first, const Perm& then) {
  Perm r(first.size());
  for (size_t x = 0; x < first.size(); ++x) r[x] = then[first[x]];
  return r;
}

Perm perm_inverse(const Perm& p) {
  Perm r(p.size());
  for (size_t x = 0; x < p.size(); ++x) r[p[x]] = static_cast<int>(x);
  return r;
}

int FiniteGroup::element_order(int a) const {
  int n = 1, x = a;
  while (x != 0) {
    x = mul(x, a);
    ++n;
  }
  return n;
}

bool FiniteGroup::is_cyclic() const {
  for (int a = 0; a < order; ++a)
    if (element_order(a) == order) return true;
  return false;
}

std::vector<int> FiniteGroup::conjugate_set(const std::vector<int>& members, int g) const {
  std::vector<int> out;
  out.reserve(members.size());
  for (int m : members) out.push_back(conjugate(m, g));
  std::sort(out.begin(), out.end());
  return out;
}

void validate_group(const FiniteGroup& g) {
  const int n = g.order;
  if (n <= 0 || g.mul_table.size() != static_cast<size_t>(n) * n ||
      g.inv_table.size() != static_cast<size_t>(n))
    throw GroupError("validate_group: malformed tables");
  for (int a = 0; a < n; ++a) {
    if (g.mul(0, a) != a || g.mul(a, 0) != a) throw GroupError("validate_group: identity fails");
    if (g.mul(a, g.inv(a)) != 0 || g.mul(g.inv(a), a) != 0)
      throw GroupError("validate_group: inverse fails");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
          throw GroupError("validate_group: associativity fails");
}

FiniteGroup group_from_generators(int degree, const std::vector<Perm>& gens, int order_cap) {
  if (degree < 1) throw NotAPermutation("degree must be at least 1");
  for (const Perm& p : gens) {
    if (static_cast<int>(p.size()) != degree)
      throw NotAPermutation("generator does not match the degree");
    std::vector<char> seen(degree, 0);
    for (int img : p) {
      if (img < 0 || img >= degree || seen[img]) throw NotAPermutation("not a bijection");
      seen[img] = 1;
    }
  }

  FiniteGroup g;
  g.degree = degree;
  g.element_perm = {perm_identity(degree)};
  g.bfs_parent = {-1};
  g.bfs_gen = {-1};
  std::map<Perm, int> index_of;
  index_of[g.element_perm[0]] = 0;

  // closure BFS; discovery order fixes the element indexing
  for (size_t head = 0; head < g.element_perm.size(); ++head) {
    for (size_t k = 0; k < gens.size(); ++k) {
      Perm q = perm_compose(g.element_perm[head], gens[k]);
      if (index_of.count(q)) continue;
      if (static_cast<int>(g.element_perm.size()) >= order_cap)
        throw OrderCapExceeded("group order exceeds the configured cap");
      index_of[q] = static_cast<int>(g.element_perm.size());
      g.element_perm.push_back(std::move(q));
      g.bfs_parent.push_back(static_cast<int>(head));
      g.bfs_gen.push_back(static_cast<int>(k));
    }
  }

  g.order = static_cast<int>(g.element_perm.size());
  g.mul_table.assign(static_cast<size_t>(g.order) * g.order, 0);
  g.inv_table.assign(g.order, 0);
  for (int a = 0; a < g.order; ++a) {
    for (int b = 0; b < g.order; ++b)
      g.mul_table[static_cast<size_t>(a) * g.order + b] =
          index_of.at(perm_compose(g.element_perm[a], g.element_perm[b]));
    g.inv_table[a] = index_of.at(perm_inverse(g.element_perm[a]));
  }
  for (const Perm& p : gens) g.gen_elems.push_back(index_of.at(p));
  return g;
}

namespace {

Perm cycle_perm(int degree, const std::vector<int>& cycle) {
  Perm p = perm_identity(degree);
  for (size_t i = 0; i < cycle.size(); ++i) p[cycle[i]] = cycle[(i + 1) % cycle.size()];
  return p;
}

}  // namespace

FiniteGroup group_preset(const std::string& family, int n, int order_cap) {
  FiniteGroup g;
  if (family == "C") {
    if (n < 1) throw UnknownPreset("C n needs n >= 1");
    if (n == 1) {
      g = group_from_generators(1, {}, order_cap);
    } else {
      std::vector<int> c(n);
      std::iota(c.begin(), c.end(), 0);
      g = group_from_generators(n, {cycle_perm(n, c)}, order_cap);
    }
    g.name = "C" + std::to_string(n);
  } else if (family == "S") {
    if (n < 1) throw UnknownPreset("S n needs n >= 1");
    std::vector<Perm> gens;
    if (n >= 2) gens.push_back(cycle_perm(n, {0, 1}));
    if (n >= 3) {
      std::vector<int> c(n);
      std::iota(c.begin(), c.end(), 0);
      gens.push_back(cycle_perm(n, c));
    }
    g = group_from_generators(std::max(n, 1), gens, order_cap);
    g.name = "S" + std::to_string(n);
  } else if (family == "A") {
    if (n < 1) throw UnknownPreset("A n needs n >= 1");
    std::vector<Perm> gens;
    if (n >= 3) gens.push_back(cycle_perm(n, {0, 1, 2}));
    if (n >= 4) {
      std::vector<int> c;
      if (n % 2 == 1) {
        c.resize(n);
        std::iota(c.begin(), c.end(), 0);
      } else {
        c.resize(n - 1);
        std::iota(c.begin(), c.end(), 1);
      }
      gens.push_back(cycle_perm(n, c));
    }
    g = group_from_generators(std::max(n, 1), gens, order_cap);
    g.name = "A" + std::to_string(n);
  } else if (family == "D") {
    if (n < 3) throw UnknownPreset("D n (order 2n) needs n >= 3");
    std::vector<int> c(n);
    std::iota(c.begin(), c.end(), 0);
    Perm refl(n);
    for (int i = 0; i < n; ++i) refl[i] = (n - i) % n;
    g = group_from_generators(n, {cycle_perm(n, c), refl}, order_cap);
    g.name = "D" + std::to_string(n);
  } else if (family == "Q") {
    if (n != 8) throw UnknownPreset("only Q 8 is in the catalog");
    // right-regular action on {1,-1,i,-i,j,-j,k,-k}
    Perm pi = {2, 3, 1, 0, 7, 6, 4, 5};
    Perm pj = {4, 5, 6, 7, 1, 0, 3, 2};
    g = group_from_generators(8, {pi, pj}, order_cap);
    if (g.order != 8) throw UnknownPreset("Q8 construction failed");
    g.name = "Q8";
  } else if (family == "E") {
    // elementary abelian of order n = p^k: k disjoint p-cycles
    if (n < 2) throw UnknownPreset("E n needs a prime power n >= 2");
    long p = 0;
    for (long d = 2; d <= n; ++d)
      if (n % d == 0) {
        p = d;
        break;
      }
    int k = 0;
    long m = n;
    while (m % p == 0) {
      m /= p;
      ++k;
    }
    if (m != 1) throw UnknownPreset("E n needs a prime power n");
    int degree = static_cast<int>(k * p);
    std::vector<Perm> gens;
    for (int block = 0; block < k; ++block) {
      std::vector<int> c(p);
      std::iota(c.begin(), c.end(), static_cast<int>(block * p));
      gens.push_back(cycle_perm(degree, c));
    }
    g = group_from_generators(degree, gens, order_cap);
    g.name = "E" + std::to_string(n);
  } else {
    throw UnknownPreset("unknown preset family: " + family);
  }
  return g;
}

std::optional<std::pair<std::string, int>> parse_preset_label(const std::string& label) {
  size_t i = 0;
  while (i < label.size() && std::isalpha(static_cast<unsigned char>(label[i]))) ++i;
  if (i == 0 || i == label.size()) return std::nullopt;
  std::string fam = label.substr(0, i);
  for (size_t j = i; j < label.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(label[j]))) return std::nullopt;
  return std::make_pair(fam, std::stoi(label.substr(i)));
}

std::vector<int> closure_subgroup(const FiniteGroup& g, std::vector<int> seed) {
  std::vector<char> in(g.order, 0);
  std::vector<int> stack;
  auto push = [&](int e) {
    if (!in[e]) {
      in[e] = 1;
      stack.push_back(e);
    }
  };
  push(0);
  for (int e : seed) push(e);
  std::vector<int> members;
  while (!stack.empty()) {
    int e = stack.back();
    stack.pop_back();
    members.push_back(e);
    push(g.inv(e));
    for (int m = 0; m < g.order; ++m)
      if (in[m]) {
        push(g.mul(e, m));
        push(g.mul(m, e));
      }
  }
  std::sort(members.begin(), members.end());
  return members;
}

bool is_subgroup_set(const FiniteGroup& g, const std::vector<int>& members) {
  std::vector<char> in(g.order, 0);
  for (int m : members) in[m] = 1;
  if (!in[0]) return false;
  for (int a : members) {
    if (!in[g.inv(a)]) return false;
    for (int b : members)
      if (!in[g.mul(a, b)]) return false;
  }
  return true;
}

QuotientGroup quotient_group(const FiniteGroup& g, const std::vector<int>& h_members,
                             const std::vector<int>& n_members) {
  QuotientGroup q;
  q.coset_of.assign(g.order, -1);
  std::vector<char> in_n(g.order, 0);
  for (int m : n_members) in_n[m] = 1;
  for (int h : h_members)
    for (int m : n_members)
      if (!in_n[g.conjugate(m, h)]) throw GroupError("quotient_group: N is not normal in H");

  // cosets Nh; the identity coset N comes first because h_members is sorted
  // and contains the identity
  for (int m : n_members) q.coset_of[m] = 0;
  q.coset_rep.push_back(0);
  for (int h : h_members) {
    if (q.coset_of[h] >= 0) continue;
    int id = static_cast<int>(q.coset_rep.size());
    q.coset_rep.push_back(h);
    for (int m : n_members) q.coset_of[g.mul(m, h)] = id;
  }

  const int qn = static_cast<int>(q.coset_rep.size());
  q.group.order = qn;
  q.group.degree = 0;
  q.group.name = "quotient";
  q.group.mul_table.assign(static_cast<size_t>(qn) * qn, 0);
  q.group.inv_table.assign(qn, 0);
  for (int a = 0; a < qn; ++a) {
    for (int b = 0; b < qn; ++b)
      q.group.mul_table[static_cast<size_t>(a) * qn + b] =
          q.coset_of[g.mul(q.coset_rep[a], q.coset_rep[b])];
    q.group.inv_table[a] = q.coset_of[g.inv(q.coset_rep[a])];
  }
  return q;
}

}  // namespace orbitkit
