#include "doctest.h"

#include "orbitkit/classify.hpp"

#include <map>

using namespace orbitkit;

namespace {

struct Ctx {
  FiniteGroup g;
  SubgroupLattice lat;
  explicit Ctx(const char* label) {
    auto p = parse_preset_label(label);
    REQUIRE(p);
    g = group_preset(p->first, p->second);
    lat = subgroup_lattice(g);
  }
  int whole() const { return static_cast<int>(lat.members.size()) - 1; }
};

}  // namespace

TEST_CASE("p-hypoelementary basics") {
  Ctx t("C1");
  CHECK(is_p_hypoelementary(t.g, t.lat, 0, 2));
  CHECK(is_p_hypoelementary(t.g, t.lat, 0, 5));

  Ctx s3("S3");
  SUBCASE("all proper subgroups of S3 are 2-hypoelementary, S3 is not") {
    for (size_t s = 0; s + 1 < s3.lat.members.size(); ++s)
      CHECK(is_p_hypoelementary(s3.g, s3.lat, static_cast<int>(s), 2));
    CHECK(!is_p_hypoelementary(s3.g, s3.lat, s3.whole(), 2));
  }
  SUBCASE("S3 is 3-hypoelementary") { CHECK(is_p_hypoelementary(s3.g, s3.lat, s3.whole(), 3)); }
}

TEST_CASE("hypoelementary class sets") {
  SUBCASE("p-groups are entirely hypoelementary") {
    Ctx d4("D4");
    CHECK(hypoelementary_classes(d4.g, d4.lat, 2).size() ==
          static_cast<size_t>(d4.lat.num_classes));
  }
  SUBCASE("S3 at p=2 excludes only the whole group") {
    Ctx s3("S3");
    CHECK(hypoelementary_classes(s3.g, s3.lat, 2) == std::vector<int>{0, 1, 2});
  }
  SUBCASE("A5 at p=2 excludes exactly the noncyclic-quotient classes") {
    Ctx a5("A5");
    auto hypo = hypoelementary_classes(a5.g, a5.lat, 2);
    for (int c = 0; c < a5.lat.num_classes; ++c) {
      int rep = a5.lat.class_rep[c];
      int op = largest_normal_p_subgroup(a5.g, a5.lat, rep, 2);
      bool expect = false;
      if ((a5.lat.sub_order[rep] / a5.lat.sub_order[op]) % 2 != 0) {
        QuotientGroup q = quotient_group(a5.g, a5.lat.members[rep], a5.lat.members[op]);
        expect = q.group.is_cyclic();
      }
      CHECK(std::count(hypo.begin(), hypo.end(), c) == (expect ? 1 : 0));
    }
    // spot pins: 1, C2, C3, V4, C5, A4 in; S3, D5, A5 out
    std::map<int, int> sizes;
    for (int c : hypo) sizes[a5.lat.sub_order[a5.lat.class_rep[c]]]++;
    CHECK(sizes == std::map<int, int>{{1, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 1}, {12, 1}});
  }
}

TEST_CASE("hypoelementary membership is a class function and subgroup-closed") {
  for (const char* label : {"S3", "D4", "A4", "D6"}) {
    Ctx t(label);
    for (long p : distinct_prime_factors(t.g.order)) {
      for (int c = 0; c < t.lat.num_classes; ++c) {
        bool expect = is_p_hypoelementary(t.g, t.lat, t.lat.class_members[c][0], p);
        for (int s : t.lat.class_members[c])
          CHECK(is_p_hypoelementary(t.g, t.lat, s, p) == expect);
      }
      for (size_t s = 0; s < t.lat.members.size(); ++s) {
        if (!is_p_hypoelementary(t.g, t.lat, static_cast<int>(s), p)) continue;
        for (size_t u = 0; u < t.lat.members.size(); ++u)
          if (t.lat.leq[u][s]) CHECK(is_p_hypoelementary(t.g, t.lat, static_cast<int>(u), p));
      }
    }
  }
}

TEST_CASE("quotients by normal p-subgroups preserve hypoelementarity") {
  // for p-subgroups Q normal in H: H/Q is p-hypoelementary iff H is
  for (const char* label : {"S3", "D4", "A4"}) {
    Ctx t(label);
    for (long p : distinct_prime_factors(t.g.order)) {
      for (size_t h = 0; h < t.lat.members.size(); ++h) {
        for (size_t q = 0; q < t.lat.members.size(); ++q) {
          if (!t.lat.leq[q][h] || !is_prime_power_of(t.lat.sub_order[q], p)) continue;
          bool normal_in_h = true;
          for (int e : t.lat.members[h])
            normal_in_h =
                normal_in_h && t.g.conjugate_set(t.lat.members[q], e) == t.lat.members[q];
          if (!normal_in_h) continue;
          QuotientGroup quo = quotient_group(t.g, t.lat.members[h], t.lat.members[q]);
          SubgroupLattice qlat = subgroup_lattice(quo.group);
          bool quotient_hypo = is_p_hypoelementary(
              quo.group, qlat, static_cast<int>(qlat.members.size()) - 1, p);
          CHECK(quotient_hypo == is_p_hypoelementary(t.g, t.lat, static_cast<int>(h), p));
        }
      }
    }
  }
}

TEST_CASE("normal Sylow subgroups") {
  Ctx s3("S3");
  CHECK(!has_normal_sylow(s3.g, s3.lat, s3.whole(), 2));
  CHECK(has_normal_sylow(s3.g, s3.lat, s3.whole(), 3));
  Ctx d4("D4");
  CHECK(has_normal_sylow(d4.g, d4.lat, d4.whole(), 2));  // a p-group is its own Sylow
}

TEST_CASE("Dress classes G_p^q and G_p") {
  SUBCASE("hypoelementary groups lie in every G_p^q") {
    Ctx c6("C6");
    for (long q : {2L, 3L, 5L}) CHECK(in_gpq(c6.g, c6.lat, 2, q));
  }
  SUBCASE("S3: in G_2^2 via the normal C3, not in G_2^3") {
    Ctx s3("S3");
    CHECK(in_gpq(s3.g, s3.lat, 2, 2));
    CHECK(!in_gpq(s3.g, s3.lat, 2, 3));
    CHECK(in_gp(s3.g, s3.lat, 2));
  }
  SUBCASE("A5 lies in no G_p") {
    Ctx a5("A5");
    for (long p : {2L, 3L, 5L}) {
      for (long q : {2L, 3L, 5L}) CHECK(!in_gpq(a5.g, a5.lat, p, q));
      CHECK(!in_gp(a5.g, a5.lat, p));
    }
  }
  SUBCASE("C_p is in G_p") {
    Ctx c3("C3");
    CHECK(in_gp(c3.g, c3.lat, 3));
  }
}
