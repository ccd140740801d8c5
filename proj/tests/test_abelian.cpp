#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "ydforge/abelian.hpp"

using namespace ydforge;

namespace {

// Precomputed boolean pairing chi_t(g_s) == 1 makes the exhaustive perp
// sweeps cheap.
std::vector<std::vector<bool>> pairing(const FinAbGroup& g) {
  const auto chars = dual_group(g);
  std::vector<std::vector<bool>> t(chars.size(), std::vector<bool>(chars.size()));
  for (size_t a = 0; a < chars.size(); ++a)
    for (size_t b = 0; b < chars.size(); ++b)
      t[a][b] = chars[a].value(g.element(static_cast<int>(b))).is_one();
  return t;
}

}  // namespace

TEST_CASE("element indexing round trip") {
  const FinAbGroup g({4, 2});
  CHECK(g.order() == 8);
  CHECK(g.exponent() == 4);
  for (int i = 0; i < g.order(); ++i) CHECK(g.index_of(g.element(i)) == i);
  CHECK(g.mul(GroupElement{{3, 1}}, GroupElement{{2, 1}}) == GroupElement{{1, 0}});
  CHECK(g.inv(GroupElement{{1, 1}}) == GroupElement{{3, 1}});
  CHECK(g.element_order(GroupElement{{2, 1}}) == 2);
  CHECK(g.element_order(GroupElement{{1, 0}}) == 4);
  CHECK(g.element_label(GroupElement{{1, 0}}) == "1,0");
}

TEST_CASE("dual group of Z2 x Z2 and Z4") {
  const FinAbGroup klein({2, 2});
  const auto chars = dual_group(klein);
  CHECK(chars.size() == 4);
  for (const auto& chi : chars) {
    for (int s = 0; s < 4; ++s) {
      const Scalar v = chi.value(klein.element(s));
      CHECK((v == Scalar(1) || v == Scalar(-1)));
    }
  }

  const FinAbGroup z4({4});
  const auto z4_chars = dual_group(z4);
  CHECK(z4_chars.size() == 4);
  // generator images enumerate the fourth roots of unity
  std::set<std::string> images;
  for (const auto& chi : z4_chars) images.insert(chi.value(GroupElement{{1}}).str());
  CHECK(images == std::set<std::string>{"1", "i", "-1", "-i"});

  const FinAbGroup trivial(std::vector<int>{});
  const auto tchars = dual_group(trivial);
  CHECK(tchars.size() == 1);
  CHECK(tchars[0].is_trivial());

  CHECK_THROWS_AS(dual_group(FinAbGroup({3})), UnsupportedExponent);
}

TEST_CASE("characters are pairwise distinct and closed under product") {
  for (const FinAbGroup& g : {FinAbGroup({2, 2}), FinAbGroup({8}), FinAbGroup({4, 2})}) {
    const auto chars = dual_group(g);
    for (size_t a = 0; a < chars.size(); ++a) {
      for (size_t b = 0; b < chars.size(); ++b) {
        if (a != b) CHECK(!(chars[a] == chars[b]));
        const int product_index = character_index(chars[a].times(chars[b]));
        const int sum_index =
            g.index_of(g.mul(g.element(static_cast<int>(a)), g.element(static_cast<int>(b))));
        CHECK(product_index == sum_index);
      }
    }
  }
}

TEST_CASE("dual group is isomorphic to the group (order profile)") {
  for (const FinAbGroup& g : {FinAbGroup({2, 2}), FinAbGroup({8}), FinAbGroup({4, 4})}) {
    std::multiset<int> group_orders, char_orders;
    for (int s = 0; s < g.order(); ++s) group_orders.insert(g.element_order(g.element(s)));
    for (int t = 0; t < g.order(); ++t) {
      const auto chi = character_from_index(g, t);
      Character power = chi;
      int ord = 1;
      while (!power.is_trivial()) {
        power = power.times(chi);
        ++ord;
      }
      char_orders.insert(ord);
    }
    CHECK(group_orders == char_orders);
  }
}

TEST_CASE("perp basics") {
  const FinAbGroup klein({2, 2});
  const int unit = klein.index_of(klein.identity());
  // {1}^perp is everything
  CHECK(perp_of_elements(klein, {unit}).size() == 4);
  // (G-hat)^perp is the unit
  std::vector<int> all{0, 1, 2, 3};
  CHECK(perp_of_characters(klein, all) == std::vector<int>{unit});
  // trivial character annihilates all of G (Q_eta^perp = G when Q is trivial)
  CHECK(perp_of_characters(klein, {unit}).size() == 4);

  const auto chars = perp(klein, std::vector<GroupElement>{klein.identity()});
  CHECK(chars.size() == 4);
  const auto elems = perp(klein, dual_group(klein));
  REQUIRE(elems.size() == 1);
  CHECK(elems[0] == klein.identity());
}

TEST_CASE("perp biduality on all subsets, |G| <= 16") {
  for (const FinAbGroup& g :
       {FinAbGroup({2, 2}), FinAbGroup({8}), FinAbGroup({4, 2}), FinAbGroup({2, 2, 2}),
        FinAbGroup({4, 4})}) {
    const int n = g.order();
    const auto pair = pairing(g);
    // perp using the precomputed table, subsets as bitmasks
    const auto perp_mask = [&](uint32_t subset, bool characters) {
      std::vector<int> out;
      for (int t = 0; t < n; ++t) {
        bool ok = true;
        for (int s = 0; s < n && ok; ++s) {
          if (!(subset >> s & 1)) continue;
          ok = characters ? pair[static_cast<size_t>(s)][static_cast<size_t>(t)]
                          : pair[static_cast<size_t>(t)][static_cast<size_t>(s)];
        }
        if (ok) out.push_back(t);
      }
      return out;
    };
    for (uint32_t subset = 0; subset < (1u << n); ++subset) {
      std::vector<int> s;
      for (int i = 0; i < n; ++i) {
        if (subset >> i & 1) s.push_back(i);
      }
      // both directions: subsets of G and of G-hat
      const auto perp1 = perp_mask(subset, false);
      uint32_t mask1 = 0;
      for (int t : perp1) mask1 |= 1u << t;
      const auto bidual = perp_mask(mask1, true);
      CHECK(bidual == generated_subgroup(g, s));

      const auto perp2 = perp_mask(subset, true);
      uint32_t mask2 = 0;
      for (int t : perp2) mask2 |= 1u << t;
      const auto bidual2 = perp_mask(mask2, false);
      CHECK(bidual2 == generated_subgroup(g, s));
    }
    // spot-check the bitmask helper against the library perp on a few subsets
    for (uint32_t subset : {0u, 1u, 5u, (1u << n) - 1}) {
      std::vector<int> s;
      for (int i = 0; i < n; ++i) {
        if (subset >> i & 1) s.push_back(i);
      }
      CHECK(perp_mask(subset, false) == perp_of_elements(g, s));
      CHECK(perp_mask(subset, true) == perp_of_characters(g, s));
    }
  }
}

TEST_CASE("subgroup order times perp order equals group order") {
  const FinAbGroup g({4, 2});
  for (uint32_t gens = 0; gens < (1u << 8); gens += 3) {
    std::vector<int> gen_list;
    for (int i = 0; i < 8; ++i) {
      if (gens >> i & 1) gen_list.push_back(i);
    }
    const auto sub = generated_subgroup(g, gen_list);
    CHECK(is_subgroup(g, sub));
    CHECK(sub.size() * perp_of_elements(g, sub).size() == static_cast<size_t>(g.order()));
  }
}

TEST_CASE("quotient groups") {
  const FinAbGroup klein({2, 2});
  std::vector<int> all{0, 1, 2, 3};
  const auto trivial_quot = quotient_group(klein, all);
  CHECK(trivial_quot.group.order() == 1);

  const auto by_unit = quotient_group(klein, {klein.index_of(klein.identity())});
  CHECK(by_unit.group.order() == 4);
  // projection is a bijection re-indexing the group
  std::set<int> images(by_unit.projection.begin(), by_unit.projection.end());
  CHECK(images.size() == 4);

  const FinAbGroup z8({8});
  const auto sub = generated_subgroup(z8, {z8.index_of(GroupElement{{4}})});
  const auto q = quotient_group(z8, sub);
  CHECK(q.group.order() == 4);
  CHECK(q.group.factors() == std::vector<int>{4});
  // projection is a homomorphism with kernel = sub
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      const int ab = z8.index_of(z8.mul(z8.element(a), z8.element(b)));
      const auto qa = q.group.element(q.projection[static_cast<size_t>(a)]);
      const auto qb = q.group.element(q.projection[static_cast<size_t>(b)]);
      CHECK(q.projection[static_cast<size_t>(ab)] == q.group.index_of(q.group.mul(qa, qb)));
    }
    const bool in_kernel =
        q.projection[static_cast<size_t>(a)] == q.group.index_of(q.group.identity());
    CHECK(in_kernel == std::binary_search(sub.begin(), sub.end(), a));
  }

  // Z4 x Z2 modulo the diagonal order-2 subgroup: quotient of order 4.
  const FinAbGroup g42({4, 2});
  const auto diag = generated_subgroup(g42, {g42.index_of(GroupElement{{2, 1}})});
  CHECK(diag.size() == 2);
  const auto q42 = quotient_group(g42, diag);
  CHECK(q42.group.order() == 4);
  CHECK(q42.group.factors() == std::vector<int>{4});

  // subquotient: a subgroup modulo a subgroup of it
  const auto numerator = generated_subgroup(g42, {g42.index_of(GroupElement{{1, 0}})});
  const auto denominator = generated_subgroup(g42, {g42.index_of(GroupElement{{2, 0}})});
  const auto sq = subquotient(g42, numerator, denominator);
  CHECK(sq.group.order() == 2);
  for (int outside = 0; outside < g42.order(); ++outside) {
    if (!std::binary_search(numerator.begin(), numerator.end(), outside)) {
      CHECK(sq.projection[static_cast<size_t>(outside)] == -1);
    }
  }
  CHECK_THROWS_AS(subquotient(g42, denominator, numerator), std::invalid_argument);
}

TEST_CASE("bicharacter checks") {
  const FinAbGroup klein({2, 2});

  // the example bicharacter with zeta^2 = 1: rows (1, -1; -1, 1)
  Matrix m1(2, 2);
  m1.at(0, 0) = Scalar(1);
  m1.at(0, 1) = Scalar(-1);
  m1.at(1, 0) = Scalar(-1);
  m1.at(1, 1) = Scalar(1);
  const auto rep1 = bicharacter_checks(Bicharacter(klein, m1));
  CHECK(rep1.symmetric);
  CHECK(rep1.nondegenerate);
  CHECK(rep1.orthogonality);

  // zeta^2 = -1: rows (-1, -1; -1, 1)
  Matrix m2 = m1;
  m2.at(0, 0) = Scalar(-1);
  const auto rep2 = bicharacter_checks(Bicharacter(klein, m2));
  CHECK(rep2.symmetric);
  CHECK(rep2.nondegenerate);
  CHECK(rep2.orthogonality);

  // theta == 1 on Z2 is degenerate and fails orthogonality
  const FinAbGroup z2({2});
  Matrix ones(1, 1);
  ones.at(0, 0) = Scalar(1);
  const auto rep3 = bicharacter_checks(Bicharacter(z2, ones));
  CHECK(rep3.symmetric);
  CHECK(!rep3.nondegenerate);
  CHECK(!rep3.orthogonality);

  // theta(a,b) = iota^{ab} on Z4 is nondegenerate; brute-force column sums
  const FinAbGroup z4({4});
  Matrix mi(1, 1);
  mi.at(0, 0) = Scalar::iota();
  const Bicharacter theta_i(z4, mi);
  const auto rep4 = bicharacter_checks(theta_i);
  CHECK(rep4.symmetric);
  CHECK(rep4.nondegenerate);
  CHECK(rep4.orthogonality);
  for (int b = 0; b < 4; ++b) {
    Scalar sum;
    for (int a = 0; a < 4; ++a) sum += Scalar::iota().pow(a * b);
    CHECK(sum == (b == 0 ? Scalar(4) : Scalar(0)));
    CHECK(sum == [&] {
      Scalar s;
      for (int a = 0; a < 4; ++a) s += theta_i.value_by_index(a, b);
      return s;
    }());
  }

  // values must be compatible with the factor orders
  Matrix bad(1, 1);
  bad.at(0, 0) = Scalar::xi();  // an 8th root is not a 4th root
  CHECK_THROWS_AS(Bicharacter(z4, bad), std::invalid_argument);
}

TEST_CASE("nondegenerate theta gives a bijection g -> theta(g, .)") {
  const FinAbGroup z4({4});
  Matrix mi(1, 1);
  mi.at(0, 0) = Scalar::iota();
  const Bicharacter theta(z4, mi);
  std::set<int> images;
  for (int a = 0; a < 4; ++a) {
    std::vector<Scalar> vals{theta.value(z4.element(a), GroupElement{{1}})};
    images.insert(character_index(Character(z4, vals)));
  }
  CHECK(images.size() == 4);
}
