#include <doctest.h>

#include <algorithm>
#include <map>

#include "relcomm/errors.hpp"
#include "relcomm/families.hpp"
#include "relcomm/lattice.hpp"
#include "relcomm/number_theory.hpp"
#include "support/oracles.hpp"

using namespace relcomm;

namespace {

FiniteGroup f20() {
  auto c5 = cyclic(5), c4 = cyclic(4);
  return semidirect_product(c5, c4, extend_action(c5, c4, {1}, {Permutation{0, 2, 4, 1, 3}}));
}

std::map<std::size_t, std::size_t> orders_of(std::vector<Subgroup> const& subs) {
  std::map<std::size_t, std::size_t> m;
  for (auto const& s : subs) ++m[s.order()];
  return m;
}

}  // namespace

TEST_CASE("subgroup counts") {
  CHECK(all_subgroups(symmetric(4)).size() == 30);
  CHECK(all_subgroups(cyclic(7)).size() == 2);
  auto q8 = all_subgroups(dicyclic(2));
  CHECK(q8.size() == 6);
  CHECK(orders_of(q8.subgroups()) == std::map<std::size_t, std::size_t>{{1, 1}, {2, 1}, {4, 3}, {8, 1}});
}

TEST_CASE("lattice agrees with the naive two-generator enumeration") {
  for (auto const& g : {symmetric(4), dihedral(8), dicyclic(2), alternating(4), sl23(), f20(),
                        dihedral(9), heisenberg(3), elementary_abelian(2, 4),
                        direct_product(symmetric(3), cyclic(6))}) {
    auto lat = all_subgroups(g);
    auto naive = oracle::all_subgroups_naive(g);
    REQUIRE(lat.size() == naive.size());
    for (auto const& s : lat.subgroups()) {
      auto e = s.elements();
      CHECK(naive.count(oracle::Members(e.begin(), e.end())) == 1);
    }
  }
}

TEST_CASE("lattice structure invariants") {
  for (auto const& g : {symmetric(4), sl23(), dihedral(6), heisenberg(3)}) {
    auto lat = all_subgroups(g);
    CHECK(lat[0].order() == 1);
    CHECK(lat[lat.whole_index()].order() == g.order());
    for (std::size_t i = 0; i < lat.size(); ++i) {
      CHECK(g.order() % lat[i].order() == 0);
      if (i > 0) CHECK(lat[i - 1].order() <= lat[i].order());
      for (std::size_t j = i; j < lat.size(); ++j) {
        auto meet = lat[i].members() & lat[j].members();
        CHECK(lat.find(meet).has_value());
      }
    }
  }
}

TEST_CASE("maximal subgroups") {
  auto d8 = maximal_subgroups(all_subgroups(dihedral(4)));
  CHECK(d8.size() == 3);
  for (auto const& m : d8) CHECK(m.order() == 4);

  CHECK(maximal_subgroups(all_subgroups(cyclic(25))).size() == 1);

  auto a4 = maximal_subgroups(all_subgroups(alternating(4)));
  CHECK(orders_of(a4) == std::map<std::size_t, std::size_t>{{3, 4}, {4, 1}});
}

TEST_CASE("cover relation matches a direct definition") {
  auto lat = all_subgroups(symmetric(4));
  for (std::size_t i = 0; i < lat.size(); ++i) {
    std::vector<std::size_t> expected;
    for (std::size_t j = 0; j < lat.size(); ++j) {
      if (j == i || !lat[j].is_subgroup_of(lat[i])) continue;
      bool between = false;
      for (std::size_t k = 0; k < lat.size() && !between; ++k)
        between = k != i && k != j && lat[j].is_subgroup_of(lat[k]) && lat[k].is_subgroup_of(lat[i]);
      if (!between) expected.push_back(j);
    }
    CHECK(lat.maximal_of(i) == expected);
  }
}

TEST_CASE("maximum chain length") {
  CHECK(max_chain_length(all_subgroups(cyclic(27))) == 3);
  CHECK(max_chain_length(all_subgroups(cyclic(32))) == 5);
  CHECK(max_chain_length(all_subgroups(symmetric(4))) == 4);
  CHECK(max_chain_length(all_subgroups(FiniteGroup{})) == 0);
  // Solvable groups: every maximal chain refines a composition series.
  for (auto const& g : {sl23(), dihedral(9), f20(), heisenberg(3), dicyclic(6)})
    CHECK(max_chain_length(all_subgroups(g)) == big_omega(g.order()));
}

TEST_CASE("normality and Sylow subgroups") {
  auto s4 = all_subgroups(symmetric(4));
  CHECK(sylow_subgroup(s4, 2).order() == 8);
  CHECK_FALSE(is_normal(symmetric(4), sylow_subgroup(s4, 2)));
  CHECK_THROWS_AS(sylow_subgroup(s4, 5), NoSuchPrime);
  CHECK_THROWS_AS(sylow_subgroup(s4, 4), NoSuchPrime);

  auto c6 = all_subgroups(cyclic(6));
  auto p3 = sylow_subgroup(c6, 3);
  CHECK(p3.order() == 3);
  CHECK(is_normal(cyclic(6), p3));

  auto g = f20();
  auto lat = all_subgroups(g);
  CHECK(sylow_subgroup(lat, 5).order() == 5);
  CHECK(is_normal(g, sylow_subgroup(lat, 5)));
  CHECK(sylow_subgroup(lat, 2).order() == 4);
  CHECK_FALSE(is_normal(g, sylow_subgroup(lat, 2)));
}

TEST_CASE("Sylow counts are 1 mod p") {
  for (auto const& g : {symmetric(4), alternating(5), sl23(), f20(), dihedral(15)}) {
    auto lat = all_subgroups(g);
    for (auto const& [p, e] : factorize(g.order())) {
      auto full = ipow(p, e);
      std::size_t count = 0;
      for (auto const& s : lat.subgroups()) count += s.order() == full;
      CHECK(count % p == 1);
      CHECK(g.order() / full % count == 0);
    }
  }
}

TEST_CASE("Frobenius shapes") {
  auto d18 = frobenius_shape(all_subgroups(dihedral(9)));
  REQUIRE(d18.has_value());
  CHECK(d18->kernel.order() == 9);
  CHECK(d18->complement_order == 2);
  CHECK_FALSE(d18->is_minimal);

  auto a4 = frobenius_shape(all_subgroups(alternating(4)));
  REQUIRE(a4.has_value());
  CHECK(a4->kernel.order() == 4);
  CHECK(a4->complement_order == 3);
  CHECK(a4->is_minimal);

  CHECK_FALSE(frobenius_shape(all_subgroups(dicyclic(2))).has_value());
  CHECK_FALSE(frobenius_shape(all_subgroups(symmetric(4))).has_value());
  CHECK_FALSE(frobenius_shape(all_subgroups(cyclic(6))).has_value());

  auto f = frobenius_shape(all_subgroups(f20()));
  REQUIRE(f.has_value());
  CHECK(f->kernel.order() == 5);
  CHECK(f->complement_order == 4);
  CHECK_FALSE(f->is_minimal);

  // S3 = C3 : C2 is a minimal Frobenius group.
  auto s3 = frobenius_shape(all_subgroups(symmetric(3)));
  REQUIRE(s3.has_value());
  CHECK(s3->is_minimal);

  for (auto const& g : {dihedral(9), alternating(4), f20(), symmetric(3), dihedral(5)}) {
    auto shape = frobenius_shape(all_subgroups(g));
    REQUIRE(shape.has_value());
    if (is_prime(shape->complement_order))
      CHECK(shape->kernel.order() % shape->complement_order == 1);
  }
}

TEST_CASE("lattice cap") {
  CHECK_THROWS_AS(all_subgroups(symmetric(4), 10), LatticeCapExceeded);
  CHECK_NOTHROW(all_subgroups(symmetric(4), 24));
}
