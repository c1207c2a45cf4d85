#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "prym/signedperm.hpp"

using namespace prym;

namespace {

SignedPerm random_signed(std::mt19937& rng, int m) {
  std::vector<int> perm(static_cast<std::size_t>(m));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<int> signs(static_cast<std::size_t>(m));
  for (auto& s : signs) s = (rng() & 1u) ? 1 : -1;
  return SignedPerm(perm, signs);
}

// Cycle type of a label permutation computed by following orbits.
CycleType brute_cycle_type(const SignedPerm& g, int labels) {
  std::vector<bool> seen(static_cast<std::size_t>(labels), false);
  std::vector<int> parts;
  for (int x = 0; x < labels; ++x) {
    if (seen[static_cast<std::size_t>(x)]) continue;
    int len = 0;
    for (int y = x; !seen[static_cast<std::size_t>(y)]; y = g.act(y)) {
      seen[static_cast<std::size_t>(y)] = true;
      ++len;
    }
    parts.push_back(len);
  }
  return CycleType(parts);
}

std::uint64_t factorial(int n) { return n <= 1 ? 1 : static_cast<std::uint64_t>(n) * factorial(n - 1); }

GroupDescriptor hyperoctahedral(int m) {
  std::vector<std::vector<int>> gens;
  for (const auto& g : GroupDescriptor::symmetric(m).generators()) gens.push_back(g.perm());
  return GroupDescriptor::two_m(m, gens);
}

}  // namespace

TEST_CASE("construction validates input") {
  CHECK_THROWS(SignedPerm({0, 0}, {1, 1}));
  CHECK_THROWS(SignedPerm({0, 1}, {1, 2}));
  CHECK_THROWS(SignedPerm({0, 1}, {1}));
  CHECK(SignedPerm::identity(4).is_identity());
}

TEST_CASE("action on labels") {
  const SignedPerm g({1, 0, 2}, {-1, 1, 1});
  CHECK(g.act(0) == 3);  // +beta_1 -> -beta_2
  CHECK(g.act(1) == 2);  // -beta_1 -> +beta_2
  CHECK(g.act(2) == 0);
  CHECK(g.act(6) == 6);  // the root 0 is fixed
  CHECK(act_on(g, RootSet::U, 0) == 1);
  CHECK(root_set_size(RootSet::F, 3) == 7);
  CHECK(label_name(RootSet::H, 3, 3) == "-beta_2");
}

TEST_CASE("group laws on random signed permutations") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const int m = 2 + trial % 7;
    const SignedPerm a = random_signed(rng, m);
    const SignedPerm b = random_signed(rng, m);
    const SignedPerm c = random_signed(rng, m);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * a.inverse() == SignedPerm::identity(m));
    CHECK(a.inverse() * a == SignedPerm::identity(m));
    for (int x = 0; x < 2 * m + 1; ++x) CHECK((a * b).act(x) == a.act(b.act(x)));
    CHECK(in_wdm(a * b) == (in_wdm(a) == in_wdm(b)));
    CHECK(kappa_u(a * b) == [&] {
      std::vector<int> k(static_cast<std::size_t>(m));
      for (int i = 0; i < m; ++i) k[static_cast<std::size_t>(i)] = kappa_u(a)[static_cast<std::size_t>(kappa_u(b)[static_cast<std::size_t>(i)])];
      return k;
    }());
  }
}

TEST_CASE("induced cycle type agrees with orbit tracing and is a class function") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const int m = 1 + trial % 9;
    const SignedPerm g = random_signed(rng, m);
    const SignedPerm x = random_signed(rng, m);
    CHECK(induced_cycle_type(g) == brute_cycle_type(g, 2 * m));
    CHECK(induced_cycle_type(x * g * x.inverse()) == induced_cycle_type(g));
    CHECK(induced_cycle_type(g).total() == 2 * m);
  }
}

TEST_CASE("induced parity is even exactly on W(D_m)") {
  for (int m = 1; m <= 5; ++m) {
    std::uint64_t seen = 0;
    for_each_element(hyperoctahedral(m), [&](const SignedPerm& g) {
      ++seen;
      CHECK(induced_parity_even(g) == in_wdm(g));
    });
    CHECK(seen == (std::uint64_t{1} << m) * factorial(m));
  }
}

TEST_CASE("kappa_u maps W(D_m) onto S_m with kernel E_m^0") {
  for (int m = 2; m <= 5; ++m) {
    std::set<std::vector<int>> images;
    std::uint64_t kernel = 0;
    for_each_element(GroupDescriptor::weyl_d(m), [&](const SignedPerm& g) {
      images.insert(kappa_u(g));
      if (permutation_cycle_type(kappa_u(g)) == CycleType(std::vector<int>(static_cast<std::size_t>(m), 1))) ++kernel;
    });
    CHECK(images.size() == factorial(m));
    CHECK(kernel == (std::uint64_t{1} << (m - 1)));
  }
}

TEST_CASE("named group orders") {
  for (int m = 1; m <= 6; ++m) {
    CHECK(group_order(GroupDescriptor::weyl_d(m)) == (std::uint64_t{1} << (m - 1)) * factorial(m));
    CHECK(group_order(GroupDescriptor::symmetric(m)) == factorial(m));
    CHECK(group_order(GroupDescriptor::sign_changes(m)) == (std::uint64_t{1} << m));
    CHECK(group_order(GroupDescriptor::even_sign_changes(m)) == (std::uint64_t{1} << (m - 1)));
    CHECK(group_order(hyperoctahedral(m)) == (std::uint64_t{1} << m) * factorial(m));
    if (m >= 2) CHECK(group_order(GroupDescriptor::alternating(m)) == factorial(m) / 2);
    CHECK(GroupDescriptor::weyl_d(m).known_order() == group_order(GroupDescriptor::weyl_d(m)));
  }
  // BFS closure of the generators reproduces the structured enumeration.
  const auto gens = GroupDescriptor::weyl_d(4).generators();
  CHECK(group_order(GroupDescriptor::generated(4, gens)) == 192);
  CHECK_FALSE(GroupDescriptor::generated(4, gens).known_order().has_value());
}

TEST_CASE("census totals and sample classes") {
  for (int m = 1; m <= 6; ++m) {
    const Census cen = census(GroupDescriptor::weyl_d(m));
    std::uint64_t total = 0;
    for (const auto& [type, count] : cen) {
      total += count;
      CHECK(type.total() == 2 * m);
    }
    CHECK(total == (std::uint64_t{1} << (m - 1)) * factorial(m));
  }
  const Census d3 = census(GroupDescriptor::weyl_d(3));
  CHECK(d3.contains(CycleType{3, 3}));
  CHECK_FALSE(d3.contains(CycleType{6}));  // a 6-cycle needs an odd number of sign changes
  CHECK(d3.at(CycleType{1, 1, 1, 1, 1, 1}) == 1);
}

TEST_CASE("enumeration budget") {
  CHECK_THROWS_AS(census(GroupDescriptor::weyl_d(9)), BudgetExceeded);
  CHECK_THROWS_AS(group_order(GroupDescriptor::generated(6, GroupDescriptor::weyl_d(6).generators()), 100), BudgetExceeded);
  CHECK(group_order(GroupDescriptor::weyl_d(12)) == (std::uint64_t{1} << 11) * factorial(12));
}

TEST_CASE("descriptor JSON round trip") {
  for (const auto& g : {GroupDescriptor::weyl_d(5), GroupDescriptor::symmetric(4), GroupDescriptor::alternating(7),
                        GroupDescriptor::even_sign_changes(3)}) {
    const auto back = GroupDescriptor::from_json(g.to_json());
    CHECK(back.kind() == g.kind());
    CHECK(back.m() == g.m());
    CHECK(back.name() == g.name());
  }
  CHECK(GroupDescriptor::weyl_d(5).to_json() == nlohmann::json{{"kind", "WDm"}, {"m", 5}});
  CHECK(GroupDescriptor::weyl_d(5).name() == "W(D_5)");
}

TEST_CASE("orbits, stabilizers and transitivity") {
  for (int m = 2; m <= 6; ++m) {
    const auto wdm = GroupDescriptor::weyl_d(m).generators();
    CHECK(orbits(wdm, RootSet::H, m).size() == 1);
    CHECK(orbits(wdm, RootSet::F, m).size() == 2);
    CHECK(transitivity_degree(GroupDescriptor::symmetric(m).generators(), RootSet::U, m) == 2);
    CHECK(transitivity_degree(GroupDescriptor::sign_changes(m).generators(), RootSet::H, m) == 0);
    const auto stab = stabilizer_generators(wdm, RootSet::H, m, 0);
    for (const auto& s : stab) CHECK(s.act(0) == 0);
    const std::uint64_t order = group_order(GroupDescriptor::weyl_d(m));
    CHECK(group_order(GroupDescriptor::generated(m, stab)) * static_cast<std::uint64_t>(2 * m) == order);
  }
  CHECK(transitivity_degree(GroupDescriptor::alternating(3).generators(), RootSet::U, 3) == 1);
  CHECK(transitivity_degree(GroupDescriptor::alternating(5).generators(), RootSet::U, 5) == 2);
}

TEST_CASE("normal index condition") {
  CHECK(sm_normal_index_condition(5));
  CHECK(sm_normal_index_condition(11));
  CHECK_FALSE(sm_normal_index_condition(6));
  CHECK_THROWS(sm_normal_index_condition(4));
}

TEST_CASE("Jordan certificate for S_m") {
  const auto yes = sm_certificate({CycleType{4, 7}}, false, true, 11);
  CHECK(yes.is_sm);
  CHECK(yes.jordan_prime == 7);
  CHECK_FALSE(sm_certificate({CycleType{4, 7}}, true, true, 11).is_sm);
  CHECK_FALSE(sm_certificate({CycleType{4, 7}}, false, false, 11).is_sm);
  CHECK_FALSE(sm_certificate({CycleType{2, 9}}, false, true, 11).is_sm);
  CHECK(sm_certificate({CycleType{1, 1, 2, 5}}, false, true, 9).is_sm);
  // No prime lies in (m/2, m-2) for m = 5, 7.
  CHECK_FALSE(sm_certificate({CycleType{5}, CycleType{1, 1, 3}}, false, true, 5).is_sm);
  CHECK_FALSE(sm_certificate({CycleType{7}, CycleType{2, 5}}, false, true, 7).is_sm);
}
