#include <doctest.h>

#include <set>

#include "prym/prymcalc.hpp"

using namespace prym;

TEST_CASE("genus and dimension") {
  CHECK(genus_curve(11, 3) == 10);
  CHECK(genus_curve(23, 3) == 22);
  CHECK(dim_prym(3, 5) == 5);
  CHECK(dim_prym(5, 9) == 18);
  CHECK_THROWS(genus_curve(9, 3));
  CHECK_THROWS(genus_curve(3, 5));
}

TEST_CASE("basis forms") {
  for (int p : {3, 5, 7}) {
    for (int r = 2; r <= 5; ++r) {
      const int n = 2 * p * r - 1;
      const auto basis = omega_basis(n, p);
      CHECK(static_cast<int>(basis.size()) == genus_curve(n, p));
      std::set<std::pair<int, int>> seen;
      int anti = 0;
      for (const auto& form : basis) {
        CHECK(seen.insert({form.i, form.j}).second);
        CHECK(form.delta_p_exponent == -form.j);
        CHECK(form.delta_2_sign == ((form.i + 1 - form.j) % 2 == 0 ? 1 : -1));
        if (form.delta_2_sign == -1) ++anti;
      }
      CHECK(anti == dim_prym(p, p * r - 1));
    }
  }
}

TEST_CASE("per-j bound floor(nj/p) - 1 = 2rj - 2") {
  for (int p : {3, 5, 7, 11, 13}) {
    for (int r = 2; r <= 6; ++r) {
      const int n = 2 * p * r - 1;
      for (int j = 1; j < p; ++j) CHECK(n * j / p - 1 == 2 * r * j - 2);
    }
  }
}

TEST_CASE("multiplicity table matches the enumeration") {
  for (int p : {3, 5, 7, 11, 13}) {
    for (int r = 2; r <= 6; ++r) {
      const auto table = multiplicity_table(p, r);
      const auto parts = anti_invariant_partition(p, r);
      int total = 0;
      std::set<int> values;
      for (int j = 1; j < p; ++j) {
        CHECK(table.at(j) == static_cast<int>(parts.at(j).size()));
        CHECK(table.at(j) == (j % 2 == 0 ? r * j : r * j - 1));
        total += table.at(j);
        values.insert(table.at(j));
      }
      CHECK(total == dim_prym(p, p * r - 1));
      CHECK((multiplicity_gcd(table) == 1) == (r % 2 == 0));
      CHECK(multiplicities_coprime(p, r) == (r % 2 == 0));
      if (r % 2 == 0) {
        CHECK(values.size() == table.size());
        CHECK(multiplicities_distinct(p, r));
      }
    }
  }
}

TEST_CASE("small tables") {
  CHECK(multiplicity_table(3, 2) == MultiplicityTable{{1, 1}, {2, 4}});
  CHECK(multiplicity_gcd(multiplicity_table(3, 3)) == 2);
  CHECK(table_to_json(multiplicity_table(3, 2)) == nlohmann::json{{"1", 1}, {"2", 4}});
  CHECK_THROWS(multiplicity_table(2, 2));
  CHECK_THROWS(multiplicity_table(9, 2));
  CHECK_THROWS(multiplicity_table(3, 1));
}

TEST_CASE("non-jacobian inequality on the grid") {
  for (int p : {3, 5, 7, 11, 13}) {
    for (int r = 2; r <= 6; r += 2) {
      const auto bound = non_jacobian_bound(p, r);
      CHECK(bound.lhs == r - 1);
      CHECK(bound.rhs_simplified == mpq_class(r) - mpq_class(p - 2, p));
      CHECK(bound.rhs == mpq_class(p * r - 1, p) - mpq_class(p - 2, p));
      CHECK(bound.holds);
      CHECK(non_jacobian_inequality(p, r));
    }
  }
}
