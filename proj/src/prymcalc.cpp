#include "prym/prymcalc.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "prym/intpoly.hpp"

namespace prym {

namespace {

void check_p(int p) {
  if (p == 2 || !is_prime(p)) throw std::invalid_argument("p must be an odd prime");
}

void check_pr(int p, int r) {
  check_p(p);
  if (r < 2) throw std::invalid_argument("r must be >= 2");
}

}  // namespace

int genus_curve(int n, int p) {
  if (p < 2) throw std::invalid_argument("p must be >= 2");
  if (n < 4) throw std::invalid_argument("genus_curve requires n >= 4");
  if (std::gcd(n, p) != 1) throw std::invalid_argument("genus_curve requires gcd(n, p) = 1");
  return (n - 1) * (p - 1) / 2;
}

int dim_prym(int p, int m) {
  if (p % 2 == 0) throw std::invalid_argument("dim_prym: p must be odd");
  return m * (p - 1) / 2;
}

std::vector<BasisForm> omega_basis(int n, int p) {
  genus_curve(n, p);  // argument checks
  std::vector<BasisForm> out;
  for (int j = 1; j <= p - 1; ++j) {
    for (int i = 0; i <= n * j / p - 1; ++i) {
      const int sign = (i + 1 - j) % 2 == 0 ? 1 : -1;
      out.push_back(BasisForm{i, j, -j, sign});
    }
  }
  return out;
}

std::map<int, std::set<int>> anti_invariant_partition(int p, int r) {
  check_pr(p, r);
  std::map<int, std::set<int>> out;
  for (int j = 1; j <= p - 1; ++j) out[j];
  for (const auto& form : omega_basis(2 * p * r - 1, p)) {
    if (form.delta_2_sign == -1) out[form.j].insert(form.i);
  }
  return out;
}

MultiplicityTable multiplicity_table(int p, int r) {
  check_pr(p, r);
  MultiplicityTable table;
  for (int j = 1; j <= p - 1; ++j) table[j] = j % 2 == 0 ? r * j : r * j - 1;
  return table;
}

int multiplicity_gcd(const MultiplicityTable& table) {
  int g = 0;
  for (const auto& [j, mult] : table) g = std::gcd(g, mult);
  return g;
}

bool multiplicities_coprime(int p, int r) { return multiplicity_gcd(multiplicity_table(p, r)) == 1; }

bool multiplicities_distinct(int p, int r) {
  std::set<int> seen;
  for (const auto& [j, mult] : multiplicity_table(p, r)) {
    if (!seen.insert(mult).second) return false;
  }
  return true;
}

NonJacobianBound non_jacobian_bound(int p, int r) {
  check_pr(p, r);
  NonJacobianBound out;
  const int m = p * r - 1;
  out.lhs = multiplicity_table(p, r).at(1);
  const mpq_class dim(dim_prym(p, m));
  out.rhs = (2 * dim / (p - 1)) / p - mpq_class(p - 2, p);
  out.rhs.canonicalize();
  out.rhs_simplified = mpq_class(r) - mpq_class(p - 2, p);
  out.rhs_simplified.canonicalize();
  out.holds = out.lhs < out.rhs && out.lhs < out.rhs_simplified;
  return out;
}

bool non_jacobian_inequality(int p, int r) { return non_jacobian_bound(p, r).holds; }

nlohmann::json table_to_json(const MultiplicityTable& table) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [j, mult] : table) out[std::to_string(j)] = mult;
  return out;
}

}  // namespace prym
