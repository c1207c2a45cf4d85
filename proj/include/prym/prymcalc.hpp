#pragma once

// Closed-form invariants of C: y^p = f(x), deg f = n = 2m + 1, its jacobian
// and its Prym variety, and the eigen-calculus of the basis forms
// x^i dx / y^j of holomorphic differentials.

#include <gmpxx.h>

#include <map>
#include <set>
#include <vector>

#include <json.hpp>

namespace prym {

int genus_curve(int n, int p);
int dim_prym(int p, int m);

struct BasisForm {
  int i;
  int j;
  int delta_p_exponent;  // delta_p^* acts by zeta_p^(delta_p_exponent)
  int delta_2_sign;      // (-1)^(i + 1 - j)
};

std::vector<BasisForm> omega_basis(int n, int p);

/// j -> exponents i of the delta_2-anti-invariant forms x^i dx / y^j, read
/// off by enumerating omega_basis(2pr - 1, p).
std::map<int, std::set<int>> anti_invariant_partition(int p, int r);

using MultiplicityTable = std::map<int, int>;

/// mult(zeta_p^-j) = r j for even j and r j - 1 for odd j.
MultiplicityTable multiplicity_table(int p, int r);

int multiplicity_gcd(const MultiplicityTable& table);
bool multiplicities_coprime(int p, int r);
bool multiplicities_distinct(int p, int r);

struct NonJacobianBound {
  mpq_class lhs;           // mult(zeta_p^-1) = r - 1
  mpq_class rhs;           // (2 dim Prym / (p - 1)) / p - (p - 2) / p
  mpq_class rhs_simplified;  // r - (p - 2) / p
  bool holds = false;      // lhs < rhs and lhs < rhs_simplified
};

NonJacobianBound non_jacobian_bound(int p, int r);
bool non_jacobian_inequality(int p, int r);

/// Keys "1".."p-1".
nlohmann::json table_to_json(const MultiplicityTable& table);

}  // namespace prym
