#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "prym/cycletype.hpp"

namespace prym {

/// Dense univariate polynomial over Z; coeffs()[i] multiplies x^i. The
/// coefficient vector never carries trailing zeros, so the zero polynomial
/// has no coefficients and degree -1.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly monomial(const mpz_class& c, int degree);
  static IntPoly constant(const mpz_class& c) { return monomial(c, 0); }

  /// Parses expressions such as "x^10 - x^2 - 1" or "3*x^2 + 2x - 7".
  static IntPoly parse(std::string_view text);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }
  mpz_class coeff(int i) const;
  mpz_class leading() const;
  mpz_class content() const;
  bool is_monic() const { return !is_zero() && leading() == 1; }

  IntPoly derivative() const;
  mpz_class eval(const mpz_class& x) const;
  IntPoly primitive_part() const;
  IntPoly operator-() const;

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const mpz_class& c, const IntPoly& a);
  friend bool operator==(const IntPoly& a, const IntPoly& b) = default;

  std::string to_string() const;

 private:
  void normalize();
  std::vector<mpz_class> coeffs_;
};

/// lc(b)^(deg a - deg b + 1) * a mod b; b must be nonzero.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);

/// Exact division a / b, throwing if b does not divide a in Z[x].
IntPoly exact_quotient(const IntPoly& a, const IntPoly& b);

/// h(x) = u(x^2).
IntPoly compose_x2(const IntPoly& u);

/// Resultant by the subresultant remainder sequence. Throws on zero input.
mpz_class resultant(const IntPoly& a, const IntPoly& b);

/// (-1)^(d(d-1)/2) res(f, f') / lc(f). Throws for constant f.
mpz_class discriminant(const IntPoly& f);

/// gcd over Q, returned primitive with positive leading coefficient.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

struct FamilyParams {
  int p = 0;
  int r = 0;
  int m = 0;
  int n = 0;
  long c = 1;
};

struct Family {
  IntPoly u;
  IntPoly h;
  IntPoly f;
  FamilyParams params;
};

/// u = x^m - x - c, h = u(x^2), f = x h with m = p r - 1.
Family build_family(int p, int r, long c = 1);

/// x^m - x - c.
IntPoly selmer_trinomial(int m, long c);

/// Discriminant of x^m - x - c from the closed form
/// (-1)^(m(m-1)/2) (m^m c^(m-1) - (m-1)^(m-1)), m odd >= 3, c odd.
mpz_class trinomial_disc(int m, long c);

/// Discriminant of x^(2m) - x^2 - c, equal to 4^m c trinomial_disc(m, c)^2.
mpz_class disc_of_even_composite(int m, long c);

/// Marker for a reduction with a repeated factor.
struct Ramified {
  friend bool operator==(const Ramified&, const Ramified&) = default;
};

/// Irreducible factor degrees of f mod q (Frobenius cycle type when q is
/// unramified). q must be prime, q < 2^26, and must not divide lc(f).
std::variant<CycleType, Ramified> reduce_and_factor_degrees(const IntPoly& f, std::uint32_t q);

struct Irreducible {
  std::uint32_t witness_prime;
};
struct Reducible {
  IntPoly factor;
};
struct Inconclusive {
  std::string reason;
};
using IrreducibilityVerdict = std::variant<Irreducible, Reducible, Inconclusive>;

inline constexpr int kDefaultPrimeBudget = 500;

/// Three-valued irreducibility test: a prime witness with irreducible
/// reduction, a rational root, or no conclusion.
IrreducibilityVerdict irreducible_over_Q(const IntPoly& f, int prime_budget = kDefaultPrimeBudget);

struct CompositeRuleResult {
  bool certified = false;
  std::string failed_premise;                           // empty when certified
  std::vector<std::pair<std::string, std::string>> premises;  // fact -> value
};

/// Checks the hypotheses under which u(x^2) inherits irreducibility from u:
/// odd degree >= 3, monic, irreducible, x^2 coefficient 0, x coefficient -1,
/// nonzero constant term.
CompositeRuleResult irreducible_composite_rule(const IntPoly& u, int prime_budget = kDefaultPrimeBudget);

struct ConditionPR {
  bool pass = false;
  std::int64_t residue = 0;          // (1 + 2^(r-2)) mod p
  bool shortcut_congruence = false;  // r = 2 mod (p-1)
  bool shortcut_small_r = false;     // 2^(r-2) < p-1
};

/// Whether p does not divide 1 + 2^(r-2), plus the two sufficient shortcuts.
ConditionPR condition_p_r(int p, int r);

bool is_prime(std::int64_t n);

/// Integer square root test; negative numbers are never squares.
bool is_perfect_square(const mpz_class& n);

}  // namespace prym
