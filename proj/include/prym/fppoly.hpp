#pragma once

#include <cstdint>
#include <vector>

#include "prym/cycletype.hpp"
#include "prym/simd/kernels.hpp"

namespace prym {

/// Polynomial over F_q with residues in [0, q); index i holds the x^i
/// coefficient and there are no trailing zeros.
struct FpPoly {
  std::vector<std::uint32_t> c;

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  std::uint32_t leading() const { return c.back(); }
  void normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  friend bool operator==(const FpPoly&, const FpPoly&) = default;
};

namespace fp {

FpPoly x_power(int degree);
FpPoly make_monic(FpPoly a, const simd::Modulus& q);
FpPoly sub(const FpPoly& a, const FpPoly& b, const simd::Modulus& q);
FpPoly mul(const FpPoly& a, const FpPoly& b, const simd::Modulus& q);
FpPoly rem(FpPoly a, const FpPoly& b, const simd::Modulus& q);
FpPoly quotient(FpPoly a, const FpPoly& b, const simd::Modulus& q);
FpPoly mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& f, const simd::Modulus& q);
FpPoly powmod(const FpPoly& base, std::uint64_t e, const FpPoly& f, const simd::Modulus& q);
FpPoly derivative(const FpPoly& a, const simd::Modulus& q);
/// Monic gcd; gcd(0, 0) = 0.
FpPoly gcd(FpPoly a, FpPoly b, const simd::Modulus& q);

/// Degrees of the irreducible factors of a monic squarefree f of degree
/// >= 1 (distinct-degree factorization).
CycleType distinct_degree_factorization(const FpPoly& f, const simd::Modulus& q);

}  // namespace fp
}  // namespace prym
