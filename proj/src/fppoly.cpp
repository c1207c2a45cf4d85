#include "prym/fppoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace prym::fp {

FpPoly x_power(int degree) {
  FpPoly r;
  r.c.assign(static_cast<std::size_t>(degree) + 1, 0);
  r.c.back() = 1;
  return r;
}

FpPoly make_monic(FpPoly a, const simd::Modulus& q) {
  if (a.is_zero() || a.leading() == 1) return a;
  simd::scale(a.c, q.inv(a.leading()), q);
  return a;
}

FpPoly sub(const FpPoly& a, const FpPoly& b, const simd::Modulus& q) {
  FpPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), 0);
  std::copy(a.c.begin(), a.c.end(), r.c.begin());
  simd::axpy(std::span(r.c.data(), b.c.size()), b.c, q.value() - 1, q);
  r.normalize();
  return r;
}

FpPoly mul(const FpPoly& a, const FpPoly& b, const simd::Modulus& q) {
  if (a.is_zero() || b.is_zero()) return {};
  FpPoly r;
  r.c.assign(a.c.size() + b.c.size() - 1, 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] != 0) simd::axpy(std::span(r.c.data() + i, b.c.size()), b.c, a.c[i], q);
  }
  r.normalize();
  return r;
}

namespace {

// Reduces a modulo b in place and returns the quotient coefficients.
std::vector<std::uint32_t> divide(FpPoly& a, const FpPoly& b, const simd::Modulus& q) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  const int db = b.degree();
  if (a.degree() < db) return {};
  std::vector<std::uint32_t> quot(static_cast<std::size_t>(a.degree() - db) + 1, 0);
  const std::uint32_t lead_inv = q.inv(b.leading());
  for (int i = a.degree(); i >= db; --i) {
    const std::uint32_t coef = a.c[static_cast<std::size_t>(i)];
    if (coef == 0) continue;
    const std::uint32_t t = q.mul(coef, lead_inv);
    quot[static_cast<std::size_t>(i - db)] = t;
    simd::axpy(std::span(a.c.data() + (i - db), b.c.size()), b.c, q.neg(t), q);
  }
  a.c.resize(static_cast<std::size_t>(db));
  a.normalize();
  return quot;
}

}  // namespace

FpPoly rem(FpPoly a, const FpPoly& b, const simd::Modulus& q) {
  divide(a, b, q);
  return a;
}

FpPoly quotient(FpPoly a, const FpPoly& b, const simd::Modulus& q) {
  FpPoly out{divide(a, b, q)};
  out.normalize();
  return out;
}

FpPoly mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& f, const simd::Modulus& q) {
  return rem(mul(a, b, q), f, q);
}

FpPoly powmod(const FpPoly& base, std::uint64_t e, const FpPoly& f, const simd::Modulus& q) {
  FpPoly result = rem(FpPoly{{1}}, f, q);
  FpPoly b = rem(base, f, q);
  while (e > 0) {
    if (e & 1) result = mulmod(result, b, f, q);
    e >>= 1;
    if (e > 0) b = mulmod(b, b, f, q);
  }
  return result;
}

FpPoly derivative(const FpPoly& a, const simd::Modulus& q) {
  FpPoly d;
  if (a.degree() < 1) return d;
  d.c.resize(a.c.size() - 1);
  for (std::size_t i = 1; i < a.c.size(); ++i) d.c[i - 1] = q.mul(a.c[i], static_cast<std::uint32_t>(i % q.value()));
  d.normalize();
  return d;
}

FpPoly gcd(FpPoly a, FpPoly b, const simd::Modulus& q) {
  while (!b.is_zero()) {
    a = rem(std::move(a), b, q);
    std::swap(a, b);
  }
  return make_monic(std::move(a), q);
}

CycleType distinct_degree_factorization(const FpPoly& f, const simd::Modulus& q) {
  if (f.degree() < 1) throw std::invalid_argument("distinct_degree_factorization: constant polynomial");
  const int d = f.degree();
  const std::size_t dd = static_cast<std::size_t>(d);
  const FpPoly x = x_power(1);

  // Frobenius matrix: row k holds x^(q k) mod f, so g^q mod f is the
  // combination sum_k g_k row_k.
  const FpPoly xq = powmod(x, q.value(), f, q);
  std::vector<std::uint32_t> frob(dd * dd, 0);
  FpPoly row{{1}};
  for (std::size_t k = 0; k < dd; ++k) {
    std::copy(row.c.begin(), row.c.end(), frob.begin() + static_cast<std::ptrdiff_t>(k * dd));
    row = mulmod(row, xq, f, q);
  }
  auto frobenius = [&](const FpPoly& g) {
    FpPoly out;
    out.c.assign(dd, 0);
    for (std::size_t k = 0; k < g.c.size(); ++k) {
      if (g.c[k] != 0) simd::axpy(out.c, std::span(frob.data() + k * dd, dd), g.c[k], q);
    }
    out.normalize();
    return out;
  };

  std::vector<int> degrees;
  FpPoly rest = make_monic(f, q);
  FpPoly power = xq;  // x^(q^i) mod f
  for (int i = 1; 2 * i <= rest.degree(); ++i) {
    FpPoly g = gcd(rest, sub(power, x, q), q);
    if (g.degree() > 0) {
      degrees.insert(degrees.end(), static_cast<std::size_t>(g.degree() / i), i);
      rest = quotient(rest, g, q);
    }
    power = frobenius(power);
  }
  if (rest.degree() > 0) degrees.push_back(rest.degree());
  return CycleType(std::move(degrees));
}

}  // namespace prym::fp
