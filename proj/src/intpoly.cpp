#include "prym/intpoly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "prym/fppoly.hpp"
#include "prym/primes.hpp"

namespace prym {

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPoly IntPoly::monomial(const mpz_class& c, int degree) {
  if (degree < 0) throw std::invalid_argument("negative degree");
  std::vector<mpz_class> coeffs(static_cast<std::size_t>(degree) + 1);
  coeffs.back() = c;
  return IntPoly(std::move(coeffs));
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpz_class IntPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

mpz_class IntPoly::leading() const { return is_zero() ? mpz_class(0) : coeffs_.back(); }

mpz_class IntPoly::content() const {
  mpz_class g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::derivative() const {
  std::vector<mpz_class> d;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * static_cast<unsigned long>(i));
  return IntPoly(std::move(d));
}

mpz_class IntPoly::eval(const mpz_class& x) const {
  mpz_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return {};
  mpz_class g = content();
  if (leading() < 0) g = -g;
  std::vector<mpz_class> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) mpz_divexact(out[i].get_mpz_t(), coeffs_[i].get_mpz_t(), g.get_mpz_t());
  return IntPoly(std::move(out));
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<mpz_class> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < a.coeffs_.size()) out[i] += a.coeffs_[i];
    if (i < b.coeffs_.size()) out[i] += b.coeffs_[i];
  }
  return IntPoly(std::move(out));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return IntPoly(std::move(out));
}

IntPoly operator*(const mpz_class& c, const IntPoly& a) { return IntPoly::constant(c) * a; }

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const mpz_class& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (i == 0 || mag != 1) out += mag.get_str();
    if (i >= 1) {
      if (mag != 1) out += "*";
      out += "x";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

IntPoly IntPoly::parse(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  if (s.empty()) throw std::invalid_argument("empty polynomial");
  std::vector<mpz_class> coeffs;
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument("cannot parse polynomial '" + std::string(text) + "': " + what);
  };
  auto digits = [&]() {
    const std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    return s.substr(start, pos - start);
  };
  bool first = true;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      fail("expected '+' or '-' at offset " + std::to_string(pos));
    }
    first = false;
    std::string num = digits();
    mpz_class coef = num.empty() ? mpz_class(1) : mpz_class(num);
    int exponent = 0;
    if (pos < s.size() && s[pos] == '*') {
      if (num.empty()) fail("'*' without coefficient");
      ++pos;
      if (pos >= s.size() || s[pos] != 'x') fail("expected 'x' after '*'");
    }
    if (pos < s.size() && s[pos] == 'x') {
      ++pos;
      exponent = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        std::string e = digits();
        if (e.empty()) fail("missing exponent");
        exponent = std::stoi(e);
      }
    } else if (num.empty()) {
      fail("expected a term at offset " + std::to_string(pos));
    }
    if (coeffs.size() <= static_cast<std::size_t>(exponent)) coeffs.resize(static_cast<std::size_t>(exponent) + 1);
    coeffs[static_cast<std::size_t>(exponent)] += sign * coef;
  }
  return IntPoly(std::move(coeffs));
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::domain_error("pseudo_remainder by zero");
  const int db = b.degree();
  if (a.degree() < db) return a;
  std::vector<mpz_class> r = a.coeffs();
  const mpz_class& lb = b.coeffs().back();
  for (int i = a.degree(); i >= db; --i) {
    const mpz_class t = r[static_cast<std::size_t>(i)];
    for (auto& c : r) c *= lb;
    if (t != 0) {
      for (int j = 0; j <= db; ++j) {
        mpz_submul(r[static_cast<std::size_t>(i - db + j)].get_mpz_t(), t.get_mpz_t(),
                   b.coeffs()[static_cast<std::size_t>(j)].get_mpz_t());
      }
    }
  }
  r.resize(static_cast<std::size_t>(db));
  return IntPoly(std::move(r));
}

IntPoly exact_quotient(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::domain_error("exact_quotient by zero");
  if (a.is_zero()) return {};
  const int db = b.degree();
  if (a.degree() < db) throw std::domain_error("exact_quotient: divisor has larger degree");
  std::vector<mpz_class> r = a.coeffs();
  std::vector<mpz_class> q(static_cast<std::size_t>(a.degree() - db) + 1);
  const mpz_class& lb = b.coeffs().back();
  for (int i = a.degree(); i >= db; --i) {
    const mpz_class& top = r[static_cast<std::size_t>(i)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) throw std::domain_error("exact_quotient: not divisible");
    mpz_class t;
    mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    q[static_cast<std::size_t>(i - db)] = t;
    for (int j = 0; j <= db; ++j) {
      mpz_submul(r[static_cast<std::size_t>(i - db + j)].get_mpz_t(), t.get_mpz_t(),
                 b.coeffs()[static_cast<std::size_t>(j)].get_mpz_t());
    }
  }
  if (std::any_of(r.begin(), r.begin() + db, [](const mpz_class& c) { return c != 0; })) {
    throw std::domain_error("exact_quotient: nonzero remainder");
  }
  return IntPoly(std::move(q));
}

IntPoly compose_x2(const IntPoly& u) {
  if (u.is_zero()) return {};
  std::vector<mpz_class> out(2 * u.coeffs().size() - 1);
  for (std::size_t i = 0; i < u.coeffs().size(); ++i) out[2 * i] = u.coeffs()[i];
  return IntPoly(std::move(out));
}

namespace {

mpz_class power(const mpz_class& base, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

IntPoly divide_by_scalar(const IntPoly& a, const mpz_class& d) {
  std::vector<mpz_class> out(a.coeffs().size());
  for (std::size_t i = 0; i < out.size(); ++i) mpz_divexact(out[i].get_mpz_t(), a.coeffs()[i].get_mpz_t(), d.get_mpz_t());
  return IntPoly(std::move(out));
}

mpz_class divexact(const mpz_class& a, const mpz_class& b) {
  mpz_class r;
  mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace

mpz_class resultant(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) throw std::invalid_argument("resultant of zero polynomial");
  if (a.degree() == 0) return power(a.leading(), static_cast<unsigned long>(b.degree()));
  if (b.degree() == 0) return power(b.leading(), static_cast<unsigned long>(a.degree()));

  const mpz_class ca = a.content();
  const mpz_class cb = b.content();
  IntPoly A = divide_by_scalar(a, ca);
  IntPoly B = divide_by_scalar(b, cb);
  const mpz_class t = power(ca, static_cast<unsigned long>(b.degree())) * power(cb, static_cast<unsigned long>(a.degree()));
  int sign = 1;
  if (A.degree() < B.degree()) {
    std::swap(A, B);
    if ((A.degree() & 1) && (B.degree() & 1)) sign = -1;
  }
  mpz_class g = 1;
  mpz_class h = 1;
  while (true) {
    const int delta = A.degree() - B.degree();
    if ((A.degree() & 1) && (B.degree() & 1)) sign = -sign;
    IntPoly R = pseudo_remainder(A, B);
    A = std::move(B);
    if (R.is_zero()) return 0;
    B = divide_by_scalar(R, g * power(h, static_cast<unsigned long>(delta)));
    g = A.leading();
    if (delta > 0) h = divexact(power(g, static_cast<unsigned long>(delta)), power(h, static_cast<unsigned long>(delta - 1)));
    if (B.degree() == 0) {
      const int da = A.degree();
      h = divexact(power(B.leading(), static_cast<unsigned long>(da)), power(h, static_cast<unsigned long>(da - 1)));
      return sign * t * h;
    }
  }
}

mpz_class discriminant(const IntPoly& f) {
  const int d = f.degree();
  if (d < 1) throw std::invalid_argument("discriminant of a constant polynomial");
  mpz_class r = divexact(resultant(f, f.derivative()), f.leading());
  return ((d * (d - 1) / 2) % 2 == 0) ? r : mpz_class(-r);
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  IntPoly A = a.is_zero() ? a : a.primitive_part();
  IntPoly B = b.is_zero() ? b : b.primitive_part();
  if (A.degree() < B.degree()) std::swap(A, B);
  while (!B.is_zero()) {
    IntPoly R = pseudo_remainder(A, B);
    A = std::move(B);
    B = R.is_zero() ? R : R.primitive_part();
  }
  return A.is_zero() ? A : A.primitive_part();
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_perfect_square(const mpz_class& n) { return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0; }

IntPoly selmer_trinomial(int m, long c) {
  if (m < 2) throw std::invalid_argument("trinomial degree must be >= 2");
  std::vector<mpz_class> coeffs(static_cast<std::size_t>(m) + 1);
  coeffs[0] = -c;
  coeffs[1] = -1;
  coeffs.back() = 1;
  return IntPoly(std::move(coeffs));
}

Family build_family(int p, int r, long c) {
  if (p == 2 || !is_prime(p)) throw std::invalid_argument("p must be an odd prime");
  if (r < 2) throw std::invalid_argument("r must be >= 2");
  if (c % 2 == 0) throw std::invalid_argument("c must be odd and nonzero");
  Family fam;
  fam.params = FamilyParams{p, r, p * r - 1, 2 * (p * r - 1) + 1, c};
  fam.u = selmer_trinomial(fam.params.m, c);
  fam.h = compose_x2(fam.u);
  fam.f = IntPoly{0, 1} * fam.h;
  return fam;
}

namespace {

void check_trinomial_args(int m, long c) {
  if (m < 3 || m % 2 == 0) throw std::invalid_argument("m must be odd and >= 3");
  if (c % 2 == 0) throw std::invalid_argument("c must be odd");
}

}  // namespace

mpz_class trinomial_disc(int m, long c) {
  check_trinomial_args(m, c);
  const auto um = static_cast<unsigned long>(m);
  mpz_class value = power(mpz_class(m), um) * power(mpz_class(c), um - 1) - power(mpz_class(m - 1), um - 1);
  return ((um * (um - 1) / 2) % 2 == 0) ? value : mpz_class(-value);
}

mpz_class disc_of_even_composite(int m, long c) {
  const mpz_class delta = trinomial_disc(m, c);
  return power(mpz_class(4), static_cast<unsigned long>(m)) * c * delta * delta;
}

std::variant<CycleType, Ramified> reduce_and_factor_degrees(const IntPoly& f, std::uint32_t q) {
  if (f.degree() < 1) throw std::invalid_argument("reduce_and_factor_degrees: constant polynomial");
  if (!is_prime(q)) throw std::invalid_argument("reduce_and_factor_degrees: q must be prime");
  const simd::Modulus mod(q);
  FpPoly fq;
  fq.c.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) fq.c.push_back(static_cast<std::uint32_t>(mpz_fdiv_ui(c.get_mpz_t(), q)));
  fq.normalize();
  if (fq.degree() != f.degree()) throw std::invalid_argument("reduce_and_factor_degrees: q divides the leading coefficient");
  fq = fp::make_monic(std::move(fq), mod);
  if (fp::gcd(fq, fp::derivative(fq, mod), mod).degree() > 0) return Ramified{};
  return fp::distinct_degree_factorization(fq, mod);
}

namespace {

std::vector<mpz_class> positive_divisors(const mpz_class& n) {
  // Trial division; callers only pass values below 10^12.
  std::vector<mpz_class> small, large;
  mpz_class a = abs(n);
  for (mpz_class d = 1; d * d <= a; ++d) {
    if (mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t())) {
      small.push_back(d);
      mpz_class other = a / d;
      if (other != d) large.push_back(other);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::optional<IntPoly> rational_linear_factor(const IntPoly& f) {
  if (f.coeff(0) == 0) return IntPoly{0, 1};
  const mpz_class limit("1000000000000");
  if (abs(f.coeff(0)) > limit || abs(f.leading()) > limit) return std::nullopt;
  const auto nums = positive_divisors(f.coeff(0));
  const auto dens = positive_divisors(f.leading());
  for (const auto& e : dens) {
    for (const auto& d : nums) {
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), e.get_mpz_t());
      if (g != 1) continue;
      for (const mpz_class& num : {d, mpz_class(-d)}) {
        // sum a_i num^i e^(deg - i) vanishes iff num/e is a root
        mpz_class check = 0;
        mpz_class npow = 1;
        mpz_class ep = power(e, static_cast<unsigned long>(f.degree()));
        for (int i = 0; i <= f.degree(); ++i) {
          check += f.coeff(i) * npow * ep;
          npow *= num;
          if (i < f.degree()) ep = divexact(ep, e);
        }
        if (check == 0) return IntPoly(std::vector<mpz_class>{-num, e});
      }
    }
  }
  return std::nullopt;
}

}  // namespace

IrreducibilityVerdict irreducible_over_Q(const IntPoly& input, int prime_budget) {
  if (input.degree() < 1) return Inconclusive{"constant polynomial"};
  const IntPoly f = input.primitive_part();
  const mpz_class disc = discriminant(f);
  if (disc == 0) return Reducible{gcd(f, f.derivative())};
  if (f.degree() >= 2) {
    if (auto factor = rational_linear_factor(f)) return Reducible{*factor};
  }
  const mpz_class bad = disc * f.leading();
  for (std::uint32_t q : PrimeRange(2, static_cast<std::uint32_t>(std::max(prime_budget, 1)))) {
    if (mpz_divisible_ui_p(bad.get_mpz_t(), q)) continue;
    const auto reduction = reduce_and_factor_degrees(f, q);
    const auto* type = std::get_if<CycleType>(&reduction);
    if (type != nullptr && type->parts().size() == 1) return Irreducible{q};
  }
  return Inconclusive{"no prime <= " + std::to_string(prime_budget) + " gives an irreducible reduction"};
}

CompositeRuleResult irreducible_composite_rule(const IntPoly& u, int prime_budget) {
  CompositeRuleResult out;
  auto fail = [&](std::string premise) {
    out.failed_premise = std::move(premise);
    return out;
  };
  const int m = u.degree();
  out.premises.emplace_back("degree", std::to_string(m));
  if (m < 3 || m % 2 == 0) return fail("degree odd and >= 3");
  if (!u.is_monic()) return fail("monic");
  out.premises.emplace_back("monic", "true");
  out.premises.emplace_back("coefficient of x^2", u.coeff(2).get_str());
  if (u.coeff(2) != 0) return fail("coefficient of x^2 is 0");
  out.premises.emplace_back("coefficient of x", u.coeff(1).get_str());
  if (u.coeff(1) != -1) return fail("coefficient of x is -1");
  const mpz_class c = -u.coeff(0);
  out.premises.emplace_back("c = -u(0)", c.get_str());
  if (c == 0) return fail("constant term nonzero");
  const auto verdict = irreducible_over_Q(u, prime_budget);
  if (const auto* irr = std::get_if<Irreducible>(&verdict)) {
    out.premises.emplace_back("u irreducible over Q, witness prime", std::to_string(irr->witness_prime));
  } else {
    return fail("u irreducible over Q");
  }
  out.certified = true;
  return out;
}

ConditionPR condition_p_r(int p, int r) {
  if (p == 2 || !is_prime(p)) throw std::invalid_argument("p must be an odd prime");
  if (r < 2) throw std::invalid_argument("r must be >= 2");
  const simd::Modulus mod(static_cast<std::uint32_t>(p));
  ConditionPR out;
  out.residue = mod.add(1, mod.pow(2, static_cast<std::uint64_t>(r - 2)));
  out.pass = out.residue != 0;
  out.shortcut_congruence = (r - 2) % (p - 1) == 0;
  out.shortcut_small_r = (r - 2) < 62 && (std::int64_t{1} << (r - 2)) < p - 1;
  if ((out.shortcut_congruence || out.shortcut_small_r) && !out.pass) {
    throw std::logic_error("condition_p_r: shortcut holds but 1 + 2^(r-2) is divisible by p");
  }
  return out;
}

}  // namespace prym
