// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "prym/fpmodule.hpp"
#include "prym/galoiscert.hpp"
#include "prym/intpoly.hpp"
#include "prym/prymcalc.hpp"
#include "prym/signedperm.hpp"

using namespace prym;

namespace {

using Clock = std::chrono::steady_clock;

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool condition, const std::string& what) {
    if (!condition && ok) detail << what;
    ok = ok && condition;
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

const int kOddPrimes[] = {3, 5, 7, 11, 13};

std::uint64_t factorial(int n) { return n <= 1 ? 1 : static_cast<std::uint64_t>(n) * factorial(n - 1); }

Check multiplicity_calculus() {
  Check c;
  const auto start = Clock::now();
  for (int p : kOddPrimes) {
    for (int r = 2; r <= 6; ++r) {
      const auto table = multiplicity_table(p, r);
      const auto parts = anti_invariant_partition(p, r);
      int sum = 0;
      std::set<int> distinct;
      for (const auto& [j, mult] : table) {
        c.expect(mult == static_cast<int>(parts.at(j).size()), "table != enumeration");
        sum += mult;
        distinct.insert(mult);
      }
      c.expect(sum == (p * r - 1) * (p - 1) / 2, "sum != m(p-1)/2");
      c.expect((multiplicity_gcd(table) == 1) == (r % 2 == 0), "gcd = 1 iff r even");
      if (r % 2 == 0) c.expect(distinct.size() == table.size(), "entries not distinct");
    }
  }
  const double t = seconds_since(start);
  c.expect(t < 1.0, "runtime >= 1 s");
  c.detail << (c.ok ? "" : "; ") << "p <= 13, 2 <= r <= 6, " << t << " s";
  return c;
}

Check discriminant_oracle() {
  Check c;
  c.expect(discriminant(IntPoly::parse("x^3 - x - 1")) == -23, "disc(x^3-x-1) != -23");
  c.expect(discriminant(IntPoly::parse("x^5 - x - 1")) == 2869, "disc(x^5-x-1) != 2869");
  int cells = 0;
  for (int m = 3; m <= 15; m += 2) {
    for (long cc = -9; cc <= 9; cc += 2) {
      c.expect(trinomial_disc(m, cc) == discriminant(selmer_trinomial(m, cc)), "closed form mismatch");
      ++cells;
    }
  }
  // The shortened form +-(c^(m-1) + (m-1)^(m-1)) drops the m^m factor.
  const long shortened = 1 + 4;
  c.expect(shortened != 23, "shortened form unexpectedly agrees");
  c.detail << (c.ok ? "" : "; ") << cells << " (m, c) cells exact; shortened form gives +-" << shortened
           << " for m=3, c=1 against -23 (inconsistent, not used)";
  return c;
}

Check composite_discriminant() {
  Check c;
  for (int m = 3; m <= 11; m += 2) {
    for (long cc = -5; cc <= 5; cc += 2) {
      const mpz_class d = discriminant(compose_x2(selmer_trinomial(m, cc)));
      c.expect(disc_of_even_composite(m, cc) == d, "4^m c disc(u)^2 mismatch");
      if (cc == 1) c.expect(is_perfect_square(d), "not a square for c = 1");
      if (cc < 0) c.expect(d < 0, "sign does not follow c");
    }
  }
  int cells = 0;
  for (int p : kOddPrimes) {
    for (int r = 2; r <= 8; r += 2) {
      const mpz_class d = discriminant(compose_x2(selmer_trinomial(p * r - 1, 1)));
      const bool divides = mpz_divisible_ui_p(d.get_mpz_t(), static_cast<unsigned long>(p)) != 0;
      c.expect(divides == !condition_p_r(p, r).pass, "p | disc(h) disagrees with condition (3)");
      ++cells;
    }
  }
  c.detail << (c.ok ? "" : "; ") << "sign adjudicated as 4^m c disc(u)^2; divisibility checked on " << cells
           << " (p, r) cells with r even";
  return c;
}

Check group_module_suite() {
  Check c;
  for (int m = 1; m <= 6; ++m) {
    std::uint64_t total = 0;
    for (const auto& [type, count] : census(GroupDescriptor::weyl_d(m))) total += count;
    c.expect(total == (std::uint64_t{1} << (m - 1)) * factorial(m), "census total");
  }
  for (int m = 1; m <= 5; ++m) {
    std::vector<std::vector<int>> sm;
    for (const auto& g : GroupDescriptor::symmetric(m).generators()) sm.push_back(g.perm());
    for_each_element(GroupDescriptor::two_m(m, sm), [&](const SignedPerm& g) {
      c.expect(induced_parity_even(g) == in_wdm(g), "parity");
    });
  }
  for (int m : {3, 5}) {
    const auto gens = GroupDescriptor::weyl_d(m).generators();
    for (std::uint32_t p : {3u, 5u, 7u}) {
      c.expect(commutant_dim(gens, FpSpace{SpaceKind::FullRh, m, p}) == 3, "commutant on F_p^{R_h}");
      c.expect(commutant_dim(gens, FpSpace{SpaceKind::VfMinus, m, p}) == 1, "commutant on V_f^-");
    }
    c.expect(orbit_count_formula(gens, m) == 3, "stabilizer orbit count");
  }
  c.detail << (c.ok ? "" : "; ") << "census m <= 6, parity m <= 5, commutants m in {3,5}, p in {3,5,7}";
  return c;
}

Check galois_certification() {
  Check c;
  auto start = Clock::now();
  const Certificate main = certify_prym(3, 4);
  const double t_main = seconds_since(start);
  const nlohmann::json main_json = main.to_json();
  c.expect(main.verdict == Verdict::Deterministic, "(3,4) not Deterministic");
  bool galois_claim = false;
  for (const auto& claim : main.claims) {
    galois_claim = galois_claim || claim.statement == "Gal(x^22 - x^2 - 1 / Q(zeta_3)) = W(D_11)";
  }
  c.expect(galois_claim, "missing Galois claim over Q(zeta_3)");
  for (const auto& step : main.steps) c.expect(step.established, "unestablished step");
  c.expect(replay_certificate(main_json).reproduced, "replay failed");

  start = Clock::now();
  const Certificate small = certify_prym(3, 2);
  const double t_small = seconds_since(start);
  c.expect(small.verdict == Verdict::Probabilistic, "(3,2) not Probabilistic");
  const auto h5 = compose_x2(selmer_trinomial(5, 1));
  const auto report = chebotarev_verdict(h5, GroupDescriptor::weyl_d(5), 2000);
  c.expect(!report.refuted && report.primes_used == 2000, "W(D_5) sampling");

  const auto control = chebotarev_verdict(IntPoly::parse("x^6 - x - 1"), GroupDescriptor::weyl_d(3), 50);
  c.expect(control.refuted && control.primes_used <= 50, "control not refuted within 50 primes");

  c.expect(t_main < 60.0 && t_small < 60.0, "runtime >= 60 s");
  c.detail << (c.ok ? "" : "; ") << "(3,4) Deterministic in " << t_main << " s, (3,2) Probabilistic in " << t_small
           << " s, control refuted at prime " << (control.witness ? control.witness->prime : 0);
  return c;
}

Check heart_irreducibility() {
  Check c;
  c.expect(heart_f2_irreducible(5, GroupKind::Am), "m = 5");
  c.expect(heart_f2_irreducible(7, GroupKind::Am), "m = 7");
  c.detail << (c.ok ? "" : "; ") << "exhaustive spinning for m in {5, 7}";
  return c;
}

Check consistency_identities() {
  Check c;
  int cells = 0;
  for (int p : kOddPrimes) {
    for (int r = 2; r <= 6; ++r) {
      const int m = p * r - 1;
      const int n = 2 * m + 1;
      c.expect(lambda_rank_check(p, m), "lambda rank");
      for (int j = 1; j < p; ++j) c.expect(n * j / p - 1 == 2 * r * j - 2, "floor identity");
      if (r % 2 == 0) c.expect(non_jacobian_inequality(p, r), "non-jacobian inequality");
      ++cells;
    }
  }
  const Certificate cert = certify_prym(3, 4);
  for (const auto& claim : cert.claims) {
    if (claim.statement.rfind("End", 0) == 0) c.expect(claim.status == "attributed", "End claim not attributed");
  }
  c.detail << (c.ok ? "" : "; ") << cells << " (p, r) cells; geometric conclusions emitted as attributed claims";
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Check()>>> criteria{
      {"multiplicity calculus", multiplicity_calculus},
      {"discriminant oracle", discriminant_oracle},
      {"composite discriminant", composite_discriminant},
      {"group and module suite", group_module_suite},
      {"Galois certification", galois_certification},
      {"heart irreducibility", heart_irreducibility},
      {"consistency identities", consistency_identities},
  };
  int failures = 0;
  int index = 1;
  for (const auto& [name, run] : criteria) {
    Check result;
    try {
      result = run();
    } catch (const std::exception& e) {
      result.ok = false;
      result.detail << "exception: " << e.what();
    }
    std::printf("%s [%d] %s: %s\n", result.ok ? "PASS" : "FAIL", index++, name.c_str(), result.detail.str().c_str());
    if (!result.ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
