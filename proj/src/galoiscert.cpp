#include "prym/galoiscert.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <thread>

#include "prym/fpmodule.hpp"
#include "prym/primes.hpp"
#include "prym/prymcalc.hpp"

namespace prym {

std::string rule_name(RuleName rule) {
  switch (rule) {
    case RuleName::DiscriminantOracle:
      return "DiscriminantOracle";
    case RuleName::EvenContainment:
      return "EvenContainment";
    case RuleName::IrredX2:
      return "IrredX2";
    case RuleName::IrredDelta:
      return "IrredDelta";
    case RuleName::SquareRoot:
      return "SquareRoot";
    case RuleName::TwoGroup:
      return "TwoGroup";
    case RuleName::CyclotomicDescent:
      return "CyclotomicDescent";
    case RuleName::SmCert:
      return "SmCert";
    case RuleName::ChebotarevVerdict:
      return "ChebotarevVerdict";
    case RuleName::DoubleTransitivity:
      return "DoubleTransitivity";
    case RuleName::NormalIndex:
      return "NormalIndex";
    case RuleName::Multiplicities:
      return "Multiplicities";
    case RuleName::NonJacobian:
      return "NonJacobian";
    case RuleName::Centralizer:
      return "Centralizer";
  }
  return "?";
}

bool Rule::require(std::string fact, nlohmann::json value, bool holds) {
  premises.push_back(Premise{std::move(fact), std::move(value), holds});
  return holds;
}

std::optional<std::string> Rule::first_failure() const {
  for (const auto& p : premises) {
    if (!p.holds) return rule_name(name) + ": " + p.fact;
  }
  return std::nullopt;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Deterministic:
      return "Deterministic";
    case Verdict::Probabilistic:
      return "Probabilistic";
    case Verdict::Refuted:
      return "Refuted";
    case Verdict::Inconclusive:
      return "Inconclusive";
  }
  return "?";
}

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::Deterministic:
      return 0;
    case Verdict::Refuted:
      return 1;
    case Verdict::Probabilistic:
    case Verdict::Inconclusive:
      return 2;
  }
  return 2;
}

std::string containment_name(Containment c) {
  switch (c) {
    case Containment::Contained:
      return "Contained";
    case Containment::NotContained:
      return "NotContained";
    case Containment::NotConcluded:
      return "NotConcluded";
    case Containment::Inapplicable:
      return "Inapplicable";
  }
  return "?";
}

nlohmann::json Certificate::to_json() const {
  nlohmann::json j;
  j["version"] = kCertificateSchema;
  j["tool"] = {{"name", "prymcert"}, {"version", kToolVersion}};
  j["kind"] = kind;
  j["config"] = {{"samples", options.samples},
                 {"seed", options.seed},
                 {"prime_budget", options.prime_budget}};
  nlohmann::json params_json{{"m", params.m}, {"n", params.n}, {"c", params.c}};
  params_json["p"] = has_pr ? nlohmann::json(params.p) : nlohmann::json(nullptr);
  params_json["r"] = has_pr ? nlohmann::json(params.r) : nlohmann::json(nullptr);
  j["params"] = params_json;
  j["claim"] = claim;
  nlohmann::json steps_json = nlohmann::json::array();
  for (const auto& step : steps) {
    nlohmann::json premises = nlohmann::json::array();
    for (const auto& p : step.premises) premises.push_back({{"fact", p.fact}, {"value", p.value}, {"holds", p.holds}});
    steps_json.push_back({{"rule", rule_name(step.name)},
                          {"premises", premises},
                          {"conclusion", step.conclusion},
                          {"established", step.established}});
  }
  j["steps"] = steps_json;
  j["verdict"] = verdict_name(verdict);
  j["failed_premise"] = failed_premise ? nlohmann::json(*failed_premise) : nlohmann::json(nullptr);
  nlohmann::json claims_json = nlohmann::json::array();
  for (const auto& c : claims) {
    nlohmann::json cj{{"statement", c.statement}, {"status", c.status}};
    if (!c.authority.empty()) cj["authority"] = c.authority;
    claims_json.push_back(cj);
  }
  j["claims"] = claims_json;
  return j;
}

// ---------------------------------------------------------------------------

Containment even_containment(const IntPoly& u, BaseField base) {
  const int m = u.degree();
  if (m < 1 || m % 2 == 0) return Containment::Inapplicable;
  if (u.coeff(0) == 0 || discriminant(u) == 0) return Containment::Inapplicable;
  const mpz_class minus_u0 = -u.coeff(0);
  // Squares are tested for -u(0) / lc(u) via -u(0) * lc(u).
  const mpz_class test = minus_u0 * u.leading();
  if (is_perfect_square(test)) return Containment::Contained;
  return base == BaseField::Q ? Containment::NotContained : Containment::NotConcluded;
}

namespace {

constexpr int kMaxCertifiedM = 31;

int resolve_threads(int threads) {
  if (threads > 0) return threads;
  const unsigned hw = std::thread::hardware_concurrency();
  return static_cast<int>(std::clamp(hw, 1u, 8u));
}

std::vector<std::uint32_t> unramified_primes(const IntPoly& f, int count) {
  const mpz_class bad = discriminant(f) * f.leading();
  if (bad == 0) throw std::invalid_argument("polynomial has a repeated root");
  std::vector<std::uint32_t> primes;
  for (std::uint32_t q : PrimeRange(2, simd::Modulus::kMaxValue - 1)) {
    if (static_cast<int>(primes.size()) >= count) break;
    if (!mpz_divisible_ui_p(bad.get_mpz_t(), q)) primes.push_back(q);
  }
  return primes;
}

}  // namespace

std::vector<FrobeniusSample> sample_frobenius(const IntPoly& f, int count, std::uint64_t seed, int threads) {
  if (count <= 0) throw std::invalid_argument("sample count must be positive");
  if (f.degree() < 1) throw std::invalid_argument("cannot sample a constant polynomial");
  std::vector<std::uint32_t> primes;
  if (seed == 0) {
    primes = unramified_primes(f, count);
  } else {
    primes = unramified_primes(f, 2 * count);
    std::mt19937_64 rng(seed);
    std::shuffle(primes.begin(), primes.end(), rng);
    primes.resize(static_cast<std::size_t>(count));
    std::sort(primes.begin(), primes.end());
  }
  std::vector<std::optional<CycleType>> types(primes.size());
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      auto result = reduce_and_factor_degrees(f, primes[i]);
      types[i] = std::get<CycleType>(result);
    }
  };
  const auto workers = static_cast<std::size_t>(std::min<int>(resolve_threads(threads), static_cast<int>(primes.size())));
  if (workers <= 1) {
    work(0, primes.size());
  } else {
    std::vector<std::thread> pool;
    const std::size_t block = (primes.size() + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t begin = w * block;
      const std::size_t end = std::min(primes.size(), begin + block);
      if (begin < end) pool.emplace_back(work, begin, end);
    }
    for (auto& t : pool) t.join();
  }
  std::vector<FrobeniusSample> out;
  out.reserve(primes.size());
  for (std::size_t i = 0; i < primes.size(); ++i) out.push_back({primes[i], *types[i]});
  return out;
}

std::optional<FrobeniusSample> first_impossible(const std::vector<FrobeniusSample>& samples, const Census& census) {
  for (const auto& s : samples) {
    if (!census.contains(s.type)) return s;
  }
  return std::nullopt;
}

nlohmann::json ChebotarevReport::to_json() const {
  nlohmann::json j;
  j["refuted"] = refuted;
  j["primes_used"] = primes_used;
  j["group_order"] = group_order;
  if (witness) j["witness"] = {{"prime", witness->prime}, {"type", witness->type.to_string()}};
  nlohmann::json classes_json = nlohmann::json::array();
  for (const auto& c : classes) {
    classes_json.push_back({{"type", c.type.to_string()},
                            {"observed", c.observed},
                            {"class_size", c.class_size},
                            {"expected_frequency", c.expected_frequency}});
  }
  j["classes"] = classes_json;
  j["chi_square"] = chi_square;
  j["degrees_of_freedom"] = degrees_of_freedom;
  j["note"] = "frequency agreement is statistical evidence, not a proof";
  return j;
}

ChebotarevReport chebotarev_verdict(const IntPoly& h, const GroupDescriptor& target, int samples, std::uint64_t seed,
                                    int threads) {
  if (samples < 10) throw std::invalid_argument("chebotarev_verdict needs at least 10 unramified primes");
  if (h.degree() != 2 * target.m()) throw std::invalid_argument("target group acts on the wrong number of roots");
  const Census cen = census(target);
  ChebotarevReport report;
  for (const auto& [type, count] : cen) report.group_order += count;
  const auto sampled = sample_frobenius(h, samples, seed, threads);
  if (auto bad = first_impossible(sampled, cen)) {
    report.refuted = true;
    report.witness = bad;
    report.primes_used = static_cast<std::uint64_t>(
        std::find_if(sampled.begin(), sampled.end(), [&](const FrobeniusSample& s) { return s.prime == bad->prime; }) -
        sampled.begin() + 1);
    return report;
  }
  report.primes_used = sampled.size();
  std::map<CycleType, std::uint64_t> observed;
  for (const auto& s : sampled) ++observed[s.type];
  const double n = static_cast<double>(sampled.size());
  for (const auto& [type, count] : cen) {
    ClassStat stat{type, observed[type], count, static_cast<double>(count) / static_cast<double>(report.group_order)};
    const double expected = n * stat.expected_frequency;
    const double diff = static_cast<double>(stat.observed) - expected;
    report.chi_square += diff * diff / expected;
    report.classes.push_back(stat);
  }
  report.degrees_of_freedom = static_cast<int>(cen.size()) - 1;
  return report;
}

// ---------------------------------------------------------------------------

namespace {

std::string wdm(int m) { return "W(D_" + std::to_string(m) + ")"; }

void fail(Certificate& cert, Verdict v, const Rule& rule) {
  cert.verdict = v;
  cert.failed_premise = rule.first_failure().value_or(rule_name(rule.name));
}

// Searches Frobenius data of u for a prime cycle length in (m/2, m - 2).
Rule sm_rule(const IntPoly& u, int m, const mpz_class& disc_u, const CertOptions& options) {
  Rule rule{RuleName::SmCert, {}, "Gal(u / Q) = S_" + std::to_string(m), false};
  const auto irr = irreducible_over_Q(u, options.prime_budget);
  const auto* witness = std::get_if<Irreducible>(&irr);
  rule.require("u irreducible over Q (witness prime)", witness ? nlohmann::json(witness->witness_prime) : nlohmann::json(nullptr),
               witness != nullptr);
  const bool square = is_perfect_square(disc_u);
  rule.require("disc(u) is not a square", disc_u.get_str(), !square);
  std::vector<CycleType> types;
  std::optional<FrobeniusSample> jordan;
  for (const auto& s : sample_frobenius(u, options.samples, 0, options.threads)) {
    types.push_back(s.type);
    const auto cert = sm_certificate({s.type}, false, true, m);
    if (cert.is_sm) {
      jordan = s;
      break;
    }
  }
  const auto verdict = sm_certificate(types, square, witness != nullptr, m);
  nlohmann::json jordan_json = nullptr;
  if (jordan) {
    jordan_json = {{"prime", jordan->prime}, {"cycle_type", jordan->type.to_string()}, {"cycle_length", *verdict.jordan_prime}};
  }
  rule.require("Frobenius class with a prime cycle of length l, m/2 < l < m-2", jordan_json, verdict.is_sm);
  rule.established = verdict.is_sm;
  return rule;
}

}  // namespace

Certificate certify_wdm_over_Q(int m, long c, const CertOptions& options) {
  Certificate cert;
  cert.kind = "wdm-over-Q";
  cert.options = options;
  cert.params = FamilyParams{0, 0, m, 2 * m + 1, c};
  cert.claim = "Gal(x^" + std::to_string(2 * m) + " - x^2 - " + std::to_string(c) + " / Q) = " + wdm(m);
  if (c < 0) cert.claim = "Gal(x^" + std::to_string(2 * m) + " - x^2 + " + std::to_string(-c) + " / Q) = " + wdm(m);

  Rule guard{RuleName::DiscriminantOracle, {}, "discriminants of u and u(x^2) computed exactly", false};
  if (!guard.require("m odd and >= 3", m, m >= 3 && m % 2 == 1) || !guard.require("c odd", c, c % 2 != 0)) {
    cert.steps.push_back(guard);
    fail(cert, Verdict::Inconclusive, guard);
    return cert;
  }
  const IntPoly u = selmer_trinomial(m, c);
  const IntPoly h = compose_x2(u);

  const mpz_class delta = trinomial_disc(m, c);
  const mpz_class disc_u = discriminant(u);
  const mpz_class disc_h = discriminant(h);
  guard.require("disc(u) by subresultants", disc_u.get_str(), true);
  guard.require("closed form (-1)^(m(m-1)/2) (m^m c^(m-1) - (m-1)^(m-1)) agrees", delta.get_str(), delta == disc_u);
  guard.require("disc(u(x^2)) by subresultants", disc_h.get_str(), true);
  guard.require("4^m c disc(u)^2 agrees", disc_of_even_composite(m, c).get_str(), disc_of_even_composite(m, c) == disc_h);
  guard.require("disc(u) odd", delta.get_str(), mpz_odd_p(delta.get_mpz_t()) != 0);
  guard.established = !guard.first_failure();
  cert.steps.push_back(guard);
  if (!guard.established) {
    fail(cert, Verdict::Inconclusive, guard);
    return cert;
  }

  const auto composite = irreducible_composite_rule(u, options.prime_budget);
  Rule irred_x2{RuleName::IrredX2, {}, "u(x^2) = " + h.to_string() + " is irreducible over Q", composite.certified};
  for (const auto& [fact, value] : composite.premises) irred_x2.require(fact, value, true);
  if (!composite.certified) irred_x2.require(composite.failed_premise, nullptr, false);
  cert.steps.push_back(irred_x2);

  const Containment contained = even_containment(u, BaseField::Q);
  Rule even{RuleName::EvenContainment, {}, "Gal(u(x^2) / Q) is contained in " + wdm(m), false};
  even.require("-u(0) = c", c, true);
  even.require("-u(0) is a square in Q", containment_name(contained), contained == Containment::Contained);
  even.established = contained == Containment::Contained;
  cert.steps.push_back(even);

  if (!irred_x2.established) {
    fail(cert, Verdict::Inconclusive, irred_x2);
    return cert;
  }
  if (contained == Containment::NotContained) {
    fail(cert, Verdict::Refuted, even);
    return cert;
  }

  if (m < 9) {
    // The lemma chain needs m >= 9; smaller cases are only sampled.
    Rule cheb{RuleName::ChebotarevVerdict, {}, "Frobenius cycle types of u(x^2) are consistent with " + wdm(m), false};
    const auto report = chebotarev_verdict(h, GroupDescriptor::weyl_d(m), options.samples, options.seed, options.threads);
    cheb.require("no sampled cycle type outside the " + wdm(m) + " census", report.to_json(), !report.refuted);
    cheb.established = !report.refuted;
    cert.steps.push_back(cheb);
    if (report.refuted) {
      fail(cert, Verdict::Refuted, cheb);
      return cert;
    }
    if (!even.established) {
      fail(cert, Verdict::Inconclusive, even);
      return cert;
    }
    cert.verdict = Verdict::Probabilistic;
    cert.claims.push_back({cert.claim, "statistical", ""});
    return cert;
  }

  Rule sm = sm_rule(u, m, disc_u, options);
  cert.steps.push_back(sm);

  Rule irred_delta{RuleName::IrredDelta, {}, "u(x^2) is irreducible over Q(sqrt(disc u))", false};
  irred_delta.require("m >= 7", m, m >= 7);
  irred_delta.require("c odd", c, true);
  irred_delta.require("Gal(u / Q) = S_m", sm.established, sm.established);
  const unsigned long delta_mod4 = mpz_fdiv_ui(delta.get_mpz_t(), 4);
  irred_delta.require("disc(u) = 1 mod 4 (2 unramified in Q(sqrt(disc u)))", delta_mod4, delta_mod4 == 1);
  irred_delta.established = !irred_delta.first_failure();
  cert.steps.push_back(irred_delta);

  Rule square_root{RuleName::SquareRoot, {}, "sqrt(alpha) is not in Q(R_u) for roots alpha of u, so Q(R_h) != Q(R_u)", false};
  square_root.require("m >= 9", m, m >= 9);
  square_root.require("2m < m(m-1)/2 (A_m has no subgroup of index 2m)",
                      {{"2m", 2 * m}, {"m(m-1)/2", m * (m - 1) / 2}}, 2 * m < m * (m - 1) / 2);
  square_root.require("Gal(u / Q) = S_m", sm.established, sm.established);
  square_root.require("u(x^2) irreducible over Q(sqrt(disc u))", irred_delta.established, irred_delta.established);
  square_root.established = !square_root.first_failure();
  cert.steps.push_back(square_root);

  Rule two_group{RuleName::TwoGroup, {}, "Gal(u(x^2) / Q) = " + wdm(m), false};
  two_group.require("m >= 9", m, m >= 9);
  two_group.require("c is an odd square", c, c % 2 != 0 && is_perfect_square(mpz_class(c)));
  two_group.require("Gal(u / Q) = S_m", sm.established, sm.established);
  two_group.require("Gal(u(x^2) / Q) contained in W(D_m)", even.established, even.established);
  two_group.require("Q(R_h) != Q(R_u)", square_root.established, square_root.established);
  const bool heart = m <= kMaxCertifiedM && heart_f2_irreducible(m, GroupKind::Am);
  two_group.require("E_m^0 is an irreducible F_2[A_m]-module (spinning)", heart, heart);
  two_group.established = !two_group.first_failure();
  cert.steps.push_back(two_group);

  for (const Rule* r : {&sm, &irred_delta, &square_root, &even, &two_group}) {
    if (!r->established) {
      fail(cert, Verdict::Inconclusive, *r);
      return cert;
    }
  }
  cert.verdict = Verdict::Deterministic;
  cert.claims.push_back({cert.claim, "verified", ""});
  return cert;
}

Certificate cyclotomic_descent(const Certificate& over_q, int p, int r) {
  if (p == 2 || !is_prime(p)) throw std::invalid_argument("p must be an odd prime");
  if (r < 2) throw std::invalid_argument("r must be >= 2");
  if (over_q.params.m != p * r - 1 || over_q.params.c != 1) {
    throw std::invalid_argument("cyclotomic_descent needs a certificate for m = p r - 1 and c = 1");
  }
  Certificate cert = over_q;
  cert.kind = "wdm-over-cyclotomic";
  cert.has_pr = true;
  cert.params.p = p;
  cert.params.r = r;
  const int m = cert.params.m;
  const std::string field = "Q(zeta_" + std::to_string(p) + ")";
  cert.claim = "Gal(x^" + std::to_string(2 * m) + " - x^2 - 1 / " + field + ") = " + wdm(m);

  if (over_q.verdict != Verdict::Deterministic && over_q.verdict != Verdict::Probabilistic) return cert;

  Rule descent{RuleName::CyclotomicDescent, {}, "Q(R_h) and " + field + " are linearly disjoint, so the Galois group is unchanged", false};
  const ConditionPR cond = condition_p_r(p, r);
  descent.require("shortcut (1): r = 2 mod (p-1)", cond.shortcut_congruence, true);
  descent.require("shortcut (2): 2^(r-2) < p-1", cond.shortcut_small_r, true);
  const bool cond_ok = descent.require("condition (3): p does not divide 1 + 2^(r-2)",
                                       {{"residue", cond.residue}}, cond.pass);
  const mpz_class disc_h = discriminant(compose_x2(selmer_trinomial(m, 1)));
  const bool coprime = descent.require("gcd(disc(h), p) = 1", {{"disc_h_mod_p", mpz_fdiv_ui(disc_h.get_mpz_t(), static_cast<unsigned long>(p))}},
                                       mpz_divisible_ui_p(disc_h.get_mpz_t(), static_cast<unsigned long>(p)) == 0);
  descent.require("base certificate over Q", verdict_name(over_q.verdict), true);
  descent.established = cond_ok && coprime;
  cert.steps.push_back(descent);
  if (!descent.established) {
    // The claim over Q stands; only the extension is refused.
    fail(cert, Verdict::Inconclusive, descent);
    return cert;
  }
  cert.claims.push_back({cert.claim, over_q.verdict == Verdict::Deterministic ? "verified" : "statistical", ""});
  return cert;
}

Certificate certify_prym(int p, int r, const CertOptions& options) {
  if (p == 2 || !is_prime(p)) throw std::invalid_argument("p must be an odd prime");
  if (r < 2) throw std::invalid_argument("r must be >= 2");
  const int m = p * r - 1;

  Certificate cert;
  Rule parity{RuleName::Multiplicities, {}, "multiplicities of delta_p on the anti-invariant differentials are coprime", false};
  if (r % 2 != 0) {
    cert.kind = "prym";
    cert.options = options;
    cert.has_pr = true;
    cert.params = FamilyParams{p, r, m, 2 * m + 1, 1};
    cert.claim = "End(Prym(C_{f," + std::to_string(p) + "})) = Z[zeta_" + std::to_string(p) + "]";
    parity.require("r even", r, false);
    cert.steps.push_back(parity);
    fail(cert, Verdict::Inconclusive, parity);
    return cert;
  }

  const Certificate over_q = certify_wdm_over_Q(m, 1, options);
  cert = cyclotomic_descent(over_q, p, r);
  cert.kind = "prym";
  const std::string galois_claim = cert.claim;
  const std::string zeta = "zeta_" + std::to_string(p);
  cert.claim = "End(Prym(C_{f," + std::to_string(p) + "})) = Z[" + zeta + "]";
  cert.claims.clear();
  const Verdict galois_verdict = cert.verdict;
  const auto galois_failure = cert.failed_premise;

  const auto sm_gens = GroupDescriptor::symmetric(m).generators();
  Rule doubly{RuleName::DoubleTransitivity, {}, "S_m acts doubly transitively on the roots of u", false};
  const int degree = transitivity_degree(sm_gens, RootSet::U, m);
  doubly.established = doubly.require("transitivity degree of S_m on m letters >= 2", degree, degree >= 2);
  cert.steps.push_back(doubly);

  Rule normal{RuleName::NormalIndex, {}, "S_m has no proper normal subgroup of index dividing m", false};
  normal.require("m >= 5", m, m >= 5);
  normal.established = normal.require("index 2 of A_m does not divide m (m odd)", m, sm_normal_index_condition(m));
  cert.steps.push_back(normal);

  Rule mult{RuleName::Multiplicities, {}, "eigenvalue multiplicities of delta_p are distinct and coprime", false};
  const auto table = multiplicity_table(p, r);
  nlohmann::json sizes = nlohmann::json::object();
  bool matches = true;
  for (const auto& [j, forms] : anti_invariant_partition(p, r)) {
    sizes[std::to_string(j)] = forms.size();
    matches = matches && static_cast<int>(forms.size()) == table.at(j);
  }
  mult.require("r even", r, true);
  mult.require("closed-form table equals basis enumeration", {{"table", table_to_json(table)}, {"enumerated", sizes}}, matches);
  int total = 0;
  for (const auto& [j, v] : table) total += v;
  mult.require("sum of multiplicities = dim Prym", {{"sum", total}, {"dim_prym", dim_prym(p, m)}}, total == dim_prym(p, m));
  mult.require("gcd of multiplicities = 1", multiplicity_gcd(table), multiplicities_coprime(p, r));
  mult.require("multiplicities pairwise distinct", multiplicities_distinct(p, r), multiplicities_distinct(p, r));
  mult.established = !mult.first_failure();
  cert.steps.push_back(mult);

  Rule nonjac{RuleName::NonJacobian, {}, "mult(zeta_p^-1) is below the bound that excludes jacobians", false};
  const auto bound = non_jacobian_bound(p, r);
  nonjac.established = nonjac.require("r - 1 < (2 dim Prym / (p-1)) / p - (p-2)/p",
                                      {{"lhs", bound.lhs.get_str()}, {"rhs", bound.rhs.get_str()}, {"rhs_r_form", bound.rhs_simplified.get_str()}},
                                      bound.holds);
  cert.steps.push_back(nonjac);

  Rule centralizer{RuleName::Centralizer, {}, "End_Gal(V_f^-) = F_p", false};
  const auto wdm_gens = GroupDescriptor::weyl_d(m).generators();
  const auto up = static_cast<std::uint32_t>(p);
  centralizer.require("p does not divide 2m", {{"p", p}, {"2m", 2 * m}}, (2 * m) % p != 0);
  centralizer.require("m <= " + std::to_string(kMaxCertifiedM), m, m <= kMaxCertifiedM);
  const int odd_dim = m <= kMaxCertifiedM ? commutant_dim(wdm_gens, FpSpace{SpaceKind::VfMinus, m, up}) : 0;
  centralizer.require("dim commutant of W(D_m) on V_f^- over F_p", odd_dim, odd_dim == 1);
  const int orbits_count = orbit_count_formula(wdm_gens, m);
  centralizer.require("orbits of the stabilizer of beta_1 on R_h", orbits_count, orbits_count == 3);
  if (2 * m <= 26) {
    const int full_dim = commutant_dim(wdm_gens, FpSpace{SpaceKind::FullRh, m, up});
    centralizer.require("dim commutant of W(D_m) on F_p^{R_h}", full_dim, full_dim == 3);
  }
  centralizer.require("lambda-torsion rank 2 dim Prym / (p-1) = dim V_f^-", m, lambda_rank_check(p, m));
  centralizer.established = !centralizer.first_failure();
  cert.steps.push_back(centralizer);

  if (galois_verdict == Verdict::Refuted || galois_verdict == Verdict::Inconclusive) {
    cert.verdict = galois_verdict;
    cert.failed_premise = galois_failure;
    return cert;
  }
  for (const Rule* rule : {&doubly, &normal, &mult, &nonjac, &centralizer}) {
    if (!rule->established) {
      fail(cert, Verdict::Inconclusive, *rule);
      return cert;
    }
  }
  cert.verdict = galois_verdict;
  const std::string status = galois_verdict == Verdict::Deterministic ? "verified" : "statistical";
  cert.claims.push_back({galois_claim, status, ""});
  const std::string endo_authority = "endomorphism criterion for Prym varieties whose Galois group contains 2^(m-1).G, G doubly transitive";
  const std::string jac_authority = "multiplicity bound excluding jacobians of curves with an automorphism of order p";
  cert.claims.push_back({"dim Prym(C_{f," + std::to_string(p) + "}) = " + std::to_string(dim_prym(p, m)), "verified", ""});
  cert.claims.push_back({"End = Z[" + zeta + "]", "attributed", endo_authority});
  cert.claims.push_back({"Prym(C_{f," + std::to_string(p) + "}) is absolutely simple", "attributed", endo_authority});
  cert.claims.push_back({"Prym(C_{f," + std::to_string(p) + "}) is not isomorphic to a jacobian nor to a product of jacobians",
                         "attributed", jac_authority});
  return cert;
}

ReplayReport replay_certificate(const nlohmann::json& certificate) {
  ReplayReport report;
  if (certificate.value("version", "") != kCertificateSchema) {
    report.mismatches.push_back("unsupported schema version");
    return report;
  }
  CertOptions options;
  const auto& config = certificate.at("config");
  options.samples = config.at("samples").get<int>();
  options.seed = config.at("seed").get<std::uint64_t>();
  options.prime_budget = config.at("prime_budget").get<int>();
  const auto& params = certificate.at("params");
  const std::string kind = certificate.at("kind").get<std::string>();
  Certificate fresh;
  if (kind == "prym") {
    fresh = certify_prym(params.at("p").get<int>(), params.at("r").get<int>(), options);
  } else if (kind == "wdm-over-cyclotomic") {
    fresh = cyclotomic_descent(certify_wdm_over_Q(params.at("m").get<int>(), 1, options), params.at("p").get<int>(),
                               params.at("r").get<int>());
  } else if (kind == "wdm-over-Q") {
    fresh = certify_wdm_over_Q(params.at("m").get<int>(), params.at("c").get<long>(), options);
  } else {
    report.mismatches.push_back("unknown certificate kind: " + kind);
    return report;
  }
  const nlohmann::json recomputed = fresh.to_json();
  for (const char* key : {"version", "kind", "params", "claim", "verdict", "failed_premise", "claims"}) {
    if (certificate.value(key, nlohmann::json()) != recomputed.at(key)) report.mismatches.push_back(std::string("field ") + key);
  }
  const auto& old_steps = certificate.at("steps");
  const auto& new_steps = recomputed.at("steps");
  if (old_steps.size() != new_steps.size()) report.mismatches.push_back("number of steps");
  for (std::size_t i = 0; i < std::min(old_steps.size(), new_steps.size()); ++i) {
    if (old_steps[i] != new_steps[i]) report.mismatches.push_back("step " + std::to_string(i) + " (" + new_steps[i].value("rule", "") + ")");
  }
  report.reproduced = report.mismatches.empty();
  return report;
}

}  // namespace prym
