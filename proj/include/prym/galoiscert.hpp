#pragma once

// Certificate engine: the chain of lemmas that pins Gal(u(x^2)) down to
// W(D_m), each applied only after its premises have been recomputed, plus
// Frobenius cycle-type sampling for the cases the chain does not reach.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "prym/cycletype.hpp"
#include "prym/intpoly.hpp"
#include "prym/signedperm.hpp"

namespace prym {

inline constexpr const char* kCertificateSchema = "prym-cert/1";
inline constexpr const char* kToolVersion = "1.0.0";

enum class RuleName {
  DiscriminantOracle,
  EvenContainment,
  IrredX2,
  IrredDelta,
  SquareRoot,
  TwoGroup,
  CyclotomicDescent,
  SmCert,
  ChebotarevVerdict,
  DoubleTransitivity,
  NormalIndex,
  Multiplicities,
  NonJacobian,
  Centralizer,
};

std::string rule_name(RuleName rule);

struct Premise {
  std::string fact;
  nlohmann::json value;
  bool holds = true;
};

struct Rule {
  RuleName name;
  std::vector<Premise> premises;
  std::string conclusion;
  bool established = false;

  /// Adds a premise and returns whether it holds.
  bool require(std::string fact, nlohmann::json value, bool holds);
  std::optional<std::string> first_failure() const;
};

enum class Verdict { Deterministic, Probabilistic, Refuted, Inconclusive };

std::string verdict_name(Verdict v);
int exit_code(Verdict v);

struct Claim {
  std::string statement;
  std::string status;     // "verified", "statistical" or "attributed"
  std::string authority;  // empty for verified claims
};

struct CertOptions {
  int samples = 2000;
  std::uint64_t seed = 0;
  int prime_budget = kDefaultPrimeBudget;
  int threads = 0;  // 0: hardware concurrency
};

struct Certificate {
  std::string kind;  // "wdm-over-Q", "wdm-over-cyclotomic", "prym"
  FamilyParams params;
  bool has_pr = false;
  CertOptions options;
  std::string claim;
  std::vector<Rule> steps;
  Verdict verdict = Verdict::Inconclusive;
  std::optional<std::string> failed_premise;
  std::vector<Claim> claims;

  nlohmann::json to_json() const;
};

enum class BaseField { Q, Cyclotomic };

enum class Containment { Contained, NotContained, NotConcluded, Inapplicable };

std::string containment_name(Containment c);

/// Whether Gal(u(x^2)) lies in W(D_m), decided by -u(0) being a square.
Containment even_containment(const IntPoly& u, BaseField base);

struct FrobeniusSample {
  std::uint32_t prime;
  CycleType type;
};

/// Cycle types of f modulo the first `count` primes not dividing
/// disc(f) * lc(f), in increasing order. With a nonzero seed, a seeded
/// subsample of the first 2 * count such primes is taken instead.
std::vector<FrobeniusSample> sample_frobenius(const IntPoly& f, int count, std::uint64_t seed = 0, int threads = 0);

struct ClassStat {
  CycleType type;
  std::uint64_t observed = 0;
  std::uint64_t class_size = 0;
  double expected_frequency = 0.0;  // class_size / |G|
};

struct ChebotarevReport {
  bool refuted = false;
  std::optional<FrobeniusSample> witness;  // first type impossible in the target
  std::uint64_t primes_used = 0;
  std::uint64_t group_order = 0;
  std::vector<ClassStat> classes;
  double chi_square = 0.0;
  int degrees_of_freedom = 0;

  nlohmann::json to_json() const;
};

/// First sample whose cycle type does not occur in the census.
std::optional<FrobeniusSample> first_impossible(const std::vector<FrobeniusSample>& samples, const Census& census);

/// Compares Frobenius cycle types of h with the target group's census.
/// Refutation is unconditional; consistency is statistical evidence only.
ChebotarevReport chebotarev_verdict(const IntPoly& h, const GroupDescriptor& target, int samples,
                                    std::uint64_t seed = 0, int threads = 0);

/// Gal(x^(2m) - x^2 - c / Q) = W(D_m).
Certificate certify_wdm_over_Q(int m, long c, const CertOptions& options = {});

/// Extends a certificate over Q to Q(zeta_p) for m = p r - 1, c = 1.
Certificate cyclotomic_descent(const Certificate& over_q, int p, int r);

/// Full pipeline for the Prym variety of y^p = x^(2m+1) - x^3 - x.
Certificate certify_prym(int p, int r, const CertOptions& options = {});

struct ReplayReport {
  bool reproduced = false;
  std::vector<std::string> mismatches;
};

/// Recomputes every step of a serialized certificate from its recorded
/// parameters and options and compares the result.
ReplayReport replay_certificate(const nlohmann::json& certificate);

}  // namespace prym
