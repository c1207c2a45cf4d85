#pragma once

// Signed permutations (eps, s) of m letters acting on the labelled roots
// {0, +-beta_1, ..., +-beta_m}: beta_i -> eps(i) beta_{s(i)}, 0 -> 0.
//
// Labels on R_h are numbered 2i for +beta_{i+1} and 2i+1 for -beta_{i+1};
// R_f adds label 2m for the root 0. Letters of R_u are 0..m-1.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "prym/cycletype.hpp"

namespace prym {

class SignedPerm {
 public:
  /// perm[i] is the image of letter i (0-based); signs entries are +1 or -1.
  SignedPerm(std::vector<int> perm, std::vector<int> signs);

  static SignedPerm identity(int m);
  /// Plain permutation with all signs +1.
  static SignedPerm from_perm(std::vector<int> perm);
  /// Identity permutation with the given signs.
  static SignedPerm from_signs(std::vector<int> signs);

  int m() const { return static_cast<int>(perm_.size()); }
  const std::vector<int>& perm() const { return perm_; }
  const std::vector<int>& signs() const { return signs_; }
  int sign_product() const;
  bool is_identity() const;

  /// Image of a label of R_h or R_f.
  int act(int label) const;

  SignedPerm inverse() const;

  /// Composition of label maps: (a * b)(x) = a(b(x)).
  friend SignedPerm operator*(const SignedPerm& a, const SignedPerm& b);
  friend bool operator==(const SignedPerm&, const SignedPerm&) = default;
  friend auto operator<=>(const SignedPerm&, const SignedPerm&) = default;

  std::string to_string() const;

 private:
  std::vector<int> perm_;
  std::vector<int> signs_;
};

/// True iff the product of signs is +1.
bool in_wdm(const SignedPerm& g);

/// Projection (eps, s) -> s onto permutations of the roots of u.
std::vector<int> kappa_u(const SignedPerm& g);

/// Cycle type of a plain permutation.
CycleType permutation_cycle_type(const std::vector<int>& perm);

/// Cycle type of g acting on the 2m labels of R_h: an l-cycle of s with
/// sign product +1 gives two l-cycles, with sign product -1 one 2l-cycle.
CycleType induced_cycle_type(const SignedPerm& g);

/// Whether the permutation of R_h induced by g is even.
bool induced_parity_even(const SignedPerm& g);

enum class RootSet { U, H, F };

int root_set_size(RootSet set, int m);
int act_on(const SignedPerm& g, RootSet set, int point);
std::string label_name(RootSet set, int m, int point);

enum class GroupKind { Sm, Am, Em, Em0, WDm, TwoM_G, Generated };

class GroupDescriptor {
 public:
  static GroupDescriptor symmetric(int m);
  static GroupDescriptor alternating(int m);
  static GroupDescriptor sign_changes(int m);
  static GroupDescriptor even_sign_changes(int m);
  static GroupDescriptor weyl_d(int m);
  /// 2^m . G for G generated by the given permutations of m letters.
  static GroupDescriptor two_m(int m, std::vector<std::vector<int>> g_generators);
  static GroupDescriptor generated(int m, std::vector<SignedPerm> generators);

  GroupKind kind() const { return kind_; }
  int m() const { return m_; }
  std::vector<SignedPerm> generators() const;
  /// Closed-form order for the named kinds; nullopt for Generated.
  std::optional<std::uint64_t> known_order() const;

  nlohmann::json to_json() const;
  static GroupDescriptor from_json(const nlohmann::json& j);
  std::string name() const;

 private:
  GroupDescriptor(GroupKind kind, int m) : kind_(kind), m_(m) {}
  GroupKind kind_;
  int m_;
  std::vector<std::vector<int>> g_generators_;
  std::vector<SignedPerm> generators_;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// 2^7 * 8!, the order of W(D_8).
inline constexpr std::uint64_t kDefaultEnumerationBudget = 5'160'960;

/// Calls visit on every element exactly once. Throws BudgetExceeded when the
/// group is larger than the budget.
void for_each_element(const GroupDescriptor& group, const std::function<void(const SignedPerm&)>& visit,
                      std::uint64_t budget = kDefaultEnumerationBudget);

std::uint64_t group_order(const GroupDescriptor& group, std::uint64_t budget = kDefaultEnumerationBudget);

using Census = std::map<CycleType, std::uint64_t>;

/// Exact count of induced cycle types on R_h over the whole group.
Census census(const GroupDescriptor& group, std::uint64_t budget = kDefaultEnumerationBudget);

/// Orbits of the group generated by gens, by closure of the generator graph.
std::vector<std::vector<int>> orbits(const std::vector<SignedPerm>& gens, RootSet set, int m);

/// Schreier generators of the stabilizer of point.
std::vector<SignedPerm> stabilizer_generators(const std::vector<SignedPerm>& gens, RootSet set, int m, int point);

/// Largest k <= 2 such that the action is k-transitive (0 if intransitive).
int transitivity_degree(const std::vector<SignedPerm>& gens, RootSet set, int m);

/// For G = S_m (m >= 5): true iff no proper normal subgroup has index
/// dividing m, i.e. iff m is odd.
bool sm_normal_index_condition(int m);

struct SmCertificate {
  bool is_sm = false;
  std::optional<int> jordan_prime;  // prime cycle length l with m/2 < l < m-2
  std::string reason;
};

/// One-sided test that the Galois group of an irreducible degree-m
/// polynomial is S_m from observed Frobenius cycle types.
SmCertificate sm_certificate(const std::vector<CycleType>& types, bool disc_is_square, bool irreducible, int m);

}  // namespace prym
