#include "prym/signedperm.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_set>

#include "prym/primes.hpp"

namespace prym {

SignedPerm::SignedPerm(std::vector<int> perm, std::vector<int> signs) : perm_(std::move(perm)), signs_(std::move(signs)) {
  const int m = static_cast<int>(perm_.size());
  if (static_cast<int>(signs_.size()) != m) throw std::invalid_argument("SignedPerm: sign vector length mismatch");
  std::vector<bool> seen(static_cast<std::size_t>(m), false);
  for (int image : perm_) {
    if (image < 0 || image >= m || seen[static_cast<std::size_t>(image)]) {
      throw std::invalid_argument("SignedPerm: not a bijection");
    }
    seen[static_cast<std::size_t>(image)] = true;
  }
  for (int e : signs_) {
    if (e != 1 && e != -1) throw std::invalid_argument("SignedPerm: signs must be +1 or -1");
  }
}

SignedPerm SignedPerm::identity(int m) {
  std::vector<int> perm(static_cast<std::size_t>(m));
  std::iota(perm.begin(), perm.end(), 0);
  return SignedPerm(std::move(perm), std::vector<int>(static_cast<std::size_t>(m), 1));
}

SignedPerm SignedPerm::from_perm(std::vector<int> perm) {
  std::vector<int> signs(perm.size(), 1);
  return SignedPerm(std::move(perm), std::move(signs));
}

SignedPerm SignedPerm::from_signs(std::vector<int> signs) {
  std::vector<int> perm(signs.size());
  std::iota(perm.begin(), perm.end(), 0);
  return SignedPerm(std::move(perm), std::move(signs));
}

int SignedPerm::sign_product() const {
  return std::accumulate(signs_.begin(), signs_.end(), 1, std::multiplies<>());
}

bool SignedPerm::is_identity() const {
  for (int i = 0; i < m(); ++i) {
    if (perm_[static_cast<std::size_t>(i)] != i || signs_[static_cast<std::size_t>(i)] != 1) return false;
  }
  return true;
}

int SignedPerm::act(int label) const {
  if (label == 2 * m()) return label;
  const auto i = static_cast<std::size_t>(label / 2);
  const int negated = label % 2;
  const int flip = signs_[i] == -1 ? 1 : 0;
  return 2 * perm_[i] + (negated ^ flip);
}

SignedPerm SignedPerm::inverse() const {
  std::vector<int> perm(perm_.size());
  std::vector<int> signs(perm_.size());
  for (std::size_t i = 0; i < perm_.size(); ++i) {
    const auto image = static_cast<std::size_t>(perm_[i]);
    perm[image] = static_cast<int>(i);
    signs[image] = signs_[i];
  }
  return SignedPerm(std::move(perm), std::move(signs));
}

SignedPerm operator*(const SignedPerm& a, const SignedPerm& b) {
  if (a.m() != b.m()) throw std::invalid_argument("SignedPerm: mismatched m");
  std::vector<int> perm(b.perm_.size());
  std::vector<int> signs(b.perm_.size());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    const auto mid = static_cast<std::size_t>(b.perm_[i]);
    perm[i] = a.perm_[mid];
    signs[i] = a.signs_[mid] * b.signs_[i];
  }
  return SignedPerm(std::move(perm), std::move(signs));
}

std::string SignedPerm::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < perm_.size(); ++i) {
    if (i > 0) out += ' ';
    out += (signs_[i] < 0 ? "-" : "+") + std::to_string(perm_[i] + 1);
  }
  return out + ")";
}

bool in_wdm(const SignedPerm& g) { return g.sign_product() == 1; }

std::vector<int> kappa_u(const SignedPerm& g) { return g.perm(); }

namespace {

// Cycles of perm as lists of letters.
std::vector<std::vector<int>> cycles_of(const std::vector<int>& perm) {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (seen[start]) continue;
    std::vector<int> cycle;
    for (auto i = start; !seen[i]; i = static_cast<std::size_t>(perm[i])) {
      seen[i] = true;
      cycle.push_back(static_cast<int>(i));
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

}  // namespace

CycleType permutation_cycle_type(const std::vector<int>& perm) {
  std::vector<int> lengths;
  for (const auto& cycle : cycles_of(perm)) lengths.push_back(static_cast<int>(cycle.size()));
  return CycleType(std::move(lengths));
}

CycleType induced_cycle_type(const SignedPerm& g) {
  std::vector<int> lengths;
  for (const auto& cycle : cycles_of(g.perm())) {
    int product = 1;
    for (int i : cycle) product *= g.signs()[static_cast<std::size_t>(i)];
    const int len = static_cast<int>(cycle.size());
    if (product == 1) {
      lengths.push_back(len);
      lengths.push_back(len);
    } else {
      lengths.push_back(2 * len);
    }
  }
  return CycleType(std::move(lengths));
}

bool induced_parity_even(const SignedPerm& g) {
  // A permutation is even iff (points - cycles) is even.
  const CycleType type = induced_cycle_type(g);
  return (type.total() - static_cast<int>(type.parts().size())) % 2 == 0;
}

int root_set_size(RootSet set, int m) {
  switch (set) {
    case RootSet::U:
      return m;
    case RootSet::H:
      return 2 * m;
    case RootSet::F:
      return 2 * m + 1;
  }
  return 0;
}

int act_on(const SignedPerm& g, RootSet set, int point) {
  return set == RootSet::U ? g.perm()[static_cast<std::size_t>(point)] : g.act(point);
}

std::string label_name(RootSet set, int m, int point) {
  if (set == RootSet::U) return "alpha_" + std::to_string(point + 1);
  if (point == 2 * m) return "0";
  return std::string(point % 2 ? "-" : "+") + "beta_" + std::to_string(point / 2 + 1);
}

// ---------------------------------------------------------------------------

GroupDescriptor GroupDescriptor::symmetric(int m) { return {GroupKind::Sm, m}; }
GroupDescriptor GroupDescriptor::alternating(int m) { return {GroupKind::Am, m}; }
GroupDescriptor GroupDescriptor::sign_changes(int m) { return {GroupKind::Em, m}; }
GroupDescriptor GroupDescriptor::even_sign_changes(int m) { return {GroupKind::Em0, m}; }
GroupDescriptor GroupDescriptor::weyl_d(int m) { return {GroupKind::WDm, m}; }

GroupDescriptor GroupDescriptor::two_m(int m, std::vector<std::vector<int>> g_generators) {
  GroupDescriptor d(GroupKind::TwoM_G, m);
  for (const auto& g : g_generators) SignedPerm::from_perm(g);  // validates
  d.g_generators_ = std::move(g_generators);
  return d;
}

GroupDescriptor GroupDescriptor::generated(int m, std::vector<SignedPerm> generators) {
  for (const auto& g : generators) {
    if (g.m() != m) throw std::invalid_argument("generator has wrong m");
  }
  GroupDescriptor d(GroupKind::Generated, m);
  d.generators_ = std::move(generators);
  return d;
}

namespace {

std::vector<int> transposition(int m, int a, int b) {
  std::vector<int> perm(static_cast<std::size_t>(m));
  std::iota(perm.begin(), perm.end(), 0);
  std::swap(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)]);
  return perm;
}

std::vector<int> long_cycle(int m) {
  std::vector<int> perm(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) perm[static_cast<std::size_t>(i)] = (i + 1) % m;
  return perm;
}

std::vector<std::vector<int>> symmetric_gens(int m) {
  if (m < 2) return {};
  if (m == 2) return {transposition(m, 0, 1)};
  return {transposition(m, 0, 1), long_cycle(m)};
}

std::vector<std::vector<int>> alternating_gens(int m) {
  std::vector<std::vector<int>> out;
  for (int k = 2; k < m; ++k) {
    std::vector<int> perm(static_cast<std::size_t>(m));
    std::iota(perm.begin(), perm.end(), 0);
    perm[0] = 1;
    perm[1] = k;
    perm[static_cast<std::size_t>(k)] = 0;
    out.push_back(std::move(perm));
  }
  return out;
}

std::vector<int> flips(int m, std::initializer_list<int> at) {
  std::vector<int> signs(static_cast<std::size_t>(m), 1);
  for (int i : at) signs[static_cast<std::size_t>(i)] = -1;
  return signs;
}

std::uint64_t factorial(int m) {
  std::uint64_t f = 1;
  for (int i = 2; i <= m; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

}  // namespace

std::vector<SignedPerm> GroupDescriptor::generators() const {
  std::vector<SignedPerm> out;
  switch (kind_) {
    case GroupKind::Sm:
      for (auto& p : symmetric_gens(m_)) out.push_back(SignedPerm::from_perm(std::move(p)));
      break;
    case GroupKind::Am:
      for (auto& p : alternating_gens(m_)) out.push_back(SignedPerm::from_perm(std::move(p)));
      break;
    case GroupKind::Em:
      for (int i = 0; i < m_; ++i) out.push_back(SignedPerm::from_signs(flips(m_, {i})));
      break;
    case GroupKind::Em0:
      for (int i = 0; i + 1 < m_; ++i) out.push_back(SignedPerm::from_signs(flips(m_, {i, i + 1})));
      break;
    case GroupKind::WDm:
      for (auto& p : symmetric_gens(m_)) out.push_back(SignedPerm::from_perm(std::move(p)));
      if (m_ >= 2) out.push_back(SignedPerm::from_signs(flips(m_, {0, 1})));
      break;
    case GroupKind::TwoM_G:
      for (const auto& p : g_generators_) out.push_back(SignedPerm::from_perm(p));
      for (int i = 0; i < m_; ++i) out.push_back(SignedPerm::from_signs(flips(m_, {i})));
      break;
    case GroupKind::Generated:
      out = generators_;
      break;
  }
  return out;
}

std::optional<std::uint64_t> GroupDescriptor::known_order() const {
  const std::uint64_t two_m = std::uint64_t{1} << m_;
  switch (kind_) {
    case GroupKind::Sm:
      return factorial(m_);
    case GroupKind::Am:
      return m_ < 2 ? 1 : factorial(m_) / 2;
    case GroupKind::Em:
      return two_m;
    case GroupKind::Em0:
      return m_ == 0 ? 1 : two_m / 2;
    case GroupKind::WDm:
      return m_ == 0 ? 1 : two_m / 2 * factorial(m_);
    case GroupKind::TwoM_G:
    case GroupKind::Generated:
      return std::nullopt;
  }
  return std::nullopt;
}

namespace {

const char* kind_name(GroupKind kind) {
  switch (kind) {
    case GroupKind::Sm:
      return "Sm";
    case GroupKind::Am:
      return "Am";
    case GroupKind::Em:
      return "Em";
    case GroupKind::Em0:
      return "Em0";
    case GroupKind::WDm:
      return "WDm";
    case GroupKind::TwoM_G:
      return "TwoM_G";
    case GroupKind::Generated:
      return "Generated";
  }
  return "?";
}

}  // namespace

nlohmann::json GroupDescriptor::to_json() const {
  nlohmann::json j{{"kind", kind_name(kind_)}, {"m", m_}};
  if (kind_ == GroupKind::TwoM_G) j["g_generators"] = g_generators_;
  if (kind_ == GroupKind::Generated) {
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& g : generators_) gens.push_back({{"perm", g.perm()}, {"signs", g.signs()}});
    j["generators"] = gens;
  }
  return j;
}

GroupDescriptor GroupDescriptor::from_json(const nlohmann::json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  const int m = j.at("m").get<int>();
  if (kind == "Sm") return symmetric(m);
  if (kind == "Am") return alternating(m);
  if (kind == "Em") return sign_changes(m);
  if (kind == "Em0") return even_sign_changes(m);
  if (kind == "WDm") return weyl_d(m);
  if (kind == "TwoM_G") return two_m(m, j.at("g_generators").get<std::vector<std::vector<int>>>());
  if (kind == "Generated") {
    std::vector<SignedPerm> gens;
    for (const auto& g : j.at("generators")) {
      gens.emplace_back(g.at("perm").get<std::vector<int>>(), g.at("signs").get<std::vector<int>>());
    }
    return generated(m, std::move(gens));
  }
  throw std::invalid_argument("unknown group kind: " + kind);
}

std::string GroupDescriptor::name() const {
  const std::string ms = std::to_string(m_);
  switch (kind_) {
    case GroupKind::Sm:
      return "S_" + ms;
    case GroupKind::Am:
      return "A_" + ms;
    case GroupKind::Em:
      return "E_" + ms;
    case GroupKind::Em0:
      return "E_" + ms + "^0";
    case GroupKind::WDm:
      return "W(D_" + ms + ")";
    case GroupKind::TwoM_G:
      return "2^" + ms + ".G";
    case GroupKind::Generated:
      return "<generated, m=" + ms + ">";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

enum class PermSet { All, Even, Identity };
enum class SignSet { All, Even, None };

std::uint64_t structured_order(PermSet perms, SignSet signs, int m) {
  std::uint64_t a = perms == PermSet::All ? factorial(m) : perms == PermSet::Even ? (m < 2 ? 1 : factorial(m) / 2) : 1;
  std::uint64_t b = signs == SignSet::All ? (std::uint64_t{1} << m) : signs == SignSet::Even ? (m == 0 ? 1 : std::uint64_t{1} << (m - 1)) : 1;
  return a * b;
}

bool perm_even(const std::vector<int>& perm) {
  const CycleType t = permutation_cycle_type(perm);
  return (t.total() - static_cast<int>(t.parts().size())) % 2 == 0;
}

// Visits (perm, sign mask) pairs; bit i of the mask set means eps(i) = -1.
void for_each_structured(PermSet perms, SignSet signs, int m,
                         const std::function<void(const std::vector<int>&, std::uint32_t)>& visit) {
  std::vector<int> perm(static_cast<std::size_t>(m));
  std::iota(perm.begin(), perm.end(), 0);
  const std::uint32_t mask_end = signs == SignSet::None ? 1u : (1u << m);
  do {
    if (perms == PermSet::Even && !perm_even(perm)) continue;
    for (std::uint32_t mask = 0; mask < mask_end; ++mask) {
      if (signs == SignSet::Even && std::popcount(mask) % 2 != 0) continue;
      visit(perm, mask);
    }
  } while (perms != PermSet::Identity && std::next_permutation(perm.begin(), perm.end()));
}

SignedPerm from_mask(const std::vector<int>& perm, std::uint32_t mask) {
  std::vector<int> signs(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) signs[i] = (mask >> i) & 1u ? -1 : 1;
  return SignedPerm(perm, std::move(signs));
}

std::optional<std::pair<PermSet, SignSet>> structure_of(GroupKind kind) {
  switch (kind) {
    case GroupKind::Sm:
      return std::pair{PermSet::All, SignSet::None};
    case GroupKind::Am:
      return std::pair{PermSet::Even, SignSet::None};
    case GroupKind::Em:
      return std::pair{PermSet::Identity, SignSet::All};
    case GroupKind::Em0:
      return std::pair{PermSet::Identity, SignSet::Even};
    case GroupKind::WDm:
      return std::pair{PermSet::All, SignSet::Even};
    default:
      return std::nullopt;
  }
}

std::string key_of(const SignedPerm& g) {
  std::string key(static_cast<std::size_t>(g.m()), '\0');
  for (int i = 0; i < g.m(); ++i) {
    key[static_cast<std::size_t>(i)] = static_cast<char>(2 * g.perm()[static_cast<std::size_t>(i)] + (g.signs()[static_cast<std::size_t>(i)] < 0));
  }
  return key;
}

// Breadth-first closure under right multiplication by generators.
std::vector<SignedPerm> closure(const std::vector<SignedPerm>& gens, int m, std::uint64_t budget) {
  std::vector<SignedPerm> elements{SignedPerm::identity(m)};
  std::unordered_set<std::string> seen{key_of(elements.front())};
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& g : gens) {
      SignedPerm next = elements[i] * g;
      if (seen.insert(key_of(next)).second) {
        if (elements.size() >= budget) throw BudgetExceeded("group exceeds enumeration budget");
        elements.push_back(std::move(next));
      }
    }
  }
  return elements;
}

}  // namespace

void for_each_element(const GroupDescriptor& group, const std::function<void(const SignedPerm&)>& visit,
                      std::uint64_t budget) {
  const int m = group.m();
  if (auto structure = structure_of(group.kind())) {
    if (structured_order(structure->first, structure->second, m) > budget) {
      throw BudgetExceeded(group.name() + " exceeds enumeration budget");
    }
    for_each_structured(structure->first, structure->second, m,
                        [&](const std::vector<int>& perm, std::uint32_t mask) { visit(from_mask(perm, mask)); });
    return;
  }
  if (group.kind() == GroupKind::TwoM_G) {
    std::vector<SignedPerm> g_gens;
    for (const auto& g : group.generators()) {
      if (g.sign_product() == 1 && std::all_of(g.signs().begin(), g.signs().end(), [](int e) { return e == 1; })) {
        g_gens.push_back(g);
      }
    }
    const std::uint64_t signs = std::uint64_t{1} << m;
    const auto base = closure(g_gens, m, std::max<std::uint64_t>(1, budget / signs));
    if (base.size() * signs > budget) throw BudgetExceeded(group.name() + " exceeds enumeration budget");
    for (const auto& s : base) {
      for (std::uint32_t mask = 0; mask < signs; ++mask) visit(from_mask(s.perm(), mask));
    }
    return;
  }
  for (const auto& g : closure(group.generators(), m, budget)) visit(g);
}

std::uint64_t group_order(const GroupDescriptor& group, std::uint64_t budget) {
  if (auto order = group.known_order()) return *order;
  std::uint64_t count = 0;
  for_each_element(group, [&](const SignedPerm&) { ++count; }, budget);
  return count;
}

Census census(const GroupDescriptor& group, std::uint64_t budget) {
  Census out;
  const int m = group.m();
  if (auto structure = structure_of(group.kind())) {
    if (structured_order(structure->first, structure->second, m) > budget) {
      throw BudgetExceeded(group.name() + " exceeds enumeration budget");
    }
    // Per permutation, the induced type only depends on the parity of the
    // sign mask restricted to each cycle.
    std::map<std::vector<int>, std::uint64_t> raw;
    std::vector<int> perm_cache;
    std::vector<std::pair<int, std::uint32_t>> cycle_masks;
    std::vector<int> lengths;
    for_each_structured(structure->first, structure->second, m, [&](const std::vector<int>& perm, std::uint32_t mask) {
      if (perm != perm_cache) {
        perm_cache = perm;
        cycle_masks.clear();
        for (const auto& cycle : cycles_of(perm)) {
          std::uint32_t bits = 0;
          for (int i : cycle) bits |= 1u << i;
          cycle_masks.emplace_back(static_cast<int>(cycle.size()), bits);
        }
      }
      lengths.clear();
      for (const auto& [len, bits] : cycle_masks) {
        if (std::popcount(mask & bits) % 2 == 0) {
          lengths.push_back(len);
          lengths.push_back(len);
        } else {
          lengths.push_back(2 * len);
        }
      }
      std::sort(lengths.begin(), lengths.end());
      ++raw[lengths];
    });
    for (auto& [parts, count] : raw) out[CycleType(parts)] += count;
    return out;
  }
  for_each_element(group, [&](const SignedPerm& g) { ++out[induced_cycle_type(g)]; }, budget);
  return out;
}

// ---------------------------------------------------------------------------
// Orbits and stabilizers

std::vector<std::vector<int>> orbits(const std::vector<SignedPerm>& gens, RootSet set, int m) {
  const int n = root_set_size(set, m);
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (const auto& g : gens) {
    if (g.m() != m) throw std::invalid_argument("orbits: generator has wrong m");
    for (int x = 0; x < n; ++x) {
      const int a = find(x);
      const int b = find(act_on(g, set, x));
      if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
  }
  std::map<int, std::vector<int>> groups;
  for (int x = 0; x < n; ++x) groups[find(x)].push_back(x);
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

std::vector<SignedPerm> stabilizer_generators(const std::vector<SignedPerm>& gens, RootSet set, int m, int point) {
  const int n = root_set_size(set, m);
  std::vector<std::optional<SignedPerm>> transversal(static_cast<std::size_t>(n));
  transversal[static_cast<std::size_t>(point)] = SignedPerm::identity(m);
  std::vector<int> queue{point};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const int y = queue[i];
    for (const auto& g : gens) {
      const int z = act_on(g, set, y);
      if (!transversal[static_cast<std::size_t>(z)]) {
        transversal[static_cast<std::size_t>(z)] = g * *transversal[static_cast<std::size_t>(y)];
        queue.push_back(z);
      }
    }
  }
  std::set<SignedPerm> out;
  for (int y : queue) {
    for (const auto& g : gens) {
      const int z = act_on(g, set, y);
      SignedPerm s = transversal[static_cast<std::size_t>(z)]->inverse() * g * *transversal[static_cast<std::size_t>(y)];
      if (!s.is_identity()) out.insert(std::move(s));
    }
  }
  return {out.begin(), out.end()};
}

int transitivity_degree(const std::vector<SignedPerm>& gens, RootSet set, int m) {
  const int n = root_set_size(set, m);
  if (n == 0 || orbits(gens, set, m).size() != 1) return 0;
  if (n == 1) return 1;
  const auto stab = stabilizer_generators(gens, set, m, 0);
  // 2-transitive iff the point stabilizer is transitive on the other points.
  return orbits(stab, set, m).size() == 2 ? 2 : 1;
}

bool sm_normal_index_condition(int m) {
  if (m < 5) throw std::invalid_argument("sm_normal_index_condition requires m >= 5");
  // Normal subgroups of S_m for m >= 5 are 1, A_m, S_m with indices m!, 2, 1;
  // m! > m, so only index 2 can divide m.
  return m % 2 != 0;
}

SmCertificate sm_certificate(const std::vector<CycleType>& types, bool disc_is_square, bool irreducible, int m) {
  SmCertificate out;
  if (!irreducible) {
    out.reason = "irreducibility not established";
    return out;
  }
  if (disc_is_square) {
    out.reason = "square discriminant: group may lie in A_m";
    return out;
  }
  for (const auto& type : types) {
    if (type.total() != m) throw std::invalid_argument("sm_certificate: cycle type of wrong degree");
    for (int len : type.parts()) {
      if (2 * len > m && len < m - 2 && is_prime_u32(static_cast<std::uint32_t>(len))) {
        out.is_sm = true;
        out.jordan_prime = len;
        out.reason = "transitive, contains a " + std::to_string(len) + "-cycle, non-square discriminant";
        return out;
      }
    }
  }
  out.reason = "no prime cycle of length in (m/2, m-2) observed";
  return out;
}

}  // namespace prym
