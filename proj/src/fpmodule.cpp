#include "prym/fpmodule.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>

namespace prym {

FpMatrix::FpMatrix(std::uint32_t p, int rows, int cols)
    : mod_(p), rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("FpMatrix: negative dimension");
}

FpMatrix FpMatrix::identity(std::uint32_t p, int n) {
  FpMatrix out(p, n, n);
  for (int i = 0; i < n; ++i) out.set(i, i, 1);
  return out;
}

void FpMatrix::set(int i, int j, std::int64_t value) {
  const auto p = static_cast<std::int64_t>(mod_.value());
  std::int64_t r = value % p;
  if (r < 0) r += p;
  data_[index(i, j)] = static_cast<std::uint32_t>(r);
}

FpMatrix operator*(const FpMatrix& a, const FpMatrix& b) {
  if (a.cols_ != b.rows_ || a.p() != b.p()) throw std::invalid_argument("FpMatrix: shape mismatch");
  FpMatrix out(a.p(), a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i) {
    for (int k = 0; k < a.cols_; ++k) {
      const std::uint32_t s = a.at(i, k);
      if (s != 0) simd::axpy(out.row(i), b.row(k), s, a.mod_);
    }
  }
  return out;
}

FpMatrix operator+(const FpMatrix& a, const FpMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || a.p() != b.p()) throw std::invalid_argument("FpMatrix: shape mismatch");
  FpMatrix out = a;
  simd::axpy(out.data_, b.data_, 1, a.mod_);
  return out;
}

FpMatrix operator-(const FpMatrix& a, const FpMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || a.p() != b.p()) throw std::invalid_argument("FpMatrix: shape mismatch");
  FpMatrix out = a;
  simd::axpy(out.data_, b.data_, a.p() - 1, a.mod_);
  return out;
}

int FpMatrix::rank() const {
  FpMatrix work = *this;
  int rank = 0;
  for (int col = 0; col < cols_ && rank < rows_; ++col) {
    int pivot = -1;
    for (int i = rank; i < rows_; ++i) {
      if (work.at(i, col) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank) {
      auto a = work.row(pivot);
      auto b = work.row(rank);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    simd::scale(work.row(rank), mod_.inv(work.at(rank, col)), mod_);
    for (int i = rank + 1; i < rows_; ++i) {
      const std::uint32_t t = work.at(i, col);
      if (t != 0) simd::axpy(work.row(i), work.row(rank), mod_.neg(t), mod_);
    }
    ++rank;
  }
  return rank;
}

nlohmann::json FpMatrix::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (int i = 0; i < rows_; ++i) {
    auto r = row(i);
    out.push_back(std::vector<std::uint32_t>(r.begin(), r.end()));
  }
  return out;
}

// ---------------------------------------------------------------------------

int FpSpace::dim() const {
  switch (kind) {
    case SpaceKind::FullRh:
    case SpaceKind::Vf:
      return 2 * m;
    case SpaceKind::VfMinus:
    case SpaceKind::VfPlus:
      return m;
    case SpaceKind::WhPlus0:
      return m - 1;
    case SpaceKind::Constants:
      return 1;
  }
  return 0;
}

std::vector<std::string> FpSpace::basis_labels() const {
  std::vector<std::string> out;
  const std::string last = "beta_" + std::to_string(m);
  for (int i = 1; i <= dim(); ++i) {
    const std::string b = "beta_" + std::to_string(i);
    switch (kind) {
      case SpaceKind::FullRh:
      case SpaceKind::Vf:
        out.push_back(label_name(RootSet::H, m, i - 1));
        break;
      case SpaceKind::VfMinus:
        out.push_back("[+" + b + "] - [-" + b + "]");
        break;
      case SpaceKind::VfPlus:
        out.push_back("[+" + b + "] + [-" + b + "]");
        break;
      case SpaceKind::WhPlus0:
        out.push_back("[+-" + b + "] - [+-" + last + "]");
        break;
      case SpaceKind::Constants:
        out.push_back("1");
        break;
    }
  }
  return out;
}

std::string FpSpace::name() const {
  switch (kind) {
    case SpaceKind::FullRh:
      return "F_p^{R_h}";
    case SpaceKind::Vf:
      return "V_f";
    case SpaceKind::VfMinus:
      return "V_f^-";
    case SpaceKind::VfPlus:
      return "V_f^+";
    case SpaceKind::WhPlus0:
      return "W_h^{+,0}";
    case SpaceKind::Constants:
      return "F_p.1";
  }
  return "?";
}

FpMatrix action_matrix(const SignedPerm& g, const FpSpace& space) {
  if (g.m() != space.m) throw std::invalid_argument("action_matrix: dimension mismatch");
  const int d = space.dim();
  const int m = space.m;
  FpMatrix out(space.p, d, d);
  switch (space.kind) {
    case SpaceKind::FullRh:
    case SpaceKind::Vf:
      for (int x = 0; x < d; ++x) out.set(g.act(x), x, 1);
      break;
    case SpaceKind::VfMinus:
      for (int i = 0; i < m; ++i) out.set(g.perm()[static_cast<std::size_t>(i)], i, g.signs()[static_cast<std::size_t>(i)]);
      break;
    case SpaceKind::VfPlus:
      for (int i = 0; i < m; ++i) out.set(g.perm()[static_cast<std::size_t>(i)], i, 1);
      break;
    case SpaceKind::WhPlus0: {
      const int anchor = g.perm()[static_cast<std::size_t>(m - 1)];
      for (int j = 0; j < d; ++j) {
        const int target = g.perm()[static_cast<std::size_t>(j)];
        if (target != m - 1) out.set(target, j, out.at(target, j) + 1);
        if (anchor != m - 1) out.set(anchor, j, static_cast<std::int64_t>(out.at(anchor, j)) - 1);
      }
      break;
    }
    case SpaceKind::Constants:
      out.set(0, 0, 1);
      break;
  }
  return out;
}

FpMatrix d2_operator(const FpSpace& space) {
  const int d = space.dim();
  FpMatrix out(space.p, d, d);
  switch (space.kind) {
    case SpaceKind::FullRh:
    case SpaceKind::Vf:
      for (int x = 0; x < d; ++x) out.set(x ^ 1, x, 1);
      break;
    case SpaceKind::VfMinus:
      for (int i = 0; i < d; ++i) out.set(i, i, -1);
      break;
    case SpaceKind::VfPlus:
    case SpaceKind::WhPlus0:
    case SpaceKind::Constants:
      out = FpMatrix::identity(space.p, d);
      break;
  }
  return out;
}

std::pair<int, int> d2_eigenspace_dims(const FpSpace& space) {
  const FpMatrix d2 = d2_operator(space);
  const FpMatrix id = FpMatrix::identity(space.p, space.dim());
  return {(d2 - id).nullity(), (d2 + id).nullity()};
}

int commutant_dim(const std::vector<SignedPerm>& gens, const FpSpace& space) {
  const int d = space.dim();
  const int unknowns = d * d;
  if (gens.empty()) return unknowns;
  // X A - A X = 0 for each generator; X_{ik} is unknown i*d + k.
  FpMatrix system(space.p, static_cast<int>(gens.size()) * unknowns, unknowns);
  int row = 0;
  for (const auto& g : gens) {
    const FpMatrix a = action_matrix(g, space);
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j, ++row) {
        for (int k = 0; k < d; ++k) {
          if (a.at(k, j) != 0) system.set(row, i * d + k, static_cast<std::int64_t>(system.at(row, i * d + k)) + a.at(k, j));
          if (a.at(i, k) != 0) system.set(row, k * d + j, static_cast<std::int64_t>(system.at(row, k * d + j)) - a.at(i, k));
        }
      }
    }
  }
  return system.nullity();
}

int orbit_count_formula(const std::vector<SignedPerm>& gens, int m, int point) {
  const auto stab = stabilizer_generators(gens, RootSet::H, m, point);
  return static_cast<int>(orbits(stab, RootSet::H, m).size());
}

namespace {

std::uint32_t permute_bits(std::uint32_t v, const std::vector<int>& perm) {
  std::uint32_t out = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if ((v >> i) & 1u) out |= 1u << perm[i];
  }
  return out;
}

// Dimension of the F_2[G]-submodule generated by v.
int spin_dimension(std::uint32_t v, const std::vector<std::vector<int>>& gens) {
  // Echelon basis with distinct leading bits, kept in decreasing order.
  std::vector<std::uint32_t> basis;
  auto insert = [&](std::uint32_t x) {
    for (std::uint32_t b : basis) x = std::min(x, x ^ b);
    if (x == 0) return false;
    basis.insert(std::upper_bound(basis.begin(), basis.end(), x, std::greater<>()), x);
    return true;
  };
  std::vector<std::uint32_t> queue;
  if (insert(v)) queue.push_back(v);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto& g : gens) {
      const std::uint32_t w = permute_bits(queue[i], g);
      if (insert(w)) queue.push_back(w);
    }
  }
  return static_cast<int>(basis.size());
}

}  // namespace

bool heart_f2_irreducible(int m, GroupKind group) {
  if (m % 2 == 0) throw std::invalid_argument("heart_f2_irreducible: m must be odd");
  if (m < 3 || m > 31) throw std::invalid_argument("heart_f2_irreducible: requires 3 <= m <= 31");
  if (group != GroupKind::Am && group != GroupKind::Sm) throw std::invalid_argument("heart_f2_irreducible: group must be A_m or S_m");
  const GroupDescriptor desc = group == GroupKind::Am ? GroupDescriptor::alternating(m) : GroupDescriptor::symmetric(m);
  std::vector<std::vector<int>> gens;
  for (const auto& g : desc.generators()) gens.push_back(g.perm());
  const int full = m - 1;
  if (m <= kHeartExhaustiveLimit) {
    for (std::uint32_t v = 1; v < (1u << m); ++v) {
      if (std::popcount(v) % 2 != 0) continue;
      if (spin_dimension(v, gens) != full) return false;
    }
    return true;
  }
  // A_m (m >= 5) is transitive on k-subsets, so one vector per weight suffices.
  for (int k = 2; k < m; k += 2) {
    if (spin_dimension((1u << k) - 1, gens) != full) return false;
  }
  return true;
}

bool lambda_rank_check(int p, int m) {
  const mpq_class dim_prym(m * (p - 1), 2);
  const mpq_class rank = 2 * dim_prym / (p - 1);
  const FpSpace odd{SpaceKind::VfMinus, m, static_cast<std::uint32_t>(p)};
  return rank == m && odd.dim() == m;
}

}  // namespace prym
