#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "prym/signedperm.hpp"
#include "prym/simd/kernels.hpp"

namespace prym {

/// Dense matrix over F_p, row-major, entries in [0, p).
class FpMatrix {
 public:
  FpMatrix(std::uint32_t p, int rows, int cols);
  static FpMatrix identity(std::uint32_t p, int n);

  std::uint32_t p() const { return mod_.value(); }
  const simd::Modulus& modulus() const { return mod_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  std::uint32_t at(int i, int j) const { return data_[index(i, j)]; }
  void set(int i, int j, std::int64_t value);
  std::span<std::uint32_t> row(int i) { return {data_.data() + index(i, 0), static_cast<std::size_t>(cols_)}; }
  std::span<const std::uint32_t> row(int i) const {
    return {data_.data() + index(i, 0), static_cast<std::size_t>(cols_)};
  }

  friend FpMatrix operator*(const FpMatrix& a, const FpMatrix& b);
  friend FpMatrix operator+(const FpMatrix& a, const FpMatrix& b);
  friend FpMatrix operator-(const FpMatrix& a, const FpMatrix& b);
  friend bool operator==(const FpMatrix& a, const FpMatrix& b) {
    return a.p() == b.p() && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  /// Rank by Gaussian elimination on a copy.
  int rank() const;
  int nullity() const { return cols_ - rank(); }

  /// Row-major nested integer lists.
  nlohmann::json to_json() const;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j);
  }
  simd::Modulus mod_;
  int rows_;
  int cols_;
  std::vector<std::uint32_t> data_;
};

/// Function spaces on the roots of f = x u(x^2).
///   FullRh    all functions on R_h (dim 2m), basis e_alpha
///   Vf        sum-zero functions on R_f; restriction to R_h identifies it
///             with FullRh, so it shares that basis
///   VfMinus   odd functions (dim m), basis e_{+beta_i} - e_{-beta_i}
///   VfPlus    even sum-zero functions on R_f (dim m), basis e_{+beta_i} + e_{-beta_i}
///   WhPlus0   even functions on R_h with zero sum (dim m-1), basis
///             (e_{+beta_i} + e_{-beta_i}) - (e_{+beta_m} + e_{-beta_m})
///   Constants F_p . 1 on R_h (dim 1)
enum class SpaceKind { FullRh, Vf, VfMinus, VfPlus, WhPlus0, Constants };

struct FpSpace {
  SpaceKind kind;
  int m;
  std::uint32_t p;

  int dim() const;
  std::vector<std::string> basis_labels() const;
  std::string name() const;
};

/// Matrix of phi -> phi o g^{-1}; multiplicative in g.
FpMatrix action_matrix(const SignedPerm& g, const FpSpace& space);

/// The involution phi(alpha) -> phi(-alpha).
FpMatrix d2_operator(const FpSpace& space);

/// (dim ker(D2 - 1), dim ker(D2 + 1)).
std::pair<int, int> d2_eigenspace_dims(const FpSpace& space);

/// dim over F_p of the matrices commuting with every generator's action.
int commutant_dim(const std::vector<SignedPerm>& gens, const FpSpace& space);

/// Number of orbits on R_h of the stabilizer of the given root.
int orbit_count_formula(const std::vector<SignedPerm>& gens, int m, int point = 0);

inline constexpr int kHeartExhaustiveLimit = 13;

/// Irreducibility over F_2 of the sum-zero subspace of F_2^m under A_m or
/// S_m, decided by spinning every nonzero vector for m up to
/// kHeartExhaustiveLimit and one vector per even weight beyond. m odd,
/// 3 <= m <= 31.
bool heart_f2_irreducible(int m, GroupKind group);

/// 2 (m(p-1)/2) / (p-1) == m == dim V_f^-.
bool lambda_rank_check(int p, int m);

}  // namespace prym
