#pragma once

// Modular vector kernels used by the F_q polynomial code and the F_p linear
// algebra. Every kernel has a portable scalar reference; an AVX2 variant is
// selected at runtime when the CPU supports it. All variants must produce
// bit-identical results.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace prym::simd {

/// Odd or even prime modulus below 2^26, with a cached floating inverse used
/// by the vector paths.
class Modulus {
 public:
  static constexpr std::uint32_t kMaxValue = (1u << 26);

  explicit Modulus(std::uint32_t value);

  std::uint32_t value() const { return value_; }
  double inverse() const { return inverse_; }

  std::uint32_t reduce(std::uint64_t x) const { return static_cast<std::uint32_t>(x % value_); }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a + b;
    return s >= value_ ? s - value_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return a >= b ? a - b : a + value_ - b; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % value_);
  }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : value_ - a; }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  // Requires a != 0 and a prime modulus.
  std::uint32_t inv(std::uint32_t a) const;

 private:
  std::uint32_t value_;
  double inverse_;
};

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa);

struct KernelTable {
  // dst[i] = (dst[i] + s * src[i]) mod p, inputs already reduced.
  void (*axpy)(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t s, std::size_t n,
               const Modulus& mod);
  // sum a[i] * b[i] mod p.
  std::uint32_t (*dot)(const std::uint32_t* a, const std::uint32_t* b, std::size_t n, const Modulus& mod);
  // dst[i] = s * dst[i] mod p.
  void (*scale)(std::uint32_t* dst, std::uint32_t s, std::size_t n, const Modulus& mod);
};

bool isa_available(Isa isa);
const KernelTable& kernels(Isa isa);

/// Best available ISA, unless overridden by force_isa() or PRYM_ISA=scalar.
Isa active_isa();
const KernelTable& kernels();

/// Pins the dispatch target for the rest of the process. Throws if the ISA
/// is not available on this machine.
void force_isa(Isa isa);

inline void axpy(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t s,
                 const Modulus& mod) {
  kernels().axpy(dst.data(), src.data(), s, src.size(), mod);
}

inline std::uint32_t dot(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                         const Modulus& mod) {
  return kernels().dot(a.data(), b.data(), a.size(), mod);
}

inline void scale(std::span<std::uint32_t> dst, std::uint32_t s, const Modulus& mod) {
  kernels().scale(dst.data(), s, dst.size(), mod);
}

namespace detail {
const KernelTable& scalar_table();
#if defined(PRYM_HAVE_AVX2)
const KernelTable& avx2_table();
#endif
}  // namespace detail

}  // namespace prym::simd
