#include "prym/simd/kernels.hpp"

namespace prym::simd::detail {
namespace {

void axpy_scalar(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t s, std::size_t n,
                 const Modulus& mod) {
  const std::uint64_t p = mod.value();
  for (std::size_t i = 0; i < n; ++i) {
    dst[i] = static_cast<std::uint32_t>((dst[i] + static_cast<std::uint64_t>(s) * src[i]) % p);
  }
}

std::uint32_t dot_scalar(const std::uint32_t* a, const std::uint32_t* b, std::size_t n, const Modulus& mod) {
  const std::uint64_t p = mod.value();
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < n; ++i) {
    acc = (acc + static_cast<std::uint64_t>(a[i]) * b[i]) % p;
  }
  return static_cast<std::uint32_t>(acc);
}

void scale_scalar(std::uint32_t* dst, std::uint32_t s, std::size_t n, const Modulus& mod) {
  const std::uint64_t p = mod.value();
  for (std::size_t i = 0; i < n; ++i) {
    dst[i] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(s) * dst[i] % p);
  }
}

}  // namespace

const KernelTable& scalar_table() {
  static const KernelTable table{axpy_scalar, dot_scalar, scale_scalar};
  return table;
}

}  // namespace prym::simd::detail
