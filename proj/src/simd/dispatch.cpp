#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "prym/simd/kernels.hpp"

namespace prym::simd {

Modulus::Modulus(std::uint32_t value) : value_(value), inverse_(1.0 / static_cast<double>(value)) {
  if (value < 2 || value >= kMaxValue) {
    throw std::invalid_argument("modulus out of range: " + std::to_string(value));
  }
}

std::uint32_t Modulus::pow(std::uint32_t a, std::uint64_t e) const {
  std::uint32_t result = 1 % value_;
  std::uint32_t base = a % value_;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::uint32_t Modulus::inv(std::uint32_t a) const {
  if (a % value_ == 0) throw std::domain_error("inverse of zero");
  return pow(a, value_ - 2);
}

std::string_view isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(PRYM_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

const KernelTable& kernels(Isa isa) {
#if defined(PRYM_HAVE_AVX2)
  if (isa == Isa::avx2) {
    if (!isa_available(Isa::avx2)) throw std::runtime_error("AVX2 not supported on this CPU");
    return detail::avx2_table();
  }
#else
  if (isa == Isa::avx2) throw std::runtime_error("built without AVX2 kernels");
#endif
  return detail::scalar_table();
}

namespace {

Isa detect() {
  if (const char* env = std::getenv("PRYM_ISA"); env != nullptr && std::string(env) == "scalar") {
    return Isa::scalar;
  }
  return isa_available(Isa::avx2) ? Isa::avx2 : Isa::scalar;
}

std::atomic<const KernelTable*>& active_table() {
  static std::atomic<const KernelTable*> table{&kernels(detect())};
  return table;
}

std::atomic<Isa>& active() {
  static std::atomic<Isa> isa{detect()};
  return isa;
}

}  // namespace

Isa active_isa() { return active().load(std::memory_order_relaxed); }

const KernelTable& kernels() { return *active_table().load(std::memory_order_relaxed); }

void force_isa(Isa isa) {
  const KernelTable& table = kernels(isa);
  active().store(isa);
  active_table().store(&table);
}

}  // namespace prym::simd
