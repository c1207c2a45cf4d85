#include <doctest.h>

#include <cstdint>
#include <random>
#include <vector>

#include "prym/simd/kernels.hpp"

using namespace prym::simd;

namespace {

const std::uint32_t kModuli[] = {2, 3, 5, 7, 65537, 1000003, 33554393, 67108859};

std::vector<std::uint32_t> random_residues(std::mt19937& rng, std::size_t n, std::uint32_t p) {
  std::uniform_int_distribution<std::uint32_t> dist(0, p - 1);
  std::vector<std::uint32_t> v(n);
  for (auto& x : v) x = dist(rng);
  return v;
}

}  // namespace

TEST_CASE("Modulus arithmetic agrees with 64-bit reference") {
  std::mt19937 rng(7);
  for (std::uint32_t p : kModuli) {
    const Modulus mod(p);
    for (int trial = 0; trial < 200; ++trial) {
      const auto v = random_residues(rng, 2, p);
      const std::uint64_t a = v[0], b = v[1];
      CHECK(mod.add(v[0], v[1]) == (a + b) % p);
      CHECK(mod.sub(v[0], v[1]) == (a + p - b) % p);
      CHECK(mod.mul(v[0], v[1]) == a * b % p);
      CHECK(mod.add(v[0], mod.neg(v[0])) == 0);
      if (v[0] != 0) CHECK(mod.mul(v[0], mod.inv(v[0])) == 1);
    }
    CHECK(mod.pow(2, p - 1) == (p == 2 ? 0u : 1u));
  }
}

TEST_CASE("Modulus rejects out-of-range values") {
  CHECK_THROWS(Modulus(0));
  CHECK_THROWS(Modulus(1));
  CHECK_THROWS(Modulus(Modulus::kMaxValue + 1));
}

TEST_CASE("scalar kernels match the naive definition") {
  std::mt19937 rng(11);
  const auto& k = kernels(Isa::scalar);
  for (std::uint32_t p : kModuli) {
    const Modulus mod(p);
    for (std::size_t n : {0, 1, 5, 64}) {
      auto dst = random_residues(rng, n, p);
      const auto src = random_residues(rng, n, p);
      const std::uint32_t s = random_residues(rng, 1, p)[0];
      auto expect = dst;
      std::uint64_t dot = 0;
      for (std::size_t i = 0; i < n; ++i) {
        expect[i] = static_cast<std::uint32_t>((dst[i] + static_cast<std::uint64_t>(s) * src[i]) % p);
        dot = (dot + static_cast<std::uint64_t>(dst[i]) * src[i]) % p;
      }
      CHECK(k.dot(dst.data(), src.data(), n, mod) == dot);
      k.axpy(dst.data(), src.data(), s, n, mod);
      CHECK(dst == expect);
      auto scaled = src;
      k.scale(scaled.data(), s, n, mod);
      for (std::size_t i = 0; i < n; ++i) CHECK(scaled[i] == static_cast<std::uint64_t>(s) * src[i] % p);
    }
  }
}

TEST_CASE("AVX2 kernels are bit-identical to the scalar reference") {
  if (!isa_available(Isa::avx2)) {
    MESSAGE("AVX2 not available on this machine; equivalence not exercised");
    return;
  }
  std::mt19937 rng(13);
  const auto& ref = kernels(Isa::scalar);
  const auto& vec = kernels(Isa::avx2);
  for (std::uint32_t p : kModuli) {
    const Modulus mod(p);
    for (std::size_t n : {0, 1, 3, 4, 7, 8, 9, 15, 16, 17, 31, 100, 1000, 20000}) {
      const auto a = random_residues(rng, n, p);
      const auto b = random_residues(rng, n, p);
      for (std::uint32_t s : {0u, 1u, p - 1, random_residues(rng, 1, p)[0]}) {
        auto x = a;
        auto y = a;
        ref.axpy(x.data(), b.data(), s, n, mod);
        vec.axpy(y.data(), b.data(), s, n, mod);
        CHECK(x == y);
        x = a;
        y = a;
        ref.scale(x.data(), s, n, mod);
        vec.scale(y.data(), s, n, mod);
        CHECK(x == y);
      }
      CHECK(ref.dot(a.data(), b.data(), n, mod) == vec.dot(a.data(), b.data(), n, mod));
    }
  }
}

TEST_CASE("AVX2 kernels handle extreme residues") {
  if (!isa_available(Isa::avx2)) return;
  const auto& ref = kernels(Isa::scalar);
  const auto& vec = kernels(Isa::avx2);
  for (std::uint32_t p : kModuli) {
    const Modulus mod(p);
    std::vector<std::uint32_t> a(37, p - 1), b(37, p - 1);
    auto x = a, y = a;
    ref.axpy(x.data(), b.data(), p - 1, a.size(), mod);
    vec.axpy(y.data(), b.data(), p - 1, a.size(), mod);
    CHECK(x == y);
    CHECK(ref.dot(a.data(), b.data(), a.size(), mod) == vec.dot(a.data(), b.data(), a.size(), mod));
  }
}

TEST_CASE("dispatch reports a usable ISA") {
  CHECK(isa_available(Isa::scalar));
  CHECK(isa_available(active_isa()));
  CHECK(!isa_name(active_isa()).empty());
  const Modulus mod(101);
  std::vector<std::uint32_t> a{1, 2, 3}, b{4, 5, 6};
  CHECK(dot(a, b, mod) == 32);
}
