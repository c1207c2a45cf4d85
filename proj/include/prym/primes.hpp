#pragma once

#include <cstdint>
#include <iterator>

namespace prym {

/// Primes in [lo, hi], generated by trial division.
class PrimeRange {
 public:
  class iterator {
   public:
    using value_type = std::uint32_t;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    iterator() = default;
    iterator(std::uint32_t current, std::uint32_t hi) : current_(current), hi_(hi) { settle(); }
    std::uint32_t operator*() const { return current_; }
    iterator& operator++() {
      ++current_;
      settle();
      return *this;
    }
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& a, const iterator& b) { return a.current_ == b.current_; }

   private:
    void settle();
    std::uint32_t current_ = 0;
    std::uint32_t hi_ = 0;
  };

  PrimeRange(std::uint32_t lo, std::uint32_t hi) : lo_(lo), hi_(hi) {}
  iterator begin() const { return {lo_, hi_}; }
  iterator end() const { return {hi_ + 1, hi_}; }

 private:
  std::uint32_t lo_;
  std::uint32_t hi_;
};

bool is_prime_u32(std::uint32_t n);

inline void PrimeRange::iterator::settle() {
  while (current_ <= hi_ && !is_prime_u32(current_)) ++current_;
  if (current_ > hi_) current_ = hi_ + 1;
}

inline bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint32_t d = 3; static_cast<std::uint64_t>(d) * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace prym
