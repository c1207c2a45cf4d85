#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

namespace prym {

/// Multiset of positive integers kept sorted ascending: cycle lengths of a
/// permutation, or irreducible factor degrees of a polynomial mod q.
class CycleType {
 public:
  CycleType() = default;
  explicit CycleType(std::vector<int> parts);
  CycleType(std::initializer_list<int> parts) : CycleType(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int total() const;
  bool contains(int length) const;
  std::size_t count(int length) const;

  /// "[2,4]"
  std::string to_string() const;
  static CycleType parse(const std::string& text);

  friend auto operator<=>(const CycleType&, const CycleType&) = default;
  friend bool operator==(const CycleType&, const CycleType&) = default;

 private:
  std::vector<int> parts_;
};

}  // namespace prym
