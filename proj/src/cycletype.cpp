#include "prym/cycletype.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace prym {

CycleType::CycleType(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int part : parts_) {
    if (part <= 0) throw std::invalid_argument("cycle lengths must be positive");
  }
  std::sort(parts_.begin(), parts_.end());
}

int CycleType::total() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool CycleType::contains(int length) const { return std::binary_search(parts_.begin(), parts_.end(), length); }

std::size_t CycleType::count(int length) const {
  auto [lo, hi] = std::equal_range(parts_.begin(), parts_.end(), length);
  return static_cast<std::size_t>(hi - lo);
}

std::string CycleType::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out + "]";
}

CycleType CycleType::parse(const std::string& text) {
  std::string body = text;
  std::erase_if(body, [](char ch) { return ch == ' ' || ch == '[' || ch == ']'; });
  std::vector<int> parts;
  std::stringstream stream(body);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (!item.empty()) parts.push_back(std::stoi(item));
  }
  return CycleType(std::move(parts));
}

}  // namespace prym
