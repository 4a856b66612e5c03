// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GSVAL_SUBSET_H_
#define GSVAL_SUBSET_H_

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace gsval {

// A set of items of a small ground set; bit i of the mask is item i.
class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(uint32_t mask) : mask_(mask) {}

  static constexpr Subset Of(std::initializer_list<int> items) {
    uint32_t mask = 0;
    for (int i : items) mask |= uint32_t{1} << i;
    return Subset(mask);
  }
  static constexpr Subset Full(int m) {
    return Subset(m >= 32 ? ~uint32_t{0} : (uint32_t{1} << m) - 1);
  }
  static constexpr Subset Single(int i) { return Subset(uint32_t{1} << i); }

  constexpr uint32_t mask() const { return mask_; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool contains(int i) const { return (mask_ >> i) & 1u; }
  constexpr bool IsSubsetOf(Subset other) const {
    return (mask_ & ~other.mask_) == 0;
  }
  constexpr Subset With(int i) const {
    return Subset(mask_ | (uint32_t{1} << i));
  }
  constexpr Subset Without(int i) const {
    return Subset(mask_ & ~(uint32_t{1} << i));
  }
  // Lowest item in the set; undefined for the empty set.
  constexpr int First() const { return std::countr_zero(mask_); }

  std::vector<int> Items() const {
    std::vector<int> items;
    for (uint32_t m = mask_; m != 0; m &= m - 1) {
      items.push_back(std::countr_zero(m));
    }
    return items;
  }

  friend constexpr Subset operator|(Subset a, Subset b) {
    return Subset(a.mask_ | b.mask_);
  }
  friend constexpr Subset operator&(Subset a, Subset b) {
    return Subset(a.mask_ & b.mask_);
  }
  // Set difference.
  friend constexpr Subset operator-(Subset a, Subset b) {
    return Subset(a.mask_ & ~b.mask_);
  }
  friend constexpr auto operator<=>(Subset, Subset) = default;

 private:
  uint32_t mask_ = 0;
};

// Calls fn(sub) for every subset of `set`, including the empty set and `set`
// itself, in increasing mask order.
template <typename Fn>
void ForEachSubset(Subset set, Fn&& fn) {
  const uint32_t full = set.mask();
  uint32_t sub = 0;
  while (true) {
    fn(Subset(sub));
    if (sub == full) break;
    sub = (sub - full) & full;
  }
}

}  // namespace gsval

#endif  // GSVAL_SUBSET_H_
