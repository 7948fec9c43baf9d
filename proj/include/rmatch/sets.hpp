#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

namespace rmatch {

// Element-id sets are kept sorted ascending and duplicate free.
using ElemSet = std::vector<int>;

inline bool is_canonical_set(std::span<const int> s) {
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s[i - 1] >= s[i]) return false;
  return true;
}

inline ElemSet canonical_set(std::vector<int> s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

inline bool set_contains(std::span<const int> s, int e) {
  return std::binary_search(s.begin(), s.end(), e);
}

inline bool is_subset(std::span<const int> small, std::span<const int> big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

inline ElemSet set_union(std::span<const int> a, std::span<const int> b) {
  ElemSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

inline ElemSet set_intersection(std::span<const int> a,
                                std::span<const int> b) {
  ElemSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

inline ElemSet set_difference(std::span<const int> a, std::span<const int> b) {
  ElemSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

inline ElemSet set_symmetric_difference(std::span<const int> a,
                                        std::span<const int> b) {
  ElemSet out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                std::back_inserter(out));
  return out;
}

inline std::uint64_t set_to_mask(std::span<const int> s) {
  std::uint64_t m = 0;
  for (int e : s) m |= std::uint64_t(1) << e;
  return m;
}

inline ElemSet mask_to_set(std::uint64_t m) {
  ElemSet s;
  for (int i = 0; m != 0; ++i, m >>= 1)
    if (m & 1) s.push_back(i);
  return s;
}

}  // namespace rmatch
