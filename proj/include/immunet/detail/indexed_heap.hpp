// Copyright 2026 The Immunet Authors.
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

#ifndef IMMUNET_DETAIL_INDEXED_HEAP_HPP
#define IMMUNET_DETAIL_INDEXED_HEAP_HPP

#include <cassert>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace immunet::detail {

// Binary max-heap over ids 0..n-1 with position tracking, so key updates and
// removals sift in place (O(log n), O(n) total space). Ordering is larger key
// first, then smaller id, which makes extraction order fully deterministic.
class IndexedMaxHeap {
 public:
  IndexedMaxHeap() = default;

  explicit IndexedMaxHeap(std::span<const std::int64_t> keys)
      : keys_(keys.begin(), keys.end()),
        heap_(keys.size()),
        pos_(keys.size()) {
    for (std::uint32_t i = 0; i < heap_.size(); ++i) {
      heap_[i] = i;
      pos_[i] = i;
    }
    if (heap_.size() > 1) {
      for (std::size_t i = heap_.size() / 2; i-- > 0;) sift_down(i);
    }
  }

  bool empty() const { return heap_.empty(); }
  std::size_t size() const { return heap_.size(); }

  std::uint32_t top() const {
    assert(!heap_.empty());
    return heap_[0];
  }

  bool contains(std::uint32_t id) const {
    return id < pos_.size() && pos_[id] != kAbsent;
  }

  void update(std::uint32_t id, std::int64_t key) {
    assert(contains(id));
    const std::int64_t old = keys_[id];
    keys_[id] = key;
    if (key > old) {
      sift_up(pos_[id]);
    } else if (key < old) {
      sift_down(pos_[id]);
    }
  }

  void remove(std::uint32_t id) {
    assert(contains(id));
    const std::size_t i = pos_[id];
    const std::uint32_t last = heap_.back();
    heap_.pop_back();
    pos_[id] = kAbsent;
    if (i < heap_.size()) {
      place(i, last);
      sift_down(i);
      sift_up(pos_[last]);
    }
  }

 private:
  static constexpr std::size_t kAbsent = std::numeric_limits<std::size_t>::max();

  bool before(std::uint32_t a, std::uint32_t b) const {
    return keys_[a] > keys_[b] || (keys_[a] == keys_[b] && a < b);
  }

  void place(std::size_t i, std::uint32_t id) {
    heap_[i] = id;
    pos_[id] = i;
  }

  void sift_up(std::size_t i) {
    const std::uint32_t id = heap_[i];
    while (i > 0) {
      const std::size_t parent = (i - 1) / 2;
      if (!before(id, heap_[parent])) break;
      place(i, heap_[parent]);
      i = parent;
    }
    place(i, id);
  }

  void sift_down(std::size_t i) {
    const std::uint32_t id = heap_[i];
    const std::size_t n = heap_.size();
    while (true) {
      std::size_t best = i;
      std::uint32_t best_id = id;
      const std::size_t l = 2 * i + 1;
      const std::size_t r = 2 * i + 2;
      if (l < n && before(heap_[l], best_id)) {
        best = l;
        best_id = heap_[l];
      }
      if (r < n && before(heap_[r], best_id)) {
        best = r;
        best_id = heap_[r];
      }
      if (best == i) break;
      place(i, heap_[best]);
      i = best;
    }
    place(i, id);
  }

  std::vector<std::int64_t> keys_;
  std::vector<std::uint32_t> heap_;
  std::vector<std::size_t> pos_;
};

}  // namespace immunet::detail

#endif  // IMMUNET_DETAIL_INDEXED_HEAP_HPP
