//
// Copyright 2026 The stickynoise Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef STICKY_BITSET_HPP_
#define STICKY_BITSET_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace sticky {

// Fixed-size set of row indices.
class RowBitset {
 public:
  RowBitset() = default;
  explicit RowBitset(std::size_t size, bool filled = false)
      : size_(size), words_((size + 63) / 64, filled ? ~uint64_t{0} : 0) {
    if (filled) trim();
  }

  std::size_t size() const { return size_; }

  void set(std::size_t i) { words_[i >> 6] |= uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

  std::size_t count() const {
    std::size_t c = 0;
    for (uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  RowBitset& operator&=(const RowBitset& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }
  RowBitset& operator|=(const RowBitset& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }
  RowBitset& and_not(const RowBitset& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
  }

  // Calls fn(row) for every member in ascending order.
  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      uint64_t bits = words_[w];
      while (bits != 0) {
        fn(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  std::size_t memory_bytes() const { return words_.size() * sizeof(uint64_t); }

 private:
  void trim() {
    if (size_ % 64 != 0 && !words_.empty()) {
      words_.back() &= (uint64_t{1} << (size_ % 64)) - 1;
    }
  }

  std::size_t size_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace sticky

#endif  // STICKY_BITSET_HPP_
