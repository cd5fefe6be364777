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

#ifndef SUBMAX_ELEMENT_SET_HPP_
#define SUBMAX_ELEMENT_SET_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace submax {

/// Indexed universe of n elements. Element identifiers are exactly 0..n-1.
/// Labels, when present, give a human-readable name per index.
class GroundSet {
 public:
  GroundSet() = default;
  explicit GroundSet(std::size_t n) : n_(n) {}
  GroundSet(std::size_t n, std::vector<std::string> labels) : n_(n), labels_(std::move(labels)) {
    if (labels_ && labels_->size() != n_) {
      throw std::invalid_argument("GroundSet: labels must have length n");
    }
  }

  std::size_t size() const { return n_; }
  bool has_labels() const { return labels_.has_value(); }
  const std::string& label(std::size_t i) const { return (*labels_).at(i); }
  const std::optional<std::vector<std::string>>& labels() const { return labels_; }

 private:
  std::size_t n_ = 0;
  std::optional<std::vector<std::string>> labels_;
};

/// Subset of a ground set of fixed size n, stored as a dense bitset.
/// All binary operations require both operands to share the same n.
class ElementSet {
 public:
  ElementSet() = default;

  explicit ElementSet(std::size_t universe_size)
      : n_(universe_size), words_((universe_size + kWordBits - 1) / kWordBits, 0) {}

  ElementSet(std::size_t universe_size, std::initializer_list<std::size_t> elements)
      : ElementSet(universe_size) {
    for (std::size_t e : elements) add(e);
  }

  /// Builds a set from the low n bits of a mask. Only valid for n <= 64;
  /// the workhorse of exhaustive subset enumeration in tests and checkers.
  static ElementSet from_mask(std::size_t universe_size, std::uint64_t mask) {
    if (universe_size > kWordBits) {
      throw std::invalid_argument("ElementSet::from_mask: universe larger than 64");
    }
    ElementSet s(universe_size);
    if (universe_size > 0) {
      std::uint64_t keep = universe_size == kWordBits ? ~std::uint64_t{0}
                                                      : ((std::uint64_t{1} << universe_size) - 1);
      s.words_[0] = mask & keep;
    }
    return s;
  }

  static ElementSet full(std::size_t universe_size) {
    ElementSet s(universe_size);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    s.mask_tail();
    return s;
  }

  std::size_t universe_size() const { return n_; }

  bool contains(std::size_t e) const {
    check_index(e);
    return (words_[e / kWordBits] >> (e % kWordBits)) & 1U;
  }

  void add(std::size_t e) {
    check_index(e);
    words_[e / kWordBits] |= std::uint64_t{1} << (e % kWordBits);
  }

  void remove(std::size_t e) {
    check_index(e);
    words_[e / kWordBits] &= ~(std::uint64_t{1} << (e % kWordBits));
  }

  ElementSet with(std::size_t e) const {
    ElementSet s = *this;
    s.add(e);
    return s;
  }

  ElementSet without(std::size_t e) const {
    ElementSet s = *this;
    s.remove(e);
    return s;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool empty() const {
    for (std::uint64_t w : words_)
      if (w != 0) return false;
    return true;
  }

  ElementSet operator|(const ElementSet& o) const {
    check_same(o);
    ElementSet r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] |= o.words_[i];
    return r;
  }

  ElementSet operator&(const ElementSet& o) const {
    check_same(o);
    ElementSet r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
    return r;
  }

  /// Set difference (elements of *this not in o).
  ElementSet operator-(const ElementSet& o) const {
    check_same(o);
    ElementSet r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= ~o.words_[i];
    return r;
  }

  /// Complement within the universe.
  ElementSet complement() const {
    ElementSet r = *this;
    for (auto& w : r.words_) w = ~w;
    r.mask_tail();
    return r;
  }

  bool operator==(const ElementSet& o) const { return n_ == o.n_ && words_ == o.words_; }
  bool operator!=(const ElementSet& o) const { return !(*this == o); }

  bool is_subset_of(const ElementSet& o) const {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  bool intersects(const ElementSet& o) const {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  /// Elements in ascending index order.
  std::vector<std::size_t> elements() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w != 0) {
        out.push_back(wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
    return out;
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w != 0) {
        fn(wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  /// Orders sets as ascending element sequences; a proper prefix sorts
  /// before its extensions. The deterministic tie-break used by the exact
  /// solver.
  static bool lexicographic_less(const ElementSet& a, const ElementSet& b) {
    a.check_same(b);
    for (std::size_t wi = 0; wi < a.words_.size(); ++wi) {
      std::uint64_t diff = a.words_[wi] ^ b.words_[wi];
      if (diff == 0) continue;
      // Elements below the lowest differing bit are shared, so they form a
      // common sequence prefix. The owner of that bit continues with the
      // smaller element and sorts first, unless the other set has nothing
      // from here on (then it is a proper prefix and sorts first instead).
      std::uint64_t lowest = diff & (~diff + 1);
      bool in_a = (a.words_[wi] & lowest) != 0;
      const ElementSet& other = in_a ? b : a;
      bool other_has_more = (other.words_[wi] & ~(lowest - 1)) != 0;
      for (std::size_t wj = wi + 1; wj < a.words_.size() && !other_has_more; ++wj) {
        other_has_more = other.words_[wj] != 0;
      }
      return other_has_more ? in_a : !in_a;
    }
    return false;
  }

  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for_each([&](std::size_t e) {
      if (!first) out += ",";
      out += std::to_string(e);
      first = false;
    });
    out += "}";
    return out;
  }

  std::size_t hash() const {
    std::uint64_t h = 1469598103934665603ULL;
    for (std::uint64_t w : words_) {
      h ^= w;
      h *= 1099511628211ULL;
    }
    h ^= n_;
    return static_cast<std::size_t>(h);
  }

 private:
  static constexpr std::size_t kWordBits = 64;

  void check_index(std::size_t e) const {
    if (e >= n_) throw std::out_of_range("ElementSet: element index out of range");
  }
  void check_same(const ElementSet& o) const {
    if (n_ != o.n_) throw std::invalid_argument("ElementSet: mismatched universe sizes");
  }
  void mask_tail() {
    std::size_t tail = n_ % kWordBits;
    if (tail != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << tail) - 1;
  }

  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

}  // namespace submax

#endif  // SUBMAX_ELEMENT_SET_HPP_
