#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "ringlab/errors.hpp"

namespace ringlab {

enum class SetKind { subset, right_ideal, two_sided_ideal };

std::string to_string(SetKind kind);

/// A subset of a ring's elements, stored as a membership bitset over
/// element indices. Equality and hashing look only at membership; the
/// kind tag records what the producer has verified about the set.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe, SetKind kind = SetKind::subset);

  static ElementSet from_elements(std::size_t universe,
                                  std::span<const Elem> elems,
                                  SetKind kind = SetKind::subset);
  static ElementSet full(std::size_t universe, SetKind kind = SetKind::subset);
  static ElementSet singleton(std::size_t universe, Elem e,
                              SetKind kind = SetKind::subset);

  std::size_t universe() const noexcept { return universe_; }
  SetKind kind() const noexcept { return kind_; }
  ElementSet with_kind(SetKind kind) const;

  bool contains(Elem e) const noexcept {
    return (words_[e >> 6] >> (e & 63)) & 1u;
  }
  void insert(Elem e) noexcept { words_[e >> 6] |= std::uint64_t{1} << (e & 63); }
  void erase(Elem e) noexcept { words_[e >> 6] &= ~(std::uint64_t{1} << (e & 63)); }

  std::size_t size() const noexcept;
  bool empty() const noexcept { return size() == 0; }
  bool is_full() const noexcept { return size() == universe_; }

  std::vector<Elem> elements() const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int b = std::countr_zero(bits);
        f(static_cast<Elem>(w * 64 + static_cast<std::size_t>(b)));
        bits &= bits - 1;
      }
    }
  }

  bool is_subset_of(const ElementSet& other) const noexcept;
  bool intersects_nontrivially(const ElementSet& other, Elem zero) const noexcept;
  std::size_t intersection_size(const ElementSet& other) const noexcept;

  ElementSet operator&(const ElementSet& other) const;
  ElementSet operator|(const ElementSet& other) const;
  ElementSet& operator&=(const ElementSet& other);
  ElementSet& operator|=(const ElementSet& other);

  /// Lexicographic order of the sorted element lists.
  bool lex_less(const ElementSet& other) const;

  bool operator==(const ElementSet& other) const noexcept {
    return universe_ == other.universe_ && words_ == other.words_;
  }

  std::size_t hash() const noexcept;

  std::span<const std::uint64_t> words() const noexcept { return words_; }

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
  SetKind kind_ = SetKind::subset;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept { return s.hash(); }
};

}  // namespace ringlab
