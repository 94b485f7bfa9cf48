#include "ringlab/element_set.hpp"

#include <algorithm>

namespace ringlab {

std::string to_string(SetKind kind) {
  switch (kind) {
    case SetKind::subset:
      return "subset";
    case SetKind::right_ideal:
      return "right-ideal";
    case SetKind::two_sided_ideal:
      return "two-sided-ideal";
  }
  return "subset";
}

ElementSet::ElementSet(std::size_t universe, SetKind kind)
    : universe_(universe), words_((universe + 63) / 64, 0), kind_(kind) {}

ElementSet ElementSet::from_elements(std::size_t universe, std::span<const Elem> elems,
                                     SetKind kind) {
  ElementSet s(universe, kind);
  for (Elem e : elems) {
    if (e >= universe) {
      throw DimensionMismatch("element index " + std::to_string(e) + " outside ring of order " +
                              std::to_string(universe));
    }
    s.insert(e);
  }
  return s;
}

ElementSet ElementSet::full(std::size_t universe, SetKind kind) {
  ElementSet s(universe, kind);
  for (std::size_t w = 0; w < s.words_.size(); ++w) {
    s.words_[w] = ~std::uint64_t{0};
  }
  if (const std::size_t tail = universe % 64; tail != 0) {
    s.words_.back() = (std::uint64_t{1} << tail) - 1;
  }
  return s;
}

ElementSet ElementSet::singleton(std::size_t universe, Elem e, SetKind kind) {
  ElementSet s(universe, kind);
  s.insert(e);
  return s;
}

ElementSet ElementSet::with_kind(SetKind kind) const {
  ElementSet s = *this;
  s.kind_ = kind;
  return s;
}

std::size_t ElementSet::size() const noexcept {
  std::size_t total = 0;
  for (std::uint64_t w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::vector<Elem> ElementSet::elements() const {
  std::vector<Elem> out;
  out.reserve(size());
  for_each([&](Elem e) { out.push_back(e); });
  return out;
}

bool ElementSet::is_subset_of(const ElementSet& other) const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  }
  return true;
}

bool ElementSet::intersects_nontrivially(const ElementSet& other, Elem zero) const noexcept {
  const std::size_t zw = zero >> 6;
  const std::uint64_t zmask = ~(std::uint64_t{1} << (zero & 63));
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t both = words_[w] & other.words_[w];
    if (w == zw) both &= zmask;
    if (both != 0) return true;
  }
  return false;
}

std::size_t ElementSet::intersection_size(const ElementSet& other) const noexcept {
  std::size_t total = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    total += static_cast<std::size_t>(std::popcount(words_[w] & other.words_[w]));
  }
  return total;
}

ElementSet ElementSet::operator&(const ElementSet& other) const {
  ElementSet s = *this;
  s &= other;
  s.kind_ = SetKind::subset;
  return s;
}

ElementSet ElementSet::operator|(const ElementSet& other) const {
  ElementSet s = *this;
  s |= other;
  s.kind_ = SetKind::subset;
  return s;
}

ElementSet& ElementSet::operator&=(const ElementSet& other) {
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

ElementSet& ElementSet::operator|=(const ElementSet& other) {
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

bool ElementSet::lex_less(const ElementSet& other) const {
  // The first element where the sorted lists diverge decides; a list that
  // runs out first is smaller.
  for (std::size_t w = 0; w < words_.size(); ++w) {
    const std::uint64_t diff = words_[w] ^ other.words_[w];
    if (diff == 0) continue;
    const int b = std::countr_zero(diff);
    const std::size_t x = w * 64 + static_cast<std::size_t>(b);
    const bool mine = contains(static_cast<Elem>(x));
    const ElementSet& without = mine ? other : *this;
    // Does the set lacking x have any element above x?
    bool has_larger = false;
    const std::uint64_t above = (b == 63) ? 0 : (~std::uint64_t{0} << (b + 1));
    if ((without.words_[w] & above) != 0) {
      has_larger = true;
    } else {
      for (std::size_t v = w + 1; v < words_.size(); ++v) {
        if (without.words_[v] != 0) {
          has_larger = true;
          break;
        }
      }
    }
    return mine ? has_larger : !has_larger;
  }
  return false;
}

std::size_t ElementSet::hash() const noexcept {
  std::size_t h = 1469598103934665603ull ^ universe_;
  for (std::uint64_t w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace ringlab
