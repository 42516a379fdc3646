#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace level1 {

/// Dense bit set over taxon indices 0..universe-1.
class TaxonSet {
 public:
  TaxonSet() = default;
  explicit TaxonSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

  static TaxonSet singleton(std::size_t universe, std::size_t i) {
    TaxonSet s(universe);
    s.insert(i);
    return s;
  }
  static TaxonSet full(std::size_t universe) {
    TaxonSet s(universe);
    for (std::size_t i = 0; i < universe; ++i) s.insert(i);
    return s;
  }

  std::size_t universe() const noexcept { return universe_; }

  void insert(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void erase(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  bool contains(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }

  std::size_t size() const noexcept {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }
  bool empty() const noexcept {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  TaxonSet& operator|=(const TaxonSet& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }
  TaxonSet& operator&=(const TaxonSet& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }
  TaxonSet& operator-=(const TaxonSet& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
    return *this;
  }
  friend TaxonSet operator|(TaxonSet a, const TaxonSet& b) { return a |= b; }
  friend TaxonSet operator&(TaxonSet a, const TaxonSet& b) { return a &= b; }
  friend TaxonSet operator-(TaxonSet a, const TaxonSet& b) { return a -= b; }

  bool is_subset_of(const TaxonSet& o) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~o.words_[k]) return false;
    return true;
  }
  bool intersects(const TaxonSet& o) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & o.words_[k]) return true;
    return false;
  }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < words_.size(); ++k) {
      auto w = words_[k];
      while (w) {
        out.push_back(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
    return out;
  }

  /// Low 64 bits; exact when universe <= 64.
  std::uint64_t low_word() const noexcept { return words_.empty() ? 0 : words_[0]; }

  friend bool operator==(const TaxonSet&, const TaxonSet&) = default;
  friend auto operator<=>(const TaxonSet& a, const TaxonSet& b) {
    if (auto c = a.universe_ <=> b.universe_; c != 0) return c;
    return a.words_ <=> b.words_;
  }

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Two nonempty sets are compatible when their intersection is empty or one of them.
inline bool compatible(const TaxonSet& a, const TaxonSet& b) {
  return !a.intersects(b) || a.is_subset_of(b) || b.is_subset_of(a);
}

}  // namespace level1
