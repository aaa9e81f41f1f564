#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "mgrough/errors.hpp"

namespace mgrough {

/// Largest supported universe; one machine word per subset.
inline constexpr std::size_t kMaxUniverseSize = 64;

/// Fixed-width set of element indices drawn from a universe of `width()` elements.
///
/// Subsets carry only their width; operations between subsets of different
/// widths throw UniverseMismatch.
class Subset {
 public:
  using word_type = std::uint64_t;

  Subset() = default;
  explicit Subset(std::size_t width, word_type bits = 0);

  static Subset empty(std::size_t width) { return Subset(width); }
  static Subset full(std::size_t width);
  static Subset singleton(std::size_t width, std::size_t element);
  static Subset of(std::size_t width, std::initializer_list<std::size_t> elements);

  std::size_t width() const noexcept { return width_; }
  word_type bits() const noexcept { return bits_; }

  bool contains(std::size_t element) const noexcept {
    return element < width_ && ((bits_ >> element) & 1U) != 0;
  }
  std::size_t count() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }
  bool is_empty() const noexcept { return bits_ == 0; }
  bool is_full() const noexcept { return bits_ == mask(width_); }

  Subset with(std::size_t element) const;
  Subset without(std::size_t element) const;

  Subset complement() const noexcept { return Subset(width_, ~bits_ & mask(width_), Raw{}); }
  Subset operator|(const Subset& other) const;
  Subset operator&(const Subset& other) const;
  /// Set difference.
  Subset operator-(const Subset& other) const;

  Subset& operator|=(const Subset& other) { return *this = *this | other; }
  Subset& operator&=(const Subset& other) { return *this = *this & other; }

  bool is_subset_of(const Subset& other) const;
  bool is_proper_subset_of(const Subset& other) const {
    return is_subset_of(other) && bits_ != other.bits_;
  }
  bool intersects(const Subset& other) const;

  /// Element indices in ascending order.
  std::vector<std::size_t> elements() const;

  friend bool operator==(const Subset&, const Subset&) = default;
  /// Canonical order: width first, then the numeric value of the bit pattern.
  friend std::strong_ordering operator<=>(const Subset& a, const Subset& b) {
    if (auto c = a.width_ <=> b.width_; c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

  static constexpr word_type mask(std::size_t width) noexcept {
    return width >= 64 ? ~word_type{0} : ((word_type{1} << width) - 1);
  }

 private:
  struct Raw {};
  Subset(std::size_t width, word_type bits, Raw) noexcept : width_(width), bits_(bits) {}
  void require_same_width(const Subset& other) const {
    if (width_ != other.width_) throw UniverseMismatch();
  }

  std::size_t width_ = 0;
  word_type bits_ = 0;
};

/// Calls `fn(Subset)` for every subset of a `width`-element universe in
/// ascending numeric order.
template <class Fn>
void for_each_subset(std::size_t width, Fn&& fn) {
  if (width > 63) throw SizeLimitExceeded("subset enumeration", width, 63);
  const std::uint64_t end = std::uint64_t{1} << width;
  for (std::uint64_t bits = 0; bits < end; ++bits) fn(Subset(width, bits));
}

/// Named finite carrier set; element i is labelled names()[i].
class Universe {
 public:
  Universe() = default;
  explicit Universe(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(std::size_t element) const { return names_.at(element); }

  /// Index of `label`, or size() when absent.
  std::size_t index_of(std::string_view label) const noexcept;

  Subset empty_set() const { return Subset::empty(size()); }
  Subset full_set() const { return Subset::full(size()); }

  /// Subset from labels; throws InvalidRelation on unknown labels.
  Subset subset(std::initializer_list<std::string_view> labels) const;
  Subset subset(const std::vector<std::string>& labels) const;

  /// Compact rendering: concatenated labels in universe order, "-" for the empty set.
  /// Multi-character labels are comma-separated so the rendering stays unambiguous.
  std::string format(const Subset& set) const;
  /// Inverse of format(); throws InvalidRelation on malformed text.
  Subset parse_set(std::string_view text) const;

  friend bool operator==(const Universe&, const Universe&) = default;

 private:
  bool single_char_labels() const noexcept;

  std::vector<std::string> names_;
};

/// Universe whose labels are "a", "b", ... (or "e0", "e1", ... past 26 elements).
Universe letters_universe(std::size_t size);

}  // namespace mgrough
