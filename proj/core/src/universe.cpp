#include "mgrough/universe.hpp"

#include <algorithm>
#include <unordered_set>

namespace mgrough {

Subset::Subset(std::size_t width, word_type bits) : width_(width), bits_(bits) {
  if (width > kMaxUniverseSize) {
    throw SizeLimitExceeded("universe", width, kMaxUniverseSize);
  }
  if ((bits & ~mask(width)) != 0) {
    throw InvalidRelation("subset has bits beyond its universe width");
  }
}

Subset Subset::full(std::size_t width) { return Subset(width, mask(width)); }

Subset Subset::singleton(std::size_t width, std::size_t element) {
  return Subset(width).with(element);
}

Subset Subset::of(std::size_t width, std::initializer_list<std::size_t> elements) {
  Subset s(width);
  for (auto e : elements) s = s.with(e);
  return s;
}

Subset Subset::with(std::size_t element) const {
  if (element >= width_) throw std::out_of_range("element index out of range");
  return Subset(width_, bits_ | (word_type{1} << element), Raw{});
}

Subset Subset::without(std::size_t element) const {
  if (element >= width_) throw std::out_of_range("element index out of range");
  return Subset(width_, bits_ & ~(word_type{1} << element), Raw{});
}

Subset Subset::operator|(const Subset& other) const {
  require_same_width(other);
  return Subset(width_, bits_ | other.bits_, Raw{});
}

Subset Subset::operator&(const Subset& other) const {
  require_same_width(other);
  return Subset(width_, bits_ & other.bits_, Raw{});
}

Subset Subset::operator-(const Subset& other) const {
  require_same_width(other);
  return Subset(width_, bits_ & ~other.bits_, Raw{});
}

bool Subset::is_subset_of(const Subset& other) const {
  require_same_width(other);
  return (bits_ & ~other.bits_) == 0;
}

bool Subset::intersects(const Subset& other) const {
  require_same_width(other);
  return (bits_ & other.bits_) != 0;
}

std::vector<std::size_t> Subset::elements() const {
  std::vector<std::size_t> out;
  out.reserve(count());
  for (word_type rest = bits_; rest != 0; rest &= rest - 1) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(rest)));
  }
  return out;
}

Universe::Universe(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > kMaxUniverseSize) {
    throw SizeLimitExceeded("universe", names_.size(), kMaxUniverseSize);
  }
  std::unordered_set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw InvalidRelation("empty element label");
    if (!seen.insert(n).second) throw InvalidRelation("duplicate element label '" + n + "'");
  }
}

std::size_t Universe::index_of(std::string_view label) const noexcept {
  auto it = std::find(names_.begin(), names_.end(), label);
  return static_cast<std::size_t>(it - names_.begin());
}

Subset Universe::subset(std::initializer_list<std::string_view> labels) const {
  Subset s = empty_set();
  for (auto label : labels) {
    auto i = index_of(label);
    if (i == size()) throw InvalidRelation("unknown element '" + std::string(label) + "'");
    s = s.with(i);
  }
  return s;
}

Subset Universe::subset(const std::vector<std::string>& labels) const {
  Subset s = empty_set();
  for (const auto& label : labels) {
    auto i = index_of(label);
    if (i == size()) throw InvalidRelation("unknown element '" + label + "'");
    s = s.with(i);
  }
  return s;
}

bool Universe::single_char_labels() const noexcept {
  return std::all_of(names_.begin(), names_.end(),
                     [](const std::string& n) { return n.size() == 1; });
}

std::string Universe::format(const Subset& set) const {
  if (set.width() != size()) throw UniverseMismatch();
  if (set.is_empty()) return "-";
  const bool compact = single_char_labels();
  std::string out;
  for (auto e : set.elements()) {
    if (!compact && !out.empty()) out += ',';
    out += names_[e];
  }
  return out;
}

Subset Universe::parse_set(std::string_view text) const {
  if (text == "-") return empty_set();
  Subset s = empty_set();
  if (single_char_labels()) {
    for (char c : text) {
      auto i = index_of(std::string_view(&c, 1));
      if (i == size()) throw InvalidRelation("unknown element '" + std::string(1, c) + "'");
      s = s.with(i);
    }
    return s;
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    auto token = text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                     : comma - start);
    auto i = index_of(token);
    if (i == size()) throw InvalidRelation("unknown element '" + std::string(token) + "'");
    s = s.with(i);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return s;
}

Universe letters_universe(std::size_t size) {
  std::vector<std::string> names;
  names.reserve(size);
  for (std::size_t i = 0; i < size; ++i) {
    names.push_back(size <= 26 ? std::string(1, static_cast<char>('a' + i))
                               : "e" + std::to_string(i));
  }
  return Universe(std::move(names));
}

}  // namespace mgrough
