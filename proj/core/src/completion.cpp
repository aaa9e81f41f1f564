#include "mgrough/completion.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace mgrough {

DynBitset upper_bounds(const FinitePoset& poset, const DynBitset& set) {
  DynBitset ub = DynBitset::full(poset.size());
  set.for_each([&](std::size_t x) { ub &= poset.up(x); });
  return ub;
}

DynBitset lower_bounds(const FinitePoset& poset, const DynBitset& set) {
  DynBitset lb = DynBitset::full(poset.size());
  set.for_each([&](std::size_t x) { lb &= poset.down(x); });
  return lb;
}

DmCompletion dm_completion(const FinitePoset& poset, std::size_t limit) {
  const auto m = poset.size();
  std::unordered_set<DynBitset, DynBitsetHash> seen;
  std::deque<DynBitset> work;
  auto add = [&](DynBitset s) {
    if (seen.insert(s).second) {
      if (seen.size() > limit) {
        throw SizeLimitExceeded("Dedekind-MacNeille completion", seen.size(), limit);
      }
      work.push_back(std::move(s));
    }
  };
  add(DynBitset::full(m));
  for (std::size_t x = 0; x < m; ++x) add(poset.down(x));
  // Every closed set is an intersection of principal down-sets; intersecting
  // each new set with every generator reaches all of them.
  while (!work.empty()) {
    DynBitset s = std::move(work.front());
    work.pop_front();
    for (std::size_t x = 0; x < m; ++x) add(s & poset.down(x));
  }

  DmCompletion out;
  out.closed_sets.assign(seen.begin(), seen.end());
  std::sort(out.closed_sets.begin(), out.closed_sets.end(),
            [](const DynBitset& a, const DynBitset& b) {
              auto ca = a.count();
              auto cb = b.count();
              return ca != cb ? ca < cb : a < b;
            });
  const auto& sets = out.closed_sets;
  out.lattice = require_lattice(FinitePoset::from_predicate(
      sets.size(), [&](std::size_t i, std::size_t j) { return sets[i].is_subset_of(sets[j]); }));

  std::unordered_map<DynBitset, std::size_t, DynBitsetHash> index;
  for (std::size_t i = 0; i < sets.size(); ++i) index.emplace(sets[i], i);
  out.embedding.resize(m);
  for (std::size_t x = 0; x < m; ++x) out.embedding[x] = index.at(poset.down(x));
  return out;
}

namespace {

struct Fingerprint {
  std::size_t height, depth, down, up, in_degree, out_degree;
  friend auto operator<=>(const Fingerprint&, const Fingerprint&) = default;
};

std::vector<Fingerprint> fingerprints(const FinitePoset& p) {
  const auto m = p.size();
  const auto h = heights(p);
  const auto d = heights(order_dual(p));
  std::vector<Fingerprint> f(m);
  for (std::size_t x = 0; x < m; ++x) {
    f[x] = {h[x], d[x], p.down(x).count(), p.up(x).count(), 0, 0};
  }
  for (auto [lo, hi] : covers(p)) {
    ++f[lo].out_degree;
    ++f[hi].in_degree;
  }
  return f;
}

class IsoSearch {
 public:
  IsoSearch(const FinitePoset& a, const FinitePoset& b) : a_(a), b_(b) {}

  std::optional<std::vector<std::size_t>> run() {
    const auto m = a_.size();
    fa_ = fingerprints(a_);
    fb_ = fingerprints(b_);
    auto sa = fa_;
    auto sb = fb_;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;

    order_.resize(m);
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t x, std::size_t y) {
      return fa_[x].height < fa_[y].height;
    });
    mapping_.assign(m, m);
    used_.assign(m, false);
    if (!assign(0)) return std::nullopt;
    return mapping_;
  }

 private:
  bool assign(std::size_t depth) {
    if (depth == order_.size()) return true;
    const auto x = order_[depth];
    for (std::size_t y = 0; y < b_.size(); ++y) {
      if (used_[y] || !(fa_[x] == fb_[y]) || !consistent(depth, x, y)) continue;
      mapping_[x] = y;
      used_[y] = true;
      if (assign(depth + 1)) return true;
      used_[y] = false;
    }
    mapping_[x] = a_.size();
    return false;
  }

  bool consistent(std::size_t depth, std::size_t x, std::size_t y) const {
    for (std::size_t k = 0; k < depth; ++k) {
      const auto u = order_[k];
      const auto v = mapping_[u];
      if (a_.leq(u, x) != b_.leq(v, y) || a_.leq(x, u) != b_.leq(y, v)) return false;
    }
    return true;
  }

  const FinitePoset& a_;
  const FinitePoset& b_;
  std::vector<Fingerprint> fa_, fb_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> mapping_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<std::vector<std::size_t>> find_isomorphism(const FinitePoset& a,
                                                         const FinitePoset& b,
                                                         std::size_t limit) {
  if (a.size() > limit) throw SizeLimitExceeded("isomorphism search", a.size(), limit);
  if (b.size() > limit) throw SizeLimitExceeded("isomorphism search", b.size(), limit);
  if (a.size() != b.size()) return std::nullopt;
  return IsoSearch(a, b).run();
}

namespace {

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string to_dot(const FinitePoset& poset, const std::function<std::string(std::size_t)>& label,
                   const DotOptions& options) {
  const auto m = poset.size();
  std::string out = "digraph " + options.graph_name + " {\n";
  for (const auto& c : options.comments) out += "  // " + c + "\n";
  out += "  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t x = 0; x < m; ++x) {
    out += "  n" + std::to_string(x) + " [label=\"" + escape(label(x)) + "\"];\n";
  }
  const auto h = heights(poset);
  const std::size_t levels = m == 0 ? 0 : *std::max_element(h.begin(), h.end()) + 1;
  for (std::size_t level = 0; level < levels; ++level) {
    out += "  { rank=same;";
    for (std::size_t x = 0; x < m; ++x) {
      if (h[x] == level) out += " n" + std::to_string(x) + ";";
    }
    out += " }\n";
  }
  for (auto [lo, hi] : covers(poset)) {
    out += "  n" + std::to_string(lo) + " -> n" + std::to_string(hi) + ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace mgrough
