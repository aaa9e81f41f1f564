#include "mgrough/approximations.hpp"

#include <algorithm>

namespace mgrough {

SetFamily::SetFamily(std::size_t width, std::vector<Subset> members)
    : width_(width), members_(std::move(members)) {
  for (const auto& m : members_) {
    if (m.width() != width_) throw UniverseMismatch();
  }
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool SetFamily::contains(const Subset& s) const {
  return std::binary_search(members_.begin(), members_.end(), s);
}

std::size_t SetFamily::index_of(const Subset& s) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), s);
  if (it == members_.end() || !(*it == s)) return members_.size();
  return static_cast<std::size_t>(it - members_.begin());
}

Subset lower(std::span<const Subset> neighborhoods, const Subset& x) {
  if (x.width() != neighborhoods.size()) throw UniverseMismatch();
  Subset out(x.width());
  for (std::size_t e = 0; e < neighborhoods.size(); ++e) {
    if (neighborhoods[e].is_subset_of(x)) out = out.with(e);
  }
  return out;
}

Subset upper(std::span<const Subset> neighborhoods, const Subset& x) {
  if (x.width() != neighborhoods.size()) throw UniverseMismatch();
  Subset out(x.width());
  for (std::size_t e = 0; e < neighborhoods.size(); ++e) {
    if (neighborhoods[e].intersects(x)) out = out.with(e);
  }
  return out;
}

Subset lower_t(const Tolerance& t, const Subset& x) { return lower(t.neighborhoods(), x); }
Subset upper_t(const Tolerance& t, const Subset& x) { return upper(t.neighborhoods(), x); }
Subset lower_e(const Equivalence& e, const Subset& x) { return lower(e.neighborhoods(), x); }
Subset upper_e(const Equivalence& e, const Subset& x) { return upper(e.neighborhoods(), x); }

Subset diamond(const Tolerance& t, const Subset& x) { return lower_t(t, upper_t(t, x)); }
Subset box(const Tolerance& t, const Subset& x) { return upper_t(t, lower_t(t, x)); }

namespace {

void require_pair(const Equivalence& p, const Equivalence& q) {
  if (!(p.universe() == q.universe())) throw UniverseMismatch();
}

}  // namespace

Subset opt_lower(const Equivalence& p, const Equivalence& q, const Subset& x) {
  require_pair(p, q);
  return lower_e(p, x) | lower_e(q, x);
}

Subset opt_upper(const Equivalence& p, const Equivalence& q, const Subset& x) {
  require_pair(p, q);
  return upper_e(p, x) & upper_e(q, x);
}

Subset pess_lower(const Equivalence& p, const Equivalence& q, const Subset& x) {
  require_pair(p, q);
  return lower_e(p, x) & lower_e(q, x);
}

Subset pess_upper(const Equivalence& p, const Equivalence& q, const Subset& x) {
  require_pair(p, q);
  return upper_e(p, x) | upper_e(q, x);
}

SetFamily image_family(std::size_t width, const SetOperator& op, std::size_t limit) {
  if (width > limit) throw SizeLimitExceeded("exhaustive subset enumeration", width, limit);
  std::vector<Subset> images;
  images.reserve(std::size_t{1} << width);
  for_each_subset(width, [&](const Subset& x) { images.push_back(op(x)); });
  return SetFamily(width, std::move(images));
}

SetFamily closure_system_opt(const Equivalence& p, const Equivalence& q, std::size_t limit) {
  require_pair(p, q);
  return image_family(p.size(), [&](const Subset& x) { return opt_upper(p, q, x); }, limit);
}

SetFamily interior_system_opt(const Equivalence& p, const Equivalence& q, std::size_t limit) {
  require_pair(p, q);
  return image_family(p.size(), [&](const Subset& x) { return opt_lower(p, q, x); }, limit);
}

SetFamily upper_system(const Tolerance& t, std::size_t limit) {
  return image_family(t.size(), [&](const Subset& x) { return upper_t(t, x); }, limit);
}

SetFamily lower_system(const Tolerance& t, std::size_t limit) {
  return image_family(t.size(), [&](const Subset& x) { return lower_t(t, x); }, limit);
}

SetFamily sat(const Equivalence& e, std::size_t limit) {
  const auto& classes = e.classes();
  if (classes.size() > limit) {
    throw SizeLimitExceeded("saturated-set enumeration", classes.size(), limit);
  }
  std::vector<Subset> members;
  const std::uint64_t end = std::uint64_t{1} << classes.size();
  members.reserve(end);
  for (std::uint64_t pick = 0; pick < end; ++pick) {
    Subset s(e.size());
    for (std::size_t c = 0; c < classes.size(); ++c) {
      if ((pick >> c) & 1U) s |= classes[c];
    }
    members.push_back(s);
  }
  return SetFamily(e.size(), std::move(members));
}

SetFamily definable(const Tolerance& t, std::size_t limit) {
  return sat(smallest_equivalence(t), limit);
}

bool pq_definable_check(const Equivalence& p, const Equivalence& q, const Subset& x) {
  return upper_e(rel_intersection(p, q), x) == x;
}

std::vector<ApproximationRow> approximation_table(const Equivalence& p, const Equivalence& q,
                                                  std::size_t limit) {
  require_pair(p, q);
  if (p.size() > limit) throw SizeLimitExceeded("approximation table", p.size(), limit);
  std::vector<ApproximationRow> rows;
  for_each_subset(p.size(), [&](const Subset& x) {
    ApproximationRow r{x,
                       lower_e(p, x),
                       lower_e(q, x),
                       upper_e(p, x),
                       upper_e(q, x),
                       opt_lower(p, q, x),
                       opt_upper(p, q, x),
                       pess_lower(p, q, x),
                       pess_upper(p, q, x)};
    rows.push_back(r);
  });
  return rows;
}

std::string approximation_table_tsv(const Equivalence& p, const Equivalence& q,
                                    std::size_t limit) {
  const auto& u = p.universe();
  std::string out = kTableHeader;
  out += '\n';
  for (const auto& r : approximation_table(p, q, limit)) {
    for (const Subset* s : {&r.x, &r.lower_p, &r.lower_q, &r.upper_p, &r.upper_q, &r.opt_lower,
                            &r.opt_upper, &r.pess_lower, &r.pess_upper}) {
      if (s != &r.x) out += '\t';
      out += u.format(*s);
    }
    out += '\n';
  }
  return out;
}

}  // namespace mgrough
