#include "mgrough/report.hpp"

#include <functional>
#include <json.hpp>

#include "mgrough/rough_systems.hpp"
#include "mgrough/sweep.hpp"

namespace mgrough {

namespace {

using Json = nlohmann::ordered_json;
using Labeler = std::function<std::string(std::size_t)>;

Json check_json(const Check& c, const Labeler& label) {
  Json w = Json::array();
  for (auto i : c.witness) w.push_back(label(i));
  return {{"holds", c.holds}, {"applicable", c.applicable}, {"witness", std::move(w)}};
}

Json lattice_json(const LatticeReport& r, const Labeler& label) {
  Json out = Json::object();
  for (const auto& [name, check] : r.fields()) out[std::string(name)] = check_json(*check, label);
  return out;
}

Json family_json(const Universe& u, const SetFamily& fam,
                 const std::optional<std::vector<std::size_t>>& polarity) {
  Json members = Json::array();
  for (const auto& x : fam) members.push_back(u.format(x));
  const auto report =
      polarity ? classify(family_poset(fam), std::span<const std::size_t>(*polarity))
               : classify(family_poset(fam));
  return {{"members", std::move(members)},
          {"lattice", lattice_json(report, [&](std::size_t i) { return u.format(fam[i]); })}};
}

Json system_json(const RoughSystem& s) {
  Json elements = Json::array();
  for (std::size_t i = 0; i < s.size(); ++i) elements.push_back(s.format_pair(i));
  const auto report = classify_system(s);
  const Labeler label = [&](std::size_t i) { return s.format_pair(i); };
  return {{"elements", std::move(elements)},
          {"lattice", lattice_json(report.lattice, label)},
          {"closed_form_pseudocomplements",
           check_json(report.closed_form_pseudocomplements, label)}};
}

void flatten(const Json& j, const std::string& prefix, std::string& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      flatten(value, prefix.empty() ? key : prefix + "." + key, out);
    }
    return;
  }
  out += prefix;
  out += '\t';
  if (j.is_array()) {
    std::string joined;
    for (const auto& v : j) {
      if (!joined.empty()) joined += ';';
      joined += v.is_string() ? v.get<std::string>() : v.dump();
    }
    out += joined;
  } else if (j.is_string()) {
    out += j.get<std::string>();
  } else {
    out += j.dump();
  }
  out += '\n';
}

}  // namespace

std::string pair_report(const Equivalence& p, const Equivalence& q, ReportFormat format,
                        std::size_t limit) {
  if (!(p.universe() == q.universe())) throw UniverseMismatch();
  const auto& u = p.universe();
  const Tolerance uni = rel_union(p, q);
  const auto split = partition_u123(p, q);
  const auto h = covering_h(p, q);

  Json j;
  j["universe"] = u.names();
  j["P"] = format_classes(p);
  j["Q"] = format_classes(q);
  j["coherent"] = is_coherent(p, q);
  j["condition_c"] = condition_c(p, q);
  j["u1"] = u.format(split.u1);
  j["u2"] = u.format(split.u2);
  j["u3"] = u.format(split.u3);
  Json hf = Json::array();
  for (const auto& m : h.members()) hf.push_back(u.format(m));
  j["h_family"] = std::move(hf);
  j["h_covers_universe"] = h.covers_universe();
  j["h_induces_union"] = h_induces_union(p, q);
  j["union_irredundant"] = induced_by_irredundant_covering(uni);

  const auto interior = interior_system_opt(p, q, limit);
  const auto closure = closure_system_opt(p, q, limit);
  const auto pess_interior = lower_system(uni, limit);
  const auto pess_closure = upper_system(uni, limit);
  const auto rs = build_rs(SystemKind::optimistic, p, q, limit);
  const auto pess = build_rs(SystemKind::pessimistic, p, q, limit);
  const auto irs = build_irs(p, q, limit);

  j["sizes"] = {{"interior_opt", interior.size()},  {"closure_opt", closure.size()},
                {"interior_pess", pess_interior.size()}, {"closure_pess", pess_closure.size()},
                {"rs_opt", rs.size()},                 {"rs_pess", pess.size()},
                {"irs_opt", irs.size()}};

  j["families"] = {
      {"interior_opt", family_json(u, interior, std::nullopt)},
      {"closure_opt", family_json(u, closure, std::nullopt)},
      {"interior_pess",
       family_json(u, pess_interior, family_map(pess_interior, [&](const Subset& x) {
                     return lower_t(uni, x.complement());
                   }))},
      {"closure_pess",
       family_json(u, pess_closure, family_map(pess_closure, [&](const Subset& x) {
                     return upper_t(uni, x.complement());
                   }))},
  };
  j["systems"] = {{"rs_opt", system_json(rs)},
                  {"rs_pess", system_json(pess)},
                  {"irs_opt", system_json(irs)}};

  const auto completion = check_smallest_completion(rs, irs);
  const Labeler irs_label = [&](std::size_t i) { return irs.format_pair(i); };
  j["completion"] = {{"dm_size", completion.dm_size},
                     {"irs_size", completion.irs_size},
                     {"isomorphic", completion.isomorphic},
                     {"join_dense", check_json(completion.dense.join_dense, irs_label)},
                     {"meet_dense", check_json(completion.dense.meet_dense, irs_label)}};

  if (format == ReportFormat::json) return j.dump(2) + "\n";
  std::string out;
  flatten(j, "", out);
  return out;
}

}  // namespace mgrough
