#include "mgrough/text_format.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

namespace mgrough {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::vector<Token> split_ws(std::string_view s, std::size_t column_offset) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && is_space(s[i])) ++i;
    if (i == s.size()) break;
    std::size_t j = i;
    while (j < s.size() && !is_space(s[j])) ++j;
    out.push_back({s.substr(i, j - i), column_offset + i + 1});
    i = j;
  }
  return out;
}

bool valid_name(std::string_view name) {
  return !name.empty() && std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
  });
}

class Parser {
 public:
  RelationFile run(std::string_view text) {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      auto nl = text.find('\n', pos);
      auto line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos
                                                                 : nl - pos);
      ++line_no;
      parse_line(line_no, line);
      if (nl == std::string_view::npos) break;
      pos = nl + 1;
    }
    if (!have_universe_) throw ParseError(line_no, 1, "missing 'universe:' line");
    return std::move(file_);
  }

 private:
  void parse_line(std::size_t line_no, std::string_view line) {
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    auto words = split_ws(line, 0);
    if (words.empty()) return;

    auto colon = line.find(':');
    if (colon == std::string_view::npos) {
      throw ParseError(line_no, words.front().column, "expected ':' after keyword");
    }
    auto head = split_ws(line.substr(0, colon), 0);
    if (head.empty()) throw ParseError(line_no, colon + 1, "missing keyword before ':'");
    auto body = line.substr(colon + 1);
    const std::size_t body_offset = colon + 1;
    const auto keyword = head.front();

    if (keyword.text == "universe") {
      if (head.size() != 1) throw ParseError(line_no, head[1].column, "unexpected token");
      parse_universe(line_no, body, body_offset);
      return;
    }
    if (keyword.text != "partition" && keyword.text != "tolerance") {
      throw ParseError(line_no, keyword.column,
                       "unknown keyword '" + std::string(keyword.text) + "'");
    }
    if (!have_universe_) {
      throw ParseError(line_no, keyword.column, "relation defined before 'universe:' line");
    }
    if (head.size() != 2) {
      throw ParseError(line_no, head.size() < 2 ? colon + 1 : head[2].column,
                       "expected exactly one relation name");
    }
    const auto name = head[1];
    if (!valid_name(name.text)) {
      throw ParseError(line_no, name.column, "invalid relation name");
    }
    if (name_taken(name.text)) {
      throw ParseError(line_no, name.column,
                       "duplicate relation name '" + std::string(name.text) + "'");
    }
    if (keyword.text == "partition") {
      parse_partition(line_no, std::string(name.text), body, body_offset);
    } else {
      parse_tolerance(line_no, std::string(name.text), body, body_offset);
    }
  }

  bool name_taken(std::string_view name) const {
    auto same = [&](const auto& kv) { return kv.first == name; };
    return std::any_of(file_.partitions.begin(), file_.partitions.end(), same) ||
           std::any_of(file_.tolerances.begin(), file_.tolerances.end(), same);
  }

  void parse_universe(std::size_t line_no, std::string_view body, std::size_t offset) {
    if (have_universe_) throw ParseError(line_no, 1, "duplicate 'universe:' line");
    std::vector<std::string> names;
    for (auto tok : split_ws(body, offset)) {
      if (!valid_name(tok.text)) {
        throw ParseError(line_no, tok.column, "invalid element label '" + std::string(tok.text) + "'");
      }
      if (std::find(names.begin(), names.end(), tok.text) != names.end()) {
        throw ParseError(line_no, tok.column, "duplicate element '" + std::string(tok.text) + "'");
      }
      names.emplace_back(tok.text);
    }
    if (names.size() > kMaxUniverseSize) {
      throw ParseError(line_no, offset + 1,
                       "universe larger than " + std::to_string(kMaxUniverseSize) + " elements");
    }
    file_.universe = Universe(std::move(names));
    have_universe_ = true;
  }

  std::size_t element(std::size_t line_no, const Token& tok) const {
    auto i = file_.universe.index_of(tok.text);
    if (i == file_.universe.size()) {
      throw ParseError(line_no, tok.column, "unknown element '" + std::string(tok.text) + "'");
    }
    return i;
  }

  void parse_partition(std::size_t line_no, std::string name, std::string_view body,
                       std::size_t offset) {
    const auto n = file_.universe.size();
    std::vector<std::size_t> labels(n, n);
    std::size_t class_index = 0;
    std::size_t start = 0;
    while (true) {
      auto bar = body.find('|', start);
      auto chunk = body.substr(start, bar == std::string_view::npos ? std::string_view::npos
                                                                    : bar - start);
      auto toks = split_ws(chunk, offset + start);
      if (toks.empty()) {
        // An entirely empty body is the partition of the empty universe.
        if (!(n == 0 && bar == std::string_view::npos && class_index == 0)) {
          throw ParseError(line_no, offset + start + 1, "empty partition class");
        }
      }
      for (const auto& tok : toks) {
        auto x = element(line_no, tok);
        if (labels[x] != n) {
          throw ParseError(line_no, tok.column,
                           "element '" + std::string(tok.text) + "' appears in two classes");
        }
        labels[x] = class_index;
      }
      ++class_index;
      if (bar == std::string_view::npos) break;
      start = bar + 1;
    }
    for (std::size_t x = 0; x < n; ++x) {
      if (labels[x] == n) {
        throw ParseError(line_no, offset + body.size() + 1,
                         "element '" + file_.universe.name(x) + "' is in no class");
      }
    }
    file_.partitions.emplace_back(std::move(name), Equivalence::from_labels(file_.universe, labels));
  }

  void parse_tolerance(std::size_t line_no, std::string name, std::string_view body,
                       std::size_t offset) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (const auto& tok : split_ws(body, offset)) {
      auto dash = tok.text.find('-');
      if (dash == std::string_view::npos || dash == 0 || dash + 1 == tok.text.size()) {
        throw ParseError(line_no, tok.column, "expected edge of the form x-y");
      }
      Token left{tok.text.substr(0, dash), tok.column};
      Token right{tok.text.substr(dash + 1), tok.column + dash + 1};
      edges.emplace_back(element(line_no, left), element(line_no, right));
    }
    file_.tolerances.emplace_back(std::move(name), Tolerance::from_edges(file_.universe, edges));
  }

  RelationFile file_;
  bool have_universe_ = false;
};

}  // namespace

const Equivalence& RelationFile::partition(std::string_view name) const {
  for (const auto& [n, e] : partitions) {
    if (n == name) return e;
  }
  throw InvalidRelation("no partition named '" + std::string(name) + "'");
}

const Tolerance& RelationFile::tolerance(std::string_view name) const {
  for (const auto& [n, t] : tolerances) {
    if (n == name) return t;
  }
  throw InvalidRelation("no tolerance named '" + std::string(name) + "'");
}

RelationFile parse_relation_file(std::string_view text) { return Parser().run(text); }

std::string format_relation_file(const RelationFile& file) {
  const auto& u = file.universe;
  std::string out = "universe:";
  for (const auto& n : u.names()) out += " " + n;
  out += '\n';
  for (const auto& [name, e] : file.partitions) {
    out += "partition " + name + ":";
    bool first = true;
    for (const auto& cls : e.classes()) {
      if (!first) out += " |";
      first = false;
      for (auto x : cls.elements()) out += " " + u.name(x);
    }
    out += '\n';
  }
  for (const auto& [name, t] : file.tolerances) {
    out += "tolerance " + name + ":";
    for (std::size_t x = 0; x < t.size(); ++x) {
      for (auto y : t.neighborhood(x).elements()) {
        if (y > x) out += " " + u.name(x) + "-" + u.name(y);
      }
    }
    out += '\n';
  }
  return out;
}

}  // namespace mgrough
