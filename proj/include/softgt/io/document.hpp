#pragma once

// Line-oriented text format for spaces.
//
//   # comment
//   [universe]
//   a, b, c
//   [parameters]            (omit for a plain generalized topology)
//   r1, r2, r3
//   [carrier]               (optional, defaults to X at every parameter)
//   r1={a,b,c}; r2={b,c}
//   [basis]                 (or [opens] for an explicit union-closed family)
//   S_A1: r1={b}; r2={b,c}
//   [covers]
//   C1: S_A1, S_A2
//   [subsets]
//   F: r1={a,c}
//
// Plain documents write sets as {1,2}. A soft set with no listed parameter,
// or written {}, is the empty soft set. `carrier` may be named in covers.

#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "softgt/errors.hpp"
#include "softgt/gt_space.hpp"
#include "softgt/sgt_space.hpp"
#include "softgt/soft_core.hpp"

namespace softgt::io {

struct NamedSet {
  std::string name;
  std::vector<PointSet> rows;  // one row per parameter; a single row for plain documents
  std::size_t line = 0;

  friend bool operator==(const NamedSet& a, const NamedSet& b) { return a.name == b.name && a.rows == b.rows; }
};

struct NamedCover {
  std::string name;
  std::vector<std::string> members;
  std::size_t line = 0;

  friend bool operator==(const NamedCover& a, const NamedCover& b) {
    return a.name == b.name && a.members == b.members;
  }
};

enum class FamilyKind { basis, opens };

struct SpaceDocument {
  std::vector<std::string> points;
  std::vector<std::string> parameters;  // empty for a plain generalized topology
  std::optional<std::vector<PointSet>> carrier;
  FamilyKind kind = FamilyKind::basis;
  std::vector<NamedSet> members;
  std::vector<NamedCover> covers;
  std::vector<NamedSet> subsets;

  bool soft() const noexcept { return !parameters.empty(); }

  friend bool operator==(const SpaceDocument&, const SpaceDocument&) = default;
};

namespace detail {

inline bool name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' || c == '-' || c == '.' || c == '\'';
}

class LineCursor {
 public:
  LineCursor(const std::string& source, std::size_t line, std::string_view text)
      : source_(source), line_(line), text_(text) {}

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(source_, line_, pos_ + 1, what); }
  [[noreturn]] void fail_at(std::size_t pos, const std::string& what) const {
    throw ParseError(source_, line_, pos + 1, what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
  }

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  std::string name() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && name_char(text_[pos_])) ++pos_;
    if (start == pos_) fail("expected a name");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::size_t pos() {
    skip_space();
    return pos_;
  }

  std::size_t line() const noexcept { return line_; }

 private:
  const std::string& source_;
  std::size_t line_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

inline std::size_t resolve(LineCursor& cur, const std::vector<std::string>& names, const std::string& what) {
  const std::size_t at = cur.pos();
  const std::string n = cur.name();
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == n) return i;
  cur.fail_at(at, "unresolved " + what + " '" + n + "'");
}

inline PointSet parse_point_set(LineCursor& cur, const std::vector<std::string>& points) {
  cur.expect('{');
  PointSet s = 0;
  if (cur.accept('}')) return s;
  do {
    s |= singleton(resolve(cur, points, "point"));
  } while (cur.accept(','));
  cur.expect('}');
  return s;
}

inline std::vector<PointSet> parse_assignment(LineCursor& cur, const SpaceDocument& doc) {
  if (!doc.soft()) {
    std::vector<PointSet> row{parse_point_set(cur, doc.points)};
    if (!cur.at_end()) cur.fail("unexpected text after set");
    return row;
  }
  std::vector<PointSet> rows(doc.parameters.size(), 0);
  if (cur.at_end()) return rows;
  if (cur.peek('{')) {
    const std::size_t at = cur.pos();
    if (parse_point_set(cur, doc.points) != 0) cur.fail_at(at, "soft sets are written r={...}; use {} only for the empty soft set");
    if (!cur.at_end()) cur.fail("unexpected text after {}");
    return rows;
  }
  std::vector<bool> seen(rows.size(), false);
  do {
    if (cur.at_end()) break;  // trailing ';'
    const std::size_t at = cur.pos();
    const std::size_t r = resolve(cur, doc.parameters, "parameter");
    if (seen[r]) cur.fail_at(at, "parameter '" + doc.parameters[r] + "' assigned twice");
    seen[r] = true;
    cur.expect('=');
    rows[r] = parse_point_set(cur, doc.points);
  } while (cur.accept(';'));
  if (!cur.at_end()) cur.fail("expected ';' or end of line");
  return rows;
}

inline std::vector<std::string> parse_name_list(LineCursor& cur) {
  std::vector<std::string> out;
  if (cur.at_end()) return out;
  do {
    out.push_back(cur.name());
  } while (cur.accept(','));
  if (!cur.at_end()) cur.fail("expected ',' or end of line");
  return out;
}

}  // namespace detail

/// Parses a document; errors carry `source`, line and column.
inline SpaceDocument parse_document(std::string_view text, const std::string& source = "<input>") {
  enum class Section { none, universe, parameters, carrier, family, covers, subsets };
  SpaceDocument doc;
  Section section = Section::none;
  bool have_universe = false, have_parameters = false, have_family = false;
  std::vector<bool> section_seen(7, false);

  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    detail::LineCursor cur(source, line_no, line);
    if (cur.at_end()) continue;

    if (cur.accept('[')) {
      const std::size_t at = cur.pos();
      const std::string name = cur.name();
      cur.expect(']');
      if (!cur.at_end()) cur.fail("unexpected text after section header");
      if (name == "universe") section = Section::universe;
      else if (name == "parameters") section = Section::parameters;
      else if (name == "carrier") section = Section::carrier;
      else if (name == "basis" || name == "opens") {
        section = Section::family;
        doc.kind = name == "basis" ? FamilyKind::basis : FamilyKind::opens;
      } else if (name == "covers") section = Section::covers;
      else if (name == "subsets") section = Section::subsets;
      else cur.fail_at(at, "unknown section '" + name + "'");
      const auto idx = static_cast<std::size_t>(section);
      if (section_seen[idx]) cur.fail_at(at, "section '" + name + "' appears twice");
      section_seen[idx] = true;
      if (section != Section::universe && !have_universe) cur.fail_at(at, "[universe] must come first");
      if (section == Section::parameters && (section_seen[3] || section_seen[4] || section_seen[6])) {
        cur.fail_at(at, "[parameters] must precede sets");
      }
      if (section == Section::family) have_family = true;
      continue;
    }

    switch (section) {
      case Section::none:
        cur.fail("expected a section header");
      case Section::universe:
        for (auto& n : detail::parse_name_list(cur)) doc.points.push_back(std::move(n));
        have_universe = true;
        break;
      case Section::parameters:
        for (auto& n : detail::parse_name_list(cur)) doc.parameters.push_back(std::move(n));
        have_parameters = true;
        break;
      case Section::carrier: {
        if (!doc.soft()) cur.fail("plain documents have no [carrier]: the carrier is the universe");
        if (doc.carrier) cur.fail("carrier given twice");
        doc.carrier = detail::parse_assignment(cur, doc);
        break;
      }
      case Section::family:
      case Section::subsets: {
        NamedSet s;
        s.line = line_no;
        s.name = cur.name();
        cur.expect(':');
        s.rows = detail::parse_assignment(cur, doc);
        (section == Section::family ? doc.members : doc.subsets).push_back(std::move(s));
        break;
      }
      case Section::covers: {
        NamedCover c;
        c.line = line_no;
        c.name = cur.name();
        cur.expect(':');
        c.members = detail::parse_name_list(cur);
        doc.covers.push_back(std::move(c));
        break;
      }
    }
  }
  if (!have_universe) throw ParseError(source, line_no + 1, 1, "missing [universe] section");
  if (section_seen[static_cast<std::size_t>(Section::parameters)] && !have_parameters) {
    throw ParseError(source, line_no + 1, 1, "[parameters] section is empty");
  }
  (void)have_family;

  try {
    (void)Universe(doc.points);
    if (doc.soft()) (void)ParameterSet(doc.parameters);
  } catch (const StructuralError& e) {
    throw ParseError(source, 1, 1, e.what());
  }

  // Names must be unique across members and subsets; covers must resolve.
  std::map<std::string, std::size_t> defined{{"carrier", 0}};
  for (const auto* list : {&doc.members, &doc.subsets}) {
    for (const auto& s : *list) {
      if (!defined.emplace(s.name, s.line).second) {
        throw ParseError(source, s.line, 1, "name '" + s.name + "' is defined twice");
      }
    }
  }
  for (const auto& c : doc.covers) {
    for (const auto& m : c.members) {
      if (!defined.count(m)) throw ParseError(source, c.line, 1, "unresolved set name '" + m + "' in cover " + c.name);
    }
  }
  return doc;
}

inline SpaceDocument load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, 0, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str(), path);
}

namespace detail {

inline std::string format_rows(const SpaceDocument& doc, const std::vector<PointSet>& rows) {
  const Universe universe(doc.points);
  if (!doc.soft()) return format_points(universe, rows.at(0));
  std::string out;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r] == 0) continue;
    if (!out.empty()) out += "; ";
    out += doc.parameters[r] + "=" + format_points(universe, rows[r]);
  }
  return out.empty() ? "{}" : out;
}

inline std::string join(const std::vector<std::string>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + xs[i];
  return out;
}

}  // namespace detail

/// Canonical text form; parse_document(serialize(d)) == d.
inline std::string serialize(const SpaceDocument& doc) {
  std::string out = "[universe]\n" + detail::join(doc.points) + "\n";
  if (doc.soft()) out += "[parameters]\n" + detail::join(doc.parameters) + "\n";
  if (doc.carrier) out += "[carrier]\n" + detail::format_rows(doc, *doc.carrier) + "\n";
  out += doc.kind == FamilyKind::basis ? "[basis]\n" : "[opens]\n";
  for (const auto& m : doc.members) out += m.name + ": " + detail::format_rows(doc, m.rows) + "\n";
  if (!doc.covers.empty()) {
    out += "[covers]\n";
    for (const auto& c : doc.covers) out += c.name + ": " + detail::join(c.members) + "\n";
  }
  if (!doc.subsets.empty()) {
    out += "[subsets]\n";
    for (const auto& s : doc.subsets) out += s.name + ": " + detail::format_rows(doc, s.rows) + "\n";
  }
  return out;
}

/// A soft document resolved into a space plus its named sets and covers.
struct SoftSpace {
  SGTS space;
  std::vector<std::pair<std::string, SoftSet>> named;  // members, then subsets, in document order
  std::vector<std::pair<std::string, std::vector<SoftSet>>> covers;

  const SoftSet& set(const std::string& name) const {
    if (name == "carrier") return space.carrier();
    for (const auto& [n, s] : named)
      if (n == name) return s;
    throw StructuralError("no set named '" + name + "'");
  }

  const std::vector<SoftSet>& cover(const std::string& name) const {
    for (const auto& [n, c] : covers)
      if (n == name) return c;
    throw StructuralError("no cover named '" + name + "'");
  }
};

struct PlainSpace {
  GTS space;
  std::vector<std::pair<std::string, PointSet>> named;
  std::vector<std::pair<std::string, SetFamily>> covers;

  PointSet set(const std::string& name) const {
    if (name == "carrier") return space.all();
    for (const auto& [n, s] : named)
      if (n == name) return s;
    throw StructuralError("no set named '" + name + "'");
  }

  const SetFamily& cover(const std::string& name) const {
    for (const auto& [n, c] : covers)
      if (n == name) return c;
    throw StructuralError("no cover named '" + name + "'");
  }
};

using LoadedSpace = std::variant<SoftSpace, PlainSpace>;

/// Builds the space a document describes. Violated space invariants raise
/// StructuralError naming the offending line.
inline LoadedSpace build(const SpaceDocument& doc) {
  auto at_line = [](const NamedSet& s, const std::string& what) {
    return StructuralError("line " + std::to_string(s.line) + ": " + s.name + " " + what);
  };
  if (!doc.soft()) {
    auto universe = std::make_shared<const Universe>(doc.points);
    SetFamily base;
    for (const auto& m : doc.members) base.push_back(m.rows.at(0));
    GTS space(universe, base);
    if (doc.kind == FamilyKind::opens) {
      SetFamily listed = base;
      listed.push_back(0);
      std::sort(listed.begin(), listed.end());
      listed.erase(std::unique(listed.begin(), listed.end()), listed.end());
      bool closed = false;
      try {
        closed = space.opens(listed.size()) == listed;
      } catch (const ThresholdExceeded&) {
      }
      if (!closed) throw StructuralError("[opens] family is not closed under unions");
    }
    PlainSpace out{space, {}, {}};
    for (const auto* list : {&doc.members, &doc.subsets})
      for (const auto& s : *list) out.named.emplace_back(s.name, s.rows.at(0));
    for (const auto& c : doc.covers) {
      SetFamily members;
      for (const auto& m : c.members) members.push_back(out.set(m));
      out.covers.emplace_back(c.name, std::move(members));
    }
    return out;
  }

  const FramePtr frame = make_frame(doc.points, doc.parameters);
  const SoftSet carrier = doc.carrier ? SoftSet(frame, *doc.carrier) : SoftSet::universal(frame);
  std::vector<SoftSet> family;
  for (const auto& m : doc.members) {
    SoftSet s(frame, m.rows);
    if (!is_soft_subset(s, carrier)) throw at_line(m, "is not a soft subset of the carrier");
    family.push_back(std::move(s));
  }
  SGTS space = doc.kind == FamilyKind::basis ? SGTS(carrier, family) : sgt_from_opens(carrier, family);
  SoftSpace out{space, {}, {}};
  for (std::size_t i = 0; i < doc.members.size(); ++i) out.named.emplace_back(doc.members[i].name, family[i]);
  for (const auto& s : doc.subsets) {
    SoftSet set(frame, s.rows);
    if (!is_soft_subset(set, carrier)) throw at_line(s, "is not a soft subset of the carrier");
    out.named.emplace_back(s.name, std::move(set));
  }
  for (const auto& c : doc.covers) {
    std::vector<SoftSet> members;
    for (const auto& m : c.members) members.push_back(out.set(m));
    out.covers.emplace_back(c.name, std::move(members));
  }
  return out;
}

}  // namespace softgt::io
