#include "veto/core.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <tuple>

#include "veto/error.hpp"

namespace veto {

std::string FlavorSet::to_string() const {
  std::string out;
  auto add = [&](Flavor f, const char* name) {
    if (!contains(f)) return;
    if (!out.empty()) out += ',';
    out += name;
  };
  add(Flavor::unit, "unit");
  add(Flavor::proper, "proper");
  add(Flavor::midpoint, "midpoint");
  return out.empty() ? "none" : out;
}

FlavorSet FlavorSet::parse(std::string_view text) {
  FlavorSet set;
  if (text.empty() || text == "none") return set;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find_first_of(",+", start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(start, end - start);
    if (item == "unit") set.insert(Flavor::unit);
    else if (item == "proper") set.insert(Flavor::proper);
    else if (item == "midpoint") set.insert(Flavor::midpoint);
    else throw Error(ErrorKind::parse, "unknown flavor '" + std::string(item) + "'");
    start = end + 1;
  }
  return set;
}

std::vector<Rational> MarkedInterval::points() const {
  std::vector<Rational> pts;
  pts.reserve(marks.size() + 2);
  pts.push_back(left);
  pts.insert(pts.end(), marks.begin(), marks.end());
  pts.push_back(right);
  return pts;
}

bool MarkedInterval::well_formed() const {
  if (marks.empty()) return false;
  auto pts = points();
  return std::adjacent_find(pts.begin(), pts.end(), std::greater_equal<>()) == pts.end();
}

MarkedInterval make_interval(const Rational& left, const Rational& mark, const Rational& right) {
  return MarkedInterval{left, {mark}, right};
}

namespace {

bool properly_contains(const MarkedInterval& outer, const MarkedInterval& inner) {
  return outer.left <= inner.left && inner.right <= outer.right &&
         (outer.left != inner.left || outer.right != inner.right);
}

bool is_midpoint(const MarkedInterval& iv) {
  return iv.marks.size() == 1 && iv.marks[0] * 2 == iv.left + iv.right;
}

}  // namespace

std::vector<Violation> validate_representation(const Representation& rep) {
  std::vector<Violation> found;
  if (rep.mark_count < 1) found.push_back({-1, "mark count must be positive"});
  for (int i = 0; i < rep.size(); ++i) {
    const auto& iv = rep.intervals[i];
    if (iv.mark_count() != rep.mark_count) {
      found.push_back({i, "has " + std::to_string(iv.mark_count()) + " marks, expected " +
                              std::to_string(rep.mark_count)});
    }
    if (!iv.well_formed()) found.push_back({i, "interior order is not strict"});
  }
  if (rep.flavor.contains(Flavor::unit) && rep.size() > 0) {
    const Rational len = rep.intervals[0].length();
    for (int i = 1; i < rep.size(); ++i) {
      if (rep.intervals[i].length() != len) {
        found.push_back({i, "length " + format_rational(rep.intervals[i].length()) +
                                " differs from length " + format_rational(len) + " of interval 0"});
      }
    }
  }
  if (rep.flavor.contains(Flavor::proper)) {
    for (int i = 0; i < rep.size(); ++i) {
      for (int j = 0; j < rep.size(); ++j) {
        if (i != j && properly_contains(rep.intervals[i], rep.intervals[j])) {
          found.push_back({i, "properly contains interval " + std::to_string(j)});
        }
      }
    }
  }
  if (rep.flavor.contains(Flavor::midpoint)) {
    for (int i = 0; i < rep.size(); ++i) {
      if (rep.intervals[i].marks.size() != 1) found.push_back({i, "midpoint flavor needs exactly one mark"});
      else if (!is_midpoint(rep.intervals[i])) found.push_back({i, "mark not at midpoint"});
    }
  }
  return found;
}

FlavorSet flavor_flags(const Representation& rep) {
  FlavorSet flags{Flavor::unit, Flavor::proper, Flavor::midpoint};
  for (const auto& iv : rep.intervals) {
    if (iv.length() != rep.intervals.front().length()) flags.erase(Flavor::unit);
    if (!is_midpoint(iv)) flags.erase(Flavor::midpoint);
    for (const auto& other : rep.intervals) {
      if (properly_contains(iv, other)) flags.erase(Flavor::proper);
    }
  }
  return flags;
}

bool has_distinct_points(const Representation& rep) {
  std::vector<Rational> all;
  for (const auto& iv : rep.intervals) {
    auto pts = iv.points();
    all.insert(all.end(), pts.begin(), pts.end());
  }
  std::sort(all.begin(), all.end());
  return std::adjacent_find(all.begin(), all.end()) == all.end();
}

namespace {

// Smallest positive difference between distinct coordinates.
Rational min_gap(const Representation& rep) {
  std::vector<Rational> all;
  for (const auto& iv : rep.intervals) {
    auto pts = iv.points();
    all.insert(all.end(), pts.begin(), pts.end());
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  Rational gap = 0;
  for (std::size_t i = 1; i < all.size(); ++i) {
    Rational d = all[i] - all[i - 1];
    if (gap == 0 || d < gap) gap = d;
  }
  return gap;
}

enum PointType : unsigned { left_type = 1, mark_type = 2, right_type = 4 };

// True when some coordinate is shared by points of different types
// (endpoint vs mark, or left vs right endpoint).
bool has_cross_type_tie(const Representation& rep) {
  std::map<Rational, unsigned> types;
  for (const auto& iv : rep.intervals) {
    types[iv.left] |= left_type;
    for (const auto& m : iv.marks) types[m] |= mark_type;
    types[iv.right] |= right_type;
  }
  for (const auto& [x, t] : types) {
    if (t != left_type && t != mark_type && t != right_type) return true;
  }
  return false;
}

}  // namespace

// Two passes. Adjacency predicates compare only left endpoints against right
// endpoints (non-strictly) and marks against endpoints, so growing every
// interval by eta at both ends keeps every predicate and separates all
// cross-type ties. The ties left over are left/left, mark/mark or right/right,
// which no predicate looks at; distinct translations smaller than the gap
// separate them. Both moves keep lengths equal and marks centred, and neither
// creates a proper containment.
Representation perturb_distinct(const Representation& rep) {
  if (has_distinct_points(rep)) return rep;
  Representation out = rep;
  const int n = rep.size();
  if (has_cross_type_tie(out)) {
    const Rational eta = min_gap(out) / (3 * n + 1);
    for (auto& iv : out.intervals) {
      iv.left -= eta;
      iv.right += eta;
    }
  }
  if (!has_distinct_points(out)) {
    const Rational delta = min_gap(out) / (n + 1);
    for (int i = 0; i < n; ++i) {
      auto& iv = out.intervals[i];
      const Rational shift = delta * i;
      iv.left += shift;
      for (auto& m : iv.marks) m += shift;
      iv.right += shift;
    }
  }
  return out;
}

OrderingWord::OrderingWord(std::vector<int> vertices, int mark_count)
    : vertices_(std::move(vertices)), mark_count_(mark_count) {
  if (mark_count_ < 1) throw Error(ErrorKind::bad_parameters, "mark count must be positive");
  int n = 0;
  for (int v : vertices_) {
    if (v < 0) throw Error(ErrorKind::bad_parameters, "negative vertex in ordering word");
    n = std::max(n, v + 1);
  }
  std::vector<int> count(n, 0);
  for (int v : vertices_) ++count[v];
  for (int v = 0; v < n; ++v) {
    if (count[v] != mark_count_ + 2) {
      throw Error(ErrorKind::bad_parameters, "vertex " + std::to_string(v) + " appears " +
                                                 std::to_string(count[v]) + " times in ordering word");
    }
  }
  vertex_count_ = n;
}

std::vector<Symbol> OrderingWord::symbols() const {
  std::vector<int> seen(vertex_count_, 0);
  std::vector<Symbol> out;
  out.reserve(vertices_.size());
  for (int v : vertices_) out.push_back({v, seen[v]++});
  return out;
}

std::string OrderingWord::to_string() const {
  std::string out;
  for (auto [v, slot] : symbols()) {
    if (!out.empty()) out += ' ';
    if (slot == 0) out += "L" + std::to_string(v);
    else if (slot == mark_count_ + 1) out += "R" + std::to_string(v);
    else if (mark_count_ == 1) out += "M" + std::to_string(v);
    else out += "M" + std::to_string(v) + "." + std::to_string(slot - 1);
  }
  return out;
}

OrderingWord OrderingWord::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string token;
  struct Parsed {
    char kind;
    int vertex;
    int mark;
  };
  std::vector<Parsed> tokens;
  int max_marks = 0;
  std::map<int, int> marks_per_vertex;
  while (in >> token) {
    if (token.size() < 2 || (token[0] != 'L' && token[0] != 'M' && token[0] != 'R')) {
      throw Error(ErrorKind::parse, "bad ordering symbol '" + token + "'");
    }
    Parsed p{token[0], 0, -1};
    std::string body = token.substr(1);
    try {
      auto dot = body.find('.');
      p.vertex = std::stoi(body.substr(0, dot));
      if (dot != std::string::npos) p.mark = std::stoi(body.substr(dot + 1));
    } catch (const std::exception&) {
      throw Error(ErrorKind::parse, "bad ordering symbol '" + token + "'");
    }
    if (p.kind == 'M') max_marks = std::max(max_marks, ++marks_per_vertex[p.vertex]);
    tokens.push_back(p);
  }
  std::vector<int> vertices;
  std::map<int, int> slot;
  for (const auto& p : tokens) {
    int expected = slot[p.vertex]++;
    int actual = p.kind == 'L' ? 0 : p.kind == 'R' ? max_marks + 1 : (p.mark < 0 ? 1 : p.mark + 1);
    if (actual != expected) {
      throw Error(ErrorKind::parse, "symbols of vertex " + std::to_string(p.vertex) + " out of order");
    }
    vertices.push_back(p.vertex);
  }
  return OrderingWord(std::move(vertices), std::max(max_marks, 1));
}

OrderingWord ordering_word(const Representation& rep) {
  std::vector<std::tuple<Rational, int, int>> pts;
  for (int v = 0; v < rep.size(); ++v) {
    auto p = rep.intervals[v].points();
    for (int s = 0; s < static_cast<int>(p.size()); ++s) pts.emplace_back(p[s], v, s);
  }
  std::sort(pts.begin(), pts.end());
  std::vector<int> vertices;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i > 0 && std::get<0>(pts[i]) == std::get<0>(pts[i - 1])) {
      throw Error(ErrorKind::tied_points, "points of intervals " + std::to_string(std::get<1>(pts[i - 1])) +
                                              " and " + std::to_string(std::get<1>(pts[i])) + " coincide at " +
                                              format_rational(std::get<0>(pts[i])));
    }
    vertices.push_back(std::get<1>(pts[i]));
  }
  return OrderingWord(std::move(vertices), rep.mark_count);
}

void write_representation(std::ostream& out, const Representation& rep) {
  out << "REP k=" << rep.mark_count << " n=" << rep.size() << " flags=" << rep.flavor.to_string() << '\n';
  for (const auto& iv : rep.intervals) {
    out << format_rational(iv.left);
    for (const auto& m : iv.marks) out << ' ' << format_rational(m);
    out << ' ' << format_rational(iv.right) << '\n';
  }
}

Representation read_representation(std::istream& in) {
  std::string line;
  while (std::getline(in, line) && line.find_first_not_of(" \t\r") == std::string::npos) {
  }
  std::istringstream head(line);
  std::string word, k_field, n_field, flags_field;
  head >> word >> k_field >> n_field >> flags_field;
  if (word != "REP" || k_field.rfind("k=", 0) != 0 || n_field.rfind("n=", 0) != 0 ||
      flags_field.rfind("flags=", 0) != 0) {
    throw Error(ErrorKind::parse, "expected 'REP k=<k> n=<n> flags=<list>', got '" + line + "'");
  }
  Representation rep;
  int n = 0;
  try {
    rep.mark_count = std::stoi(k_field.substr(2));
    n = std::stoi(n_field.substr(2));
  } catch (const std::exception&) {
    throw Error(ErrorKind::parse, "bad header '" + line + "'");
  }
  if (rep.mark_count < 1 || n < 0) throw Error(ErrorKind::parse, "bad header '" + line + "'");
  rep.flavor = FlavorSet::parse(flags_field.substr(6));
  for (int i = 0; i < n; ++i) {
    std::vector<Rational> values;
    std::string value;
    for (int j = 0; j < rep.mark_count + 2; ++j) {
      if (!(in >> value)) throw Error(ErrorKind::parse, "interval " + std::to_string(i) + " is incomplete");
      values.push_back(parse_rational(value));
    }
    MarkedInterval iv{values.front(), std::vector<Rational>(values.begin() + 1, values.end() - 1), values.back()};
    rep.intervals.push_back(std::move(iv));
  }
  for (const auto& v : validate_representation(rep)) {
    throw Error(ErrorKind::invalid_representation,
                (v.interval >= 0 ? "interval " + std::to_string(v.interval) + " " : std::string()) + v.message);
  }
  return rep;
}

std::string to_string(const Representation& rep) {
  std::ostringstream out;
  write_representation(out, rep);
  return out.str();
}

}  // namespace veto
