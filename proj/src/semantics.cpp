#include "veto/semantics.hpp"

#include <algorithm>

#include "veto/error.hpp"

namespace veto {

std::string_view tag_name(SemanticsTag tag) {
  switch (tag) {
    case SemanticsTag::interval: return "interval";
    case SemanticsTag::veto: return "veto";
    case SemanticsTag::veto_directed: return "veto-directed";
    case SemanticsTag::k_veto: return "k-veto";
    case SemanticsTag::point_core: return "point-core";
    case SemanticsTag::single_approval: return "single-approval";
    case SemanticsTag::double_approval: return "double-approval";
  }
  return "?";
}

SemanticsTag parse_tag(std::string_view name) {
  for (auto tag : {SemanticsTag::interval, SemanticsTag::veto, SemanticsTag::veto_directed, SemanticsTag::k_veto,
                   SemanticsTag::point_core, SemanticsTag::single_approval, SemanticsTag::double_approval}) {
    if (tag_name(tag) == name) return tag;
  }
  throw Error(ErrorKind::parse, "unknown semantics tag '" + std::string(name) + "'");
}

void check_arity(SemanticsTag tag, int mark_count) {
  bool ok = true;
  switch (tag) {
    case SemanticsTag::interval: ok = mark_count >= 1; break;
    case SemanticsTag::k_veto: ok = mark_count >= 2; break;
    default: ok = mark_count == 1; break;
  }
  if (!ok) {
    throw Error(ErrorKind::arity_mismatch,
                std::string(tag_name(tag)) + " semantics cannot use " + std::to_string(mark_count) + " marks");
  }
}

bool adjacent(const MarkedInterval& a, const MarkedInterval& b, SemanticsTag tag) {
  if (a.mark_count() != b.mark_count()) throw Error(ErrorKind::arity_mismatch, "intervals differ in mark count");
  check_arity(tag, a.mark_count());
  auto pa = a.points();
  auto pb = b.points();
  return detail::adjacent_points<Rational>(pa, pb, tag);
}

SimpleGraph build_graph(const Representation& rep, SemanticsTag tag) {
  check_arity(tag, rep.mark_count);
  const int n = rep.size();
  std::vector<std::vector<Rational>> pts;
  pts.reserve(n);
  for (const auto& iv : rep.intervals) {
    if (iv.mark_count() != rep.mark_count) throw Error(ErrorKind::arity_mismatch, "interval mark count mismatch");
    pts.push_back(iv.points());
  }
  SimpleGraph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (detail::adjacent_points<Rational>(pts[i], pts[j], tag)) g.add_edge(i, j);
    }
  }
  return g;
}

Digraph build_digraph(const Representation& rep) {
  check_arity(SemanticsTag::veto_directed, rep.mark_count);
  if (!has_distinct_points(rep)) throw Error(ErrorKind::tied_points, "directed graph needs distinct marked points");
  Digraph d(rep.size());
  for (int a = 0; a < rep.size(); ++a) {
    const auto& A = rep.intervals[a];
    for (int b = 0; b < rep.size(); ++b) {
      const auto& B = rep.intervals[b];
      if (a != b && A.marks[0] < B.left && B.left < A.right && A.right < B.marks[0]) d.add_arc(a, b);
    }
  }
  return d;
}

PartitionReport partition_check(const Representation& rep) {
  check_arity(SemanticsTag::veto, rep.mark_count);
  if (!has_distinct_points(rep)) throw Error(ErrorKind::tied_points, "partition check needs distinct marked points");
  auto interval = build_graph(rep, SemanticsTag::interval);
  auto veto = build_graph(rep, SemanticsTag::veto);
  auto pc = build_graph(rep, SemanticsTag::point_core);
  auto sa = build_graph(rep, SemanticsTag::single_approval);
  auto da = build_graph(rep, SemanticsTag::double_approval);

  auto disjoint_union = [](const SimpleGraph& whole, const SimpleGraph& x, const SimpleGraph& y) {
    if (whole.size() != x.size() + y.size()) return false;
    for (const auto& e : x.edges()) {
      if (!whole.edges().contains(e) || y.edges().contains(e)) return false;
    }
    for (const auto& e : y.edges()) {
      if (!whole.edges().contains(e)) return false;
    }
    return true;
  };

  PartitionReport report;
  report.interval_edges = interval.size();
  report.veto_edges = veto.size();
  report.pc_edges = pc.size();
  report.sa_edges = sa.size();
  report.da_edges = da.size();
  report.holds = disjoint_union(interval, veto, pc) && disjoint_union(pc, sa, da);
  return report;
}

namespace {

// Distance from x to the nearest other coordinate in the representation.
Rational nearest_other_distance(const Representation& rep, const Rational& x) {
  Rational best = -1;
  for (const auto& iv : rep.intervals) {
    for (const auto& p : iv.points()) {
      if (p == x) continue;
      Rational d = abs(p - x);
      if (best < 0 || d < best) best = d;
    }
  }
  return best;
}

}  // namespace

Representation split_to_k_veto(const Representation& rep, int k_target) {
  const int k = rep.mark_count;
  if (k_target < 2 || k_target < k) {
    throw Error(ErrorKind::bad_parameters, "cannot split " + std::to_string(k) + " marks into " +
                                               std::to_string(k_target));
  }
  if (!has_distinct_points(rep)) throw Error(ErrorKind::tied_points, "splitting needs distinct marked points");
  const int pieces = k_target - k + 1;
  Representation out = rep;
  out.mark_count = k_target;
  for (int i = 0; i < rep.size(); ++i) {
    const Rational& x = rep.intervals[i].marks.front();
    // Radius is half the distance to the nearest other point; the new marks
    // sit at the interior points of an even subdivision of (x - eps, x + eps).
    const Rational eps = nearest_other_distance(rep, x) / 2;
    std::vector<Rational> marks;
    for (int t = 1; t <= pieces; ++t) marks.push_back(x - eps + eps * 2 * t / (pieces + 1));
    marks.insert(marks.end(), rep.intervals[i].marks.begin() + 1, rep.intervals[i].marks.end());
    out.intervals[i].marks = std::move(marks);
  }
  out.flavor.erase(Flavor::midpoint);
  return out;
}

Representation reduce_to_double(const Representation& rep) {
  if (rep.mark_count < 2) throw Error(ErrorKind::arity_mismatch, "reduce_to_double needs at least two marks");
  Representation out = rep;
  out.mark_count = 2;
  out.flavor.erase(Flavor::midpoint);
  for (auto& iv : out.intervals) iv.marks = {iv.marks.front(), iv.marks.back()};
  return out;
}

SimpleGraph intersection_graph(std::span<const PlainInterval> intervals) {
  const int n = static_cast<int>(intervals.size());
  SimpleGraph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (intervals[i].left <= intervals[j].right && intervals[j].left <= intervals[i].right) g.add_edge(i, j);
    }
  }
  return g;
}

Representation interval_to_single_approval(std::span<const PlainInterval> intervals) {
  std::vector<Rational> ends;
  for (const auto& iv : intervals) {
    if (!(iv.left < iv.right)) throw Error(ErrorKind::bad_parameters, "interval with left >= right");
    ends.push_back(iv.left);
    ends.push_back(iv.right);
  }
  std::sort(ends.begin(), ends.end());
  if (std::adjacent_find(ends.begin(), ends.end()) != ends.end()) {
    throw Error(ErrorKind::tied_points, "interval endpoints must be distinct");
  }
  Rational gap = 0;
  for (std::size_t i = 1; i < ends.size(); ++i) {
    if (gap == 0 || ends[i] - ends[i - 1] < gap) gap = ends[i] - ends[i - 1];
  }
  Representation rep;
  rep.mark_count = 1;
  for (const auto& iv : intervals) rep.intervals.push_back(make_interval(iv.left, iv.left + gap / 2, iv.right));
  return rep;
}

}  // namespace veto
