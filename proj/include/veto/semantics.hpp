#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "veto/core.hpp"
#include "veto/graph.hpp"

namespace veto {

enum class SemanticsTag {
  interval,
  veto,
  veto_directed,
  k_veto,
  point_core,
  single_approval,
  double_approval,
};

/// `interval|veto|veto-directed|k-veto|point-core|single-approval|double-approval`
std::string_view tag_name(SemanticsTag tag);
SemanticsTag parse_tag(std::string_view name);

/// Throws ArityMismatch unless `mark_count` suits the tag.
void check_arity(SemanticsTag tag, int mark_count);

namespace detail {

// Set-based adjacency over the point lists [left, marks..., right] of two
// intervals. X = [max(left), min(right)] must be non-empty for every tag.
template <typename T>
bool adjacent_points(std::span<const T> a, std::span<const T> b, SemanticsTag tag) {
  const T& al = a.front();
  const T& ar = a.back();
  const T& bl = b.front();
  const T& br = b.back();
  if (al > br || bl > ar) return false;
  switch (tag) {
    case SemanticsTag::interval:
      return true;
    case SemanticsTag::veto:
    case SemanticsTag::veto_directed:
    case SemanticsTag::k_veto:
      for (std::size_t i = 1; i + 1 < a.size(); ++i) {
        if (bl <= a[i] && a[i] <= br) return false;
      }
      for (std::size_t i = 1; i + 1 < b.size(); ++i) {
        if (al <= b[i] && b[i] <= ar) return false;
      }
      return true;
    case SemanticsTag::point_core:
    case SemanticsTag::single_approval:
    case SemanticsTag::double_approval: {
      const T& lo = al > bl ? al : bl;
      const T& hi = ar < br ? ar : br;
      int approvals = (lo <= a[1] && a[1] <= hi) + (lo <= b[1] && b[1] <= hi);
      if (tag == SemanticsTag::point_core) return approvals >= 1;
      if (tag == SemanticsTag::single_approval) return approvals == 1;
      return approvals == 2;
    }
  }
  return false;
}

}  // namespace detail

/// Symmetric adjacency under an undirected tag (veto-directed is treated as veto).
bool adjacent(const MarkedInterval& a, const MarkedInterval& b, SemanticsTag tag);

SimpleGraph build_graph(const Representation& rep, SemanticsTag tag);

/// Arc a -> b iff a_v < b_l < a_r < b_v. Needs k = 1 and distinct points.
Digraph build_digraph(const Representation& rep);

struct PartitionReport {
  std::size_t interval_edges = 0;
  std::size_t veto_edges = 0;
  std::size_t pc_edges = 0;
  std::size_t sa_edges = 0;
  std::size_t da_edges = 0;
  /// interval = veto (+) point-core and point-core = single (+) double, as disjoint unions.
  bool holds = false;
};

PartitionReport partition_check(const Representation& rep);

/// Splits the first mark of every interval so the result has k_target marks.
/// Accepts k = 1 (veto to k-veto) and k = 2 (double veto to k-veto) inputs.
Representation split_to_k_veto(const Representation& rep, int k_target);

/// Keeps only the first and last mark of every interval.
Representation reduce_to_double(const Representation& rep);

struct PlainInterval {
  Rational left;
  Rational right;

  friend bool operator==(const PlainInterval&, const PlainInterval&) = default;
};

SimpleGraph intersection_graph(std::span<const PlainInterval> intervals);

/// Puts an approval mark just right of each left endpoint.
Representation interval_to_single_approval(std::span<const PlainInterval> intervals);

}  // namespace veto
