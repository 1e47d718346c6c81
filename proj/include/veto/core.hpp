#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "veto/rational.hpp"

namespace veto {

enum class Flavor : std::uint8_t { unit = 1, proper = 2, midpoint = 4 };

/// Subset of {unit, proper, midpoint}.
class FlavorSet {
 public:
  constexpr FlavorSet() = default;
  constexpr FlavorSet(std::initializer_list<Flavor> flags) {
    for (Flavor f : flags) bits_ |= static_cast<std::uint8_t>(f);
  }

  constexpr bool contains(Flavor f) const { return bits_ & static_cast<std::uint8_t>(f); }
  constexpr bool includes(FlavorSet other) const { return (bits_ & other.bits_) == other.bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr void insert(Flavor f) { bits_ |= static_cast<std::uint8_t>(f); }
  constexpr void erase(Flavor f) { bits_ &= static_cast<std::uint8_t>(~static_cast<std::uint8_t>(f)); }

  /// `unit,proper,midpoint` order, or `none`.
  std::string to_string() const;
  static FlavorSet parse(std::string_view text);

  friend constexpr bool operator==(FlavorSet, FlavorSet) = default;

 private:
  std::uint8_t bits_ = 0;
};

/// Closed interval [left, right] with k >= 1 strictly interior marks.
struct MarkedInterval {
  Rational left;
  std::vector<Rational> marks;
  Rational right;

  int mark_count() const { return static_cast<int>(marks.size()); }
  Rational length() const { return right - left; }
  /// left, marks..., right.
  std::vector<Rational> points() const;
  bool well_formed() const;

  friend bool operator==(const MarkedInterval&, const MarkedInterval&) = default;
};

MarkedInterval make_interval(const Rational& left, const Rational& mark, const Rational& right);

/// Interval list indexed by vertex id, with a uniform mark count and declared flavor flags.
struct Representation {
  std::vector<MarkedInterval> intervals;
  int mark_count = 1;
  FlavorSet flavor;

  int size() const { return static_cast<int>(intervals.size()); }

  friend bool operator==(const Representation&, const Representation&) = default;
};

struct Violation {
  int interval;  // -1 for representation-wide findings
  std::string message;
};

std::vector<Violation> validate_representation(const Representation& rep);

/// Flags whose defining condition holds. `unit` always comes with `proper`.
FlavorSet flavor_flags(const Representation& rep);

bool has_distinct_points(const Representation& rep);

/// Representation with pairwise distinct marked points, the same set-based graph
/// under every semantics, and at least the input's flavor flags. Inputs that are
/// already distinct come back unchanged.
Representation perturb_distinct(const Representation& rep);

/// One marked point: slot 0 is the left endpoint, 1..k the marks, k+1 the right endpoint.
struct Symbol {
  int vertex;
  int slot;

  friend bool operator==(const Symbol&, const Symbol&) = default;
};

/// Total order over all (k+2)n marked points of a representation.
class OrderingWord {
 public:
  OrderingWord() = default;
  /// `vertices` lists the owner of each point in order; every vertex appears k+2 times.
  OrderingWord(std::vector<int> vertices, int mark_count);

  static OrderingWord parse(std::string_view text);

  int mark_count() const noexcept { return mark_count_; }
  int vertex_count() const noexcept { return vertex_count_; }
  const std::vector<int>& vertices() const noexcept { return vertices_; }
  std::vector<Symbol> symbols() const;
  std::size_t length() const noexcept { return vertices_.size(); }

  /// `L0 M0 L1 R0 M1 R1`; marks print as `M<i>.<j>` when k > 1.
  std::string to_string() const;

  friend bool operator==(const OrderingWord&, const OrderingWord&) = default;
  friend auto operator<=>(const OrderingWord& a, const OrderingWord& b) { return a.vertices_ <=> b.vertices_; }

 private:
  std::vector<int> vertices_;
  int mark_count_ = 1;
  int vertex_count_ = 0;
};

/// Throws Error(tied_points) if two marked points coincide.
OrderingWord ordering_word(const Representation& rep);

// Text format:
//   REP k=<mark_count> n=<interval_count> flags=<comma list or none>
//   <l> <m_1> ... <m_k> <r>      one line per interval
void write_representation(std::ostream& out, const Representation& rep);
Representation read_representation(std::istream& in);
std::string to_string(const Representation& rep);

}  // namespace veto
