#pragma once

// Decorated graph of a theta-admissible pattern: one vertex per entry, an
// edge between entries that are consecutive and comparable in the row chain
// and equal, and a circle on every critical entry.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dwmds/pattern.hpp"

namespace dwmds {

struct Vertex {
  Position pos;
  int value = 0;
  bool circled = false;
};

/// Indices into DecoratedGraph::vertices. `earlier` is the larger side of the
/// chain inequality (further left in the row).
struct Edge {
  std::size_t earlier = 0;
  std::size_t later = 0;
};

struct DecoratedGraph {
  int rank = 0;
  std::vector<Vertex> vertices;  // row-major, same layout as the pattern
  std::vector<Edge> edges;
  /// Vertex indices of each connected component, ascending; components are
  /// ordered by their first vertex.
  std::vector<std::vector<std::size_t>> components;

  const Vertex& vertex(Position p) const;
};

enum class ComponentClass { ordinary, ml_asymmetric, ml_symmetric };

const char* to_string(ComponentClass c);

struct Component {
  int row = 0;
  std::vector<Position> vertices;  // ascending column
  int value = 0;
  ComponentClass cls = ComponentClass::ordinary;
  Position rightmost;
  int length = 0;                               // ml_symmetric only
  std::optional<Position> shorter_leg_endpoint;  // ml_asymmetric only
  std::optional<Position> upsilon;               // ml_symmetric only
  int left_leg = 0;   // vertices in columns <= r-2
  int right_leg = 0;  // vertices in columns >= r+1

  bool is_multiple_leaner() const { return cls != ComponentClass::ordinary; }
  bool contains(Position p) const;
};

/// Consecutive comparable column pairs of row `row` in chain order, each as
/// (earlier column, later column). The middle pair is never joined.
std::vector<std::pair<int, int>> comparable_pairs(int rank, int row);

/// Throws std::invalid_argument naming the first violated inequality when t
/// is not theta-admissible.
DecoratedGraph decorate(const LittelmannPattern& t, const HighestWeight& hw);

/// Builds the graph from precomputed criticality flags (row-major).
DecoratedGraph decorate_with_mask(const LittelmannPattern& t, const std::vector<bool>& circled);

std::vector<Component> classify_components(const DecoratedGraph& g);

/// False when some circled vertex is 0, or some component that is not a
/// multiple leaner has an edge whose earlier endpoint is circled.
bool is_strict(const DecoratedGraph& g, const std::vector<Component>& components);
bool is_strict(const LittelmannPattern& t, const HighestWeight& hw);

/// ASCII rendering, one line per row:
///
///   row i: <left half> <L> [top/bottom] <R> <right half>
///
/// A vertex prints as its value, or "(value)" when circled. Neighbouring
/// vertices outside the middle are separated by " — " when joined by an edge
/// and by three spaces otherwise. The middle pair a_{i,r-1}/a_{i,r} prints
/// stacked as "[top/bottom]". The connector <L> from a_{i,r-2} into the pair
/// is " < " (edges to both), " / " (top only), " \ " (bottom only) or three
/// spaces; the connector <R> out of the pair to a_{i,r+1} is " > " (both),
/// " \ " (top only), " / " (bottom only) or three spaces.
std::string render_ascii(const DecoratedGraph& g);

}  // namespace dwmds
