#pragma once

// Pants decompositions as trivalent multigraphs.
//
// Each pair of pants is a vertex and each decomposition curve is an edge joining
// the (one or two) pants it bounds, so a genus-g decomposition is a connected
// trivalent multigraph with 2g-2 vertices and 3g-3 edges; a loop is a curve with
// the same pants on both sides.
//
// Red edges are the boundaries of a complete meridian system, blue edges the
// supplementary disks. Cutting along the red curves leaves one planar piece in
// which every blue curve separates, so the blue edges carry no cycle and reach
// every pants: a valid coloring is one whose blue edges form a spanning tree.

#include <optional>
#include <random>
#include <string>
#include <vector>

namespace heegaard {

struct PantsEdge {
  /// 0-based vertex indices; equal for a loop.
  int u = 0;
  int v = 0;

  bool is_loop() const { return u == v; }
  friend bool operator==(const PantsEdge&, const PantsEdge&) = default;
};

struct PantsGraph {
  int genus = 0;
  /// Edge k has user-facing id k+1.
  std::vector<PantsEdge> edges;

  int vertex_count() const { return 2 * genus - 2; }
  int edge_count() const { return static_cast<int>(edges.size()); }
  friend bool operator==(const PantsGraph&, const PantsGraph&) = default;
};

enum class EdgeColor { Red, Blue };

using Coloring = std::vector<EdgeColor>;

/// Parity of |gamma cap curve| per edge.
using ParityAssignment = std::vector<int>;
/// Parities known on some edges only.
using PartialParityAssignment = std::vector<std::optional<int>>;

struct PantsViolation {
  enum class Kind {
    VertexCount,
    EdgeCount,
    EndpointOutOfRange,
    NotTrivalent,
    Disconnected,
    ColoringSize,
    ColorCounts,
    BlueLoop,
    BlueCycle,
    BlueNotSpanning,
  };
  Kind kind;
  std::string detail;
};

std::string to_string(PantsViolation::Kind kind);

/// Structural checks only (counts, endpoint range, trivalence, connectivity).
std::vector<PantsViolation> validate_pants_structure(const PantsGraph& p);

/// Structure plus the coloring rules: g red, 2g-3 blue, blue edges a spanning tree.
/// Returns every violation found; empty means ok.
std::vector<PantsViolation> validate_pants_graph(const PantsGraph& p, const Coloring& c);

struct Firing {
  /// 0-based edge that turned red.
  int edge = 0;
  /// Pants whose two red boundary ends forced the recoloring.
  int vertex = 0;
  /// 1-based firing order.
  int stage = 0;

  friend bool operator==(const Firing&, const Firing&) = default;
};

struct PropagationResult {
  Coloring coloring;
  std::vector<Firing> trace;

  bool all_red() const;
};

/// Fixpoint of "a pants with two red boundary ends and one blue end turns the
/// blue one red". Fires the lowest-index eligible edge first. Accepts any
/// coloring of a structurally valid graph; throws InputError otherwise.
PropagationResult color_propagate(const PantsGraph& p, const Coloring& c);

/// Same rule, firing a uniformly random eligible edge each round.
PropagationResult color_propagate(const PantsGraph& p, const Coloring& c, std::mt19937_64& schedule);

/// Extends parities given on the red edges to the blue edges so that every pants
/// sees an even number of boundary crossings. Requires a valid coloring and a
/// value on exactly the red edges; throws InputError otherwise.
ParityAssignment parity_complete(const PantsGraph& p, const Coloring& c,
                                 const PartialParityAssignment& red_parities);

/// Sum of incident edge-end parities at vertex v, mod 2. A loop contributes twice.
int vertex_parity(const PantsGraph& p, const ParityAssignment& parities, int v);

}  // namespace heegaard
