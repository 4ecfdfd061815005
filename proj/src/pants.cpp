#include "heegaard/pants.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include <boost/random/uniform_int_distribution.hpp>

#include "heegaard/errors.hpp"

namespace heegaard {
namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<int> parent_;
};

std::string join_violations(const std::vector<PantsViolation>& vs) {
  std::ostringstream out;
  for (std::size_t k = 0; k < vs.size(); ++k) {
    if (k) out << "; ";
    out << to_string(vs[k].kind) << ": " << vs[k].detail;
  }
  return out.str();
}

void require_structure(const PantsGraph& p, const Coloring& c) {
  auto vs = validate_pants_structure(p);
  if (c.size() != p.edges.size()) {
    vs.push_back({PantsViolation::Kind::ColoringSize,
                  std::to_string(c.size()) + " colors for " + std::to_string(p.edges.size()) + " edges"});
  }
  if (!vs.empty()) throw InputError("malformed pants graph: " + join_violations(vs));
}

// Red and blue edge-end counts per pants, and the edges meeting each pants.
struct EndCounts {
  std::vector<int> red;
  std::vector<int> blue;
  std::vector<std::vector<int>> incident;

  EndCounts(const PantsGraph& p, const Coloring& c)
      : red(static_cast<std::size_t>(p.vertex_count()), 0),
        blue(static_cast<std::size_t>(p.vertex_count()), 0),
        incident(static_cast<std::size_t>(p.vertex_count())) {
    for (int e = 0; e < p.edge_count(); ++e) {
      const auto& edge = p.edges[e];
      auto& counts = c[e] == EdgeColor::Red ? red : blue;
      counts[edge.u]++;
      counts[edge.v]++;
      incident[edge.u].push_back(e);
      if (!edge.is_loop()) incident[edge.v].push_back(e);
    }
  }

  /// Vertex at which blue edge e may fire, if any.
  std::optional<int> trigger(const PantsGraph& p, const Coloring& c, int e) const {
    const auto& edge = p.edges[e];
    if (c[e] != EdgeColor::Blue || edge.is_loop()) return std::nullopt;
    for (int w : {std::min(edge.u, edge.v), std::max(edge.u, edge.v)}) {
      if (red[w] == 2 && blue[w] == 1) return w;
    }
    return std::nullopt;
  }
};

template <typename Choose>
PropagationResult propagate(const PantsGraph& p, const Coloring& c, Choose choose) {
  require_structure(p, c);
  PropagationResult result{c, {}};
  auto& colors = result.coloring;
  EndCounts counts(p, colors);

  std::set<int> eligible;
  for (int e = 0; e < p.edge_count(); ++e) {
    if (counts.trigger(p, colors, e)) eligible.insert(e);
  }

  while (!eligible.empty()) {
    const int e = choose(eligible);
    const int vertex = *counts.trigger(p, colors, e);
    eligible.erase(e);

    const auto& edge = p.edges[e];
    colors[e] = EdgeColor::Red;
    for (int w : {edge.u, edge.v}) {
      counts.red[w]++;
      counts.blue[w]--;
    }
    result.trace.push_back({e, vertex, static_cast<int>(result.trace.size()) + 1});

    for (int w : {edge.u, edge.v}) {
      for (int f : counts.incident[w]) {
        if (counts.trigger(p, colors, f)) {
          eligible.insert(f);
        } else {
          eligible.erase(f);
        }
      }
    }
  }
  return result;
}

}  // namespace

std::string to_string(PantsViolation::Kind kind) {
  switch (kind) {
    case PantsViolation::Kind::VertexCount: return "vertex count";
    case PantsViolation::Kind::EdgeCount: return "edge count";
    case PantsViolation::Kind::EndpointOutOfRange: return "endpoint out of range";
    case PantsViolation::Kind::NotTrivalent: return "not trivalent";
    case PantsViolation::Kind::Disconnected: return "disconnected";
    case PantsViolation::Kind::ColoringSize: return "coloring size";
    case PantsViolation::Kind::ColorCounts: return "wrong color counts";
    case PantsViolation::Kind::BlueLoop: return "blue loop";
    case PantsViolation::Kind::BlueCycle: return "blue cycle";
    case PantsViolation::Kind::BlueNotSpanning: return "blue not spanning";
  }
  return "unknown";
}

std::vector<PantsViolation> validate_pants_structure(const PantsGraph& p) {
  std::vector<PantsViolation> out;
  if (p.genus < 2) {
    out.push_back({PantsViolation::Kind::VertexCount,
                   "genus " + std::to_string(p.genus) + " has no pants decomposition"});
    return out;
  }
  const int n = p.vertex_count();
  if (p.edge_count() != 3 * p.genus - 3) {
    out.push_back({PantsViolation::Kind::EdgeCount, "expected " + std::to_string(3 * p.genus - 3) +
                                                        " edges, got " + std::to_string(p.edge_count())});
  }
  bool in_range = true;
  for (int e = 0; e < p.edge_count(); ++e) {
    const auto& edge = p.edges[e];
    if (edge.u < 0 || edge.u >= n || edge.v < 0 || edge.v >= n) {
      out.push_back({PantsViolation::Kind::EndpointOutOfRange,
                     "edge " + std::to_string(e + 1) + " touches a vertex outside 1.." + std::to_string(n)});
      in_range = false;
    }
  }
  if (!in_range) return out;

  std::vector<int> degree(static_cast<std::size_t>(n), 0);
  DisjointSets components(n);
  for (const auto& edge : p.edges) {
    degree[edge.u]++;
    degree[edge.v]++;
    components.unite(edge.u, edge.v);
  }
  for (int v = 0; v < n; ++v) {
    if (degree[v] != 3) {
      out.push_back({PantsViolation::Kind::NotTrivalent,
                     "vertex " + std::to_string(v + 1) + " has degree " + std::to_string(degree[v])});
    }
  }
  for (int v = 1; v < n; ++v) {
    if (components.find(v) != components.find(0)) {
      out.push_back({PantsViolation::Kind::Disconnected,
                     "vertex " + std::to_string(v + 1) + " is not connected to vertex 1"});
      break;
    }
  }
  return out;
}

std::vector<PantsViolation> validate_pants_graph(const PantsGraph& p, const Coloring& c) {
  auto out = validate_pants_structure(p);
  if (p.genus < 2) return out;
  if (c.size() != p.edges.size()) {
    out.push_back({PantsViolation::Kind::ColoringSize,
                   std::to_string(c.size()) + " colors for " + std::to_string(p.edges.size()) + " edges"});
    return out;
  }
  const auto red = std::count(c.begin(), c.end(), EdgeColor::Red);
  const auto blue = static_cast<long>(c.size()) - red;
  if (red != p.genus || blue != 2 * p.genus - 3) {
    std::ostringstream msg;
    msg << "genus " << p.genus << " needs " << p.genus << " red and " << 2 * p.genus - 3
        << " blue edges, got " << red << " red and " << blue << " blue";
    out.push_back({PantsViolation::Kind::ColorCounts, msg.str()});
  }

  const int n = p.vertex_count();
  for (const auto& edge : p.edges) {
    if (edge.u < 0 || edge.u >= n || edge.v < 0 || edge.v >= n) return out;
  }
  DisjointSets blue_forest(n);
  int blue_components = n;
  for (int e = 0; e < p.edge_count(); ++e) {
    if (c[e] != EdgeColor::Blue) continue;
    const auto& edge = p.edges[e];
    if (edge.is_loop()) {
      out.push_back({PantsViolation::Kind::BlueLoop, "edge " + std::to_string(e + 1) + " is a blue loop"});
    } else if (!blue_forest.unite(edge.u, edge.v)) {
      out.push_back({PantsViolation::Kind::BlueCycle,
                     "edge " + std::to_string(e + 1) + " closes a cycle of blue edges"});
    } else {
      --blue_components;
    }
  }
  if (blue_components != 1) {
    out.push_back({PantsViolation::Kind::BlueNotSpanning,
                   "blue edges leave " + std::to_string(blue_components) + " components"});
  }
  return out;
}

bool PropagationResult::all_red() const {
  return std::all_of(coloring.begin(), coloring.end(), [](EdgeColor x) { return x == EdgeColor::Red; });
}

PropagationResult color_propagate(const PantsGraph& p, const Coloring& c) {
  return propagate(p, c, [](const std::set<int>& eligible) { return *eligible.begin(); });
}

PropagationResult color_propagate(const PantsGraph& p, const Coloring& c, std::mt19937_64& schedule) {
  return propagate(p, c, [&schedule](const std::set<int>& eligible) {
    boost::random::uniform_int_distribution<std::size_t> pick(0, eligible.size() - 1);
    return *std::next(eligible.begin(), static_cast<std::ptrdiff_t>(pick(schedule)));
  });
}

int vertex_parity(const PantsGraph& p, const ParityAssignment& parities, int v) {
  int sum = 0;
  for (int e = 0; e < p.edge_count(); ++e) {
    if (p.edges[e].u == v) sum += parities[e];
    if (p.edges[e].v == v) sum += parities[e];
  }
  return sum & 1;
}

ParityAssignment parity_complete(const PantsGraph& p, const Coloring& c,
                                 const PartialParityAssignment& red_parities) {
  if (auto vs = validate_pants_graph(p, c); !vs.empty()) {
    throw InputError("invalid pants coloring: " + join_violations(vs));
  }
  if (red_parities.size() != p.edges.size()) {
    throw InputError("parity input has " + std::to_string(red_parities.size()) + " entries for " +
                     std::to_string(p.edges.size()) + " edges");
  }
  ParityAssignment out(p.edges.size(), 0);
  for (int e = 0; e < p.edge_count(); ++e) {
    const auto& given = red_parities[e];
    if (c[e] == EdgeColor::Blue) {
      if (given) throw InputError("parity given on blue edge " + std::to_string(e + 1));
    } else {
      if (!given) throw InputError("parity missing on red edge " + std::to_string(e + 1));
      if (*given != 0 && *given != 1) {
        throw InputError("parity on edge " + std::to_string(e + 1) + " must be 0 or 1");
      }
      out[e] = *given;
    }
  }

  // Leaf elimination on the blue tree: a pants with a single unsolved blue
  // edge determines that edge from its vertex equation.
  const int n = p.vertex_count();
  EndCounts counts(p, c);
  std::vector<int> open_blue = counts.blue;
  std::vector<char> solved(p.edges.size(), 0);
  for (int e = 0; e < p.edge_count(); ++e) solved[e] = c[e] == EdgeColor::Red;

  std::deque<int> leaves;
  for (int v = 0; v < n; ++v) {
    if (open_blue[v] == 1) leaves.push_back(v);
  }
  while (!leaves.empty()) {
    const int v = leaves.front();
    leaves.pop_front();
    if (open_blue[v] != 1) continue;
    int unknown = -1;
    int sum = 0;
    for (int e : counts.incident[v]) {
      if (!solved[e]) {
        unknown = e;
      } else {
        sum += p.edges[e].is_loop() ? 2 * out[e] : out[e];
      }
    }
    out[unknown] = sum & 1;
    solved[unknown] = 1;
    const auto& edge = p.edges[unknown];
    for (int w : {edge.u, edge.v}) {
      if (--open_blue[w] == 1) leaves.push_back(w);
    }
  }

  for (int v = 0; v < n; ++v) {
    if (vertex_parity(p, out, v) != 0) {
      throw std::logic_error("parity completion left vertex " + std::to_string(v + 1) + " odd");
    }
  }
  return out;
}

}  // namespace heegaard
