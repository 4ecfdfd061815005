#include "heegaard/oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include <boost/random/uniform_int_distribution.hpp>

#include "heegaard/errors.hpp"
#include "heegaard/io.hpp"
#include "heegaard/twist.hpp"

namespace heegaard {
namespace {

constexpr std::size_t kStoredFailuresPerCheck = 3;

template <typename T>
void shuffle_in_place(std::vector<T>& items, Rng& rng) {
  for (std::size_t k = items.size(); k > 1; --k) {
    const auto pick = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(k) - 1));
    std::swap(items[k - 1], items[pick]);
  }
}

// Random element of Sp(2g, Z/2) applied to s, followed by random handle slides
// (basis changes inside the span).
DiskSystem scramble(DiskSystem s, Rng& rng) {
  const int g = s.genus;
  for (int k = 0; k < 4 * g + 4; ++k) {
    s = twist_system(s, random_nonzero_vector(g, rng));
  }
  for (int k = 0; k < 2 * g; ++k) {
    const auto r = static_cast<std::size_t>(uniform_int(rng, 0, g - 1));
    const auto t = static_cast<std::size_t>(uniform_int(rng, 0, g - 2));
    const auto source = t >= r ? t + 1 : t;
    s.curves[r] += s.curves[source];
  }
  shuffle_in_place(s.curves, rng);
  return s;
}

std::string diagram_counterexample(const HeegaardDiagram& d) { return diagram_to_json(d).dump(); }

std::string vectors_counterexample(std::initializer_list<std::pair<const char*, const Gf2Vector*>> named) {
  Json j = Json::object();
  for (const auto& [name, v] : named) j[name] = v->to_bits();
  return j.dump();
}

std::string pants_counterexample(const PantsGraph& p, const Coloring& c) {
  return pants_to_json(PantsDocument{p, c, std::nullopt}).dump();
}

}  // namespace

Rng make_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return Rng(seq);
}

std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  boost::random::uniform_int_distribution<std::int64_t> dist(lo, hi);
  return dist(rng);
}

Gf2Vector random_vector(int genus, Rng& rng) {
  Gf2Vector v(genus);
  for (std::size_t k = 0; k < v.dimension(); ++k) v.set_bit(k, uniform_int(rng, 0, 1) == 1);
  return v;
}

Gf2Vector random_nonzero_vector(int genus, Rng& rng) {
  while (true) {
    auto v = random_vector(genus, rng);
    if (!v.is_zero()) return v;
  }
}

Gf2Matrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
  Gf2Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, uniform_int(rng, 0, 1) == 1);
  }
  return m;
}

HeegaardDiagram random_diagram(int genus, std::uint64_t seed) {
  if (genus < 2) throw InputError("random diagrams need genus >= 2, got " + std::to_string(genus));
  auto rng = make_rng(seed, 0);
  auto d = scramble(standard_a_system(genus), rng);
  auto e = scramble(standard_b_system(genus), rng);
  return HeegaardDiagram(std::move(d), std::move(e));
}

HeegaardDiagram random_even_diagram(int genus, std::uint64_t seed) {
  if (genus < 2) throw InputError("random diagrams need genus >= 2, got " + std::to_string(genus));
  auto rng = make_rng(seed, 1);
  auto d = scramble(standard_a_system(genus), rng);
  DiskSystem e = d;
  for (int k = 0; k < 3 * genus; ++k) {
    const auto r = static_cast<std::size_t>(uniform_int(rng, 0, genus - 1));
    const auto t = static_cast<std::size_t>(uniform_int(rng, 0, genus - 2));
    e.curves[r] += e.curves[t >= r ? t + 1 : t];
  }
  shuffle_in_place(e.curves, rng);
  return HeegaardDiagram(std::move(d), std::move(e));
}

Coloring random_spanning_tree_coloring(const PantsGraph& p, Rng& rng) {
  std::vector<int> order(p.edges.size());
  std::iota(order.begin(), order.end(), 0);
  shuffle_in_place(order, rng);

  std::vector<int> parent(static_cast<std::size_t>(p.vertex_count()));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  Coloring c(p.edges.size(), EdgeColor::Red);
  for (int e : order) {
    const int ru = find(p.edges[e].u);
    const int rv = find(p.edges[e].v);
    if (ru != rv) {
      parent[rv] = ru;
      c[e] = EdgeColor::Blue;
    }
  }
  return c;
}

RandomPants random_pants(int genus, std::uint64_t seed) {
  if (genus < 2) throw InputError("pants graphs need genus >= 2, got " + std::to_string(genus));
  auto rng = make_rng(seed, 2);
  const int n = 2 * genus - 2;

  // Random tree of maximum degree 3, then pair the remaining 2g free ends.
  std::vector<int> degree(static_cast<std::size_t>(n), 0);
  std::vector<PantsEdge> edges;
  for (int v = 1; v < n; ++v) {
    std::vector<int> open;
    for (int w = 0; w < v; ++w) {
      if (degree[w] < 3) open.push_back(w);
    }
    const int w = open[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(open.size()) - 1))];
    edges.push_back({w, v});
    degree[w]++;
    degree[v]++;
  }
  std::vector<int> free_ends;
  for (int v = 0; v < n; ++v) {
    for (int k = degree[v]; k < 3; ++k) free_ends.push_back(v);
  }
  shuffle_in_place(free_ends, rng);
  for (std::size_t k = 0; k + 1 < free_ends.size(); k += 2) {
    edges.push_back({free_ends[k], free_ends[k + 1]});
  }

  std::vector<int> relabel(static_cast<std::size_t>(n));
  std::iota(relabel.begin(), relabel.end(), 0);
  shuffle_in_place(relabel, rng);
  for (auto& e : edges) {
    e.u = relabel[e.u];
    e.v = relabel[e.v];
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  shuffle_in_place(edges, rng);

  PantsGraph graph{genus, std::move(edges)};
  auto coloring = random_spanning_tree_coloring(graph, rng);
  return {std::move(graph), std::move(coloring)};
}

std::optional<std::pair<Gf2Vector, Gf2Vector>> find_odd_span_pair(const HeegaardDiagram& d) {
  const int g = d.genus();
  if (g > kMaxOracleGenus) {
    throw InputError("span enumeration is capped at genus " + std::to_string(kMaxOracleGenus));
  }
  const auto space = d.space();
  const std::uint64_t count = std::uint64_t{1} << g;
  // Consecutive Gray codes differ in bit countr_zero(k), so each step adds one generator.
  Gf2Vector x(g);
  for (std::uint64_t a = 0; a < count; ++a) {
    if (a) x += d.d(static_cast<std::size_t>(std::countr_zero(a)));
    Gf2Vector y(g);
    for (std::uint64_t b = 0; b < count; ++b) {
      if (b) y += d.e(static_cast<std::size_t>(std::countr_zero(b)));
      if (form(space, x, y)) return std::pair{x, y};
    }
  }
  return std::nullopt;
}

bool exhaustive_span_pairing(const HeegaardDiagram& d) { return !find_odd_span_pair(d).has_value(); }

MatrixSimulation simulate_evenize_matrix(const Gf2Matrix& m) {
  if (!m.is_square()) throw InputError("evenization needs a square parity matrix");
  MatrixSimulation sim;
  Gf2Matrix current = m;
  sim.trajectory.push_back(current);
  while (true) {
    const auto cert = certify_parity_matrix(current);
    if (cert.certified()) break;
    const auto [i, j] = *cert.witness;
    current = pivot_update(current, static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    sim.pivots.emplace_back(i, j);
    sim.trajectory.push_back(current);
    ++sim.steps;
  }
  return sim;
}

// ---------------------------------------------------------------------------
// OracleReport

std::size_t OracleReport::checks_run() const {
  std::size_t n = 0;
  for (const auto& c : counters) n += c.runs;
  return n;
}

void OracleReport::record(const std::string& check, bool ok,
                          const std::function<std::string()>& counterexample) {
  auto it = std::find_if(counters.begin(), counters.end(),
                         [&check](const CheckCounter& c) { return c.name == check; });
  if (it == counters.end()) {
    counters.push_back({check, 0, 0});
    it = std::prev(counters.end());
  }
  it->runs++;
  if (!ok) {
    if (it->failures < kStoredFailuresPerCheck) failures.push_back({check, counterexample()});
    it->failures++;
  }
}

void OracleReport::merge(const OracleReport& other) {
  for (const auto& c : other.counters) {
    auto it = std::find_if(counters.begin(), counters.end(),
                           [&c](const CheckCounter& mine) { return mine.name == c.name; });
    if (it == counters.end()) {
      counters.push_back(c);
    } else {
      it->runs += c.runs;
      it->failures += c.failures;
    }
  }
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
}

Gf2Vector corrupted_transvection(const SymplecticSpace& space, const Gf2Vector& gamma, const Gf2Vector& x) {
  space.require_member(x);
  return x + gamma;
}

// ---------------------------------------------------------------------------
// Property suite

namespace {

void check_transvections(OracleReport& report, const TransvectionFn& twist, Rng& rng, int g) {
  const SymplecticSpace space(g);
  for (int k = 0; k < 4; ++k) {
    const auto gamma = random_nonzero_vector(g, rng);
    const auto x = random_vector(g, rng);
    const auto y = random_vector(g, rng);
    const auto tx = twist(space, gamma, x);
    const auto ty = twist(space, gamma, y);
    auto example = [&] { return vectors_counterexample({{"gamma", &gamma}, {"x", &x}, {"y", &y}}); };

    const bool lhs = form(space, tx, y);
    const bool rhs = form(space, x, y) != (form(space, gamma, x) && form(space, gamma, y));
    report.record("twist_parity_rule", lhs == rhs, example);
    report.record("transvection_symplectic", form(space, tx, ty) == form(space, x, y), example);
    report.record("transvection_involution", twist(space, gamma, tx) == x, example);
  }
}

void check_twist_curve(OracleReport& report, Rng& rng, int g, std::uint64_t seed) {
  const auto d = random_diagram(g, seed);
  const auto space = d.space();
  const auto m = parity_matrix(d);
  std::vector<std::pair<std::size_t, std::size_t>> odd;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m.at(i, j)) odd.emplace_back(i, j);
    }
  }
  if (odd.empty()) return;
  const auto [i, j] = odd[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(odd.size()) - 1))];
  const auto gamma = twist_curve(space, d.d(i), d.e(j));

  bool ok = form(space, gamma, d.d(i)) && form(space, gamma, d.e(j));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r != i) ok = ok && form(space, gamma, d.d(r)) == form(space, d.d(r), d.e(j));
  }
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (c != j) ok = ok && form(space, gamma, d.e(c)) == form(space, d.d(i), d.e(c));
  }
  report.record("twist_curve_clears_pivot", ok, [&] { return diagram_counterexample(d); });
}

void check_pivot_update(OracleReport& report, Rng& rng, int g) {
  const auto n = static_cast<std::size_t>(g);
  auto m = random_matrix(n, n, rng);
  if (m.is_zero()) {
    m.set(static_cast<std::size_t>(uniform_int(rng, 0, g - 1)), static_cast<std::size_t>(uniform_int(rng, 0, g - 1)),
          true);
  }
  std::vector<std::pair<std::size_t, std::size_t>> odd;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (m.at(r, c)) odd.emplace_back(r, c);
    }
  }
  const auto [i, j] = odd[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(odd.size()) - 1))];
  const auto updated = pivot_update(m, i, j);

  bool ok = rank(updated) + 1 == rank(m);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const bool expected = m.at(r, c) != (m.at(r, j) && m.at(i, c));
      ok = ok && updated.at(r, c) == expected;
      if (r == i || c == j) ok = ok && !updated.at(r, c);
    }
  }
  report.record("pivot_update_clearing", ok, [&] {
    Json j_out = {{"matrix", matrix_to_json(m)}, {"pivot", {i + 1, j + 1}}};
    return j_out.dump();
  });
}

void check_even_twist(OracleReport& report, Rng& rng, int g, std::uint64_t seed) {
  const auto d = random_even_diagram(g, seed);
  Gf2Vector gamma(g);
  while (gamma.is_zero()) {
    for (int k = 0; k < g; ++k) {
      if (uniform_int(rng, 0, 1)) gamma += d.e(static_cast<std::size_t>(k));
    }
  }
  bool ok = false;
  try {
    ok = check_even_parity(preserve_even_twist(d, gamma)).certified();
  } catch (const std::exception&) {
    ok = false;
  }
  report.record("even_twist_preserved", ok, [&] {
    Json j = {{"diagram", diagram_to_json(d)}, {"gamma", gamma.to_bits()}};
    return j.dump();
  });
}

void check_evenize(OracleReport& report, int g, std::uint64_t seed) {
  const auto d = random_diagram(g, seed);
  auto example = [&] { return diagram_counterexample(d); };
  const auto result = evenize(d);
  const auto& seq = result.sequence;
  const auto r = rank(seq.initial_matrix);

  report.record("evenize_rank_count",
                seq.steps.size() == r && r <= static_cast<std::size_t>(g) && seq.final_matrix.is_zero() &&
                    check_even_parity(result.diagram).certified() &&
                    result.diagram.e_system() == d.e_system() && apply_sequence(d, seq) == result.diagram,
                example);

  const auto sim = simulate_evenize_matrix(seq.initial_matrix);
  bool same_pivots = sim.pivots.size() == seq.steps.size();
  for (std::size_t k = 0; same_pivots && k < sim.pivots.size(); ++k) {
    same_pivots = sim.pivots[k] == seq.steps[k].pivot;
  }
  report.record("evenize_matrix_agreement", same_pivots && sim.trajectory == seq.trajectory, example);
}

void check_oracle_equivalence(OracleReport& report, int g, std::uint64_t seed, bool even) {
  const auto d = even ? random_even_diagram(g, seed) : random_diagram(g, seed);
  const bool certified = check_even_parity(d).certified();
  report.record("oracle_equivalence",
                certified == exhaustive_span_pairing(d) && certified == lagrangians_coincide(d),
                [&] { return diagram_counterexample(d); });
}

void check_propagation(OracleReport& report, Rng& rng, int g, std::uint64_t seed) {
  const auto [graph, coloring] = random_pants(g, seed);
  auto example = [&] { return pants_counterexample(graph, coloring); };
  report.record("pants_generator_valid", validate_pants_graph(graph, coloring).empty(), example);

  const auto base = color_propagate(graph, coloring);
  report.record("propagation_all_red",
                base.all_red() && base.trace.size() <= static_cast<std::size_t>(2 * g - 3), example);

  bool confluent = true;
  for (int k = 0; k < 3; ++k) {
    const auto other = color_propagate(graph, coloring, rng);
    confluent = confluent && other.coloring == base.coloring && other.trace.size() == base.trace.size();
  }
  report.record("propagation_confluence", confluent, example);
}

void check_completion(OracleReport& report, Rng& rng, int g, std::uint64_t seed) {
  const auto [graph, coloring] = random_pants(g, seed);
  auto example = [&] { return pants_counterexample(graph, coloring); };

  auto red_input = [&](bool zero) {
    PartialParityAssignment in(graph.edges.size());
    for (std::size_t e = 0; e < in.size(); ++e) {
      if (coloring[e] == EdgeColor::Red) in[e] = zero ? 0 : static_cast<int>(uniform_int(rng, 0, 1));
    }
    return in;
  };

  const auto zero = parity_complete(graph, coloring, red_input(true));
  report.record("completion_zero_to_zero", std::all_of(zero.begin(), zero.end(), [](int x) { return x == 0; }),
                example);

  const auto r1 = red_input(false);
  const auto r2 = red_input(false);
  PartialParityAssignment sum(r1.size());
  for (std::size_t e = 0; e < sum.size(); ++e) {
    if (r1[e]) sum[e] = *r1[e] ^ *r2[e];
  }
  const auto c1 = parity_complete(graph, coloring, r1);
  const auto c2 = parity_complete(graph, coloring, r2);
  const auto cs = parity_complete(graph, coloring, sum);
  bool linear = true;
  for (std::size_t e = 0; e < cs.size(); ++e) linear = linear && cs[e] == (c1[e] ^ c2[e]);
  report.record("completion_linearity", linear, example);

  // Uniqueness by enumerating every blue assignment on small graphs.
  std::vector<std::size_t> blue;
  for (std::size_t e = 0; e < coloring.size(); ++e) {
    if (coloring[e] == EdgeColor::Blue) blue.push_back(e);
  }
  if (blue.size() > 13) return;
  std::size_t solutions = 0;
  bool matches = false;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << blue.size()); ++mask) {
    ParityAssignment trial = c1;
    for (std::size_t k = 0; k < blue.size(); ++k) trial[blue[k]] = static_cast<int>((mask >> k) & 1U);
    bool even = true;
    for (int v = 0; v < graph.vertex_count() && even; ++v) even = vertex_parity(graph, trial, v) == 0;
    if (even) {
      ++solutions;
      matches = trial == c1;
    }
  }
  report.record("completion_uniqueness", solutions == 1 && matches, example);
}

}  // namespace

OracleReport property_suite(std::uint64_t seed, std::size_t trials, const PropertySuiteOptions& options) {
  if (trials < 1) throw InputError("property suite needs at least one trial");
  const TransvectionFn twist = options.transvection ? options.transvection : TransvectionFn(dehn_twist_class);

  OracleReport report;
  for (std::size_t t = 0; t < trials; ++t) {
    auto rng = make_rng(seed, t);
    const auto trial_seed = static_cast<std::uint64_t>(rng());
    check_transvections(report, twist, rng, 2 + static_cast<int>(t % 9));
    check_twist_curve(report, rng, 2 + static_cast<int>(t % 7), trial_seed);
    check_pivot_update(report, rng, 1 + static_cast<int>(t % 8));
    check_even_twist(report, rng, 2 + static_cast<int>(t % 7), trial_seed);
    check_evenize(report, 2 + static_cast<int>(t % 7), trial_seed);
    check_oracle_equivalence(report, 2 + static_cast<int>(t % 5), trial_seed, t % 2 == 1);
    check_propagation(report, rng, 2 + static_cast<int>(t % 11), trial_seed);
    check_completion(report, rng, 2 + static_cast<int>(t % 11), trial_seed);
  }
  return report;
}

}  // namespace heegaard
