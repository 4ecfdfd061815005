#pragma once

// Independent verifiers and seeded generators used to cross-check the main
// implementations at small scale.

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "heegaard/diagram.hpp"
#include "heegaard/gf2.hpp"
#include "heegaard/pants.hpp"

namespace heegaard {

using Rng = std::mt19937_64;

/// Engine for stream `stream` of master seed `seed`; streams are independent.
Rng make_rng(std::uint64_t seed, std::uint64_t stream);

/// Uniform integer in [lo, hi], identical across standard libraries.
std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi);

Gf2Vector random_vector(int genus, Rng& rng);
Gf2Vector random_nonzero_vector(int genus, Rng& rng);
Gf2Matrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng);

/// Two disk systems obtained from the standard a- and b-systems by random
/// transvections and handle slides. Throws InputError for genus < 2.
HeegaardDiagram random_diagram(int genus, std::uint64_t seed);

/// A diagram whose E-system is a random basis of span(D), so it is even.
HeegaardDiagram random_even_diagram(int genus, std::uint64_t seed);

struct RandomPants {
  PantsGraph graph;
  Coloring coloring;
};

/// Random connected trivalent multigraph of the given genus, colored with a
/// random spanning tree in blue and the complement in red.
RandomPants random_pants(int genus, std::uint64_t seed);

/// Random spanning tree of a connected graph as a valid coloring.
Coloring random_spanning_tree_coloring(const PantsGraph& p, Rng& rng);

/// Brute force over all 2^g x 2^g pairs x in span(D), y in span(E), visited in
/// Gray-code order. Returns the first pair with form(x, y) = 1.
/// Throws InputError when genus exceeds kMaxOracleGenus.
std::optional<std::pair<Gf2Vector, Gf2Vector>> find_odd_span_pair(const HeegaardDiagram& d);

/// True iff every x in span(D) and y in span(E) pair evenly.
bool exhaustive_span_pairing(const HeegaardDiagram& d);

struct MatrixSimulation {
  std::size_t steps = 0;
  std::vector<std::pair<int, int>> pivots;
  /// Matrix before the first step and after each step.
  std::vector<Gf2Matrix> trajectory;
};

/// Matrix-only evenization: pivot_update at the lexicographically smallest odd
/// entry until zero. Throws InputError on a non-square matrix.
MatrixSimulation simulate_evenize_matrix(const Gf2Matrix& m);

struct CheckCounter {
  std::string name;
  std::size_t runs = 0;
  std::size_t failures = 0;
};

struct OracleFailure {
  std::string check;
  /// Compact JSON describing the failing input.
  std::string counterexample;
};

struct OracleReport {
  std::vector<CheckCounter> counters;
  std::vector<OracleFailure> failures;

  std::size_t checks_run() const;
  bool passed() const { return failures.empty(); }
  /// Records one run of `check`; stores the counterexample on failure.
  void record(const std::string& check, bool ok, const std::function<std::string()>& counterexample);
  void merge(const OracleReport& other);
};

using TransvectionFn =
    std::function<Gf2Vector(const SymplecticSpace&, const Gf2Vector& gamma, const Gf2Vector& x)>;

struct PropertySuiteOptions {
  /// Transvection under test in the twist-parity checks.
  TransvectionFn transvection;
};

/// Wrong on purpose: always adds gamma. Used to confirm the suite notices.
Gf2Vector corrupted_transvection(const SymplecticSpace& space, const Gf2Vector& gamma, const Gf2Vector& x);

/// Runs every twist and pants invariant over `trials` seeded random inputs.
/// Throws InputError when trials < 1.
OracleReport property_suite(std::uint64_t seed, std::size_t trials, const PropertySuiteOptions& options = {});

}  // namespace heegaard
