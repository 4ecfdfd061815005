#pragma once

// Dehn twists on mod-2 homology and the evenization algorithm.
//
// On H_1(S; Z/2) the twist along gamma acts as the transvection
//   T_gamma(x) = x + <gamma, x> gamma,
// which gives the parity rule
//   <T_gamma(x), y> = <x, y> + <gamma, x><gamma, y>.
// Evenization repeatedly picks an odd entry (i, j) of the parity matrix, forms
// gamma = T_{e_j}(d_i) and twists every D-curve along it. On the parity matrix
// this is a rank-one elimination that clears row i and column j, so the number
// of twists equals the rank of the starting matrix and never exceeds g.

#include <utility>
#include <vector>

#include "heegaard/diagram.hpp"
#include "heegaard/gf2.hpp"

namespace heegaard {

struct TwistStep {
  Gf2Vector gamma;
  /// 0-based (i, j) of the odd entry that selected this twist.
  std::pair<int, int> pivot;
  /// 1-based position in the sequence.
  int stage = 0;

  friend bool operator==(const TwistStep&, const TwistStep&) = default;
};

struct TwistSequence {
  std::vector<TwistStep> steps;
  Gf2Matrix initial_matrix;
  Gf2Matrix final_matrix;
  /// Parity matrix before the first step and after every step; size steps+1.
  std::vector<Gf2Matrix> trajectory;

  friend bool operator==(const TwistSequence&, const TwistSequence&) = default;
};

struct EvenizeResult {
  TwistSequence sequence;
  HeegaardDiagram diagram;
};

/// x + form(gamma, x) * gamma.
Gf2Vector dehn_twist_class(const SymplecticSpace& space, const Gf2Vector& gamma, const Gf2Vector& x);

/// gamma = T_e(d) = d + e. Throws PreconditionError("pivot not odd") when form(e, d) = 0.
Gf2Vector twist_curve(const SymplecticSpace& space, const Gf2Vector& d, const Gf2Vector& e);

/// M'[r][c] = M[r][c] + M[r][j] * M[i][c]. Throws PreconditionError if M[i][j] = 0
/// and InputError if (i, j) is out of range.
Gf2Matrix pivot_update(const Gf2Matrix& m, std::size_t i, std::size_t j);

/// Applies T_gamma to every curve of the system.
DiskSystem twist_system(const DiskSystem& s, const Gf2Vector& gamma);

/// Drives the parity matrix to zero by twisting the D-system. The E-system is
/// never touched. Every intermediate D-system is revalidated.
EvenizeResult evenize(const HeegaardDiagram& d);

/// Twists the D-system along a gamma that pairs evenly with every E-curve.
/// Throws PreconditionError if d is not even or if some form(gamma, e_j) = 1
/// (the message names the first such j, 1-based).
HeegaardDiagram preserve_even_twist(const HeegaardDiagram& d, const Gf2Vector& gamma);

/// Replays the steps of s on the D-system. Throws InputError on genus mismatch.
HeegaardDiagram apply_sequence(const HeegaardDiagram& d, const TwistSequence& s);

}  // namespace heegaard
