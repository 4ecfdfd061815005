#pragma once

// Heegaard diagrams at the level of mod-2 homology.
//
// A complete meridian disk system of a genus-g handlebody is modeled by the
// classes of its g boundary curves, which form a basis of a Lagrangian subspace
// of H_1(S; Z/2). Intersection counts are tracked only mod 2: the mod-2 count is
// a homotopy invariant, so the homology classes determine every parity needed
// by the even parity criterion and the twist algorithm.

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "heegaard/gf2.hpp"

namespace heegaard {

/// Boundary classes of a complete meridian disk system.
struct DiskSystem {
  int genus = 0;
  std::vector<Gf2Vector> curves;

  friend bool operator==(const DiskSystem&, const DiskSystem&) = default;
};

struct DiskSystemViolation {
  enum class Kind { Dependent, NotIsotropic };
  Kind kind;
  /// 0-based curve indices. For Dependent, `first` is the curve that lies in the
  /// span of the curves before it and `second` is unused (-1).
  int first = -1;
  int second = -1;

  std::string describe() const;
};

/// Returns nullopt when the curves form an isotropic basis. Throws InputError on
/// a wrong curve count or curve length.
std::optional<DiskSystemViolation> validate_disk_system(const DiskSystem& s);

/// A genus-g splitting presented by its two disk systems. Always valid once
/// constructed.
class HeegaardDiagram {
 public:
  /// Throws InputError if either system is invalid or the genera disagree.
  HeegaardDiagram(DiskSystem d_system, DiskSystem e_system);

  int genus() const { return d_.genus; }
  SymplecticSpace space() const { return SymplecticSpace(d_.genus); }
  const DiskSystem& d_system() const { return d_; }
  const DiskSystem& e_system() const { return e_; }
  const Gf2Vector& d(std::size_t i) const { return d_.curves[i]; }
  const Gf2Vector& e(std::size_t j) const { return e_.curves[j]; }

  HeegaardDiagram swapped() const { return HeegaardDiagram(e_, d_); }

  friend bool operator==(const HeegaardDiagram&, const HeegaardDiagram&) = default;

 private:
  DiskSystem d_;
  DiskSystem e_;
};

/// Standard systems {a_1..a_g} and {b_1..b_g}.
DiskSystem standard_a_system(int genus);
DiskSystem standard_b_system(int genus);

/// M[i][j] = |D_i cap E_j| mod 2 = form(d_i, e_j).
Gf2Matrix parity_matrix(const HeegaardDiagram& d);

struct ParityCertificate {
  enum class Verdict { EvenParityCertified, OddPairFound };
  Verdict verdict;
  /// 0-based (i, j); present exactly when verdict is OddPairFound.
  std::optional<std::pair<int, int>> witness;

  bool certified() const { return verdict == Verdict::EvenParityCertified; }
  friend bool operator==(const ParityCertificate&, const ParityCertificate&) = default;
};

/// Matrix-level form of the criterion; the witness is the lexicographically
/// smallest odd entry. Throws InputError on a non-square matrix.
ParityCertificate certify_parity_matrix(const Gf2Matrix& m);

/// Even parity condition: every |D_i cap E_j| is even, which makes the
/// splitting unstabilized.
ParityCertificate check_even_parity(const HeegaardDiagram& d);

/// span(D) == span(E).
bool lagrangians_coincide(const HeegaardDiagram& d);

}  // namespace heegaard
