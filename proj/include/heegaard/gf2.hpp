#pragma once

// Bit-packed linear algebra over GF(2) and the standard symplectic form on
// H_1(S; Z/2) of a closed genus-g surface.
//
// A class vector has 2g coordinates laid out as [a_1 .. a_g | b_1 .. b_g] where
// (a_i, b_i) is a standard symplectic basis: <a_i, b_i> = 1, every other pair of
// basis vectors pairs to 0. The a- and b-blocks are packed into separate word
// arrays so the form reduces to two AND-popcounts.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace heegaard {

inline constexpr int kMaxGenus = 1024;
inline constexpr int kMaxOracleGenus = 24;

/// Fixed-length packed bit string. Bits past size() in the last word are kept zero.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size);

  std::size_t size() const { return size_; }
  bool get(std::size_t i) const;
  void set(std::size_t i, bool value);
  void flip(std::size_t i);

  BitVector& operator^=(const BitVector& other);
  friend BitVector operator^(BitVector lhs, const BitVector& rhs) {
    lhs ^= rhs;
    return lhs;
  }

  bool none() const;
  bool any() const { return !none(); }
  std::size_t popcount() const;
  /// Parity of the bitwise AND, i.e. the standard dot product mod 2.
  bool dot(const BitVector& other) const;
  std::optional<std::size_t> first_set() const;

  std::span<const std::uint64_t> words() const { return words_; }
  std::vector<int> to_bits() const;

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Mod-2 homology class of a curve on a genus-g surface.
class Gf2Vector {
 public:
  Gf2Vector() = default;
  explicit Gf2Vector(int genus);

  /// Builds a class from 2g coordinates in a-then-b order. Throws InputError on
  /// odd length, empty input or entries other than 0/1.
  static Gf2Vector from_bits(const std::vector<int>& bits);
  static Gf2Vector basis_a(int genus, int i);
  static Gf2Vector basis_b(int genus, int i);
  /// Basis vector by flat coordinate index k in [0, 2g).
  static Gf2Vector basis(int genus, std::size_t k);

  int genus() const { return genus_; }
  std::size_t dimension() const { return 2 * static_cast<std::size_t>(genus_); }

  bool bit(std::size_t k) const;
  void set_bit(std::size_t k, bool value);
  bool a(int i) const { return a_.get(static_cast<std::size_t>(i)); }
  bool b(int i) const { return b_.get(static_cast<std::size_t>(i)); }

  const BitVector& a_block() const { return a_; }
  const BitVector& b_block() const { return b_; }

  Gf2Vector& operator+=(const Gf2Vector& other);
  friend Gf2Vector operator+(Gf2Vector lhs, const Gf2Vector& rhs) {
    lhs += rhs;
    return lhs;
  }

  bool is_zero() const { return a_.none() && b_.none(); }
  std::vector<int> to_bits() const;
  BitVector flatten() const;

  friend bool operator==(const Gf2Vector&, const Gf2Vector&) = default;

 private:
  int genus_ = 0;
  BitVector a_;
  BitVector b_;
};

/// Dense row-major GF(2) matrix.
class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(std::size_t rows, std::size_t cols);

  static Gf2Matrix identity(std::size_t n);
  /// Throws InputError on ragged rows or non-binary entries.
  static Gf2Matrix from_rows(const std::vector<std::vector<int>>& rows);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  bool at(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool value) { rows_[r].set(c, value); }
  const BitVector& row(std::size_t r) const { return rows_[r]; }
  BitVector& row(std::size_t r) { return rows_[r]; }

  bool is_zero() const;
  bool is_square() const { return rows() == cols(); }
  Gf2Matrix transpose() const;
  std::vector<std::vector<int>> to_rows() const;

  friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

 private:
  std::size_t cols_ = 0;
  std::vector<BitVector> rows_;
};

/// Incrementally maintained row-echelon basis of a subspace of GF(2)^n.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t dimension) : dimension_(dimension) {}

  /// Adds v to the spanning set; returns false if v was already in the span.
  bool insert(BitVector v);
  BitVector reduce(BitVector v) const;
  bool contains(const BitVector& v) const { return reduce(v).none(); }
  std::size_t rank() const { return rows_.size(); }
  std::size_t dimension() const { return dimension_; }

 private:
  std::size_t dimension_;
  std::vector<BitVector> rows_;
  std::vector<std::size_t> pivots_;
};

/// H_1(S; Z/2) of a closed genus-g surface with its intersection form.
class SymplecticSpace {
 public:
  /// Throws InputError unless 2 <= genus <= kMaxGenus.
  explicit SymplecticSpace(int genus);

  int genus() const { return genus_; }
  std::size_t dimension() const { return 2 * static_cast<std::size_t>(genus_); }

  /// Throws InputError if v does not live in this space.
  void require_member(const Gf2Vector& v) const;

 private:
  int genus_;
};

/// Mod-2 intersection pairing: sum_i (x_{a_i} y_{b_i} + x_{b_i} y_{a_i}).
bool form(const SymplecticSpace& space, const Gf2Vector& x, const Gf2Vector& y);

std::size_t rank(const Gf2Matrix& m);
std::size_t rank(std::span<const BitVector> rows);
std::size_t rank(std::span<const Gf2Vector> vectors);

bool is_isotropic(const SymplecticSpace& space, std::span<const Gf2Vector> vs);

/// True iff span(vs) == span(ws). Throws InputError on mixed ambient dimensions.
bool span_equal(std::span<const Gf2Vector> vs, std::span<const Gf2Vector> ws);

}  // namespace heegaard
