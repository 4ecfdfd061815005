#include "heegaard/gf2.hpp"

#include <bit>
#include <sstream>

#include "heegaard/errors.hpp"

namespace heegaard {
namespace {

constexpr std::size_t kWordBits = 64;

std::size_t word_count(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

}  // namespace

// ---------------------------------------------------------------------------
// BitVector

BitVector::BitVector(std::size_t size) : size_(size), words_(word_count(size), 0) {}

bool BitVector::get(std::size_t i) const {
  return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
}

void BitVector::set(std::size_t i, bool value) {
  const std::uint64_t mask = std::uint64_t{1} << (i % kWordBits);
  if (value) {
    words_[i / kWordBits] |= mask;
  } else {
    words_[i / kWordBits] &= ~mask;
  }
}

void BitVector::flip(std::size_t i) { words_[i / kWordBits] ^= std::uint64_t{1} << (i % kWordBits); }

BitVector& BitVector::operator^=(const BitVector& other) {
  if (other.size_ != size_) {
    throw InputError("bit vector length mismatch");
  }
  for (std::size_t w = 0; w < words_.size(); ++w) {
    words_[w] ^= other.words_[w];
  }
  return *this;
}

bool BitVector::none() const {
  for (auto w : words_) {
    if (w != 0) return false;
  }
  return true;
}

std::size_t BitVector::popcount() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool BitVector::dot(const BitVector& other) const {
  if (other.size_ != size_) {
    throw InputError("bit vector length mismatch");
  }
  std::uint64_t acc = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    acc ^= words_[w] & other.words_[w];
  }
  return std::popcount(acc) & 1;
}

std::optional<std::size_t> BitVector::first_set() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) {
      return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
    }
  }
  return std::nullopt;
}

std::vector<int> BitVector::to_bits() const {
  std::vector<int> out(size_);
  for (std::size_t i = 0; i < size_; ++i) out[i] = get(i) ? 1 : 0;
  return out;
}

// ---------------------------------------------------------------------------
// Gf2Vector

Gf2Vector::Gf2Vector(int genus)
    : genus_(genus), a_(static_cast<std::size_t>(genus)), b_(static_cast<std::size_t>(genus)) {
  if (genus < 1) {
    throw InputError("class vector needs a positive genus");
  }
}

Gf2Vector Gf2Vector::from_bits(const std::vector<int>& bits) {
  if (bits.empty() || bits.size() % 2 != 0) {
    std::ostringstream msg;
    msg << "class vector must have positive even length, got " << bits.size();
    throw InputError(msg.str());
  }
  Gf2Vector v(static_cast<int>(bits.size() / 2));
  for (std::size_t k = 0; k < bits.size(); ++k) {
    if (bits[k] != 0 && bits[k] != 1) {
      std::ostringstream msg;
      msg << "coordinate " << k << " is " << bits[k] << ", expected 0 or 1";
      throw InputError(msg.str());
    }
    v.set_bit(k, bits[k] == 1);
  }
  return v;
}

Gf2Vector Gf2Vector::basis_a(int genus, int i) {
  Gf2Vector v(genus);
  v.a_.set(static_cast<std::size_t>(i), true);
  return v;
}

Gf2Vector Gf2Vector::basis_b(int genus, int i) {
  Gf2Vector v(genus);
  v.b_.set(static_cast<std::size_t>(i), true);
  return v;
}

Gf2Vector Gf2Vector::basis(int genus, std::size_t k) {
  Gf2Vector v(genus);
  v.set_bit(k, true);
  return v;
}

bool Gf2Vector::bit(std::size_t k) const {
  const auto g = static_cast<std::size_t>(genus_);
  return k < g ? a_.get(k) : b_.get(k - g);
}

void Gf2Vector::set_bit(std::size_t k, bool value) {
  const auto g = static_cast<std::size_t>(genus_);
  if (k < g) {
    a_.set(k, value);
  } else {
    b_.set(k - g, value);
  }
}

Gf2Vector& Gf2Vector::operator+=(const Gf2Vector& other) {
  if (other.genus_ != genus_) {
    throw InputError("class vectors from different genera");
  }
  a_ ^= other.a_;
  b_ ^= other.b_;
  return *this;
}

std::vector<int> Gf2Vector::to_bits() const {
  std::vector<int> out(dimension());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = bit(k) ? 1 : 0;
  return out;
}

BitVector Gf2Vector::flatten() const {
  BitVector flat(dimension());
  for (std::size_t k = 0; k < dimension(); ++k) {
    if (bit(k)) flat.set(k, true);
  }
  return flat;
}

// ---------------------------------------------------------------------------
// Gf2Matrix

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}

Gf2Matrix Gf2Matrix::identity(std::size_t n) {
  Gf2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

Gf2Matrix Gf2Matrix::from_rows(const std::vector<std::vector<int>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Gf2Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw InputError("ragged matrix: row " + std::to_string(r) + " has a different length");
    }
    for (std::size_t c = 0; c < cols; ++c) {
      if (rows[r][c] != 0 && rows[r][c] != 1) {
        throw InputError("matrix entries must be 0 or 1");
      }
      m.set(r, c, rows[r][c] == 1);
    }
  }
  return m;
}

bool Gf2Matrix::is_zero() const {
  for (const auto& r : rows_) {
    if (r.any()) return false;
  }
  return true;
}

Gf2Matrix Gf2Matrix::transpose() const {
  Gf2Matrix t(cols_, rows());
  for (std::size_t r = 0; r < rows(); ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (at(r, c)) t.set(c, r, true);
    }
  }
  return t;
}

std::vector<std::vector<int>> Gf2Matrix::to_rows() const {
  std::vector<std::vector<int>> out;
  out.reserve(rows());
  for (const auto& r : rows_) out.push_back(r.to_bits());
  return out;
}

// ---------------------------------------------------------------------------
// EchelonBasis

BitVector EchelonBasis::reduce(BitVector v) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    if (v.get(pivots_[k])) v ^= rows_[k];
  }
  return v;
}

bool EchelonBasis::insert(BitVector v) {
  if (v.size() != dimension_) {
    throw InputError("vector dimension does not match basis dimension");
  }
  v = reduce(std::move(v));
  const auto pivot = v.first_set();
  if (!pivot) return false;
  pivots_.push_back(*pivot);
  rows_.push_back(std::move(v));
  return true;
}

// ---------------------------------------------------------------------------
// SymplecticSpace and free operations

SymplecticSpace::SymplecticSpace(int genus) : genus_(genus) {
  if (genus < 2 || genus > kMaxGenus) {
    throw InputError("genus must be in [2, " + std::to_string(kMaxGenus) + "], got " +
                     std::to_string(genus));
  }
}

void SymplecticSpace::require_member(const Gf2Vector& v) const {
  if (v.genus() != genus_) {
    std::ostringstream msg;
    msg << "dimension mismatch: vector has " << v.dimension() << " coordinates, space has "
        << dimension();
    throw InputError(msg.str());
  }
}

bool form(const SymplecticSpace& space, const Gf2Vector& x, const Gf2Vector& y) {
  space.require_member(x);
  space.require_member(y);
  return x.a_block().dot(y.b_block()) != x.b_block().dot(y.a_block());
}

std::size_t rank(std::span<const BitVector> rows) {
  if (rows.empty()) return 0;
  EchelonBasis basis(rows.front().size());
  for (const auto& r : rows) basis.insert(r);
  return basis.rank();
}

std::size_t rank(const Gf2Matrix& m) {
  EchelonBasis basis(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) basis.insert(m.row(r));
  return basis.rank();
}

std::size_t rank(std::span<const Gf2Vector> vectors) {
  if (vectors.empty()) return 0;
  EchelonBasis basis(vectors.front().dimension());
  for (const auto& v : vectors) basis.insert(v.flatten());
  return basis.rank();
}

bool is_isotropic(const SymplecticSpace& space, std::span<const Gf2Vector> vs) {
  for (std::size_t i = 0; i < vs.size(); ++i) {
    space.require_member(vs[i]);
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (form(space, vs[i], vs[j])) return false;
    }
  }
  return true;
}

bool span_equal(std::span<const Gf2Vector> vs, std::span<const Gf2Vector> ws) {
  std::size_t dim = 0;
  for (const auto& v : vs) dim = v.dimension();
  for (const auto& w : ws) {
    if (dim != 0 && w.dimension() != dim) throw InputError("span_equal: mixed ambient dimensions");
    dim = w.dimension();
  }
  if (dim == 0) return true;

  EchelonBasis left(dim);
  EchelonBasis right(dim);
  for (const auto& v : vs) left.insert(v.flatten());
  for (const auto& w : ws) right.insert(w.flatten());
  for (const auto& v : vs) {
    if (!right.contains(v.flatten())) return false;
  }
  for (const auto& w : ws) {
    if (!left.contains(w.flatten())) return false;
  }
  return true;
}

}  // namespace heegaard
