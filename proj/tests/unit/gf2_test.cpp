#include "heegaard/gf2.hpp"

#include <gtest/gtest.h>

#include "heegaard/errors.hpp"
#include "heegaard/oracle.hpp"
#include "reference.hpp"

namespace heegaard {
namespace {

Gf2Vector a(int g, int i) { return Gf2Vector::basis_a(g, i - 1); }
Gf2Vector b(int g, int i) { return Gf2Vector::basis_b(g, i - 1); }

TEST(Gf2Form, BasisRelations) {
  const SymplecticSpace s(3);
  EXPECT_TRUE(form(s, a(3, 1), b(3, 1)));
  EXPECT_FALSE(form(s, a(3, 1), a(3, 2)));
  EXPECT_FALSE(form(s, b(3, 1), b(3, 2)));
  EXPECT_FALSE(form(s, a(3, 1), b(3, 2)));
}

TEST(Gf2Form, CrossedSumsPairEvenly) {
  const auto x = a(2, 1) + b(2, 2);
  const auto y = b(2, 1) + a(2, 2);
  ASSERT_EQ(reference::form(x.to_bits(), y.to_bits()), 0);
  EXPECT_FALSE(form(SymplecticSpace(2), x, y));
}

TEST(Gf2Form, DimensionMismatchIsInputError) {
  EXPECT_THROW(form(SymplecticSpace(2), a(2, 1), a(3, 1)), InputError);
  EXPECT_THROW(SymplecticSpace(1), InputError);
  EXPECT_THROW(SymplecticSpace(kMaxGenus + 1), InputError);
}

TEST(Gf2Vector, FromBitsValidates) {
  EXPECT_THROW(Gf2Vector::from_bits({1, 0, 1}), InputError);
  EXPECT_THROW(Gf2Vector::from_bits({}), InputError);
  EXPECT_THROW(Gf2Vector::from_bits({1, 2}), InputError);
  const auto v = Gf2Vector::from_bits({1, 0, 0, 1});
  EXPECT_EQ(v, a(2, 1) + b(2, 2));
  EXPECT_EQ(v.to_bits(), (std::vector<int>{1, 0, 0, 1}));
}

TEST(Gf2Vector, PackingMatchesCoordinatesAcrossWordBoundaries) {
  auto rng = make_rng(5, 0);
  for (int g : {2, 31, 32, 33, 63, 64, 65, 130}) {
    const auto v = random_vector(g, rng);
    const auto bits = v.to_bits();
    ASSERT_EQ(Gf2Vector::from_bits(bits), v);
    for (std::size_t k = 0; k < bits.size(); ++k) ASSERT_EQ(v.bit(k), bits[k] == 1);
  }
}

TEST(Gf2Rank, Examples) {
  EXPECT_EQ(rank(Gf2Matrix(3, 3)), 0U);
  EXPECT_EQ(rank(Gf2Matrix::identity(5)), 5U);
  const reference::Rows ones{{1, 1}, {1, 1}};
  ASSERT_EQ(reference::rank(ones), 1U);
  EXPECT_EQ(rank(Gf2Matrix::from_rows(ones)), 1U);
}

TEST(Gf2Rank, AgreesWithReferenceEliminationUpTo64) {
  auto rng = make_rng(11, 0);
  for (int trial = 0; trial < 200; ++trial) {
    const auto rows = static_cast<std::size_t>(uniform_int(rng, 1, 64));
    const auto cols = static_cast<std::size_t>(uniform_int(rng, 1, 64));
    auto m = random_matrix(rows, cols, rng);
    // Sparse rows make low-rank cases common.
    if (trial % 3 == 0) {
      for (std::size_t r = 1; r < rows; r += 2) m.row(r) = m.row(r - 1);
    }
    ASSERT_EQ(rank(m), reference::rank(m.to_rows())) << "trial " << trial;
    ASSERT_LE(rank(m), std::min(rows, cols));
  }
}

TEST(Gf2Isotropic, Examples) {
  const SymplecticSpace s(3);
  const std::vector<Gf2Vector> a_basis{a(3, 1), a(3, 2), a(3, 3)};
  EXPECT_TRUE(is_isotropic(s, a_basis));
  const std::vector<Gf2Vector> hyperbolic{a(3, 1), b(3, 1)};
  EXPECT_FALSE(is_isotropic(s, hyperbolic));

  const std::vector<Gf2Vector> crossed{a(2, 1) + b(2, 2), a(2, 2) + b(2, 1)};
  ASSERT_EQ(reference::form(crossed[0].to_bits(), crossed[1].to_bits()), 0);
  EXPECT_TRUE(is_isotropic(SymplecticSpace(2), crossed));
  EXPECT_THROW(is_isotropic(s, crossed), InputError);
}

TEST(Gf2SpanEqual, Examples) {
  const std::vector<Gf2Vector> v{a(2, 1), a(2, 2)};
  const std::vector<Gf2Vector> swapped{a(2, 2), a(2, 1)};
  const std::vector<Gf2Vector> slid{a(2, 1), a(2, 1) + a(2, 2)};
  EXPECT_TRUE(span_equal(v, swapped));
  ASSERT_EQ(reference::span(reference::Rows{v[0].to_bits(), v[1].to_bits()}, 4),
            reference::span(reference::Rows{slid[0].to_bits(), slid[1].to_bits()}, 4));
  EXPECT_TRUE(span_equal(v, slid));
  const std::vector<Gf2Vector> a1{a(2, 1)};
  const std::vector<Gf2Vector> b1{b(2, 1)};
  EXPECT_FALSE(span_equal(a1, b1));
}

TEST(Gf2SpanEqual, AgreesWithSubsetEnumeration) {
  auto rng = make_rng(12, 0);
  for (int trial = 0; trial < 300; ++trial) {
    const int g = static_cast<int>(uniform_int(rng, 2, 3));
    std::vector<Gf2Vector> vs, ws;
    reference::Rows vr, wr;
    for (int k = 0; k < 3; ++k) {
      vs.push_back(random_vector(g, rng));
      vr.push_back(vs.back().to_bits());
    }
    // Half the time draw ws from span(vs) so equal spans actually occur.
    for (int k = 0; k < 3; ++k) {
      Gf2Vector w = random_vector(g, rng);
      if (trial % 2) {
        w = Gf2Vector(g);
        for (const auto& v : vs) {
          if (uniform_int(rng, 0, 1)) w += v;
        }
      }
      ws.push_back(w);
      wr.push_back(w.to_bits());
    }
    const auto dim = static_cast<std::size_t>(2 * g);
    ASSERT_EQ(span_equal(vs, ws), reference::span(vr, dim) == reference::span(wr, dim));
  }
}

// Form properties over random vectors, checked against the coordinate formula.
TEST(Gf2FormProperties, BilinearAlternatingNondegenerate) {
  auto rng = make_rng(13, 0);
  for (int trial = 0; trial < 2000; ++trial) {
    const int g = static_cast<int>(uniform_int(rng, 2, 70));
    const SymplecticSpace s(g);
    const auto x = random_vector(g, rng);
    const auto y = random_vector(g, rng);
    const auto z = random_vector(g, rng);
    ASSERT_EQ(form(s, x, y), reference::form(x.to_bits(), y.to_bits()) == 1);
    ASSERT_EQ(form(s, x + y, z), form(s, x, z) != form(s, y, z));
    ASSERT_EQ(form(s, x, y), form(s, y, x));
    ASSERT_FALSE(form(s, x, x));
    if (!x.is_zero()) {
      bool witnessed = false;
      for (std::size_t k = 0; k < s.dimension() && !witnessed; ++k) {
        witnessed = form(s, x, Gf2Vector::basis(g, k));
      }
      ASSERT_TRUE(witnessed);
    }
  }
}

TEST(Gf2EchelonBasis, InsertReportsDependence) {
  EchelonBasis basis(4);
  EXPECT_TRUE(basis.insert(a(2, 1).flatten()));
  EXPECT_TRUE(basis.insert((a(2, 1) + b(2, 2)).flatten()));
  EXPECT_FALSE(basis.insert(b(2, 2).flatten()));
  EXPECT_EQ(basis.rank(), 2U);
  EXPECT_TRUE(basis.contains(b(2, 2).flatten()));
  EXPECT_FALSE(basis.contains(b(2, 1).flatten()));
}

}  // namespace
}  // namespace heegaard
