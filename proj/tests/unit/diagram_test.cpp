#include "heegaard/diagram.hpp"

#include <gtest/gtest.h>

#include "heegaard/errors.hpp"
#include "heegaard/oracle.hpp"
#include "reference.hpp"

namespace heegaard {
namespace {

Gf2Vector a(int g, int i) { return Gf2Vector::basis_a(g, i - 1); }
Gf2Vector b(int g, int i) { return Gf2Vector::basis_b(g, i - 1); }

TEST(ValidateDiskSystem, StandardSystemsAreValid) {
  for (int g = 2; g <= 6; ++g) {
    EXPECT_FALSE(validate_disk_system(standard_a_system(g)).has_value());
    EXPECT_FALSE(validate_disk_system(standard_b_system(g)).has_value());
  }
}

TEST(ValidateDiskSystem, NamesDependentCurve) {
  const auto v = validate_disk_system(DiskSystem{2, {a(2, 1), a(2, 1)}});
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(v->kind, DiskSystemViolation::Kind::Dependent);
  EXPECT_EQ(v->first, 1);
}

TEST(ValidateDiskSystem, NamesNonIsotropicPair) {
  const auto v = validate_disk_system(DiskSystem{2, {a(2, 1), b(2, 1)}});
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(v->kind, DiskSystemViolation::Kind::NotIsotropic);
  EXPECT_EQ(v->first, 0);
  EXPECT_EQ(v->second, 1);
}

TEST(ValidateDiskSystem, WrongShapeIsInputError) {
  EXPECT_THROW(validate_disk_system(DiskSystem{3, {a(3, 1), a(3, 2)}}), InputError);
  EXPECT_THROW(validate_disk_system(DiskSystem{2, {a(2, 1), a(3, 2)}}), InputError);
  EXPECT_THROW(HeegaardDiagram(standard_a_system(2), standard_a_system(3)), InputError);
  EXPECT_THROW(HeegaardDiagram(DiskSystem{2, {a(2, 1), b(2, 1)}}, standard_a_system(2)), InputError);
}

TEST(ParityMatrix, DisjointSystemsGiveZeroMatrix) {
  const HeegaardDiagram d(standard_a_system(3), standard_a_system(3));
  EXPECT_TRUE(parity_matrix(d).is_zero());
  EXPECT_TRUE(check_even_parity(d).certified());
  EXPECT_FALSE(check_even_parity(d).witness.has_value());
}

TEST(ParityMatrix, DualSystemsGiveIdentity) {
  const HeegaardDiagram d(standard_a_system(2), standard_b_system(2));
  EXPECT_EQ(parity_matrix(d), Gf2Matrix::identity(2));
  const auto cert = check_even_parity(d);
  EXPECT_EQ(cert.verdict, ParityCertificate::Verdict::OddPairFound);
  EXPECT_EQ(cert.witness, (std::pair{0, 0}));
}

TEST(ParityMatrix, EntrywiseForm) {
  const DiskSystem ds{2, {a(2, 1), a(2, 2)}};
  const DiskSystem es{2, {b(2, 1) + b(2, 2), b(2, 2)}};
  reference::Rows expected(2, reference::Bits(2));
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) expected[i][j] = reference::form(ds.curves[i].to_bits(), es.curves[j].to_bits());
  }
  ASSERT_EQ(expected, (reference::Rows{{1, 0}, {1, 1}}));
  EXPECT_EQ(parity_matrix(HeegaardDiagram(ds, es)).to_rows(), expected);
}

TEST(CheckEvenParity, WitnessIsLexicographicallySmallest) {
  // Parity matrix [[0,0],[0,1]] has its only odd entry at (2,2).
  const HeegaardDiagram d(DiskSystem{2, {a(2, 1), a(2, 2)}}, DiskSystem{2, {a(2, 1), b(2, 2)}});
  EXPECT_EQ(check_even_parity(d).witness, (std::pair{1, 1}));
  const auto m = Gf2Matrix::from_rows({{0, 1, 1}, {1, 0, 0}, {1, 1, 1}});
  EXPECT_EQ(certify_parity_matrix(m).witness, (std::pair{0, 1}));
  EXPECT_THROW(certify_parity_matrix(Gf2Matrix(2, 3)), InputError);
}

TEST(LagrangiansCoincide, Examples) {
  EXPECT_TRUE(lagrangians_coincide(HeegaardDiagram(standard_a_system(3), standard_a_system(3))));
  EXPECT_FALSE(lagrangians_coincide(HeegaardDiagram(standard_a_system(3), standard_b_system(3))));
  EXPECT_TRUE(lagrangians_coincide(
      HeegaardDiagram(DiskSystem{2, {a(2, 1), a(2, 2)}}, DiskSystem{2, {a(2, 1) + a(2, 2), a(2, 2)}})));
}

TEST(DiagramProperties, CertificateMatchesLagrangianEquality) {
  for (int g = 2; g <= 4; ++g) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const auto d = seed % 3 == 0 ? random_even_diagram(g, seed) : random_diagram(g, seed);
      ASSERT_EQ(check_even_parity(d).certified(), lagrangians_coincide(d)) << "g=" << g << " seed=" << seed;
    }
  }
}

TEST(DiagramProperties, EvenDiagramsPairEvenlyOnWholeSpans) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto d = random_even_diagram(3, seed);
    ASSERT_TRUE(check_even_parity(d).certified());
    reference::Rows ds, es;
    for (int k = 0; k < 3; ++k) {
      ds.push_back(d.d(k).to_bits());
      es.push_back(d.e(k).to_bits());
    }
    for (const auto& x : reference::span(ds, 6)) {
      for (const auto& y : reference::span(es, 6)) ASSERT_EQ(reference::form(x, y), 0);
    }
  }
}

TEST(DiagramProperties, SwappingSystemsTransposes) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto d = random_diagram(2 + static_cast<int>(seed % 6), seed);
    EXPECT_EQ(parity_matrix(d.swapped()), parity_matrix(d).transpose());
  }
}

}  // namespace
}  // namespace heegaard
