#include "heegaard/diagram.hpp"

#include <sstream>

#include "heegaard/errors.hpp"

namespace heegaard {

std::string DiskSystemViolation::describe() const {
  std::ostringstream out;
  switch (kind) {
    case Kind::Dependent:
      out << "dependent: curve " << first + 1 << " lies in the span of the preceding curves";
      break;
    case Kind::NotIsotropic:
      out << "not isotropic: curves " << first + 1 << " and " << second + 1
          << " have odd intersection";
      break;
  }
  return out.str();
}

std::optional<DiskSystemViolation> validate_disk_system(const DiskSystem& s) {
  const SymplecticSpace space(s.genus);
  if (s.curves.size() != static_cast<std::size_t>(s.genus)) {
    std::ostringstream msg;
    msg << "disk system of genus " << s.genus << " needs " << s.genus << " curves, got "
        << s.curves.size();
    throw InputError(msg.str());
  }
  for (std::size_t i = 0; i < s.curves.size(); ++i) {
    if (s.curves[i].genus() != s.genus) {
      std::ostringstream msg;
      msg << "curve " << i + 1 << " has " << s.curves[i].dimension() << " coordinates, expected "
          << space.dimension();
      throw InputError(msg.str());
    }
  }

  EchelonBasis basis(space.dimension());
  for (std::size_t i = 0; i < s.curves.size(); ++i) {
    if (!basis.insert(s.curves[i].flatten())) {
      return DiskSystemViolation{DiskSystemViolation::Kind::Dependent, static_cast<int>(i), -1};
    }
  }
  for (std::size_t i = 0; i < s.curves.size(); ++i) {
    for (std::size_t j = i + 1; j < s.curves.size(); ++j) {
      if (form(space, s.curves[i], s.curves[j])) {
        return DiskSystemViolation{DiskSystemViolation::Kind::NotIsotropic, static_cast<int>(i),
                                   static_cast<int>(j)};
      }
    }
  }
  return std::nullopt;
}

HeegaardDiagram::HeegaardDiagram(DiskSystem d_system, DiskSystem e_system)
    : d_(std::move(d_system)), e_(std::move(e_system)) {
  if (d_.genus != e_.genus) {
    throw InputError("disk systems have different genera: " + std::to_string(d_.genus) + " and " +
                     std::to_string(e_.genus));
  }
  if (auto v = validate_disk_system(d_)) {
    throw InputError("D-system invalid: " + v->describe());
  }
  if (auto v = validate_disk_system(e_)) {
    throw InputError("E-system invalid: " + v->describe());
  }
}

DiskSystem standard_a_system(int genus) {
  DiskSystem s{genus, {}};
  for (int i = 0; i < genus; ++i) s.curves.push_back(Gf2Vector::basis_a(genus, i));
  return s;
}

DiskSystem standard_b_system(int genus) {
  DiskSystem s{genus, {}};
  for (int i = 0; i < genus; ++i) s.curves.push_back(Gf2Vector::basis_b(genus, i));
  return s;
}

Gf2Matrix parity_matrix(const HeegaardDiagram& d) {
  const auto space = d.space();
  const auto g = static_cast<std::size_t>(d.genus());
  Gf2Matrix m(g, g);
  for (std::size_t i = 0; i < g; ++i) {
    for (std::size_t j = 0; j < g; ++j) {
      if (form(space, d.d(i), d.e(j))) m.set(i, j, true);
    }
  }
  return m;
}

ParityCertificate certify_parity_matrix(const Gf2Matrix& m) {
  if (!m.is_square()) {
    throw InputError("parity matrix must be square");
  }
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (auto j = m.row(i).first_set()) {
      return {ParityCertificate::Verdict::OddPairFound,
              std::pair{static_cast<int>(i), static_cast<int>(*j)}};
    }
  }
  return {ParityCertificate::Verdict::EvenParityCertified, std::nullopt};
}

ParityCertificate check_even_parity(const HeegaardDiagram& d) {
  return certify_parity_matrix(parity_matrix(d));
}

bool lagrangians_coincide(const HeegaardDiagram& d) {
  return span_equal(d.d_system().curves, d.e_system().curves);
}

}  // namespace heegaard
