#include "heegaard/twist.hpp"

#include <sstream>

#include "heegaard/errors.hpp"

namespace heegaard {

Gf2Vector dehn_twist_class(const SymplecticSpace& space, const Gf2Vector& gamma, const Gf2Vector& x) {
  if (form(space, gamma, x)) return x + gamma;
  return x;
}

Gf2Vector twist_curve(const SymplecticSpace& space, const Gf2Vector& d, const Gf2Vector& e) {
  if (!form(space, e, d)) {
    throw PreconditionError("pivot not odd: the twisting curves pair evenly");
  }
  return dehn_twist_class(space, e, d);
}

Gf2Matrix pivot_update(const Gf2Matrix& m, std::size_t i, std::size_t j) {
  if (i >= m.rows() || j >= m.cols()) {
    std::ostringstream msg;
    msg << "pivot (" << i + 1 << ", " << j + 1 << ") outside a " << m.rows() << "x" << m.cols()
        << " matrix";
    throw InputError(msg.str());
  }
  if (!m.at(i, j)) {
    std::ostringstream msg;
    msg << "pivot not odd: entry (" << i + 1 << ", " << j + 1 << ") is 0";
    throw PreconditionError(msg.str());
  }
  // Row r picks up row i exactly when M[r][j] = 1; this includes r = i itself.
  Gf2Matrix out = m;
  const BitVector pivot_row = m.row(i);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (m.at(r, j)) out.row(r) ^= pivot_row;
  }
  return out;
}

DiskSystem twist_system(const DiskSystem& s, const Gf2Vector& gamma) {
  const SymplecticSpace space(s.genus);
  DiskSystem out{s.genus, {}};
  out.curves.reserve(s.curves.size());
  for (const auto& c : s.curves) out.curves.push_back(dehn_twist_class(space, gamma, c));
  return out;
}

EvenizeResult evenize(const HeegaardDiagram& d) {
  const auto space = d.space();
  HeegaardDiagram current = d;
  TwistSequence seq;
  seq.initial_matrix = parity_matrix(current);
  seq.trajectory.push_back(seq.initial_matrix);

  Gf2Matrix m = seq.initial_matrix;
  int stage = 0;
  while (true) {
    const auto cert = certify_parity_matrix(m);
    if (cert.certified()) break;
    const auto [i, j] = *cert.witness;
    const auto gamma = twist_curve(space, current.d(static_cast<std::size_t>(i)),
                                   current.e(static_cast<std::size_t>(j)));
    // The constructor revalidates the twisted D-system.
    current = HeegaardDiagram(twist_system(current.d_system(), gamma), current.e_system());
    seq.steps.push_back(TwistStep{gamma, {i, j}, ++stage});
    m = parity_matrix(current);
    seq.trajectory.push_back(m);
    if (stage > d.genus()) {
      throw std::logic_error("evenize exceeded genus many twists");
    }
  }
  seq.final_matrix = m;
  return {std::move(seq), std::move(current)};
}

HeegaardDiagram preserve_even_twist(const HeegaardDiagram& d, const Gf2Vector& gamma) {
  const auto space = d.space();
  space.require_member(gamma);
  if (const auto cert = check_even_parity(d); !cert.certified()) {
    std::ostringstream msg;
    msg << "diagram does not satisfy the even parity condition: entry (" << cert.witness->first + 1
        << ", " << cert.witness->second + 1 << ") is odd";
    throw PreconditionError(msg.str());
  }
  for (int j = 0; j < d.genus(); ++j) {
    if (form(space, gamma, d.e(static_cast<std::size_t>(j)))) {
      throw PreconditionError("twist curve pairs oddly with E-curve j = " + std::to_string(j + 1));
    }
  }
  return HeegaardDiagram(twist_system(d.d_system(), gamma), d.e_system());
}

HeegaardDiagram apply_sequence(const HeegaardDiagram& d, const TwistSequence& s) {
  DiskSystem current = d.d_system();
  for (const auto& step : s.steps) {
    if (step.gamma.genus() != d.genus()) {
      std::ostringstream msg;
      msg << "twist step " << step.stage << " has genus " << step.gamma.genus()
          << ", diagram has genus " << d.genus();
      throw InputError(msg.str());
    }
    current = twist_system(current, step.gamma);
  }
  return HeegaardDiagram(std::move(current), d.e_system());
}

}  // namespace heegaard
