#pragma once

#include <optional>
#include <utility>

#include "sepmon/groups/cosets.hpp"
#include "sepmon/repcat/law.hpp"

namespace sepmon::monadring {

using exactlin::Field;
using exactlin::Matrix;
using groups::CosetSpace;
using repcat::LawFailure;
using repcat::Morphism;
using repcat::Rep;

/// A ring object (A, mu, iota) with an optional separability section sigma.
struct RingObject {
  Rep carrier;
  Morphism mul;   // A (x) A -> A
  Morphism unit;  // 1 -> A
  std::optional<Morphism> section;  // A -> A (x) A
};

/// Associativity and both unit laws.
std::optional<LawFailure> ring_axiom_violation(const RingObject& a);
/// mu after the swap equals mu.
std::optional<LawFailure> commutativity_violation(const RingObject& a);
/// mu sigma = id and the two bimodule equations. Fails if no section.
std::optional<LawFailure> separability_violation(const RingObject& a);
/// Equivariance of mul, unit and section.
std::optional<LawFailure> structure_equivariance_violation(const RingObject& a);

/// A = Coind 1 with mul = lambda at (1, 1) and unit iota. No section.
RingObject ring_from_adjunction(const CosetSpace& cs, Field f);

/// k(H\G) with basis e_gamma (one per right coset), g.e_gamma = e_{gamma g^-1},
/// e_a e_b = delta_ab e_a, unit the sum of all e_gamma and section
/// e_gamma -> e_gamma (x) e_gamma.
RingObject standard_ring(const CosetSpace& cs, Field f);

/// The ring isomorphism standard -> adjunction ring sending e_gamma to the
/// indicator function of gamma, with its inverse read off from the value at
/// any element of each coset.
std::pair<Morphism, Morphism> canonical_ring_iso(const CosetSpace& cs, Field f);

/// Transports a ring structure along an isomorphism c : A -> B.
RingObject transport(const RingObject& a, const Morphism& c, const Morphism& c_inv);

}  // namespace sepmon::monadring
