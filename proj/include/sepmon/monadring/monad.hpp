#pragma once

#include <functional>
#include <optional>
#include <string>

#include "sepmon/monadring/ring.hpp"

namespace sepmon::monadring {

/// A monad on representations of G, given by its action on objects and
/// morphisms and its component families. Components are computed on
/// demand for whatever object is asked about.
struct Monad {
  std::string name;
  std::function<Rep(const Rep&)> on_obj;
  std::function<Morphism(const Morphism&)> on_mor;
  std::function<Morphism(const Rep&)> mu_at;   // TTx -> Tx
  std::function<Morphism(const Rep&)> eta_at;  // x -> Tx
  /// Optional separability section Tx -> TTx.
  std::function<Morphism(const Rep&)> sigma_at;
};

/// Associativity and both unit laws at x.
std::optional<LawFailure> monad_law_violation(const Monad& t, const Rep& x);

/// mu sigma = id and sigma mu = mu_T . T sigma = T mu . sigma_T at x.
std::optional<LawFailure> monad_separability_violation(const Monad& t, const Rep& x);

/// T = Coind Res with mu = Coind(eps at Res x), eta the unit, and sigma =
/// Coind(xi at Res x).
Monad monad_from_adjunction(const CosetSpace& cs);

/// A (x) -, with mu (x) id, iota (x) id and, when present, sigma (x) id.
/// Throws if the ring axioms fail.
Monad monad_from_ring(const RingObject& a);

/// Components phi_x : S x -> T x.
struct MonadMorphism {
  Monad source;
  Monad target;
  std::function<Morphism(const Rep&)> at;
};

/// phi eta_S = eta_T at x.
std::optional<LawFailure> monad_morphism_unit_violation(const MonadMorphism& phi, const Rep& x);

/// phi mu_S = mu_T phi2, with phi2 computed both as phi_{Tx} . S(phi_x) and
/// as T(phi_x) . phi_{Sx}; the two must agree too.
std::optional<LawFailure> monad_morphism_mult_violation(const MonadMorphism& phi, const Rep& x);

/// The projection formula as a monad morphism A (x) - -> Coind Res, where A
/// is the adjunction ring: phi_x = pi at (1, x).
MonadMorphism pi_as_monad_morphism(const CosetSpace& cs, Field f);

/// phi_x . (c (x) id_x), turning pi into a morphism out of the standard
/// ring's monad.
MonadMorphism standard_pi_monad_morphism(const CosetSpace& cs, Field f);

}  // namespace sepmon::monadring
