#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "sepmon/monadring/ring.hpp"

namespace sepmon::eilenberg {

using exactlin::Field;
using exactlin::Matrix;
using groups::CosetSpace;
using monadring::RingObject;
using repcat::LawFailure;
using repcat::Morphism;
using repcat::Rep;

using RingPtr = std::shared_ptr<const RingObject>;

/// A module (x, rho) over a ring object, rho : A (x) x -> x.
struct AModule {
  RingPtr ring;
  Rep carrier;
  Morphism action;
};

/// rho(mu (x) id) = rho(id (x) rho), rho(iota (x) id) = id, and equivariance
/// of rho.
std::optional<LawFailure> module_axiom_violation(const AModule& m);

/// f rho1 = rho2 (id (x) f).
std::optional<LawFailure> linearity_violation(const AModule& m1, const AModule& m2, const Morphism& f);

/// (A (x) y, mu (x) id).
AModule free_module(const RingPtr& a, const Rep& y);

/// E(n): the carrier Coind n over the standard ring, e_gamma acting by
/// keeping the gamma coordinate and zeroing the others.
AModule em_comparison(const Rep& n, const CosetSpace& cs, const RingPtr& standard);

/// The same action assembled from the adjunction: lambda at (1, n) after
/// c (x) id.
Morphism em_action_via_lambda(const Rep& n, const CosetSpace& cs, Field f);

/// The same action as Coind(eps_n) after pi at (1, Coind n) after c (x) id.
Morphism em_action_via_pi(const Rep& n, const CosetSpace& cs, Field f);

/// E on morphisms.
Morphism em_comparison_mor(const Morphism& f, const CosetSpace& cs);

/// Image factorization of an idempotent: m p = e and p m = id.
struct Split {
  Rep image;
  Morphism retraction;  // x -> image
  Morphism inclusion;   // image -> x
};

/// Throws if e is not an equivariant idempotent.
Split split_idempotent(const Morphism& e);

/// The idempotent rho(e_H (x) -) on Res x, assembled as
/// rho . (c^-1 (x) id) . pi^-1 . xi.
Morphism em_idempotent(const AModule& m, const CosetSpace& cs);

/// E^-1(m): the image of the idempotent, an H-representation. Throws if the
/// module axioms fail or the idempotent does not square to itself.
Split em_inverse(const AModule& m, const CosetSpace& cs);

/// Basis of the A-linear equivariant maps m1 -> m2.
std::vector<Morphism> module_hom_space(const AModule& m1, const AModule& m2);

struct ModuleIso {
  Morphism forward;
  Morphism inverse;
};

/// An A-linear isomorphism, or nullopt when none was found (or dimensions
/// differ).
std::optional<ModuleIso> find_module_iso(const AModule& m1, const AModule& m2);

/// The direct summand cut out by an A-linear equivariant idempotent.
AModule split_module(const AModule& m, const Morphism& e);

/// An A-linear idempotent other than 0 and id, found as the Fitting
/// projection of a singular, non-nilpotent element b - t of a pencil over
/// the endomorphism basis. nullopt if the search budget runs out.
std::optional<Morphism> find_module_idempotent(const AModule& m, std::uint64_t seed);

/// T_y = pi_y . (c (x) id) : A (x) y -> Coind Res y and its inverse. It
/// identifies the free module on y with E(Res y).
std::pair<Morphism, Morphism> extension_of_scalars_iso(const Rep& y, const CosetSpace& cs, Field f);

}  // namespace sepmon::eilenberg
