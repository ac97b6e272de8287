#pragma once

#include "sepmon/groups/cosets.hpp"
#include "sepmon/repcat/rep.hpp"

namespace sepmon::adjunction {

using exactlin::Field;
using exactlin::Matrix;
using groups::CosetSpace;
using repcat::Morphism;
using repcat::Rep;

/// Coinduction from H to G. A vector is a tuple (s_r) indexed by the coset
/// representatives r (identity first), standing for the H-equivariant
/// function f with f(h r) = h s_r. G acts by (g.f)(t) = f(t g): if
/// r g = h' r' then (g.s)_r = h'.s_{r'}.
Rep coind_obj(const Rep& n, const CosetSpace& cs);

/// Block-diagonal: applies f in every coordinate.
Morphism coind_mor(const Morphism& f, const CosetSpace& cs);

/// Res to the subgroup of cs.
Rep res(const Rep& x, const CosetSpace& cs);
Morphism res_mor(const Morphism& f, const CosetSpace& cs);

/// eta_m : m -> Coind Res m, v -> (r.v)_r.
Morphism unit_eta(const Rep& m, const CosetSpace& cs);

/// eps_n : Res Coind n -> n, evaluation at the identity.
Morphism counit_eps(const Rep& n, const CosetSpace& cs);

/// xi_n : n -> Res Coind n, the function supported on H with xi(v)(h) = h v.
Morphism section_xi(const Rep& n, const CosetSpace& cs);

/// iota : 1 -> Coind 1, the all-ones column.
Morphism lax_iota(const CosetSpace& cs, Field f);

/// lambda : Coind x (x) Coind y -> Coind(x (x) y), pointwise tensor.
Morphism lax_lambda(const Rep& x, const Rep& y, const CosetSpace& cs);

/// lambda assembled as Coind(eps (x) eps) after eta at Coind x (x) Coind y.
Morphism lax_lambda_composite(const Rep& x, const Rep& y, const CosetSpace& cs);

/// pi : Coind y (x) x -> Coind(y (x) Res x), f (x) a -> (t -> f(t) (x) t a).
/// Block-diagonal with blocks I (x) x(r).
Morphism projection_pi(const Rep& y, const Rep& x, const CosetSpace& cs);

/// The inverse of pi, blocks I (x) x(r^-1), assembled through the product
/// decomposition.
Morphism projection_pi_inverse(const Rep& y, const Rep& x, const CosetSpace& cs);

/// pi as lambda after id (x) eta.
Morphism projection_pi_composite(const Rep& y, const Rep& x, const CosetSpace& cs);

/// The reindexing of Coind n as the plain direct sum of [G:H] copies of n.
/// Coordinates are already stored per representative, so this is the
/// identity matrix.
Matrix rho_product_iso(const Rep& n, const CosetSpace& cs);

/// The map (b_r)_r (x) a -> (b_r (x) r a)_r on plain spaces; conjugating it by
/// the product decompositions yields pi.
Matrix product_side_projection(const Rep& y, const Rep& x, const CosetSpace& cs);

/// Counit of the left adjunction Ind -| Res under Ind = Coind:
/// zeta_x : Coind Res x -> x, f -> sum_r r^-1 f(r).
Morphism transfer_zeta(const Rep& x, const CosetSpace& cs);

}  // namespace sepmon::adjunction
