#pragma once

#include "sepmon/groups/cosets.hpp"
#include "sepmon/repcat/rep.hpp"

namespace sepmon::repcat {

/// The trivial one-dimensional representation.
Rep unit_rep(const GroupPtr& g, Field f);

/// Diagonal action: action(g) = kron(x.action(g), y.action(g)).
/// Associativity and unitality hold on the nose with this convention.
Rep tensor_obj(const Rep& x, const Rep& y);
Morphism tensor_mor(const Morphism& f, const Morphism& g);

/// The swap x (x) y -> y (x) x.
Morphism symmetry(const Rep& x, const Rep& y);

/// Same matrices, indexed by the elements of h.
Rep restrict(const Rep& x, const groups::Subgroup& h);
Morphism restrict_mor(const Morphism& f, const groups::Subgroup& h);

Rep direct_sum(const Rep& x, const Rep& y);

/// k[G/K]: basis the left cosets xK in order of their least element, with
/// g acting by xK -> gxK.
Rep coset_permutation_rep(const GroupPtr& g, const groups::Subgroup& k, Field f);

/// Left regular representation.
Rep regular_rep(const GroupPtr& g, Field f);

}  // namespace sepmon::repcat
