#include "sepmon/monadring/ring.hpp"

#include "sepmon/adjunction/adjunction.hpp"
#include "sepmon/repcat/tensor.hpp"

namespace sepmon::monadring {

using exactlin::Scalar;
using repcat::compose;
using repcat::expect_equal;
using repcat::expect_identity;
using repcat::tensor_mor;
using repcat::tensor_obj;

namespace {

template <typename... Checks>
std::optional<LawFailure> first_failure(Checks&&... checks) {
  std::optional<LawFailure> out;
  ((out ? void() : void(out = checks())), ...);
  return out;
}

}  // namespace

std::optional<LawFailure> ring_axiom_violation(const RingObject& a) {
  const Morphism id = Morphism::identity(a.carrier);
  return first_failure(
      [&] {
        return expect_equal("associativity", compose(a.mul, tensor_mor(a.mul, id)),
                            compose(a.mul, tensor_mor(id, a.mul)));
      },
      [&] { return expect_identity("left unit", compose(a.mul, tensor_mor(a.unit, id))); },
      [&] { return expect_identity("right unit", compose(a.mul, tensor_mor(id, a.unit))); });
}

std::optional<LawFailure> commutativity_violation(const RingObject& a) {
  return expect_equal("commutativity", compose(a.mul, repcat::symmetry(a.carrier, a.carrier)), a.mul);
}

std::optional<LawFailure> separability_violation(const RingObject& a) {
  if (!a.section) {
    return LawFailure{"separability (no section)", a.mul.matrix(), a.mul.matrix(), std::nullopt};
  }
  const Morphism& s = *a.section;
  const Morphism id = Morphism::identity(a.carrier);
  return first_failure(
      [&] { return expect_identity("mu sigma = id", compose(a.mul, s)); },
      [&] {
        return expect_equal("right linearity", compose(tensor_mor(a.mul, id), tensor_mor(id, s)), compose(s, a.mul));
      },
      [&] {
        return expect_equal("left linearity", compose(tensor_mor(id, a.mul), tensor_mor(s, id)), compose(s, a.mul));
      });
}

std::optional<LawFailure> structure_equivariance_violation(const RingObject& a) {
  return first_failure([&] { return repcat::expect_equivariant("mul equivariance", a.mul); },
                       [&] { return repcat::expect_equivariant("unit equivariance", a.unit); },
                       [&]() -> std::optional<LawFailure> {
                         if (!a.section) return std::nullopt;
                         return repcat::expect_equivariant("section equivariance", *a.section);
                       });
}

RingObject ring_from_adjunction(const CosetSpace& cs, Field f) {
  Rep one_h = repcat::unit_rep(cs.subgroup_group(), f);
  Rep carrier = adjunction::coind_obj(one_h, cs);
  Morphism lambda = adjunction::lax_lambda(one_h, one_h, cs);
  // Coind(1 (x) 1) is Coind 1 on the nose.
  Morphism mul = Morphism::unchecked(lambda.source(), carrier, lambda.matrix());
  Morphism iota = adjunction::lax_iota(cs, f);
  return RingObject{carrier, mul, Morphism::unchecked(iota.source(), carrier, iota.matrix()), std::nullopt};
}

RingObject standard_ring(const CosetSpace& cs, Field f) {
  const auto& g = *cs.group();
  const std::size_t n = cs.index();
  const auto& reps = cs.representatives();
  std::vector<Matrix> actions;
  actions.reserve(g.order());
  for (groups::Element a = 0; a < g.order(); ++a) {
    std::vector<std::size_t> perm(n);
    for (std::size_t c = 0; c < n; ++c) perm[c] = cs.coset_of(g.mul(reps[c], g.inv(a)));
    actions.push_back(exactlin::permutation_matrix(perm, f));
  }
  Rep carrier = Rep::from_matrices(cs.group(), f, n, std::move(actions), "k(H\\G)");

  const Scalar one = Scalar::one(f);
  Matrix mul(n, n * n, f);
  Matrix unit(n, 1, f);
  Matrix section(n * n, n, f);
  for (std::size_t c = 0; c < n; ++c) {
    mul(c, c * n + c) = one;
    unit(c, 0) = one;
    section(c * n + c, c) = one;
  }
  Rep aa = tensor_obj(carrier, carrier);
  return RingObject{carrier, Morphism::unchecked(aa, carrier, std::move(mul)),
                    Morphism::unchecked(repcat::unit_rep(cs.group(), f), carrier, std::move(unit)),
                    Morphism::unchecked(carrier, aa, std::move(section))};
}

std::pair<Morphism, Morphism> canonical_ring_iso(const CosetSpace& cs, Field f) {
  const std::size_t n = cs.index();
  const auto& reps = cs.representatives();
  const Scalar one = Scalar::one(f);
  // Column gamma: the indicator of gamma evaluated at each representative.
  Matrix forward(n, n, f);
  for (std::size_t gamma = 0; gamma < n; ++gamma) {
    for (std::size_t i = 0; i < n; ++i) {
      if (cs.coset_of(reps[i]) == gamma) forward(i, gamma) = one;
    }
  }
  // Row gamma: the coefficient of e_gamma is the value at any t in gamma,
  // here its largest element t = h r, whose value is the coordinate at r.
  Matrix inverse(n, n, f);
  for (std::size_t gamma = 0; gamma < n; ++gamma) {
    groups::Element t = cs.cosets()[gamma].back();
    inverse(gamma, cs.factorize(t).coset) = one;
  }
  Rep standard = standard_ring(cs, f).carrier;
  Rep adj = adjunction::coind_obj(repcat::unit_rep(cs.subgroup_group(), f), cs);
  return {Morphism::unchecked(standard, adj, std::move(forward)), Morphism::unchecked(adj, standard, std::move(inverse))};
}

RingObject transport(const RingObject& a, const Morphism& c, const Morphism& c_inv) {
  RingObject b;
  b.carrier = c.target();
  b.mul = compose(c, compose(a.mul, tensor_mor(c_inv, c_inv)));
  b.unit = compose(c, a.unit);
  if (a.section) b.section = compose(tensor_mor(c, c), compose(*a.section, c_inv));
  return b;
}

}  // namespace sepmon::monadring
