#include "sepmon/monadring/monad.hpp"

#include "sepmon/adjunction/adjunction.hpp"
#include "sepmon/repcat/tensor.hpp"

namespace sepmon::monadring {

using repcat::compose;
using repcat::expect_equal;
using repcat::expect_identity;

std::optional<LawFailure> monad_law_violation(const Monad& t, const Rep& x) {
  Morphism mu = t.mu_at(x);
  Rep tx = t.on_obj(x);
  if (auto f = expect_equal("monad associativity", compose(mu, t.on_mor(mu)), compose(mu, t.mu_at(tx)))) return f;
  if (auto f = expect_identity("monad left unit", compose(mu, t.on_mor(t.eta_at(x))))) return f;
  return expect_identity("monad right unit", compose(mu, t.eta_at(tx)));
}

std::optional<LawFailure> monad_separability_violation(const Monad& t, const Rep& x) {
  if (!t.sigma_at) {
    Matrix none;
    return LawFailure{"monad separability (no section)", none, none, std::nullopt};
  }
  Morphism mu = t.mu_at(x);
  Morphism sigma = t.sigma_at(x);
  Rep tx = t.on_obj(x);
  if (auto f = expect_identity("monad mu sigma = id", compose(mu, sigma))) return f;
  Morphism middle = compose(sigma, mu);
  if (auto f = expect_equal("monad sigma left linearity", compose(t.mu_at(tx), t.on_mor(sigma)), middle)) return f;
  return expect_equal("monad sigma right linearity", compose(t.on_mor(mu), t.sigma_at(tx)), middle);
}

Monad monad_from_adjunction(const CosetSpace& cs) {
  using namespace adjunction;
  Monad t;
  t.name = "Coind Res";
  t.on_obj = [cs](const Rep& x) { return coind_obj(res(x, cs), cs); };
  t.on_mor = [cs](const Morphism& f) { return coind_mor(res_mor(f, cs), cs); };
  t.mu_at = [cs](const Rep& x) { return coind_mor(counit_eps(res(x, cs), cs), cs); };
  t.eta_at = [cs](const Rep& x) { return unit_eta(x, cs); };
  t.sigma_at = [cs](const Rep& x) { return coind_mor(section_xi(res(x, cs), cs), cs); };
  return t;
}

Monad monad_from_ring(const RingObject& a) {
  if (auto f = ring_axiom_violation(a)) throw repcat::RepError("monad_from_ring: invalid ring, " + f->describe());
  if (auto f = structure_equivariance_violation(a)) {
    throw repcat::RepError("monad_from_ring: invalid ring, " + f->describe());
  }
  Monad t;
  t.name = a.carrier.describe() + " ⊗ -";
  t.on_obj = [a](const Rep& x) { return repcat::tensor_obj(a.carrier, x); };
  t.on_mor = [a](const Morphism& f) { return repcat::tensor_mor(Morphism::identity(a.carrier), f); };
  t.mu_at = [a](const Rep& x) { return repcat::tensor_mor(a.mul, Morphism::identity(x)); };
  t.eta_at = [a](const Rep& x) {
    Morphism m = repcat::tensor_mor(a.unit, Morphism::identity(x));
    // 1 (x) x is x on the nose.
    return Morphism::unchecked(x, m.target(), m.matrix());
  };
  if (a.section) {
    t.sigma_at = [a](const Rep& x) { return repcat::tensor_mor(*a.section, Morphism::identity(x)); };
  }
  return t;
}

std::optional<LawFailure> monad_morphism_unit_violation(const MonadMorphism& phi, const Rep& x) {
  return expect_equal("monad morphism unit", compose(phi.at(x), phi.source.eta_at(x)), phi.target.eta_at(x));
}

std::optional<LawFailure> monad_morphism_mult_violation(const MonadMorphism& phi, const Rep& x) {
  Morphism px = phi.at(x);
  Morphism phi2 = compose(phi.at(phi.target.on_obj(x)), phi.source.on_mor(px));
  Morphism phi2_alt = compose(phi.target.on_mor(px), phi.at(phi.source.on_obj(x)));
  if (auto f = expect_equal("monad morphism phi2 forms", phi2, phi2_alt)) return f;
  return expect_equal("monad morphism multiplication", compose(px, phi.source.mu_at(x)),
                      compose(phi.target.mu_at(x), phi2));
}

MonadMorphism pi_as_monad_morphism(const CosetSpace& cs, Field f) {
  MonadMorphism phi;
  phi.source = monad_from_ring(ring_from_adjunction(cs, f));
  phi.target = monad_from_adjunction(cs);
  phi.at = [cs, f](const Rep& x) {
    Rep one_h = repcat::unit_rep(cs.subgroup_group(), f);
    Morphism pi = adjunction::projection_pi(one_h, x, cs);
    // Coind(1 (x) Res x) is Coind Res x on the nose.
    return Morphism::unchecked(pi.source(), adjunction::coind_obj(adjunction::res(x, cs), cs), pi.matrix());
  };
  return phi;
}

MonadMorphism standard_pi_monad_morphism(const CosetSpace& cs, Field f) {
  MonadMorphism pi = pi_as_monad_morphism(cs, f);
  Morphism c = canonical_ring_iso(cs, f).first;
  MonadMorphism phi;
  phi.source = monad_from_ring(standard_ring(cs, f));
  phi.target = pi.target;
  phi.at = [pi, c](const Rep& x) { return compose(pi.at(x), repcat::tensor_mor(c, Morphism::identity(x))); };
  return phi;
}

}  // namespace sepmon::monadring
