#include "sepmon/adjunction/adjunction.hpp"
#include "sepmon/repcat/family.hpp"
#include "sepmon/verify/presets.hpp"
#include "sepmon/verify/suite.hpp"

namespace sepmon::verify {

namespace {

enum Tag : std::uint64_t {
  TagG = 1,
  TagH,
  TagMonad,
  TagTiny,
  TagSmallH,
  TagPiY,
  TagPiX,
  TagGMor,
  TagHMor,
  TagFree,
  TagComparison,
  TagSummandBase,
  TagSummandIdem,
};

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::size_t clamp_dim(std::size_t v) { return std::clamp<std::size_t>(v, 1, 12); }

/// Keeps idx^3 * dim, the width of the module associativity check on
/// A (x) A (x) Coind n, at 2592 or below. Every default pair gets 12.
std::size_t indexed_cap(std::size_t k) { return clamp_dim(2592 / (k * k * k)); }

std::size_t isqrt(std::size_t v) {
  std::size_t r = 0;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

}  // namespace

Case::Case(const SuiteConfig& cfg) : cfg_(cfg) {
  validate(cfg_);
  group_ = load_group(cfg_.group);
  std::vector<groups::Element> gens;
  if (cfg_.subgroup == "all") {
    gens = group_->generators();
  } else {
    gens = parse_element_list(cfg_.subgroup);
    for (auto e : gens) {
      if (e >= group_->order()) {
        throw ConfigError("subgroup generator " + std::to_string(e) + " out of range for a group of order " +
                          std::to_string(group_->order()));
      }
    }
  }
  subgroup_ = groups::subgroup_generated(group_, gens);
  cosets_ = groups::CosetSpace::right_cosets(group_, subgroup_);

  auto ring = monadring::standard_ring(cosets_, field());
  if (cfg_.mutation == Mutation::Mu) {
    Matrix m = ring.mul.matrix();
    m(0, 0) = exactlin::Scalar::zero(field());
    ring.mul = Morphism::unchecked(ring.mul.source(), ring.mul.target(), std::move(m));
  }
  standard_ = std::make_shared<const monadring::RingObject>(std::move(ring));
}

std::uint64_t Case::sub_seed(std::uint64_t tag, std::size_t i) const {
  return splitmix64(splitmix64(cfg_.seed) ^ splitmix64(tag * 0x100000001b3ull + i));
}

Morphism Case::xi(const Rep& n) const {
  Morphism x = adjunction::section_xi(n, cosets_);
  if (cfg_.mutation != Mutation::Xi) return x;
  Matrix m = x.matrix();
  m(0, 0) = exactlin::Scalar::zero(field());
  return Morphism::unchecked(x.source(), x.target(), std::move(m));
}

std::vector<Rep> Case::make_reps(const groups::GroupPtr& g, std::uint64_t tag, std::size_t count,
                                 std::size_t max_dim) const {
  std::vector<Rep> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(repcat::random_rep(g, field(), sub_seed(tag, i), repcat::RepBudget{2, max_dim}));
  }
  return out;
}

const std::vector<Rep>& Case::g_reps() const {
  if (!g_reps_) {
    auto reps = make_reps(group_, TagG, cfg_.family_size, indexed_cap(index()));
    if (cfg_.mutation == Mutation::Action) {
      const Rep& x = reps.front();
      std::vector<Matrix> actions;
      for (groups::Element e = 0; e < group_->order(); ++e) actions.push_back(x.action(e));
      groups::Element target = group_->generators().empty() ? 0 : group_->generators().front();
      actions[target](0, 0) += exactlin::Scalar::one(field());
      reps.front() = Rep::from_matrices(group_, field(), x.dim(), std::move(actions), x.describe() + "(corrupted)");
    }
    g_reps_ = std::move(reps);
  }
  return *g_reps_;
}

const std::vector<Rep>& Case::h_reps() const {
  if (!h_reps_) h_reps_ = make_reps(cosets_.subgroup_group(), TagH, cfg_.family_size, indexed_cap(index()));
  return *h_reps_;
}

const std::vector<Rep>& Case::monad_reps() const {
  if (!monad_reps_) {
    const std::size_t k = index();
    monad_reps_ = make_reps(group_, TagMonad, cfg_.family_size, clamp_dim(864 / (k * k * k)));
  }
  return *monad_reps_;
}

const std::vector<Rep>& Case::tiny_reps() const {
  if (!tiny_reps_) tiny_reps_ = make_reps(group_, TagTiny, cfg_.family_size, 4);
  return *tiny_reps_;
}

const std::vector<Rep>& Case::small_h_reps() const {
  if (!small_h_reps_) {
    const std::size_t k = index();
    small_h_reps_ = make_reps(cosets_.subgroup_group(), TagSmallH, cfg_.family_size, clamp_dim(isqrt(512 / (k * k * k))));
  }
  return *small_h_reps_;
}

const std::vector<std::pair<Rep, Rep>>& Case::pi_pairs() const {
  if (!pi_pairs_) {
    // Alternately one side is exactly 12-dimensional and the other is sized
    // so that the tensor products stay small.
    const std::size_t k = index();
    const std::size_t other = clamp_dim(864 / (k * k * 12));
    std::vector<std::pair<Rep, Rep>> pairs;
    for (std::size_t i = 0; i < cfg_.family_size; ++i) {
      const bool y_large = i % 2 == 0;
      Rep y = repcat::random_rep(cosets_.subgroup_group(), field(), sub_seed(TagPiY, i),
                                 repcat::RepBudget{2, y_large ? 12 : other, y_large ? std::size_t{12} : 1});
      Rep x = repcat::random_rep(group_, field(), sub_seed(TagPiX, i),
                                 repcat::RepBudget{2, y_large ? other : 12, y_large ? 1 : std::size_t{12}});
      pairs.emplace_back(std::move(y), std::move(x));
    }
    pi_pairs_ = std::move(pairs);
  }
  return *pi_pairs_;
}

const std::vector<Morphism>& Case::g_morphisms() const {
  if (!g_morphisms_) {
    const auto& reps = g_reps();
    std::vector<Morphism> out;
    for (std::size_t i = 0; i < reps.size(); ++i) {
      out.push_back(repcat::random_morphism(reps[i], reps[(i + 1) % reps.size()], sub_seed(TagGMor, i)));
    }
    g_morphisms_ = std::move(out);
  }
  return *g_morphisms_;
}

const std::vector<Morphism>& Case::h_morphisms() const {
  if (!h_morphisms_) {
    const auto& reps = h_reps();
    std::vector<Morphism> out;
    for (std::size_t i = 0; i < reps.size(); ++i) {
      out.push_back(repcat::random_morphism(reps[i], reps[(i + 1) % reps.size()], sub_seed(TagHMor, i)));
    }
    h_morphisms_ = std::move(out);
  }
  return *h_morphisms_;
}

const std::vector<NamedModule>& Case::modules() const {
  if (!modules_) {
    // Carriers stay at dimension 24 or below.
    const std::size_t cap = std::max<std::size_t>(1, 24 / index());
    const repcat::RepBudget budget{2, cap};
    std::vector<NamedModule> out;
    for (std::size_t i = 0; i < cfg_.family_size; ++i) {
      if (i % 3 == 1) {
        Rep n = repcat::random_rep(cosets_.subgroup_group(), field(), sub_seed(TagComparison, i), budget);
        out.push_back({"comparison", eilenberg::em_comparison(n, cosets_, standard_)});
        continue;
      }
      if (i % 3 == 2) {
        Rep y = repcat::random_rep(group_, field(), sub_seed(TagSummandBase, i), budget);
        auto free = eilenberg::free_module(standard_, y);
        if (auto e = eilenberg::find_module_idempotent(free, sub_seed(TagSummandIdem, i))) {
          out.push_back({"summand", eilenberg::split_module(free, *e)});
          continue;
        }
        note("modules.summand_not_found");
        out.push_back({"free", free});
        continue;
      }
      Rep y = repcat::random_rep(group_, field(), sub_seed(TagFree, i), budget);
      out.push_back({"free", eilenberg::free_module(standard_, y)});
    }
    for (const auto& m : out) note("modules." + m.kind);
    modules_ = std::move(out);
  }
  return *modules_;
}

}  // namespace sepmon::verify
