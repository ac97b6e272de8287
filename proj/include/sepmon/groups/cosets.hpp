#pragma once

#include <vector>

#include "sepmon/groups/finite_group.hpp"

namespace sepmon::groups {

/// A subgroup H of a parent group G. Also provides H as a group in its own
/// right: local index i corresponds to the i-th smallest parent element.
class Subgroup {
 public:
  Subgroup() = default;

  const GroupPtr& parent() const { return data_->parent; }
  /// Sorted parent indices; the first is the identity.
  const std::vector<Element>& elements() const { return data_->elements; }
  std::size_t order() const { return data_->elements.size(); }
  bool contains(Element g) const { return data_->local[g] >= 0; }

  /// H as a standalone group.
  const GroupPtr& as_group() const { return data_->group; }
  Element to_local(Element parent_element) const;
  Element to_parent(Element local) const { return data_->elements[local]; }

  bool is_whole_group() const { return order() == parent()->order(); }

  friend Subgroup subgroup_generated(const GroupPtr& g, const std::vector<Element>& gens);

 private:
  struct Data {
    GroupPtr parent;
    std::vector<Element> elements;
    std::vector<int> local;
    GroupPtr group;
  };
  std::shared_ptr<const Data> data_;
};

/// Smallest subgroup containing gens.
Subgroup subgroup_generated(const GroupPtr& g, const std::vector<Element>& gens);

/// x = h * r with h in H and r a coset representative.
struct Factorization {
  Element h;
  Element r;
  std::size_t coset;
};

/// Right cosets H\G = {Hx}. Cosets are numbered in order of their least
/// element, so coset 0 is H itself with representative the identity.
class CosetSpace {
 public:
  CosetSpace() = default;

  static CosetSpace right_cosets(const GroupPtr& g, const Subgroup& h);

  const GroupPtr& group() const { return data_->group; }
  const Subgroup& subgroup() const { return data_->subgroup; }
  const GroupPtr& subgroup_group() const { return data_->subgroup.as_group(); }

  std::size_t index() const { return data_->reps.size(); }
  const std::vector<Element>& representatives() const { return data_->reps; }
  const std::vector<std::vector<Element>>& cosets() const { return data_->cosets; }
  std::size_t coset_of(Element x) const { return data_->coset_of[x]; }
  Factorization factorize(Element x) const { return data_->factor[x]; }

  /// "H(1 2)"-style label of coset i.
  std::string coset_label(std::size_t i) const;

 private:
  struct Data {
    GroupPtr group;
    Subgroup subgroup;
    std::vector<std::vector<Element>> cosets;
    std::vector<Element> reps;
    std::vector<std::size_t> coset_of;
    std::vector<Factorization> factor;
  };
  std::shared_ptr<const Data> data_;
};

}  // namespace sepmon::groups
