#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sepmon::groups {

/// Index of a group element; 0 is always the identity.
using Element = std::uint32_t;

/// A permutation of {0, ..., n-1} given by its images.
using Permutation = std::vector<std::uint32_t>;

/// Invalid group data. Carries one message per violated axiom instance.
class GroupError : public std::invalid_argument {
 public:
  explicit GroupError(std::vector<std::string> violations);
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  std::vector<std::string> violations_;
};

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A finite group stored as a full multiplication table.
class FiniteGroup {
 public:
  static constexpr Element identity = 0;
  static constexpr std::size_t default_size_cap = 1024;

  /// Closure of the generators under composition, enumerated breadth-first
  /// from the identity: the queue element x spawns x*s for each generator s
  /// in order. Composition is (a*b)(i) = a(b(i)).
  static GroupPtr from_permutations(const std::vector<Permutation>& generators,
                                    std::size_t size_cap = default_size_cap);

  /// Validates a Cayley table (element 0 must be the identity).
  static GroupPtr from_cayley_table(const std::vector<std::vector<Element>>& table,
                                    std::vector<std::string> labels = {});

  std::size_t order() const { return table_.size(); }
  Element mul(Element a, Element b) const { return table_[a][b]; }
  Element inv(Element a) const { return inverse_[a]; }
  const std::vector<std::vector<Element>>& table() const { return table_; }

  /// A generating set without the identity (the input generators for
  /// permutation groups, a greedy choice otherwise).
  const std::vector<Element>& generators() const { return generators_; }

  const std::string& label(Element e) const { return labels_[e]; }
  const std::vector<std::string>& labels() const { return labels_; }

  bool has_permutations() const { return !perms_.empty(); }
  const Permutation& permutation(Element e) const { return perms_.at(e); }
  std::optional<Element> find(const Permutation& p) const;

  /// Every violated group axiom instance; empty for a valid table.
  static std::vector<std::string> axiom_violations(const std::vector<std::vector<Element>>& table);

  /// Builds a group from already validated data (used for subgroups).
  static GroupPtr from_trusted_table(std::vector<std::vector<Element>> table, std::vector<std::string> labels,
                                     std::vector<Permutation> perms = {});

 private:
  FiniteGroup() = default;
  void finish(std::vector<Element> generators);

  std::vector<std::vector<Element>> table_;
  std::vector<Element> inverse_;
  std::vector<Element> generators_;
  std::vector<std::string> labels_;
  std::vector<Permutation> perms_;
  std::map<Permutation, Element> perm_index_;
};

/// Cycle notation with 1-based points, "()" for the identity.
std::string cycle_notation(const Permutation& p);

Permutation compose(const Permutation& a, const Permutation& b);

}  // namespace sepmon::groups
