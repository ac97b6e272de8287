#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sepmon/exactlin/matrix.hpp"
#include "sepmon/groups/finite_group.hpp"

namespace sepmon::repcat {

using exactlin::Field;
using exactlin::Matrix;
using exactlin::Scalar;
using groups::Element;
using groups::GroupPtr;

/// Raised when objects from different groups or fields are combined, or a
/// morphism fails its structural checks.
class RepError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// How a representation computes its action. Derived representations
/// (tensor products, restrictions, coinductions) compute action matrices on
/// demand from their parts instead of storing one matrix per element.
class RepImpl {
 public:
  RepImpl(GroupPtr group, Field field, std::size_t dim) : group_(std::move(group)), field_(field), dim_(dim) {}
  virtual ~RepImpl() = default;

  const GroupPtr& group() const { return group_; }
  Field field() const { return field_; }
  std::size_t dim() const { return dim_; }

  virtual Matrix action(Element g) const = 0;
  /// Short structural description used in reports.
  virtual std::string describe() const = 0;

 private:
  GroupPtr group_;
  Field field_;
  std::size_t dim_;
};

/// A finite-dimensional representation of a finite group.
///
/// Generator actions are computed once at construction; they drive
/// equivariance checks and the identity fingerprint. Copies share state.
class Rep {
 public:
  Rep() = default;

  /// Wraps a custom implementation.
  static Rep from_impl(std::shared_ptr<const RepImpl> impl);

  /// One matrix per group element, indexed by element. The homomorphism law
  /// is not checked here; see homomorphism_violation().
  static Rep from_matrices(GroupPtr group, Field field, std::size_t dim, std::vector<Matrix> actions,
                           std::string name = "rep");

  const GroupPtr& group() const { return data_->impl->group(); }
  Field field() const { return data_->impl->field(); }
  std::size_t dim() const { return data_->impl->dim(); }
  std::string describe() const { return data_->impl->describe(); }
  const RepImpl& impl() const { return *data_->impl; }

  Matrix action(Element g) const { return data_->impl->action(g); }
  /// Aligned with group()->generators().
  const std::vector<Matrix>& generator_actions() const { return data_->generator_actions; }

  std::size_t fingerprint() const { return data_->fingerprint; }

  /// Same group, field and dimension, and identical generator actions.
  bool same_as(const Rep& other) const;

  bool valid() const { return data_ != nullptr; }

 private:
  struct Data {
    std::shared_ptr<const RepImpl> impl;
    std::vector<Matrix> generator_actions;
    std::size_t fingerprint = 0;
  };
  std::shared_ptr<const Data> data_;
};

/// First violation of action(e) = I or action(ab) = action(a)action(b),
/// checked over all pairs.
struct HomomorphismViolation {
  Element a = 0;
  Element b = 0;
  exactlin::EntryDiff diff;
  std::string describe() const;
};
std::optional<HomomorphismViolation> homomorphism_violation(const Rep& x);

/// An equivariant linear map between two representations.
class Morphism {
 public:
  Morphism() = default;

  /// Checks shapes, groups and fields, and equivariance on generators.
  Morphism(Rep source, Rep target, Matrix matrix);

  /// Skips the equivariance check; used where equivariance is a theorem
  /// under test and is verified separately.
  static Morphism unchecked(Rep source, Rep target, Matrix matrix);

  static Morphism identity(const Rep& x);
  static Morphism zero(const Rep& source, const Rep& target);

  const Rep& source() const { return source_; }
  const Rep& target() const { return target_; }
  const Matrix& matrix() const { return matrix_; }

  Morphism operator+(const Morphism& o) const;
  Morphism operator-(const Morphism& o) const;
  Morphism scaled(const Scalar& s) const;

 private:
  Rep source_;
  Rep target_;
  Matrix matrix_;
};

/// g after f. The target of f must be the source of g.
Morphism compose(const Morphism& g, const Morphism& f);

/// First generator s with matrix * source(s) != target(s) * matrix.
struct EquivarianceViolation {
  Element generator = 0;
  exactlin::EntryDiff diff;
  std::string describe() const;
};
std::optional<EquivarianceViolation> equivariance_violation(const Rep& source, const Rep& target,
                                                            const Matrix& matrix);

void require_compatible(const Rep& a, const Rep& b, const char* where);

}  // namespace sepmon::repcat
