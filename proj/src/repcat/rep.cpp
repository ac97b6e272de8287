#include "sepmon/repcat/rep.hpp"

#include <sstream>

namespace sepmon::repcat {

namespace {

class ExplicitImpl final : public RepImpl {
 public:
  ExplicitImpl(GroupPtr g, Field f, std::size_t dim, std::vector<Matrix> actions, std::string name)
      : RepImpl(std::move(g), f, dim), actions_(std::move(actions)), name_(std::move(name)) {}
  Matrix action(Element g) const override { return actions_.at(g); }
  std::string describe() const override { return name_; }

 private:
  std::vector<Matrix> actions_;
  std::string name_;
};

std::string diff_text(const exactlin::EntryDiff& d) {
  std::ostringstream os;
  os << "entry (" << d.row << "," << d.col << "): " << d.lhs.to_string() << " vs " << d.rhs.to_string();
  return os.str();
}

}  // namespace

Rep Rep::from_impl(std::shared_ptr<const RepImpl> impl) {
  if (!impl || !impl->group()) throw RepError("Rep: missing implementation or group");
  auto data = std::make_shared<Data>();
  std::size_t h = impl->dim() * 0x9e3779b97f4a7c15ull ^ impl->field().characteristic();
  for (Element s : impl->group()->generators()) {
    Matrix m = impl->action(s);
    if (m.rows() != impl->dim() || m.cols() != impl->dim()) {
      throw RepError("Rep: action matrix has wrong shape for " + impl->describe());
    }
    h = h * 1099511628211ull ^ m.hash();
    data->generator_actions.push_back(std::move(m));
  }
  data->fingerprint = h;
  data->impl = std::move(impl);
  Rep r;
  r.data_ = std::move(data);
  return r;
}

Rep Rep::from_matrices(GroupPtr group, Field field, std::size_t dim, std::vector<Matrix> actions, std::string name) {
  if (actions.size() != group->order()) {
    throw RepError("from_matrices: expected " + std::to_string(group->order()) + " action matrices, got " +
                   std::to_string(actions.size()));
  }
  for (const auto& m : actions) {
    if (m.rows() != dim || m.cols() != dim) throw RepError("from_matrices: action matrix has wrong shape");
    exactlin::require_same_field(field, m.field(), "from_matrices");
  }
  return from_impl(std::make_shared<ExplicitImpl>(std::move(group), field, dim, std::move(actions), std::move(name)));
}

bool Rep::same_as(const Rep& other) const {
  if (data_ == other.data_) return true;
  if (group() != other.group() || !(field() == other.field()) || dim() != other.dim()) return false;
  if (fingerprint() != other.fingerprint()) return false;
  return generator_actions() == other.generator_actions();
}

std::string HomomorphismViolation::describe() const {
  std::ostringstream os;
  if (a == b && a == 0) {
    os << "action(identity) is not the identity matrix, " << diff_text(diff);
  } else {
    os << "action(" << a << "*" << b << ") != action(" << a << ")action(" << b << "), " << diff_text(diff);
  }
  return os.str();
}

std::optional<HomomorphismViolation> homomorphism_violation(const Rep& x) {
  const auto& g = *x.group();
  std::vector<Matrix> act;
  act.reserve(g.order());
  for (Element e = 0; e < g.order(); ++e) act.push_back(x.action(e));
  Matrix id = Matrix::identity(x.dim(), x.field());
  if (auto d = exactlin::first_difference(act[0], id)) return HomomorphismViolation{0, 0, *d};
  for (Element a = 0; a < g.order(); ++a) {
    for (Element b = 0; b < g.order(); ++b) {
      if (auto d = exactlin::first_difference(act[g.mul(a, b)], act[a] * act[b])) {
        return HomomorphismViolation{a, b, *d};
      }
    }
  }
  return std::nullopt;
}

void require_compatible(const Rep& a, const Rep& b, const char* where) {
  if (a.group() != b.group()) throw RepError(std::string(where) + ": representations of different groups");
  if (!(a.field() == b.field())) {
    throw exactlin::FieldMismatch(std::string(where) + ": " + a.field().name() + " vs " + b.field().name());
  }
}

std::string EquivarianceViolation::describe() const {
  return "not equivariant at generator " + std::to_string(generator) + ", " + diff_text(diff);
}

std::optional<EquivarianceViolation> equivariance_violation(const Rep& source, const Rep& target,
                                                            const Matrix& matrix) {
  const auto& gens = source.group()->generators();
  for (std::size_t k = 0; k < gens.size(); ++k) {
    Matrix lhs = matrix * source.generator_actions()[k];
    Matrix rhs = target.generator_actions()[k] * matrix;
    if (auto d = exactlin::first_difference(lhs, rhs)) return EquivarianceViolation{gens[k], *d};
  }
  return std::nullopt;
}

Morphism Morphism::unchecked(Rep source, Rep target, Matrix matrix) {
  require_compatible(source, target, "Morphism");
  exactlin::require_same_field(source.field(), matrix.field(), "Morphism");
  if (matrix.rows() != target.dim() || matrix.cols() != source.dim()) {
    throw exactlin::DimensionMismatch("Morphism: matrix is " + std::to_string(matrix.rows()) + "x" +
                                      std::to_string(matrix.cols()) + ", expected " + std::to_string(target.dim()) +
                                      "x" + std::to_string(source.dim()));
  }
  Morphism m;
  m.source_ = std::move(source);
  m.target_ = std::move(target);
  m.matrix_ = std::move(matrix);
  return m;
}

Morphism::Morphism(Rep source, Rep target, Matrix matrix) {
  *this = unchecked(std::move(source), std::move(target), std::move(matrix));
  if (auto v = equivariance_violation(source_, target_, matrix_)) {
    throw RepError("Morphism " + source_.describe() + " -> " + target_.describe() + ": " + v->describe());
  }
}

Morphism Morphism::identity(const Rep& x) { return unchecked(x, x, Matrix::identity(x.dim(), x.field())); }

Morphism Morphism::zero(const Rep& source, const Rep& target) {
  return unchecked(source, target, Matrix(target.dim(), source.dim(), source.field()));
}

Morphism Morphism::operator+(const Morphism& o) const {
  if (!source_.same_as(o.source_) || !target_.same_as(o.target_)) throw RepError("Morphism +: endpoints differ");
  return unchecked(source_, target_, matrix_ + o.matrix_);
}

Morphism Morphism::operator-(const Morphism& o) const {
  if (!source_.same_as(o.source_) || !target_.same_as(o.target_)) throw RepError("Morphism -: endpoints differ");
  return unchecked(source_, target_, matrix_ - o.matrix_);
}

Morphism Morphism::scaled(const Scalar& s) const { return unchecked(source_, target_, matrix_.scaled(s)); }

Morphism compose(const Morphism& g, const Morphism& f) {
  if (!f.target().same_as(g.source())) {
    throw RepError("compose: target " + f.target().describe() + " does not match source " + g.source().describe());
  }
  return Morphism::unchecked(f.source(), g.target(), g.matrix() * f.matrix());
}

}  // namespace sepmon::repcat
