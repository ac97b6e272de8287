#include "sepmon/repcat/law.hpp"

#include <sstream>

namespace sepmon::repcat {

std::string LawFailure::describe() const {
  std::ostringstream os;
  os << law << ": ";
  if (!diff && lhs.rows() == rhs.rows() && lhs.cols() == rhs.cols()) {
    os << "objects do not match";
  } else if (!diff) {
    os << "shapes differ (" << lhs.rows() << "x" << lhs.cols() << " vs " << rhs.rows() << "x" << rhs.cols() << ")";
  } else {
    os << "entry (" << diff->row << "," << diff->col << ") is " << diff->lhs.to_string() << " vs "
       << diff->rhs.to_string();
  }
  return os.str();
}

std::optional<LawFailure> expect_equal(std::string law, const Matrix& lhs, const Matrix& rhs) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
    return LawFailure{std::move(law), lhs, rhs, std::nullopt};
  }
  if (auto d = exactlin::first_difference(lhs, rhs)) return LawFailure{std::move(law), lhs, rhs, *d};
  return std::nullopt;
}

std::optional<LawFailure> expect_equal(std::string law, const Morphism& lhs, const Morphism& rhs) {
  if (!lhs.source().same_as(rhs.source()) || !lhs.target().same_as(rhs.target())) {
    return LawFailure{law + " (endpoints differ)", lhs.matrix(), rhs.matrix(), std::nullopt};
  }
  return expect_equal(std::move(law), lhs.matrix(), rhs.matrix());
}

std::optional<LawFailure> expect_identity(std::string law, const Morphism& f) {
  if (!f.source().same_as(f.target())) {
    return LawFailure{law + " (not an endomorphism)", f.matrix(), f.matrix(), std::nullopt};
  }
  return expect_equal(std::move(law), f.matrix(), Matrix::identity(f.source().dim(), f.source().field()));
}

std::optional<LawFailure> expect_equivariant(std::string law, const Morphism& f) {
  const auto& gens = f.source().group()->generators();
  for (std::size_t k = 0; k < gens.size(); ++k) {
    Matrix lhs = f.matrix() * f.source().generator_actions()[k];
    Matrix rhs = f.target().generator_actions()[k] * f.matrix();
    if (auto d = exactlin::first_difference(lhs, rhs)) {
      return LawFailure{law + " at generator " + std::to_string(gens[k]), std::move(lhs), std::move(rhs), *d};
    }
  }
  return std::nullopt;
}

}  // namespace sepmon::repcat
