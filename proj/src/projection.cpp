#include "qcog/projection.hpp"

#include <algorithm>
#include <string>

#include "qcog/errors.hpp"

namespace qcog {

Projector::Projector(Eigen::Index dim, std::vector<Eigen::Index> indices)
    : dim_(dim), indices_(std::move(indices)) {
  if (dim_ < 1) {
    fail(errc::invalid_argument, "projector dimension must be positive");
  }
  std::sort(indices_.begin(), indices_.end());
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (indices_[i] < 0 || indices_[i] >= dim_) {
      fail(errc::index_out_of_range, "projector index " + std::to_string(indices_[i]) +
                                         " outside dimension " + std::to_string(dim_));
    }
    if (i > 0 && indices_[i] == indices_[i - 1]) {
      fail(errc::invalid_argument,
           "duplicate projector index " + std::to_string(indices_[i]));
    }
  }
}

std::complex<double> inner_product(const ComplexVector& u, const ComplexVector& v) {
  if (u.size() != v.size()) {
    fail(errc::dimension_mismatch, "inner product of vectors with dimensions " +
                                       std::to_string(u.size()) + " and " +
                                       std::to_string(v.size()));
  }
  // Eigen's dot conjugates the first operand, matching <u|v>.
  return u.dot(v);
}

double project_probability(const ComplexVector& v, const Projector& p) {
  if (v.size() != p.dim()) {
    fail(errc::dimension_mismatch, "vector dimension " + std::to_string(v.size()) +
                                       " does not match projector dimension " +
                                       std::to_string(p.dim()));
  }
  double sum = 0.0;
  for (Eigen::Index i : p.basis_indices()) {
    sum += std::norm(v[i]);
  }
  return sum;
}

}  // namespace qcog
