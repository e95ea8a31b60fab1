#pragma once

#include <Eigen/Dense>

#include <complex>
#include <vector>

namespace qcog {

using ComplexVector = Eigen::VectorXcd;

/// Orthogonal projector onto a subset of canonical basis coordinates of C^dim.
/// The matrix is diagonal 0/1 and never materialized; idempotence and
/// self-adjointness hold by construction.
class Projector {
 public:
  /// Indices must be distinct and lie in [0, dim).
  Projector(Eigen::Index dim, std::vector<Eigen::Index> indices);

  Eigen::Index dim() const { return dim_; }
  const std::vector<Eigen::Index>& basis_indices() const { return indices_; }

 private:
  Eigen::Index dim_;
  std::vector<Eigen::Index> indices_;  // kept sorted
};

/// Hermitian inner product, conjugate-linear in the first argument.
std::complex<double> inner_product(const ComplexVector& u, const ComplexVector& v);

/// <v|P|v> for normalized v: the summed squared moduli of the kept coordinates.
double project_probability(const ComplexVector& v, const Projector& p);

}  // namespace qcog
