#include "rslevy/markov.hpp"

#include <Eigen/Eigenvalues>
#include <sstream>

namespace rslevy {

GeneratorMatrix::GeneratorMatrix(Matrix entries,
                                 const NumericalSettings& settings)
    : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols() || entries_.rows() == 0)
    throw InvalidInput("generator must be square and non-empty");
  for (Eigen::Index i = 0; i < entries_.rows(); ++i) {
    for (Eigen::Index j = 0; j < entries_.cols(); ++j) {
      if (i != j && entries_(i, j) < 0) {
        std::ostringstream msg;
        msg << "generator entry (" << i << "," << j
            << ") is negative: " << entries_(i, j);
        throw InvalidInput(msg.str());
      }
    }
    const double row_sum = entries_.row(i).sum();
    if (std::abs(row_sum) > settings.generator_row_sum_tol) {
      std::ostringstream msg;
      msg << "generator row " << i << " sums to " << row_sum;
      throw InvalidInput(msg.str());
    }
  }
}

GeneratorMatrix validate_generator(const Matrix& m,
                                   const NumericalSettings& settings) {
  return GeneratorMatrix(m, settings);
}

double spectral_abscissa(const CMatrix& m) {
  Eigen::ComplexEigenSolver<CMatrix> solver(m, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success)
    throw NumericalError("spectral_abscissa: eigensolver failed to converge");
  return solver.eigenvalues().real().maxCoeff();
}

double spectral_abscissa(const Matrix& m) {
  return spectral_abscissa(CMatrix(m.cast<Complex>()));
}

CMatrix semigroup_with_potential(const GeneratorMatrix& q, const CVector& b,
                                 double t) {
  if (b.size() != q.dim())
    throw InvalidInput("semigroup_with_potential: dimension mismatch");
  if (t < 0) throw InvalidInput("semigroup_with_potential: t must be >= 0");
  CMatrix a = q.entries().cast<Complex>();
  a.diagonal() += b;
  return matrix_exp(CMatrix(t * a));
}

CMatrix resolvent(const CMatrix& m, Complex q) {
  const Eigen::Index n = m.rows();
  CMatrix a = -m;
  a.diagonal().array() += q;
  Eigen::PartialPivLU<CMatrix> lu(a);
  CMatrix inv = lu.solve(CMatrix::Identity(n, n));
  const double residual = (a * inv - CMatrix::Identity(n, n)).cwiseAbs().maxCoeff();
  if (!inv.allFinite() || residual > 1e-6)
    throw NumericalError("resolvent: system qI - M is numerically singular");
  return inv;
}

CVector resolvent_apply(const CMatrix& m, Complex q, const CVector& rhs) {
  CMatrix a = -m;
  a.diagonal().array() += q;
  Eigen::PartialPivLU<CMatrix> lu(a);
  CVector x = lu.solve(rhs);
  const double residual = (a * x - rhs).cwiseAbs().maxCoeff();
  const double scale = rhs.cwiseAbs().maxCoeff() + 1.0;
  if (!x.allFinite() || residual > 1e-6 * scale)
    throw NumericalError("resolvent_apply: system qI - M is numerically singular");
  return x;
}

}  // namespace rslevy
