#pragma once

#include <unsupported/Eigen/MatrixFunctions>

#include "rslevy/types.hpp"

namespace rslevy {

/// Square real matrix with non-negative off-diagonal entries and zero row
/// sums; the generator of a finite-state Markov chain.
class GeneratorMatrix {
 public:
  explicit GeneratorMatrix(Matrix entries,
                           const NumericalSettings& settings = {});

  const Matrix& entries() const { return entries_; }
  Eigen::Index dim() const { return entries_.rows(); }

 private:
  Matrix entries_;
};

/// Validates the generator invariants and wraps the matrix; throws
/// InvalidInput naming the first violated entry/row.
GeneratorMatrix validate_generator(const Matrix& m,
                                   const NumericalSettings& settings = {});

/// exp(M) by scaling-and-squaring with a diagonal Pade approximant; works for
/// real and complex dense matrices.
template <typename Derived>
auto matrix_exp(const Eigen::MatrixBase<Derived>& m) ->
    typename Derived::PlainObject {
  if (!m.allFinite()) throw InvalidInput("matrix_exp: non-finite entries");
  if (m.rows() != m.cols()) throw InvalidInput("matrix_exp: matrix not square");
  return m.exp();
}

/// Largest real part over the eigenvalues of a (real or complex) square
/// matrix; throws NumericalError if the eigensolver does not converge.
double spectral_abscissa(const CMatrix& m);
double spectral_abscissa(const Matrix& m);

/// exp(t(Q + diag(B))): entry (i,j) is E_i[exp(int_0^t B(Z_s) ds) 1{Z_t=j}]
/// for the chain Z generated by Q.
CMatrix semigroup_with_potential(const GeneratorMatrix& q, const CVector& b,
                                 double t);

/// (qI - M)^{-1}. Caller asserts Re(q) > 0 and the spectrum of M lies in the
/// closed left half-plane; a singular solve signals a violated precondition.
CMatrix resolvent(const CMatrix& m, Complex q);

/// Solves (qI - M) x = rhs (same preconditions as resolvent).
CVector resolvent_apply(const CMatrix& m, Complex q, const CVector& rhs);

}  // namespace rslevy
