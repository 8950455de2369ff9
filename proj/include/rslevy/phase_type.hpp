#pragma once

#include <random>

#include "rslevy/markov.hpp"
#include "rslevy/types.hpp"

namespace rslevy {

/// Phase-type law PH(alpha, A): absorption time of a transient chain with
/// sub-generator A and initial sub-probability row vector alpha. Mass
/// 1 - alpha*1 sits in an atom at zero.
class PhaseType {
 public:
  PhaseType(RowVector alpha, Matrix a, const NumericalSettings& settings = {});

  const RowVector& alpha() const { return alpha_; }
  const Matrix& a() const { return a_; }
  Eigen::Index phases() const { return a_.rows(); }
  double initial_mass() const { return alpha_.sum(); }

  /// min{-Re(lambda) : lambda eigenvalue of A}; the exponential decay rate of
  /// the tail and the boundary of the mgf domain.
  double decay_rate() const { return decay_rate_; }

 private:
  RowVector alpha_;
  Matrix a_;
  double decay_rate_;
};

double ph_pdf(const PhaseType& d, double t);
double ph_cdf(const PhaseType& d, double t);
double ph_moment(const PhaseType& d, int n);

/// E[exp(uX)], finite iff Re(u) < decay_rate; throws DomainError at or beyond
/// the boundary (with a small safety margin).
Complex ph_mgf(const PhaseType& d, Complex u,
               const NumericalSettings& settings = {});

/// One absorption-time draw via the embedded jump chain.
double ph_sample(const PhaseType& d, std::mt19937_64& rng);

/// Two-sided jump law: up with probability p (law PH(beta+, B+)), down with
/// probability 1-p (law of -X, X ~ PH(beta-, B-)). No atom at zero: the used
/// tail must have full initial mass.
class DoublePhaseType {
 public:
  DoublePhaseType(double p, PhaseType plus, PhaseType minus,
                  const NumericalSettings& settings = {});

  double p() const { return p_; }
  const PhaseType& plus() const { return plus_; }
  const PhaseType& minus() const { return minus_; }

  double mean() const;
  double second_moment() const;
  /// E[exp(uJ)] for the signed jump J.
  Complex mgf(Complex u, const NumericalSettings& settings = {}) const;

 private:
  double p_;
  PhaseType plus_;
  PhaseType minus_;
};

double dph_pdf(const DoublePhaseType& d, double x);

/// Law of c*U for U ~ d and c > 0 (sub-generators scale by 1/c).
DoublePhaseType dph_scale(const DoublePhaseType& d, double c);

double dph_sample(const DoublePhaseType& d, std::mt19937_64& rng);

/// Convenience constructors.
PhaseType exponential_ph(double rate);
PhaseType erlang_ph(int stages, double rate);
DoublePhaseType double_exponential(double p, double rate_up, double rate_down);

}  // namespace rslevy
