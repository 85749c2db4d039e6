#pragma once

#include <cmath>

namespace expanse {

/// Natural log of a positive quantity. The quantity itself may exceed the
/// range of any native floating type (sample-space sizes under
/// double-exponential growth do); its log must stay finite.
class LogQuantity {
 public:
  explicit LogQuantity(double log_value);

  double value() const { return log_value_; }

  /// Product of the underlying quantities.
  friend LogQuantity operator+(LogQuantity lhs, LogQuantity rhs) {
    return LogQuantity(lhs.log_value_ + rhs.log_value_);
  }

 private:
  double log_value_;
};

enum class ExpansionKind { Exponential, Power, DoubleExponential };

/// Parameterized functional form of a sample-space expansion.
///
/// The driving quantity is the real-valued doubling count n(t):
///   Exponential        n = lambda * (t - t0) / ln 2
///   Power              n = a * ln(t - t0) / ln 2,  requires t - t0 > 0
///   DoubleExponential  n = a * exp(lambda * (t - t0))
///
/// From n everything else follows: s = 2^n, p = 2^-n, H = n ln 2.
struct ExpansionSpec {
  ExpansionKind kind = ExpansionKind::Exponential;
  double lambda = 0.0;  // rate constant per unit time (Exponential, DoubleExponential)
  double a = 1.0;       // exponent (Power) or doubling-count scale (DoubleExponential)
  double t0 = 0.0;      // time offset, evaluation uses t - t0

  // DoubleExponential only: measure doublings relative to t0, i.e.
  // n(t) = a * (exp(lambda * (t - t0)) - 1), so that n(t0) = 0. Produced by
  // align_to_unit_time; the plain form above is the default everywhere else.
  bool unit_aligned = false;

  static ExpansionSpec exponential(double lambda, double t0 = 0.0);
  static ExpansionSpec power(double a, double t0 = 0.0);
  static ExpansionSpec double_exponential(double a, double lambda, double t0 = 0.0);
};

/// Real-valued number of sample-space doublings at time t. May be negative
/// (e.g. Exponential with t < t0); callers clamp if they need n >= 0.
/// Throws std::domain_error when Power receives shifted time <= 0.
double doublings_at(const ExpansionSpec& spec, double t);

/// ln s(t) = doublings_at(t) * ln 2. Unclamped: negative when n < 0.
/// s itself is never materialized.
LogQuantity log_sample_space(const ExpansionSpec& spec, double t);

/// ln p(x0|t) = -max(0, n ln 2). Clamped so that p <= 1; the sample space
/// never shrinks below 1.
double log_probability(const ExpansionSpec& spec, double t);

/// p(x0|t) = exp(log_probability). Underflows to 0 for huge doubling counts;
/// use log_probability where that matters.
double probability(const ExpansionSpec& spec, double t);

/// Information entropy in nats: H(t) = max(0, n ln 2) = -log_probability.
double entropy(const ExpansionSpec& spec, double t);

/// Rescale a spec with t0 = 0 so that p(x0|t) = 1 at t = 1.
/// Exponential gets t0 = 1; Power already satisfies p(1) = 1; and
/// DoubleExponential switches to the unit_aligned doubling count
/// n(t) = a * (exp(lambda * (t - 1)) - 1).
ExpansionSpec align_to_unit_time(const ExpansionSpec& spec);

}  // namespace expanse
