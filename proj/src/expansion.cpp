#include "expanse/expansion.hpp"

#include <numbers>
#include <stdexcept>

namespace expanse {

namespace {

void check_params(const ExpansionSpec& spec) {
  switch (spec.kind) {
    case ExpansionKind::Exponential:
      if (!(spec.lambda >= 0.0)) throw std::invalid_argument("exponential expansion requires lambda >= 0");
      break;
    case ExpansionKind::Power:
      if (!(spec.a > 0.0)) throw std::invalid_argument("power expansion requires a > 0");
      break;
    case ExpansionKind::DoubleExponential:
      if (!(spec.a > 0.0)) throw std::invalid_argument("double-exponential expansion requires a > 0");
      if (!(spec.lambda >= 0.0)) throw std::invalid_argument("double-exponential expansion requires lambda >= 0");
      break;
  }
}

}  // namespace

LogQuantity::LogQuantity(double log_value) : log_value_(log_value) {
  if (!std::isfinite(log_value_)) throw std::range_error("LogQuantity requires a finite log value");
}

ExpansionSpec ExpansionSpec::exponential(double lambda, double t0) {
  ExpansionSpec spec{ExpansionKind::Exponential, lambda, 1.0, t0, false};
  check_params(spec);
  return spec;
}

ExpansionSpec ExpansionSpec::power(double a, double t0) {
  ExpansionSpec spec{ExpansionKind::Power, 0.0, a, t0, false};
  check_params(spec);
  return spec;
}

ExpansionSpec ExpansionSpec::double_exponential(double a, double lambda, double t0) {
  ExpansionSpec spec{ExpansionKind::DoubleExponential, lambda, a, t0, false};
  check_params(spec);
  return spec;
}

double doublings_at(const ExpansionSpec& spec, double t) {
  check_params(spec);
  const double u = t - spec.t0;
  switch (spec.kind) {
    case ExpansionKind::Exponential:
      return spec.lambda * u / std::numbers::ln2;
    case ExpansionKind::Power:
      if (!(u > 0.0)) throw std::domain_error("power expansion requires t - t0 > 0");
      return spec.a * std::log(u) / std::numbers::ln2;
    case ExpansionKind::DoubleExponential: {
      const double n = spec.a * std::exp(spec.lambda * u);
      return spec.unit_aligned ? n - spec.a : n;
    }
  }
  throw std::logic_error("unreachable expansion kind");
}

LogQuantity log_sample_space(const ExpansionSpec& spec, double t) {
  return LogQuantity(doublings_at(spec, t) * std::numbers::ln2);
}

double entropy(const ExpansionSpec& spec, double t) {
  return std::max(0.0, doublings_at(spec, t) * std::numbers::ln2);
}

double log_probability(const ExpansionSpec& spec, double t) {
  return -entropy(spec, t);
}

double probability(const ExpansionSpec& spec, double t) {
  return std::exp(log_probability(spec, t));
}

ExpansionSpec align_to_unit_time(const ExpansionSpec& spec) {
  check_params(spec);
  if (spec.t0 != 0.0) throw std::invalid_argument("align_to_unit_time expects a spec with t0 = 0");
  ExpansionSpec aligned = spec;
  switch (spec.kind) {
    case ExpansionKind::Exponential:
      aligned.t0 = 1.0;
      break;
    case ExpansionKind::Power:
      break;  // p(1) = 1^-a = 1 already
    case ExpansionKind::DoubleExponential:
      aligned.t0 = 1.0;
      aligned.unit_aligned = true;
      break;
  }
  return aligned;
}

}  // namespace expanse
