#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "pneg/simplex.hpp"

namespace pneg {

enum class NegationOperator { yager, exponential };

inline const char* to_string(NegationOperator op) {
  return op == NegationOperator::yager ? "yager" : "exp";
}

namespace detail {

// Raw formula steps on plain vectors. The experiment harness also runs
// these directly to mirror published iteration pipelines, so the yager
// step must not renormalize here.

inline std::vector<double> yager_step(const std::vector<double>& p) {
  if (p.size() < 2)
    throw Error(Errc::DegenerateDimension, "yager negation needs n >= 2");
  const double divisor = static_cast<double>(p.size()) - 1.0;
  std::vector<double> q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[i] = (1.0 - p[i]) / divisor;
  return q;
}

inline std::vector<double> exponential_step(const std::vector<double>& p) {
  std::vector<double> q(p.size());
  double sum = 0.0;
  // p_i in [0, 1], so every exponent lies in [-1, 0]; no overflow, no
  // max-shift stabilization required
  for (std::size_t i = 0; i < p.size(); ++i) {
    q[i] = std::exp(-p[i]);
    sum += q[i];
  }
  for (double& v : q) v /= sum;
  return q;
}

inline std::vector<double> raw_step(NegationOperator op, const std::vector<double>& p) {
  return op == NegationOperator::yager ? yager_step(p) : exponential_step(p);
}

// Divide by the computed sum so the output sits on the simplex to full
// precision; the sum of raw yager terms is 1 only up to rounding.
inline Distribution renormalized(std::vector<double> raw) {
  double sum = 0.0;
  for (double v : raw) sum += v;
  for (double& v : raw) v /= sum;
  return Distribution(std::move(raw));
}

}  // namespace detail

/// Arithmetic negation: q_i = (1 - p_i) / (n - 1). Each probability is
/// complemented and the complement spread over the other n-1 outcomes.
/// Undefined at n = 1 (zero denominator).
inline Distribution yager_negation(const Distribution& p) {
  return detail::renormalized(detail::yager_step(p.values()));
}

/// Exponential negation: softmax of the complemented likelihoods,
/// q_i = e^{-p_i} / sum_j e^{-p_j}. Larger probabilities map to smaller
/// ones and the uniform distribution is the fixed point. n = 1 maps {1}
/// to {1}.
inline Distribution exponential_negation(const Distribution& p) {
  return Distribution(detail::exponential_step(p.values()));
}

inline Distribution apply(NegationOperator op, const Distribution& p) {
  return op == NegationOperator::yager ? yager_negation(p) : exponential_negation(p);
}

/// Negation applied twice. Neither operator is involutive: this is not the
/// identity except at fixed points (and for Yager's binary swap).
inline Distribution double_negation(NegationOperator op, const Distribution& p) {
  return apply(op, apply(op, p));
}

}  // namespace pneg
