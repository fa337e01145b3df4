#pragma once

#include <cmath>

#include "pneg/negation.hpp"

namespace pneg {

enum class EntropyMeasure { shannon, quadratic };

inline const char* to_string(EntropyMeasure m) {
  return m == EntropyMeasure::shannon ? "shannon" : "quadratic";
}

/// Shannon entropy in nats, -sum p_i ln p_i, with 0 ln 0 = 0.
inline double shannon_entropy(const Distribution& p) {
  double h = 0.0;
  for (double v : p)
    if (v > 0.0) h -= v * std::log(v);
  return h;
}

/// Quadratic entropy 1 - sum p_i^2 (Gini impurity); ranges over [0, 1 - 1/n].
inline double quadratic_entropy(const Distribution& p) {
  double s = 0.0;
  for (double v : p) s += v * v;
  return 1.0 - s;
}

inline double entropy(EntropyMeasure measure, const Distribution& p) {
  return measure == EntropyMeasure::shannon ? shannon_entropy(p) : quadratic_entropy(p);
}

/// Quadratic-entropy gain of one Yager step in closed form:
/// (n-2)/(n-1)^2 * (n sum p_i^2 - 1). Nonnegative, zero at uniform, and
/// identically zero for n = 2 -- which is why the binary Yager map cycles.
inline double yager_entropy_delta_closed(const Distribution& p) {
  if (p.size() < 2)
    throw Error(Errc::DegenerateDimension, "yager entropy delta needs n >= 2");
  const double n = static_cast<double>(p.size());
  double s = 0.0;
  for (double v : p) s += v * v;
  return (n - 2.0) / ((n - 1.0) * (n - 1.0)) * (n * s - 1.0);
}

/// measure(apply(op, p)) - measure(p).
inline double entropy_delta(NegationOperator op, EntropyMeasure measure,
                            const Distribution& p) {
  return entropy(measure, apply(op, p)) - entropy(measure, p);
}

}  // namespace pneg
