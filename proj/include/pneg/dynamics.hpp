#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "pneg/entropy.hpp"

namespace pneg {

inline constexpr std::size_t kDefaultMaxIterations = 200;

/// Two states within this per-entry distance are treated as the same point
/// when scanning for cycles.
inline constexpr double kCycleTolerance = 1e-12;

/// Terminal state of an iteration run.
struct TraceStatus {
  enum class Kind { converged, cycle, max_iterations };

  Kind kind = Kind::max_iterations;
  /// converged: first index satisfying the criterion; cycle: index where
  /// the repeat was detected; max_iterations: steps taken.
  std::size_t at = 0;
  /// Cycle length; 0 unless kind == cycle.
  std::size_t period = 0;

  bool converged() const noexcept { return kind == Kind::converged; }

  static TraceStatus make_converged(std::size_t k) { return {Kind::converged, k, 0}; }
  static TraceStatus make_cycle(std::size_t period, std::size_t detected_at) {
    return {Kind::cycle, detected_at, period};
  }
  static TraceStatus make_max_iterations(std::size_t steps) {
    return {Kind::max_iterations, steps, 0};
  }
};

/// Record of repeated negation: states[0] is the start,
/// states[k+1] = apply(op, states[k]), entropies[k] = shannon(states[k]).
struct IterationTrace {
  NegationOperator op;
  std::vector<Distribution> states;
  std::vector<double> entropies;
  TraceStatus status;
};

/// Applies `op` until the criterion holds, a cycle closes, or max_iter steps
/// have run -- whichever comes first, checked in that order. The start state
/// counts as iteration 0 and is checked too, so a fixed point converges
/// without any application. Cycle detection compares each new state against
/// the full history (traces stay short at this scale).
inline IterationTrace iterate(NegationOperator op, const Distribution& start,
                              const ConvergenceCriterion& criterion,
                              std::size_t max_iter = kDefaultMaxIterations) {
  if (max_iter < 1) throw Error(Errc::InvalidArgument, "max_iter must be >= 1");
  IterationTrace trace{op, {}, {}, {}};
  trace.states.reserve(16);
  trace.states.push_back(start);
  trace.entropies.push_back(shannon_entropy(start));
  if (is_uniform_at(start, criterion)) {
    trace.status = TraceStatus::make_converged(0);
    return trace;
  }
  for (std::size_t k = 1; k <= max_iter; ++k) {
    trace.states.push_back(apply(op, trace.states.back()));
    const Distribution& current = trace.states.back();
    trace.entropies.push_back(shannon_entropy(current));
    if (is_uniform_at(current, criterion)) {
      trace.status = TraceStatus::make_converged(k);
      return trace;
    }
    for (std::size_t j = 0; j + 1 < trace.states.size(); ++j) {
      if (linf_distance(trace.states[j], current) <= kCycleTolerance) {
        trace.status = TraceStatus::make_cycle(k - j, k);
        return trace;
      }
    }
  }
  trace.status = TraceStatus::make_max_iterations(max_iter);
  return trace;
}

/// The k of the first state satisfying the criterion, or the cycle /
/// max-iteration status explaining why none will.
inline TraceStatus iterations_to_uniform(NegationOperator op, const Distribution& start,
                                         const ConvergenceCriterion& criterion,
                                         std::size_t max_iter = kDefaultMaxIterations) {
  return iterate(op, start, criterion, max_iter).status;
}

/// Per-step ratios of L-inf distance to uniform over `steps` successive
/// applications. The single-step ratio is the measured contraction factor
/// at `p`; for Yager it equals 1/(n-1) exactly, from the deviation
/// recurrence q_i - 1/n = -(p_i - 1/n)/(n-1).
inline std::vector<double> contraction_factors(NegationOperator op, const Distribution& p,
                                               std::size_t steps = 1) {
  const Distribution target = uniform(p.size());
  double before = linf_distance(p, target);
  if (before == 0.0)
    throw Error(Errc::UniformInput, "contraction factor undefined at the fixed point");
  std::vector<double> factors;
  factors.reserve(steps);
  Distribution current = p;
  for (std::size_t s = 0; s < steps; ++s) {
    current = apply(op, current);
    const double after = linf_distance(current, target);
    factors.push_back(after / before);
    if (after == 0.0) break;  // landed exactly on uniform
    before = after;
  }
  return factors;
}

}  // namespace pneg
