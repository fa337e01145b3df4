#pragma once

// Brute-force long-double oracle used only by tests. Deliberately
// independent of the library headers: raw formulas, no renormalization,
// its own rounding and stopping logic.

#include <cmath>
#include <cstddef>
#include <vector>

namespace oracle {

using Vec = std::vector<long double>;

inline Vec yager(const Vec& p) {
  Vec q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    q[i] = (1.0L - p[i]) / static_cast<long double>(p.size() - 1);
  return q;
}

inline Vec expneg(const Vec& p) {
  Vec q(p.size());
  long double sum = 0.0L;
  for (std::size_t i = 0; i < p.size(); ++i) {
    q[i] = std::exp(-p[i]);
    sum += q[i];
  }
  for (auto& v : q) v /= sum;
  return q;
}

inline Vec step(bool use_yager, const Vec& p) { return use_yager ? yager(p) : expneg(p); }

inline long double shannon(const Vec& p) {
  long double h = 0.0L;
  for (auto v : p)
    if (v > 0.0L) h -= v * std::log(v);
  return h;
}

inline long double quadratic(const Vec& p) {
  long double s = 0.0L;
  for (auto v : p) s += v * v;
  return 1.0L - s;
}

inline long long round_scaled(long double x, int places) {
  long double scale = 1.0L;
  for (int i = 0; i < places; ++i) scale *= 10.0L;
  return std::llround(x * scale);
}

inline bool uniform_at_dp(const Vec& p, int places) {
  const long long target = round_scaled(1.0L / static_cast<long double>(p.size()), places);
  for (auto v : p)
    if (round_scaled(v, places) != target) return false;
  return true;
}

inline long double linf_uniform(const Vec& p) {
  const long double u = 1.0L / static_cast<long double>(p.size());
  long double d = 0.0L;
  for (auto v : p) d = std::max(d, std::fabs(v - u));
  return d;
}

struct Outcome {
  enum class Kind { converged, cycle, maxed } kind;
  int at = 0;
  int period = 0;
};

namespace detail {

inline bool close(const Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::fabs(a[i] - b[i]) > 1e-12L) return false;
  return true;
}

template <typename Done>
Outcome run(bool use_yager, Vec p, int max_iter, Done done) {
  if (done(p)) return {Outcome::Kind::converged, 0, 0};
  std::vector<Vec> history{p};
  for (int k = 1; k <= max_iter; ++k) {
    p = step(use_yager, p);
    if (done(p)) return {Outcome::Kind::converged, k, 0};
    for (std::size_t j = 0; j < history.size(); ++j)
      if (close(history[j], p)) return {Outcome::Kind::cycle, k, k - static_cast<int>(j)};
    history.push_back(p);
  }
  return {Outcome::Kind::maxed, max_iter, 0};
}

}  // namespace detail

inline Outcome iterations_dp(bool use_yager, const Vec& start, int places, int max_iter = 200) {
  return detail::run(use_yager, start, max_iter,
                     [places](const Vec& p) { return uniform_at_dp(p, places); });
}

inline Outcome iterations_linf(bool use_yager, const Vec& start, long double eps,
                               int max_iter = 200) {
  return detail::run(use_yager, start, max_iter,
                     [eps](const Vec& p) { return linf_uniform(p) < eps; });
}

}  // namespace oracle
