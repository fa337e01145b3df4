#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "pneg/error.hpp"

namespace pneg {

/// Allowed |sum - 1| at construction. Exact decimal inputs such as
/// {0.1, 0.4, 0.5} do not sum to 1 in binary floating point, so strict
/// equality would reject them.
inline constexpr double kSumTolerance = 1e-9;

/// A validated point on the probability simplex: entries in [0, 1]
/// summing to 1 within kSumTolerance. Immutable; construction preserves
/// the input values bit for bit.
class Distribution {
 public:
  explicit Distribution(std::vector<double> values) : values_(std::move(values)) {
    if (values_.empty())
      throw Error(Errc::EmptyInput, "a distribution needs at least one entry");
    double sum = 0.0;
    for (double v : values_) {
      if (!(v >= 0.0 && v <= 1.0))
        throw Error(Errc::EntryOutOfRange, "entry " + std::to_string(v) + " outside [0, 1]");
      sum += v;
    }
    if (std::abs(sum - 1.0) > kSumTolerance)
      throw Error(Errc::SumNotOne, "entries sum to " + std::to_string(sum));
  }

  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const noexcept { return values_[i]; }
  const std::vector<double>& values() const noexcept { return values_; }

  std::vector<double>::const_iterator begin() const noexcept { return values_.begin(); }
  std::vector<double>::const_iterator end() const noexcept { return values_.end(); }

  friend bool operator==(const Distribution&, const Distribution&) = default;

 private:
  std::vector<double> values_;
};

inline Distribution make_distribution(std::vector<double> values) {
  return Distribution(std::move(values));
}

inline Distribution uniform(std::size_t n) {
  if (n == 0) throw Error(Errc::EmptyInput, "uniform distribution needs n >= 1");
  return Distribution(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

inline double linf_distance(const Distribution& a, const Distribution& b) {
  if (a.size() != b.size())
    throw Error(Errc::LengthMismatch, "distributions have lengths " +
                                          std::to_string(a.size()) + " and " +
                                          std::to_string(b.size()));
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

/// Converged once every entry, printed at `places` decimals, reads as 1/n.
struct DecimalPlaces {
  explicit DecimalPlaces(int places_in) : places(places_in) {
    if (places < 1 || places > 15)
      throw Error(Errc::InvalidArgument, "decimal places must lie in [1, 15]");
  }
  int places;
};

/// Converged once the L-inf distance to uniform drops below eps.
struct LInfTolerance {
  explicit LInfTolerance(double eps_in) : eps(eps_in) {
    if (!(eps > 0.0)) throw Error(Errc::InvalidArgument, "tolerance must be > 0");
  }
  double eps;
};

using ConvergenceCriterion = std::variant<DecimalPlaces, LInfTolerance>;

/// 10^places as an exact double (places <= 15, so every product is exact).
inline double pow10(int places) {
  double scale = 1.0;
  for (int i = 0; i < places; ++i) scale *= 10.0;
  return scale;
}

/// x rounded half away from zero at `places` decimals, as the scaled integer.
inline std::int64_t round_scaled(double x, int places) {
  return std::llround(x * pow10(places));
}

inline double round_to_places(double x, int places) {
  return static_cast<double>(round_scaled(x, places)) / pow10(places);
}

inline bool is_uniform_at(const Distribution& p, const ConvergenceCriterion& criterion) {
  if (const auto* dp = std::get_if<DecimalPlaces>(&criterion)) {
    const std::int64_t target = round_scaled(1.0 / static_cast<double>(p.size()), dp->places);
    return std::all_of(p.begin(), p.end(),
                       [&](double v) { return round_scaled(v, dp->places) == target; });
  }
  return linf_distance(p, uniform(p.size())) < std::get<LInfTolerance>(criterion).eps;
}

}  // namespace pneg
