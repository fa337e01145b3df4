#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <vector>

#include "helpers.hpp"
#include "pneg/experiments.hpp"
#include "pneg/simplex.hpp"

using namespace pneg;
using Catch::Approx;
using testutil::thrown_code;

TEST_CASE("construction accepts valid distributions unchanged", "[simplex]") {
  const std::vector<double> values{0.1, 0.4, 0.5};
  const Distribution p = make_distribution(values);
  REQUIRE(p.size() == 3);
  // round-trips bit for bit, no renormalization at construction
  REQUIRE(p.values() == values);

  const Distribution single = make_distribution({1.0});
  REQUIRE(single.size() == 1);
  REQUIRE(single[0] == 1.0);
}

TEST_CASE("construction rejects invalid input", "[simplex]") {
  REQUIRE(thrown_code([] { make_distribution({}); }) == Errc::EmptyInput);
  REQUIRE(thrown_code([] { make_distribution({0.5, 0.6}); }) == Errc::SumNotOne);
  REQUIRE(thrown_code([] { make_distribution({1.5, -0.5}); }) == Errc::EntryOutOfRange);
  REQUIRE(thrown_code([] { make_distribution({0.5, 0.5 + 1e-8}); }) == Errc::SumNotOne);
  // within the 1e-9 sum tolerance
  REQUIRE_NOTHROW(make_distribution({0.5, 0.5 + 1e-10}));
  // the message names the violated invariant (the CLI relies on this)
  try {
    make_distribution({0.5, 0.6});
    FAIL("expected a throw");
  } catch (const Error& e) {
    REQUIRE_THAT(e.what(), Catch::Matchers::StartsWith("SumNotOne"));
  }
}

TEST_CASE("uniform builds 1/n everywhere", "[simplex]") {
  REQUIRE(uniform(2).values() == std::vector<double>{0.5, 0.5});
  REQUIRE(uniform(5).values() == std::vector<double>(5, 0.2));
  for (double v : uniform(3)) REQUIRE(v == 1.0 / 3.0);
  REQUIRE(thrown_code([] { uniform(0); }) == Errc::EmptyInput);
}

TEST_CASE("linf distance examples", "[simplex]") {
  REQUIRE(linf_distance(make_distribution({0.0, 1.0}), make_distribution({1.0, 0.0})) == 1.0);
  const Distribution half = make_distribution({0.5, 0.5});
  REQUIRE(linf_distance(half, half) == 0.0);
  REQUIRE(linf_distance(make_distribution({0.1, 0.4, 0.5}), uniform(3)) ==
          Approx(0.2333333333333333).margin(1e-12));
  REQUIRE(thrown_code([&] { linf_distance(half, uniform(3)); }) == Errc::LengthMismatch);
}

TEST_CASE("linf distance is a metric on random triples", "[simplex][property]") {
  std::mt19937_64 rng(7101);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng() % 10;
    const Distribution a = sample_simplex(n, rng);
    const Distribution b = sample_simplex(n, rng);
    const Distribution c = sample_simplex(n, rng);
    REQUIRE(linf_distance(a, b) == linf_distance(b, a));
    REQUIRE(linf_distance(a, a) == 0.0);
    if (a.values() != b.values()) REQUIRE(linf_distance(a, b) > 0.0);
    REQUIRE(linf_distance(a, c) <= linf_distance(a, b) + linf_distance(b, c) + 1e-15);
  }
}

TEST_CASE("is_uniform_at with decimal places", "[simplex]") {
  REQUIRE(is_uniform_at(make_distribution({0.500, 0.500}), DecimalPlaces(3)));
  REQUIRE_FALSE(is_uniform_at(make_distribution({0.472, 0.528}), DecimalPlaces(3)));
  REQUIRE(is_uniform_at(make_distribution({0.3334, 0.3333, 0.3333}), DecimalPlaces(3)));
  REQUIRE_FALSE(is_uniform_at(make_distribution({0.3329, 0.333, 0.3341}), DecimalPlaces(3)));
}

TEST_CASE("is_uniform_at with linf tolerance", "[simplex]") {
  REQUIRE(is_uniform_at(uniform(7), LInfTolerance(1e-12)));
  REQUIRE_FALSE(is_uniform_at(make_distribution({0.49, 0.51}), LInfTolerance(0.01)));
  REQUIRE(is_uniform_at(make_distribution({0.49, 0.51}), LInfTolerance(0.011)));
}

TEST_CASE("linf criterion is monotone in eps", "[simplex][property]") {
  std::mt19937_64 rng(7102);
  for (int trial = 0; trial < 200; ++trial) {
    const Distribution p = sample_simplex(2 + rng() % 8, rng);
    const double eps = std::ldexp(1.0, -static_cast<int>(rng() % 20) - 1);
    if (is_uniform_at(p, LInfTolerance(eps))) {
      REQUIRE(is_uniform_at(p, LInfTolerance(eps * 2)));
      REQUIRE(is_uniform_at(p, LInfTolerance(eps * 16)));
    }
  }
}

TEST_CASE("criterion parameter validation", "[simplex]") {
  REQUIRE(thrown_code([] { DecimalPlaces(0); }) == Errc::InvalidArgument);
  REQUIRE(thrown_code([] { DecimalPlaces(-2); }) == Errc::InvalidArgument);
  REQUIRE(thrown_code([] { LInfTolerance(0.0); }) == Errc::InvalidArgument);
  REQUIRE(thrown_code([] { LInfTolerance(-1e-9); }) == Errc::InvalidArgument);
  REQUIRE_NOTHROW(DecimalPlaces(1));
  REQUIRE_NOTHROW(LInfTolerance(1e-15));
}

TEST_CASE("round_to_places rounds half away from zero", "[simplex]") {
  // the double nearest 0.2175 sits just below the decimal half, so 3 places
  // give 0.217; the exact dyadic half 0.0625 rounds away to 0.063
  REQUIRE(round_to_places(0.2175, 3) == Approx(0.217).margin(1e-12));
  REQUIRE(round_to_places(0.20078125, 3) == Approx(0.201).margin(1e-12));
  REQUIRE(round_to_places(0.0625, 3) == Approx(0.063).margin(1e-12));
  REQUIRE(round_to_places(0.5, 1) == Approx(0.5).margin(1e-12));
}
