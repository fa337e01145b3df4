#pragma once

// Negation operators on finite probability distributions: simplex types,
// the Yager and exponential negations, entropy measures, iteration
// dynamics, and the reference-table experiment harness.

#include "pneg/dynamics.hpp"
#include "pneg/entropy.hpp"
#include "pneg/error.hpp"
#include "pneg/experiments.hpp"
#include "pneg/golden_tables.hpp"
#include "pneg/negation.hpp"
#include "pneg/simplex.hpp"
