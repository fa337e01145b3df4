#pragma once

#include <cstddef>
#include <vector>

#include "pneg/negation.hpp"

namespace pneg {

/// One embedded reference table: expected[row][j] is the printed value of
/// element `row` at iteration first_column + j. The values are regression
/// data transcribed verbatim from the published 3-decimal tables and are
/// never recomputed here, so the comparison stays independent of the code
/// it checks.
struct GoldenTable {
  int id;
  const char* name;
  NegationOperator op;
  std::vector<double> initial;
  std::size_t first_column;
  std::vector<std::vector<double>> expected;
  double tolerance;  ///< allowed |computed - printed| per cell
};

/// All embedded reference tables, ids 1..7.
///
/// Note: tables 4 and 6 contain seven cells whose printed last digit is
/// inconsistent with exact arithmetic (deviations 5.1e-4..7.5e-4); the
/// comparison reports them rather than papering over them. Tables 1, 2,
/// 3, 5 and 7 reproduce exactly under round-half-away-from-zero.
inline const std::vector<GoldenTable>& golden_tables() {
  static const std::vector<GoldenTable> tables = {
      {1,
       "exponential iteration of {0,1}, k=0..5",
       NegationOperator::exponential,
       {0.0, 1.0},
       0,
       {{0.0, 0.731, 0.386, 0.557, 0.472, 0.514},
        {1.0, 0.269, 0.614, 0.443, 0.528, 0.486}},
       0.0005},
      {2,
       "exponential iteration of {0,1}, k=6..10",
       NegationOperator::exponential,
       {0.0, 1.0},
       6,
       {{0.493, 0.504, 0.498, 0.501, 0.500},
        {0.507, 0.496, 0.502, 0.499, 0.500}},
       0.0005},
      {3,
       "yager iteration of {0,1}, k=0..5",
       NegationOperator::yager,
       {0.0, 1.0},
       0,
       {{0.0, 1.0, 0.0, 1.0, 0.0, 1.0},
        {1.0, 0.0, 1.0, 0.0, 1.0, 0.0}},
       0.0005},
      {4,
       "exponential iteration of {0.1,0.4,0.5}, k=0..6",
       NegationOperator::exponential,
       {0.1, 0.4, 0.5},
       0,
       {{0.100, 0.414, 0.306, 0.342, 0.330, 0.334, 0.333},
        {0.400, 0.307, 0.342, 0.331, 0.334, 0.333, 0.333},
        {0.500, 0.278, 0.352, 0.327, 0.335, 0.332, 0.333}},
       0.0005},
      {5,
       "yager iteration of {0.1,0.4,0.5}, k=0..6",
       NegationOperator::yager,
       {0.1, 0.4, 0.5},
       0,
       {{0.100, 0.450, 0.275, 0.363, 0.319, 0.341, 0.330},
        {0.400, 0.300, 0.350, 0.325, 0.338, 0.331, 0.334},
        {0.500, 0.250, 0.375, 0.313, 0.344, 0.328, 0.336}},
       0.0005},
      {6,
       "exponential iteration of {0.1,0.13,0.17,0.3,0.4}, k=0..5",
       NegationOperator::exponential,
       {0.1, 0.13, 0.17, 0.3, 0.4},
       0,
       {{0.100, 0.224, 0.195, 0.201, 0.200, 0.200},
        {0.130, 0.218, 0.197, 0.201, 0.200, 0.200},
        {0.170, 0.209, 0.198, 0.200, 0.200, 0.200},
        {0.300, 0.184, 0.203, 0.199, 0.200, 0.200},
        {0.400, 0.166, 0.207, 0.199, 0.200, 0.200}},
       0.0005},
      {7,
       "yager iteration of {0.1,0.13,0.17,0.3,0.4}, k=0..5",
       NegationOperator::yager,
       {0.1, 0.13, 0.17, 0.3, 0.4},
       0,
       {{0.100, 0.225, 0.194, 0.202, 0.200, 0.200},
        {0.130, 0.218, 0.196, 0.201, 0.200, 0.200},
        {0.170, 0.208, 0.198, 0.200, 0.200, 0.200},
        {0.300, 0.175, 0.206, 0.198, 0.200, 0.200},
        {0.400, 0.150, 0.213, 0.197, 0.201, 0.200}},
       0.0005},
  };
  return tables;
}

}  // namespace pneg
