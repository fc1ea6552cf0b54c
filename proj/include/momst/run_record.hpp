// Per-run result record and its CSV encoding.
//
// CSV schema (one row per run):
//   seed,graph,algo,n,m,iterations,success,final_w1,final_w2,budget,wall_ms
// final_w2 is empty for single-objective runs. For archive-based runs the
// final weight columns hold the ideal point (componentwise minimum) of the
// final archive. Two runs of the same configuration and seed produce
// byte-identical rows except for wall_ms.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "momst/weight.hpp"

namespace momst {

struct RunRecord {
  std::uint64_t seed = 0;
  std::string graph;   // instance label
  std::string algo;    // "ea-um", "gsemo-bm", ...
  int n = 0;
  int m = 0;
  long long iterations = 0;  // iterations consumed (0 = solved by init)
  bool success = false;
  WeightVec final_weight;
  long long budget = 0;
  double wall_ms = 0.0;
};

// Shortest round-trip decimal form of v ("1280", "0.5", ...).
std::string format_number(double v);

void write_run_csv_header(std::ostream& out);
void write_run_csv_row(std::ostream& out, const RunRecord& r);

}  // namespace momst
