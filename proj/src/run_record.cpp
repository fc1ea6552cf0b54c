#include "momst/run_record.hpp"

#include <charconv>
#include <ostream>

namespace momst {

std::string format_number(double v) {
  char buf[40];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void write_run_csv_header(std::ostream& out) {
  out << "seed,graph,algo,n,m,iterations,success,final_w1,final_w2,budget,"
         "wall_ms\n";
}

void write_run_csv_row(std::ostream& out, const RunRecord& r) {
  out << r.seed << ',' << r.graph << ',' << r.algo << ',' << r.n << ',' << r.m
      << ',' << r.iterations << ',' << (r.success ? 1 : 0) << ','
      << format_number(r.final_weight[0]) << ',';
  if (r.final_weight.dim() == 2) out << format_number(r.final_weight[1]);
  out << ',' << r.budget << ',' << format_number(r.wall_ms) << '\n';
}

}  // namespace momst
