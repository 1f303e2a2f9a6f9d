#include "heatdens/csv.hpp"

#include <charconv>

namespace heatdens {

std::string format_number(double v) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

void write_metadata(std::ostream& os, const Metadata& meta) {
  for (const auto& [k, v] : meta) os << "# " << k << ": " << v << "\n";
}

void write_density_csv(std::ostream& os, const DensityCurve& curve, const Metadata& extra) {
  Metadata meta = extra;
  meta.emplace_back("x", format_number(curve.x));
  meta.emplace_back("t", format_number(curve.t));
  meta.emplace_back("N", std::to_string(curve.N));
  meta.emplace_back("estimator", to_string(curve.estimator));
  if (curve.estimator == Estimator::ExpectationMC) {
    meta.emplace_back("samples", std::to_string(curve.samples));
    meta.emplace_back("estimator_seed", std::to_string(curve.seed));
  }
  meta.emplace_back("normalization", format_number(curve.mass()));
  for (const auto& n : curve.notes) meta.emplace_back("note", n);
  write_metadata(os, meta);
  os << "u,f,std_err\n";
  for (std::size_t i = 0; i < curve.grid.size(); ++i) {
    os << format_number(curve.grid[i]) << "," << format_number(curve.values[i]) << ",";
    if (curve.std_err) os << format_number((*curve.std_err)[i]);
    os << "\n";
  }
}

}  // namespace heatdens
