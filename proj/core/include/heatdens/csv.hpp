#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "heatdens/density.hpp"

namespace heatdens {

using Metadata = std::vector<std::pair<std::string, std::string>>;

/// Shortest decimal string that round-trips to the same double.
std::string format_number(double v);

/// One `# key: value` line per entry.
void write_metadata(std::ostream& os, const Metadata& meta);

/// `u,f,std_err` rows preceded by the curve's metadata and `extra`.
/// std_err is empty for quadrature curves.
void write_density_csv(std::ostream& os, const DensityCurve& curve, const Metadata& extra = {});

}  // namespace heatdens
