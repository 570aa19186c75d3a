#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "srtrace/complex.hpp"

namespace srtrace {

/// Names accepted by builtin(): octa, cycle4, rp2_6, torus_csaszar,
/// path<n> (n >= 2 vertices) and sphere_<d> (boundary of the (d+1)-simplex,
/// 0 <= d <= 10).
std::vector<std::string> builtin_names();

/// Throws UnknownBuiltin.
SimplicialComplex builtin(std::string_view name);

SimplicialComplex path_complex(std::size_t vertices);
SimplicialComplex cycle_complex(std::size_t vertices);
SimplicialComplex simplex_boundary(int dim);

}  // namespace srtrace
