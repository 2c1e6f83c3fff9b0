#pragma once

#include <optional>
#include <vector>

#include "dmod/scalar.hpp"

namespace dmod {

// Dense exact matrix, row-major.
using ScalarMatrix = std::vector<std::vector<Scalar>>;

/// Solves matrix * x = rhs by Gauss-Jordan elimination over Q(i).
/// Returns one solution (free variables set to zero) or nullopt when the
/// system is inconsistent.
std::optional<std::vector<Scalar>> solve_exact(ScalarMatrix matrix, std::vector<Scalar> rhs);

}  // namespace dmod
