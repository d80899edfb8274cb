// Slow reference for minimal resolutions of simples, written without the
// engine's graded table or incremental kernel bookkeeping.
#pragma once

#include <vector>

#include "koszuldual/presentation.hpp"

namespace oracle {

using koszuldual::QuadraticPresentation;

/// dim A_d for d = 0..max_degree, from all paths and the full two-sided ideal.
std::vector<int> naive_dims(const QuadraticPresentation& a, int max_degree);

/// betti[s][d][j]: generators of vertex j and internal degree d in step s of a
/// minimal graded projective resolution of the simple right module at vertex
/// `simple`, for s <= max_step and d <= max_degree. Each syzygy is handled as a
/// whole subspace and its generators counted as dim(Omega) - dim(Omega * rad).
std::vector<std::vector<std::vector<int>>> brute_betti(const QuadraticPresentation& a, int simple, int max_step,
                                                       int max_degree);

}  // namespace oracle
