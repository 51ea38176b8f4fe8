#pragma once

#include <cstdint>
#include <vector>

#include "qcodim/barcode.hpp"

namespace qcodim {
class PointCloud;
}

// Data-parallel inner loops. Each kernel has a serial reference and an
// OpenMP version; both produce identical results for identical input.
namespace qcodim::kernels {

/// Symmetric N x N Euclidean distance matrix, row-major.
std::vector<double> pairwise_distances_serial(const PointCloud& cloud);
std::vector<double> pairwise_distances_omp(const PointCloud& cloud);

/// Interacting-pair count. The serial version is qcodim() itself.
std::int64_t qcodim_serial(const Barcode& bc);
std::int64_t qcodim_omp(const Barcode& bc);

/// Maximum number of OpenMP threads, 1 when built without OpenMP.
int max_threads();

}  // namespace qcodim::kernels
