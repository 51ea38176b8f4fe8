#include "qcodim/kernels.hpp"

#include <cmath>

#include "qcodim/ph.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qcodim::kernels {

namespace {

double distance(const PointCloud& cloud, std::size_t a, std::size_t b) {
    const double* pa = cloud.point(a);
    const double* pb = cloud.point(b);
    double sum = 0.0;
    for (std::size_t k = 0; k < cloud.dimension(); ++k) {
        const double diff = pa[k] - pb[k];
        sum += diff * diff;
    }
    return std::sqrt(sum);
}

}  // namespace

std::vector<double> pairwise_distances_serial(const PointCloud& cloud) {
    const std::size_t n = cloud.size();
    std::vector<double> out(n * n, 0.0);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            const double d = distance(cloud, a, b);
            out[a * n + b] = d;
            out[b * n + a] = d;
        }
    }
    return out;
}

std::vector<double> pairwise_distances_omp(const PointCloud& cloud) {
    const auto n = static_cast<std::int64_t>(cloud.size());
    std::vector<double> out(cloud.size() * cloud.size(), 0.0);
    // Row a writes out[a][b] and out[b][a] for b > a; no two rows touch the same cell.
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t a = 0; a < n; ++a) {
        for (std::int64_t b = a + 1; b < n; ++b) {
            const double d = distance(cloud, static_cast<std::size_t>(a), static_cast<std::size_t>(b));
            out[static_cast<std::size_t>(a * n + b)] = d;
            out[static_cast<std::size_t>(b * n + a)] = d;
        }
    }
    return out;
}

std::int64_t qcodim_serial(const Barcode& bc) { return qcodim(bc); }

std::int64_t qcodim_omp(const Barcode& bc) {
    const auto& es = bc.entries();
    const auto& index_set = bc.index_set();
    const auto n = static_cast<std::int64_t>(es.size());
    std::int64_t total = 0;
#pragma omp parallel for schedule(dynamic, 32) reduction(+ : total)
    for (std::int64_t i = 0; i < n; ++i) {
        const auto& a = es[static_cast<std::size_t>(i)];
        for (std::int64_t j = i + 1; j < n; ++j) {
            const auto& b = es[static_cast<std::size_t>(j)];
            if (classify_pair(a.bar, b.bar, index_set) != PairKind::NotInteracting)
                total += a.multiplicity * b.multiplicity;
        }
    }
    return total;
}

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace qcodim::kernels
