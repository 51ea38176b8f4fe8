#include "qcodim/realize.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "qcodim/error.hpp"

namespace qcodim {

namespace {

const double kSqrt2 = std::sqrt(2.0);

// Open interval admissible for eps_n given eps_0 .. eps_{n-1}.
std::pair<double, double> admissible(const std::vector<double>& eps, std::size_t n) {
    if (n == 1) return {eps[0], kSqrt2 * eps[0]};
    if (n == 2) return {eps[1], kSqrt2 * eps[0]};
    return {kSqrt2 * eps[n - 3], kSqrt2 * eps[n - 2]};
}

}  // namespace

std::string EpsilonSeq::violation(const std::vector<double>& eps) {
    std::ostringstream msg;
    if (eps.size() < 2) return "need at least eps_0 and eps_1";
    if (eps[0] != 1.0) return "eps_0 must equal 1";
    for (std::size_t n = 1; n < eps.size(); ++n) {
        const auto [lo, hi] = admissible(eps, n);
        if (!(lo < eps[n] && eps[n] < hi)) {
            msg << "eps_" << n << " = " << eps[n] << " outside (" << lo << ", " << hi << ")";
            return msg.str();
        }
        if (!(eps[n - 1] < eps[n])) {
            msg << "eps_" << n << " does not exceed eps_" << n - 1;
            return msg.str();
        }
    }
    return {};
}

EpsilonSeq::EpsilonSeq(std::vector<double> eps) : eps_(std::move(eps)) {
    if (auto why = violation(eps_); !why.empty()) throw InvariantError("invalid epsilon sequence: " + why);
}

EpsilonSeq EpsilonSeq::midpoints(std::size_t c) {
    std::vector<double> eps{1.0};
    for (std::size_t n = 1; n <= c + 1; ++n) {
        const auto [lo, hi] = admissible(eps, n);
        eps.push_back((lo + hi) / 2.0);
    }
    return EpsilonSeq(std::move(eps));
}

std::vector<std::vector<double>> xc_points(const EpsilonSeq& seq) {
    std::vector<std::vector<double>> pts{{0.0, 0.0}, {0.0, 2.0}, {2.0, 0.0}, {2.0, 2.0 * seq[1]}};
    // Rectangle n - 1 spans x in [2 sum_{i<n-1} eps_i, 2 sum_{i<n} eps_i].
    double x = 2.0 * seq[0];
    for (std::size_t n = 2; n <= seq.c() + 1; ++n) {
        x += 2.0 * seq[n - 1];
        pts.push_back({x, 0.0});
        pts.push_back({x, 2.0 * seq[n]});
    }
    return pts;
}

PointCloud xc_point_cloud(const EpsilonSeq& seq) { return PointCloud(xc_points(seq)); }

Barcode expected_xc_barcode(const EpsilonSeq& seq) {
    std::vector<BarEntry> bars;
    for (std::size_t i = 0; i <= seq.c(); ++i) bars.push_back({Bar(seq[i + 1], kSqrt2 * seq[i]), 1});
    return Barcode(IndexSet::dense_real(), std::move(bars));
}

std::vector<double> sawtooth_values(std::size_t c) {
    std::vector<double> values;
    for (long i = -1; i <= static_cast<long>(c); ++i) {
        values.push_back(static_cast<double>(i));
        values.push_back(static_cast<double>(i + 2));
    }
    return values;
}

Barcode expected_sawtooth_barcode(std::size_t c) {
    std::vector<BarEntry> bars{{Bar(-1.0, ExtReal::plus_inf()), 1}};
    for (std::size_t k = 0; k <= c; ++k)
        bars.push_back({Bar(static_cast<double>(k), static_cast<double>(k + 1)), 1});
    return Barcode(IndexSet::dense_real(), std::move(bars));
}

}  // namespace qcodim
