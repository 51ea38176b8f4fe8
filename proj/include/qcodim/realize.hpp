#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qcodim/barcode.hpp"
#include "qcodim/ph.hpp"

namespace qcodim {

/// Scales eps_0 .. eps_{c+1} for the rectangle chain X_c.
///
/// eps_0 = 1, eps_1 in (1, sqrt2), eps_2 in (eps_1, sqrt2) when c >= 1, and
/// eps_n in (sqrt2 eps_{n-3}, sqrt2 eps_{n-2}) for 3 <= n <= c + 1. Under
/// these constraints the 1-cycle of rectangle n - 1 is born at eps_n and
/// dies at sqrt2 eps_{n-1}, overlapping only its neighbours.
class EpsilonSeq {
public:
    /// Throws InvariantError when the constraints fail.
    explicit EpsilonSeq(std::vector<double> eps);

    /// Midpoint of each admissible open interval.
    static EpsilonSeq midpoints(std::size_t c);

    std::size_t c() const { return eps_.size() - 2; }
    const std::vector<double>& values() const { return eps_; }
    double operator[](std::size_t n) const { return eps_[n]; }

    /// Empty when valid, otherwise the first failed constraint.
    static std::string violation(const std::vector<double>& eps);

private:
    std::vector<double> eps_;
};

PointCloud xc_point_cloud(const EpsilonSeq& seq);
std::vector<std::vector<double>> xc_points(const EpsilonSeq& seq);

/// {[eps_{i+1}, sqrt2 eps_i) : 0 <= i <= c}.
Barcode expected_xc_barcode(const EpsilonSeq& seq);

/// Heights along the sawtooth path A_{-1} B_{-1} A_0 B_0 ... A_c B_c.
std::vector<double> sawtooth_values(std::size_t c);

/// {[-1, inf), [0, 1), ..., [c, c + 1)}.
Barcode expected_sawtooth_barcode(std::size_t c);

}  // namespace qcodim
