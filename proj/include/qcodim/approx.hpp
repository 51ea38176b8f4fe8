#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qcodim/barcode.hpp"

namespace qcodim {

/// Outcome of checking a finite grid against the h-approximation conditions,
/// and optionally of restricting the barcode to it.
///
/// Each condition holds iff its violation list is empty:
///  (i)   the grid brackets the critical points. The bracket is strict on the
///        side of an infinite endpoint, otherwise the restricted infinite bar
///        would share its endpoint with a finite one.
///  (ii)  a grid point separates every adjacent death/birth pair of
///        non-interacting bars.
///  (iii) every closed gap [z_i, z_{i+1}] between critical points holds at
///        least h grid points.
struct ApproxReport {
    FiniteGrid grid;
    int h = 0;
    std::vector<double> critical;

    std::vector<double> cond_i_violations;
    std::vector<std::pair<Bar, Bar>> cond_ii_violations;
    std::vector<std::pair<double, double>> cond_iii_violations;

    std::optional<std::int64_t> qcodim_original;
    std::optional<std::int64_t> qcodim_restricted;

    bool cond_i() const { return cond_i_violations.empty(); }
    bool cond_ii() const { return cond_ii_violations.empty(); }
    bool cond_iii() const { return cond_iii_violations.empty(); }
    bool conditions_hold() const { return cond_i() && cond_ii() && cond_iii(); }
    bool stable() const {
        return qcodim_original && qcodim_restricted && *qcodim_original == *qcodim_restricted;
    }
};

/// Equally spaced grid from the least to (at least) the greatest critical
/// point. Default spacing is (min critical gap) / (h + 1). On a side where a
/// bar is infinite, steps are added until two grid points lie at or beyond the
/// extreme critical point.
FiniteGrid grid_approximation(const Barcode& bc, int h, std::optional<double> delta = std::nullopt);

ApproxReport validate_h_approximation(const Barcode& bc, const FiniteGrid& grid, int h);

/// validate_h_approximation plus qcodim before and after restriction. On grids
/// of up to 4096 points the restricted count is also checked against the rank
/// formula.
/// Throws InternalError if the conditions hold with h >= 2 but qcodim changed.
ApproxReport stability_check(const Barcode& bc, const FiniteGrid& grid, int h);

}  // namespace qcodim
