#include "qcodim/approx.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qcodim/error.hpp"

namespace qcodim {

namespace {

constexpr std::size_t kMaxGridPoints = 10'000'000;
constexpr std::size_t kMaxCrossCheckGrid = 4096;

void require_dense(const Barcode& bc) {
    if (!bc.index_set().is_dense()) throw InvariantError("h-approximation needs a barcode over the reals");
}

bool has_minus_inf_birth(const Barcode& bc) {
    return std::any_of(bc.entries().begin(), bc.entries().end(),
                       [](const BarEntry& e) { return e.bar.birth.is_minus_inf(); });
}

bool has_plus_inf_death(const Barcode& bc) {
    return std::any_of(bc.entries().begin(), bc.entries().end(),
                       [](const BarEntry& e) { return e.bar.death.is_plus_inf(); });
}

}  // namespace

FiniteGrid grid_approximation(const Barcode& bc, int h, std::optional<double> delta) {
    require_dense(bc);
    if (h < 1) throw InvariantError("h must be at least 1");
    const auto z = critical_points(bc);
    if (z.empty()) throw InvariantError("barcode has no finite critical points");
    if (delta && !(*delta > 0.0 && std::isfinite(*delta))) throw InvariantError("delta must be positive");

    std::vector<double> pts;
    double step = 1.0;
    if (z.size() == 1) {
        // Degenerate: conditions are vacuous, pad with h - 1 unit steps.
        for (int k = 0; k < h; ++k) pts.push_back(z.front() + k);
    } else {
        double eps = z[1] - z[0];
        for (std::size_t k = 2; k < z.size(); ++k) eps = std::min(eps, z[k] - z[k - 1]);
        step = delta.value_or(eps / (h + 1));
        const double lo = z.front(), hi = z.back();
        const double span = (hi - lo) / step;
        if (!(span < static_cast<double>(kMaxGridPoints))) throw InvariantError("grid spacing too fine");
        auto n = static_cast<std::size_t>(std::ceil(span));
        while (lo + static_cast<double>(n) * step < hi) ++n;
        while (n > 0 && lo + static_cast<double>(n - 1) * step >= hi) --n;
        for (std::size_t k = 0; k <= n; ++k) pts.push_back(lo + static_cast<double>(k) * step);
    }
    // An infinite bar starting at an extreme critical point should restrict to
    // a proper bar, so keep two grid points on its side of that point.
    if (has_minus_inf_birth(bc)) {
        while (std::count_if(pts.begin(), pts.end(), [&](double s) { return s <= z.front(); }) < 2)
            pts.insert(pts.begin(), pts.front() - step);
    }
    if (has_plus_inf_death(bc)) {
        while (std::count_if(pts.begin(), pts.end(), [&](double s) { return s >= z.back(); }) < 2)
            pts.push_back(pts.back() + step);
    }
    return FiniteGrid(std::move(pts));
}

ApproxReport validate_h_approximation(const Barcode& bc, const FiniteGrid& grid, int h) {
    require_dense(bc);
    ApproxReport report;
    report.grid = grid;
    report.h = h;
    report.critical = critical_points(bc);
    const auto& z = report.critical;
    if (z.empty()) return report;

    const bool strict_low = has_minus_inf_birth(bc);
    const bool strict_high = has_plus_inf_death(bc);
    if (strict_low ? !(grid.min() < z.front()) : !(grid.min() <= z.front()))
        report.cond_i_violations.push_back(z.front());
    if (strict_high ? !(grid.max() > z.back()) : !(grid.max() >= z.back()))
        report.cond_i_violations.push_back(z.back());

    // Adjacent critical values z_i < z_{i+1} pair a death with a birth.
    auto next_critical = [&z](double v) -> std::optional<double> {
        auto it = std::upper_bound(z.begin(), z.end(), v);
        if (it == z.end()) return std::nullopt;
        return *it;
    };
    const auto& es = bc.entries();
    for (std::size_t i = 0; i < es.size(); ++i) {
        for (std::size_t j = 0; j < es.size(); ++j) {
            if (i == j) continue;
            const Bar& left = es[i].bar;
            const Bar& right = es[j].bar;
            if (!left.death.is_finite() || !right.birth.is_finite()) continue;
            const auto succ = next_critical(left.death.value());
            if (!succ || *succ != right.birth.value()) continue;
            if (classify_pair(left, right, bc.index_set()) != PairKind::NotInteracting) continue;
            if (!grid.exists_strictly_between(left.death, right.birth))
                report.cond_ii_violations.emplace_back(left, right);
        }
    }

    for (std::size_t k = 0; k + 1 < z.size(); ++k) {
        if (grid.count_in_closed(z[k], z[k + 1]) < static_cast<std::size_t>(std::max(h, 0)))
            report.cond_iii_violations.emplace_back(z[k], z[k + 1]);
    }
    return report;
}

ApproxReport stability_check(const Barcode& bc, const FiniteGrid& grid, int h) {
    auto report = validate_h_approximation(bc, grid, h);
    const auto restricted = restrict_barcode(bc, grid);
    report.qcodim_original = qcodim(bc);
    report.qcodim_restricted = qcodim(restricted);

    // The rank array is quadratic in the grid size; only cross-check on grids
    // small enough to hold it.
    if (grid.size() <= kMaxCrossCheckGrid) {
        const auto by_ranks = codim_rank_formula(rank_array_from_barcode(restricted));
        if (by_ranks != *report.qcodim_restricted) {
            std::ostringstream msg;
            msg << "restricted barcode: rank formula gives " << by_ranks << ", interacting pairs give "
                << *report.qcodim_restricted;
            throw InternalError(msg.str());
        }
    }
    if (h >= 2 && report.conditions_hold() && !report.stable()) {
        std::ostringstream msg;
        msg << "stability violated under a valid " << h << "-approximation: qcodim " << *report.qcodim_original
            << " became " << *report.qcodim_restricted;
        throw InternalError(msg.str());
    }
    return report;
}

}  // namespace qcodim
