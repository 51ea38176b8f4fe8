#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "qcodim/approx.hpp"
#include "qcodim/error.hpp"

using namespace qcodim;

namespace {

Barcode dense(std::vector<BarEntry> entries) { return Barcode(IndexSet::dense_real(), std::move(entries)); }

// Restriction by linear scan over the grid, on plain doubles.
std::optional<testing::RawBar> scan_restrict(testing::RawBar bar, const std::vector<double>& grid) {
    std::optional<double> lo, hi;
    for (double s : grid) {
        if (s >= bar.birth && !lo) lo = s;
        if (s <= bar.death) hi = s;
    }
    if (!lo || !hi || *lo > *hi) return std::nullopt;
    return testing::RawBar{*lo, *hi};
}

testing::RawBar raw(const Bar& b) { return {b.birth.value(), b.death.value()}; }

}  // namespace

TEST_CASE("grid_approximation examples") {
    CHECK(grid_approximation(dense({{Bar(0, 1), 1}}), 2).points() == std::vector<double>{0, 1.0 / 3, 2.0 / 3, 1});
    CHECK(grid_approximation(dense({{Bar(2, 2), 1}}), 3).points() == std::vector<double>{2, 3, 4});
    CHECK(grid_approximation(dense({{Bar(0, 1), 1}, {Bar(0.5, 2), 1}}), 2, 0.25).points() ==
          std::vector<double>{0, 0.25, 0.5, 0.75, 1, 1.25, 1.5, 1.75, 2});
    // the last point may overshoot the greatest critical point
    CHECK(grid_approximation(dense({{Bar(0, 1), 1}}), 2, 0.4).points() == std::vector<double>{0, 0.4, 0.8, 1.2000000000000002});
    // one extra step on each side with an infinite endpoint
    CHECK(grid_approximation(dense({{Bar(0, 1), 1}, {Bar(ExtReal::minus_inf(), 1), 1}}), 1).points() ==
          std::vector<double>{-0.5, 0, 0.5, 1});
    CHECK(grid_approximation(dense({{Bar(0, 1), 1}, {Bar(0, ExtReal::plus_inf()), 1}}), 1).points() ==
          std::vector<double>{0, 0.5, 1, 1.5});
}

TEST_CASE("grid_approximation rejects bad input") {
    CHECK_THROWS_AS(grid_approximation(Barcode(IndexSet::finite(FiniteGrid({0, 1})), {{Bar(0, 1), 1}}), 2),
                    InvariantError);
    CHECK_THROWS_AS(grid_approximation(dense({{Bar(0, 1), 1}}), 0), InvariantError);
    CHECK_THROWS_AS(grid_approximation(dense({}), 2), InvariantError);
    CHECK_THROWS_AS(grid_approximation(dense({{Bar(0, 1), 1}}), 2, 0.0), InvariantError);
    CHECK_THROWS_AS(grid_approximation(dense({{Bar(0, 1), 1}}), 2, -1.0), InvariantError);
    CHECK_THROWS_AS(grid_approximation(dense({{Bar(0, 1), 1}}), 2, 1e-12), InvariantError);
}

TEST_CASE("adjacent non-interacting bars need a separating grid point") {
    const auto bc = dense({{Bar(0, 1), 1}, {Bar(2, 3), 1}});
    const FiniteGrid grid({0, 1, 2, 3});
    const auto report = stability_check(bc, grid, 2);
    CHECK(report.cond_i());
    CHECK_FALSE(report.cond_ii());
    REQUIRE(report.cond_ii_violations.size() == 1);
    CHECK(report.cond_ii_violations[0].first == Bar(0, 1));
    CHECK(report.cond_ii_violations[0].second == Bar(2, 3));
    CHECK(report.cond_iii());
    CHECK(report.qcodim_original == 0);
    CHECK(report.qcodim_restricted == 1);
    CHECK_FALSE(report.stable());

    const auto fixed = stability_check(bc, FiniteGrid({0, 1, 1.5, 2, 3}), 2);
    CHECK(fixed.conditions_hold());
    CHECK(fixed.stable());
}

TEST_CASE("condition (iii) counts grid points in closed gaps") {
    const auto bc = dense({{Bar(0, 1), 1}, {Bar(0.5, 2), 1}});
    const auto thin = validate_h_approximation(bc, FiniteGrid({0, 0.5, 1, 2}), 3);
    REQUIRE(thin.cond_iii_violations.size() == 3);
    CHECK(thin.cond_iii_violations[2] == std::pair<double, double>{1, 2});
    CHECK(validate_h_approximation(bc, FiniteGrid({0, 0.5, 1, 2}), 2).cond_iii());
    const auto narrow = validate_h_approximation(bc, FiniteGrid({0.25, 0.5, 1, 2}), 2);
    CHECK(narrow.cond_i_violations == std::vector<double>{0});
}

TEST_CASE("an infinite bar needs a grid point past the last critical point") {
    // [0,2] and [1,inf) interlace; on a grid ending at 2 both restrictions die at 2.
    const auto bc = dense({{Bar(0, 2), 1}, {Bar(1, ExtReal::plus_inf()), 1}});
    const FiniteGrid flush({0, 1.0 / 3, 2.0 / 3, 1, 4.0 / 3, 5.0 / 3, 2});
    const auto report = stability_check(bc, flush, 2);
    CHECK(report.cond_i_violations == std::vector<double>{2});
    CHECK(report.cond_ii());
    CHECK(report.cond_iii());
    CHECK(report.qcodim_original == 1);
    CHECK(report.qcodim_restricted == 0);

    const auto grid = grid_approximation(bc, 2);
    CHECK(grid.max() > 2);
    const auto padded = stability_check(bc, grid, 2);
    CHECK(padded.conditions_hold());
    CHECK(padded.stable());

    // mirror image with an infinite birth
    const auto mirror = dense({{Bar(ExtReal::minus_inf(), 1), 1}, {Bar(0, 2), 1}});
    CHECK(qcodim::qcodim(mirror) == 1);
    CHECK(validate_h_approximation(mirror, FiniteGrid({0, 1, 2}), 1).cond_i_violations == std::vector<double>{0});
    CHECK(stability_check(mirror, grid_approximation(mirror, 2), 2).stable());
}

TEST_CASE("restriction properties on random barcodes") {
    std::mt19937_64 rng(6031);
    for (int trial = 0; trial < 300; ++trial) {
        const auto bc = testing::random_dense_barcode(
            rng, {.max_types = 8, .infinite_death_rate = 0.3, .infinite_birth_rate = 0.15, .pointbar_rate = 0.2});
        const int h = 2 + trial % 3;
        const auto grid = grid_approximation(bc, h);
        const auto report = validate_h_approximation(bc, grid, h);
        REQUIRE(report.conditions_hold());
        const auto& pts = grid.points();

        for (const auto& e : bc.entries()) {
            const auto got = restrict_bar(e.bar, grid);
            const auto want = scan_restrict(raw(e.bar), pts);
            REQUIRE(got.has_value() == want.has_value());
            if (e.bar.is_pointbar()) {
                // a pointbar survives exactly when it sits on the grid
                CHECK(got.has_value() == grid.contains(e.bar.birth.value()));
                continue;
            }
            // every proper bar survives, with b <= b' < d' <= d
            REQUIRE(got.has_value());
            CHECK(got->birth.value() == want->birth);
            CHECK(got->death.value() == want->death);
            CHECK(e.bar.birth <= got->birth);
            CHECK(got->birth < got->death);
            CHECK(got->death <= e.bar.death);
        }

        // pairs: interaction is preserved and never created
        const auto& es = bc.entries();
        for (std::size_t i = 0; i < es.size(); ++i) {
            for (std::size_t j = i; j < es.size(); ++j) {
                if (i == j && es[i].multiplicity == 1) continue;
                const bool before = testing::interact_literal(raw(es[i].bar), raw(es[j].bar), {});
                const auto ri = scan_restrict(raw(es[i].bar), pts);
                const auto rj = scan_restrict(raw(es[j].bar), pts);
                if (before) {
                    REQUIRE(ri.has_value());
                    REQUIRE(rj.has_value());
                    CHECK(testing::interact_literal(*ri, *rj, pts));
                } else if (ri && rj) {
                    CHECK_FALSE(testing::interact_literal(*ri, *rj, pts));
                }
            }
        }
    }
}

TEST_CASE("stability on random barcodes, h = 2..4") {
    std::mt19937_64 rng(1789);
    for (int trial = 0; trial < 300; ++trial) {
        const auto bc = testing::random_dense_barcode(
            rng, {.max_types = 12, .infinite_death_rate = 0.2, .infinite_birth_rate = 0.1, .pointbar_rate = 0.1});
        const int h = 2 + trial % 3;
        const auto grid = grid_approximation(bc, h);
        const auto report = stability_check(bc, grid, h);
        CHECK(report.conditions_hold());
        CHECK(report.qcodim_original == testing::brute_qcodim(bc));
        CHECK(report.qcodim_restricted == testing::brute_qcodim(restrict_barcode(bc, grid)));
        CHECK(report.stable());
    }
}

TEST_CASE("h = 1 grids are not guaranteed to preserve qcodim") {
    // Sparse grids that only pass with h = 1; outcomes are reported, not asserted.
    std::mt19937_64 rng(55);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    int valid = 0, unstable = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const auto bc = testing::random_dense_barcode(rng, {.max_types = 6});
        const auto z = critical_points(bc);
        std::vector<double> pts{z.front() - 0.01};
        for (int k = static_cast<int>(std::lround(z.front() * 100)); k <= std::lround(z.back() * 100); ++k)
            if (coin(rng) < 0.15) pts.push_back(k / 100.0);
        pts.push_back(z.back() + 0.01);
        const auto report = stability_check(bc, FiniteGrid(pts), 1);
        if (report.conditions_hold()) {
            ++valid;
            if (!report.stable()) ++unstable;
        }
    }
    MESSAGE("h = 1: " << valid << " of 300 sparse grids satisfy the conditions, " << unstable << " of those change qcodim");
}

TEST_CASE("stability on arbitrary grids that pass validation") {
    // Grids drawn as random subsets of the 0.005 lattice; whichever ones
    // validate with h >= 2 must preserve qcodim.
    std::mt19937_64 rng(314);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    int validated = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const auto bc = testing::random_dense_barcode(
            rng, {.max_types = 6, .infinite_death_rate = 0.3, .infinite_birth_rate = 0.2, .pointbar_rate = 0.2});
        const auto z = critical_points(bc);
        const double keep = 0.3 + 0.7 * coin(rng);
        std::vector<double> pts;
        for (int k = static_cast<int>(std::lround(z.front() * 200)) - 3; k <= std::lround(z.back() * 200) + 3; ++k)
            if (coin(rng) < keep) pts.push_back(k / 200.0);
        if (pts.empty()) continue;
        const FiniteGrid grid(pts);
        const int h = 2 + trial % 2;
        const auto report = stability_check(bc, grid, h);  // throws if a valid grid changes qcodim
        if (report.conditions_hold()) {
            ++validated;
            CHECK(report.qcodim_restricted == testing::brute_qcodim(restrict_barcode(bc, grid)));
            CHECK(report.stable());
        }
    }
    MESSAGE(validated << " of 400 random grids validated");
    CHECK(validated > 20);
}
