#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "qcodim/barcode.hpp"
#include "qcodim/error.hpp"

using namespace qcodim;

namespace {

const IndexSet kReal = IndexSet::dense_real();

Barcode dense(std::vector<BarEntry> entries) { return Barcode(IndexSet::dense_real(), std::move(entries)); }

Barcode a4_barcode() {
    return Barcode(IndexSet::finite(FiniteGrid::integers(4)),
                   {{Bar(1, 3), 2}, {Bar(1, 4), 1}, {Bar(3, 4), 1}});
}

Barcode sawtooth2() {
    return dense({{Bar(-1, ExtReal::plus_inf()), 1}, {Bar(0, 1), 1}, {Bar(1, 2), 1}, {Bar(2, 3), 1}});
}

}  // namespace

TEST_CASE("extended reals are totally ordered") {
    CHECK(ExtReal::minus_inf() < ExtReal(-1e300));
    CHECK(ExtReal(1e300) < ExtReal::plus_inf());
    CHECK(ExtReal(2.5) == ExtReal(2.5));
    CHECK_THROWS_AS(ExtReal(std::nan("")), InvariantError);
}

TEST_CASE("bar invariants") {
    CHECK_THROWS_AS(Bar(2, 1), InvariantError);
    CHECK_THROWS_AS(Bar(ExtReal::plus_inf(), ExtReal::plus_inf()), InvariantError);
    CHECK_THROWS_AS(Bar(ExtReal::minus_inf(), ExtReal::minus_inf()), InvariantError);
    CHECK(Bar(0.5, 0.5).is_pointbar());
    CHECK_FALSE(Bar(0.5, 1).is_pointbar());
}

TEST_CASE("finite grid rejects unsorted, empty and non-finite points") {
    CHECK_THROWS_AS(FiniteGrid(std::vector<double>{}), InvariantError);
    CHECK_THROWS_AS(FiniteGrid({0, 2, 1}), InvariantError);
    CHECK_THROWS_AS(FiniteGrid({0, 0}), InvariantError);
    CHECK_THROWS_AS(FiniteGrid({0, INFINITY}), InvariantError);
}

TEST_CASE("grid barcodes need grid endpoints; equal bars merge") {
    CHECK_THROWS_AS(Barcode(IndexSet::finite(FiniteGrid({0, 1, 2})), {{Bar(0, 1.5), 1}}), InvariantError);
    CHECK_THROWS_AS(Barcode(IndexSet::finite(FiniteGrid({0, 1})), {{Bar(0, ExtReal::plus_inf()), 1}}),
                    InvariantError);
    CHECK_THROWS_AS(dense({{Bar(0, 1), 0}}), InvariantError);
    const auto bc = dense({{Bar(1, 2), 1}, {Bar(0, 1), 2}, {Bar(1, 2), 3}});
    REQUIRE(bc.entries().size() == 2);
    CHECK(bc.entries()[0].bar == Bar(0, 1));
    CHECK(bc.entries()[1].multiplicity == 4);
    CHECK(bc.total_bars() == 6);
}

TEST_CASE("exists_strictly_between") {
    CHECK(kReal.exists_strictly_between(1, 2));
    CHECK(kReal.exists_strictly_between(1, ExtReal::plus_inf()));
    CHECK(kReal.exists_strictly_between(ExtReal::minus_inf(), 1));
    CHECK_FALSE(kReal.exists_strictly_between(1, 1));
    const auto grid = IndexSet::finite(FiniteGrid({0, 1, 2, 3}));
    CHECK_FALSE(grid.exists_strictly_between(1, 2));
    CHECK(grid.exists_strictly_between(0.5, 2));
    CHECK(grid.exists_strictly_between(0, 2));
    CHECK_FALSE(grid.exists_strictly_between(3, ExtReal::plus_inf()));
}

TEST_CASE("classify_pair examples") {
    CHECK(classify_pair(Bar(1, 3), Bar(3, 4), kReal) == PairKind::Interlaced);
    CHECK(classify_pair(Bar(0, 1), Bar(2, 3), IndexSet::finite(FiniteGrid({0, 1, 2, 3}))) ==
          PairKind::NonSeparated);
    CHECK(classify_pair(Bar(0, 1), Bar(2, 3), kReal) == PairKind::NotInteracting);
    CHECK(classify_pair(Bar(0.5, 0.5), Bar(0.5, 0.5), kReal) == PairKind::NotInteracting);
    // nested bars and shared births never interact
    CHECK(classify_pair(Bar(0, 4), Bar(1, 2), kReal) == PairKind::NotInteracting);
    CHECK(classify_pair(Bar(0, 4), Bar(0, 2), kReal) == PairKind::NotInteracting);
    CHECK(classify_pair(Bar(0, 2), Bar(1, 2), kReal) == PairKind::NotInteracting);
    // the infinite sawtooth bar interacts with nothing
    CHECK(classify_pair(Bar(-1, ExtReal::plus_inf()), Bar(0, 1), kReal) == PairKind::NotInteracting);
    CHECK(classify_pair(Bar(0, 2), Bar(1, ExtReal::plus_inf()), kReal) == PairKind::Interlaced);
}

TEST_CASE("qcodim examples") {
    CHECK(qcodim::qcodim(a4_barcode()) == 2);
    CHECK(qcodim::qcodim(dense({})) == 0);
    CHECK(qcodim::qcodim(sawtooth2()) == 2);

    const auto stacked = dense({{Bar(0, 2), 3}, {Bar(1, 3), 2}});
    CHECK(testing::brute_qcodim(stacked) == 6);
    CHECK(qcodim::qcodim(stacked) == 6);

    const auto pairs = interacting_pairs(a4_barcode());
    REQUIRE(pairs.size() == 1);
    CHECK(pairs[0].kind == PairKind::Interlaced);
    CHECK(pairs[0].count == 2);
}

TEST_CASE("critical points") {
    CHECK(critical_points(dense({{Bar(-1, ExtReal::plus_inf()), 1}, {Bar(0, 1), 1}, {Bar(1, 2), 1}})) ==
          std::vector<double>{-1, 0, 1, 2});
    CHECK(critical_points(dense({})).empty());
    CHECK(critical_points(dense({{Bar(0.5, 0.5), 1}})) == std::vector<double>{0.5});
}

TEST_CASE("restriction to a grid") {
    const FiniteGrid grid({0, 1, 2, 3});
    CHECK(restrict_bar(Bar(1.0, 2.5), grid) == Bar(1, 2));
    CHECK_FALSE(restrict_bar(Bar(1.1, 1.4), grid).has_value());
    CHECK(restrict_bar(Bar(ExtReal::minus_inf(), 1.5), grid) == Bar(0, 1));
    CHECK(restrict_bar(Bar(2, ExtReal::plus_inf()), grid) == Bar(2, 3));
    CHECK_FALSE(restrict_bar(Bar(3.5, 4), grid).has_value());
    // closed bars: endpoints on the grid are kept
    CHECK(restrict_bar(Bar(1, 2), grid) == Bar(1, 2));

    const FiniteGrid halves({-1, -0.5, 0, 0.5, 1, 1.5, 2, 2.5, 3});
    const auto restricted = restrict_barcode(sawtooth2(), halves);
    const Barcode expected(IndexSet::finite(halves),
                           {{Bar(-1, 3), 1}, {Bar(0, 1), 1}, {Bar(1, 2), 1}, {Bar(2, 3), 1}});
    CHECK(restricted == expected);
    CHECK(qcodim::qcodim(restricted) == 2);

    // coinciding images add their multiplicities
    const auto merged = restrict_barcode(dense({{Bar(0.9, 2.1), 1}, {Bar(1, 2), 2}}), grid);
    REQUIRE(merged.entries().size() == 1);
    CHECK(merged.entries()[0].multiplicity == 3);
}

TEST_CASE("rank array from barcode") {
    const auto ra = rank_array_from_barcode(a4_barcode());
    const std::int64_t expected[4][4] = {{3, 3, 3, 1}, {0, 3, 3, 1}, {0, 0, 4, 2}, {0, 0, 0, 2}};
    for (std::size_t i = 1; i <= 4; ++i)
        for (std::size_t j = i; j <= 4; ++j) CHECK(ra.at(i, j) == expected[i - 1][j - 1]);

    const auto single = rank_array_from_barcode(Barcode(IndexSet::finite(FiniteGrid::integers(5)), {{Bar(1, 5), 1}}));
    for (std::size_t i = 1; i <= 5; ++i)
        for (std::size_t j = i; j <= 5; ++j) CHECK(single.at(i, j) == 1);

    const auto empty = rank_array_from_barcode(Barcode(IndexSet::finite(FiniteGrid::integers(3))));
    for (std::size_t i = 1; i <= 3; ++i)
        for (std::size_t j = i; j <= 3; ++j) CHECK(empty.at(i, j) == 0);

    CHECK_THROWS(rank_array_from_barcode(dense({})));  // needs a grid
}

TEST_CASE("classify_pair properties on random bars") {
    std::mt19937_64 rng(20261015);
    std::uniform_int_distribution<int> pt(0, 8);
    std::uniform_int_distribution<int> pick(0, 9);
    const auto grid = IndexSet::finite(FiniteGrid({0, 1, 2, 3, 4, 5, 6, 7, 8}));
    const auto sparse = IndexSet::finite(FiniteGrid({0, 2, 3, 7, 8}));
    auto random_bar = [&](bool on_sparse) {
        const std::vector<double> sp{0, 2, 3, 7, 8};
        double a = on_sparse ? sp[pt(rng) % 5] : pt(rng);
        double b = on_sparse ? sp[pt(rng) % 5] : pt(rng);
        if (a > b) std::swap(a, b);
        ExtReal death = b;
        if (pick(rng) == 0) death = ExtReal::plus_inf();
        ExtReal birth = a;
        if (pick(rng) == 0) birth = ExtReal::minus_inf();
        return Bar(birth, death);
    };
    for (int trial = 0; trial < 3000; ++trial) {
        const bool on_sparse = trial % 2 == 1;
        const Bar x = random_bar(on_sparse), y = random_bar(on_sparse);
        const auto& s = on_sparse ? sparse : grid;
        for (const auto* is : {&kReal, &s}) {
            const auto k = classify_pair(x, y, *is);
            CHECK(k == classify_pair(y, x, *is));
            if (x.is_pointbar() || y.is_pointbar()) CHECK(k != PairKind::Interlaced);
            const std::vector<double> pts = is->is_dense() ? std::vector<double>{} : is->grid().points();
            CHECK((k != PairKind::NotInteracting) ==
                  testing::interact_literal({x.birth.value(), x.death.value()}, {y.birth.value(), y.death.value()}, pts));
        }
        CHECK(classify_pair(x, y, kReal) != PairKind::NonSeparated);
    }
}

TEST_CASE("qcodim over the reals depends only on endpoint order") {
    std::mt19937_64 rng(7);
    auto warp = [](double x) { return std::isfinite(x) ? x * x * x + 3.0 * x - 11.0 : x; };
    for (int trial = 0; trial < 300; ++trial) {
        const auto bc = testing::random_dense_barcode(rng, {.max_types = 10, .infinite_death_rate = 0.3,
                                                            .infinite_birth_rate = 0.2, .pointbar_rate = 0.15});
        std::vector<BarEntry> warped;
        for (const auto& e : bc.entries())
            warped.push_back({Bar(warp(e.bar.birth.value()), warp(e.bar.death.value())), e.multiplicity});
        const auto q = qcodim::qcodim(bc);
        CHECK(q == qcodim::qcodim(dense(warped)));
        CHECK(q == testing::brute_qcodim(bc));
    }
}
