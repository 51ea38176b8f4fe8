#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "qcodim/extreal.hpp"
#include "qcodim/rank_array.hpp"

namespace qcodim {

/// Finite, strictly increasing set of real index values.
class FiniteGrid {
public:
    FiniteGrid() = default;
    explicit FiniteGrid(std::vector<double> points);

    /// The grid {1, 2, ..., n}.
    static FiniteGrid integers(std::size_t n);

    const std::vector<double>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    double min() const { return points_.front(); }
    double max() const { return points_.back(); }

    bool contains(double x) const;
    /// 1-based position of a member, nullopt for non-members.
    std::optional<std::size_t> position(double x) const;
    std::optional<double> least_at_least(ExtReal x) const;
    std::optional<double> greatest_at_most(ExtReal x) const;
    bool exists_strictly_between(ExtReal x, ExtReal y) const;
    std::size_t count_in_closed(double lo, double hi) const;

    friend bool operator==(const FiniteGrid&, const FiniteGrid&) = default;

private:
    std::vector<double> points_;
};

/// Either all of R (dense) or a finite grid.
class IndexSet {
public:
    static IndexSet dense_real() { return IndexSet(); }
    static IndexSet finite(FiniteGrid grid) { return IndexSet(std::move(grid)); }

    bool is_dense() const { return !grid_.has_value(); }
    const FiniteGrid& grid() const;

    bool exists_strictly_between(ExtReal x, ExtReal y) const;
    bool contains(ExtReal x) const;

    friend bool operator==(const IndexSet&, const IndexSet&) = default;

private:
    IndexSet() = default;
    explicit IndexSet(FiniteGrid grid) : grid_(std::move(grid)) {}

    std::optional<FiniteGrid> grid_;
};

/// Interval with extended-real endpoints, birth <= death. Endpoint closure is
/// not recorded; restriction treats bars as closed.
struct Bar {
    Bar(ExtReal birth, ExtReal death);

    ExtReal birth;
    ExtReal death;

    bool is_pointbar() const { return birth == death && birth.is_finite(); }

    friend bool operator==(const Bar&, const Bar&) = default;
    friend auto operator<=>(const Bar&, const Bar&) = default;
};

struct BarEntry {
    Bar bar;
    std::int64_t multiplicity = 1;

    friend bool operator==(const BarEntry&, const BarEntry&) = default;
};

/// Finite multiset of bars over an index set.
///
/// Entries are kept sorted by (birth, death) with distinct bars; entries
/// passed to the constructor with equal bars are merged.
class Barcode {
public:
    explicit Barcode(IndexSet index_set, std::vector<BarEntry> entries = {});

    const IndexSet& index_set() const { return index_set_; }
    const std::vector<BarEntry>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    std::int64_t total_bars() const;

    friend bool operator==(const Barcode&, const Barcode&) = default;

private:
    IndexSet index_set_;
    std::vector<BarEntry> entries_;
};

enum class PairKind { NotInteracting, Interlaced, NonSeparated };

std::string_view to_string(PairKind kind);

PairKind classify_pair(const Bar& first, const Bar& second, const IndexSet& index_set);

/// Number of interacting pairs of bar instances.
std::int64_t qcodim(const Barcode& bc);

struct InteractingPair {
    std::size_t first;   // entry indices, first < second
    std::size_t second;
    PairKind kind;
    std::int64_t count;  // product of multiplicities
};

std::vector<InteractingPair> interacting_pairs(const Barcode& bc);

/// Sorted distinct finite endpoints.
std::vector<double> critical_points(const Barcode& bc);

/// Restriction of a barcode to a finite grid (bars snap inward; bars with no
/// grid point inside are dropped).
Barcode restrict_barcode(const Barcode& bc, const FiniteGrid& grid);

/// The image of one bar under restriction, nullopt when it does not restrict.
std::optional<Bar> restrict_bar(const Bar& bar, const FiniteGrid& grid);

/// r(i, j) = number of bars alive on [grid_i, grid_j]. Requires a grid barcode.
RankArray rank_array_from_barcode(const Barcode& bc);

}  // namespace qcodim
