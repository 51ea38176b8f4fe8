#include "qcodim/barcode.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "qcodim/error.hpp"

namespace qcodim {

FiniteGrid::FiniteGrid(std::vector<double> points) : points_(std::move(points)) {
    if (points_.empty()) throw InvariantError("finite grid must have at least one point");
    for (std::size_t k = 0; k < points_.size(); ++k) {
        if (!std::isfinite(points_[k])) throw InvariantError("finite grid points must be finite");
        if (k > 0 && !(points_[k - 1] < points_[k]))
            throw InvariantError("finite grid points must be strictly increasing");
    }
}

FiniteGrid FiniteGrid::integers(std::size_t n) {
    std::vector<double> pts(n);
    std::iota(pts.begin(), pts.end(), 1.0);
    return FiniteGrid(std::move(pts));
}

bool FiniteGrid::contains(double x) const { return std::binary_search(points_.begin(), points_.end(), x); }

std::optional<std::size_t> FiniteGrid::position(double x) const {
    auto it = std::lower_bound(points_.begin(), points_.end(), x);
    if (it == points_.end() || *it != x) return std::nullopt;
    return static_cast<std::size_t>(it - points_.begin()) + 1;
}

std::optional<double> FiniteGrid::least_at_least(ExtReal x) const {
    auto it = std::lower_bound(points_.begin(), points_.end(), x.value());
    if (it == points_.end()) return std::nullopt;
    return *it;
}

std::optional<double> FiniteGrid::greatest_at_most(ExtReal x) const {
    auto it = std::upper_bound(points_.begin(), points_.end(), x.value());
    if (it == points_.begin()) return std::nullopt;
    return *std::prev(it);
}

bool FiniteGrid::exists_strictly_between(ExtReal x, ExtReal y) const {
    auto it = std::upper_bound(points_.begin(), points_.end(), x.value());
    return it != points_.end() && ExtReal(*it) < y;
}

std::size_t FiniteGrid::count_in_closed(double lo, double hi) const {
    if (hi < lo) return 0;
    auto first = std::lower_bound(points_.begin(), points_.end(), lo);
    auto last = std::upper_bound(points_.begin(), points_.end(), hi);
    return static_cast<std::size_t>(last - first);
}

const FiniteGrid& IndexSet::grid() const {
    if (!grid_) throw std::logic_error("index set is dense, not a finite grid");
    return *grid_;
}

bool IndexSet::exists_strictly_between(ExtReal x, ExtReal y) const {
    if (grid_) return grid_->exists_strictly_between(x, y);
    return x < y;
}

bool IndexSet::contains(ExtReal x) const {
    if (grid_) return x.is_finite() && grid_->contains(x.value());
    return true;
}

Bar::Bar(ExtReal b, ExtReal d) : birth(b), death(d) {
    if (birth.is_plus_inf()) throw InvariantError("bar birth cannot be +inf");
    if (death.is_minus_inf()) throw InvariantError("bar death cannot be -inf");
    if (death < birth) throw InvariantError("bar birth exceeds death");
}

Barcode::Barcode(IndexSet index_set, std::vector<BarEntry> entries) : index_set_(std::move(index_set)) {
    std::map<Bar, std::int64_t> merged;
    for (const auto& e : entries) {
        if (e.multiplicity < 1) throw InvariantError("bar multiplicity must be positive");
        if (!index_set_.is_dense()) {
            if (!index_set_.contains(e.bar.birth) || !index_set_.contains(e.bar.death)) {
                std::ostringstream msg;
                msg << "bar endpoint (" << e.bar.birth.value() << ", " << e.bar.death.value()
                    << ") is not a grid point";
                throw InvariantError(msg.str());
            }
        }
        merged[e.bar] += e.multiplicity;
    }
    entries_.reserve(merged.size());
    for (const auto& [bar, mult] : merged) entries_.push_back({bar, mult});
}

std::int64_t Barcode::total_bars() const {
    std::int64_t total = 0;
    for (const auto& e : entries_) total += e.multiplicity;
    return total;
}

std::string_view to_string(PairKind kind) {
    switch (kind) {
        case PairKind::NotInteracting: return "not-interacting";
        case PairKind::Interlaced: return "interlaced";
        case PairKind::NonSeparated: return "non-separated";
    }
    return "?";
}

PairKind classify_pair(const Bar& first, const Bar& second, const IndexSet& index_set) {
    const bool in_order = first <= second;
    const Bar& lo = in_order ? first : second;
    const Bar& hi = in_order ? second : first;
    const ExtReal b = lo.birth, d = lo.death, beta = hi.birth, delta = hi.death;
    if (b < beta && beta <= d && d < delta) return PairKind::Interlaced;
    if (d < beta && !index_set.exists_strictly_between(d, beta)) return PairKind::NonSeparated;
    return PairKind::NotInteracting;
}

std::int64_t qcodim(const Barcode& bc) {
    const auto& es = bc.entries();
    std::int64_t total = 0;
    for (std::size_t i = 0; i < es.size(); ++i) {
        for (std::size_t j = i + 1; j < es.size(); ++j) {
            if (classify_pair(es[i].bar, es[j].bar, bc.index_set()) != PairKind::NotInteracting)
                total += es[i].multiplicity * es[j].multiplicity;
        }
    }
    return total;
}

std::vector<InteractingPair> interacting_pairs(const Barcode& bc) {
    std::vector<InteractingPair> out;
    const auto& es = bc.entries();
    for (std::size_t i = 0; i < es.size(); ++i) {
        for (std::size_t j = i + 1; j < es.size(); ++j) {
            const auto kind = classify_pair(es[i].bar, es[j].bar, bc.index_set());
            if (kind != PairKind::NotInteracting)
                out.push_back({i, j, kind, es[i].multiplicity * es[j].multiplicity});
        }
    }
    return out;
}

std::vector<double> critical_points(const Barcode& bc) {
    std::set<double> pts;
    for (const auto& e : bc.entries()) {
        if (e.bar.birth.is_finite()) pts.insert(e.bar.birth.value());
        if (e.bar.death.is_finite()) pts.insert(e.bar.death.value());
    }
    return {pts.begin(), pts.end()};
}

std::optional<Bar> restrict_bar(const Bar& bar, const FiniteGrid& grid) {
    const auto b = grid.least_at_least(bar.birth);
    const auto d = grid.greatest_at_most(bar.death);
    if (!b || !d || *b > *d) return std::nullopt;
    return Bar(*b, *d);
}

Barcode restrict_barcode(const Barcode& bc, const FiniteGrid& grid) {
    std::vector<BarEntry> out;
    for (const auto& e : bc.entries()) {
        if (auto r = restrict_bar(e.bar, grid)) out.push_back({*r, e.multiplicity});
    }
    return Barcode(IndexSet::finite(grid), std::move(out));
}

RankArray rank_array_from_barcode(const Barcode& bc) {
    const auto& grid = bc.index_set().grid();
    const std::size_t n = grid.size();
    // Bar [bi, di] counts toward r(i, j) iff bi <= i and j <= di, so
    // r(i, j) = r(i - 1, j) + (bars born at i that die at j or later).
    std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> born_at(n + 1);
    for (const auto& e : bc.entries()) {
        const std::size_t bi = *grid.position(e.bar.birth.value());
        const std::size_t di = *grid.position(e.bar.death.value());
        born_at[bi].emplace_back(di, e.multiplicity);
    }
    RankArray ra(n);
    std::vector<std::int64_t> dying_from(n + 2);
    for (std::size_t i = 1; i <= n; ++i) {
        std::fill(dying_from.begin(), dying_from.end(), 0);
        for (const auto& [di, m] : born_at[i]) dying_from[di] += m;
        for (std::size_t j = n; j >= i; --j) dying_from[j] += dying_from[j + 1];
        for (std::size_t j = i; j <= n; ++j) ra.set(i, j, ra.at(i - 1, j) + dying_from[j]);
    }
    return ra;
}

}  // namespace qcodim
