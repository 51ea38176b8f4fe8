#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace qcodim {

/// Triangular array of persistent Betti numbers r(i, j), 1 <= i <= j <= n.
///
/// Indices are 1-based to match the usual rank-array layout. Out-of-range
/// reads with i == 0 or j == n + 1 return 0 (the inclusion-exclusion
/// boundary convention); everything else out of range is a logic error.
class RankArray {
public:
    RankArray() = default;
    explicit RankArray(std::size_t n) : n_(n), r_(n * (n + 1) / 2, 0) {}

    std::size_t size() const { return n_; }

    std::int64_t at(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, std::int64_t value);

    /// m(i, j) = r(i,j) - r(i-1,j) - r(i,j+1) + r(i-1,j+1): number of bars [i, j].
    std::int64_t multiplicity(std::size_t i, std::size_t j) const;

    /// Empty string when both invariants hold, otherwise a description of
    /// the first violation found (diagonal monotonicity, then m(i,j) >= 0).
    std::string violation() const;

    friend bool operator==(const RankArray&, const RankArray&) = default;

private:
    std::size_t offset(std::size_t i, std::size_t j) const;

    std::size_t n_ = 0;
    std::vector<std::int64_t> r_;
};

/// Classical codimension: sum over i < j of (r(i,j-1) - r(i,j)) * (r(i+1,j) - r(i,j)).
std::int64_t codim_rank_formula(const RankArray& ra);

}  // namespace qcodim
