#include "qcodim/rank_array.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qcodim {

std::size_t RankArray::offset(std::size_t i, std::size_t j) const {
    if (i < 1 || i > j || j > n_) throw std::out_of_range("RankArray index out of range");
    // Row-major over i, each row holding j = i..n.
    const std::size_t row_start = (i - 1) * (n_ + 1) - (i - 1) * i / 2;
    return row_start + (j - i);
}

std::int64_t RankArray::at(std::size_t i, std::size_t j) const {
    if (i == 0 || j == n_ + 1) return 0;
    return r_[offset(i, j)];
}

void RankArray::set(std::size_t i, std::size_t j, std::int64_t value) { r_[offset(i, j)] = value; }

std::int64_t RankArray::multiplicity(std::size_t i, std::size_t j) const {
    return at(i, j) - at(i - 1, j) - at(i, j + 1) + at(i - 1, j + 1);
}

std::string RankArray::violation() const {
    std::ostringstream out;
    for (std::size_t i = 1; i <= n_; ++i) {
        if (at(i, i) < 0) {
            out << "negative dimension r(" << i << "," << i << ") = " << at(i, i);
            return out.str();
        }
    }
    for (std::size_t i = 1; i <= n_; ++i) {
        for (std::size_t j = i + 1; j <= n_; ++j) {
            const auto bound = std::min(at(i, j - 1), at(i + 1, j));
            if (at(i, j) > bound) {
                out << "diagonal monotonicity: r(" << i << "," << j << ") = " << at(i, j)
                    << " exceeds min(r(" << i << "," << j - 1 << "), r(" << i + 1 << "," << j
                    << ")) = " << bound;
                return out.str();
            }
        }
    }
    for (std::size_t i = 1; i <= n_; ++i) {
        for (std::size_t j = i; j <= n_; ++j) {
            if (multiplicity(i, j) < 0) {
                out << "negative multiplicity m(" << i << "," << j << ") = " << multiplicity(i, j);
                return out.str();
            }
        }
    }
    return {};
}

std::int64_t codim_rank_formula(const RankArray& ra) {
    std::int64_t total = 0;
    const std::size_t n = ra.size();
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = i + 1; j <= n; ++j) {
            const auto r = ra.at(i, j);
            total += (ra.at(i, j - 1) - r) * (ra.at(i + 1, j) - r);
        }
    }
    return total;
}

}  // namespace qcodim
