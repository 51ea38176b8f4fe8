#include "qcodim/gf.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "qcodim/error.hpp"

namespace qcodim {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; std::uint64_t{d} * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
    if (!is_prime(p)) throw InvariantError("field characteristic " + std::to_string(p) + " is not prime");
    if (p > 65521) throw InvariantError("field characteristic too large (max 65521)");
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
    if (a % p_ == 0) throw std::domain_error("inverse of zero in GF(p)");
    // Fermat: a^(p-2).
    std::uint32_t result = 1, base = a % p_, e = p_ - 2;
    while (e > 0) {
        if (e & 1U) result = mul(result, base);
        base = mul(base, base);
        e >>= 1U;
    }
    return result;
}

GfMatrix GfMatrix::identity(std::size_t n) {
    GfMatrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
    return m;
}

GfMatrix GfMatrix::transpose() const {
    GfMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

GfMatrix multiply(const GfMatrix& a, const GfMatrix& b, const PrimeField& field) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
    GfMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const auto x = a(r, k);
            if (x == 0) continue;
            for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) = field.add(out(r, c), field.mul(x, b(k, c)));
        }
    }
    return out;
}

std::size_t gf_rank(GfMatrix m, const PrimeField& field) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        std::size_t pivot = rank;
        while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != rank)
            for (std::size_t c = col; c < m.cols(); ++c) std::swap(m(pivot, c), m(rank, c));
        const auto scale = field.inv(m(rank, col));
        for (std::size_t c = col; c < m.cols(); ++c) m(rank, c) = field.mul(m(rank, c), scale);
        for (std::size_t r = rank + 1; r < m.rows(); ++r) {
            const auto f = m(r, col);
            if (f == 0) continue;
            for (std::size_t c = col; c < m.cols(); ++c) m(r, c) = field.sub(m(r, c), field.mul(f, m(rank, c)));
        }
        ++rank;
    }
    return rank;
}

}  // namespace qcodim
