#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace qcodim {

/// Prime field GF(p) with canonical representatives 0..p-1.
class PrimeField {
public:
    explicit PrimeField(std::uint32_t p = 2);

    std::uint32_t p() const { return p_; }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return (a + b) % p_; }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return (a + p_ - b) % p_; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>((std::uint64_t{a} * b) % p_);
    }
    std::uint32_t inv(std::uint32_t a) const;

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
    std::uint32_t p_;
};

bool is_prime(std::uint32_t n);

/// Dense row-major matrix over GF(p). Either dimension may be zero.
class GfMatrix {
public:
    GfMatrix() = default;
    GfMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    static GfMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint32_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    std::uint32_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

    GfMatrix transpose() const;

    friend bool operator==(const GfMatrix&, const GfMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::uint32_t> data_;
};

/// a * b over the field; requires a.cols() == b.rows().
GfMatrix multiply(const GfMatrix& a, const GfMatrix& b, const PrimeField& field);

/// Rank by Gaussian elimination mod p. Entries must already be reduced.
std::size_t gf_rank(GfMatrix m, const PrimeField& field);

}  // namespace qcodim
