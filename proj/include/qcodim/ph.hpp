#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "qcodim/barcode.hpp"

namespace qcodim {

/// N points in R^p, stored row-major.
class PointCloud {
public:
    PointCloud() = default;
    /// Throws InvariantError on ragged rows or non-finite coordinates.
    explicit PointCloud(const std::vector<std::vector<double>>& rows);

    std::size_t size() const { return count_; }
    std::size_t dimension() const { return dim_; }
    const double* point(std::size_t k) const { return coords_.data() + k * dim_; }
    double coord(std::size_t k, std::size_t axis) const { return coords_[k * dim_ + axis]; }

private:
    std::size_t count_ = 0;
    std::size_t dim_ = 0;
    std::vector<double> coords_;
};

struct Simplex {
    std::vector<std::uint32_t> vertices;  // strictly increasing
    double value = 0.0;

    std::size_t dim() const { return vertices.size() - 1; }
};

/// Face-closed simplicial complex with monotone filtration values, held in
/// filtration order: by (value, dimension, lexicographic vertices).
class FilteredComplex {
public:
    FilteredComplex() = default;
    /// Throws InvariantError when a face is missing or has a larger value.
    explicit FilteredComplex(std::vector<Simplex> simplices);

    const std::vector<Simplex>& simplices() const { return simplices_; }
    std::size_t size() const { return simplices_.size(); }
    /// Filtration-order indices of the codimension-one faces of simplex k, ascending.
    const std::vector<std::size_t>& boundary(std::size_t k) const { return boundary_[k]; }
    std::size_t max_dim() const;

private:
    std::vector<Simplex> simplices_;
    std::vector<std::vector<std::size_t>> boundary_;
};

enum class ScaleConvention { Radius, Diameter };

std::string_view to_string(ScaleConvention c);

/// Vietoris-Rips filtration up to simplices of dimension `skeleton_dim`.
/// Radius: a simplex enters at half its diameter (balls of radius s meet).
/// Simplices with value above max_scale are left out; the default keeps all.
FilteredComplex vr_filtration(const PointCloud& cloud, std::size_t skeleton_dim,
                              std::optional<double> max_scale = std::nullopt,
                              ScaleConvention convention = ScaleConvention::Radius);

/// Default scale cap: 1.05 x the largest simplex value the convention can produce.
double default_max_scale(const PointCloud& cloud, ScaleConvention convention);

/// Lower-star filtration of a path graph with the given vertex values.
FilteredComplex lower_star_path(const std::vector<double>& values);

/// Degree-`degree` barcode by column reduction of the boundary matrix over GF(2).
/// Zero-length bars are dropped.
Barcode persistence(const FilteredComplex& complex, std::size_t degree);

/// Degree-0 barcode by union-find with the elder rule.
Barcode ph0_union_find(const FilteredComplex& complex);

}  // namespace qcodim
