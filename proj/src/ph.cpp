#include "qcodim/ph.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <map>
#include <numeric>
#include <sstream>
#include <tuple>
#include <unordered_map>

#include "qcodim/error.hpp"
#include "qcodim/kernels.hpp"

namespace qcodim {

PointCloud::PointCloud(const std::vector<std::vector<double>>& rows) : count_(rows.size()) {
    if (rows.empty()) return;
    dim_ = rows.front().size();
    if (dim_ == 0) throw InvariantError("points must have dimension at least 1");
    coords_.reserve(count_ * dim_);
    for (std::size_t k = 0; k < rows.size(); ++k) {
        if (rows[k].size() != dim_) {
            std::ostringstream msg;
            msg << "dimension mismatch: point " << k << " has " << rows[k].size() << " coordinates, expected "
                << dim_;
            throw InvariantError(msg.str());
        }
        for (double x : rows[k]) {
            if (!std::isfinite(x)) throw InvariantError("point coordinates must be finite");
            coords_.push_back(x);
        }
    }
}

FilteredComplex::FilteredComplex(std::vector<Simplex> simplices) : simplices_(std::move(simplices)) {
    for (const auto& s : simplices_) {
        if (s.vertices.empty()) throw InvariantError("malformed complex: empty simplex");
        if (!std::isfinite(s.value)) throw InvariantError("malformed complex: non-finite filtration value");
        if (std::adjacent_find(s.vertices.begin(), s.vertices.end(), std::greater_equal<>()) != s.vertices.end())
            throw InvariantError("malformed complex: simplex vertices must be strictly increasing");
    }
    std::sort(simplices_.begin(), simplices_.end(), [](const Simplex& a, const Simplex& b) {
        const auto da = a.vertices.size(), db = b.vertices.size();
        return std::tie(a.value, da, a.vertices) < std::tie(b.value, db, b.vertices);
    });

    std::map<std::vector<std::uint32_t>, std::size_t> index;
    for (std::size_t k = 0; k < simplices_.size(); ++k) {
        if (!index.emplace(simplices_[k].vertices, k).second)
            throw InvariantError("malformed complex: duplicate simplex");
    }

    boundary_.resize(simplices_.size());
    std::vector<std::uint32_t> face;
    for (std::size_t k = 0; k < simplices_.size(); ++k) {
        const auto& s = simplices_[k];
        if (s.vertices.size() < 2) continue;
        for (std::size_t drop = 0; drop < s.vertices.size(); ++drop) {
            face.clear();
            for (std::size_t v = 0; v < s.vertices.size(); ++v)
                if (v != drop) face.push_back(s.vertices[v]);
            auto it = index.find(face);
            if (it == index.end()) throw InvariantError("malformed complex: missing face");
            if (simplices_[it->second].value > s.value)
                throw InvariantError("malformed complex: face enters after its coface");
            boundary_[k].push_back(it->second);
        }
        std::sort(boundary_[k].begin(), boundary_[k].end());
    }
}

std::size_t FilteredComplex::max_dim() const {
    std::size_t d = 0;
    for (const auto& s : simplices_) d = std::max(d, s.dim());
    return d;
}

std::string_view to_string(ScaleConvention c) { return c == ScaleConvention::Radius ? "radius" : "diameter"; }

namespace {

double scale_cap_from(const std::vector<double>& dist, ScaleConvention convention) {
    const double diameter = dist.empty() ? 0.0 : *std::max_element(dist.begin(), dist.end());
    return 1.05 * (convention == ScaleConvention::Radius ? diameter / 2.0 : diameter);
}

}  // namespace

double default_max_scale(const PointCloud& cloud, ScaleConvention convention) {
    return scale_cap_from(kernels::pairwise_distances_omp(cloud), convention);
}

FilteredComplex vr_filtration(const PointCloud& cloud, std::size_t skeleton_dim, std::optional<double> max_scale,
                              ScaleConvention convention) {
    const std::size_t n = cloud.size();
    const auto dist = kernels::pairwise_distances_omp(cloud);
    const double cap = max_scale ? *max_scale : scale_cap_from(dist, convention);
    auto edge_value = [&](std::size_t a, std::size_t b) {
        const double d = dist[a * n + b];
        return convention == ScaleConvention::Radius ? d / 2.0 : d;
    };

    std::vector<Simplex> out;
    std::vector<std::uint32_t> clique;
    // Depth-first clique enumeration in increasing vertex order.
    auto extend = [&](auto&& self, double value) -> void {
        out.push_back({clique, value});
        if (clique.size() > skeleton_dim) return;
        for (std::size_t v = clique.back() + 1; v < n; ++v) {
            double next = value;
            bool ok = true;
            for (auto u : clique) {
                const double e = edge_value(u, v);
                if (e > cap) {
                    ok = false;
                    break;
                }
                next = std::max(next, e);
            }
            if (!ok) continue;
            clique.push_back(static_cast<std::uint32_t>(v));
            self(self, next);
            clique.pop_back();
        }
    };
    for (std::size_t v = 0; v < n; ++v) {
        clique.assign(1, static_cast<std::uint32_t>(v));
        extend(extend, 0.0);
    }
    return FilteredComplex(std::move(out));
}

FilteredComplex lower_star_path(const std::vector<double>& values) {
    std::vector<Simplex> out;
    for (std::size_t i = 0; i < values.size(); ++i) out.push_back({{static_cast<std::uint32_t>(i)}, values[i]});
    for (std::size_t i = 0; i + 1 < values.size(); ++i)
        out.push_back({{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i + 1)},
                       std::max(values[i], values[i + 1])});
    return FilteredComplex(std::move(out));
}

Barcode persistence(const FilteredComplex& complex, std::size_t degree) {
    const auto& simplices = complex.simplices();
    const std::size_t n = simplices.size();
    constexpr std::size_t kNone = static_cast<std::size_t>(-1);

    std::vector<std::vector<std::size_t>> reduced(n);
    std::vector<std::size_t> column_with_low(n, kNone);
    std::vector<std::size_t> scratch;
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t dim = simplices[j].dim();
        if (dim == 0 || dim > degree + 1) continue;
        auto col = complex.boundary(j);
        while (!col.empty() && column_with_low[col.back()] != kNone) {
            const auto& other = reduced[column_with_low[col.back()]];
            scratch.clear();
            std::set_symmetric_difference(col.begin(), col.end(), other.begin(), other.end(),
                                          std::back_inserter(scratch));
            col.swap(scratch);
        }
        if (!col.empty()) column_with_low[col.back()] = j;
        reduced[j] = std::move(col);
    }

    std::vector<BarEntry> bars;
    for (std::size_t i = 0; i < n; ++i) {
        if (simplices[i].dim() != degree || !reduced[i].empty()) continue;
        const double birth = simplices[i].value;
        if (column_with_low[i] == kNone) {
            bars.push_back({Bar(birth, ExtReal::plus_inf()), 1});
        } else if (const double death = simplices[column_with_low[i]].value; birth < death) {
            bars.push_back({Bar(birth, death), 1});
        }
    }
    return Barcode(IndexSet::dense_real(), std::move(bars));
}

Barcode ph0_union_find(const FilteredComplex& complex) {
    const auto& simplices = complex.simplices();
    std::unordered_map<std::uint32_t, std::size_t> slot;
    std::vector<std::size_t> parent;
    // Component age: (birth value, founding vertex id); smaller is elder.
    std::vector<std::pair<double, std::uint32_t>> age;

    auto find = [&](std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };

    std::vector<BarEntry> bars;
    for (const auto& s : simplices) {
        if (s.dim() == 0) {
            slot.emplace(s.vertices[0], parent.size());
            parent.push_back(parent.size());
            age.emplace_back(s.value, s.vertices[0]);
        } else if (s.dim() == 1) {
            auto a = find(slot.at(s.vertices[0]));
            auto b = find(slot.at(s.vertices[1]));
            if (a == b) continue;
            if (age[b] < age[a]) std::swap(a, b);
            // b is the younger component and dies here.
            if (age[b].first < s.value) bars.push_back({Bar(age[b].first, s.value), 1});
            parent[b] = a;
        }
    }
    for (std::size_t x = 0; x < parent.size(); ++x)
        if (parent[x] == x) bars.push_back({Bar(age[x].first, ExtReal::plus_inf()), 1});
    return Barcode(IndexSet::dense_real(), std::move(bars));
}

}  // namespace qcodim
