#include "qcodim/quiver.hpp"

#include <random>
#include <sstream>

#include "qcodim/error.hpp"

namespace qcodim {

QuiverRep::QuiverRep(PrimeField field, std::vector<std::size_t> dims, std::vector<GfMatrix> maps)
    : field_(field), dims_(std::move(dims)), maps_(std::move(maps)) {
    if (dims_.empty()) throw InvariantError("quiver representation needs at least one vertex");
    if (maps_.size() + 1 != dims_.size()) {
        std::ostringstream msg;
        msg << "expected " << dims_.size() - 1 << " maps for " << dims_.size() << " vertices, got "
            << maps_.size();
        throw InvariantError(msg.str());
    }
    for (std::size_t i = 0; i < maps_.size(); ++i) {
        const auto& m = maps_[i];
        if (m.rows() != dims_[i + 1] || m.cols() != dims_[i]) {
            std::ostringstream msg;
            msg << "map " << i + 1 << " has shape " << m.rows() << "x" << m.cols() << ", expected "
                << dims_[i + 1] << "x" << dims_[i];
            throw InvariantError(msg.str());
        }
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c)
                if (m(r, c) >= field_.p()) {
                    std::ostringstream msg;
                    msg << "map " << i + 1 << " entry (" << r << "," << c << ") = " << m(r, c)
                        << " is not in 0.." << field_.p() - 1;
                    throw InvariantError(msg.str());
                }
    }
}

RankArray rank_array(const QuiverRep& rep) {
    const std::size_t n = rep.vertices();
    RankArray ra(n);
    for (std::size_t i = 1; i <= n; ++i) {
        ra.set(i, i, static_cast<std::int64_t>(rep.dims()[i - 1]));
        // composite : V_i -> V_j, extended one arrow at a time.
        GfMatrix composite = GfMatrix::identity(rep.dims()[i - 1]);
        for (std::size_t j = i + 1; j <= n; ++j) {
            composite = multiply(rep.maps()[j - 2], composite, rep.field());
            ra.set(i, j, static_cast<std::int64_t>(gf_rank(composite, rep.field())));
        }
    }
    return ra;
}

Barcode barcode_from_rank_array(const RankArray& ra) {
    if (auto why = ra.violation(); !why.empty()) throw InvariantError("inconsistent rank array: " + why);
    const std::size_t n = ra.size();
    std::vector<BarEntry> bars;
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i; j <= n; ++j)
            if (const auto m = ra.multiplicity(i, j); m > 0)
                bars.push_back({Bar(static_cast<double>(i), static_cast<double>(j)), m});
    return Barcode(IndexSet::finite(FiniteGrid::integers(n)), std::move(bars));
}

CodimBreakdown codim_breakdown(const QuiverRep& rep) {
    auto ranks = rank_array(rep);
    auto bc = barcode_from_rank_array(ranks);
    const auto by_rank = codim_rank_formula(ranks);
    const auto by_pairs = qcodim(bc);
    return {std::move(ranks), std::move(bc), by_rank, by_pairs};
}

std::int64_t codim(const QuiverRep& rep) {
    const auto result = codim_breakdown(rep);
    if (result.by_rank_formula != result.by_interacting_pairs) {
        std::ostringstream msg;
        msg << "codimension mismatch: rank formula gives " << result.by_rank_formula
            << ", interacting pairs give " << result.by_interacting_pairs;
        throw InternalError(msg.str());
    }
    return result.by_rank_formula;
}

QuiverRep canonical_rep(const Barcode& bc, const PrimeField& field) {
    const auto& grid = bc.index_set().grid();
    const std::size_t n = grid.size();

    // One basis vector per bar instance, in entry order (entries are sorted by birth, death).
    struct Instance {
        std::size_t birth, death;
    };
    std::vector<Instance> instances;
    for (const auto& e : bc.entries()) {
        const Instance inst{*grid.position(e.bar.birth.value()), *grid.position(e.bar.death.value())};
        for (std::int64_t k = 0; k < e.multiplicity; ++k) instances.push_back(inst);
    }

    // basis_index[v][k] = index of instance k in the basis at vertex v (1-based v), or -1.
    std::vector<std::size_t> dims(n, 0);
    std::vector<std::vector<long>> basis_index(n + 1, std::vector<long>(instances.size(), -1));
    for (std::size_t v = 1; v <= n; ++v) {
        for (std::size_t k = 0; k < instances.size(); ++k) {
            if (instances[k].birth <= v && v <= instances[k].death)
                basis_index[v][k] = static_cast<long>(dims[v - 1]++);
        }
    }

    std::vector<GfMatrix> maps;
    for (std::size_t v = 1; v < n; ++v) {
        GfMatrix m(dims[v], dims[v - 1]);
        for (std::size_t k = 0; k < instances.size(); ++k) {
            if (basis_index[v][k] >= 0 && basis_index[v + 1][k] >= 0)
                m(static_cast<std::size_t>(basis_index[v + 1][k]), static_cast<std::size_t>(basis_index[v][k])) = 1;
        }
        maps.push_back(std::move(m));
    }
    return QuiverRep(field, std::move(dims), std::move(maps));
}

QuiverRep random_rep(const std::vector<std::size_t>& dims, const PrimeField& field, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> entry(0, field.p() - 1);
    std::vector<GfMatrix> maps;
    for (std::size_t i = 0; i + 1 < dims.size(); ++i) {
        GfMatrix m(dims[i + 1], dims[i]);
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = entry(rng);
        maps.push_back(std::move(m));
    }
    return QuiverRep(field, dims, std::move(maps));
}

}  // namespace qcodim
