#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qcodim/barcode.hpp"
#include "qcodim/gf.hpp"
#include "qcodim/rank_array.hpp"

namespace qcodim {

/// Representation of the equioriented type-A quiver 1 -> 2 -> ... -> n over GF(p).
/// maps[i] : K^dims[i] -> K^dims[i+1], stored with shape dims[i+1] x dims[i].
class QuiverRep {
public:
    QuiverRep(PrimeField field, std::vector<std::size_t> dims, std::vector<GfMatrix> maps);

    const PrimeField& field() const { return field_; }
    const std::vector<std::size_t>& dims() const { return dims_; }
    const std::vector<GfMatrix>& maps() const { return maps_; }
    std::size_t vertices() const { return dims_.size(); }

    friend bool operator==(const QuiverRep&, const QuiverRep&) = default;

private:
    PrimeField field_;
    std::vector<std::size_t> dims_;
    std::vector<GfMatrix> maps_;
};

RankArray rank_array(const QuiverRep& rep);

/// Inverts the rank array by inclusion-exclusion. Throws InvariantError on
/// arrays that are not the rank array of any representation.
Barcode barcode_from_rank_array(const RankArray& ra);

struct CodimBreakdown {
    RankArray ranks;
    Barcode barcode;
    std::int64_t by_rank_formula = 0;
    std::int64_t by_interacting_pairs = 0;
};

/// Computes the isoclass codimension both ways without checking agreement.
CodimBreakdown codim_breakdown(const QuiverRep& rep);

/// Codimension of the isoclass of rep. Throws InternalError if the rank
/// formula and the interacting-pairs count disagree.
std::int64_t codim(const QuiverRep& rep);

/// Direct sum of interval modules realizing a grid barcode (vertex i is grid position i).
QuiverRep canonical_rep(const Barcode& bc, const PrimeField& field);

/// I.i.d. uniform entries from a generator seeded with `seed`.
QuiverRep random_rep(const std::vector<std::size_t>& dims, const PrimeField& field, std::uint64_t seed);

}  // namespace qcodim
