#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "vrbridge/complex.hpp"

namespace vrbridge {

/// A GF(2) vector packed 64 entries per word.
class BitVector {
  public:
    BitVector() = default;
    explicit BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const noexcept { return size_; }
    bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
    void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }
    BitVector& operator^=(const BitVector& other);

    bool none() const noexcept;
    /// Index of the highest set entry, or size() when none is set.
    std::size_t highest() const noexcept;

    friend bool operator==(const BitVector&, const BitVector&) = default;

  private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

/**
 * ∂_k over GF(2). Rows index (k−1)-simplices, columns index k-simplices, both
 * in the complex's lexicographic order. Each column lists its k+1 faces.
 */
struct BoundaryMatrix {
    std::size_t dim = 0;
    std::size_t rows = 0;
    std::vector<std::vector<std::size_t>> columns;

    std::size_t cols() const noexcept { return columns.size(); }
};

BoundaryMatrix boundary_matrix(const SimplicialComplex& k, std::size_t dim);

/// Rank over GF(2) by dense bit-packed elimination.
std::size_t gf2_rank_dense(const BoundaryMatrix& m);
/// Rank over GF(2) by sparse column reduction on lowest pivots.
std::size_t gf2_rank_sparse(const BoundaryMatrix& m);
/// Dense below 10^4 columns, sparse above.
std::size_t gf2_rank(const BoundaryMatrix& m);

/// Composite ∂_{k−1}∘∂_k vanishes.
bool boundary_squares_to_zero(const SimplicialComplex& k, std::size_t dim);

/// β_0..β_max_k over GF(2). Requires max_k < dim_cap.
std::vector<std::size_t> betti_numbers(const SimplicialComplex& k, std::size_t max_k);

/// Alternating sum of simplex counts up to dim_cap.
long long euler_characteristic(const SimplicialComplex& k);

/**
 * A basis of H_1 over GF(2): cycles of the 1-skeleton that survive reduction
 * against ∂_2, chosen as the first independent kernel columns in
 * lexicographic order. Requires dim_cap ≥ 2.
 */
class HomologyBasis {
  public:
    explicit HomologyBasis(const SimplicialComplex& k);

    /// Cycles as edge indicator vectors.
    const std::vector<BitVector>& cycles() const noexcept { return cycles_; }
    std::size_t rank() const noexcept { return cycles_.size(); }

    /// Coordinates of a 1-cycle in this basis. Throws InputError if z is not a cycle.
    std::vector<bool> coordinates(const BitVector& z) const;

  private:
    std::size_t edge_count_ = 0;
    std::vector<BitVector> cycles_;
    // Reduced spanning set of Z_1 = B_1 + span(cycles_), keyed by highest bit.
    std::vector<std::size_t> pivot_at_;
    std::vector<BitVector> pivot_vectors_;
    std::vector<BitVector> pivot_tags_;
};

struct InducedMap {
    /// matrix[i][j]: coordinate i of the image of source basis cycle j.
    std::vector<std::vector<bool>> matrix;
    std::size_t source_rank = 0;
    std::size_t target_rank = 0;
    std::size_t rank = 0;
};

/// H_1(m) in the HomologyBasis of each complex. Throws InputError unless m is simplicial
/// and both complexes have dim_cap ≥ 2.
InducedMap induced_h1(const SimplicialMap& m);

/**
 * Edge-path presentation of π_1 of the 2-skeleton: one generator per edge
 * outside a breadth-first spanning tree, one relator per triangle.
 */
struct GroupPresentation {
    struct Letter {
        std::size_t generator;
        int exponent;  // +1 or −1
        friend bool operator==(const Letter&, const Letter&) = default;
    };
    using Word = std::vector<Letter>;

    std::vector<Simplex> generators;  // the non-tree edges
    std::vector<Word> relators;

    /// Free rank of the abelianization: generators minus the rational rank of
    /// the relators' exponent-sum matrix.
    std::size_t abelianization_rank() const;
};

/// Throws InputError if the complex is disconnected, dim_cap < 2 or base is unknown.
GroupPresentation edge_path_presentation(const SimplicialComplex& k, Vertex base);

/// Connected components of the 1-skeleton (label per vertex, labels 0..c−1).
std::vector<std::size_t> connected_components(const SimplicialComplex& k);

}  // namespace vrbridge
