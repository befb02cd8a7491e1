#include "vrbridge/homology.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <set>

#include <boost/multiprecision/cpp_int.hpp>

#include "vrbridge/error.hpp"

namespace vrbridge {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
constexpr std::size_t kDenseColumnLimit = 10000;

BitVector to_bits(const std::vector<std::size_t>& column, std::size_t rows)
{
    BitVector v(rows);
    for (auto r : column)
        v.set(r);
    return v;
}

// Rank of a list of vectors by reduction against a table of pivots.
std::size_t reduce_rank(std::vector<BitVector> cols, std::size_t rows)
{
    std::vector<std::size_t> pivot_at(rows, kNone);
    std::size_t rank = 0;
    for (std::size_t j = 0; j < cols.size(); ++j) {
        auto& c = cols[j];
        for (auto low = c.highest(); low < rows; low = c.highest()) {
            if (pivot_at[low] == kNone) {
                pivot_at[low] = j;
                ++rank;
                break;
            }
            c ^= cols[pivot_at[low]];
        }
    }
    return rank;
}

}  // namespace

BitVector& BitVector::operator^=(const BitVector& other)
{
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] ^= other.words_[i];
    return *this;
}

bool BitVector::none() const noexcept
{
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t BitVector::highest() const noexcept
{
    for (std::size_t w = words_.size(); w-- > 0;)
        if (words_[w])
            return w * 64 + (63 - static_cast<std::size_t>(__builtin_clzll(words_[w])));
    return size_;
}

BoundaryMatrix boundary_matrix(const SimplicialComplex& k, std::size_t dim)
{
    BoundaryMatrix m;
    m.dim = dim;
    m.rows = dim == 0 ? 0 : k.simplices(dim - 1).size();
    const auto& simplices = k.simplices(dim);
    m.columns.resize(simplices.size());
    if (dim == 0)
        return m;
    for (std::size_t j = 0; j < simplices.size(); ++j) {
        const auto& s = simplices[j];
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
            Simplex face = s;
            face.erase(face.begin() + static_cast<std::ptrdiff_t>(drop));
            m.columns[j].push_back(*k.index_of(face));
        }
        std::sort(m.columns[j].begin(), m.columns[j].end());
    }
    return m;
}

std::size_t gf2_rank_dense(const BoundaryMatrix& m)
{
    std::vector<BitVector> cols;
    cols.reserve(m.cols());
    for (const auto& c : m.columns)
        cols.push_back(to_bits(c, m.rows));
    return reduce_rank(std::move(cols), m.rows);
}

std::size_t gf2_rank_sparse(const BoundaryMatrix& m)
{
    // Columns kept as sorted row lists; the lowest entry is the back.
    std::vector<std::vector<std::size_t>> cols = m.columns;
    std::vector<std::size_t> pivot_at(m.rows, kNone);
    std::vector<std::size_t> scratch;
    std::size_t rank = 0;
    for (std::size_t j = 0; j < cols.size(); ++j) {
        auto& c = cols[j];
        while (!c.empty()) {
            const std::size_t low = c.back();
            if (pivot_at[low] == kNone) {
                pivot_at[low] = j;
                ++rank;
                break;
            }
            const auto& p = cols[pivot_at[low]];
            scratch.clear();
            std::set_symmetric_difference(c.begin(), c.end(), p.begin(), p.end(),
                                          std::back_inserter(scratch));
            c.swap(scratch);
        }
    }
    return rank;
}

std::size_t gf2_rank(const BoundaryMatrix& m)
{
    return m.cols() < kDenseColumnLimit ? gf2_rank_dense(m) : gf2_rank_sparse(m);
}

bool boundary_squares_to_zero(const SimplicialComplex& k, std::size_t dim)
{
    if (dim < 2)
        return true;
    const auto outer = boundary_matrix(k, dim - 1);
    const auto inner = boundary_matrix(k, dim);
    for (const auto& col : inner.columns) {
        BitVector acc(outer.rows);
        for (auto r : col)
            for (auto rr : outer.columns[r])
                acc.flip(rr);
        if (!acc.none())
            return false;
    }
    return true;
}

std::vector<std::size_t> betti_numbers(const SimplicialComplex& k, std::size_t max_k)
{
    if (max_k >= k.dim_cap())
        throw InputError("dimension cap " + std::to_string(k.dim_cap()) +
                         " is too small for Betti numbers up to degree " + std::to_string(max_k));
    std::vector<std::size_t> ranks(max_k + 2, 0);
    for (std::size_t d = 1; d <= max_k + 1; ++d)
        ranks[d] = gf2_rank(boundary_matrix(k, d));
    std::vector<std::size_t> betti(max_k + 1);
    for (std::size_t d = 0; d <= max_k; ++d)
        betti[d] = k.simplices(d).size() - ranks[d] - ranks[d + 1];
    return betti;
}

long long euler_characteristic(const SimplicialComplex& k)
{
    long long chi = 0;
    const auto counts = k.counts();
    for (std::size_t d = 0; d < counts.size(); ++d)
        chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(counts[d]);
    return chi;
}

HomologyBasis::HomologyBasis(const SimplicialComplex& k)
{
    if (k.dim_cap() < 2)
        throw InputError("H_1 needs a complex with dimension cap at least 2");
    const auto d1 = boundary_matrix(k, 1);
    const auto d2 = boundary_matrix(k, 2);
    edge_count_ = d1.cols();

    // Kernel of ∂_1: reduce columns while tracking which edges were combined.
    std::vector<BitVector> kernel;
    {
        std::vector<BitVector> reduced, combo;
        std::vector<std::size_t> pivot_at(d1.rows, kNone);
        for (std::size_t j = 0; j < d1.cols(); ++j) {
            BitVector c = to_bits(d1.columns[j], d1.rows);
            BitVector v(edge_count_);
            v.set(j);
            for (auto low = c.highest(); low < d1.rows; low = c.highest()) {
                if (pivot_at[low] == kNone) {
                    pivot_at[low] = j;
                    break;
                }
                c ^= reduced[pivot_at[low]];
                v ^= combo[pivot_at[low]];
            }
            if (c.none())
                kernel.push_back(v);
            reduced.push_back(std::move(c));
            combo.push_back(std::move(v));
        }
    }

    // Boundaries carry no homology class; each surviving cycle gets its own tag bit.
    pivot_at_.assign(edge_count_, kNone);
    auto insert = [&](BitVector v, BitVector tag) {
        for (auto low = v.highest(); low < edge_count_; low = v.highest()) {
            if (pivot_at_[low] == kNone) {
                pivot_at_[low] = pivot_vectors_.size();
                pivot_vectors_.push_back(std::move(v));
                pivot_tags_.push_back(std::move(tag));
                return true;
            }
            v ^= pivot_vectors_[pivot_at_[low]];
            tag ^= pivot_tags_[pivot_at_[low]];
        }
        return false;
    };

    const std::size_t max_rank = kernel.size();
    for (const auto& col : d2.columns)
        insert(to_bits(col, edge_count_), BitVector(max_rank));
    for (const auto& z : kernel) {
        BitVector tag(max_rank);
        tag.set(cycles_.size());
        if (insert(z, tag))
            cycles_.push_back(z);
    }
}

std::vector<bool> HomologyBasis::coordinates(const BitVector& z) const
{
    if (z.size() != edge_count_)
        throw InputError("chain has the wrong number of edges");
    BitVector v = z;
    BitVector tag(pivot_tags_.empty() ? 0 : pivot_tags_.front().size());
    for (auto low = v.highest(); low < edge_count_; low = v.highest()) {
        if (pivot_at_[low] == kNone)
            throw InputError("chain is not a cycle");
        v ^= pivot_vectors_[pivot_at_[low]];
        tag ^= pivot_tags_[pivot_at_[low]];
    }
    std::vector<bool> out(cycles_.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = tag.test(i);
    return out;
}

InducedMap induced_h1(const SimplicialMap& m)
{
    if (m.source().dim_cap() < 2 || m.target().dim_cap() < 2)
        throw InputError("induced map on H_1 needs dimension caps of at least 2");
    if (!check_simplicial(m))
        throw InputError("induced map requested for a non-simplicial vertex map");
    const HomologyBasis source(m.source());
    const HomologyBasis target(m.target());
    const auto& src_edges = m.source().simplices(1);
    const std::size_t tgt_edges = m.target().simplices(1).size();

    InducedMap out;
    out.source_rank = source.rank();
    out.target_rank = target.rank();
    out.matrix.assign(target.rank(), std::vector<bool>(source.rank(), false));
    std::vector<BitVector> columns;
    for (std::size_t j = 0; j < source.rank(); ++j) {
        BitVector image(tgt_edges);
        const auto& z = source.cycles()[j];
        for (std::size_t e = 0; e < src_edges.size(); ++e) {
            if (!z.test(e))
                continue;
            Simplex img = m.image(src_edges[e]);
            if (img.size() == 2)
                image.flip(*m.target().index_of(img));
        }
        const auto coords = target.coordinates(image);
        BitVector col(target.rank());
        for (std::size_t i = 0; i < coords.size(); ++i) {
            out.matrix[i][j] = coords[i];
            if (coords[i])
                col.set(i);
        }
        columns.push_back(std::move(col));
    }
    out.rank = reduce_rank(std::move(columns), target.rank());
    return out;
}

std::vector<std::size_t> connected_components(const SimplicialComplex& k)
{
    const std::size_t n = k.vertex_count();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& e : k.simplices(1)) {
        auto a = find(e[0]), b = find(e[1]);
        if (a != b)
            parent[std::max(a, b)] = std::min(a, b);
    }
    std::vector<std::size_t> label(n), relabel(n, kNone);
    std::size_t next = 0;
    for (std::size_t v = 0; v < n; ++v) {
        auto r = find(v);
        if (relabel[r] == kNone)
            relabel[r] = next++;
        label[v] = relabel[r];
    }
    return label;
}

GroupPresentation edge_path_presentation(const SimplicialComplex& k, Vertex base)
{
    if (k.dim_cap() < 2)
        throw InputError("edge-path presentation needs a dimension cap of at least 2");
    const std::size_t n = k.vertex_count();
    if (base >= n)
        throw InputError("unknown base vertex " + std::to_string(base));

    std::vector<std::vector<Vertex>> adjacency(n);
    for (const auto& e : k.simplices(1)) {
        adjacency[e[0]].push_back(e[1]);
        adjacency[e[1]].push_back(e[0]);
    }
    for (auto& a : adjacency)
        std::sort(a.begin(), a.end());

    std::vector<bool> seen(n, false);
    std::set<Simplex> tree;
    std::deque<Vertex> queue{base};
    seen[base] = true;
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        for (Vertex w : adjacency[u])
            if (!seen[w]) {
                seen[w] = true;
                tree.insert({std::min(u, w), std::max(u, w)});
                queue.push_back(w);
            }
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end())
        throw InputError("edge-path presentation of a disconnected complex");

    GroupPresentation p;
    std::vector<std::size_t> generator_of(k.simplices(1).size(), kNone);
    for (std::size_t e = 0; e < k.simplices(1).size(); ++e)
        if (!tree.contains(k.simplices(1)[e])) {
            generator_of[e] = p.generators.size();
            p.generators.push_back(k.simplices(1)[e]);
        }

    for (const auto& t : k.simplices(2)) {
        // Boundary loop a → b → c → a; edge (a,c) is traversed against its orientation.
        const std::pair<Simplex, int> steps[] = {
            {{t[0], t[1]}, +1}, {{t[1], t[2]}, +1}, {{t[0], t[2]}, -1}};
        GroupPresentation::Word word;
        for (const auto& [edge, sign] : steps) {
            auto g = generator_of[*k.index_of(edge)];
            if (g != kNone)
                word.push_back({g, sign});
        }
        p.relators.push_back(std::move(word));
    }
    return p;
}

std::size_t GroupPresentation::abelianization_rank() const
{
    using boost::multiprecision::cpp_int;
    const std::size_t cols = generators.size();
    std::vector<std::vector<cpp_int>> rows;
    rows.reserve(relators.size());
    for (const auto& w : relators) {
        std::vector<cpp_int> row(cols, 0);
        for (const auto& letter : w)
            row[letter.generator] += letter.exponent;
        rows.push_back(std::move(row));
    }

    // Fraction-free elimination; rows are divided by their content to stay small.
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t p = rank;
        while (p < rows.size() && rows[p][c] == 0)
            ++p;
        if (p == rows.size())
            continue;
        std::swap(rows[rank], rows[p]);
        const auto& pivot = rows[rank];
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            if (rows[r][c] == 0)
                continue;
            const cpp_int a = pivot[c], b = rows[r][c];
            cpp_int content = 0;
            for (std::size_t j = c; j < cols; ++j) {
                rows[r][j] = rows[r][j] * a - pivot[j] * b;
                content = boost::multiprecision::gcd(content, rows[r][j]);
            }
            if (content > 1)
                for (std::size_t j = c; j < cols; ++j)
                    rows[r][j] /= content;
        }
        ++rank;
    }
    return cols - rank;
}

}  // namespace vrbridge
