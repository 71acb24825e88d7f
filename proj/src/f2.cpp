#include "c2coh/f2.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace c2coh {

F2Matrix::F2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_((cols + kWordBits - 1) / kWordBits), data_(rows * stride_, 0) {}

F2Matrix F2Matrix::identity(std::size_t n) {
    F2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
}

F2Matrix F2Matrix::from_rows(const std::vector<std::vector<int>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    F2Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw std::invalid_argument("ragged rows in F2Matrix::from_rows");
        for (std::size_t c = 0; c < cols; ++c)
            if (rows[r][c] % 2 != 0) m.set(r, c);
    }
    return m;
}

void F2Matrix::set(std::size_t r, std::size_t c, bool value) {
    Word& w = data_[r * stride_ + c / kWordBits];
    const Word bit = Word{1} << (c % kWordBits);
    w = value ? (w | bit) : (w & ~bit);
}

bool F2Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](Word w) { return w == 0; });
}

F2Matrix F2Matrix::operator*(const F2Matrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("F2Matrix product: inner dimensions differ");
    F2Matrix out(rows_, rhs.cols_);
    // Row r of the product is the XOR of the rows of rhs selected by row r of *this.
    for (std::size_t r = 0; r < rows_; ++r) {
        auto dst = out.row_mut(r);
        for (std::size_t k = 0; k < cols_; ++k) {
            if (!get(r, k)) continue;
            const auto src = rhs.row(k);
            for (std::size_t w = 0; w < dst.size(); ++w) dst[w] ^= src[w];
        }
    }
    return out;
}

std::size_t f2_rank(const F2Matrix& m) {
    F2Matrix work = m;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < work.cols_ && rank < work.rows_; ++col) {
        const std::size_t word = col / F2Matrix::kWordBits;
        const F2Matrix::Word bit = F2Matrix::Word{1} << (col % F2Matrix::kWordBits);

        std::size_t pivot = rank;
        while (pivot < work.rows_ && !(work.data_[pivot * work.stride_ + word] & bit)) ++pivot;
        if (pivot == work.rows_) continue;

        if (pivot != rank) {
            auto a = work.row_mut(pivot);
            auto b = work.row_mut(rank);
            std::swap_ranges(a.begin(), a.end(), b.begin());
        }
        const auto pivot_row = work.row_mut(rank);
        for (std::size_t r = rank + 1; r < work.rows_; ++r) {
            auto target = work.row_mut(r);
            if (!(target[word] & bit)) continue;
            // Words left of `word` are already zero in the pivot row.
            for (std::size_t w = word; w < target.size(); ++w) target[w] ^= pivot_row[w];
        }
        ++rank;
    }
    return rank;
}

// ---------------------------------------------------------------------------

ChainComplex::ChainComplex(std::size_t vertices, std::vector<F2Matrix> boundaries)
    : vertices_(vertices), boundaries_(std::move(boundaries)) {
    std::size_t below = vertices_;
    for (std::size_t i = 0; i < boundaries_.size(); ++i) {
        if (boundaries_[i].rows() != below)
            throw std::invalid_argument("boundary " + std::to_string(i + 1) + " has " +
                                        std::to_string(boundaries_[i].rows()) + " rows, expected " +
                                        std::to_string(below));
        below = boundaries_[i].cols();
    }
    for (std::size_t i = 1; i < boundaries_.size(); ++i)
        if (!(boundaries_[i - 1] * boundaries_[i]).is_zero())
            throw std::invalid_argument("boundary " + std::to_string(i) + " composed with boundary " +
                                        std::to_string(i + 1) + " is nonzero");
}

std::size_t ChainComplex::cells(std::size_t i) const {
    if (i == 0) return vertices_;
    if (i > boundaries_.size()) return 0;
    return boundaries_[i - 1].cols();
}

long long ChainComplex::euler_characteristic() const {
    long long chi = 0;
    for (std::size_t i = 0; i <= dimension(); ++i)
        chi += (i % 2 == 0 ? 1 : -1) * static_cast<long long>(cells(i));
    return chi;
}

std::vector<Natural> betti_numbers(const ChainComplex& c) {
    std::vector<std::size_t> ranks(c.dimension() + 2, 0);  // ranks[i] = rank d_i; d_0 = d_{top+1} = 0
    for (std::size_t i = 1; i <= c.dimension(); ++i) ranks[i] = f2_rank(c.boundary(i));
    std::vector<Natural> betti(c.dimension() + 1);
    for (std::size_t i = 0; i <= c.dimension(); ++i) betti[i] = c.cells(i) - ranks[i] - ranks[i + 1];
    return betti;
}

SingProfile betti_f2(const ChainComplex& c) {
    if (c.dimension() > 2) throw std::invalid_argument("betti_f2 expects a complex of dimension at most two");
    const auto b = betti_numbers(c);
    SingProfile out;
    out.h0 = b.size() > 0 ? b[0] : 0;
    out.h1 = b.size() > 1 ? b[1] : 0;
    out.h2 = b.size() > 2 ? b[2] : 0;
    return out;
}

ChainComplex closed_surface_model(Natural beta) { return surface_with_boundary_model(beta, 0); }

ChainComplex surface_with_boundary_model(Natural beta_closed, Natural boundary_circles) {
    // Vertices: base v0, then one per hole. Edges: β loops a_j, then for
    // each hole the spoke x_i and the boundary loop c_i.
    const std::size_t holes = boundary_circles;
    const std::size_t vertices = 1 + holes;
    const std::size_t edges = beta_closed + 2 * holes;
    auto spoke = [&](std::size_t i) { return beta_closed + 2 * i; };
    auto loop = [&](std::size_t i) { return beta_closed + 2 * i + 1; };

    F2Matrix d1(vertices, edges);
    for (std::size_t i = 0; i < holes; ++i) {
        d1.set(0, spoke(i));
        d1.set(1 + i, spoke(i));
    }
    // Face word a-part (each a_j twice) then x_i c_i x_i^{-1}: mod 2 only the c_i survive.
    F2Matrix d2(edges, 1);
    for (std::size_t i = 0; i < holes; ++i) d2.set(loop(i), 0);
    return ChainComplex(vertices, {std::move(d1), std::move(d2)});
}

ChainComplex disk_model() {
    // Edges e0 = [v0,v1], e1 = [v1,v2], e2 = [v0,v2]; face bounded by all three.
    F2Matrix d1 = F2Matrix::from_rows({{1, 0, 1}, {1, 1, 0}, {0, 1, 1}});
    F2Matrix d2 = F2Matrix::from_rows({{1}, {1}, {1}});
    return ChainComplex(3, {std::move(d1), std::move(d2)});
}

}  // namespace c2coh
