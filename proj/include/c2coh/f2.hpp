/**
 * Linear algebra over GF(2) with rows packed into 64-bit words, and
 * cellular chain complexes for computing mod-2 Betti numbers.
 */
#ifndef C2COH_F2_HPP
#define C2COH_F2_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "c2coh/surface.hpp"

namespace c2coh {

class F2Matrix {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    F2Matrix() = default;
    F2Matrix(std::size_t rows, std::size_t cols);

    static F2Matrix identity(std::size_t n);
    /// Row-major 0/1 entries; any nonzero value counts as 1.
    static F2Matrix from_rows(const std::vector<std::vector<int>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t words_per_row() const { return stride_; }

    bool get(std::size_t r, std::size_t c) const {
        return (data_[r * stride_ + c / kWordBits] >> (c % kWordBits)) & 1U;
    }
    void set(std::size_t r, std::size_t c, bool value = true);
    void flip(std::size_t r, std::size_t c) { data_[r * stride_ + c / kWordBits] ^= Word{1} << (c % kWordBits); }

    std::span<const Word> row(std::size_t r) const { return {data_.data() + r * stride_, stride_}; }

    bool is_zero() const;
    F2Matrix operator*(const F2Matrix& rhs) const;
    friend bool operator==(const F2Matrix&, const F2Matrix&) = default;

private:
    std::span<Word> row_mut(std::size_t r) { return {data_.data() + r * stride_, stride_}; }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t stride_ = 0;
    std::vector<Word> data_;

    friend std::size_t f2_rank(const F2Matrix& m);
};

/// Rank over GF(2) by Gaussian elimination on a private copy.
std::size_t f2_rank(const F2Matrix& m);

/**
 * C_0 <- C_1 <- C_2 <- ... with boundary(i) : C_i -> C_{i-1} stored as a
 * cells(i-1) x cells(i) matrix. The constructor checks shapes and that
 * consecutive boundaries compose to zero.
 */
class ChainComplex {
public:
    ChainComplex(std::size_t vertices, std::vector<F2Matrix> boundaries);

    std::size_t dimension() const { return boundaries_.size(); }
    std::size_t cells(std::size_t i) const;
    /// boundary(i) for i = 1..dimension().
    const F2Matrix& boundary(std::size_t i) const { return boundaries_.at(i - 1); }

    long long euler_characteristic() const;

private:
    std::size_t vertices_;
    std::vector<F2Matrix> boundaries_;
};

/// h_i = cells_i - rank d_i - rank d_{i+1}, for all i.
std::vector<Natural> betti_numbers(const ChainComplex& c);
/// The first three Betti numbers (a complex of dimension at most two).
SingProfile betti_f2(const ChainComplex& c);

/// One vertex, β loop edges each used twice by a single face.
ChainComplex closed_surface_model(Natural beta);

/**
 * Closed β-surface with `boundary_circles` open disks removed. Each hole
 * adds a vertex, a boundary loop c_i and a spoke x_i from the base vertex,
 * and the face word gains x_i c_i x_i^{-1}.
 */
ChainComplex surface_with_boundary_model(Natural beta_closed, Natural boundary_circles);

/// Triangle: three vertices, three edges, one face.
ChainComplex disk_model();

}  // namespace c2coh

#endif  // C2COH_F2_HPP
