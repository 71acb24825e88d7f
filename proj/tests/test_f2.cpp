#include <doctest.h>

#include <random>

#include "c2coh/f2.hpp"

using namespace c2coh;

namespace {

using Dense = std::vector<std::vector<int>>;

// Textbook elimination on int entries, no bit packing.
std::size_t naive_rank(Dense m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[rank]);
        for (std::size_t r = 0; r < rows; ++r)
            if (r != rank && m[r][c] != 0)
                for (std::size_t k = 0; k < cols; ++k) m[r][k] = (m[r][k] + m[rank][k]) % 2;
        ++rank;
    }
    return rank;
}

Dense random_dense(std::mt19937& rng, std::size_t rows, std::size_t cols, double density) {
    std::bernoulli_distribution bit(density);
    Dense m(rows, std::vector<int>(cols));
    for (auto& row : m)
        for (auto& x : row) x = bit(rng) ? 1 : 0;
    return m;
}

SingProfile naive_betti(const ChainComplex& c) {
    auto dense = [](const F2Matrix& m) {
        Dense d(m.rows(), std::vector<int>(m.cols()));
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t k = 0; k < m.cols(); ++k) d[r][k] = m.get(r, k);
        return d;
    };
    const long long r1 = static_cast<long long>(naive_rank(dense(c.boundary(1))));
    const long long r2 = c.dimension() >= 2 ? static_cast<long long>(naive_rank(dense(c.boundary(2)))) : 0;
    const long long c0 = static_cast<long long>(c.cells(0)), c1 = static_cast<long long>(c.cells(1)),
                    c2 = static_cast<long long>(c.cells(2));
    return {static_cast<Natural>(c0 - r1), static_cast<Natural>(c1 - r1 - r2), static_cast<Natural>(c2 - r2)};
}

}  // namespace

TEST_CASE("f2_rank small cases") {
    CHECK(f2_rank(F2Matrix::identity(4)) == 4);
    CHECK(f2_rank(F2Matrix(3, 5)) == 0);
    CHECK(f2_rank(F2Matrix::from_rows({{1, 1}, {1, 1}})) == 1);
    CHECK(f2_rank(F2Matrix()) == 0);
    CHECK(f2_rank(F2Matrix::from_rows({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}})) == 2);
}

TEST_CASE("f2_rank matches the naive eliminator") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<std::size_t> dim(1, 64);
    std::uniform_real_distribution<double> dens(0.02, 0.9);
    for (int trial = 0; trial < 500; ++trial) {
        const Dense d = random_dense(rng, dim(rng), dim(rng), dens(rng));
        const F2Matrix m = F2Matrix::from_rows(d);
        const F2Matrix before = m;
        CHECK(f2_rank(m) == naive_rank(d));
        CHECK(m == before);
    }
}

TEST_CASE("f2_rank across word boundaries") {
    std::mt19937 rng(99);
    for (std::size_t cols : {63u, 64u, 65u, 127u, 128u, 130u, 200u}) {
        const Dense d = random_dense(rng, 70, cols, 0.5);
        CHECK(f2_rank(F2Matrix::from_rows(d)) == naive_rank(d));
        CHECK(f2_rank(F2Matrix::identity(cols)) == cols);
    }
}

TEST_CASE("F2Matrix basics") {
    F2Matrix m(2, 70);
    CHECK(m.is_zero());
    m.set(1, 69);
    CHECK(m.get(1, 69));
    CHECK_FALSE(m.get(0, 69));
    m.flip(1, 69);
    CHECK(m.is_zero());
    const F2Matrix a = F2Matrix::from_rows({{1, 1}, {0, 1}});
    CHECK(a * a == F2Matrix::identity(2));
    CHECK(F2Matrix::identity(3) * F2Matrix::identity(3) == F2Matrix::identity(3));
}

TEST_CASE("surface models") {
    for (unsigned g = 0; g <= 6; ++g) CHECK(betti_f2(closed_surface_model(2 * g)) == SingProfile{1, 2 * g, 1});
    for (unsigned s = 1; s <= 7; ++s) CHECK(betti_f2(closed_surface_model(s)) == SingProfile{1, s, 1});
    CHECK(betti_f2(disk_model()) == SingProfile{1, 0, 0});
    CHECK(betti_f2(surface_with_boundary_model(0, 1)) == SingProfile{1, 0, 0});
    CHECK(betti_f2(surface_with_boundary_model(2, 0)) == SingProfile{1, 2, 1});
    CHECK(betti_f2(surface_with_boundary_model(0, 2)) == SingProfile{1, 1, 0});
    for (Natural b = 0; b <= 8; ++b)
        for (Natural holes = 0; holes <= 6; ++holes) {
            const ChainComplex c = surface_with_boundary_model(b, holes);
            const SingProfile h = betti_f2(c);
            CHECK(h == naive_betti(c));
            CHECK(h == SingProfile{1, b + holes - (holes > 0 ? 1 : 0), holes == 0 ? 1u : 0u});
            CHECK(static_cast<long long>(h.h0) - static_cast<long long>(h.h1) + static_cast<long long>(h.h2) ==
                  c.euler_characteristic());
        }
}

TEST_CASE("ChainComplex rejects bad boundaries") {
    // Shape mismatch.
    CHECK_THROWS(ChainComplex(2, {F2Matrix(3, 1)}));
    // Two edges between the same pair of vertices: the face glued only to
    // one of them has nonzero boundary.
    F2Matrix d1 = F2Matrix::from_rows({{1, 1}, {1, 1}});
    F2Matrix d2 = F2Matrix::from_rows({{1}, {0}});
    CHECK_THROWS(ChainComplex(2, {d1, d2}));
    CHECK_NOTHROW(ChainComplex(2, {d1, F2Matrix::from_rows({{1}, {1}})}));
}

TEST_CASE("betti_numbers on a random complex agrees with the naive ranks") {
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 50; ++trial) {
        // Random d2; rows of d1 are random vectors orthogonal to every column of d2.
        const std::size_t e = 2 + rng() % 20, f = 1 + rng() % 10, v = 1 + rng() % 10;
        const Dense dd2 = random_dense(rng, e, f, 0.4);
        Dense dd1;
        while (dd1.size() < v) {
            Dense cand = random_dense(rng, 1, e, 0.3);
            bool ok = true;
            for (std::size_t col = 0; col < f && ok; ++col) {
                int s = 0;
                for (std::size_t k = 0; k < e; ++k) s ^= cand[0][k] & dd2[k][col];
                ok = s == 0;
            }
            if (ok) dd1.push_back(cand[0]);
        }
        const ChainComplex c(v, {F2Matrix::from_rows(dd1), F2Matrix::from_rows(dd2)});
        const SingProfile h = betti_f2(c);
        CHECK(h == naive_betti(c));
        const auto all = betti_numbers(c);
        REQUIRE(all.size() == 3);
        CHECK(static_cast<long long>(all[0]) - static_cast<long long>(all[1]) + static_cast<long long>(all[2]) ==
              c.euler_characteristic());
    }
}
