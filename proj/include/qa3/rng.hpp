#pragma once

#include <cstdint>
#include <vector>

#include "qa3/fields.hpp"
#include "qa3/linalg.hpp"
#include "qa3/presentation.hpp"

namespace qa3 {

/// splitmix64: 64-bit state, one 64-bit output per step. All randomized
/// drivers draw from this generator so runs are reproducible from the seed.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform draw from [0, n). The modulo bias is negligible for the tiny
    /// ranges used here and keeps the stream layout simple and documented.
    std::uint64_t below(std::uint64_t n) { return next() % n; }
};

inline Scalar random_scalar(SplitMix64& rng, const Field& F) {
    return F.element_from_code(rng.below(F.size()));
}

/// Uniform d x 9 coefficient matrix redrawn until its rank is exactly d:
/// a uniformly random d-dimensional subspace of the 9-dimensional tensor
/// square, returned as reduced echelon rows.
inline std::vector<SparseVec> random_tensor_rows(SplitMix64& rng, const Field& F, int d) {
    while (true) {
        std::vector<SparseVec> rows;
        rows.reserve(static_cast<size_t>(d));
        for (int r = 0; r < d; ++r) {
            std::vector<Scalar> dense;
            dense.reserve(9);
            for (int c = 0; c < 9; ++c) dense.push_back(random_scalar(rng, F));
            rows.push_back(sparse_from_dense(dense, F));
        }
        if (rank(rows, F) == d) return rref(rows, F);
    }
}

/// Random quadratic presentation on x, y, z whose relation span is a uniform
/// d-dimensional subspace.
inline Presentation random_quadratic_presentation(SplitMix64& rng, const Field& F, int d) {
    std::vector<SparseVec> rows = random_tensor_rows(rng, F, d);
    std::vector<Poly> rels;
    rels.reserve(rows.size());
    for (const SparseVec& v : rows) {
        Poly p;
        for (const auto& [idx, c] : v) {
            Word w{idx / 3, idx % 3};
            add_term(p.terms, w, c, F);
        }
        rels.push_back(std::move(p));
    }
    return make_presentation(F, {"x", "y", "z"}, rels);
}

/// Random invertible 3x3 matrix, rows as coordinate triples.
inline std::array<std::array<Scalar, 3>, 3> random_gl3(SplitMix64& rng, const Field& F) {
    while (true) {
        std::array<std::array<Scalar, 3>, 3> T;
        std::vector<SparseVec> rows;
        for (int i = 0; i < 3; ++i) {
            std::vector<Scalar> dense;
            for (int j = 0; j < 3; ++j) {
                T[static_cast<size_t>(i)][static_cast<size_t>(j)] = random_scalar(rng, F);
                dense.push_back(T[static_cast<size_t>(i)][static_cast<size_t>(j)]);
            }
            rows.push_back(sparse_from_dense(dense, F));
        }
        if (rank(rows, F) == 3) return T;
    }
}

}  // namespace qa3
