#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <Eigen/SparseCore>

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cvtda/complex.hpp"
#include "cvtda/errors.hpp"

namespace cvtda {

using SparseIntMatrix = Eigen::SparseMatrix<std::int64_t>;
using DenseIntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

// Boundary map restricted to the complex: rows indexed by S_{k-1}, columns by
// S_k, both in word order. Column s carries (-1)^l at the row of its l-th
// face. Entries are exact integers.
struct BoundaryMatrix {
    int k = 0;
    SparseIntMatrix mat;

    int rows() const { return static_cast<int>(mat.rows()); }
    int cols() const { return static_cast<int>(mat.cols()); }
};

inline BoundaryMatrix boundary_matrix(const VietorisRipsComplex& vr, int k) {
    if (k < 1 || k > vr.n - 1)
        throw input_error("boundary_matrix: dimension k=" + std::to_string(k) + " out of range [1, " +
                          std::to_string(vr.n - 1) + "]");
    const int rows = vr.count(k - 1);
    const int cols = vr.count(k);
    std::vector<Eigen::Triplet<std::int64_t>> triplets;
    triplets.reserve(static_cast<std::size_t>(cols) * static_cast<std::size_t>(k + 1));
    for (int c = 0; c < cols; ++c) {
        const SimplexBits s = vr.sets[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)];
        for (int l = 0; l <= k; ++l) {
            const SimplexBits face = remove_vertex(s, l);
            const int r = vr.index_of(k - 1, face);
            if (r < 0)
                throw internal_error("boundary_matrix: face closure violated for simplex word " +
                                     std::to_string(s.word));
            triplets.emplace_back(r, c, (l % 2 == 0) ? 1 : -1);
        }
    }
    SparseIntMatrix mat(rows, cols);
    mat.setFromTriplets(triplets.begin(), triplets.end());
    return BoundaryMatrix{k, std::move(mat)};
}

// Block anti-bidiagonal symmetric matrix carrying the restricted boundary
// maps; sector k occupies rows [offsets[k], offsets[k+1]). Squaring it
// produces the block-diagonal of combinatorial Laplacians.
struct DiracOperator {
    std::vector<int> offsets;            // size sectors()+1
    std::vector<BoundaryMatrix> blocks;  // blocks[k-1] = boundary map of dimension k
    SparseIntMatrix matrix;

    int sectors() const { return static_cast<int>(offsets.size()) - 1; }
    int dim() const { return offsets.empty() ? 0 : offsets.back(); }

    int sector_of(int index) const {
        for (int k = 0; k + 1 < static_cast<int>(offsets.size()); ++k)
            if (index < offsets[static_cast<std::size_t>(k) + 1]) return k;
        throw input_error("sector_of: index out of range");
    }

    Eigen::MatrixXd dense() const { return matrix.cast<double>().toDense(); }
};

inline DiracOperator dirac_operator(const VietorisRipsComplex& vr) {
    DiracOperator op;
    const int sectors = vr.kmax() + 1;
    op.offsets.resize(static_cast<std::size_t>(sectors) + 1, 0);
    for (int k = 0; k < sectors; ++k)
        op.offsets[static_cast<std::size_t>(k) + 1] = op.offsets[static_cast<std::size_t>(k)] + vr.count(k);

    std::vector<Eigen::Triplet<std::int64_t>> triplets;
    for (int k = 1; k < sectors; ++k) {
        op.blocks.push_back(boundary_matrix(vr, k));
        const auto& b = op.blocks.back().mat;
        const int row0 = op.offsets[static_cast<std::size_t>(k) - 1];
        const int col0 = op.offsets[static_cast<std::size_t>(k)];
        for (int outer = 0; outer < b.outerSize(); ++outer)
            for (SparseIntMatrix::InnerIterator it(b, outer); it; ++it) {
                triplets.emplace_back(row0 + static_cast<int>(it.row()), col0 + static_cast<int>(it.col()), it.value());
                triplets.emplace_back(col0 + static_cast<int>(it.col()), row0 + static_cast<int>(it.row()), it.value());
            }
    }
    const int n = op.dim();
    op.matrix = SparseIntMatrix(n, n);
    op.matrix.setFromTriplets(triplets.begin(), triplets.end());
    return op;
}

// Combinatorial Laplacian of dimension k. The adjoint placement matches the
// diagonal blocks of the squared Dirac operator: the lower map contributes
// as B_k^T B_k and the upper map as B_{k+1} B_{k+1}^T.
struct LaplacianBlock {
    int k = 0;
    SparseIntMatrix imat;

    int size() const { return static_cast<int>(imat.rows()); }
    Eigen::MatrixXd dense() const { return imat.cast<double>().toDense(); }
};

inline LaplacianBlock laplacian(const VietorisRipsComplex& vr, int k) {
    if (k < 0 || k > vr.n - 1)
        throw input_error("laplacian: dimension k=" + std::to_string(k) + " out of range [0, " +
                          std::to_string(vr.n - 1) + "]");
    const int size = vr.count(k);
    SparseIntMatrix acc(size, size);
    if (k >= 1 && k <= vr.kmax()) {
        const SparseIntMatrix b = boundary_matrix(vr, k).mat;
        acc = SparseIntMatrix(b.transpose()) * b;
    }
    if (k + 1 <= vr.kmax()) {
        const SparseIntMatrix b = boundary_matrix(vr, k + 1).mat;
        acc = acc + b * SparseIntMatrix(b.transpose());
    }
    acc.prune([](const auto&, const auto&, const auto& v) { return v != 0; });
    return LaplacianBlock{k, std::move(acc)};
}

namespace detail {

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r)) throw internal_error("exact_rank: 64-bit overflow");
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_sub_overflow(a, b, &r)) throw internal_error("exact_rank: 64-bit overflow");
    return r;
}

}  // namespace detail

// Rank over the integers by fraction-free (Bareiss) elimination. Divisions
// are exact; intermediate entries are minors of the input, which for
// boundary matrices stay in {-1, 0, 1}.
inline int exact_rank(const SparseIntMatrix& input) {
    DenseIntMatrix a = input.toDense();
    const int rows = static_cast<int>(a.rows());
    const int cols = static_cast<int>(a.cols());
    int rank = 0;
    std::int64_t prev = 1;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (a(r, col) != 0) { pivot = r; break; }
        if (pivot < 0) continue;
        if (pivot != rank) a.row(pivot).swap(a.row(rank));
        for (int r = rank + 1; r < rows; ++r) {
            for (int c = col + 1; c < cols; ++c) {
                const std::int64_t num = detail::checked_sub(detail::checked_mul(a(rank, col), a(r, c)),
                                                             detail::checked_mul(a(r, col), a(rank, c)));
                if (num % prev != 0) throw internal_error("exact_rank: inexact division");
                a(r, c) = num / prev;
            }
            a(r, col) = 0;
        }
        prev = a(rank, col);
        ++rank;
    }
    return rank;
}

// Kernel-count tolerance: entries are small integers, so anything below
// 1e-9 * max(1, ||M||_inf) is a numerical zero.
inline double kernel_zero_tolerance(const Eigen::MatrixXd& m) {
    const double norm_inf = m.rows() == 0 ? 0.0 : m.cwiseAbs().rowwise().sum().maxCoeff();
    return 1e-9 * std::max(1.0, norm_inf);
}

// Exact Betti number by two independent routes that must agree:
// (a) count of numerically zero Laplacian eigenvalues,
// (b) rank-nullity over the integers.
inline int betti_exact(const VietorisRipsComplex& vr, int k) {
    const int size = vr.count(k);
    if (size == 0) return 0;

    const LaplacianBlock lap = laplacian(vr, k);
    const Eigen::MatrixXd dense = lap.dense();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(dense, Eigen::EigenvaluesOnly);
    const double tol = kernel_zero_tolerance(dense);
    int by_eigen = 0;
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i)
        if (std::abs(solver.eigenvalues()[i]) < tol) ++by_eigen;

    int rank_lower = 0;
    if (k >= 1 && k <= vr.kmax()) rank_lower = exact_rank(boundary_matrix(vr, k).mat);
    int rank_upper = 0;
    if (k + 1 <= vr.kmax() && vr.count(k + 1) > 0) rank_upper = exact_rank(boundary_matrix(vr, k + 1).mat);
    const int by_rank = size - rank_lower - rank_upper;

    if (by_eigen != by_rank)
        throw internal_error("betti_exact: eigenvalue kernel count " + std::to_string(by_eigen) +
                             " disagrees with exact rank-nullity " + std::to_string(by_rank) +
                             " at k=" + std::to_string(k));
    return by_rank;
}

struct BettiVector {
    double epsilon = 0.0;
    std::vector<int> betti;
};

inline BettiVector betti_vector(const VietorisRipsComplex& vr, int kmax) {
    BettiVector out;
    out.epsilon = vr.epsilon;
    for (int k = 0; k <= kmax; ++k) out.betti.push_back(betti_exact(vr, k));
    return out;
}

inline nlohmann::json to_json(const BettiVector& bv) {
    return nlohmann::json{{"epsilon", bv.epsilon}, {"betti", bv.betti}};
}

// d_k d_{k+1} = 0 in exact integer arithmetic for every consecutive pair.
inline bool verify_chain_complex(const VietorisRipsComplex& vr) {
    for (int k = 1; k + 1 <= vr.kmax(); ++k) {
        if (vr.count(k + 1) == 0) continue;
        const SparseIntMatrix prod = boundary_matrix(vr, k).mat * boundary_matrix(vr, k + 1).mat;
        for (int outer = 0; outer < prod.outerSize(); ++outer)
            for (SparseIntMatrix::InnerIterator it(prod, outer); it; ++it)
                if (it.value() != 0) return false;
    }
    return true;
}

// Squaring the Dirac operator must reproduce every Laplacian block exactly
// and leave all off-diagonal blocks zero.
inline bool verify_dirac_square(const VietorisRipsComplex& vr) {
    const DiracOperator op = dirac_operator(vr);
    const SparseIntMatrix square = op.matrix * op.matrix;

    std::vector<Eigen::Triplet<std::int64_t>> triplets;
    for (int k = 0; k <= vr.kmax(); ++k) {
        const LaplacianBlock lap = laplacian(vr, k);
        const int off = op.offsets[static_cast<std::size_t>(k)];
        for (int outer = 0; outer < lap.imat.outerSize(); ++outer)
            for (SparseIntMatrix::InnerIterator it(lap.imat, outer); it; ++it)
                triplets.emplace_back(off + static_cast<int>(it.row()), off + static_cast<int>(it.col()), it.value());
    }
    SparseIntMatrix expected(op.dim(), op.dim());
    expected.setFromTriplets(triplets.begin(), triplets.end());

    const SparseIntMatrix diff = square - expected;
    for (int outer = 0; outer < diff.outerSize(); ++outer)
        for (SparseIntMatrix::InnerIterator it(diff, outer); it; ++it)
            if (it.value() != 0) return false;
    return true;
}

// Coordinate text export: one "row col value" line per stored nonzero.
inline void write_coordinate_text(std::ostream& out, const SparseIntMatrix& m) {
    out << m.rows() << " " << m.cols() << "\n";
    for (int outer = 0; outer < m.outerSize(); ++outer)
        for (SparseIntMatrix::InnerIterator it(m, outer); it; ++it)
            if (it.value() != 0) out << it.row() << " " << it.col() << " " << it.value() << "\n";
}

}  // namespace cvtda
