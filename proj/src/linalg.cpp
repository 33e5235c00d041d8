#include "mixmult/linalg.hpp"

namespace mixmult {

std::vector<Rat> solve_exact(std::vector<std::vector<Int>> A, std::vector<Int> b) {
    const std::size_t n = A.size();
    if (b.size() != n) throw Error(ErrorKind::Internal, "solve_exact: shape mismatch");
    for (const auto& row : A) {
        if (row.size() != n) throw Error(ErrorKind::Internal, "solve_exact: non-square matrix");
    }
    // Augment and run Bareiss: after step k, M[i][j] is the (k+1)x(k+1)
    // minor determinant; every division by the previous pivot is exact.
    std::vector<std::vector<Int>> M(n);
    for (std::size_t i = 0; i < n; ++i) {
        M[i] = std::move(A[i]);
        M[i].push_back(std::move(b[i]));
    }
    Int prev_pivot = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot_row = k;
        while (pivot_row < n && M[pivot_row][k] == 0) ++pivot_row;
        if (pivot_row == n) throw Error(ErrorKind::Internal, "solve_exact: singular matrix");
        if (pivot_row != k) std::swap(M[pivot_row], M[k]);
        const Int pivot = M[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j <= n; ++j) {
                M[i][j] = (pivot * M[i][j] - M[i][k] * M[k][j]) / prev_pivot;
            }
            M[i][k] = 0;
        }
        prev_pivot = pivot;
    }
    std::vector<Rat> x(n);
    for (std::size_t ii = n; ii-- > 0;) {
        Rat acc(M[ii][n]);
        for (std::size_t j = ii + 1; j < n; ++j) acc -= Rat(M[ii][j]) * x[j];
        if (M[ii][ii] == 0) throw Error(ErrorKind::Internal, "solve_exact: singular matrix");
        x[ii] = acc / Rat(M[ii][ii]);
        x[ii].canonicalize();
    }
    return x;
}

} // namespace mixmult
