#ifndef RANKAX_LINALG_HPP
#define RANKAX_LINALG_HPP

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace rankax {

template <typename T>
using Matrix = std::vector<std::vector<T>>;

// Dense Gaussian elimination with partial pivoting. Works for double and for
// exact rationals (abs and comparisons resolve via ADL). The systems here are
// desk scale, so no factorization reuse or sparsity is attempted.
template <typename T>
std::vector<T> solve_dense(Matrix<T> a, std::vector<T> rhs) {
    using std::abs;
    const std::size_t n = rhs.size();
    if (a.size() != n) throw std::invalid_argument("solve_dense: shape mismatch");
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (abs(a[r][col]) > abs(a[pivot][col])) pivot = r;
        if (a[pivot][col] == T(0)) throw std::invalid_argument("solve_dense: singular matrix");
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            std::swap(rhs[pivot], rhs[col]);
        }
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a[r][col] == T(0)) continue;
            T factor = a[r][col] / a[col][col];
            a[r][col] = T(0);
            for (std::size_t c = col + 1; c < n; ++c) a[r][c] -= factor * a[col][c];
            rhs[r] -= factor * rhs[col];
        }
    }
    std::vector<T> x(n, T(0));
    for (std::size_t i = n; i-- > 0;) {
        T acc = rhs[i];
        for (std::size_t c = i + 1; c < n; ++c) acc -= a[i][c] * x[c];
        x[i] = acc / a[i][i];
    }
    return x;
}

}  // namespace rankax

#endif
