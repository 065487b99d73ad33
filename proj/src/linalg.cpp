#include "ballpark/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace ballpark {

std::optional<std::vector<double>> solve_linear(Matrix A, std::vector<double> b,
                                                double pivot_tol) {
    const std::size_t n = A.rows;
    if (n != A.cols || b.size() != n) return std::nullopt;

    double scale = 0.0;
    for (double v : A.a) scale = std::max(scale, std::abs(v));
    const double tol = pivot_tol * std::max(1.0, scale);

    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(A(i, k)) > std::abs(A(piv, k))) piv = i;
        if (std::abs(A(piv, k)) <= tol) return std::nullopt;
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(A(piv, j), A(k, j));
            std::swap(b[piv], b[k]);
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            const double f = A(i, k) / A(k, k);
            if (f == 0.0) continue;
            for (std::size_t j = k; j < n; ++j) A(i, j) -= f * A(k, j);
            b[i] -= f * b[k];
        }
    }
    std::vector<double> x(n, 0.0);
    for (std::size_t ik = n; ik-- > 0;) {
        double s = b[ik];
        for (std::size_t j = ik + 1; j < n; ++j) s -= A(ik, j) * x[j];
        x[ik] = s / A(ik, ik);
    }
    return x;
}

namespace {

// Householder QR with column pivoting, in place. Returns the column
// permutation and leaves R in the upper triangle.
std::vector<std::size_t> qr_column_pivot(Matrix& A, std::vector<double>& rdiag) {
    const std::size_t m = A.rows, n = A.cols;
    std::vector<std::size_t> perm(n);
    for (std::size_t j = 0; j < n; ++j) perm[j] = j;
    std::vector<double> col_norm2(n, 0.0);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < m; ++i) col_norm2[j] += A(i, j) * A(i, j);

    const std::size_t steps = std::min(m, n);
    rdiag.assign(steps, 0.0);
    for (std::size_t k = 0; k < steps; ++k) {
        std::size_t piv = k;
        for (std::size_t j = k + 1; j < n; ++j)
            if (col_norm2[j] > col_norm2[piv]) piv = j;
        if (piv != k) {
            for (std::size_t i = 0; i < m; ++i) std::swap(A(i, piv), A(i, k));
            std::swap(col_norm2[piv], col_norm2[k]);
            std::swap(perm[piv], perm[k]);
        }
        double alpha = 0.0;
        for (std::size_t i = k; i < m; ++i) alpha += A(i, k) * A(i, k);
        alpha = std::sqrt(alpha);
        rdiag[k] = alpha;
        if (alpha == 0.0) continue;
        if (A(k, k) > 0.0) alpha = -alpha;
        // Householder vector v stored in column k below the diagonal.
        A(k, k) -= alpha;
        double vnorm2 = 0.0;
        for (std::size_t i = k; i < m; ++i) vnorm2 += A(i, k) * A(i, k);
        if (vnorm2 > 0.0) {
            for (std::size_t j = k + 1; j < n; ++j) {
                double s = 0.0;
                for (std::size_t i = k; i < m; ++i) s += A(i, k) * A(i, j);
                const double f = 2.0 * s / vnorm2;
                for (std::size_t i = k; i < m; ++i) A(i, j) -= f * A(i, k);
            }
        }
        A(k, k) = alpha;
        rdiag[k] = std::abs(alpha);
        for (std::size_t j = k + 1; j < n; ++j) {
            col_norm2[j] -= A(k, j) * A(k, j);
            if (col_norm2[j] < 0.0) col_norm2[j] = 0.0;
        }
    }
    return perm;
}

}  // namespace

std::size_t matrix_rank(Matrix A, double rel_tol) {
    if (A.rows == 0 || A.cols == 0) return 0;
    std::vector<double> rdiag;
    qr_column_pivot(A, rdiag);
    if (rdiag.empty() || rdiag[0] == 0.0) return 0;
    const double tol = rel_tol * rdiag[0];
    std::size_t r = 0;
    while (r < rdiag.size() && rdiag[r] > tol) ++r;
    return r;
}

std::optional<std::vector<double>> null_space_vector(Matrix A, double rel_tol) {
    const std::size_t n = A.cols;
    if (n == 0) return std::nullopt;
    // Row-reduce with partial pivoting, tracking pivot columns.
    double scale = 0.0;
    for (double v : A.a) scale = std::max(scale, std::abs(v));
    const double tol = rel_tol * std::max(1.0, scale);

    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < A.rows; ++col) {
        std::size_t piv = row;
        for (std::size_t i = row + 1; i < A.rows; ++i)
            if (std::abs(A(i, col)) > std::abs(A(piv, col))) piv = i;
        if (std::abs(A(piv, col)) <= tol) continue;
        if (piv != row)
            for (std::size_t j = 0; j < n; ++j) std::swap(A(piv, j), A(row, j));
        for (std::size_t i = 0; i < A.rows; ++i) {
            if (i == row) continue;
            const double f = A(i, col) / A(row, col);
            if (f == 0.0) continue;
            for (std::size_t j = col; j < n; ++j) A(i, j) -= f * A(row, j);
        }
        pivot_col.push_back(col);
        ++row;
    }
    if (pivot_col.size() == n) return std::nullopt;  // full column rank

    // Pick the first free column, set it to 1, back out the pivots.
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;
    std::size_t free_col = 0;
    while (free_col < n && is_pivot[free_col]) ++free_col;

    std::vector<double> x(n, 0.0);
    x[free_col] = 1.0;
    for (std::size_t r = 0; r < pivot_col.size(); ++r) {
        const std::size_t c = pivot_col[r];
        x[c] = -A(r, free_col) / A(r, c);
    }
    double amax = 0.0;
    for (double v : x) amax = std::max(amax, std::abs(v));
    if (amax > 0.0)
        for (double& v : x) v /= amax;
    return x;
}

std::vector<double> least_squares(const Matrix& A, const std::vector<double>& b,
                                  double rel_tol) {
    const std::size_t n = A.cols;
    // Normal equations G x = c with symmetric pivoting on the diagonal.
    Matrix G(n, n);
    std::vector<double> c(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < A.rows; ++k) s += A(k, i) * A(k, j);
            G(i, j) = s;
        }
        double s = 0.0;
        for (std::size_t k = 0; k < A.rows; ++k) s += A(k, i) * b[k];
        c[i] = s;
    }
    double dmax = 0.0;
    for (std::size_t i = 0; i < n; ++i) dmax = std::max(dmax, G(i, i));
    const double tol = rel_tol * std::max(1.0, dmax);

    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::vector<bool> eliminated(n, false);
    std::vector<std::size_t> pivots;
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t piv = n;
        double best = tol;
        for (std::size_t i = 0; i < n; ++i)
            if (!eliminated[i] && G(i, i) > best) { best = G(i, i); piv = i; }
        if (piv == n) break;
        eliminated[piv] = true;
        pivots.push_back(piv);
        for (std::size_t i = 0; i < n; ++i) {
            if (eliminated[i] || G(i, piv) == 0.0) continue;
            const double f = G(i, piv) / G(piv, piv);
            for (std::size_t j = 0; j < n; ++j) G(i, j) -= f * G(piv, j);
            c[i] -= f * c[piv];
        }
    }
    // Back-substitute over the pivot set in reverse order.
    std::vector<double> x(n, 0.0);
    for (std::size_t s = pivots.size(); s-- > 0;) {
        const std::size_t i = pivots[s];
        double v = c[i];
        for (std::size_t t = s + 1; t < pivots.size(); ++t)
            v -= G(i, pivots[t]) * x[pivots[t]];
        x[i] = v / G(i, i);
    }
    return x;
}

AffineProjection project_affine_hull(const std::vector<Point>& points, const Point& p) {
    const std::size_t k = points.size();
    const std::size_t d = p.size();
    AffineProjection out;
    if (k == 1) {
        out.point = points[0];
        out.coeffs = {1.0};
        return out;
    }
    Matrix B(d, k - 1);
    for (std::size_t j = 1; j < k; ++j)
        for (std::size_t i = 0; i < d; ++i) B(i, j - 1) = points[j][i] - points[0][i];
    std::vector<double> rhs(d);
    for (std::size_t i = 0; i < d; ++i) rhs[i] = p[i] - points[0][i];
    std::vector<double> beta = least_squares(B, rhs);

    out.point = points[0];
    out.coeffs.assign(k, 0.0);
    double sum = 0.0;
    for (std::size_t j = 1; j < k; ++j) {
        axpy(out.point, beta[j - 1], sub(points[j], points[0]));
        out.coeffs[j] = beta[j - 1];
        sum += beta[j - 1];
    }
    out.coeffs[0] = 1.0 - sum;
    return out;
}

bool affinely_independent(const std::vector<Point>& points, double rel_tol) {
    if (points.empty()) return false;
    const std::size_t m = points.size() - 1;
    if (m == 0) return true;
    const std::size_t d = points[0].size();
    if (m > d) return false;
    Matrix A(d, m);
    for (std::size_t j = 1; j <= m; ++j)
        for (std::size_t i = 0; i < d; ++i) A(i, j - 1) = points[j][i] - points[0][i];
    return matrix_rank(A, rel_tol) == m;
}

}  // namespace ballpark
