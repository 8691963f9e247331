#include "swk/snf.hpp"

#include <algorithm>
#include <stdexcept>

namespace swk {

std::vector<Int> SnfResult::diagonal() const {
    std::vector<Int> out;
    size_t n = std::min(d.size(), d.empty() ? size_t{0} : d[0].size());
    for (size_t i = 0; i < n; ++i) out.push_back(d[i][i]);
    return out;
}

Matrix identity_matrix(size_t n) {
    Matrix m(n, std::vector<Int>(n, 0));
    for (size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.empty() || b.empty()) return {};
    size_t r = a.size(), k = a[0].size(), c = b[0].size();
    if (k != b.size()) throw std::invalid_argument("matmul: shape mismatch");
    Matrix out(r, std::vector<Int>(c, 0));
    for (size_t i = 0; i < r; ++i)
        for (size_t t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (size_t j = 0; j < c; ++j) out[i][j] += a[i][t] * b[t][j];
        }
    return out;
}

// Bareiss fraction-free elimination.
Int det(Matrix m) {
    size_t n = m.size();
    if (n == 0) return 1;
    Int sign = 1, prev = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

namespace {

struct Worker {
    Matrix d, u, v;
    size_t rows, cols;

    explicit Worker(const Matrix& m)
        : d(m),
          rows(m.size()),
          cols(m.empty() ? 0 : m[0].size()) {
        u = identity_matrix(rows);
        v = identity_matrix(cols);
    }

    // row ops mirrored into u, column ops into v
    void row_swap(size_t a, size_t b) {
        std::swap(d[a], d[b]);
        std::swap(u[a], u[b]);
    }
    void col_swap(size_t a, size_t b) {
        for (size_t i = 0; i < rows; ++i) std::swap(d[i][a], d[i][b]);
        for (size_t i = 0; i < cols; ++i) std::swap(v[i][a], v[i][b]);
    }
    void row_add(size_t dst, size_t src, const Int& q) {  // row dst += q*src
        for (size_t j = 0; j < cols; ++j) d[dst][j] += q * d[src][j];
        for (size_t j = 0; j < rows; ++j) u[dst][j] += q * u[src][j];
    }
    void col_add(size_t dst, size_t src, const Int& q) {  // col dst += q*src
        for (size_t i = 0; i < rows; ++i) d[i][dst] += q * d[i][src];
        for (size_t i = 0; i < cols; ++i) v[i][dst] += q * v[i][src];
    }
    void row_negate(size_t r) {
        for (size_t j = 0; j < cols; ++j) d[r][j] = -d[r][j];
        for (size_t j = 0; j < rows; ++j) u[r][j] = -u[r][j];
    }

    // smallest nonzero |entry| in the trailing block starting at t
    bool find_pivot(size_t t, size_t& pi, size_t& pj) {
        bool found = false;
        Int best = 0;
        for (size_t i = t; i < rows; ++i)
            for (size_t j = t; j < cols; ++j) {
                if (d[i][j] == 0) continue;
                Int a = abs(d[i][j]);
                if (!found || a < best) {
                    found = true;
                    best = a;
                    pi = i;
                    pj = j;
                }
            }
        return found;
    }

    void diagonalize(size_t from) {
        for (size_t t = from; t < rows && t < cols; ++t) {
            size_t pi, pj;
            if (!find_pivot(t, pi, pj)) break;
            row_swap(t, pi);
            col_swap(t, pj);
            // clear row and column t; restart if a remainder survives
            bool dirty = true;
            while (dirty) {
                dirty = false;
                for (size_t i = t + 1; i < rows; ++i) {
                    if (d[i][t] == 0) continue;
                    Int q = d[i][t] / d[t][t];
                    row_add(i, t, -q);
                    if (d[i][t] != 0) {  // remainder: smaller pivot available
                        row_swap(t, i);
                        dirty = true;
                    }
                }
                for (size_t j = t + 1; j < cols; ++j) {
                    if (d[t][j] == 0) continue;
                    Int q = d[t][j] / d[t][t];
                    col_add(j, t, -q);
                    if (d[t][j] != 0) {
                        col_swap(t, j);
                        dirty = true;
                    }
                }
            }
            if (d[t][t] < 0) row_negate(t);
        }
    }

    void run() {
        diagonalize(0);
        // enforce the divisibility chain d_i | d_{i+1}: fold the offending
        // later entry into column i and re-diagonalize (each pass strictly
        // shrinks d_i toward the gcd, so this terminates)
        size_t n = std::min(rows, cols);
        for (bool fixed = false; !fixed;) {
            fixed = true;
            for (size_t i = 0; i + 1 < n; ++i) {
                const Int& a = d[i][i];
                const Int& b = d[i + 1][i + 1];
                if (a == 0 || b % a == 0) continue;
                col_add(i, i + 1, 1);
                diagonalize(i);
                fixed = false;
                break;
            }
        }
    }
};

bool is_diagonal_chain(const Matrix& d) {
    size_t rows = d.size(), cols = d.empty() ? 0 : d[0].size();
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j)
            if (i != j && d[i][j] != 0) return false;
    size_t n = std::min(rows, cols);
    for (size_t i = 0; i < n; ++i)
        if (d[i][i] < 0) return false;
    for (size_t i = 0; i + 1 < n; ++i) {
        if (d[i][i] == 0 && d[i + 1][i + 1] != 0) return false;
        if (d[i][i] != 0 && d[i + 1][i + 1] % d[i][i] != 0) return false;
    }
    return true;
}

}  // namespace

SnfResult smith_normal_form(const Matrix& m) {
    for (const auto& row : m)
        if (row.size() != (m.empty() ? 0 : m[0].size()))
            throw std::invalid_argument("smith_normal_form: ragged matrix");
    Worker w(m);
    w.run();
    SnfResult r{w.d, w.u, w.v};
    if (!snf_certified(m, r))
        throw std::logic_error("smith_normal_form: certificate failed");
    return r;
}

bool snf_certified(const Matrix& m, const SnfResult& r) {
    size_t rows = m.size(), cols = m.empty() ? 0 : m[0].size();
    if (r.u.size() != rows || r.v.size() != cols) return false;
    if (!is_diagonal_chain(r.d)) return false;
    Int du = det(r.u), dv = det(r.v);
    if (du != 1 && du != -1) return false;
    if (dv != 1 && dv != -1) return false;
    Matrix umv = matmul(matmul(r.u, m), r.v);
    if (rows == 0 || cols == 0) return r.d.size() == rows;
    return umv == r.d;
}

}  // namespace swk
