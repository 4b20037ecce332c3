#include "reducta/linalg.hpp"

#include <sstream>

namespace reducta {

CoeffMatrix CoeffMatrix::identity(int m, int nvars) {
    CoeffMatrix r(m, m, nvars);
    for (int k = 0; k < m; ++k) r.at(k, k) = Coefficient::one(nvars);
    return r;
}

CoeffMatrix CoeffMatrix::operator*(const CoeffMatrix& o) const {
    if (cols_ != o.rows_) throw Error("matrix shape mismatch");
    CoeffMatrix r(rows_, o.cols_, nvars_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < o.cols_; ++j) {
            Coefficient acc = Coefficient::zero(nvars_);
            for (int k = 0; k < cols_; ++k) acc += at(i, k) * o.at(k, j);
            r.at(i, j) = acc;
        }
    return r;
}

CoeffMatrix CoeffMatrix::operator-(const CoeffMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix shape mismatch");
    CoeffMatrix r(rows_, cols_, nvars_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j) - o.at(i, j);
    return r;
}

bool CoeffMatrix::operator==(const CoeffMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t k = 0; k < data_.size(); ++k)
        if (!(data_[k] == o.data_[k])) return false;
    return true;
}

bool CoeffMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    return *this == identity(rows_, nvars_);
}

std::string CoeffMatrix::str() const {
    std::ostringstream out;
    for (int i = 0; i < rows_; ++i) {
        out << "[ ";
        for (int j = 0; j < cols_; ++j) out << at(i, j).str() << (j + 1 < cols_ ? ", " : " ");
        out << "]\n";
    }
    return out.str();
}

CoeffMatrix cauchy_matrix(const std::vector<Coefficient>& x, const std::vector<Coefficient>& y) {
    if (x.empty() || x.size() != y.size()) throw Error("cauchy nodes must be nonempty, equal length");
    int m = (int)x.size(), nv = x[0].nvars();
    CoeffMatrix r(m, m, nv);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            Coefficient s = x[i] + y[j];
            if (s.is_zero()) throw ZeroDenominator();
            r.at(i, j) = Coefficient::one(nv) / s;
        }
    return r;
}

Coefficient cauchy_det(const std::vector<Coefficient>& x, const std::vector<Coefficient>& y) {
    if (x.empty() || x.size() != y.size()) throw Error("cauchy nodes must be nonempty, equal length");
    int m = (int)x.size(), nv = x[0].nvars();
    Coefficient num = Coefficient::one(nv), den = Coefficient::one(nv);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) num *= (x[i] - x[j]) * (y[i] - y[j]);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            Coefficient s = x[i] + y[j];
            if (s.is_zero()) throw ZeroDenominator();
            den *= s;
        }
    return num / den;
}

CoeffMatrix cauchy_inverse(const std::vector<Coefficient>& x, const std::vector<Coefficient>& y) {
    if (x.empty() || x.size() != y.size()) throw Error("cauchy nodes must be nonempty, equal length");
    int m = (int)x.size(), nv = x[0].nvars();
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if ((x[i] - x[j]).is_zero() || (y[i] - y[j]).is_zero()) throw DegenerateNodes();
    CoeffMatrix r(m, m, nv);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            // (A^{-1})_ij = (x_j + y_i) prod_{a != j} (x_a+y_i)/(x_a-x_j)
            //                           prod_{b != i} (y_b+x_j)/(y_b-y_i)
            Coefficient v = x[j] + y[i];
            for (int a = 0; a < m; ++a)
                if (a != j) v *= (x[a] + y[i]) / (x[a] - x[j]);
            for (int b = 0; b < m; ++b)
                if (b != i) v *= (y[b] + x[j]) / (y[b] - y[i]);
            r.at(i, j) = v;
        }
    return r;
}

CoeffMatrix bacd_matrix(int m, int nvars) {
    CoeffMatrix r(m, m, nvars);
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j)
            r.at(i - 1, j - 1) =
                i == j ? Coefficient::one(nvars) : Coefficient::inv_linear(nvars, i, j, 1);
    return r;
}

Coefficient bacd_det(int m, int nvars) {
    Coefficient r = Coefficient::one(nvars);
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) {
            Coefficient t = Coefficient::theta_diff(nvars, i, j);
            r *= (t * t) / (t * t - Coefficient::one(nvars));
        }
    return r;
}

CoeffMatrix bacd_inverse(int m, int nvars) {
    CoeffMatrix r(m, m, nvars);
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j) {
            // -(theta_ij - 1)^{-1} prod_{a != i} (theta_ia - 1)/theta_ia
            //                      prod_{b != j} (theta_jb + 1)/theta_jb
            // (the i == j entry starts from -1/(0 - 1) = 1)
            Coefficient v = i == j ? Coefficient::one(nvars)
                                   : -Coefficient::inv_linear(nvars, i, j, -1);
            for (int a = 1; a <= m; ++a)
                if (a != i)
                    v *= (Coefficient::theta_diff(nvars, i, a) - Coefficient::one(nvars)) *
                         Coefficient::inv_linear(nvars, i, a, 0);
            for (int b = 1; b <= m; ++b)
                if (b != j)
                    v *= (Coefficient::theta_diff(nvars, j, b) + Coefficient::one(nvars)) *
                         Coefficient::inv_linear(nvars, j, b, 0);
            r.at(i - 1, j - 1) = v;
        }
    return r;
}

namespace {

// Clears the denominators of one row; returns the polynomial row and keeps the
// common multiplier in mult.
std::vector<Polynomial> clear_row(const CoeffMatrix& a, int row, int cols, Coefficient& mult) {
    int nv = a.nvars();
    // lcm of the linear denominator parts, times the product of general parts
    std::vector<std::pair<LinearForm, int>> lcm;
    Polynomial gen(nv, Rat(1));
    for (int c = 0; c < cols; ++c) {
        const Coefficient& x = a.at(row, c);
        for (const auto& [f, m] : x.den_linear()) {
            auto it = std::find_if(lcm.begin(), lcm.end(), [&](const auto& kv) { return kv.first == f; });
            if (it == lcm.end())
                lcm.push_back({f, m});
            else
                it->second = std::max(it->second, m);
        }
        if (!x.den_general().is_one()) gen *= x.den_general();
    }
    Coefficient m = Coefficient(gen);
    for (const auto& [f, k] : lcm)
        for (int t = 0; t < k; ++t) m *= Coefficient::from_linear_form(nv, f);
    mult = m;
    std::vector<Polynomial> out;
    out.reserve(cols);
    for (int c = 0; c < cols; ++c) {
        Coefficient v = a.at(row, c) * m;
        if (!v.den_linear().empty() || !v.den_general().is_one())
            throw Error("row clearing failed to produce polynomials");
        out.push_back(v.num());
    }
    return out;
}

int pivot_score(const Polynomial& p) { return p.degree() * 1000 + (int)p.term_count(); }

} // namespace

Coefficient det(const CoeffMatrix& a) {
    if (a.rows() != a.cols()) throw Error("determinant of a non-square matrix");
    int m = a.rows(), nv = a.nvars();
    if (m == 0) return Coefficient::one(nv);
    std::vector<std::vector<Polynomial>> w(m);
    Coefficient denom = Coefficient::one(nv);
    for (int r = 0; r < m; ++r) {
        Coefficient mult;
        w[r] = clear_row(a, r, m, mult);
        denom *= mult;
    }
    // Bareiss fraction-free elimination.
    Polynomial prev(nv, Rat(1));
    int sign = 1;
    for (int k = 0; k < m - 1; ++k) {
        int best = -1;
        for (int r = k; r < m; ++r)
            if (!w[r][k].is_zero() && (best < 0 || pivot_score(w[r][k]) < pivot_score(w[best][k])))
                best = r;
        if (best < 0) return Coefficient::zero(nv);
        if (best != k) {
            std::swap(w[best], w[k]);
            sign = -sign;
        }
        for (int i = k + 1; i < m; ++i) {
            for (int j = k + 1; j < m; ++j) {
                Polynomial t = w[k][k] * w[i][j] - w[i][k] * w[k][j];
                auto q = t.divide_exact(prev);
                if (!q) throw Error("bareiss exact division failed");
                w[i][j] = std::move(*q);
            }
            w[i][k] = Polynomial(nv);
        }
        prev = w[k][k];
    }
    Coefficient result = Coefficient(w[m - 1][m - 1]) / denom;
    return sign < 0 ? -result : result;
}

CoeffMatrix solve(const CoeffMatrix& a, const CoeffMatrix& b) {
    if (a.rows() != a.cols() || a.rows() != b.rows()) throw Error("solve shape mismatch");
    int m = a.rows(), w = b.cols(), nv = a.nvars();
    // Work on the cleared augmented matrix [A | B].
    CoeffMatrix aug(m, m + w, nv);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) aug.at(i, j) = a.at(i, j);
        for (int j = 0; j < w; ++j) aug.at(i, m + j) = b.at(i, j);
    }
    std::vector<std::vector<Polynomial>> rowsP(m);
    for (int r = 0; r < m; ++r) {
        Coefficient mult;
        rowsP[r] = clear_row(aug, r, m + w, mult);
    }
    Polynomial prev(nv, Rat(1));
    for (int k = 0; k < m; ++k) {
        int best = -1;
        for (int r = k; r < m; ++r)
            if (!rowsP[r][k].is_zero() && (best < 0 || pivot_score(rowsP[r][k]) < pivot_score(rowsP[best][k])))
                best = r;
        if (best < 0) throw Singular();
        if (best != k) std::swap(rowsP[best], rowsP[k]);
        for (int i = k + 1; i < m; ++i) {
            for (int j = k + 1; j < m + w; ++j) {
                Polynomial t = rowsP[k][k] * rowsP[i][j] - rowsP[i][k] * rowsP[k][j];
                auto q = t.divide_exact(prev);
                if (!q) throw Error("bareiss exact division failed");
                rowsP[i][j] = std::move(*q);
            }
            rowsP[i][k] = Polynomial(nv);
        }
        prev = rowsP[k][k];
    }
    // Back substitution over the coefficient field.
    CoeffMatrix x(m, w, nv);
    for (int col = 0; col < w; ++col)
        for (int i = m - 1; i >= 0; --i) {
            Coefficient rhs = Coefficient(rowsP[i][m + col]);
            for (int j = i + 1; j < m; ++j) rhs -= Coefficient(rowsP[i][j]) * x.at(j, col);
            x.at(i, col) = rhs / Coefficient(rowsP[i][i]);
        }
    return x;
}

CoeffMatrix solve_field(const CoeffMatrix& a, const CoeffMatrix& b) {
    if (a.rows() != a.cols() || a.rows() != b.rows()) throw Error("solve shape mismatch");
    int m = a.rows(), w = b.cols(), nv = a.nvars();
    std::vector<std::vector<Coefficient>> rows(m, std::vector<Coefficient>(m + w, Coefficient::zero(nv)));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) rows[i][j] = a.at(i, j);
        for (int j = 0; j < w; ++j) rows[i][m + j] = b.at(i, j);
    }
    for (int k = 0; k < m; ++k) {
        // prefer pivots that keep the denominators inside the linear-form set
        int best = -1;
        long best_score = 0;
        for (int r = k; r < m; ++r) {
            if (rows[r][k].is_zero()) continue;
            long score = (rows[r][k].den_general().is_one() ? 0 : 1000000) +
                         (long)rows[r][k].num().term_count() * 100 + rows[r][k].num().degree();
            if (best < 0 || score < best_score) {
                best = r;
                best_score = score;
            }
        }
        if (best < 0) throw Singular();
        std::swap(rows[best], rows[k]);
        Coefficient inv = Coefficient::one(nv) / rows[k][k];
        for (int j = k; j < m + w; ++j) rows[k][j] *= inv;
        for (int r = 0; r < m; ++r) {
            if (r == k || rows[r][k].is_zero()) continue;
            Coefficient f = rows[r][k];
            for (int j = k; j < m + w; ++j) rows[r][j] -= f * rows[k][j];
        }
    }
    CoeffMatrix x(m, w, nv);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < w; ++j) x.at(i, j) = rows[i][m + j];
    return x;
}

std::optional<std::vector<Coefficient>> solve_consistent(const CoeffMatrix& a,
                                                         const std::vector<Coefficient>& b) {
    int rows = a.rows(), cols = a.cols(), nv = a.nvars();
    if ((int)b.size() != rows) throw Error("solve shape mismatch");
    // Plain fraction Gaussian elimination; the systems here are tiny.
    std::vector<std::vector<Coefficient>> w(rows, std::vector<Coefficient>(cols + 1, Coefficient::zero(nv)));
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) w[i][j] = a.at(i, j);
        w[i][cols] = b[i];
    }
    std::vector<int> pivot_col(rows, -1);
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int best = -1;
        for (int r = rank; r < rows; ++r)
            if (!w[r][c].is_zero()) {
                best = r;
                break;
            }
        if (best < 0) continue;
        std::swap(w[best], w[rank]);
        Coefficient inv = Coefficient::one(nv) / w[rank][c];
        for (int j = c; j <= cols; ++j) w[rank][j] *= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == rank || w[r][c].is_zero()) continue;
            Coefficient f = w[r][c];
            for (int j = c; j <= cols; ++j) w[r][j] -= f * w[rank][j];
        }
        pivot_col[rank] = c;
        ++rank;
    }
    for (int r = rank; r < rows; ++r)
        if (!w[r][cols].is_zero()) return std::nullopt;
    std::vector<Coefficient> x(cols, Coefficient::zero(nv));
    for (int r = 0; r < rank; ++r) x[pivot_col[r]] = w[r][cols];
    return x;
}

} // namespace reducta
