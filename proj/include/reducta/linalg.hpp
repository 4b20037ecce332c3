#pragma once

#include "reducta/coefficient.hpp"

#include <optional>
#include <vector>

namespace reducta {

// Dense matrix over the coefficient field.
class CoeffMatrix {
  public:
    CoeffMatrix() : rows_(0), cols_(0), nvars_(0) {}
    CoeffMatrix(int rows, int cols, int nvars)
        : rows_(rows), cols_(cols), nvars_(nvars),
          data_((size_t)rows * cols, Coefficient::zero(nvars)) {}

    static CoeffMatrix identity(int m, int nvars);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int nvars() const { return nvars_; }
    Coefficient& at(int r, int c) { return data_[(size_t)r * cols_ + c]; }
    const Coefficient& at(int r, int c) const { return data_[(size_t)r * cols_ + c]; }

    CoeffMatrix operator*(const CoeffMatrix& o) const;
    CoeffMatrix operator-(const CoeffMatrix& o) const;
    bool operator==(const CoeffMatrix& o) const;
    bool is_identity() const;

    std::string str() const;

  private:
    int rows_, cols_, nvars_;
    std::vector<Coefficient> data_;
};

// Cauchy machinery: entries 1/(x_i + y_j) for node lists x, y.
CoeffMatrix cauchy_matrix(const std::vector<Coefficient>& x, const std::vector<Coefficient>& y);
// Closed-form determinant prod_{i<j}(x_i-x_j)(y_i-y_j) / prod_{i,j}(x_i+y_j).
Coefficient cauchy_det(const std::vector<Coefficient>& x, const std::vector<Coefficient>& y);
// Closed-form inverse.
CoeffMatrix cauchy_inverse(const std::vector<Coefficient>& x, const std::vector<Coefficient>& y);

// Specialization x_i = theta_i, y_j = -theta_j + 1: entries 1/(theta_ij + 1)
// over the index set 1..m.
CoeffMatrix bacd_matrix(int m, int nvars);
Coefficient bacd_det(int m, int nvars);     // prod_{i<j} theta_ij^2/(theta_ij^2 - 1)
CoeffMatrix bacd_inverse(int m, int nvars); // the paper's explicit inverse

// Determinant by fraction-free elimination (Bareiss on cleared rows).
Coefficient det(const CoeffMatrix& a);

// Solves A X = B exactly for square nonsingular A; pivoting prefers entries
// whose denominators stay inside the admissible linear-factor set.
CoeffMatrix solve(const CoeffMatrix& a, const CoeffMatrix& b);

// Gauss-Jordan over the coefficient field itself. Faster than the
// fraction-free route when the entries keep factored linear denominators.
CoeffMatrix solve_field(const CoeffMatrix& a, const CoeffMatrix& b);

// Gaussian elimination for a possibly rectangular system A x = b; returns a
// solution or nullopt when inconsistent. Free variables are set to 0.
std::optional<std::vector<Coefficient>> solve_consistent(const CoeffMatrix& a,
                                                         const std::vector<Coefficient>& b);

} // namespace reducta
