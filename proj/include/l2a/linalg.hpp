#pragma once

#include "l2a/errors.hpp"
#include "l2a/rational.hpp"

#include <optional>
#include <vector>

namespace l2a {

// Dense rational matrix, row major.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows, zeros(cols)) {}
    static Matrix identity(int n);
    static Matrix from_rows(int cols, const std::vector<RVec>& rows);
    static Matrix from_columns(int rows, const std::vector<RVec>& cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& operator()(int i, int j) { return a_[i][j]; }
    const Rational& operator()(int i, int j) const { return a_[i][j]; }
    const RVec& row(int i) const { return a_[i]; }
    RVec column(int j) const;
    bool is_zero() const;

    Matrix operator*(const Matrix& o) const;
    RVec operator*(const RVec& x) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix transpose() const;
    bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<RVec> a_;
};

// Reduced row echelon form R = T * A with smallest-index pivots.
struct Rref {
    Matrix r;
    Matrix transform;
    std::vector<int> pivots;  // pivot column of row i, i < rank
    int rank() const { return static_cast<int>(pivots.size()); }
};

Rref rref(const Matrix& a);
int rank(const Matrix& a);
std::optional<Matrix> inverse(const Matrix& a);

// Basis of {x : A x = 0}, one vector per free column.
std::vector<RVec> nullspace(const Matrix& a);

// Particular solution of A x = b with free variables set to zero.
std::optional<RVec> solve(const Matrix& a, const RVec& b);

// Non-pivot coordinates of the reduced echelon form of the given row vectors:
// the standard basis vectors at these positions span a complement.
std::vector<int> complement_coordinates(int n, const std::vector<RVec>& span);

// Solve A x = b for b over any module T (needs +=, -, scaled, is_zero) using a
// precomputed reduction. Returns nullopt if inconsistent.
template <class T>
std::optional<std::vector<T>> solve_reduced(const Rref& red, const std::vector<T>& b, const T& zero) {
    const Matrix& t = red.transform;
    std::vector<T> tb(t.rows(), zero);
    for (int i = 0; i < t.rows(); ++i)
        for (int j = 0; j < t.cols(); ++j)
            if (sgn(t(i, j)) != 0) tb[i] += b[j].scaled(t(i, j));
    for (int i = red.rank(); i < t.rows(); ++i)
        if (!tb[i].is_zero()) return std::nullopt;
    std::vector<T> x(red.r.cols(), zero);
    for (int i = 0; i < red.rank(); ++i) x[red.pivots[i]] = tb[i];
    return x;
}

}  // namespace l2a
