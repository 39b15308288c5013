#include "l2a/linalg.hpp"

namespace l2a {

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(int cols, const std::vector<RVec>& rows) {
    Matrix m(static_cast<int>(rows.size()), cols);
    for (int i = 0; i < m.rows_; ++i) {
        if (static_cast<int>(rows[i].size()) != cols) throw InputError("matrix row has wrong length");
        m.a_[i] = rows[i];
    }
    return m;
}

Matrix Matrix::from_columns(int rows, const std::vector<RVec>& cols) {
    Matrix m(rows, static_cast<int>(cols.size()));
    for (int j = 0; j < m.cols_; ++j) {
        if (static_cast<int>(cols[j].size()) != rows) throw InputError("matrix column has wrong length");
        for (int i = 0; i < rows; ++i) m.a_[i][j] = cols[j][i];
    }
    return m;
}

RVec Matrix::column(int j) const {
    RVec c(rows_);
    for (int i = 0; i < rows_; ++i) c[i] = a_[i][j];
    return c;
}

bool Matrix::is_zero() const {
    for (const auto& r : a_)
        if (!l2a::is_zero(r)) return false;
    return true;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw PreconditionError("matrix product dimension mismatch");
    Matrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            if (sgn(a_[i][k]) == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r.a_[i][j] += a_[i][k] * o.a_[k][j];
        }
    return r;
}

RVec Matrix::operator*(const RVec& x) const {
    if (static_cast<int>(x.size()) != cols_) throw PreconditionError("matrix-vector dimension mismatch");
    RVec r = zeros(rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (sgn(x[j]) != 0) r[i] += a_[i][j] * x[j];
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw PreconditionError("matrix sum dimension mismatch");
    Matrix r = *this;
    for (int i = 0; i < rows_; ++i) r.a_[i] = add(a_[i], o.a_[i]);
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw PreconditionError("matrix difference dimension mismatch");
    Matrix r = *this;
    for (int i = 0; i < rows_; ++i) r.a_[i] = sub(a_[i], o.a_[i]);
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.a_[j][i] = a_[i][j];
    return r;
}

Rref rref(const Matrix& a) {
    Rref out{a, Matrix::identity(a.rows()), {}};
    Matrix& r = out.r;
    Matrix& t = out.transform;
    const int n = r.rows(), m = r.cols();
    int row = 0;
    for (int col = 0; col < m && row < n; ++col) {
        int piv = -1;
        for (int i = row; i < n; ++i)
            if (sgn(r(i, col)) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != row) {
            for (int j = 0; j < m; ++j) std::swap(r(piv, j), r(row, j));
            for (int j = 0; j < n; ++j) std::swap(t(piv, j), t(row, j));
        }
        Rational inv = 1 / r(row, col);
        for (int j = 0; j < m; ++j) r(row, j) *= inv;
        for (int j = 0; j < n; ++j) t(row, j) *= inv;
        for (int i = 0; i < n; ++i) {
            if (i == row || sgn(r(i, col)) == 0) continue;
            Rational f = r(i, col);
            for (int j = 0; j < m; ++j) r(i, j) -= f * r(row, j);
            for (int j = 0; j < n; ++j) t(i, j) -= f * t(row, j);
        }
        out.pivots.push_back(col);
        ++row;
    }
    return out;
}

int rank(const Matrix& a) { return rref(a).rank(); }

std::optional<Matrix> inverse(const Matrix& a) {
    if (a.rows() != a.cols()) throw PreconditionError("inverse of a non-square matrix");
    Rref red = rref(a);
    if (red.rank() != a.rows()) return std::nullopt;
    return red.transform;
}

std::vector<RVec> nullspace(const Matrix& a) {
    Rref red = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (int p : red.pivots) is_pivot[p] = true;
    std::vector<RVec> basis;
    for (int f = 0; f < a.cols(); ++f) {
        if (is_pivot[f]) continue;
        RVec v = zeros(a.cols());
        v[f] = 1;
        for (int i = 0; i < red.rank(); ++i) v[red.pivots[i]] = -red.r(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<RVec> solve(const Matrix& a, const RVec& b) {
    if (static_cast<int>(b.size()) != a.rows()) throw PreconditionError("right-hand side has wrong length");
    Rref red = rref(a);
    RVec tb = red.transform * b;
    for (int i = red.rank(); i < a.rows(); ++i)
        if (sgn(tb[i]) != 0) return std::nullopt;
    RVec x = zeros(a.cols());
    for (int i = 0; i < red.rank(); ++i) x[red.pivots[i]] = tb[i];
    return x;
}

std::vector<int> complement_coordinates(int n, const std::vector<RVec>& span) {
    Rref red = rref(Matrix::from_rows(n, span));
    std::vector<bool> is_pivot(n, false);
    for (int p : red.pivots) is_pivot[p] = true;
    std::vector<int> out;
    for (int i = 0; i < n; ++i)
        if (!is_pivot[i]) out.push_back(i);
    return out;
}

}  // namespace l2a
