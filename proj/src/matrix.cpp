#include "antipode/matrix.hpp"

namespace antipode {

RatMat::RatMat(std::initializer_list<std::initializer_list<long>> init) {
    rows_ = static_cast<int>(init.size());
    cols_ = rows_ ? static_cast<int>(init.begin()->size()) : 0;
    e_.reserve(static_cast<size_t>(rows_) * cols_);
    for (const auto& row : init) {
        if (static_cast<int>(row.size()) != cols_) throw std::invalid_argument("ragged initializer");
        for (long v : row) e_.emplace_back(v);
    }
}

RatMat RatMat::identity(int n) {
    RatMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMat RatMat::transpose() const {
    RatMat t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

RatMat RatMat::scaled(const Rat& f) const {
    RatMat m(rows_, cols_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) m.at(r, c) = at(r, c) * f;
    return m;
}

bool RatMat::is_symmetric() const {
    if (!is_square()) return false;
    for (int r = 0; r < rows_; ++r)
        for (int c = r + 1; c < cols_; ++c)
            if (at(r, c) != at(c, r)) return false;
    return true;
}

bool RatMat::is_integral() const {
    for (const Rat& x : e_)
        if (x.get_den() != 1) return false;
    return true;
}

RatMat operator*(const RatMat& a, const RatMat& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product dimension mismatch");
    RatMat p(a.rows(), b.cols());
    Rat acc;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) {
            acc = 0;
            for (int k = 0; k < a.cols(); ++k) acc += a.at(i, k) * b.at(k, j);
            p.at(i, j) = acc;
        }
    return p;
}

RatMat operator+(const RatMat& a, const RatMat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix sum dimension mismatch");
    RatMat s(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) s.at(i, j) = a.at(i, j) + b.at(i, j);
    return s;
}

RatMat operator-(const RatMat& a, const RatMat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix difference dimension mismatch");
    RatMat s(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) s.at(i, j) = a.at(i, j) - b.at(i, j);
    return s;
}

std::vector<Rat> row_times(std::span<const Rat> x, const RatMat& a) {
    if (static_cast<int>(x.size()) != a.rows()) throw std::invalid_argument("row product dimension mismatch");
    std::vector<Rat> out(a.cols());
    for (int j = 0; j < a.cols(); ++j) {
        Rat acc = 0;
        for (int k = 0; k < a.rows(); ++k) acc += x[k] * a.at(k, j);
        out[j] = acc;
    }
    return out;
}

IntMat::IntMat(std::initializer_list<std::initializer_list<long>> init) {
    rows_ = static_cast<int>(init.size());
    cols_ = rows_ ? static_cast<int>(init.begin()->size()) : 0;
    e_.reserve(static_cast<size_t>(rows_) * cols_);
    for (const auto& row : init) {
        if (static_cast<int>(row.size()) != cols_) throw std::invalid_argument("ragged initializer");
        for (long v : row) e_.emplace_back(v);
    }
}

IntMat IntMat::identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMat IntMat::transpose() const {
    IntMat t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

RatMat IntMat::to_rat() const {
    RatMat m(rows_, cols_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) m.at(r, c) = Rat(at(r, c));
    return m;
}

IntMat IntMat::from_rat(const RatMat& m) {
    if (!m.is_integral()) throw std::invalid_argument("matrix has non-integer entries");
    IntMat o(m.rows(), m.cols());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) o.at(r, c) = m.at(r, c).get_num();
    return o;
}

void IntMat::swap_rows(int a, int b) {
    if (a == b) return;
    for (int c = 0; c < cols_; ++c) std::swap(at(a, c), at(b, c));
}

void IntMat::negate_row(int r) {
    for (int c = 0; c < cols_; ++c) at(r, c) = -at(r, c);
}

void IntMat::submul_row(int a, int b, const Int& q) {
    if (q == 0) return;
    for (int c = 0; c < cols_; ++c) at(a, c) -= q * at(b, c);
}

IntMat operator*(const IntMat& a, const IntMat& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product dimension mismatch");
    IntMat p(a.rows(), b.cols());
    Int acc;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) {
            acc = 0;
            for (int k = 0; k < a.cols(); ++k) acc += a.at(i, k) * b.at(k, j);
            p.at(i, j) = acc;
        }
    return p;
}

}  // namespace antipode
