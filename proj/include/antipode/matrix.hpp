#pragma once

#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

#include "antipode/rational.hpp"

namespace antipode {

// Dense row-major matrix of exact rationals.
class RatMat {
public:
    RatMat() = default;
    RatMat(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    }
    RatMat(std::initializer_list<std::initializer_list<long>> init);

    static RatMat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& at(int r, int c) { return e_[static_cast<size_t>(r) * cols_ + c]; }
    const Rat& at(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }

    std::span<const Rat> row(int r) const { return {&e_[static_cast<size_t>(r) * cols_], static_cast<size_t>(cols_)}; }

    RatMat transpose() const;
    RatMat scaled(const Rat& f) const;

    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric() const;
    bool is_integral() const;

    bool operator==(const RatMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rat> e_;
};

RatMat operator*(const RatMat& a, const RatMat& b);
RatMat operator+(const RatMat& a, const RatMat& b);
RatMat operator-(const RatMat& a, const RatMat& b);

// x (1 x k) times a (k x n).
std::vector<Rat> row_times(std::span<const Rat> x, const RatMat& a);

// Integer matrix, used where the algorithms are genuinely integral (HNF,
// kernels, lattice bases).
class IntMat {
public:
    IntMat() = default;
    IntMat(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    }
    IntMat(std::initializer_list<std::initializer_list<long>> init);

    static IntMat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int r, int c) { return e_[static_cast<size_t>(r) * cols_ + c]; }
    const Int& at(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }

    std::span<const Int> row(int r) const { return {&e_[static_cast<size_t>(r) * cols_], static_cast<size_t>(cols_)}; }

    IntMat transpose() const;
    RatMat to_rat() const;

    // Throws unless every entry is an integer.
    static IntMat from_rat(const RatMat& m);

    void swap_rows(int a, int b);
    void negate_row(int r);
    // row[a] -= q * row[b]
    void submul_row(int a, int b, const Int& q);

    bool operator==(const IntMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Int> e_;
};

IntMat operator*(const IntMat& a, const IntMat& b);

}  // namespace antipode
