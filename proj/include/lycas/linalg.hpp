#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lycas/rational.hpp"

namespace lycas {

using Vec = std::vector<Rat>;

bool is_zero(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Rat& c, const Vec& v);
Vec zero_vec(int n);
Vec unit_vec(int n, int i);

// Dense matrix over Rat, row-major. A LinearMap V -> W with
// dim V = d and dim W = c is stored as a c x d matrix acting by
// left multiplication on column vectors.
class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {}

    static Mat identity(int n);
    static Mat from_rows(const std::vector<Vec>& rows);
    static Mat zero(int rows, int cols) { return Mat(rows, cols); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& operator()(int r, int c) { return e_[static_cast<size_t>(r) * cols_ + c]; }
    const Rat& operator()(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }

    Vec row(int r) const;
    Vec col(int c) const;
    void set_row(int r, const Vec& v);
    void set_col(int c, const Vec& v);

    bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }
    bool is_zero() const;

    Mat transpose() const;
    Rat trace() const;

    // Row-major flattening, used to treat End(V) as a vector space.
    Vec flatten() const;
    static Mat unflatten(const Vec& v, int rows, int cols);

    std::string str() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rat> e_;
};

using LinearMap = Mat;

Mat operator+(const Mat& a, const Mat& b);
Mat operator-(const Mat& a, const Mat& b);
Mat operator*(const Mat& a, const Mat& b);
Mat operator*(const Rat& c, const Mat& a);
Vec mul(const Mat& a, const Vec& x);
Mat commutator(const Mat& a, const Mat& b);

Mat hstack(const Mat& a, const Mat& b);
Mat vstack(const Mat& a, const Mat& b);
Mat take_cols(const Mat& a, const std::vector<int>& idx);

struct Echelon {
    Mat mat;                  // reduced row echelon form, zero rows dropped
    std::vector<int> pivots;  // pivot column of each surviving row
    int rank = 0;
};

Echelon rref(const Mat& a);

// Solves a * x = b; empty when b is not in the column space.
std::optional<Vec> solve(const Mat& a, const Vec& b);

// Solves a * X = B columnwise; empty when any column fails.
std::optional<Mat> solve_all(const Mat& a, const Mat& b);

std::optional<Mat> invert(const Mat& a);

// A subspace of Q^n, represented by the RREF of any spanning family.
// Two subspaces are equal iff their representations agree entrywise.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(int ambient) : ambient_(ambient), basis_(0, ambient) {}

    static Subspace span(const Mat& rows);
    static Subspace full(int n) { return span(Mat::identity(n)); }

    int ambient() const { return ambient_; }
    int dim() const { return basis_.rows(); }
    const Mat& basis() const { return basis_; }
    Vec basis_row(int i) const { return basis_.row(i); }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& o) const;
    bool operator==(const Subspace& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }

    // Coefficients of v in the basis rows; empty when v lies outside.
    std::optional<Vec> coords(const Vec& v) const;

private:
    int ambient_ = 0;
    Mat basis_;
};

Subspace kernel(const Mat& a);
Subspace sum(const Subspace& u, const Subspace& v);
Subspace intersect(const Subspace& u, const Subspace& v);

// Union of Ker(f^k) over k >= 1 (the generalized kernel of f).
Subspace stabilized_kernel(const Mat& f);

}  // namespace lycas
