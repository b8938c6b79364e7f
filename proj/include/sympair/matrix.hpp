#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "sympair/partition.hpp"
#include "sympair/rational.hpp"

namespace sympair {

/// Dense matrix over Q(i).  All arithmetic is exact; there is no rounding
/// anywhere in this class.
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(int rows, int cols);

    static ExactMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool is_zero() const;

    GaussRat& at(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    const GaussRat& at(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

    ExactMatrix operator+(const ExactMatrix& o) const;
    ExactMatrix operator-(const ExactMatrix& o) const;
    ExactMatrix operator*(const ExactMatrix& o) const;
    ExactMatrix scaled(const GaussRat& c) const;
    ExactMatrix transpose() const;
    ExactMatrix conj_transpose() const;
    ExactMatrix pow(int k) const;
    ExactMatrix block(int r0, int c0, int nr, int nc) const;
    GaussRat trace() const;

    /// Exact rank by Gaussian elimination.
    int rank() const;

    /// Exact inverse; throws std::domain_error on singular input.
    ExactMatrix inverse() const;

    /// Coefficients c of det(tI - A) = t^n + c[0] t^(n-1) + ... + c[n-1]
    /// (Faddeev-LeVerrier).
    std::vector<GaussRat> char_poly() const;

    /// Jordan type of a nilpotent matrix, read off the rank sequence of
    /// its powers.  Throws std::domain_error if the matrix is not nilpotent.
    Partition jordan_type() const;

    bool operator==(const ExactMatrix& o) const;
    bool operator!=(const ExactMatrix& o) const { return !(*this == o); }

    /// Human-readable grid, one row per line.
    std::string grid_str() const;

    /// Nested arrays of [re_num, re_den, im_num, im_den] entries.
    nlohmann::json to_json() const;
    static ExactMatrix from_json(const nlohmann::json& j);

private:
    int rows_ = 0, cols_ = 0;
    std::vector<GaussRat> data_;
};

inline ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b) {
    return a * b - b * a;
}

}  // namespace sympair
