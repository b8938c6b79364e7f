#include "sympair/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace sympair {

ExactMatrix::ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    data_.assign(static_cast<size_t>(rows) * cols, GaussRat());
}

ExactMatrix ExactMatrix::identity(int n) {
    ExactMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = GaussRat(1);
    return m;
}

bool ExactMatrix::is_zero() const {
    for (const auto& v : data_)
        if (!v.is_zero()) return false;
    return true;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch in +");
    ExactMatrix r(rows_, cols_);
    for (size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] + o.data_[k];
    return r;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch in -");
    ExactMatrix r(rows_, cols_);
    for (size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] - o.data_[k];
    return r;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("shape mismatch in *");
    ExactMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const GaussRat& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const GaussRat& b = o.at(k, j);
                if (!b.is_zero()) r.at(i, j) += a * b;
            }
        }
    return r;
}

ExactMatrix ExactMatrix::scaled(const GaussRat& c) const {
    ExactMatrix r(rows_, cols_);
    for (size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] * c;
    return r;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

ExactMatrix ExactMatrix::conj_transpose() const {
    ExactMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j).conj();
    return r;
}

ExactMatrix ExactMatrix::pow(int k) const {
    if (!is_square()) throw std::invalid_argument("pow requires a square matrix");
    if (k < 0) throw std::invalid_argument("pow requires k >= 0");
    ExactMatrix r = identity(rows_);
    for (int i = 0; i < k; ++i) r = r * (*this);
    return r;
}

ExactMatrix ExactMatrix::block(int r0, int c0, int nr, int nc) const {
    if (r0 < 0 || c0 < 0 || r0 + nr > rows_ || c0 + nc > cols_)
        throw std::invalid_argument("block out of range");
    ExactMatrix r(nr, nc);
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nc; ++j) r.at(i, j) = at(r0 + i, c0 + j);
    return r;
}

GaussRat ExactMatrix::trace() const {
    if (!is_square()) throw std::invalid_argument("trace requires a square matrix");
    GaussRat t;
    for (int i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

int ExactMatrix::rank() const {
    ExactMatrix a = *this;
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
        int pivot = -1;
        for (int i = r; i < rows_; ++i)
            if (!a.at(i, c).is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int j = c; j < cols_; ++j) std::swap(a.at(pivot, j), a.at(r, j));
        for (int i = r + 1; i < rows_; ++i) {
            if (a.at(i, c).is_zero()) continue;
            GaussRat f = a.at(i, c) / a.at(r, c);
            for (int j = c; j < cols_; ++j) a.at(i, j) -= f * a.at(r, j);
        }
        ++r;
    }
    return r;
}

ExactMatrix ExactMatrix::inverse() const {
    if (!is_square()) throw std::invalid_argument("inverse requires a square matrix");
    int n = rows_;
    ExactMatrix a = *this;
    ExactMatrix inv = identity(n);
    for (int c = 0; c < n; ++c) {
        int pivot = -1;
        for (int i = c; i < n; ++i)
            if (!a.at(i, c).is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) throw std::domain_error("singular matrix has no inverse");
        if (pivot != c)
            for (int j = 0; j < n; ++j) {
                std::swap(a.at(pivot, j), a.at(c, j));
                std::swap(inv.at(pivot, j), inv.at(c, j));
            }
        GaussRat d = a.at(c, c);
        for (int j = 0; j < n; ++j) {
            a.at(c, j) /= d;
            inv.at(c, j) /= d;
        }
        for (int i = 0; i < n; ++i) {
            if (i == c || a.at(i, c).is_zero()) continue;
            GaussRat f = a.at(i, c);
            for (int j = 0; j < n; ++j) {
                a.at(i, j) -= f * a.at(c, j);
                inv.at(i, j) -= f * inv.at(c, j);
            }
        }
    }
    return inv;
}

std::vector<GaussRat> ExactMatrix::char_poly() const {
    if (!is_square()) throw std::invalid_argument("char_poly requires a square matrix");
    int n = rows_;
    std::vector<GaussRat> c(static_cast<size_t>(n));
    ExactMatrix m = *this;
    for (int k = 1; k <= n; ++k) {
        if (k > 1) {
            ExactMatrix shifted = m;
            for (int i = 0; i < n; ++i) shifted.at(i, i) += c[static_cast<size_t>(k - 2)];
            m = (*this) * shifted;
        }
        GaussRat t = m.trace();
        c[static_cast<size_t>(k - 1)] = -(t / GaussRat(k));
    }
    return c;
}

Partition ExactMatrix::jordan_type() const {
    if (!is_square()) throw std::invalid_argument("jordan_type requires a square matrix");
    int n = rows_;
    std::vector<int> ranks{n};  // ranks[k] = rank of the k-th power
    ExactMatrix p = *this;
    while (!p.is_zero()) {
        ranks.push_back(p.rank());
        if (static_cast<int>(ranks.size()) > n + 1)
            throw std::domain_error("matrix is not nilpotent");
        p = p * (*this);
    }
    ranks.push_back(0);
    std::vector<int> diffs;  // diffs[k] = number of Jordan blocks of size > k
    for (size_t k = 1; k < ranks.size(); ++k) {
        int d = ranks[k - 1] - ranks[k];
        if (d > 0) diffs.push_back(d);
    }
    return sympair::transpose(Partition(std::move(diffs)));
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

std::string ExactMatrix::grid_str() const {
    std::vector<std::string> cells;
    size_t width = 1;
    cells.reserve(data_.size());
    for (const auto& v : data_) {
        cells.push_back(v.str());
        width = std::max(width, cells.back().size());
    }
    std::ostringstream out;
    for (int i = 0; i < rows_; ++i) {
        out << "[ ";
        for (int j = 0; j < cols_; ++j) {
            const std::string& s = cells[static_cast<size_t>(i) * cols_ + j];
            out << std::string(width - s.size(), ' ') << s << (j + 1 < cols_ ? " " : "");
        }
        out << " ]\n";
    }
    return out.str();
}

nlohmann::json ExactMatrix::to_json() const {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < rows_; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < cols_; ++j) row.push_back(sympair::to_json(at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

ExactMatrix ExactMatrix::from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("matrix JSON must be an array of rows");
    int rows = static_cast<int>(j.size());
    int cols = rows ? static_cast<int>(j[0].size()) : 0;
    ExactMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (static_cast<int>(j[static_cast<size_t>(i)].size()) != cols)
            throw std::invalid_argument("ragged matrix JSON");
        for (int c = 0; c < cols; ++c)
            m.at(i, c) = gaussrat_from_json(j[static_cast<size_t>(i)][static_cast<size_t>(c)]);
    }
    return m;
}

}  // namespace sympair
