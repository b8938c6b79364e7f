#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "json.hpp"
#include "sympair/signed_diagram.hpp"
#include "sympair/triple.hpp"

namespace sympair {

using Complex = std::complex<double>;

/// Dense complex double-precision matrix; the numerical image of
/// ExactMatrix.
class FloatMatrix {
public:
    FloatMatrix() = default;
    FloatMatrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Complex& at(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    const Complex& at(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

    FloatMatrix operator+(const FloatMatrix& o) const;
    FloatMatrix operator-(const FloatMatrix& o) const;
    FloatMatrix operator*(const FloatMatrix& o) const;
    FloatMatrix scaled(Complex c) const;
    FloatMatrix block(int r0, int c0, int nr, int nc) const;

    /// Partial-pivot Gauss-Jordan; throws std::domain_error when a pivot
    /// vanishes to machine zero.
    FloatMatrix inverse() const;

    double frobenius_norm() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Complex> data_;
};

FloatMatrix to_float(const ExactMatrix& m);

/// Singular values, descending, by one-sided Jacobi.  Small singular
/// values keep high relative accuracy (no Gram-matrix squaring).
std::vector<double> singular_values(const FloatMatrix& m);

/// Rank profile with numerical rank per word: a singular value counts as
/// nonzero when it exceeds tol times the product of the spectral norms
/// of the word's factors.  For a single letter this is the usual
/// relative threshold tol * sigma_max; the product scale keeps words
/// whose exact value is the zero matrix at rank zero.
RankProfile numerical_rank_profile(const FloatMatrix& m, Signature sig, double tol);

/// Frobenius-normalized direction of exp(t ad h).a = i(e^{2t}x - e^{-2t}y)
/// with the scalar i e^{2t} removed, i.e. (x - e^{-4t} y)/||.||.  As t
/// grows it converges to x/||x|| with residual ~ e^{-4t} ||y||/||x||;
/// the rate e^{-4t} is a property of this particular curve.
/// Throws std::domain_error on the zero triple (no direction).
FloatMatrix limit_direction(double t, const KSTriple& triple);

/// dim K.a as the exact rank of the bracket map k -> s, u -> [u, a].
/// Exact rational arithmetic throughout; throws std::invalid_argument
/// if a is not in s.
long tangent_dimension(const ExactMatrix& a, Signature sig);

struct VerificationReport {
    std::vector<std::pair<double, double>> curve_residuals;  // (t, max residual)
    long tangent_dim = 0;
    int membership_failures = 0;
    int samples = 0;
    double tolerance = 0.0;

    nlohmann::json to_json() const;
    std::string summary() const;
};

/// Monte Carlo probe of the cone of an even diagram d: per sample, draw
/// a random k in K (complex Gaussian blocks, redrawn while the condition
/// number exceeds 10^6), form Ad(k)x_i for every component
/// representative x_i and test numerical membership of the direction in
/// the cone via rank profiles.  Also records limit-curve residuals for
/// each component triple at t = 2, 4, 8.
VerificationReport sample_orbit_limits(const SignedDiagram& d, int samples, double tol,
                                       uint64_t seed);

}  // namespace sympair
