#include "sympair/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "sympair/rng.hpp"

namespace sympair {

FloatMatrix::FloatMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    data_.assign(static_cast<size_t>(rows) * cols, Complex(0.0, 0.0));
}

FloatMatrix FloatMatrix::operator+(const FloatMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch in +");
    FloatMatrix r(rows_, cols_);
    for (size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] + o.data_[k];
    return r;
}

FloatMatrix FloatMatrix::operator-(const FloatMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch in -");
    FloatMatrix r(rows_, cols_);
    for (size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] - o.data_[k];
    return r;
}

FloatMatrix FloatMatrix::operator*(const FloatMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("shape mismatch in *");
    FloatMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            Complex a = at(i, k);
            if (a == Complex(0.0, 0.0)) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

FloatMatrix FloatMatrix::scaled(Complex c) const {
    FloatMatrix r(rows_, cols_);
    for (size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] * c;
    return r;
}

FloatMatrix FloatMatrix::block(int r0, int c0, int nr, int nc) const {
    if (r0 < 0 || c0 < 0 || r0 + nr > rows_ || c0 + nc > cols_)
        throw std::invalid_argument("block out of range");
    FloatMatrix r(nr, nc);
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nc; ++j) r.at(i, j) = at(r0 + i, c0 + j);
    return r;
}

FloatMatrix FloatMatrix::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse requires a square matrix");
    int n = rows_;
    FloatMatrix a = *this;
    FloatMatrix inv(n, n);
    for (int i = 0; i < n; ++i) inv.at(i, i) = 1.0;
    for (int c = 0; c < n; ++c) {
        int pivot = c;
        double best = std::abs(a.at(c, c));
        for (int i = c + 1; i < n; ++i)
            if (std::abs(a.at(i, c)) > best) {
                best = std::abs(a.at(i, c));
                pivot = i;
            }
        if (best == 0.0) throw std::domain_error("numerically singular matrix");
        if (pivot != c)
            for (int j = 0; j < n; ++j) {
                std::swap(a.at(pivot, j), a.at(c, j));
                std::swap(inv.at(pivot, j), inv.at(c, j));
            }
        Complex d = a.at(c, c);
        for (int j = 0; j < n; ++j) {
            a.at(c, j) /= d;
            inv.at(c, j) /= d;
        }
        for (int i = 0; i < n; ++i) {
            if (i == c) continue;
            Complex f = a.at(i, c);
            if (f == Complex(0.0, 0.0)) continue;
            for (int j = 0; j < n; ++j) {
                a.at(i, j) -= f * a.at(c, j);
                inv.at(i, j) -= f * inv.at(c, j);
            }
        }
    }
    return inv;
}

double FloatMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const Complex& v : data_) s += std::norm(v);
    return std::sqrt(s);
}

FloatMatrix to_float(const ExactMatrix& m) {
    FloatMatrix r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            r.at(i, j) = Complex(m.at(i, j).re.get_d(), m.at(i, j).im.get_d());
    return r;
}

std::vector<double> singular_values(const FloatMatrix& m) {
    int rows = m.rows(), cols = m.cols();
    if (rows == 0 || cols == 0) return std::vector<double>(static_cast<size_t>(cols), 0.0);
    // one-sided Jacobi: orthogonalize columns pairwise
    std::vector<std::vector<Complex>> col(static_cast<size_t>(cols));
    for (int j = 0; j < cols; ++j) {
        col[static_cast<size_t>(j)].resize(static_cast<size_t>(rows));
        for (int i = 0; i < rows; ++i) col[static_cast<size_t>(j)][static_cast<size_t>(i)] = m.at(i, j);
    }
    auto dot = [&](int i, int j) {  // conj(col_i) . col_j
        Complex s(0.0, 0.0);
        for (int r = 0; r < rows; ++r)
            s += std::conj(col[static_cast<size_t>(i)][static_cast<size_t>(r)]) *
                 col[static_cast<size_t>(j)][static_cast<size_t>(r)];
        return s;
    };
    const double eps = 1e-15;
    for (int sweep = 0; sweep < 60; ++sweep) {
        bool rotated = false;
        for (int i = 0; i < cols - 1; ++i)
            for (int j = i + 1; j < cols; ++j) {
                double alpha = dot(i, i).real();
                double beta = dot(j, j).real();
                Complex gamma = dot(i, j);
                double g = std::abs(gamma);
                if (g <= eps * std::sqrt(alpha * beta) || g == 0.0) continue;
                rotated = true;
                Complex phase = gamma / g;
                double tau = (beta - alpha) / (2.0 * g);
                double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                double c = 1.0 / std::sqrt(1.0 + t * t);
                double s = c * t;
                for (int r = 0; r < rows; ++r) {
                    Complex vi = col[static_cast<size_t>(i)][static_cast<size_t>(r)];
                    Complex vj = col[static_cast<size_t>(j)][static_cast<size_t>(r)];
                    col[static_cast<size_t>(i)][static_cast<size_t>(r)] =
                        c * vi - s * std::conj(phase) * vj;
                    col[static_cast<size_t>(j)][static_cast<size_t>(r)] = s * phase * vi + c * vj;
                }
            }
        if (!rotated) break;
    }
    std::vector<double> sv(static_cast<size_t>(cols));
    for (int j = 0; j < cols; ++j) {
        double s = 0.0;
        for (int r = 0; r < rows; ++r)
            s += std::norm(col[static_cast<size_t>(j)][static_cast<size_t>(r)]);
        sv[static_cast<size_t>(j)] = std::sqrt(s);
    }
    std::sort(sv.begin(), sv.end(), std::greater<double>());
    return sv;
}

namespace {

int numerical_rank(const FloatMatrix& w, double threshold) {
    int r = 0;
    for (double s : singular_values(w))
        if (s > threshold) ++r;
    return r;
}

double spectral_norm(const FloatMatrix& m) {
    auto sv = singular_values(m);
    return sv.empty() ? 0.0 : sv.front();
}

}  // namespace

RankProfile numerical_rank_profile(const FloatMatrix& m, Signature sig, double tol) {
    int n = sig.n();
    if (m.rows() != n || m.cols() != n)
        throw std::invalid_argument("matrix size does not match signature");
    FloatMatrix b = m.block(0, sig.p, sig.p, sig.q);
    FloatMatrix c = m.block(sig.p, 0, sig.q, sig.p);
    double norm_b = spectral_norm(b);
    double norm_c = spectral_norm(c);
    RankProfile profile;
    for (char first : {'B', 'C'}) {
        FloatMatrix w = (first == 'B') ? b : c;
        double scale = (first == 'B') ? norm_b : norm_c;
        char next = (first == 'B') ? 'C' : 'B';
        for (int len = 1; len <= 2 * n; ++len) {
            if (len > 1) {
                w = w * ((next == 'B') ? b : c);
                scale *= (next == 'B') ? norm_b : norm_c;
                next = (next == 'B') ? 'C' : 'B';
            }
            profile.ranks[RankProfile::word(first, len)] = numerical_rank(w, tol * scale);
        }
    }
    return profile;
}

FloatMatrix limit_direction(double t, const KSTriple& triple) {
    if (t < 0) throw std::invalid_argument("limit_direction requires t >= 0");
    if (triple.x.is_zero())
        throw std::domain_error("zero triple has no limit direction");
    FloatMatrix x = to_float(triple.x);
    FloatMatrix y = to_float(triple.y);
    FloatMatrix d = x - y.scaled(std::exp(-4.0 * t));
    return d.scaled(1.0 / d.frobenius_norm());
}

long tangent_dimension(const ExactMatrix& a, Signature sig) {
    int n = sig.n();
    if (a.rows() != n || a.cols() != n)
        throw std::invalid_argument("matrix size does not match signature");
    std::vector<std::pair<int, int>> s_basis, k_basis;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            (sig.sign_of(u) == sig.sign_of(v) ? k_basis : s_basis).emplace_back(u, v);
    for (const auto& [u, v] : k_basis)
        if (!a.at(u, v).is_zero()) throw std::invalid_argument("a not in s");
    // column per k-basis element E_uv: [E_uv, a] expanded in the s basis
    ExactMatrix bracket(static_cast<int>(s_basis.size()), static_cast<int>(k_basis.size()));
    for (size_t kc = 0; kc < k_basis.size(); ++kc) {
        auto [u, v] = k_basis[kc];
        for (size_t sr = 0; sr < s_basis.size(); ++sr) {
            auto [r, s] = s_basis[sr];
            GaussRat val;  // (E_uv a - a E_uv)_{rs}
            if (r == u) val += a.at(v, s);
            if (s == v) val -= a.at(r, u);
            bracket.at(static_cast<int>(sr), static_cast<int>(kc)) = std::move(val);
        }
    }
    return bracket.rank();
}

nlohmann::json VerificationReport::to_json() const {
    nlohmann::json curve = nlohmann::json::array();
    for (const auto& [t, r] : curve_residuals) curve.push_back({t, r});
    return {{"curve_residuals", std::move(curve)},
            {"tangent_dim", tangent_dim},
            {"membership_failures", membership_failures},
            {"samples", samples},
            {"tolerance", tolerance}};
}

std::string VerificationReport::summary() const {
    std::ostringstream out;
    out << "tangent dimension: " << tangent_dim << "\n";
    out << "samples: " << samples << ", tolerance: " << tolerance << "\n";
    out << "membership failures: " << membership_failures << "\n";
    if (!curve_residuals.empty()) {
        out << "curve residuals:\n";
        for (const auto& [t, r] : curve_residuals) out << "  t=" << t << ": " << r << "\n";
    }
    return out.str();
}

namespace {

FloatMatrix random_invertible(int n, Rng& rng) {
    for (int attempt = 0; attempt < 100; ++attempt) {
        FloatMatrix k(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) k.at(i, j) = Complex(rng.next_normal(), rng.next_normal());
        if (n == 0) return k;
        auto sv = singular_values(k);
        if (sv.back() > 0.0 && sv.front() / sv.back() <= 1e6) return k;
    }
    throw std::runtime_error("failed to draw a well-conditioned group element");
}

}  // namespace

VerificationReport sample_orbit_limits(const SignedDiagram& d, int samples, double tol,
                                       uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("samples must be >= 1");
    if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
    Partition lambda = d.underlying();
    if (!is_even(lambda))
        throw std::domain_error("even nilpotent required: partition " + lambda.str() +
                                " has parts of mixed parity");
    Signature sig = d.signature();
    int n = sig.n();

    std::vector<SignedDiagram> components = enumerate_orbits(lambda, sig);
    std::vector<RankProfile> component_profiles;
    std::vector<ExactMatrix> reps;
    for (const auto& c : components) {
        component_profiles.push_back(rank_profile(c));
        reps.push_back(canonical_matrix(c));
    }

    VerificationReport report;
    report.samples = samples;
    report.tolerance = tol;

    KSTriple input_triple = build_ks_triple(d);
    report.tangent_dim = tangent_dimension(cayley(input_triple).a, sig);

    for (double t : {2.0, 4.0, 8.0}) {
        double worst = -1.0;
        for (const auto& c : components) {
            KSTriple triple = build_ks_triple(c);
            if (triple.x.is_zero()) continue;
            FloatMatrix x = to_float(triple.x);
            FloatMatrix target = x.scaled(1.0 / x.frobenius_norm());
            double res = (limit_direction(t, triple) - target).frobenius_norm();
            worst = std::max(worst, res);
        }
        if (worst >= 0.0) report.curve_residuals.emplace_back(t, worst);
    }

    Rng rng(seed);
    for (int s = 0; s < samples; ++s) {
        FloatMatrix k1 = random_invertible(sig.p, rng);
        FloatMatrix k2 = random_invertible(sig.q, rng);
        FloatMatrix k1inv = sig.p > 0 ? k1.inverse() : k1;
        FloatMatrix k2inv = sig.q > 0 ? k2.inverse() : k2;
        for (const auto& rep : reps) {
            FloatMatrix x = to_float(rep);
            FloatMatrix b = x.block(0, sig.p, sig.p, sig.q);
            FloatMatrix c = x.block(sig.p, 0, sig.q, sig.p);
            FloatMatrix conj_b = k1 * b * k2inv;
            FloatMatrix conj_c = k2 * c * k1inv;
            FloatMatrix m(n, n);
            for (int i = 0; i < sig.p; ++i)
                for (int j = 0; j < sig.q; ++j) m.at(i, sig.p + j) = conj_b.at(i, j);
            for (int i = 0; i < sig.q; ++i)
                for (int j = 0; j < sig.p; ++j) m.at(sig.p + i, j) = conj_c.at(i, j);
            RankProfile numeric = numerical_rank_profile(m, sig, tol);
            bool member = false;
            for (const auto& cp : component_profiles)
                if (profile_leq(numeric, cp)) {
                    member = true;
                    break;
                }
            if (!member) ++report.membership_failures;
        }
    }
    return report;
}

}  // namespace sympair
