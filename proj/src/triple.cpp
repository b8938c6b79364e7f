#include "sympair/triple.hpp"

#include <stdexcept>

#include "sympair/rng.hpp"

namespace sympair {

nlohmann::json KSTriple::to_json() const {
    return {{"diagram", diagram.to_json()},
            {"x", x.to_json()},
            {"h", h.to_json()},
            {"y", y.to_json()}};
}

nlohmann::json CayleyData::to_json() const {
    return {{"e", e.to_json()}, {"f", f.to_json()}, {"a", a.to_json()}};
}

ExactMatrix theta(const ExactMatrix& m, Signature sig) {
    int n = sig.n();
    if (m.rows() != n || m.cols() != n)
        throw std::invalid_argument("matrix size does not match signature");
    ExactMatrix r(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            bool same_block = sig.sign_of(i) == sig.sign_of(j);
            r.at(i, j) = same_block ? m.at(i, j) : -m.at(i, j);
        }
    return r;
}

std::vector<Rat> real_form_weights(const SignedDiagram& d) {
    int n = d.signature().n();
    std::vector<Rat> lambda(static_cast<size_t>(n), Rat(1));
    BoxLayout layout = box_layout(d);
    for (const auto& row : layout.index) {
        int r = static_cast<int>(row.size());
        Rat w(1);
        for (int j = r - 1; j >= 0; --j) {  // weight at the last box is 1
            lambda[static_cast<size_t>(row[static_cast<size_t>(j)])] = w;
            if (j > 0) w *= Rat(j) * Rat(r - j);
        }
    }
    return lambda;
}

ExactMatrix sigma(const ExactMatrix& m, const SignedDiagram& d) {
    Signature sig = d.signature();
    int n = sig.n();
    if (m.rows() != n || m.cols() != n)
        throw std::invalid_argument("matrix size does not match signature");
    std::vector<Rat> lambda = real_form_weights(d);
    ExactMatrix r(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            // eta_u = eps_u * lambda_u; sigma(X)_ij = -(eta_j / eta_i) conj(X_ji)
            Rat ratio = lambda[static_cast<size_t>(j)] / lambda[static_cast<size_t>(i)];
            int sign = (sig.sign_of(i) == sig.sign_of(j)) ? -1 : 1;
            r.at(i, j) = m.at(j, i).conj() * GaussRat(ratio * sign);
        }
    return r;
}

KSTriple build_ks_triple(const SignedDiagram& d) {
    int n = d.signature().n();
    ExactMatrix x = canonical_matrix(d);
    ExactMatrix h(n, n), y(n, n);
    BoxLayout layout = box_layout(d);
    for (const auto& row : layout.index) {
        int r = static_cast<int>(row.size());
        for (int j = 0; j < r; ++j) {
            int u = row[static_cast<size_t>(j)];
            h.at(u, u) = GaussRat(r - 1 - 2 * j);
            if (j + 1 < r) {
                long c = static_cast<long>(j + 1) * (r - 1 - j);
                y.at(row[static_cast<size_t>(j + 1)], u) = GaussRat(c);
            }
        }
    }
    return KSTriple{d, std::move(x), std::move(h), std::move(y)};
}

CayleyData cayley(const KSTriple& t) {
    GaussRat half(make_rat(1, 2));
    GaussRat half_i(Rat(0), make_rat(1, 2));
    ExactMatrix xy = t.x + t.y;
    ExactMatrix ih = t.h.scaled(half_i);
    ExactMatrix e = xy.scaled(half) + ih;
    ExactMatrix f = xy.scaled(half) - ih;
    ExactMatrix a = (t.x - t.y).scaled(GaussRat::i());
    return CayleyData{std::move(e), std::move(f), std::move(a)};
}

GradingData grading(const KSTriple& t) {
    Signature sig = t.diagram.signature();
    int n = sig.n();
    GradingData g;
    g.weights.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        const GaussRat& v = t.h.at(i, i);
        g.weights.push_back(v.re.get_num().get_si());
    }
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            long k = g.weights[static_cast<size_t>(u)] - g.weights[static_cast<size_t>(v)];
            g.eigenspaces[k].emplace_back(u, v);
            if (k == 0) g.levi.emplace_back(u, v);
            if (k > 0) {
                g.nilradical.emplace_back(u, v);
                if (sig.sign_of(u) != sig.sign_of(v)) g.nilradical_s.emplace_back(u, v);
            }
        }
    return g;
}

SignedDiagram richardson_symmetric(const SignedDiagram& d, uint64_t seed) {
    if (!is_even(d.underlying()))
        throw std::domain_error("even nilpotent required: partition " + d.underlying().str() +
                                " has parts of mixed parity");
    Signature sig = d.signature();
    int n = sig.n();
    GradingData g = grading(build_ks_triple(d));
    Rng rng(seed);
    RankProfile best;
    for (int sample = 0; sample < 3; ++sample) {
        ExactMatrix z(n, n);
        for (const auto& [u, v] : g.nilradical_s)
            z.at(u, v) = GaussRat(rng.next_int(-10000, 10000));
        RankProfile profile = rank_profile_of(z, sig);
        if (sample == 0) {
            best = std::move(profile);
        } else {
            for (auto& [w, r] : best.ranks) r = std::max(r, profile.ranks.at(w));
        }
    }
    return diagram_from_profile(best, sig);
}

}  // namespace sympair
