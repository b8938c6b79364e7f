#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "json.hpp"
#include "sympair/matrix.hpp"
#include "sympair/signed_diagram.hpp"

namespace sympair {

/// Normal sl(2) triple {x, h, y} attached to a nilpotent K-orbit:
/// x, y lie in s (block off-diagonal), h in k (diagonal, integral), with
/// [h,x] = 2x, [h,y] = -2y, [x,y] = h, and y = sigma(x) for the real-form
/// conjugation sigma adapted to the canonical basis (see sigma below).
struct KSTriple {
    SignedDiagram diagram;
    ExactMatrix x, h, y;

    nlohmann::json to_json() const;
};

/// Cayley transform of a KS triple: e = (x+y+ih)/2, f = (x+y-ih)/2 =
/// -theta(e), a = i(x-y).  {e, a, f} is again a standard sl(2) triple;
/// a is semisimple in s with the same characteristic polynomial as h.
struct CayleyData {
    ExactMatrix e, f, a;

    nlohmann::json to_json() const;
};

/// ad(h)-eigenspace decomposition of gl_n, together with the parabolic
/// pieces it induces: l = g_0, u = sum of g_k (k > 0), u_s = u
/// intersected with s.  Bases are elementary matrices E_uv, recorded as
/// coordinate pairs (u, v).
struct GradingData {
    std::vector<long> weights;  // diagonal of h in the canonical basis
    std::map<long, std::vector<std::pair<int, int>>> eigenspaces;
    std::vector<std::pair<int, int>> levi, nilradical, nilradical_s;

    int dim(long k) const {
        auto it = eigenspaces.find(k);
        return it == eigenspaces.end() ? 0 : static_cast<int>(it->second.size());
    }
};

/// Involution theta = Ad(I_{p,q}); k and s are its +1/-1 eigenspaces.
ExactMatrix theta(const ExactMatrix& m, Signature sig);

/// Positive diagonal weights Lambda adapting the real form to the
/// canonical basis of d.  Along a row of length r the weight drops by
/// the factor j(r-j) from box j-1 to box j, so that the Hermitian form
/// H = I_{p,q} Lambda makes canonical_matrix(d) and its weighted
/// transpose exact sigma-partners.  Lambda is the identity whenever all
/// rows have length <= 2.
std::vector<Rat> real_form_weights(const SignedDiagram& d);

/// Conjugation of the real form u(H), H = I_{p,q} Lambda_d:
/// sigma(X) = -H^{-1} conj(X)^T H.  Antilinear involution commuting with
/// theta; restricts to -I_{p,q} conj(X)^T I_{p,q} when Lambda_d = 1.
ExactMatrix sigma(const ExactMatrix& m, const SignedDiagram& d);

/// KS triple on the canonical basis: x = canonical_matrix(d), y the
/// weighted transpose with row weights (j+1)(r-1-j), h = [x,y] diagonal
/// with the standard sl(2) weights r-1, r-3, ..., 1-r on each row.
KSTriple build_ks_triple(const SignedDiagram& d);

CayleyData cayley(const KSTriple& t);

GradingData grading(const KSTriple& t);

inline constexpr uint64_t kGenericElementSeed = 0x5eed0001u;

/// Dense K-orbit in K.u_s for the theta-stable parabolic attached to an
/// even diagram d, computed from the rank profile of generic exact
/// elements of u_s (integer coefficients in [-10^4, 10^4], three samples,
/// entrywise maximum).  Returns d itself for every even d.
/// Throws std::domain_error if the underlying partition is not even.
SignedDiagram richardson_symmetric(const SignedDiagram& d,
                                   uint64_t seed = kGenericElementSeed);

}  // namespace sympair
