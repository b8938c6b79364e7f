#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "sympair/matrix.hpp"
#include "sympair/partition.hpp"

namespace sympair {

enum class Sign : uint8_t { plus, minus };

inline Sign flip(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }
inline char to_char(Sign s) { return s == Sign::plus ? '+' : '-'; }

/// Dimensions (p, q) of the +/- eigenspaces of the involution on C^n,
/// n = p + q >= 1.  Fixes the pair (GL_{p+q}, GL_p x GL_q).
struct Signature {
    Signature(int p, int q);
    int p, q;
    int n() const { return p + q; }
    /// Sign of coordinate u under the basis convention: V+ first.
    Sign sign_of(int u) const { return u < p ? Sign::plus : Sign::minus; }
    friend bool operator==(const Signature& a, const Signature& b) {
        return a.p == b.p && a.q == b.q;
    }
    friend bool operator!=(const Signature& a, const Signature& b) { return !(a == b); }
};

/// One row of a signed Young diagram; the boxes alternate in sign
/// starting from `start`.
struct Row {
    int len;
    Sign start;
    Sign sign_at(int pos) const { return (pos & 1) ? flip(start) : start; }
    friend bool operator==(const Row& a, const Row& b) {
        return a.len == b.len && a.start == b.start;
    }
};

/// Signed Young diagram: the label of a nilpotent K-orbit in s for the
/// pair (GL_{p+q}, GL_p x GL_q).  Rows are stored canonically: longer
/// rows first, '+' before '-' among rows of equal length.  This fixes
/// the canonical basis and makes every derived output reproducible.
class SignedDiagram {
public:
    SignedDiagram(std::vector<Row> rows, Signature sig);

    /// Grammar: '[' ( '(' sign+ ')' ('^' int)? )+ ']' with alternating
    /// signs inside each group; the Unicode minus sign is accepted.
    static SignedDiagram parse(std::string_view text, Signature sig);

    const std::vector<Row>& rows() const { return rows_; }
    Signature signature() const { return sig_; }
    Partition underlying() const;

    std::string str() const;  // "[(+-+)(+)(-)^2]"
    nlohmann::json to_json() const;
    static SignedDiagram from_json(const nlohmann::json& j);

    friend bool operator==(const SignedDiagram& a, const SignedDiagram& b) {
        return a.sig_ == b.sig_ && a.rows_ == b.rows_;
    }
    friend bool operator!=(const SignedDiagram& a, const SignedDiagram& b) { return !(a == b); }
    /// Canonical display order: underlying partition lexicographically
    /// descending (a linear extension of dominance, largest orbits
    /// first), then row start signs with '+' before '-'.
    friend bool operator<(const SignedDiagram& a, const SignedDiagram& b);

private:
    std::vector<Row> rows_;
    Signature sig_;
};

/// Global coordinate of each box under the canonical basis: '+' boxes
/// fill 0..p-1 and '-' boxes fill p..n-1, in row-major reading order.
struct BoxLayout {
    std::vector<std::vector<int>> index;  // [row][pos] -> 0..n-1
};
BoxLayout box_layout(const SignedDiagram& d);

/// All signed diagrams with underlying partition lambda and the given
/// signature; empty when the sign counts cannot balance.
/// Throws std::invalid_argument if |lambda| != p + q.
std::vector<SignedDiagram> enumerate_orbits(const Partition& lambda, Signature sig);

/// Nilpotent matrix x = [[0,B],[C,0]] sending each box's basis vector to
/// its left neighbour's (leftmost boxes map to 0).
ExactMatrix canonical_matrix(const SignedDiagram& d);

/// Ranks of all alternating words in the blocks B (V- -> V+) and C
/// (V+ -> V-) of a matrix in s, for word lengths 1..2n.  A word such as
/// "BCB" denotes the product B*C*B (rightmost factor applied first).
/// The profile is a complete invariant of the K-orbit and induces its
/// closure order by entrywise comparison.
struct RankProfile {
    std::map<std::string, int> ranks;

    static std::string word(char first, int len);
    int rank(const std::string& w) const;
    friend bool operator==(const RankProfile& a, const RankProfile& b) {
        return a.ranks == b.ranks;
    }
    nlohmann::json to_json() const;
};

/// Entrywise comparison; requires equal key sets (same n).
bool profile_leq(const RankProfile& a, const RankProfile& b);

RankProfile rank_profile(const SignedDiagram& d);

/// Profile of an arbitrary element of s (block off-diagonal matrix).
RankProfile rank_profile_of(const ExactMatrix& m, Signature sig);

/// Inverts rank_profile: reconstructs the diagram whose orbit has the
/// given profile.  Throws std::domain_error if the profile does not
/// match any orbit.
SignedDiagram diagram_from_profile(const RankProfile& profile, Signature sig);

/// Closure order on nilpotent K-orbits: true iff the orbit of a lies in
/// the closure of the orbit of b (rank-word criterion).
/// Throws std::invalid_argument on signature mismatch.
bool closure_le(const SignedDiagram& a, const SignedDiagram& b);

/// Half the ambient GL_n-orbit dimension: nilpotent K-orbits in s are
/// Lagrangian in their G-saturation.
long dim_k_orbit(const SignedDiagram& d);

/// Finite poset of signed diagrams under the closure order, with cover
/// relations only (transitive reduction).
struct HasseDiagram {
    std::vector<SignedDiagram> nodes;          // canonical order
    std::vector<std::pair<int, int>> covers;   // (larger, smaller) indices
    nlohmann::json to_json() const;
};

/// Cover relations of the closure order restricted to the given nodes
/// (duplicates removed).  Throws std::invalid_argument on mixed signatures.
HasseDiagram hasse(std::vector<SignedDiagram> nodes);

}  // namespace sympair
