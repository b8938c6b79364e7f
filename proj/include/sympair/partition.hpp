#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace sympair {

/// Integer partition: weakly decreasing sequence of positive parts.
/// Serves as the Jordan type of a nilpotent element of gl_n.
class Partition {
public:
    Partition() = default;
    /// Sorts the parts descending; rejects non-positive entries.
    explicit Partition(std::vector<int> parts);

    /// Parses "[3,1,1,1]" (brackets optional, whitespace ignored).
    static Partition parse(std::string_view text);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return n_; }                            // sum of parts
    int rows() const { return static_cast<int>(parts_.size()); }
    int part(int i) const {                                    // 0 beyond the last row
        return i >= 0 && i < rows() ? parts_[static_cast<size_t>(i)] : 0;
    }
    bool empty() const { return parts_.empty(); }

    std::string str() const;        // "[3,1,1,1]"
    nlohmann::json to_json() const; // [3,1,1,1]
    static Partition from_json(const nlohmann::json& j);

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    /// Lexicographic on parts; on partitions of equal size this refines
    /// the dominance order (a dominates b implies a >lex b).
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

private:
    std::vector<int> parts_;
    int n_ = 0;
};

/// Column lengths of the Young diagram; an involution.
Partition transpose(const Partition& p);

/// Dominance order: all partial sums of a bounded by those of b.
/// This is the closure order on nilpotent GL_n-orbits.
/// Throws std::invalid_argument unless |a| == |b|.
bool dominance_le(const Partition& a, const Partition& b);

/// All parts of equal parity: the attached sl(2) grading of gl_n has no
/// odd piece, i.e. the nilpotent is even.
bool is_even(const Partition& p);

/// dim of the adjoint GL_n-orbit of Jordan type p:
/// n^2 - sum of squared transpose parts.
long dim_g_orbit(const Partition& p);

/// Levi block sizes of a parabolic in gl_n; order is kept but every
/// formula sorts first (conjugation invariance).
struct Composition {
    explicit Composition(std::vector<int> blocks);
    const std::vector<int>& blocks() const { return blocks_; }
    int total() const { return total_; }

private:
    std::vector<int> blocks_;
    int total_ = 0;
};

/// Jordan type of the Richardson orbit of a parabolic with Levi block
/// sizes c: the transpose of the sorted block sizes.
Partition richardson_of_levi(const Composition& c);

/// All partitions of n, lexicographically descending (starts at [n]).
std::vector<Partition> partitions_of(int n);

}  // namespace sympair
