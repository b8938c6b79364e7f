#include "sympair/signed_diagram.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace sympair {

Signature::Signature(int p_, int q_) : p(p_), q(q_) {
    if (p < 0 || q < 0 || p + q < 1)
        throw std::invalid_argument("signature requires p, q >= 0 and p + q >= 1");
}

namespace {

bool row_before(const Row& a, const Row& b) {
    if (a.len != b.len) return a.len > b.len;
    return a.start == Sign::plus && b.start == Sign::minus;
}

int plus_count(const Row& r) {
    // boxes at even positions carry the start sign
    int evens = (r.len + 1) / 2;
    return r.start == Sign::plus ? evens : r.len - evens;
}

}  // namespace

SignedDiagram::SignedDiagram(std::vector<Row> rows, Signature sig)
    : rows_(std::move(rows)), sig_(sig) {
    int plus = 0, total = 0;
    for (const Row& r : rows_) {
        if (r.len <= 0) throw std::invalid_argument("row lengths must be positive");
        plus += plus_count(r);
        total += r.len;
    }
    if (total != sig_.n() || plus != sig_.p)
        throw std::invalid_argument("sign count mismatch: diagram has " + std::to_string(plus) +
                                    " '+' and " + std::to_string(total - plus) +
                                    " '-' boxes, signature is (" + std::to_string(sig_.p) + "," +
                                    std::to_string(sig_.q) + ")");
    std::sort(rows_.begin(), rows_.end(), row_before);
}

SignedDiagram SignedDiagram::parse(std::string_view text, Signature sig) {
    std::string s;
    for (size_t i = 0; i < text.size();) {
        // normalize the UTF-8 minus sign U+2212
        if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xe2 &&
            static_cast<unsigned char>(text[i + 1]) == 0x88 &&
            static_cast<unsigned char>(text[i + 2]) == 0x92) {
            s += '-';
            i += 3;
            continue;
        }
        if (!std::isspace(static_cast<unsigned char>(text[i]))) s += text[i];
        ++i;
    }
    size_t pos = 0;
    auto fail = [&](const std::string& why) {
        throw std::invalid_argument("malformed diagram '" + std::string(text) + "': " + why);
    };
    if (pos >= s.size() || s[pos] != '[') fail("expected '['");
    ++pos;
    std::vector<Row> rows;
    while (pos < s.size() && s[pos] == '(') {
        ++pos;
        std::vector<Sign> signs;
        while (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
            signs.push_back(s[pos] == '+' ? Sign::plus : Sign::minus);
            ++pos;
        }
        if (signs.empty()) fail("empty sign group");
        if (pos >= s.size() || s[pos] != ')') fail("expected ')'");
        ++pos;
        for (size_t i = 1; i < signs.size(); ++i)
            if (signs[i] == signs[i - 1]) fail("non-alternating sign group");
        long mult = 1;
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (pos == start) fail("expected multiplicity after '^'");
            mult = std::stol(s.substr(start, pos - start));
            if (mult < 1) fail("multiplicity must be >= 1");
        }
        for (long i = 0; i < mult; ++i)
            rows.push_back(Row{static_cast<int>(signs.size()), signs.front()});
    }
    if (pos >= s.size() || s[pos] != ']') fail("expected ']'");
    if (pos + 1 != s.size()) fail("trailing characters");
    if (rows.empty()) fail("no rows");
    return SignedDiagram(std::move(rows), sig);
}

Partition SignedDiagram::underlying() const {
    std::vector<int> parts;
    parts.reserve(rows_.size());
    for (const Row& r : rows_) parts.push_back(r.len);
    return Partition(std::move(parts));
}

std::string SignedDiagram::str() const {
    std::string out = "[";
    for (size_t i = 0; i < rows_.size();) {
        size_t j = i;
        while (j < rows_.size() && rows_[j] == rows_[i]) ++j;
        out += "(";
        for (int pos = 0; pos < rows_[i].len; ++pos) out += to_char(rows_[i].sign_at(pos));
        out += ")";
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    return out + "]";
}

nlohmann::json SignedDiagram::to_json() const {
    nlohmann::json rows = nlohmann::json::array();
    for (const Row& r : rows_)
        rows.push_back({{"len", r.len}, {"start", std::string(1, to_char(r.start))}});
    return {{"signature", {sig_.p, sig_.q}}, {"rows", std::move(rows)}};
}

SignedDiagram SignedDiagram::from_json(const nlohmann::json& j) {
    Signature sig(j.at("signature").at(0).get<int>(), j.at("signature").at(1).get<int>());
    std::vector<Row> rows;
    for (const auto& rj : j.at("rows")) {
        std::string st = rj.at("start").get<std::string>();
        if (st != "+" && st != "-") throw std::invalid_argument("row start must be '+' or '-'");
        rows.push_back(Row{rj.at("len").get<int>(), st == "+" ? Sign::plus : Sign::minus});
    }
    return SignedDiagram(std::move(rows), sig);
}

bool operator<(const SignedDiagram& a, const SignedDiagram& b) {
    Partition ua = a.underlying(), ub = b.underlying();
    const auto& pa = ua.parts();
    const auto& pb = ub.parts();
    if (pa != pb) return pa > pb;  // larger partitions (lex) first
    for (size_t i = 0; i < a.rows_.size(); ++i)
        if (a.rows_[i].start != b.rows_[i].start)
            return a.rows_[i].start == Sign::plus;
    return false;
}

BoxLayout box_layout(const SignedDiagram& d) {
    BoxLayout layout;
    int next_plus = 0, next_minus = d.signature().p;
    for (const Row& r : d.rows()) {
        std::vector<int> idx(static_cast<size_t>(r.len));
        for (int pos = 0; pos < r.len; ++pos)
            idx[static_cast<size_t>(pos)] =
                r.sign_at(pos) == Sign::plus ? next_plus++ : next_minus++;
        layout.index.push_back(std::move(idx));
    }
    return layout;
}

std::vector<SignedDiagram> enumerate_orbits(const Partition& lambda, Signature sig) {
    if (lambda.size() != sig.n())
        throw std::invalid_argument("partition size " + std::to_string(lambda.size()) +
                                    " does not match signature total " + std::to_string(sig.n()));
    // distinct lengths with multiplicities, descending
    std::vector<std::pair<int, int>> groups;
    for (int x : lambda.parts()) {
        if (!groups.empty() && groups.back().first == x)
            ++groups.back().second;
        else
            groups.emplace_back(x, 1);
    }
    std::vector<SignedDiagram> out;
    std::vector<Row> current;
    std::function<void(size_t, int)> rec = [&](size_t g, int plus_left) {
        if (g == groups.size()) {
            if (plus_left == 0) out.emplace_back(current, sig);
            return;
        }
        auto [len, mult] = groups[g];
        int plus_if_plus = (len + 1) / 2;   // '+' boxes in a row starting '+'
        int plus_if_minus = len / 2;
        for (int k = mult; k >= 0; --k) {   // k rows start with '+'
            int plus_here = k * plus_if_plus + (mult - k) * plus_if_minus;
            if (plus_here > plus_left) continue;
            for (int i = 0; i < k; ++i) current.push_back(Row{len, Sign::plus});
            for (int i = 0; i < mult - k; ++i) current.push_back(Row{len, Sign::minus});
            rec(g + 1, plus_left - plus_here);
            current.resize(current.size() - static_cast<size_t>(mult));
        }
    };
    rec(0, sig.p);
    std::sort(out.begin(), out.end());
    return out;
}

ExactMatrix canonical_matrix(const SignedDiagram& d) {
    int n = d.signature().n();
    ExactMatrix x(n, n);
    BoxLayout layout = box_layout(d);
    for (const auto& row : layout.index)
        for (size_t pos = 1; pos < row.size(); ++pos)
            x.at(row[pos - 1], row[pos]) = GaussRat(1);
    return x;
}

std::string RankProfile::word(char first, int len) {
    std::string w;
    w.reserve(static_cast<size_t>(len));
    char c = first;
    for (int i = 0; i < len; ++i) {
        w += c;
        c = (c == 'B') ? 'C' : 'B';
    }
    return w;
}

int RankProfile::rank(const std::string& w) const {
    auto it = ranks.find(w);
    if (it == ranks.end()) throw std::invalid_argument("word not in profile: " + w);
    return it->second;
}

nlohmann::json RankProfile::to_json() const { return nlohmann::json(ranks); }

bool profile_leq(const RankProfile& a, const RankProfile& b) {
    if (a.ranks.size() != b.ranks.size())
        throw std::invalid_argument("rank profiles of different sizes are not comparable");
    auto ib = b.ranks.begin();
    for (const auto& [w, r] : a.ranks) {
        if (ib->first != w)
            throw std::invalid_argument("rank profiles with different word sets");
        if (r > ib->second) return false;
        ++ib;
    }
    return true;
}

RankProfile rank_profile_of(const ExactMatrix& m, Signature sig) {
    int n = sig.n();
    if (m.rows() != n || m.cols() != n)
        throw std::invalid_argument("matrix size does not match signature");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (sig.sign_of(i) == sig.sign_of(j) && !m.at(i, j).is_zero())
                throw std::invalid_argument("matrix is not in s (diagonal blocks nonzero)");
    ExactMatrix b = m.block(0, sig.p, sig.p, sig.q);
    ExactMatrix c = m.block(sig.p, 0, sig.q, sig.p);
    RankProfile profile;
    for (char first : {'B', 'C'}) {
        ExactMatrix w = (first == 'B') ? b : c;
        char next = (first == 'B') ? 'C' : 'B';
        bool dead = false;
        for (int len = 1; len <= 2 * n; ++len) {
            if (len > 1) {
                if (!dead) {
                    w = w * ((next == 'B') ? b : c);
                    dead = w.is_zero();
                }
                next = (next == 'B') ? 'C' : 'B';
            } else {
                dead = w.is_zero();
            }
            profile.ranks[RankProfile::word(first, len)] = dead ? 0 : w.rank();
        }
    }
    return profile;
}

RankProfile rank_profile(const SignedDiagram& d) {
    return rank_profile_of(canonical_matrix(d), d.signature());
}

SignedDiagram diagram_from_profile(const RankProfile& profile, Signature sig) {
    int n = sig.n();
    // m[s][len] = number of boxes of sign s at row position >= len;
    // for len >= 1 this is the rank of the length-len word whose
    // rightmost letter consumes that sign (B eats '-', C eats '+').
    auto boxes_from = [&](Sign s, int len) -> int {
        if (len == 0) return s == Sign::plus ? sig.p : sig.q;
        if (len > 2 * n) return 0;
        bool odd = len & 1;
        char last = (s == Sign::minus) ? 'B' : 'C';
        char first = odd ? last : (last == 'B' ? 'C' : 'B');
        return profile.rank(RankProfile::word(first, len));
    };
    auto at_position = [&](Sign s, int pos) {  // rows longer than pos with sign s there
        return boxes_from(s, pos) - boxes_from(s, pos + 1);
    };
    std::vector<Row> rows;
    for (int len = n; len >= 1; --len) {
        for (Sign s : {Sign::plus, Sign::minus}) {
            // rows of length exactly len whose final box has sign s
            int cnt = at_position(s, len - 1) - at_position(flip(s), len);
            if (cnt < 0)
                throw std::domain_error("rank profile does not correspond to an orbit");
            Sign start = ((len - 1) & 1) ? flip(s) : s;
            for (int i = 0; i < cnt; ++i) rows.push_back(Row{len, start});
        }
    }
    SignedDiagram d = [&]() {
        try {
            return SignedDiagram(std::move(rows), sig);
        } catch (const std::invalid_argument&) {
            throw std::domain_error("rank profile does not correspond to an orbit");
        }
    }();
    if (!(rank_profile(d) == profile))
        throw std::domain_error("rank profile does not correspond to an orbit");
    return d;
}

bool closure_le(const SignedDiagram& a, const SignedDiagram& b) {
    if (a.signature() != b.signature())
        throw std::invalid_argument("closure order requires equal signatures");
    return profile_leq(rank_profile(a), rank_profile(b));
}

long dim_k_orbit(const SignedDiagram& d) { return dim_g_orbit(d.underlying()) / 2; }

nlohmann::json HasseDiagram::to_json() const {
    nlohmann::json nj = nlohmann::json::array();
    for (const auto& d : nodes) nj.push_back(d.to_json());
    nlohmann::json cj = nlohmann::json::array();
    for (const auto& [big, small] : covers) cj.push_back({big, small});
    return {{"nodes", std::move(nj)}, {"covers", std::move(cj)}};
}

HasseDiagram hasse(std::vector<SignedDiagram> nodes) {
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    for (size_t i = 1; i < nodes.size(); ++i)
        if (nodes[i].signature() != nodes[0].signature())
            throw std::invalid_argument("hasse requires nodes of a single signature");
    size_t n = nodes.size();
    std::vector<RankProfile> profiles;
    profiles.reserve(n);
    for (const auto& d : nodes) profiles.push_back(rank_profile(d));
    // le[i][j]: node i below node j, strictly
    std::vector<std::vector<bool>> lt(n, std::vector<bool>(n, false));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            lt[i][j] = i != j && profile_leq(profiles[i], profiles[j]);
    HasseDiagram h;
    h.nodes = std::move(nodes);
    for (size_t j = 0; j < n; ++j)       // larger node
        for (size_t i = 0; i < n; ++i) { // smaller node
            if (!lt[i][j]) continue;
            bool covered = true;
            for (size_t k = 0; k < n && covered; ++k)
                if (lt[i][k] && lt[k][j]) covered = false;
            if (covered) h.covers.emplace_back(static_cast<int>(j), static_cast<int>(i));
        }
    std::sort(h.covers.begin(), h.covers.end());
    return h;
}

}  // namespace sympair
