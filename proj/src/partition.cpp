#include "sympair/partition.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sympair {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int x : parts_)
        if (x <= 0) throw std::invalid_argument("partition parts must be positive");
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
    n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (!s.empty() && s.front() == '[') {
        if (s.back() != ']') throw std::invalid_argument("unbalanced brackets in partition");
        s = s.substr(1, s.size() - 2);
    }
    std::vector<int> parts;
    if (!s.empty()) {
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, ',')) {
            size_t pos = 0;
            int v = std::stoi(item, &pos);
            if (pos != item.size()) throw std::invalid_argument("bad partition entry: " + item);
            parts.push_back(v);
        }
    }
    return Partition(std::move(parts));
}

std::string Partition::str() const {
    std::string out = "[";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts_[i]);
    }
    return out + "]";
}

nlohmann::json Partition::to_json() const { return nlohmann::json(parts_); }

Partition Partition::from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("partition JSON must be an integer array");
    return Partition(j.get<std::vector<int>>());
}

Partition transpose(const Partition& p) {
    if (p.empty()) return {};
    std::vector<int> cols(static_cast<size_t>(p.part(0)), 0);
    for (int r = 0; r < p.rows(); ++r)
        for (int j = 0; j < p.part(r); ++j) ++cols[static_cast<size_t>(j)];
    return Partition(std::move(cols));
}

bool dominance_le(const Partition& a, const Partition& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("dominance order requires partitions of equal size");
    int rows = std::max(a.rows(), b.rows());
    long sa = 0, sb = 0;
    for (int i = 0; i < rows; ++i) {
        sa += a.part(i);
        sb += b.part(i);
        if (sa > sb) return false;
    }
    return true;
}

bool is_even(const Partition& p) {
    for (int x : p.parts())
        if ((x & 1) != (p.part(0) & 1)) return false;
    return true;
}

long dim_g_orbit(const Partition& p) {
    long n = p.size();
    long s = 0;
    Partition t = transpose(p);
    for (int c : t.parts()) s += static_cast<long>(c) * c;
    return n * n - s;
}

Composition::Composition(std::vector<int> blocks) : blocks_(std::move(blocks)) {
    for (int b : blocks_)
        if (b < 1) throw std::invalid_argument("composition blocks must be >= 1");
    total_ = std::accumulate(blocks_.begin(), blocks_.end(), 0);
}

Partition richardson_of_levi(const Composition& c) {
    return transpose(Partition(c.blocks()));
}

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of requires n >= 0");
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int maxpart) {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int k = std::min(rest, maxpart); k >= 1; --k) {
            cur.push_back(k);
            rec(rest - k, k);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

}  // namespace sympair
