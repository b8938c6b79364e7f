#include "sympair/cone.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sympair {

nlohmann::json ConeResult::to_json() const {
    auto diagrams = [](const std::vector<SignedDiagram>& ds) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& d : ds) arr.push_back(d.to_json());
        return arr;
    };
    return {{"input", input.to_json()},
            {"components", diagrams(components)},
            {"cone_nodes", diagrams(cone_poset.nodes)},
            {"ambient_nodes", diagrams(ambient_poset.nodes)},
            {"strict_gap", diagrams(strict_gap)}};
}

ConeResult asymptotic_cone(const SignedDiagram& d) {
    Partition lambda = d.underlying();
    if (!is_even(lambda))
        throw std::domain_error("even nilpotent required: partition " + lambda.str() +
                                " has parts of mixed parity");
    Signature sig = d.signature();
    std::vector<SignedDiagram> components = enumerate_orbits(lambda, sig);
    std::vector<RankProfile> component_profiles;
    component_profiles.reserve(components.size());
    for (const auto& c : components) component_profiles.push_back(rank_profile(c));

    std::vector<SignedDiagram> ambient, cone, gap;
    for (const Partition& mu : partitions_of(lambda.size())) {
        if (!dominance_le(mu, lambda)) continue;
        for (SignedDiagram& node : enumerate_orbits(mu, sig)) {
            RankProfile profile = rank_profile(node);
            bool below = false;
            for (const auto& cp : component_profiles)
                if (profile_leq(profile, cp)) {
                    below = true;
                    break;
                }
            (below ? cone : gap).push_back(node);
            ambient.push_back(std::move(node));
        }
    }
    std::sort(gap.begin(), gap.end());
    return ConeResult{d, std::move(components), hasse(std::move(cone)),
                      hasse(std::move(ambient)), std::move(gap)};
}

std::vector<ComponentTriple> component_triples(const ConeResult& r) {
    std::vector<ComponentTriple> out;
    out.reserve(r.components.size());
    for (const auto& c : r.components) {
        KSTriple t = build_ks_triple(c);
        CayleyData cd = cayley(t);
        out.push_back(ComponentTriple{c, std::move(t), std::move(cd)});
    }
    return out;
}

std::string emit_dot(const HasseDiagram& h) {
    std::ostringstream out;
    out << "digraph hasse {\n";
    for (size_t i = 0; i < h.nodes.size(); ++i)
        out << "  n" << i << " [label=\"" << h.nodes[i].str() << "\"];\n";
    for (const auto& [big, small] : h.covers) out << "  n" << big << " -> n" << small << ";\n";
    out << "}\n";
    return out.str();
}

SignedDiagram siegel_orbit(int n, int p, int q) {
    if (n < 1 || p < 0 || q < 0 || p + q > n)
        throw std::invalid_argument("siegel_orbit requires n >= 1 and p + q <= n");
    std::vector<Row> rows;
    for (int i = 0; i < p; ++i) rows.push_back(Row{2, Sign::plus});
    for (int i = 0; i < q; ++i) rows.push_back(Row{2, Sign::minus});
    for (int i = 0; i < n - p - q; ++i) {
        rows.push_back(Row{1, Sign::plus});
        rows.push_back(Row{1, Sign::minus});
    }
    return SignedDiagram(std::move(rows), Signature(n, n));
}

SiegelFamily siegel_family(int n) {
    if (n < 1) throw std::invalid_argument("siegel family requires n >= 1");
    ConeResult cone = asymptotic_cone(siegel_orbit(n, n, 0));
    std::vector<SignedDiagram> nodes;
    for (int p = 0; p <= n; ++p)
        for (int q = 0; p + q <= n; ++q) nodes.push_back(siegel_orbit(n, p, q));
    return SiegelFamily{std::move(cone), hasse(std::move(nodes))};
}

}  // namespace sympair
