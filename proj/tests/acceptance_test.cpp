// Acceptance suite: reproduces the worked examples and structural
// identities end to end, one criterion per function, each with a wall
// clock budget.  Prints one PASS/FAIL line per criterion and exits
// nonzero if any fails.
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "sympair/cone.hpp"
#include "sympair/numerics.hpp"

using namespace sympair;

namespace {

struct Checker {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

SignedDiagram dia(const std::string& text, int p, int q) {
    return SignedDiagram::parse(text, Signature(p, q));
}

std::set<std::string> names(const std::vector<SignedDiagram>& ds) {
    std::set<std::string> out;
    for (const auto& d : ds) out.insert(d.str());
    return out;
}

std::set<std::pair<std::string, std::string>> edges(const HasseDiagram& h) {
    std::set<std::pair<std::string, std::string>> out;
    for (const auto& [big, small] : h.covers)
        out.insert({h.nodes[static_cast<size_t>(big)].str(),
                    h.nodes[static_cast<size_t>(small)].str()});
    return out;
}

std::vector<SignedDiagram> even_diagrams_up_to(int max_n) {
    std::vector<SignedDiagram> out;
    for (int n = 1; n <= max_n; ++n)
        for (auto& [sig, d] : oracles::all_diagrams_of_size(n)) {
            (void)sig;
            if (is_even(d.underlying())) out.push_back(std::move(d));
        }
    return out;
}

// ---------------------------------------------------------------------------

// U(3,3), type [3,1,1,1]: the cone carries exactly the six known orbits,
// the ambient closure adds exactly [(+-)^2(+)(-)] and [(-+)^2(+)(-)], and
// both Hasse diagrams match the known figures as edge sets.
void criterion_1(Checker& c) {
    ConeResult r = asymptotic_cone(dia("[(+-+)(+)(-)(-)]", 3, 3));
    const std::string A = "[(+-+)(+)(-)^2]", B = "[(-+-)(+)^2(-)]", M = "[(+-)(-+)(+)(-)]",
                      W = "[(+-)^2(+)(-)]", X = "[(-+)^2(+)(-)]", P = "[(+-)(+)^2(-)^2]",
                      Q = "[(-+)(+)^2(-)^2]", Z = "[(+)^3(-)^3]";
    c.require(names(r.cone_poset.nodes) == std::set<std::string>{A, B, M, P, Q, Z},
              "cone node set");
    c.require(names(r.strict_gap) == std::set<std::string>{W, X}, "strict gap");
    c.require(edges(r.cone_poset) ==
                  std::set<std::pair<std::string, std::string>>{
                      {A, M}, {B, M}, {M, P}, {M, Q}, {P, Z}, {Q, Z}},
              "cone poset edges");
    c.require(edges(r.ambient_poset) ==
                  std::set<std::pair<std::string, std::string>>{
                      {A, M}, {B, M}, {W, P}, {M, P}, {M, Q}, {X, Q}, {P, Z}, {Q, Z}},
              "ambient poset edges");
}

// U(n,n) family: the cone of [(+-)^n] has exactly the n+1 components
// [(+-)^p(-+)^q]; at n = 4 the extended K_{p,q} poset is the 15-node grid
// with covers K_{p+1,q}, K_{p,q+1} over K_{p,q}.
void criterion_2(Checker& c) {
    for (int n = 1; n <= 6; ++n) {
        SiegelFamily f = siegel_family(n);
        std::set<std::string> expected;
        for (int p = 0; p <= n; ++p) expected.insert(siegel_orbit(n, p, n - p).str());
        c.require(f.cone.components.size() == static_cast<size_t>(n + 1),
                  "component count at n=" + std::to_string(n));
        c.require(names(f.cone.components) == expected,
                  "component labels at n=" + std::to_string(n));
    }
    SiegelFamily f4 = siegel_family(4);
    c.require(f4.extended_poset.nodes.size() == 15, "extended poset size at n=4");
    std::set<std::pair<std::string, std::string>> expected_covers;
    for (int p = 0; p <= 4; ++p)
        for (int q = 0; p + q <= 4; ++q) {
            if (p + q == 4) continue;
            expected_covers.insert({siegel_orbit(4, p + 1, q).str(), siegel_orbit(4, p, q).str()});
            expected_covers.insert({siegel_orbit(4, p, q + 1).str(), siegel_orbit(4, p, q).str()});
        }
    c.require(edges(f4.extended_poset) == expected_covers, "extended poset covers at n=4");
}

// Exact triple identities for every signed diagram with p + q <= 8.
void criterion_3(Checker& c) {
    for (int n = 1; n <= 8; ++n)
        for (const auto& [sig, d] : oracles::all_diagrams_of_size(n)) {
            KSTriple t = build_ks_triple(d);
            CayleyData cd = cayley(t);
            bool ok = commutator(t.h, t.x) == t.x.scaled(GaussRat(2)) &&
                      commutator(t.h, t.y) == t.y.scaled(GaussRat(-2)) &&
                      commutator(t.x, t.y) == t.h && sigma(t.x, d) == t.y &&
                      theta(cd.e, sig) == cd.f.scaled(GaussRat(-1)) &&
                      commutator(cd.a, cd.e) == cd.e.scaled(GaussRat(2)) &&
                      commutator(cd.e, cd.f) == cd.a;
            c.require(ok, "triple identities for " + d.str());
            if (!ok) return;
        }
}

// Dimension identity: for every even diagram with p + q <= 6 the exact
// rank of the bracket map at a equals the dimension of every cone
// component, which is half the ambient orbit dimension.
void criterion_4(Checker& c) {
    for (const auto& d : even_diagrams_up_to(6)) {
        Signature sig = d.signature();
        long half_g = dim_g_orbit(d.underlying()) / 2;
        long tangent = tangent_dimension(cayley(build_ks_triple(d)).a, sig);
        c.require(tangent == half_g,
                  "tangent dim " + std::to_string(tangent) + " != " + std::to_string(half_g) +
                      " for " + d.str());
        for (const auto& comp : asymptotic_cone(d).components)
            c.require(dim_k_orbit(comp) == tangent, "component dimension for " + comp.str());
    }
}

// Limit curve: at t = 8 the normalized curve direction is within 1e-8 of
// x/||x||, and successive residual ratios sit within 10% of e^-4.
void criterion_5(Checker& c) {
    auto residual = [](const KSTriple& t, double tt) {
        FloatMatrix x = to_float(t.x);
        FloatMatrix target = x.scaled(1.0 / x.frobenius_norm());
        return (limit_direction(tt, t) - target).frobenius_norm();
    };
    std::vector<SignedDiagram> inputs = even_diagrams_up_to(4);
    for (int n = 1; n <= 4; ++n) inputs.push_back(siegel_orbit(n, n, 0));
    inputs.push_back(dia("[(+-+)(+)(-)(-)]", 3, 3));
    double e4 = std::exp(-4.0);
    for (const auto& d : inputs) {
        for (const auto& ct : component_triples(asymptotic_cone(d))) {
            if (ct.triple.x.is_zero()) continue;  // 0-dimensional: no curve
            c.require(residual(ct.triple, 8.0) <= 1e-8, "t=8 residual for " + ct.diagram.str());
            double r1 = residual(ct.triple, 1.0);
            double r2 = residual(ct.triple, 2.0);
            double r3 = residual(ct.triple, 3.0);
            c.require(std::abs(r2 / r1 - e4) <= 0.10 * e4, "ratio 1->2 for " + ct.diagram.str());
            c.require(std::abs(r3 / r2 - e4) <= 0.10 * e4, "ratio 2->3 for " + ct.diagram.str());
        }
    }
}

// Richardson consistency: the generic-element computation returns every
// even diagram with p + q <= 6, and at G level the type is the
// Richardson type of the Levi of h.
void criterion_6(Checker& c) {
    for (const auto& d : even_diagrams_up_to(6)) {
        c.require(richardson_symmetric(d, kGenericElementSeed) == d,
                  "generic-element Richardson orbit for " + d.str());
        c.require(richardson_of_levi(oracles::h_eigenvalue_multiplicities(d.underlying())) ==
                      d.underlying(),
                  "Levi consistency for " + d.str());
    }
}

// Oracle equivalence: the closed-form orbit dimension against the ad-map
// rank for all types of n <= 6, and antisymmetry/completeness of the
// rank-profile order for all diagrams with p + q <= 7.
void criterion_7(Checker& c) {
    for (int n = 1; n <= 6; ++n)
        for (const Partition& p : partitions_of(n))
            c.require(dim_g_orbit(p) == oracles::adjoint_rank(oracles::standard_nilpotent(p)),
                      "ad-map rank for " + p.str());
    for (int n = 1; n <= 7; ++n)
        for (int p = 0; p <= n; ++p) {
            Signature sig(p, n - p);
            std::vector<SignedDiagram> all;
            for (const Partition& lambda : partitions_of(n))
                for (SignedDiagram& d : enumerate_orbits(lambda, sig)) all.push_back(std::move(d));
            std::vector<RankProfile> profiles;
            for (const auto& d : all) profiles.push_back(rank_profile(d));
            for (size_t i = 0; i < all.size(); ++i)
                for (size_t j = i + 1; j < all.size(); ++j) {
                    c.require(!(profiles[i] == profiles[j]),
                              "profiles collide: " + all[i].str() + " vs " + all[j].str());
                    c.require(!(profile_leq(profiles[i], profiles[j]) &&
                                profile_leq(profiles[j], profiles[i])),
                              "antisymmetry: " + all[i].str() + " vs " + all[j].str());
                }
        }
}

// Monte Carlo membership: 100 conjugates per component stay inside the
// computed cone at tolerance 1e-9.
void criterion_8(Checker& c) {
    std::vector<SignedDiagram> inputs = even_diagrams_up_to(4);
    for (int n = 1; n <= 4; ++n) inputs.push_back(siegel_orbit(n, n, 0));
    inputs.push_back(dia("[(+-+)(+)(-)(-)]", 3, 3));
    for (const auto& d : inputs) {
        VerificationReport r = sample_orbit_limits(d, 100, 1e-9, 0xC0FFEE);
        c.require(r.membership_failures == 0,
                  std::to_string(r.membership_failures) + " failures for " + d.str());
    }
}

}  // namespace

int main() {
    struct Criterion {
        int number;
        std::string title;
        double budget_seconds;
        std::function<void(Checker&)> body;
    };
    std::vector<Criterion> criteria = {
        {1, "U(3,3) type [3,1,1,1]: cone orbits, strict gap and both Hasse figures", 1.0,
         criterion_1},
        {2, "U(n,n) family: n+1 components (n <= 6) and the 15-node K_{p,q} poset", 5.0,
         criterion_2},
        {3, "exact triple and Cayley identities for every diagram with p+q <= 8", 30.0,
         criterion_3},
        {4, "dimension identity: tangent rank = component dim = half G-orbit dim (p+q <= 6)",
         60.0, criterion_4},
        {5, "limit curves: residual at t=8 below 1e-8, decay ratio within 10% of e^-4", 5.0,
         criterion_5},
        {6, "Richardson consistency: generic elements and Levi types (even, p+q <= 6)", 60.0,
         criterion_6},
        {7, "oracle equivalence: dimension formula vs ad-map rank; profile order is faithful",
         120.0, criterion_7},
        {8, "Monte Carlo membership: 100 conjugates per component, 0 failures at 1e-9", 30.0,
         criterion_8},
    };

    bool all_ok = true;
    for (const auto& crit : criteria) {
        Checker checker;
        auto start = std::chrono::steady_clock::now();
        try {
            crit.body(checker);
        } catch (const std::exception& e) {
            checker.require(false, std::string("exception: ") + e.what());
        }
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool in_budget = elapsed < crit.budget_seconds;
        bool pass = checker.ok && in_budget;
        all_ok = all_ok && pass;
        std::ostringstream line;
        line << "criterion " << crit.number << " [" << (pass ? "PASS" : "FAIL") << "] "
             << crit.title << " (" << elapsed << "s";
        if (!in_budget) line << ", over budget " << crit.budget_seconds << "s";
        line << ")";
        if (!checker.ok) line << " -- " << checker.detail;
        std::cout << line.str() << std::endl;
    }
    return all_ok ? 0 : 1;
}
