#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "sympair/signed_diagram.hpp"
#include "sympair/triple.hpp"

namespace sympair {

/// The asymptotic cone of the semisimple orbit K.a attached to an even
/// nilpotent diagram d, described through its orbit combinatorics:
///   components    - the K-orbits of G.x intersected with s, i.e. the
///                   irreducible components of the cone;
///   cone_poset    - every orbit inside the closure of (G.x in s);
///   ambient_poset - every orbit inside closure(G.x) intersected with s;
///   strict_gap    - ambient orbits missing from the cone.
struct ConeResult {
    SignedDiagram input;
    std::vector<SignedDiagram> components;
    HasseDiagram cone_poset;
    HasseDiagram ambient_poset;
    std::vector<SignedDiagram> strict_gap;

    nlohmann::json to_json() const;
};

/// Computes the cone of K.a for a = i(x - y) built on d.  Requires the
/// underlying partition to be even; odd inputs are rejected (the cone
/// identity is only established for even nilpotents).
ConeResult asymptotic_cone(const SignedDiagram& d);

struct ComponentTriple {
    SignedDiagram diagram;
    KSTriple triple;
    CayleyData cayley;
};

/// KS triple and Cayley data for each component.  The semisimple parts
/// a_i of all components share one characteristic polynomial (the
/// invariant check for their K-conjugacy).
std::vector<ComponentTriple> component_triples(const ConeResult& r);

/// Deterministic DOT digraph; edges point from the larger orbit to the
/// smaller, node labels use the diagram string grammar.
std::string emit_dot(const HasseDiagram& h);

/// The U(n,n) family built on x = [[0,1_n],[0,0]]: the cone of [(+-)^n]
/// with its n+1 components [(+-)^p (-+)^q], plus the extended poset of
/// all K_{p,q} = [(+-)^p (-+)^q (+)^(n-p-q) (-)^(n-p-q)] with p+q <= n.
struct SiegelFamily {
    ConeResult cone;
    HasseDiagram extended_poset;
};
SiegelFamily siegel_family(int n);

/// The diagram [(+-)^p (-+)^q (+)^(n-p-q) (-)^(n-p-q)] at signature (n,n).
SignedDiagram siegel_orbit(int n, int p, int q);

}  // namespace sympair
