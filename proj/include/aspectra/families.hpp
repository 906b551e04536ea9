#ifndef ASPECTRA_FAMILIES_HPP
#define ASPECTRA_FAMILIES_HPP

#include <string>

#include "aspectra/graph.hpp"

namespace aspectra {

// Named graph families. Vertex labeling is fixed and documented per builder:
// base vertices first, then pendant-star leaves, then path vertices in order
// of attachment (each path laid out from the attachment point outward).
enum class Family {
    delta1,      // C3 + s leaves and paths a, b all at w2         (s,a,b)
    delta2,      // C3 + s leaves and path a at w2, path b at w3   (s,a,b)
    theta1,      // theta base + s leaves and paths a, b at w1     (s,a,b)
    theta2,      // same at w2                                     (s,a,b)
    theta3,      // s leaves and path a at w2, path b at w4        (s,a,b)
    theta4,      // s leaves and path a at w1, path b at w3        (s,a,b)
    theta5,      // s leaves at w2, path a at w1, path b at w3     (s,a,b)
    inf_base,    // two cycles C_{n1}, C_{n2} joined by a path P_{n3}
    theta_base,  // three internally disjoint u-v paths of lengths n1 >= n2 >= n3
    ustar2,      // unicyclic maximizer candidate                  (n,d)
    bstar3,      // bicyclic maximizer candidate, theta3 shape     (n,d)
    bstar5,      // bicyclic maximizer candidate, theta5 shape     (n,d)
    g1,          // seed graphs for the half-alpha comparison      (z)
    g2,
    g3,
    g4,
    h1,          // seed graphs with pendant paths attached        (a,b,z)
    h2,
    h3,
    h4,
    inf_small,   // two triangles sharing one vertex
    theta_small  // K4 minus an edge
};

struct FamilySpec {
    Family family;
    int s = 0, a = 0, b = 0;      // star size and path lengths
    int n = 0, d = 0;             // order and diameter, starred families
    int n1 = 0, n2 = 0, n3 = 0;   // base cycle/path sizes
    int z = 0;                    // seed pendant count
};

// "theta3:s=3,a=5,b=4", "bstar3:n=16,d=9", "g2:z=1", "inf:n1=3,n2=4,n3=2",
// "thetabase:n1=2,n2=2,n3=1", "infsmall", ...
FamilySpec parse_family_spec(const std::string& text);
std::string family_spec_to_string(const FamilySpec& spec);

// Builds the labeled family member; throws InvalidFamilyParams when the
// parameters violate the family's constraints. Builders for members that are
// pinned to an (n, d) pair re-verify order and diameter after construction.
Graph build(const FamilySpec& spec);

// Theta base on labels w1..w4 = 0..3 with deg(w1) = deg(w3) = 2 and
// deg(w2) = deg(w4) = 3; edges w1w2, w2w3, w3w4, w4w1, w2w4.
Graph theta_small();
// Two triangles sharing w0: labels w0..w4 = 0..4, deg(w0) = 4.
Graph inf_small();

// Balanced extremal members: paths of lengths ceil/floor around the target
// diameter, remaining vertices as pendant edges.
Graph ustar2(int n, int d);  // delta2 shape, d = a+b+1, s = n-d-2
Graph bstar3(int n, int d);  // theta3 shape, d = a+b+1, s = n-d-3
Graph bstar5(int n, int d);  // theta5 shape, d = a+b+2, s = n-d-2

// Seed graph i in {1..4} with z pendant edges, plus the two vertices that
// grow pendant paths: (G1,G2) carry z+1 leaves on w2 in two isomorphic
// shapes with different growth points; (G3,G4) add one unit path.
struct SeedGraph {
    Graph graph{0};
    int u1 = 0;
    int v1 = 0;
};
SeedGraph seed_graph(int i, int z);

// Seed graph i with pendant paths P_a at u1 and P_b at v1 (coalesced at the
// path ends, so a-1 and b-1 new vertices); hgraph(i,1,1,z) is the seed itself.
Graph hgraph(int i, int a, int b, int z);

}  // namespace aspectra

#endif
