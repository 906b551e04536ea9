#include "aspectra/families.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <utility>
#include <vector>

#include "aspectra/errors.hpp"

namespace aspectra {

namespace {

struct Builder {
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    int add_vertex() { return n++; }
    void add_edge(int u, int v) { edges.emplace_back(u, v); }

    void attach_leaves(int at, int count) {
        for (int i = 0; i < count; ++i) add_edge(at, add_vertex());
    }
    // Pendant path of `length` edges hanging at `at`.
    void attach_path(int at, int length) {
        int cur = at;
        for (int i = 0; i < length; ++i) {
            int next = add_vertex();
            add_edge(cur, next);
            cur = next;
        }
    }
    Graph graph() const { return Graph(n, edges); }
};

Builder c3_base() {
    Builder b;
    b.n = 3;
    b.add_edge(0, 1);
    b.add_edge(1, 2);
    b.add_edge(2, 0);
    return b;
}

Builder theta_base_builder() {
    Builder b;
    b.n = 4;
    b.add_edge(0, 1);
    b.add_edge(1, 2);
    b.add_edge(2, 3);
    b.add_edge(3, 0);
    b.add_edge(1, 3);
    return b;
}

void require(bool cond, const std::string& reason) {
    if (!cond) throw InvalidFamilyParams(reason);
}

// s leaves + two pendant paths, with the leaves and both paths at star_at for
// the one-vertex shapes, or the a-path at path_a_at and b-path at path_b_at.
Graph star_and_paths(Builder b, int star_at, int path_a_at, int path_b_at, int s, int a, int bb) {
    require(s >= 0 && a >= 0 && bb >= 0, "s, a, b must be nonnegative");
    b.attach_leaves(star_at, s);
    b.attach_path(path_a_at, a);
    b.attach_path(path_b_at, bb);
    return b.graph();
}

void verify_order_diameter(const Graph& g, int n, int d, const std::string& who) {
    if (g.vertex_count() != n)
        throw InvalidFamilyParams(who + ": constructed order " + std::to_string(g.vertex_count()) +
                                  " does not match requested " + std::to_string(n));
    auto diam = diameter(g);
    if (!diam || *diam != d)
        throw InvalidFamilyParams(who + ": constructed diameter " + (diam ? std::to_string(*diam) : "inf") +
                                  " does not match requested " + std::to_string(d));
}

}  // namespace

Graph theta_small() { return theta_base_builder().graph(); }

Graph inf_small() {
    Builder b;
    b.n = 5;
    b.add_edge(0, 1);
    b.add_edge(0, 2);
    b.add_edge(1, 2);
    b.add_edge(0, 3);
    b.add_edge(0, 4);
    b.add_edge(3, 4);
    return b.graph();
}

Graph ustar2(int n, int d) {
    require(n >= 4, "ustar2 needs n >= 4");
    require(d >= 2 && d <= n - 2, "ustar2 needs 2 <= d <= n-2");
    int a = d / 2;        // ceil((d-1)/2)
    int b = (d - 1) / 2;  // floor((d-1)/2)
    int s = n - 3 - a - b;
    FamilySpec spec{Family::delta2};
    spec.s = s;
    spec.a = a;
    spec.b = b;
    Graph g = build(spec);
    verify_order_diameter(g, n, d, "ustar2");
    return g;
}

Graph bstar3(int n, int d) {
    require(d >= 2, "bstar3 needs d >= 2");
    int a = d / 2;
    int b = (d - 1) / 2;
    int s = n - 4 - a - b;
    require(s >= 0, "bstar3 needs n >= d + 3");
    FamilySpec spec{Family::theta3};
    spec.s = s;
    spec.a = a;
    spec.b = b;
    Graph g = build(spec);
    verify_order_diameter(g, n, d, "bstar3");
    return g;
}

Graph bstar5(int n, int d) {
    require(d >= 3, "bstar5 needs d >= 3");
    int a = (d - 1) / 2;  // ceil((d-2)/2)
    int b = (d - 2) / 2;
    int s = n - 4 - a - b;
    require(s >= 0, "bstar5 needs n >= d + 2");
    FamilySpec spec{Family::theta5};
    spec.s = s;
    spec.a = a;
    spec.b = b;
    Graph g = build(spec);
    verify_order_diameter(g, n, d, "bstar5");
    return g;
}

SeedGraph seed_graph(int i, int z) {
    require(i >= 1 && i <= 4, "seed graph index must be in 1..4");
    require(z >= 0, "seed graph needs z >= 0");
    SeedGraph out;
    switch (i) {
        case 1: {  // theta3 shape (z;1,0): u1 = tip of the unit path at w2, v1 = w4
            FamilySpec spec{Family::theta3};
            spec.s = z;
            spec.a = 1;
            spec.b = 0;
            out.graph = build(spec);
            out.u1 = 4 + z;
            out.v1 = 3;
            break;
        }
        case 2: {  // theta5 shape (z+1;0,0): u1 = w1, v1 = w3
            FamilySpec spec{Family::theta5};
            spec.s = z + 1;
            out.graph = build(spec);
            out.u1 = 0;
            out.v1 = 2;
            break;
        }
        case 3: {  // theta3 shape (z;1,1): u1, v1 = the two path tips
            FamilySpec spec{Family::theta3};
            spec.s = z;
            spec.a = 1;
            spec.b = 1;
            out.graph = build(spec);
            out.u1 = 4 + z;
            out.v1 = 5 + z;
            break;
        }
        default: {  // theta5 shape (z+1;1,0) after (a,b) normalization:
            // the unit path sits at w1, so the bare degree-2 base vertex is w3
            FamilySpec spec{Family::theta5};
            spec.s = z + 1;
            spec.a = 1;
            out.graph = build(spec);
            out.u1 = 2;
            out.v1 = 5 + z;
            break;
        }
    }
    return out;
}

Graph hgraph(int i, int a, int b, int z) {
    require(a >= 1 && b >= 1, "hgraph needs a, b >= 1");
    SeedGraph seed = seed_graph(i, z);
    Builder builder;
    builder.n = seed.graph.vertex_count();
    builder.edges = seed.graph.edges();
    builder.attach_path(seed.u1, a - 1);
    builder.attach_path(seed.v1, b - 1);
    return builder.graph();
}

namespace {

Graph build_inf_base(int n1, int n2, int n3) {
    require(n1 >= 3 && n2 >= 3, "cycle lengths must be at least 3");
    require(n3 >= 1, "joining path needs at least one vertex");
    Builder b;
    for (int i = 0; i < n1; ++i) b.add_vertex();
    for (int i = 0; i < n1; ++i) b.add_edge(i, (i + 1) % n1);
    int join = 0;
    int v;
    if (n3 == 1) {
        v = join;  // the two cycles share vertex 0
    } else {
        v = b.n;
        for (int i = 0; i < n2; ++i) b.add_vertex();
        for (int i = 0; i < n2; ++i) b.add_edge(v + i, v + (i + 1) % n2);
        // path of n3 vertices from join to v: n3-2 interior vertices
        int cur = join;
        for (int i = 0; i < n3 - 2; ++i) {
            int next = b.add_vertex();
            b.add_edge(cur, next);
            cur = next;
        }
        b.add_edge(cur, v);
        return b.graph();
    }
    // shared-vertex case: second cycle through join
    int prev = join;
    for (int i = 0; i < n2 - 1; ++i) {
        int next = b.add_vertex();
        b.add_edge(prev, next);
        prev = next;
    }
    b.add_edge(prev, join);
    return b.graph();
}

Graph build_theta_base(int n1, int n2, int n3) {
    require(n1 >= n2 && n2 >= n3 && n3 >= 1, "path lengths must satisfy n1 >= n2 >= n3 >= 1");
    require(n2 >= 2, "at most one u-v path may be a single edge");
    Builder b;
    int u = b.add_vertex();
    int v = b.add_vertex();
    for (int len : {n1, n2, n3}) {
        int cur = u;
        for (int i = 0; i < len - 1; ++i) {
            int next = b.add_vertex();
            b.add_edge(cur, next);
            cur = next;
        }
        b.add_edge(cur, v);
    }
    return b.graph();
}

}  // namespace

Graph build(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::delta1:
            return star_and_paths(c3_base(), 1, 1, 1, spec.s, std::max(spec.a, spec.b), std::min(spec.a, spec.b));
        case Family::delta2:
            return star_and_paths(c3_base(), 1, 1, 2, spec.s, spec.a, spec.b);
        case Family::theta1:
            return star_and_paths(theta_base_builder(), 0, 0, 0, spec.s, std::max(spec.a, spec.b),
                                  std::min(spec.a, spec.b));
        case Family::theta2:
            return star_and_paths(theta_base_builder(), 1, 1, 1, spec.s, std::max(spec.a, spec.b),
                                  std::min(spec.a, spec.b));
        case Family::theta3:
            return star_and_paths(theta_base_builder(), 1, 1, 3, spec.s, spec.a, spec.b);
        case Family::theta4:
            return star_and_paths(theta_base_builder(), 0, 0, 2, spec.s, spec.a, spec.b);
        case Family::theta5:
            return star_and_paths(theta_base_builder(), 1, 0, 2, spec.s, std::max(spec.a, spec.b),
                                  std::min(spec.a, spec.b));
        case Family::inf_base:
            return build_inf_base(spec.n1, spec.n2, spec.n3);
        case Family::theta_base:
            return build_theta_base(spec.n1, spec.n2, spec.n3);
        case Family::ustar2:
            return ustar2(spec.n, spec.d);
        case Family::bstar3:
            return bstar3(spec.n, spec.d);
        case Family::bstar5:
            return bstar5(spec.n, spec.d);
        case Family::g1:
        case Family::g2:
        case Family::g3:
        case Family::g4:
            return seed_graph(static_cast<int>(spec.family) - static_cast<int>(Family::g1) + 1, spec.z).graph;
        case Family::h1:
        case Family::h2:
        case Family::h3:
        case Family::h4:
            return hgraph(static_cast<int>(spec.family) - static_cast<int>(Family::h1) + 1, spec.a, spec.b,
                          spec.z);
        case Family::inf_small:
            return inf_small();
        case Family::theta_small:
            return theta_small();
    }
    throw InvalidFamilyParams("unknown family");
}

namespace {

const std::map<std::string, Family>& name_table() {
    static const std::map<std::string, Family> table = {
        {"delta1", Family::delta1},   {"delta2", Family::delta2},
        {"theta1", Family::theta1},   {"theta2", Family::theta2},
        {"theta3", Family::theta3},   {"theta4", Family::theta4},
        {"theta5", Family::theta5},   {"infbase", Family::inf_base},
        {"thetabase", Family::theta_base}, {"ustar2", Family::ustar2},
        {"bstar3", Family::bstar3},   {"bstar5", Family::bstar5},
        {"g1", Family::g1},           {"g2", Family::g2},
        {"g3", Family::g3},           {"g4", Family::g4},
        {"h1", Family::h1},           {"h2", Family::h2},
        {"h3", Family::h3},           {"h4", Family::h4},
        {"infsmall", Family::inf_small}, {"thetasmall", Family::theta_small},
    };
    return table;
}

}  // namespace

FamilySpec parse_family_spec(const std::string& text) {
    std::string name = text;
    std::string params;
    if (auto colon = text.find(':'); colon != std::string::npos) {
        name = text.substr(0, colon);
        params = text.substr(colon + 1);
    }
    auto it = name_table().find(name);
    if (it == name_table().end()) throw InvalidFamilyParams("unknown family name '" + name + "'");
    FamilySpec spec{it->second};
    std::istringstream in(params);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos) throw InvalidFamilyParams("expected key=value, got '" + item + "'");
        std::string key = item.substr(0, eq);
        int value;
        try {
            value = std::stoi(item.substr(eq + 1));
        } catch (const std::exception&) {
            throw InvalidFamilyParams("bad integer in '" + item + "'");
        }
        if (key == "s") spec.s = value;
        else if (key == "a") spec.a = value;
        else if (key == "b") spec.b = value;
        else if (key == "n") spec.n = value;
        else if (key == "d") spec.d = value;
        else if (key == "z") spec.z = value;
        else if (key == "n1") spec.n1 = value;
        else if (key == "n2") spec.n2 = value;
        else if (key == "n3") spec.n3 = value;
        else throw InvalidFamilyParams("unknown key '" + key + "'");
    }
    return spec;
}

std::string family_spec_to_string(const FamilySpec& spec) {
    std::string name;
    for (const auto& [key, fam] : name_table()) {
        if (fam == spec.family) {
            name = key;
            break;
        }
    }
    std::ostringstream os;
    os << name;
    switch (spec.family) {
        case Family::delta1:
        case Family::delta2:
        case Family::theta1:
        case Family::theta2:
        case Family::theta3:
        case Family::theta4:
        case Family::theta5:
            os << ":s=" << spec.s << ",a=" << spec.a << ",b=" << spec.b;
            break;
        case Family::inf_base:
        case Family::theta_base:
            os << ":n1=" << spec.n1 << ",n2=" << spec.n2 << ",n3=" << spec.n3;
            break;
        case Family::ustar2:
        case Family::bstar3:
        case Family::bstar5:
            os << ":n=" << spec.n << ",d=" << spec.d;
            break;
        case Family::g1:
        case Family::g2:
        case Family::g3:
        case Family::g4:
            os << ":z=" << spec.z;
            break;
        case Family::h1:
        case Family::h2:
        case Family::h3:
        case Family::h4:
            os << ":a=" << spec.a << ",b=" << spec.b << ",z=" << spec.z;
            break;
        default:
            break;
    }
    return os.str();
}

}  // namespace aspectra
