#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "cstri/prism.hpp"
#include "oracles.hpp"

using namespace cstri;

namespace {

SimplicialComplex six_cycle() {
    return SimplicialComplex::from_facets({{-3, 1}, {1, 2}, {2, 3}, {-1, 3}, {-2, -1}, {-3, -2}});
}

Orientation canonical_six() { return canonical_orientation(six_cycle(), {1, 2, 3}); }

}  // namespace

TEST_CASE("prism vertex codes negate with the involution") {
    for (Vertex u : {1, -1, 2, -5, 17}) {
        CHECK(prism_base(prism_vertex(u, 1)) == u);
        CHECK(prism_base(prism_vertex(u, -1)) == u);
        CHECK(prism_level(prism_vertex(u, 1)) == 1);
        CHECK(prism_level(prism_vertex(u, -1)) == -1);
        CHECK(prism_vertex(-u, -1) == -prism_vertex(u, 1));
        CHECK(prism_vertex(-u, 1) == -prism_vertex(u, -1));
    }
}

TEST_CASE("canonical orientation of the 6-cycle") {
    Orientation o = canonical_six();
    CHECK(o.size() == 6);
    CHECK(o.oriented(1, 2));
    CHECK(o.oriented(2, 3));
    CHECK(o.oriented(1, -3));   // crossing edges leave the top set
    CHECK(o.oriented(3, -1));
    CHECK(o.oriented(-2, -1));  // reversed on the antipodal side
    CHECK(o.oriented(-3, -2));
    CHECK(validate_orientation(six_cycle(), o, true, nullptr).ok);

    CHECK_THROWS_AS(canonical_orientation(six_cycle(), {1, 2}), Error);
}

TEST_CASE("orientation validation") {
    SimplicialComplex tri = SimplicialComplex::from_facets({{1, 2, 3}});
    Orientation cycle;
    cycle.orient(1, 2);
    cycle.orient(2, 3);
    cycle.orient(3, 1);
    CHECK(!validate_orientation(tri, cycle).ok);

    Orientation total;  // induced by a global vertex order, always valid
    total.orient(1, 2);
    total.orient(2, 3);
    total.orient(1, 3);
    CHECK(validate_orientation(tri, total).ok);

    Orientation partial;
    partial.orient(1, 2);
    CHECK(!validate_orientation(tri, partial).ok);

    // symmetry check: orient both W-edges the same way instead of reversed
    SimplicialComplex cyc = six_cycle();
    Orientation asym = canonical_six();
    asym.orient(-1, -2);  // breaks order reversal for {1,2}
    CHECK(validate_orientation(cyc, asym).ok);  // still locally acyclic
    CHECK(!validate_orientation(cyc, asym, true).ok);
}

TEST_CASE("staircase prism over a single edge") {
    SimplicialComplex e = SimplicialComplex::from_facets({{1, 2}});
    Orientation o;
    o.orient(1, 2);
    SimplicialComplex prism = staircase_prism(e, o);
    const Vertex t1 = prism_vertex(1, 1), b1 = prism_vertex(1, -1);
    const Vertex t2 = prism_vertex(2, 1), b2 = prism_vertex(2, -1);
    Face f1{t1, b1, b2}, f2{t1, t2, b2};
    std::sort(f1.begin(), f1.end());
    std::sort(f2.begin(), f2.end());
    CHECK(prism == SimplicialComplex::from_facets({f1, f2}));
}

TEST_CASE("staircase prism over the 6-cycle") {
    SimplicialComplex base = six_cycle();
    SimplicialComplex prism = staircase_prism(base, canonical_six());
    CHECK(prism.f_vector() == FVector{12, 24, 12});

    // diagonal edges are exactly the oriented pairs
    std::set<Face> diagonals;
    for (const auto& e : prism.faces(1)) {
        const Vertex a = prism_base(e[0]), b = prism_base(e[1]);
        if (a == b) continue;                                      // vertical
        if (prism_level(e[0]) == prism_level(e[1])) continue;      // layer copy
        diagonals.insert(e);
    }
    std::set<Face> expected;
    Orientation o = canonical_six();
    for (const auto& e : base.faces(1)) {
        const Vertex from = o.oriented(e[0], e[1]) ? e[0] : e[1];
        const Vertex to = from == e[0] ? e[1] : e[0];
        Face d{prism_vertex(from, 1), prism_vertex(to, -1)};
        std::sort(d.begin(), d.end());
        expected.insert(d);
    }
    CHECK(diagonals == expected);

    // boundary: two disjoint copies of the base
    SimplicialComplex bd = prism.boundary();
    auto comps = bd.connected_components();
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].f_vector() == FVector{6, 6});
    CHECK(comps[1].f_vector() == FVector{6, 6});
    CHECK(comps[0] == prism_layer(base, -1));
    CHECK(comps[1] == prism_layer(base, 1));

    // every vertical edge satisfies the link condition
    for (Vertex u : base.vertices()) {
        Face v{prism_vertex(u, 1), prism_vertex(u, -1)};
        std::sort(v.begin(), v.end());
        CHECK(prism.satisfies_link_condition(v));
    }
}

TEST_CASE("staircase facet count is k per (k-1)-face") {
    SimplicialComplex ico = SimplicialComplex::from_facets(oracle::icosahedron());
    Orientation o;  // global order on 1..12
    for (const auto& e : ico.faces(1)) o.orient(e[0], e[1]);
    SimplicialComplex prism = staircase_prism(ico, o);
    CHECK(prism.facet_count() == 3 * ico.facet_count());
    CHECK(prism.dim() == 3);
}

TEST_CASE("prism face counts do not depend on the orientation") {
    SimplicialComplex cyc = six_cycle();
    Orientation a = canonical_six();
    Orientation b;  // a different symmetric orientation: reversed inside the top set
    b.orient(2, 1);
    b.orient(3, 2);
    b.orient(1, -3);
    b.orient(3, -1);
    b.orient(-1, -2);
    b.orient(-2, -3);
    std::vector<Vertex> top{1, 2, 3};
    CHECK(validate_orientation(cyc, b, true, &top).ok);
    CHECK(staircase_prism(cyc, a).f_vector() == staircase_prism(cyc, b).f_vector());
}

TEST_CASE("prism is cs exactly when the orientation is order reversing") {
    SimplicialComplex cyc = six_cycle();
    CHECK(check_cs(staircase_prism(cyc, canonical_six())).ok);

    Orientation asym = canonical_six();
    asym.orient(-1, -2);
    CHECK(!check_cs(staircase_prism(cyc, asym)).ok);
}

TEST_CASE("embedding the base sphere into its prism") {
    SimplicialComplex cyc = six_cycle();
    Orientation o = canonical_six();
    SimplicialComplex prism = staircase_prism(cyc, o);
    EmbeddedSphere emb = embed_in_prism(cyc, {1, 2, 3}, o, prism);

    CHECK(emb.embedding(1) == prism_vertex(1, 1));
    CHECK(emb.embedding(-3) == prism_vertex(-3, -1));
    Face diag{prism_vertex(1, 1), prism_vertex(-3, -1)};
    std::sort(diag.begin(), diag.end());
    CHECK(prism.contains_sorted(diag));
    CHECK(emb.complex.contains_sorted(diag));

    // edges inside the top set map to the +1 layer
    Face top_edge{prism_vertex(1, 1), prism_vertex(2, 1)};
    std::sort(top_edge.begin(), top_edge.end());
    CHECK(emb.complex.contains_sorted(top_edge));

    CHECK(check_cs(emb.complex).ok);  // cs under the prism involution
    CHECK(emb.complex.f_vector() == cyc.f_vector());
    CHECK(is_induced_subcomplex(emb.complex, prism));
}
