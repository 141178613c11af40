#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cstri/cstri.hpp"
#include "oracles.hpp"

using namespace cstri;

TEST_CASE("base tower") {
    Tower t = base_tower();
    REQUIRE(t.levels.size() == 2);
    CHECK(t.levels[0].sphere.f_vector() == FVector{2});
    CHECK(t.levels[1].sphere.f_vector() == FVector{6, 6});
    CHECK(t.levels[1].cert.ball_b.boundary() == t.levels[0].sphere);
    CHECK(t.levels[0].cert.ball_b.boundary() == SimplicialComplex::empty_complex());
    CHECK(verify_certificate(t).ok);
}

TEST_CASE("extension pieces from the 6-cycle") {
    Tower t = base_tower();
    CHECK(top_layer_set(t) == std::vector<Vertex>{1, 2, 3});
    ExtensionTrace tr = extend_trace(t);
    CHECK(tr.capped.vertex_count() == 16);
    CHECK(tr.capped.euler_characteristic() == 2);
    CHECK(tr.capped.boundary().is_void());
    CHECK(tr.contraction_count == 4);
    CHECK(tr.contracted.vertex_count() == 12);

    // the embedded sphere keeps the ball_d layers on both sides
    for (const auto& f : t.levels[1].cert.ball_d.facets()) {
        CHECK(tr.embedded.contains_sorted(prism_face(f, 1)));
        CHECK(tr.embedded.contains_sorted(antipode(prism_face(f, 1))));
    }
}

TEST_CASE("dimension 2 gives the icosahedron") {
    Tower t = build_tower(2);
    const SimplicialComplex& s2 = t.top();
    CHECK(s2.f_vector() == FVector{12, 30, 20});
    for (Vertex v : s2.vertices()) {
        SimplicialComplex lk = s2.link({v});
        CHECK(lk.f_vector() == FVector{5, 5});
        CHECK(check_closed_pseudomanifold(lk).ok);
    }
    CHECK(quotient_rp(s2).f_vector() == FVector{6, 15, 10});

    // the 6-cycle sits inside as an induced cs subcomplex
    SimplicialComplex s1 = t.levels[1].sphere;
    CHECK(s1.is_subcomplex_of(s2));
    CHECK(s2.induced(s1.vertices()) == s1);
}

TEST_CASE("degenerate and small builds") {
    Tower t0 = build_tower(0);
    REQUIRE(t0.levels.size() == 1);
    CHECK(t0.top() == SimplicialComplex::from_facets({{3}, {-3}}));
    CHECK_THROWS_AS(build_projective(0), Error);
    CHECK(build_projective(1) == SimplicialComplex::from_facets({{1, 2}, {1, 3}, {2, 3}}));
}

TEST_CASE("vertex count recursion") {
    Tower t = build_tower(4);
    for (std::size_t i = 2; i < t.levels.size(); ++i) {
        CHECK(t.levels[i].sphere.vertex_count() ==
              t.levels[i - 1].sphere.vertex_count() + t.levels[i - 2].sphere.vertex_count() + 4);
        CHECK(t.levels[i].sphere.vertex_count() == sphere_f0(static_cast<int>(i)));
        CHECK(t.levels[i].contractions ==
              2 * t.levels[i - 1].cert.ball_d.vertex_count());
    }
}

TEST_CASE("builds are deterministic and levels are stable") {
    Tower a = build_tower(3);
    Tower b = build_tower(3);
    for (std::size_t i = 0; i < a.levels.size(); ++i) {
        CHECK(a.levels[i].sphere == b.levels[i].sphere);
        CHECK(a.levels[i].cert.ball_b == b.levels[i].cert.ball_b);
        CHECK(a.levels[i].cert.ball_d == b.levels[i].cert.ball_d);
        CHECK(a.levels[i].cert.apex == b.levels[i].cert.apex);
    }
    Tower c = build_tower(2);
    CHECK(c.top() == a.levels[2].sphere);
}

TEST_CASE("contractions do not depend on the order") {
    for (int level = 2; level <= 3; ++level) {
        Tower t = build_tower(level - 1);
        ExtensionTrace tr = extend_trace(t);
        std::vector<Vertex> order = t.levels.back().cert.ball_d.vertices();
        std::sort(order.begin(), order.end(), label_order);
        std::reverse(order.begin(), order.end());
        long long count = 0;
        SimplicialComplex reversed = contract_vertical_pairs(tr.capped, order, &count);
        CHECK(count == tr.contraction_count);
        CHECK(reversed == tr.contracted);
    }
}

TEST_CASE("every vertical edge of a tower prism satisfies the link condition") {
    for (int level = 2; level <= 4; ++level) {
        Tower t = build_tower(level - 1);
        ExtensionTrace tr = extend_trace(t);
        for (Vertex u : t.top().vertices()) {
            Face e{prism_vertex(u, 1), prism_vertex(u, -1)};
            std::sort(e.begin(), e.end());
            CHECK(tr.prism.satisfies_link_condition(e));
        }
    }
}

TEST_CASE("each guarded contraction drops f by the link's shifted counts") {
    // when the link condition holds, contracting e removes one face per
    // face containing e and one per merged pair, so
    // f_j -> f_j - f_{j-2}(lk e) - f_{j-1}(lk e), with f_{-1} = 1
    for (int level = 2; level <= 3; ++level) {
        Tower t = build_tower(level - 1);
        ExtensionTrace tr = extend_trace(t);
        SimplicialComplex c = tr.capped;
        std::vector<Vertex> order = t.levels.back().cert.ball_d.vertices();
        std::sort(order.begin(), order.end(), label_order);
        for (Vertex u : order) {
            for (int side = 0; side < 2; ++side) {
                Vertex survivor = prism_vertex(u, 1), other = prism_vertex(u, -1);
                if (side == 1) {
                    survivor = -survivor;
                    other = -other;
                }
                Face e = survivor < other ? Face{survivor, other} : Face{other, survivor};
                REQUIRE(c.satisfies_link_condition(e));
                SimplicialComplex lk = c.link(e);
                auto lk_count = [&](int k) {
                    if (k == -1) return 1LL;
                    if (k < -1) return 0LL;
                    return lk.face_count(k);
                };
                FVector before = c.f_vector();
                c = c.contract_edge(e, survivor);
                FVector after = c.f_vector();
                REQUIRE(after.size() == before.size());
                for (std::size_t j = 0; j < before.size(); ++j) {
                    const long long drop = lk_count(static_cast<int>(j) - 2) + lk_count(static_cast<int>(j) - 1);
                    CHECK(after[j] == before[j] - drop);
                }
            }
        }
        CHECK(c == tr.contracted);
    }
}

TEST_CASE("guarded contraction aborts when the link condition fails") {
    // vertical pair over base vertex 1 is {1, -2}; the tips 1 and -2 share
    // the neighbor 5 but {1, -2} bounds nothing
    SimplicialComplex bad = SimplicialComplex::from_facets({{1, 5}, {-2, 5}, {-2, 1}, {-1, 2}, {-5, 2}, {-5, -1}});
    try {
        contract_vertical_pairs(bad, {1});
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == "contraction-unsound");
    }
}

TEST_CASE("certificates verify on a mid-size tower") {
    Tower t = build_tower(3);
    CertificateReport rep = verify_certificate(t);
    CHECK(rep.ok);
    if (!rep.ok)
        for (const auto& f : rep.failures) MESSAGE(f);
}

TEST_CASE("a corrupted certificate is rejected with a named invariant") {
    Tower t = build_tower(2);
    Certificate& cert = t.levels[2].cert;
    std::vector<Face> fs = cert.ball_b.facets();
    fs.pop_back();
    cert.ball_b = SimplicialComplex::from_facets(fs);
    CertificateReport rep = verify_certificate(t);
    CHECK(!rep.ok);
    bool named = false;
    for (const auto& f : rep.failures)
        if (f.find("b-union") != std::string::npos || f.find("b-boundary") != std::string::npos)
            named = true;
    CHECK(named);
}

TEST_CASE("no induced cs 4-cycles, against the brute-force oracle") {
    Tower t = build_tower(4);
    for (const auto& lvl : t.levels) {
        CHECK(!find_induced_cs_4cycle(lvl.sphere));
        CHECK(oracle::cs_4cycles(lvl.sphere).empty());
    }
}

TEST_CASE("face counts do not depend on the chosen valid orientation") {
    // supply a different symmetric locally acyclic orientation for one
    // extension step; the resulting face vector is unchanged
    Tower t = build_tower(2);
    std::vector<Vertex> w = top_layer_set(t);
    Orientation reversed;
    auto in_top = [&](Vertex v) { return std::binary_search(w.begin(), w.end(), v); };
    for (const auto& e : t.top().faces(1)) {
        const Vertex a = e[0], b = e[1];
        const bool ta = in_top(a), tb = in_top(b);
        if (ta && tb) {
            label_order(a, b) ? reversed.orient(b, a) : reversed.orient(a, b);
        } else if (!ta && !tb) {
            label_order(-b, -a) ? reversed.orient(b, a) : reversed.orient(a, b);
        } else {
            ta ? reversed.orient(a, b) : reversed.orient(b, a);
        }
    }
    REQUIRE(validate_orientation(t.top(), reversed, true, &w).ok);
    Tower variant = t;
    extend(variant, &reversed);
    extend(t);
    CHECK(t.top().f_vector() == variant.top().f_vector());

    // an orientation violating the crossing rule is rejected
    Tower doomed = build_tower(2);
    Orientation bad = reversed;
    for (const auto& e : doomed.top().faces(1)) {
        const bool ta = in_top(e[0]), tb = in_top(e[1]);
        if (ta != tb) {
            const Vertex from = ta ? e[1] : e[0];  // points into the top set
            const Vertex to = ta ? e[0] : e[1];
            bad.orient(from, to);
            bad.orient(-to, -from);
            break;
        }
    }
    CHECK_THROWS_AS(extend(doomed, &bad), Error);
}

TEST_CASE("capped prism Euler characteristic alternates") {
    for (int level = 2; level <= 4; ++level) {
        Tower t = build_tower(level - 1);
        ExtensionTrace tr = extend_trace(t);
        CHECK(tr.capped.euler_characteristic() == (level % 2 == 0 ? 2 : 0));
        CHECK(tr.capped.vertex_count() == 2 * t.top().vertex_count() + 4);
    }
}

TEST_CASE("quotients halve every face count") {
    Tower t = build_tower(3);
    for (int d = 1; d <= 3; ++d) {
        const SimplicialComplex& s = t.levels[static_cast<std::size_t>(d)].sphere;
        SimplicialComplex q = quotient_rp(s);
        FVector fs = s.f_vector(), fq = q.f_vector();
        REQUIRE(fs.size() == fq.size());
        for (std::size_t k = 0; k < fs.size(); ++k) CHECK(fs[k] == 2 * fq[k]);
    }
}

TEST_CASE("published face vectors at small dimensions") {
    Tower t = build_tower(3);
    CHECK(quotient_rp(t.levels[1].sphere).f_vector() == FVector{3, 3});
    CHECK(quotient_rp(t.levels[2].sphere).f_vector() == FVector{6, 15, 10});
    CHECK(quotient_rp(t.levels[3].sphere).f_vector() == FVector{11, 52, 82, 41});
}

TEST_CASE("homology of the dimension-3 quotient") {
    SimplicialComplex rp3 = build_projective(3);
    HomologyGroups h = homology_Z(rp3);
    REQUIRE(h.groups.size() == 4);
    CHECK(h.groups[0].to_string() == "Z");
    CHECK(h.groups[1].to_string() == "Z/2");
    CHECK(h.groups[2].to_string() == "0");
    CHECK(h.groups[3].to_string() == "Z");
    CHECK(betti_gf2(rp3) == std::vector<long long>{1, 1, 1, 1});
}
