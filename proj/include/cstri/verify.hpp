#pragma once

#include <climits>
#include <string>
#include <vector>

#include "cstri/cs.hpp"
#include "cstri/homology.hpp"
#include "cstri/tower.hpp"

namespace cstri {

struct CertificateReport {
    bool ok = true;
    std::vector<std::string> failures;

    void flag(int level, const std::string& name, const std::string& detail) {
        ok = false;
        failures.push_back("level " + std::to_string(level) + ": " + name +
                           (detail.empty() ? "" : (": " + detail)));
    }
};

/// Checks every certificate invariant on each level up to max_level:
/// the sphere is cs; the level below is included; ball_b and its antipode
/// cover the sphere and meet exactly in the level below, which is also
/// ball_b's boundary; deleting the level below leaves exactly ball_d and
/// its antipode; the apex stars cover the vertices disjointly; both balls
/// have the GF(2) homology of a point.
inline CertificateReport verify_certificate(const Tower& t, int max_level = INT_MAX) {
    CertificateReport rep;
    const int top = std::min(t.top_dim(), max_level);
    for (int i = 0; i <= top; ++i) {
        const TowerLevel& lvl = t.levels[static_cast<std::size_t>(i)];
        const SimplicialComplex& s = lvl.sphere;
        const SimplicialComplex& b = lvl.cert.ball_b;
        const SimplicialComplex& d = lvl.cert.ball_d;
        const SimplicialComplex bneg = antipode(b);
        const SimplicialComplex prev =
            i > 0 ? t.levels[static_cast<std::size_t>(i - 1)].sphere : SimplicialComplex::empty_complex();

        CsReport cs = check_cs(s);
        if (!cs.ok) rep.flag(i, "cs", cs.what);

        if (!prev.is_subcomplex_of(s)) rep.flag(i, "inclusion", "level below not a subcomplex");

        {
            std::vector<Face> both = b.facets();
            const auto& bf = bneg.facets();
            both.insert(both.end(), bf.begin(), bf.end());
            if (SimplicialComplex::from_facets(std::move(both)) != s)
                rep.flag(i, "b-union", "ball_b and its antipode do not cover the sphere");
        }

        if (b.boundary() != prev) rep.flag(i, "b-boundary", "boundary of ball_b differs from the level below");

        for (int k = 0; k <= std::max(b.dim(), bneg.dim()); ++k) {
            const auto& fb = b.faces(k);
            const auto& fn = bneg.faces(k);
            std::vector<Face> inter;
            std::set_intersection(fb.begin(), fb.end(), fn.begin(), fn.end(), std::back_inserter(inter));
            if (inter != prev.faces(k)) {
                rep.flag(i, "b-intersection",
                         "ball_b meet antipode differs from the level below at dimension " + std::to_string(k));
                break;
            }
        }

        {
            SimplicialComplex del = s.deletion(prev);
            std::vector<SimplicialComplex> comps = del.connected_components();
            if (comps.size() != 2) {
                rep.flag(i, "deletion", std::to_string(comps.size()) + " components, expected 2");
            } else {
                std::vector<SimplicialComplex> expected{d, antipode(d)};
                std::sort(expected.begin(), expected.end(),
                          [](const SimplicialComplex& a, const SimplicialComplex& c2) {
                              return a.facets() < c2.facets();
                          });
                if (!(expected[0] == comps[0] && expected[1] == comps[1]))
                    rep.flag(i, "deletion", "components differ from ball_d and its antipode");
            }
        }

        {
            if (!d.has_vertex(lvl.cert.apex)) rep.flag(i, "apex", "apex is not a vertex of ball_d");
            std::vector<Vertex> cover = s.star(Face{lvl.cert.apex}).vertices();
            const auto anti = s.star(Face{-lvl.cert.apex}).vertices();
            cover.insert(cover.end(), anti.begin(), anti.end());
            std::sort(cover.begin(), cover.end());
            if (std::adjacent_find(cover.begin(), cover.end()) != cover.end())
                rep.flag(i, "star-cover", "apex stars overlap");
            else if (cover != s.vertices())
                rep.flag(i, "star-cover", "apex stars do not cover all vertices");
        }

        if (!is_gf2_point(betti_gf2(b))) rep.flag(i, "b-point", "ball_b fails the point homology test");
        if (!is_gf2_point(betti_gf2(d))) rep.flag(i, "d-point", "ball_d fails the point homology test");

        if (i >= 2) {
            const long long expected =
                2 * t.levels[static_cast<std::size_t>(i - 1)].cert.ball_d.vertex_count();
            if (lvl.contractions != expected)
                rep.flag(i, "contractions",
                         std::to_string(lvl.contractions) + " performed, expected " + std::to_string(expected));
        }
    }
    return rep;
}

}  // namespace cstri
