#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "cstri/complex.hpp"
#include "cstri/cs.hpp"
#include "cstri/homology.hpp"
#include "cstri/prism.hpp"

namespace cstri {

/// Per-level witness data: two balls and an apex vertex. ball_b is half of
/// the sphere bounded by the level below; ball_d is one side of the
/// deletion of the level below; apex is a vertex of ball_d whose star,
/// together with its antipode's star, covers all vertices.
struct Certificate {
    SimplicialComplex ball_b;
    SimplicialComplex ball_d;
    Vertex apex = 0;
};

struct TowerLevel {
    SimplicialComplex sphere;  // cs sphere of dimension = level index
    Certificate cert;
    long long contractions = 0;  // edge contractions performed to build this level
};

/// The inductive flag of cs spheres S_0 in S_1 in ... in S_d, with one
/// certificate per level. Lower levels are literal subcomplexes of the
/// higher ones under the maintained labeling.
struct Tower {
    std::vector<TowerLevel> levels;

    int top_dim() const { return static_cast<int>(levels.size()) - 1; }
    const SimplicialComplex& top() const { return levels.back().sphere; }

    Tower truncated(int d) const {
        Tower t;
        t.levels.assign(levels.begin(), levels.begin() + d + 1);
        return t;
    }
};

/// Levels 0 and 1: the antipodal point pair {3, -3} and the cs 6-cycle,
/// with hand-checkable certificates.
inline Tower base_tower() {
    Tower t;
    TowerLevel l0;
    l0.sphere = SimplicialComplex::from_facets({{3}, {-3}});
    l0.cert.ball_b = SimplicialComplex::from_facets({{3}});
    l0.cert.ball_d = SimplicialComplex::from_facets({{3}});
    l0.cert.apex = 3;
    t.levels.push_back(std::move(l0));

    TowerLevel l1;
    l1.sphere = SimplicialComplex::from_facets(
        {{-3, 1}, {1, 2}, {2, 3}, {-1, 3}, {-2, -1}, {-3, -2}});
    l1.cert.ball_b = SimplicialComplex::from_facets({{-3, 1}, {1, 2}, {2, 3}});
    l1.cert.ball_d = SimplicialComplex::from_facets({{1, 2}});
    l1.cert.apex = 1;
    t.levels.push_back(std::move(l1));
    return t;
}

/// The top-layer vertex set for the next extension: the vertices of the
/// current ball_d together with the vertices of the previous apex's star
/// one level below. One vertex per antipodal pair.
inline std::vector<Vertex> top_layer_set(const Tower& t) {
    if (t.levels.size() < 2) fail("certificate", "extension needs at least two levels");
    const TowerLevel& cur = t.levels.back();
    const TowerLevel& prev = t.levels[t.levels.size() - 2];
    std::vector<Vertex> w = cur.cert.ball_d.vertices();
    SimplicialComplex st = prev.sphere.star(Face{prev.cert.apex});
    const auto& sv = st.vertices();
    w.insert(w.end(), sv.begin(), sv.end());
    std::sort(w.begin(), w.end());
    w.erase(std::unique(w.begin(), w.end()), w.end());
    return w;
}

/// Contracts the vertical edge pair over each listed base vertex, the edge
/// first and then its antipode, asserting the link condition immediately
/// before every contraction. Survivors are the +1 vertex and, for the
/// antipodal edge, its antipode, so the complex stays cs throughout.
inline SimplicialComplex contract_vertical_pairs(SimplicialComplex c,
                                                 const std::vector<Vertex>& base_vertices,
                                                 long long* count_out = nullptr) {
    long long count = 0;
    for (Vertex u : base_vertices) {
        for (int side = 0; side < 2; ++side) {
            Vertex survivor = prism_vertex(u, 1);
            Vertex other = prism_vertex(u, -1);
            if (side == 1) {
                survivor = -survivor;
                other = -other;
            }
            Face e = survivor < other ? Face{survivor, other} : Face{other, survivor};
            if (!c.contains_sorted(e))
                fail("contraction-unsound", "vertical edge " + face_to_string(e) + " not present");
            if (!c.satisfies_link_condition(e))
                fail("contraction-unsound",
                     "link condition fails at edge " + face_to_string(e));
            c = c.contract_edge(e, survivor);
            ++count;
        }
    }
    if (count_out) *count_out = count;
    return c;
}

/// Intermediates of one extension step, in prism labels. Exposed so tests
/// can probe each stage of the construction.
struct ExtensionTrace {
    std::vector<Vertex> top_set;
    Orientation orientation;
    SimplicialComplex prism;
    PrismEmbedding embedding;
    SimplicialComplex embedded;  // induced copy of the current sphere in the prism
    SimplicialComplex capped;    // prism closed off by the four cone apexes
    Vertex apex_pos = 0, apex_neg = 0, coapex_pos = 0, coapex_neg = 0;
    SimplicialComplex contracted;
    long long contraction_count = 0;
};

inline ExtensionTrace extend_trace(const Tower& t, const Orientation* custom = nullptr) {
    const TowerLevel& cur = t.levels.back();
    const TowerLevel& prev = t.levels[t.levels.size() - 2];
    const SimplicialComplex& s = cur.sphere;
    const int d = t.top_dim() + 1;  // dimension of the sphere being built

    ExtensionTrace tr;
    tr.top_set = top_layer_set(t);
    if (custom) {
        OrientationReport r = validate_orientation(s, *custom, true, &tr.top_set);
        if (!r.ok) fail("orientation", "supplied orientation invalid: " + r.what);
        tr.orientation = *custom;
    } else {
        tr.orientation = canonical_orientation(s, tr.top_set);
    }
    tr.prism = staircase_prism(s, tr.orientation);

    EmbeddedSphere emb = embed_in_prism(s, tr.top_set, tr.orientation, tr.prism);
    tr.embedded = emb.complex;
    tr.embedding = emb.embedding;
    for (const auto& f : cur.cert.ball_d.facets()) {
        if (!tr.embedded.contains_sorted(prism_face(f, 1)) ||
            !tr.embedded.contains_sorted(antipode(prism_face(f, 1))))
            fail("builder-invariant", "embedded sphere misses a ball_d layer face");
    }

    Vertex maxl = 0;
    for (Vertex v : s.vertices()) maxl = std::max(maxl, v < 0 ? -v : v);
    tr.apex_pos = 2 * maxl + 1;
    tr.apex_neg = -tr.apex_pos;
    tr.coapex_pos = 2 * maxl + 2;
    tr.coapex_neg = -tr.coapex_pos;

    // Cone bases: the +1 copy of ball_b under the first apex, and under the
    // second apex the +1 copy of the opposite ball closed off through the
    // first apex over the sphere below. The -1 side is the antipodal image.
    if (!prev.sphere.is_subcomplex_of(cur.cert.ball_b))
        fail("builder-invariant", "sphere below is not contained in ball_b");
    std::vector<Face> facets = tr.prism.facets();
    std::vector<Face> pos_cones;
    for (const auto& f : cur.cert.ball_b.facets()) {
        Face top = prism_face(f, 1);
        if (!tr.prism.contains_sorted(top))
            fail("builder-invariant", "cone base is not a subcomplex of the prism");
        top.push_back(tr.apex_pos);
        std::sort(top.begin(), top.end());
        pos_cones.push_back(std::move(top));
    }
    const SimplicialComplex ball_b_neg = antipode(cur.cert.ball_b);
    for (const auto& f : ball_b_neg.facets()) {
        Face top = prism_face(f, 1);
        if (!tr.prism.contains_sorted(top))
            fail("builder-invariant", "cone base is not a subcomplex of the prism");
        top.push_back(tr.coapex_pos);
        std::sort(top.begin(), top.end());
        pos_cones.push_back(std::move(top));
    }
    for (const auto& f : prev.sphere.facets()) {
        Face top = prism_face(f, 1);
        if (!tr.prism.contains_sorted(top))
            fail("builder-invariant", "cone base is not a subcomplex of the prism");
        top.push_back(tr.apex_pos);
        top.push_back(tr.coapex_pos);
        std::sort(top.begin(), top.end());
        pos_cones.push_back(std::move(top));
    }
    for (const auto& f : pos_cones) {
        facets.push_back(f);
        facets.push_back(antipode(f));
    }
    tr.capped = SimplicialComplex::from_facets(std::move(facets));

    CsReport cs = check_cs(tr.capped);
    if (!cs.ok) fail("builder-invariant", "capped prism is not cs: " + cs.what);
    if (tr.capped.vertex_count() != 2 * s.vertex_count() + 4)
        fail("builder-invariant", "capped prism has the wrong vertex count");
    CheckReport pm = check_closed_pseudomanifold(tr.capped);
    if (!pm.ok) fail("builder-invariant", "capped prism is not a closed pseudomanifold: " + pm.summary());
    const long long chi_expected = (d % 2 == 0) ? 2 : 0;
    if (tr.capped.euler_characteristic() != chi_expected)
        fail("builder-invariant", "capped prism has the wrong Euler characteristic");
    std::string why;
    if (!is_induced_subcomplex(tr.embedded, tr.capped, &why, true))
        fail("builder-invariant", "embedded sphere not induced in the capped prism: " + why);

    std::vector<Vertex> order = cur.cert.ball_d.vertices();
    std::sort(order.begin(), order.end(), label_order);
    tr.contracted = contract_vertical_pairs(tr.capped, order, &tr.contraction_count);
    if (tr.contraction_count != 2 * cur.cert.ball_d.vertex_count())
        fail("builder-invariant", "unexpected contraction count");

    // The embedded copy's labels survive every contraction, so the same
    // face set must reappear, induced, in the contracted sphere.
    if (!is_induced_subcomplex(tr.embedded, tr.contracted, &why, true))
        fail("builder-invariant", "embedded sphere lost by the contractions: " + why);
    return tr;
}

inline SimplicialComplex relabel(const SimplicialComplex& c,
                                 const std::unordered_map<Vertex, Vertex>& m) {
    std::vector<Face> fs;
    fs.reserve(c.facets().size());
    for (const auto& f : c.facets()) {
        Face g;
        g.reserve(f.size());
        for (Vertex v : f) {
            auto it = m.find(v);
            if (it == m.end()) fail("builder-invariant", "relabel map misses vertex " + std::to_string(v));
            g.push_back(it->second);
        }
        std::sort(g.begin(), g.end());
        fs.push_back(std::move(g));
    }
    return SimplicialComplex::from_facets(std::move(fs));
}

/// One induction step: builds the next sphere from the top two levels,
/// derives its certificate, and relabels canonically so that the previous
/// levels remain subcomplexes verbatim.
inline void extend(Tower& t, const Orientation* custom = nullptr) {
    const TowerLevel& prev = t.levels[t.levels.size() - 2];
    const SimplicialComplex s = t.top();
    const long long prev_f0 = prev.sphere.vertex_count();
    ExtensionTrace tr = extend_trace(t, custom);

    // New ball_d: the edge {v+, w+} joined with the +1 copy of the star of
    // the previous apex's antipode one level below.
    SimplicialComplex star_prev = prev.sphere.star(Face{-prev.cert.apex});
    std::vector<Face> dfacets;
    for (const auto& f : star_prev.facets()) {
        Face g = prism_face(f, 1);
        g.push_back(tr.apex_pos);
        g.push_back(tr.coapex_pos);
        std::sort(g.begin(), g.end());
        dfacets.push_back(std::move(g));
    }
    SimplicialComplex ball_d = SimplicialComplex::from_facets(std::move(dfacets));
    for (const auto& f : ball_d.facets())
        if (!tr.contracted.contains_sorted(f))
            fail("certificate", "ball_d face missing from the new sphere");

    // The deletion of the embedded sphere must split into ball_d and its
    // antipode, exactly.
    SimplicialComplex del = tr.contracted.deletion(tr.embedded);
    std::vector<SimplicialComplex> comps = del.connected_components();
    if (comps.size() != 2)
        fail("certificate", "deletion has " + std::to_string(comps.size()) + " components, expected 2");
    {
        std::vector<SimplicialComplex> expected{ball_d, antipode(ball_d)};
        std::sort(expected.begin(), expected.end(), [](const SimplicialComplex& a, const SimplicialComplex& b) {
            return a.facets() < b.facets();
        });
        if (!(expected[0] == comps[0] && expected[1] == comps[1]))
            fail("certificate", "deletion components differ from ball_d and its antipode");
    }

    // New ball_b: closure of the complement component containing the apex.
    // Every facet has a vertex outside the embedded sphere (it is induced),
    // and all such vertices of one facet share a deletion component.
    const SimplicialComplex& side = comps[0].has_vertex(tr.apex_pos) ? comps[0] : comps[1];
    if (!side.has_vertex(tr.apex_pos)) fail("certificate", "apex missing from both deletion components");
    const auto& gamma_vs = tr.embedded.vertices();
    std::vector<Face> bfacets;
    for (const auto& f : tr.contracted.facets()) {
        Vertex outside = 0;
        for (Vertex v : f) {
            if (!std::binary_search(gamma_vs.begin(), gamma_vs.end(), v)) {
                outside = v;
                break;
            }
        }
        if (outside == 0) fail("certificate", "facet lies inside the embedded sphere");
        if (side.has_vertex(outside)) bfacets.push_back(f);
    }
    SimplicialComplex ball_b = SimplicialComplex::from_facets(std::move(bfacets));

    // Star cover at the new apex.
    {
        std::vector<Vertex> cover = tr.contracted.star(Face{tr.apex_pos}).vertices();
        const auto anti = tr.contracted.star(Face{tr.apex_neg}).vertices();
        cover.insert(cover.end(), anti.begin(), anti.end());
        std::sort(cover.begin(), cover.end());
        const auto dup = std::adjacent_find(cover.begin(), cover.end());
        if (dup != cover.end()) fail("certificate", "apex stars overlap at vertex " + std::to_string(*dup));
        if (cover != tr.contracted.vertices()) fail("certificate", "apex stars do not cover all vertices");
    }

    // Canonical relabel: embedded copies of old labels keep their labels,
    // then the ball_d interior, then the two apexes.
    std::unordered_map<Vertex, Vertex> m;
    for (Vertex v : s.vertices())
        if (v > 0) {
            m[tr.embedding(v)] = v;
            m[-tr.embedding(v)] = -v;
        }
    Vertex next = static_cast<Vertex>(s.vertex_count() / 2);
    std::vector<Vertex> interior = star_prev.vertices();
    std::sort(interior.begin(), interior.end(), label_order);
    for (Vertex x : interior) {
        const Vertex pv = prism_vertex(x, 1);
        ++next;
        m[pv] = next;
        m[-pv] = -next;
    }
    ++next;
    m[tr.apex_pos] = next;
    m[tr.apex_neg] = -next;
    ++next;
    m[tr.coapex_pos] = next;
    m[tr.coapex_neg] = -next;
    for (Vertex v : s.vertices())
        if (m.at(tr.embedding(v)) != v)
            fail("builder-invariant", "relabel does not fix the embedded sphere");

    TowerLevel level;
    level.sphere = relabel(tr.contracted, m);
    level.cert.ball_b = relabel(ball_b, m);
    level.cert.ball_d = relabel(ball_d, m);
    level.cert.apex = m.at(tr.apex_pos);
    level.contractions = tr.contraction_count;

    CsReport cs = check_cs(level.sphere);
    if (!cs.ok) fail("builder-invariant", "new sphere is not cs: " + cs.what);
    if (find_induced_cs_4cycle(level.sphere))
        fail("certificate", "new sphere has an induced cs 4-cycle");
    CheckReport pm = check_closed_pseudomanifold(level.sphere);
    if (!pm.ok) fail("builder-invariant", "new sphere is not a closed pseudomanifold: " + pm.summary());
    if (level.sphere.vertex_count() != s.vertex_count() + prev_f0 + 4)
        fail("builder-invariant", "vertex-count recursion violated");
    if (!s.is_subcomplex_of(level.sphere))
        fail("builder-invariant", "previous sphere is not a subcomplex of the new one");
    t.levels.push_back(std::move(level));
}

/// Builds the tower of cs spheres up to dimension d.
inline Tower build_tower(int d) {
    if (d < 0) fail("certificate", "dimension must be nonnegative");
    Tower t = base_tower();
    if (d == 0) {
        t.levels.resize(1);
        return t;
    }
    while (t.top_dim() < d) extend(t);
    return t;
}

/// The projective-space triangulation in dimension d: the quotient of the
/// top sphere of the tower.
inline SimplicialComplex build_projective(int d) {
    if (d < 1) fail("certificate", "projective quotient needs dimension >= 1");
    return quotient_rp(build_tower(d).top());
}

}  // namespace cstri
