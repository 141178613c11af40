#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cstri/complex.hpp"
#include "cstri/cs.hpp"

namespace cstri {

/// Directed orientation of the edges of a complex. An orientation is
/// locally acyclic when no 2-simplex carries a directed cycle, in which
/// case every face inherits a linear vertex order.
class Orientation {
public:
    void orient(Vertex from, Vertex to) {
        auto [a, b] = ordered(from, to);
        dir_[{a, b}] = (from == a);
    }

    bool has_edge(Vertex a, Vertex b) const { return dir_.count(ordered(a, b)) != 0; }

    bool oriented(Vertex from, Vertex to) const {
        auto key = ordered(from, to);
        auto it = dir_.find(key);
        if (it == dir_.end()) fail("orientation", "edge not oriented");
        return it->second == (from == key.first);
    }

    std::size_t size() const { return dir_.size(); }

    const std::map<std::pair<Vertex, Vertex>, bool>& entries() const { return dir_; }

private:
    static std::pair<Vertex, Vertex> ordered(Vertex a, Vertex b) {
        return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
    }
    // key (min,max); value true when min -> max
    std::map<std::pair<Vertex, Vertex>, bool> dir_;
};

struct OrientationReport {
    bool ok = true;
    std::string what;
};

/// Validates an orientation: (1) total on the edge set and locally acyclic;
/// (2) optionally order-reversing under the antipodal symmetry; (3) when a
/// top set W is given, every edge between W and its antipode is oriented
/// out of W.
inline OrientationReport validate_orientation(const SimplicialComplex& c, const Orientation& o,
                                              bool require_symmetry = false,
                                              const std::vector<Vertex>* top_set = nullptr) {
    OrientationReport r;
    auto bad = [&](const std::string& what) {
        r.ok = false;
        r.what = what;
        return r;
    };
    for (const auto& e : c.faces(1))
        if (!o.has_edge(e[0], e[1])) return bad("edge not oriented " + face_to_string(e));
    for (const auto& t : c.faces(2)) {
        const bool ab = o.oriented(t[0], t[1]);
        const bool bc = o.oriented(t[1], t[2]);
        const bool ac = o.oriented(t[0], t[2]);
        // directed 3-cycle: a->b->c->a or its reverse
        if ((ab && bc && !ac) || (!ab && !bc && ac))
            return bad("directed cycle on 2-simplex " + face_to_string(t));
    }
    if (require_symmetry) {
        for (const auto& e : c.faces(1)) {
            const Vertex u = o.oriented(e[0], e[1]) ? e[0] : e[1];
            const Vertex w = (u == e[0]) ? e[1] : e[0];
            if (!o.has_edge(-w, -u) || !o.oriented(-w, -u))
                return bad("orientation not order-reversing on " + face_to_string(e));
        }
    }
    if (top_set) {
        auto in_top = [&](Vertex v) {
            return std::binary_search(top_set->begin(), top_set->end(), v);
        };
        for (const auto& e : c.faces(1)) {
            const bool a = in_top(e[0]);
            const bool b = in_top(e[1]);
            if (a == b) continue;
            const Vertex from = a ? e[0] : e[1];
            const Vertex to = a ? e[1] : e[0];
            if (!o.oriented(from, to))
                return bad("crossing edge oriented into the top set " + face_to_string(e));
        }
    }
    return r;
}

// Fixed total order on labels: ascending absolute value, positive first.
inline bool label_order(Vertex a, Vertex b) {
    const int aa = a < 0 ? -a : a;
    const int bb = b < 0 ? -b : b;
    if (aa != bb) return aa < bb;
    return (a < 0) < (b < 0);
}

/// The canonical symmetric locally acyclic orientation determined by a top
/// set W with V = W disjoint-union -W: within W edges follow label_order,
/// within -W the reverse, and every crossing edge points from W to -W.
inline Orientation canonical_orientation(const SimplicialComplex& c, std::vector<Vertex> top_set) {
    std::sort(top_set.begin(), top_set.end());
    std::vector<Vertex> expected;
    for (Vertex v : top_set) {
        expected.push_back(v);
        expected.push_back(-v);
    }
    std::sort(expected.begin(), expected.end());
    if (expected != c.vertices())
        fail("certificate", "top set and its antipode do not partition the vertices");
    auto in_top = [&](Vertex v) { return std::binary_search(top_set.begin(), top_set.end(), v); };
    Orientation o;
    for (const auto& e : c.faces(1)) {
        const Vertex a = e[0], b = e[1];
        const bool ta = in_top(a), tb = in_top(b);
        if (ta && tb) {
            label_order(a, b) ? o.orient(a, b) : o.orient(b, a);
        } else if (!ta && !tb) {
            // reverse of the order on the antipodes
            label_order(-b, -a) ? o.orient(a, b) : o.orient(b, a);
        } else {
            ta ? o.orient(a, b) : o.orient(b, a);
        }
    }
    OrientationReport r = validate_orientation(c, o, true, &top_set);
    if (!r.ok) fail("orientation", "canonical orientation invalid: " + r.what);
    return o;
}

// Prism vertex labels: (u,+1) and (u,-1) are packed into fresh nonzero
// labels such that the prism involution (u,i) -> (-u,-i) is again label
// negation. Apex labels added later stay above 2*max|u|.
inline Vertex prism_positive_code(Vertex u) { return u > 0 ? 2 * u - 1 : -2 * u; }

inline Vertex prism_vertex(Vertex base, int level) {
    if (level == 1) return prism_positive_code(base);
    return -prism_positive_code(-base);
}

inline Vertex prism_base(Vertex pv) {
    const Vertex m = pv > 0 ? pv : -pv;
    const Vertex u = (m % 2 == 1) ? (m + 1) / 2 : -m / 2;
    return pv > 0 ? u : -u;
}

inline int prism_level(Vertex pv) { return pv > 0 ? 1 : -1; }

inline Face prism_face(const Face& f, int level) {
    Face out;
    out.reserve(f.size());
    for (Vertex v : f) out.push_back(prism_vertex(v, level));
    std::sort(out.begin(), out.end());
    return out;
}

inline SimplicialComplex prism_layer(const SimplicialComplex& c, int level) {
    std::vector<Face> fs;
    fs.reserve(c.facets().size());
    for (const auto& f : c.facets()) fs.push_back(prism_face(f, level));
    return SimplicialComplex::from_facets(std::move(fs));
}

// The staircase cell over facet f (ordered by the orientation) with top
// prefix of length t: {(v_1,+1)..(v_t,+1),(v_t,-1)..(v_k,-1)}.
inline Face staircase_cell(const std::vector<Vertex>& ordered_facet, int t) {
    Face cell;
    cell.reserve(ordered_facet.size() + 1);
    for (int i = 0; i < t; ++i) cell.push_back(prism_vertex(ordered_facet[static_cast<std::size_t>(i)], 1));
    for (std::size_t i = static_cast<std::size_t>(t) - 1; i < ordered_facet.size(); ++i)
        cell.push_back(prism_vertex(ordered_facet[i], -1));
    std::sort(cell.begin(), cell.end());
    return cell;
}

/// Staircase triangulation of c x [-1,1] induced by a locally acyclic
/// orientation: each facet with induced order v_1 -> ... -> v_k yields the
/// k cells staircase_cell(., t), t = 1..k. Diagonal edges are exactly
/// {(u,+1),(w,-1)} for oriented u -> w.
inline SimplicialComplex staircase_prism(const SimplicialComplex& c, const Orientation& o) {
    OrientationReport r = validate_orientation(c, o);
    if (!r.ok) fail("orientation", r.what);
    std::vector<Face> cells;
    for (const auto& fac : c.facets()) {
        std::vector<Vertex> ord(fac.begin(), fac.end());
        std::sort(ord.begin(), ord.end(), [&](Vertex a, Vertex b) { return o.oriented(a, b); });
        const int k = static_cast<int>(ord.size());
        for (int t = 1; t <= k; ++t) cells.push_back(staircase_cell(ord, t));
    }
    return SimplicialComplex::from_facets(std::move(cells));
}

/// Vertex map carrying a cs sphere into its prism: top-set vertices go to
/// the +1 layer, the rest to the -1 layer.
struct PrismEmbedding {
    std::vector<Vertex> top_set;  // sorted

    Vertex operator()(Vertex u) const {
        const bool top = std::binary_search(top_set.begin(), top_set.end(), u);
        return prism_vertex(u, top ? 1 : -1);
    }

    Face map_face(const Face& f) const {
        Face out;
        out.reserve(f.size());
        for (Vertex v : f) out.push_back((*this)(v));
        std::sort(out.begin(), out.end());
        return out;
    }
};

struct EmbeddedSphere {
    SimplicialComplex complex;  // the image, an induced subcomplex of the prism
    PrismEmbedding embedding;
};

/// Image of base under the prism embedding, verified to be an induced
/// subcomplex of the staircase prism isomorphic to base. Violations signal
/// a builder bug, so they throw.
inline EmbeddedSphere embed_in_prism(const SimplicialComplex& base, std::vector<Vertex> top_set,
                                     const Orientation& o, const SimplicialComplex& prism) {
    std::sort(top_set.begin(), top_set.end());
    PrismEmbedding psi{top_set};
    auto in_top = [&](Vertex v) { return std::binary_search(top_set.begin(), top_set.end(), v); };
    std::vector<Face> image;
    image.reserve(base.facets().size());
    for (const auto& fac : base.facets()) {
        std::vector<Vertex> ord(fac.begin(), fac.end());
        std::sort(ord.begin(), ord.end(), [&](Vertex a, Vertex b) { return o.oriented(a, b); });
        int t = 0;
        for (std::size_t i = 0; i < ord.size(); ++i) {
            if (in_top(ord[i])) {
                if (static_cast<int>(i) != t)
                    fail("builder-invariant", "top-set vertices are not an order prefix of " + face_to_string(fac));
                ++t;
            }
        }
        Face img = psi.map_face(fac);
        if (img.size() != fac.size()) fail("builder-invariant", "embedding not injective on a face");
        Face cell = staircase_cell(ord, t == 0 ? 1 : t);
        if (!std::includes(cell.begin(), cell.end(), img.begin(), img.end()))
            fail("builder-invariant", "embedded image escapes its staircase cell");
        image.push_back(std::move(img));
    }
    SimplicialComplex gamma = SimplicialComplex::from_facets(std::move(image));
    if (gamma.vertex_count() != base.vertex_count())
        fail("builder-invariant", "embedding not injective on vertices");
    std::string why;
    if (!is_induced_subcomplex(gamma, prism, &why, false))
        fail("builder-invariant", "embedded sphere not induced in the prism: " + why);
    return EmbeddedSphere{std::move(gamma), std::move(psi)};
}

}  // namespace cstri
