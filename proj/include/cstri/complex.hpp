#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cstri {

// Vertex labels are nonzero signed integers. In centrally symmetric
// contexts the involution is label negation, v <-> -v.
using Vertex = int;

// A face is a strictly increasing sequence of vertex labels. The empty
// face is allowed and belongs to every nonvoid complex.
using Face = std::vector<Vertex>;

using FVector = std::vector<long long>;

class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& msg)
        : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

[[noreturn]] inline void fail(const std::string& kind, const std::string& msg) {
    throw Error(kind, msg);
}

inline void validate_face(Face& f) {
    std::sort(f.begin(), f.end());
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0)
            fail("malformed-face", "vertex label 0 is reserved");
        if (i > 0 && f[i] == f[i - 1])
            fail("malformed-face", "duplicate vertex " + std::to_string(f[i]) + " in face");
    }
}

inline Face make_face(std::initializer_list<Vertex> vs) {
    Face f(vs);
    validate_face(f);
    return f;
}

// Runs fn(buf) for every r-subset of the sorted face f, in lexicographic order.
template <typename Fn>
inline void for_each_subset(const Face& f, int r, Fn&& fn) {
    const int n = static_cast<int>(f.size());
    if (r < 0 || r > n) return;
    Face buf(static_cast<std::size_t>(r));
    if (r == 0) {
        fn(buf);
        return;
    }
    std::vector<int> idx(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        for (int i = 0; i < r; ++i) buf[static_cast<std::size_t>(i)] = f[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
        fn(buf);
        int i = r - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - r + i) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < r; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

// 128-bit key packing for faces with at most 8 vertices whose labels fit in
// int16. Used to count faces of large complexes without materializing them.
using FaceKey = unsigned __int128;

inline FaceKey pack_face(const Vertex* v, int n) {
    FaceKey k = 0;
    for (int i = 0; i < n; ++i)
        k |= static_cast<FaceKey>(static_cast<std::uint16_t>(static_cast<std::int16_t>(v[i]))) << (16 * i);
    return k;
}

/// Immutable abstract simplicial complex represented by its facets
/// (inclusion-maximal faces). Facets are kept lexicographically sorted, so
/// complexes with equal face sets compare equal. Instances share state:
/// copies are cheap and all operations return new complexes.
///
/// Per-dimension face lists are enumerated on demand and cached behind a
/// mutex, so read-only concurrent use is safe.
class SimplicialComplex {
public:
    SimplicialComplex() : data_(std::make_shared<Data>()) {}

    // The void complex has no faces at all; the empty complex {emptyset}
    // has the empty face as its unique (and maximal) face. Both have
    // dimension -1 but they are distinct values.
    static SimplicialComplex void_complex() { return SimplicialComplex(); }

    static SimplicialComplex empty_complex() {
        std::vector<Face> fs;
        fs.emplace_back();
        return SimplicialComplex(std::move(fs), -1);
    }

    /// Builds the complex generated by the given faces. Dominated faces are
    /// dropped; duplicate vertices within a face are an error.
    static SimplicialComplex from_facets(std::vector<Face> fs) {
        for (auto& f : fs) validate_face(f);
        return from_valid_facets(std::move(fs));
    }

    /// The full simplex on the given vertex set.
    static SimplicialComplex simplex(Face vertices) {
        validate_face(vertices);
        std::vector<Face> fs;
        fs.push_back(std::move(vertices));
        return from_valid_facets(std::move(fs));
    }

    bool is_void() const { return data_->facets.empty(); }
    bool is_empty_complex() const { return !is_void() && data_->dim == -1; }
    int dim() const { return data_->dim; }
    const std::vector<Face>& facets() const { return data_->facets; }
    long long facet_count() const { return static_cast<long long>(data_->facets.size()); }

    bool operator==(const SimplicialComplex& o) const { return data_->facets == o.data_->facets; }
    bool operator!=(const SimplicialComplex& o) const { return !(*this == o); }

    /// Sorted vertex list (0-faces flattened).
    const std::vector<Vertex>& vertices() const {
        std::lock_guard<std::mutex> lock(data_->mu);
        if (!data_->verts) {
            std::vector<Vertex> vs;
            for (const auto& f : data_->facets) vs.insert(vs.end(), f.begin(), f.end());
            std::sort(vs.begin(), vs.end());
            vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
            data_->verts = std::move(vs);
        }
        return *data_->verts;
    }

    long long vertex_count() const { return static_cast<long long>(vertices().size()); }

    bool has_vertex(Vertex v) const {
        const auto& vs = vertices();
        return std::binary_search(vs.begin(), vs.end(), v);
    }

    /// All k-faces, sorted lexicographically. Out-of-range k yields the
    /// empty list; k = -1 yields the empty face on any nonvoid complex.
    const std::vector<Face>& faces(int k) const {
        static const std::vector<Face> kNone;
        static const std::vector<Face> kEmptyFaceOnly(1);
        if (is_void()) return kNone;
        if (k == -1) return kEmptyFaceOnly;
        if (k < -1 || k > dim()) return kNone;
        std::lock_guard<std::mutex> lock(data_->mu);
        auto it = data_->face_cache.find(k);
        if (it != data_->face_cache.end()) return it->second;
        std::vector<Face> out;
        for (const auto& f : data_->facets)
            for_each_subset(f, k + 1, [&](const Face& s) { out.push_back(s); });
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        auto res = data_->face_cache.emplace(k, std::move(out));
        return res.first->second;
    }

    /// Number of k-faces. Counted via packed 128-bit keys when possible so
    /// very large complexes never materialize their face lists.
    long long face_count(int k) const {
        if (is_void()) return 0;
        if (k == -1) return 1;
        if (k < -1 || k > dim()) return 0;
        {
            std::lock_guard<std::mutex> lock(data_->mu);
            auto it = data_->face_cache.find(k);
            if (it != data_->face_cache.end()) return static_cast<long long>(it->second.size());
        }
        if (packable()) {
            std::vector<FaceKey> keys;
            for (const auto& f : data_->facets)
                for_each_subset(f, k + 1, [&](const Face& s) { keys.push_back(pack_face(s.data(), k + 1)); });
            std::sort(keys.begin(), keys.end());
            return static_cast<long long>(std::unique(keys.begin(), keys.end()) - keys.begin());
        }
        return static_cast<long long>(faces(k).size());
    }

    FVector f_vector() const {
        FVector fv;
        for (int k = 0; k <= dim(); ++k) fv.push_back(face_count(k));
        return fv;
    }

    long long euler_characteristic() const {
        long long chi = 0;
        for (int k = 0; k <= dim(); ++k) chi += (k % 2 == 0 ? 1 : -1) * face_count(k);
        return chi;
    }

    bool contains_sorted(const Face& f) const {
        if (is_void()) return false;
        if (f.empty()) return true;
        const int k = static_cast<int>(f.size()) - 1;
        if (k > dim()) return false;
        const auto& fs = faces(k);
        return std::binary_search(fs.begin(), fs.end(), f);
    }

    bool contains(Face f) const {
        std::sort(f.begin(), f.end());
        for (std::size_t i = 1; i < f.size(); ++i)
            if (f[i] == f[i - 1]) return false;
        return contains_sorted(f);
    }

    bool is_pure() const {
        if (data_->facets.size() <= 1) return true;
        const std::size_t c = data_->facets.front().size();
        for (const auto& f : data_->facets)
            if (f.size() != c) return false;
        return true;
    }

    bool is_subcomplex_of(const SimplicialComplex& sup) const {
        for (const auto& f : data_->facets)
            if (!sup.contains_sorted(f)) return false;
        return true;
    }

    /// star(F) = { s : s union F is a face }, as the subcomplex generated by
    /// the facets containing F.
    SimplicialComplex star(const Face& f) const {
        Face g = f;
        validate_face(g);
        if (!contains_sorted(g)) fail("not-a-face", "star of a non-face");
        std::vector<Face> out;
        for (const auto& fac : data_->facets)
            if (std::includes(fac.begin(), fac.end(), g.begin(), g.end())) out.push_back(fac);
        return from_valid_facets(std::move(out));
    }

    /// link(F) = { s in star(F) : s disjoint from F }.
    SimplicialComplex link(const Face& f) const {
        Face g = f;
        validate_face(g);
        if (!contains_sorted(g)) fail("not-a-face", "link of a non-face");
        std::vector<Face> out;
        for (const auto& fac : data_->facets) {
            if (!std::includes(fac.begin(), fac.end(), g.begin(), g.end())) continue;
            Face rest;
            std::set_difference(fac.begin(), fac.end(), g.begin(), g.end(), std::back_inserter(rest));
            out.push_back(std::move(rest));
        }
        return from_valid_facets(std::move(out));
    }

    /// Induced subcomplex on the vertex set w: all faces contained in w.
    SimplicialComplex induced(std::vector<Vertex> w) const {
        std::sort(w.begin(), w.end());
        w.erase(std::unique(w.begin(), w.end()), w.end());
        std::vector<Face> out;
        for (const auto& fac : data_->facets) {
            Face cut;
            std::set_intersection(fac.begin(), fac.end(), w.begin(), w.end(), std::back_inserter(cut));
            out.push_back(std::move(cut));
        }
        if (is_void()) return void_complex();
        return from_valid_facets(std::move(out));
    }

    /// Deletion: induced subcomplex on the vertices outside sub.
    SimplicialComplex deletion(const SimplicialComplex& sub) const {
        require_subcomplex(sub);
        const auto& gone = sub.vertices();
        std::vector<Vertex> keep;
        for (Vertex v : vertices())
            if (!std::binary_search(gone.begin(), gone.end(), v)) keep.push_back(v);
        return induced(std::move(keep));
    }

    /// Closure of the set-difference of face sets: the subcomplex generated
    /// by the facets of this complex that are not faces of sub.
    SimplicialComplex complement_closure(const SimplicialComplex& sub) const {
        require_subcomplex(sub);
        std::vector<Face> out;
        for (const auto& fac : data_->facets)
            if (!sub.contains_sorted(fac)) out.push_back(fac);
        return from_valid_facets(std::move(out));
    }

    /// Image under the simplicial map that sends the non-surviving endpoint
    /// of edge e to survivor.
    SimplicialComplex contract_edge(const Face& e, Vertex survivor) const {
        Face g = e;
        validate_face(g);
        if (g.size() != 2 || !contains_sorted(g)) fail("not-an-edge", "contraction requires an edge of the complex");
        if (g[0] != survivor && g[1] != survivor) fail("not-an-edge", "survivor must be an endpoint of the edge");
        const Vertex loser = (g[0] == survivor) ? g[1] : g[0];
        return quotient([survivor, loser](Vertex v) { return v == loser ? survivor : v; });
    }

    /// Nevo's link condition for edge e = {i, j}:
    /// link(i) meet link(j) equals link(e) as face sets.
    bool satisfies_link_condition(const Face& e) const {
        Face g = e;
        validate_face(g);
        if (g.size() != 2 || !contains_sorted(g)) fail("not-an-edge", "link condition requires an edge");
        SimplicialComplex li = link(Face{g[0]});
        SimplicialComplex lj = link(Face{g[1]});
        SimplicialComplex le = link(g);
        const int kmax = std::max(le.dim(), std::min(li.dim(), lj.dim()));
        for (int k = 0; k <= kmax; ++k) {
            const auto& a = li.faces(k);
            const auto& b = lj.faces(k);
            std::vector<Face> both;
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
            if (both != le.faces(k)) return false;
        }
        return true;
    }

    /// Image under an arbitrary total vertex map; duplicate image vertices
    /// within a face collapse.
    SimplicialComplex quotient(const std::function<Vertex(Vertex)>& m) const {
        std::vector<Face> out;
        out.reserve(data_->facets.size());
        for (const auto& fac : data_->facets) {
            Face img;
            img.reserve(fac.size());
            for (Vertex v : fac) img.push_back(m(v));
            std::sort(img.begin(), img.end());
            img.erase(std::unique(img.begin(), img.end()), img.end());
            out.push_back(std::move(img));
        }
        if (is_void()) return void_complex();
        return from_valid_facets(std::move(out));
    }

    /// Connected components of the 1-skeleton, each returned as the closed
    /// subcomplex of its facets, ordered by lexicographically least facet.
    std::vector<SimplicialComplex> connected_components() const {
        const auto& vs = vertices();
        if (vs.empty()) return {};
        std::vector<int> parent(vs.size());
        for (std::size_t i = 0; i < vs.size(); ++i) parent[i] = static_cast<int>(i);
        std::function<int(int)> find = [&](int x) {
            while (parent[static_cast<std::size_t>(x)] != x) {
                parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
                x = parent[static_cast<std::size_t>(x)];
            }
            return x;
        };
        auto index_of = [&](Vertex v) {
            return static_cast<int>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
        };
        for (const auto& fac : data_->facets) {
            if (fac.empty()) continue;
            const int a = index_of(fac[0]);
            for (std::size_t i = 1; i < fac.size(); ++i) {
                int ra = find(a), rb = find(index_of(fac[i]));
                if (ra != rb) parent[static_cast<std::size_t>(rb)] = ra;
            }
        }
        std::map<int, std::vector<Face>> groups;
        for (const auto& fac : data_->facets) {
            if (fac.empty()) continue;
            groups[find(index_of(fac[0]))].push_back(fac);
        }
        std::vector<std::vector<Face>> ordered;
        for (auto& [root, fs] : groups) ordered.push_back(std::move(fs));
        std::sort(ordered.begin(), ordered.end(),
                  [](const auto& a, const auto& b) { return a.front() < b.front(); });
        std::vector<SimplicialComplex> out;
        out.reserve(ordered.size());
        for (auto& fs : ordered) out.push_back(from_valid_facets(std::move(fs)));
        return out;
    }

    /// Subcomplex generated by the ridges lying in exactly one facet.
    /// Requires a pure complex.
    SimplicialComplex boundary() const {
        if (dim() < 0) return void_complex();
        if (!is_pure()) fail("purity", "boundary of a non-pure complex");
        std::vector<Face> ridges;
        for (const auto& fac : data_->facets)
            for_each_subset(fac, static_cast<int>(fac.size()) - 1, [&](const Face& s) { ridges.push_back(s); });
        std::sort(ridges.begin(), ridges.end());
        std::vector<Face> once;
        for (std::size_t i = 0; i < ridges.size();) {
            std::size_t j = i;
            while (j < ridges.size() && ridges[j] == ridges[i]) ++j;
            if (j - i == 1) once.push_back(ridges[i]);
            i = j;
        }
        if (once.empty()) return void_complex();
        return from_valid_facets(std::move(once));
    }

    friend SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);

private:
    struct Data {
        std::vector<Face> facets;  // lexicographically sorted, mutually incomparable
        int dim = -1;
        mutable std::mutex mu;
        mutable std::map<int, std::vector<Face>> face_cache;
        mutable std::optional<std::vector<Vertex>> verts;
    };

    SimplicialComplex(std::vector<Face> canonical, int d) : data_(std::make_shared<Data>()) {
        auto* raw = const_cast<Data*>(data_.get());
        raw->facets = std::move(canonical);
        raw->dim = d;
    }

    bool packable() const {
        if (dim() > 7) return false;
        for (const auto& f : data_->facets)
            for (Vertex v : f)
                if (v < -32768 || v > 32767) return false;
        return true;
    }

    void require_subcomplex(const SimplicialComplex& sub) const {
        if (!sub.is_subcomplex_of(*this)) fail("not-a-subcomplex", "argument is not a subcomplex");
    }

    // Sorted faces in, maximal faces out. Candidates of maximal cardinality
    // can only be dominated by equal faces, so after deduplication only the
    // smaller candidates need containment scans.
    static SimplicialComplex from_valid_facets(std::vector<Face> fs) {
        std::sort(fs.begin(), fs.end());
        fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
        if (fs.empty()) return void_complex();
        std::stable_sort(fs.begin(), fs.end(),
                         [](const Face& a, const Face& b) { return a.size() > b.size(); });
        const std::size_t max_card = fs.front().size();
        std::vector<Face> kept;
        kept.reserve(fs.size());
        std::map<Vertex, std::vector<std::size_t>> by_vertex;
        for (auto& cand : fs) {
            bool dominated = false;
            if (cand.size() < max_card) {
                if (cand.empty()) {
                    dominated = !kept.empty();
                } else {
                    auto it = by_vertex.find(cand[0]);
                    if (it != by_vertex.end()) {
                        for (std::size_t idx : it->second) {
                            const Face& h = kept[idx];
                            if (h.size() > cand.size() &&
                                std::includes(h.begin(), h.end(), cand.begin(), cand.end())) {
                                dominated = true;
                                break;
                            }
                        }
                    }
                }
            }
            if (!dominated) {
                const std::size_t idx = kept.size();
                for (Vertex v : cand) by_vertex[v].push_back(idx);
                kept.push_back(std::move(cand));
            }
        }
        const int d = static_cast<int>(max_card) - 1;
        std::sort(kept.begin(), kept.end());
        return SimplicialComplex(std::move(kept), d);
    }

    std::shared_ptr<const Data> data_;
};

/// Join of two complexes on disjoint vertex sets; facets are pairwise unions.
inline SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (a.is_void() || b.is_void()) return SimplicialComplex::void_complex();
    const auto& va = a.vertices();
    const auto& vb = b.vertices();
    std::vector<Vertex> common;
    std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(common));
    if (!common.empty()) fail("disjointness", "join requires disjoint vertex sets");
    std::vector<Face> out;
    out.reserve(a.facets().size() * b.facets().size());
    for (const auto& fa : a.facets())
        for (const auto& fb : b.facets()) {
            Face u;
            u.reserve(fa.size() + fb.size());
            std::merge(fa.begin(), fa.end(), fb.begin(), fb.end(), std::back_inserter(u));
            out.push_back(std::move(u));
        }
    return SimplicialComplex::from_facets(std::move(out));
}

/// Cone over a complex with a fresh apex.
inline SimplicialComplex cone(Vertex apex, const SimplicialComplex& base) {
    return join(SimplicialComplex::simplex(Face{apex}), base);
}

/// True iff sub is an induced subcomplex of sup: sub's faces all lie in sup
/// and every face of sup on sub's vertices belongs to sub. Set
/// check_containment = false when the first half is already known.
inline bool is_induced_subcomplex(const SimplicialComplex& sub, const SimplicialComplex& sup,
                                  std::string* why = nullptr, bool check_containment = true) {
    if (check_containment) {
        for (const auto& f : sub.facets())
            if (!sup.contains_sorted(f)) {
                if (why) *why = "subcomplex face missing from the ambient complex";
                return false;
            }
    }
    const auto& vs = sub.vertices();
    for (const auto& fac : sup.facets()) {
        Face cut;
        std::set_intersection(fac.begin(), fac.end(), vs.begin(), vs.end(), std::back_inserter(cut));
        if (!sub.contains_sorted(cut)) {
            if (why) {
                *why = "ambient face on subcomplex vertices is not a subcomplex face";
            }
            return false;
        }
    }
    return true;
}

inline std::string face_to_string(const Face& f) {
    std::string s = "{";
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(f[i]);
    }
    s += "}";
    return s;
}

inline std::string fvector_to_string(const FVector& fv) {
    std::string s = "(";
    for (std::size_t i = 0; i < fv.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(fv[i]);
    }
    s += ")";
    return s;
}

}  // namespace cstri
