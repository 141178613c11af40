#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cstri/complex.hpp"

namespace cstri {

// The involution is always label negation; freeness is built into the
// label scheme (no vertex 0, so no fixed labels).

inline Vertex antipode(Vertex v) { return -v; }

inline Face antipode(const Face& f) {
    Face out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) out[i] = -f[f.size() - 1 - i];
    return out;
}

inline SimplicialComplex antipode(const SimplicialComplex& c) {
    std::vector<Face> fs;
    fs.reserve(c.facets().size());
    for (const auto& f : c.facets()) fs.push_back(antipode(f));
    return SimplicialComplex::from_facets(std::move(fs));
}

struct CsReport {
    bool ok = true;
    std::string what;
    Face witness;
};

/// Checks that negation is a simplicial automorphism acting freely on all
/// nonempty faces. Freeness reduces to "no facet contains an antipodal
/// pair" because any invariant nonempty face contains one.
inline CsReport check_cs(const SimplicialComplex& c) {
    CsReport r;
    const auto& vs = c.vertices();
    for (Vertex v : vs) {
        if (!std::binary_search(vs.begin(), vs.end(), -v)) {
            r.ok = false;
            r.what = "vertex without antipode";
            r.witness = {v};
            return r;
        }
    }
    for (const auto& fac : c.facets()) {
        for (Vertex v : fac) {
            if (v > 0 && std::binary_search(fac.begin(), fac.end(), -v)) {
                r.ok = false;
                r.what = "face fixed by the involution";
                r.witness = {-v, v};
                return r;
            }
        }
    }
    if (antipode(c) != c) {
        r.ok = false;
        r.what = "facet set not closed under the involution";
        for (const auto& fac : c.facets()) {
            if (!c.contains_sorted(antipode(fac))) {
                r.witness = fac;
                break;
            }
        }
        return r;
    }
    return r;
}

/// A simplicial complex validated to be centrally symmetric.
class CsComplex {
public:
    static CsComplex checked(SimplicialComplex c) {
        CsReport r = check_cs(c);
        if (!r.ok) fail("cs-violation", r.what + " " + face_to_string(r.witness));
        return CsComplex(std::move(c));
    }

    const SimplicialComplex& complex() const { return c_; }

private:
    explicit CsComplex(SimplicialComplex c) : c_(std::move(c)) {}
    SimplicialComplex c_;
};

/// Detects induced cs 4-cycles via the star criterion: a witness vertex v
/// exists iff star(v) and star(-v) share a nonempty face, which happens iff
/// some vertex is adjacent to both v and -v.
inline std::optional<Vertex> find_induced_cs_4cycle(const SimplicialComplex& c) {
    const auto& vs = c.vertices();
    std::vector<std::vector<Vertex>> nb(vs.size());
    auto index_of = [&](Vertex v) {
        return static_cast<std::size_t>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
    };
    for (const auto& e : c.faces(1)) {
        nb[index_of(e[0])].push_back(e[1]);
        nb[index_of(e[1])].push_back(e[0]);
    }
    for (auto& n : nb) std::sort(n.begin(), n.end());
    for (Vertex v : vs) {
        if (v < 0) continue;
        if (!std::binary_search(vs.begin(), vs.end(), -v)) continue;
        const auto& a = nb[index_of(v)];
        const auto& b = nb[index_of(-v)];
        std::vector<Vertex> common;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
        if (!common.empty()) return v;
    }
    return std::nullopt;
}

/// Quotient of a cs complex by the involution, v -> |v|. Requires a valid
/// cs complex with no induced cs 4-cycle; the operation verifies that every
/// f_i is exactly halved, which is the operative content of the hypothesis.
inline SimplicialComplex quotient_rp(const SimplicialComplex& c) {
    CsReport r = check_cs(c);
    if (!r.ok) fail("cs-violation", r.what + " " + face_to_string(r.witness));
    if (auto w = find_induced_cs_4cycle(c))
        fail("cs-violation", "induced cs 4-cycle at vertex " + std::to_string(*w));
    SimplicialComplex q = c.quotient([](Vertex v) { return v < 0 ? -v : v; });
    const FVector before = c.f_vector();
    const FVector after = q.f_vector();
    if (before.size() != after.size())
        fail("identification-collision", "quotient changed the dimension");
    for (std::size_t k = 0; k < before.size(); ++k) {
        if (before[k] != 2 * after[k])
            fail("identification-collision",
                 "f_" + std::to_string(k) + " not halved: " + std::to_string(before[k]) +
                     " -> " + std::to_string(after[k]));
    }
    return q;
}

inline SimplicialComplex quotient_rp(const CsComplex& c) { return quotient_rp(c.complex()); }

}  // namespace cstri
