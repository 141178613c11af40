// Test-only oracles: brute-force reimplementations kept independent of the
// library's code paths, used to freeze expected values and cross-check
// results at desk scale.
#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "cstri/bigint.hpp"
#include "cstri/complex.hpp"
#include "cstri/homology.hpp"

namespace oracle {

using cstri::Face;
using cstri::Vertex;

// Full face set (including the empty face) by naive powerset expansion.
inline std::set<Face> closure(const std::vector<Face>& facets) {
    std::set<Face> out;
    for (const Face& f : facets) {
        const std::size_t n = f.size();
        for (std::size_t mask = 0; mask < (1ull << n); ++mask) {
            Face s;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (1ull << i)) s.push_back(f[i]);
            out.insert(s);
        }
    }
    return out;
}

inline std::vector<long long> f_vector(const std::vector<Face>& facets) {
    std::set<Face> cl = closure(facets);
    std::size_t dim_plus_1 = 0;
    for (const Face& f : cl) dim_plus_1 = std::max(dim_plus_1, f.size());
    std::vector<long long> fv(dim_plus_1, 0);
    for (const Face& f : cl)
        if (!f.empty()) ++fv[f.size() - 1];
    return fv;
}

// Maximal elements of a face set, by quadratic subset scans.
inline std::vector<Face> maximal(const std::set<Face>& faces) {
    std::vector<Face> out;
    for (const Face& f : faces) {
        bool dominated = false;
        for (const Face& g : faces) {
            if (g.size() > f.size() && std::includes(g.begin(), g.end(), f.begin(), f.end())) {
                dominated = true;
                break;
            }
        }
        if (!dominated && !f.empty()) out.push_back(f);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Image of the whole face set under an edge contraction.
inline std::set<Face> contract(const std::vector<Face>& facets, Vertex loser, Vertex survivor) {
    std::set<Face> out;
    for (Face f : closure(facets)) {
        for (Vertex& v : f)
            if (v == loser) v = survivor;
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
        out.insert(f);
    }
    return out;
}

// Induced cs 4-cycles on vertices {v, w, -v, -w}: all four cycle edges
// present. Chords are antipodal pairs, hence never faces of a cs complex,
// and triangles inside would need one, so edge presence is the whole test.
inline std::vector<std::pair<Vertex, Vertex>> cs_4cycles(const cstri::SimplicialComplex& c) {
    std::set<Face> cl = closure(c.facets());
    auto edge = [&](Vertex a, Vertex b) {
        Face e = a < b ? Face{a, b} : Face{b, a};
        return cl.count(e) != 0;
    };
    std::vector<std::pair<Vertex, Vertex>> hits;
    const auto& vs = c.vertices();
    for (Vertex v : vs) {
        if (v <= 0) continue;
        for (Vertex w : vs) {
            if (w <= v) continue;  // one representative per unordered pair
            if (edge(v, w) && edge(w, -v) && edge(-v, -w) && edge(-w, v))
                hits.emplace_back(v, w);
        }
    }
    return hits;
}

// Dense rank over GF(p).
inline long long rank_gfp(const cstri::DenseIntMatrix& m, long long p) {
    std::vector<std::vector<long long>> a(static_cast<std::size_t>(m.rows),
                                          std::vector<long long>(static_cast<std::size_t>(m.cols)));
    for (long long i = 0; i < m.rows; ++i)
        for (long long j = 0; j < m.cols; ++j) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = ((m.at(i, j) % p) + p) % p;
    long long rank = 0;
    long long row = 0;
    for (long long col = 0; col < m.cols && row < m.rows; ++col) {
        long long piv = -1;
        for (long long i = row; i < m.rows; ++i)
            if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[static_cast<std::size_t>(row)], a[static_cast<std::size_t>(piv)]);
        // modular inverse by exponentiation (p prime)
        long long inv = 1, base = a[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] % p, e = p - 2;
        while (e) {
            if (e & 1) inv = inv * base % p;
            base = base * base % p;
            e >>= 1;
        }
        for (long long j = col; j < m.cols; ++j)
            a[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)] =
                a[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)] * inv % p;
        for (long long i = 0; i < m.rows; ++i) {
            if (i == row) continue;
            const long long factor = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)];
            if (!factor) continue;
            for (long long j = col; j < m.cols; ++j) {
                long long& x = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                x = ((x - factor * a[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)]) % p + p) % p;
            }
        }
        ++row;
        ++rank;
    }
    return rank;
}

// Exact rational rank via fraction-free (Bareiss) elimination on BigInt.
inline long long rank_rational(const cstri::DenseIntMatrix& m) {
    using cstri::BigInt;
    std::vector<std::vector<BigInt>> a(static_cast<std::size_t>(m.rows),
                                       std::vector<BigInt>(static_cast<std::size_t>(m.cols)));
    for (long long i = 0; i < m.rows; ++i)
        for (long long j = 0; j < m.cols; ++j) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = BigInt(m.at(i, j));
    BigInt prev(1);
    long long rank = 0;
    long long row = 0;
    for (long long col = 0; col < m.cols && row < m.rows; ++col) {
        long long piv = -1;
        for (long long i = row; i < m.rows; ++i)
            if (!a[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)].is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[static_cast<std::size_t>(row)], a[static_cast<std::size_t>(piv)]);
        for (long long i = row + 1; i < m.rows; ++i) {
            for (long long j = col + 1; j < m.cols; ++j) {
                BigInt num = a[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] * a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -
                             a[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] * a[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)];
                a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = num / prev;  // exact by Bareiss
            }
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] = BigInt(0);
        }
        prev = a[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
        ++row;
        ++rank;
    }
    return rank;
}

// Standard 12-vertex icosahedron facet list (plain labels).
inline std::vector<Face> icosahedron() {
    return {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6},  {1, 2, 6},  {2, 3, 7},  {3, 7, 8},
            {3, 4, 8}, {4, 8, 9}, {4, 5, 9}, {5, 9, 10}, {5, 6, 10}, {6, 10, 11}, {2, 6, 11},
            {2, 7, 11}, {7, 11, 12}, {7, 8, 12}, {8, 9, 12}, {9, 10, 12}, {10, 11, 12}};
}

// Minimal 6-vertex real projective plane.
inline std::vector<Face> rp2_six() {
    return {{1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {1, 4, 6}, {1, 5, 6},
            {2, 3, 6}, {2, 4, 5}, {2, 5, 6}, {3, 4, 5}, {3, 4, 6}};
}

// 7-vertex torus: triangles {i, i+1, i+3} and {i, i+2, i+3} mod 7.
inline std::vector<Face> torus_seven() {
    std::vector<Face> fs;
    for (int i = 0; i < 7; ++i) {
        Face a{1 + i, 1 + (i + 1) % 7, 1 + (i + 3) % 7};
        Face b{1 + i, 1 + (i + 2) % 7, 1 + (i + 3) % 7};
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        fs.push_back(a);
        fs.push_back(b);
    }
    return fs;
}

}  // namespace oracle
