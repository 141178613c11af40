#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "cstri/bigint.hpp"
#include "cstri/complex.hpp"

namespace cstri {

// ---------------------------------------------------------------------------
// Boundary matrices
// ---------------------------------------------------------------------------

struct DenseIntMatrix {
    long long rows = 0;
    long long cols = 0;
    std::vector<long long> a;  // row-major

    long long& at(long long i, long long j) { return a[static_cast<std::size_t>(i * cols + j)]; }
    long long at(long long i, long long j) const { return a[static_cast<std::size_t>(i * cols + j)]; }
};

/// Boundary matrix from k-faces (columns) to (k-1)-faces (rows), both in
/// lexicographic order, with the sign (-1)^position on sorted faces.
inline DenseIntMatrix boundary_matrix(const SimplicialComplex& c, int k) {
    const auto& rows = c.faces(k - 1);
    const auto& cols = c.faces(k);
    DenseIntMatrix m;
    m.rows = static_cast<long long>(rows.size());
    m.cols = static_cast<long long>(cols.size());
    m.a.assign(static_cast<std::size_t>(m.rows * m.cols), 0);
    Face sub;
    for (std::size_t j = 0; j < cols.size(); ++j) {
        const Face& f = cols[j];
        sub.assign(f.begin() + 1, f.end());
        for (std::size_t drop = 0; drop <= f.size() - 1; ++drop) {
            // sub = f with position `drop` removed
            const auto row =
                std::lower_bound(rows.begin(), rows.end(), sub) - rows.begin();
            m.at(row, static_cast<long long>(j)) = (drop % 2 == 0) ? 1 : -1;
            if (drop + 1 < f.size()) sub[drop] = f[drop];
        }
    }
    return m;
}

/// All boundary matrices, verifying dd = 0 for dimensions up to verify_cap.
inline std::vector<DenseIntMatrix> boundary_matrices(const SimplicialComplex& c,
                                                     int verify_cap = 1 << 20) {
    std::vector<DenseIntMatrix> out;
    for (int k = 1; k <= c.dim(); ++k) out.push_back(boundary_matrix(c, k));
    for (int k = 2; k <= std::min(c.dim(), verify_cap); ++k) {
        const DenseIntMatrix& a = out[static_cast<std::size_t>(k - 2)];
        const DenseIntMatrix& b = out[static_cast<std::size_t>(k - 1)];
        for (long long j = 0; j < b.cols; ++j) {
            for (long long i = 0; i < a.rows; ++i) {
                long long s = 0;
                for (long long t = 0; t < a.cols; ++t) s += a.at(i, t) * b.at(t, j);
                if (s != 0) fail("builder-invariant", "dd != 0 at dimension " + std::to_string(k));
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Smith normal form (integer elimination with smallest-pivot selection,
// falling back to arbitrary precision on int64 overflow)
// ---------------------------------------------------------------------------

inline long long snf_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) fail("overflow", "int64 add");
    return r;
}
inline long long snf_sub(long long a, long long b) {
    long long r;
    if (__builtin_sub_overflow(a, b, &r)) fail("overflow", "int64 sub");
    return r;
}
inline long long snf_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) fail("overflow", "int64 mul");
    return r;
}
inline long long snf_div(long long a, long long b) {
    if (b == -1) return snf_sub(0, a);
    return a / b;
}
inline long long snf_mod(long long a, long long b) {
    if (b == -1) return 0;
    return a % b;
}
inline bool snf_is_zero(long long a) { return a == 0; }
inline bool snf_abs_less(long long a, long long b) {
    auto mag = [](long long x) {
        return x < 0 ? 0ULL - static_cast<unsigned long long>(x) : static_cast<unsigned long long>(x);
    };
    return mag(a) < mag(b);
}
inline long long snf_abs(long long a) {
    if (a < 0) return snf_sub(0, a);
    return a;
}

inline BigInt snf_add(const BigInt& a, const BigInt& b) { return a + b; }
inline BigInt snf_sub(const BigInt& a, const BigInt& b) { return a - b; }
inline BigInt snf_mul(const BigInt& a, const BigInt& b) { return a * b; }
inline BigInt snf_div(const BigInt& a, const BigInt& b) { return a / b; }
inline BigInt snf_mod(const BigInt& a, const BigInt& b) { return a % b; }
inline bool snf_is_zero(const BigInt& a) { return a.is_zero(); }
inline bool snf_abs_less(const BigInt& a, const BigInt& b) { return a.abs() < b.abs(); }
inline BigInt snf_abs(const BigInt& a) { return a.abs(); }

template <typename T>
std::vector<T> snf_eliminate(std::vector<std::vector<T>> a) {
    const long long rows = static_cast<long long>(a.size());
    const long long cols = rows ? static_cast<long long>(a[0].size()) : 0;
    const long long n = std::min(rows, cols);
    long long t = 0;
    while (t < n) {
        long long pi = -1, pj = -1;
        for (long long i = t; i < rows; ++i) {
            for (long long j = t; j < cols; ++j) {
                const T& v = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                if (snf_is_zero(v)) continue;
                if (pi < 0 || snf_abs_less(v, a[static_cast<std::size_t>(pi)][static_cast<std::size_t>(pj)])) {
                    pi = i;
                    pj = j;
                }
            }
        }
        if (pi < 0) break;
        std::swap(a[static_cast<std::size_t>(t)], a[static_cast<std::size_t>(pi)]);
        if (pj != t)
            for (long long i = 0; i < rows; ++i)
                std::swap(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)],
                          a[static_cast<std::size_t>(i)][static_cast<std::size_t>(pj)]);

        const T pivot = a[static_cast<std::size_t>(t)][static_cast<std::size_t>(t)];
        bool clean = true;
        for (long long i = t + 1; i < rows; ++i) {
            T& head = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)];
            if (snf_is_zero(head)) continue;
            const T q = snf_div(head, pivot);
            if (!snf_is_zero(q)) {
                for (long long j = t; j < cols; ++j) {
                    T& x = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                    x = snf_sub(x, snf_mul(q, a[static_cast<std::size_t>(t)][static_cast<std::size_t>(j)]));
                }
            }
            if (!snf_is_zero(head)) clean = false;
        }
        for (long long j = t + 1; j < cols; ++j) {
            T& head = a[static_cast<std::size_t>(t)][static_cast<std::size_t>(j)];
            if (snf_is_zero(head)) continue;
            const T q = snf_div(head, pivot);
            if (!snf_is_zero(q)) {
                for (long long i = t; i < rows; ++i) {
                    T& x = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                    x = snf_sub(x, snf_mul(q, a[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)]));
                }
            }
            if (!snf_is_zero(head)) clean = false;
        }
        if (!clean) continue;  // smaller entries appeared; re-pick the pivot

        bool fixed = false;
        for (long long i = t + 1; i < rows && !fixed; ++i) {
            for (long long j = t + 1; j < cols; ++j) {
                if (!snf_is_zero(snf_mod(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], pivot))) {
                    for (long long jj = t; jj < cols; ++jj) {
                        T& x = a[static_cast<std::size_t>(t)][static_cast<std::size_t>(jj)];
                        x = snf_add(x, a[static_cast<std::size_t>(i)][static_cast<std::size_t>(jj)]);
                    }
                    fixed = true;
                    break;
                }
            }
        }
        if (fixed) continue;
        ++t;
    }
    std::vector<T> factors;
    for (long long i = 0; i < t; ++i)
        factors.push_back(snf_abs(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)]));
    return factors;
}

struct Snf {
    std::vector<BigInt> factors;  // d_1 | d_2 | ... , absolute values
    long long rank = 0;
};

inline Snf smith_normal_form(const DenseIntMatrix& m) {
    Snf out;
    try {
        std::vector<std::vector<long long>> a(static_cast<std::size_t>(m.rows),
                                              std::vector<long long>(static_cast<std::size_t>(m.cols)));
        for (long long i = 0; i < m.rows; ++i)
            for (long long j = 0; j < m.cols; ++j) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m.at(i, j);
        for (long long v : snf_eliminate(std::move(a))) out.factors.emplace_back(v);
    } catch (const Error& e) {
        if (e.kind() != "overflow") throw;
        std::vector<std::vector<BigInt>> a(static_cast<std::size_t>(m.rows),
                                           std::vector<BigInt>(static_cast<std::size_t>(m.cols)));
        for (long long i = 0; i < m.rows; ++i)
            for (long long j = 0; j < m.cols; ++j) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m.at(i, j);
        out.factors = snf_eliminate(std::move(a));
    }
    out.rank = static_cast<long long>(out.factors.size());
    return out;
}

// ---------------------------------------------------------------------------
// Homology
// ---------------------------------------------------------------------------

struct HomologyGroups {
    struct Group {
        long long free_rank = 0;
        std::vector<long long> torsion;  // invariant factors > 1, ascending

        std::string to_string() const {
            std::string s;
            auto append = [&s](const std::string& part) {
                if (!s.empty()) s += " + ";
                s += part;
            };
            if (free_rank == 1) append("Z");
            else if (free_rank > 1) append("Z^" + std::to_string(free_rank));
            for (long long t : torsion) append("Z/" + std::to_string(t));
            if (s.empty()) s = "0";
            return s;
        }

        bool operator==(const Group& o) const {
            return free_rank == o.free_rank && torsion == o.torsion;
        }
    };
    std::vector<Group> groups;  // index = dimension
};

inline constexpr int kDefaultZCap = 4;

/// Integral homology via Smith normal form. Dimensions above the cap are
/// refused; use betti_gf2 there.
inline HomologyGroups homology_Z(const SimplicialComplex& c, int cap = kDefaultZCap) {
    if (c.dim() > cap)
        fail("zcap", "integral homology capped at dimension " + std::to_string(cap) +
                         "; use betti_gf2 for higher dimensions");
    if (c.is_void()) return {};
    const int d = c.dim();
    std::vector<long long> rank(static_cast<std::size_t>(d) + 2, 0);
    std::vector<std::vector<long long>> torsion(static_cast<std::size_t>(d) + 2);
    std::vector<DenseIntMatrix> bd = boundary_matrices(c);
    for (int k = 1; k <= d; ++k) {
        Snf s = smith_normal_form(bd[static_cast<std::size_t>(k - 1)]);
        rank[static_cast<std::size_t>(k)] = s.rank;
        for (const BigInt& f : s.factors) {
            if (f == BigInt(1)) continue;
            torsion[static_cast<std::size_t>(k)].push_back(f.to_long_long());
        }
        std::sort(torsion[static_cast<std::size_t>(k)].begin(), torsion[static_cast<std::size_t>(k)].end());
    }
    HomologyGroups h;
    for (int k = 0; k <= d; ++k) {
        HomologyGroups::Group g;
        g.free_rank = c.face_count(k) - rank[static_cast<std::size_t>(k)] - rank[static_cast<std::size_t>(k + 1)];
        g.torsion = torsion[static_cast<std::size_t>(k + 1)];
        h.groups.push_back(std::move(g));
    }
    return h;
}

/// GF(2) rank of the k-th boundary map, via sparse column reduction.
inline long long gf2_boundary_rank(const SimplicialComplex& c, int k) {
    if (k <= 0 || k > c.dim()) return 0;
    const auto& rows = c.faces(k - 1);
    const auto& cols = c.faces(k);
    std::vector<std::vector<std::int32_t>> col(cols.size());
    Face sub;
    for (std::size_t j = 0; j < cols.size(); ++j) {
        const Face& f = cols[j];
        sub.assign(f.begin() + 1, f.end());
        auto& cj = col[j];
        cj.reserve(f.size());
        for (std::size_t drop = 0; drop < f.size(); ++drop) {
            cj.push_back(static_cast<std::int32_t>(
                std::lower_bound(rows.begin(), rows.end(), sub) - rows.begin()));
            if (drop + 1 < f.size()) sub[drop] = f[drop];
        }
        std::sort(cj.begin(), cj.end());
    }
    std::unordered_map<std::int32_t, std::size_t> pivot;
    pivot.reserve(cols.size());
    long long rank = 0;
    std::vector<std::int32_t> merged;
    for (std::size_t j = 0; j < col.size(); ++j) {
        auto& cj = col[j];
        while (!cj.empty()) {
            auto it = pivot.find(cj.back());
            if (it == pivot.end()) break;
            const auto& other = col[it->second];
            merged.clear();
            std::set_symmetric_difference(cj.begin(), cj.end(), other.begin(), other.end(),
                                          std::back_inserter(merged));
            cj.swap(merged);
        }
        if (!cj.empty()) {
            pivot.emplace(cj.back(), j);
            ++rank;
        }
    }
    return rank;
}

/// GF(2) Betti numbers, b_k = f_k - rank(d_k) - rank(d_{k+1}).
inline std::vector<long long> betti_gf2(const SimplicialComplex& c) {
    std::vector<long long> b;
    if (c.dim() < 0) return b;
    std::vector<long long> rank(static_cast<std::size_t>(c.dim()) + 2, 0);
    for (int k = 1; k <= c.dim(); ++k) rank[static_cast<std::size_t>(k)] = gf2_boundary_rank(c, k);
    for (int k = 0; k <= c.dim(); ++k)
        b.push_back(c.face_count(k) - rank[static_cast<std::size_t>(k)] - rank[static_cast<std::size_t>(k + 1)]);
    return b;
}

inline std::vector<long long> sphere_betti_gf2(int d) {
    if (d == 0) return {2};
    std::vector<long long> b(static_cast<std::size_t>(d) + 1, 0);
    b.front() = 1;
    b.back() = 1;
    return b;
}

inline bool is_gf2_point(const std::vector<long long>& b) {
    if (b.empty() || b[0] != 1) return false;
    for (std::size_t k = 1; k < b.size(); ++k)
        if (b[k] != 0) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Pseudomanifold and link checks
// ---------------------------------------------------------------------------

struct CheckReport {
    bool ok = true;
    std::vector<std::string> violations;

    void flag(const std::string& v) {
        ok = false;
        if (violations.size() < 32) violations.push_back(v);
    }

    std::string summary() const {
        std::string s;
        for (const auto& v : violations) {
            if (!s.empty()) s += "; ";
            s += v;
        }
        return s;
    }
};

/// Pure, every ridge in exactly two facets, facet-ridge graph connected.
inline CheckReport check_closed_pseudomanifold(const SimplicialComplex& c) {
    CheckReport r;
    if (c.dim() < 0) {
        r.flag("void or empty complex");
        return r;
    }
    if (!c.is_pure()) {
        r.flag("not pure");
        return r;
    }
    const auto& facets = c.facets();
    std::vector<std::pair<Face, std::int32_t>> ridges;
    for (std::size_t i = 0; i < facets.size(); ++i)
        for_each_subset(facets[i], static_cast<int>(facets[i].size()) - 1,
                        [&](const Face& s) { ridges.emplace_back(s, static_cast<std::int32_t>(i)); });
    std::sort(ridges.begin(), ridges.end());
    std::vector<std::int32_t> parent(facets.size());
    for (std::size_t i = 0; i < facets.size(); ++i) parent[i] = static_cast<std::int32_t>(i);
    std::function<std::int32_t(std::int32_t)> find = [&](std::int32_t x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    for (std::size_t i = 0; i < ridges.size();) {
        std::size_t j = i;
        while (j < ridges.size() && ridges[j].first == ridges[i].first) ++j;
        if (j - i != 2)
            r.flag("ridge " + face_to_string(ridges[i].first) + " lies in " +
                   std::to_string(j - i) + " facets");
        else
            parent[static_cast<std::size_t>(find(ridges[i].second))] = find(ridges[i + 1].second);
        i = j;
    }
    if (!facets.empty()) {
        const std::int32_t root = find(0);
        for (std::size_t i = 1; i < facets.size(); ++i)
            if (find(static_cast<std::int32_t>(i)) != root) {
                r.flag("facet-ridge graph disconnected");
                break;
            }
    }
    return r;
}

/// Every vertex link is a closed pseudomanifold with the GF(2) Betti
/// numbers of a (d-1)-sphere; optionally also checks edge links.
inline CheckReport check_vertex_links(const SimplicialComplex& c, int d, bool recurse_edges = false) {
    CheckReport r;
    if (c.dim() != d || !c.is_pure()) {
        r.flag("complex is not pure of dimension " + std::to_string(d));
        return r;
    }
    for (Vertex v : c.vertices()) {
        SimplicialComplex lk = c.link(Face{v});
        CheckReport pm = check_closed_pseudomanifold(lk);
        if (!pm.ok || lk.dim() != d - 1) {
            r.flag("link of vertex " + std::to_string(v) + " is not a closed pseudomanifold of dim " +
                   std::to_string(d - 1) + (pm.ok ? "" : (": " + pm.summary())));
            continue;
        }
        if (betti_gf2(lk) != sphere_betti_gf2(d - 1))
            r.flag("link of vertex " + std::to_string(v) + " fails the sphere Betti test");
    }
    if (recurse_edges && d >= 2) {
        for (const auto& e : c.faces(1)) {
            SimplicialComplex lk = c.link(e);
            CheckReport pm = check_closed_pseudomanifold(lk);
            if (!pm.ok || lk.dim() != d - 2 || betti_gf2(lk) != sphere_betti_gf2(d - 2))
                r.flag("link of edge " + face_to_string(e) + " fails the sphere test");
        }
    }
    return r;
}

// ---------------------------------------------------------------------------
// Reference counts and bounds
// ---------------------------------------------------------------------------

inline long long fibonacci(int n) {
    // F_{-1} = 1, F_0 = 0, F_1 = 1, ...
    if (n == -1) return 1;
    long long a = 0, b = 1;  // F_0, F_1
    if (n == 0) return a;
    for (int i = 1; i < n; ++i) {
        long long c = a + b;
        a = b;
        b = c;
    }
    return b;
}

/// Vertex count of the cs d-sphere: 3 F_{d+1} + 7 F_d + 3 F_{d-1} - 4.
inline long long sphere_f0(int d) {
    return 3 * fibonacci(d + 1) + 7 * fibonacci(d) + 3 * fibonacci(d - 1) - 4;
}

/// Vertex count of the projective-space triangulation (half the sphere's).
inline long long fibonacci_f0(int d) { return sphere_f0(d) / 2; }

inline long long kuhnel_f0(int d) { return (1LL << (d + 1)) - 1; }

struct Bound {
    int d = 0;
    long long value = 0;
    bool in_stated_range = false;  // the lower bound is stated for d >= 3
};

inline Bound arnoux_marin_bound(int d) {
    Bound b;
    b.d = d;
    b.value = static_cast<long long>(d + 2) * (d + 1) / 2 + 1;
    b.in_stated_range = d >= 3;
    return b;
}

}  // namespace cstri
