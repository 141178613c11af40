#pragma once

#include <vector>

#include "cstri/complex.hpp"
#include "cstri/cs.hpp"

namespace cstri {

// Vertices of the barycentric double cover are the nonempty proper subsets
// of {1,...,d+2}, as bitmasks. The label of a subset not containing element
// 1 is its mask shifted down one bit (positive); a subset containing
// element 1 gets minus its complement's label, so complementation is label
// negation.
inline Vertex subset_label(unsigned mask, unsigned full) {
    if (mask & 1u) return -static_cast<Vertex>((mask ^ full) >> 1);
    return static_cast<Vertex>(mask >> 1);
}

/// Barycentric subdivision of the boundary of the (d+1)-simplex: facets are
/// the maximal chains of nonempty proper subsets of a (d+2)-set, and
/// subset complementation is a free involution.
inline SimplicialComplex barycentric_boundary_sphere(int d) {
    if (d < 1) fail("certificate", "dimension must be at least 1");
    const int n = d + 2;
    const unsigned full = (1u << n) - 1;
    std::vector<Face> facets;
    Face chain(static_cast<std::size_t>(d) + 1);
    std::function<void(unsigned, int)> grow = [&](unsigned mask, int depth) {
        chain[static_cast<std::size_t>(depth) - 1] = subset_label(mask, full);
        if (depth == d + 1) {
            Face f = chain;
            std::sort(f.begin(), f.end());
            facets.push_back(std::move(f));
            return;
        }
        for (int e = 0; e < n; ++e) {
            const unsigned bit = 1u << e;
            if (mask & bit) continue;
            grow(mask | bit, depth + 1);
        }
    };
    for (int e = 0; e < n; ++e) grow(1u << e, 1);
    return SimplicialComplex::from_facets(std::move(facets));
}

/// The 2^{d+1}-1-vertex projective-space triangulation: the quotient of the
/// barycentric double cover. Quotient representatives are the subsets not
/// containing element 1.
inline SimplicialComplex kuhnel_rpd(int d) { return quotient_rp(barycentric_boundary_sphere(d)); }

}  // namespace cstri
