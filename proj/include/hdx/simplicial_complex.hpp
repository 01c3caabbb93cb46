/**
 * Finite abstract simplicial complexes with ordered per-degree simplex bases,
 * and their integer boundary/coboundary matrices.
 *
 * Simplices are stored as strictly increasing vertex-id tuples; the degree-l
 * list is sorted lexicographically, which fixes every matrix in this library
 * byte-for-byte.  Boundary signs follow the usual alternating convention:
 * the column of (v_0 < ... < v_l) has (-1)^i in the row of the face omitting
 * v_i.
 */

#ifndef HDX_SIMPLICIAL_COMPLEX_HPP
#define HDX_SIMPLICIAL_COMPLEX_HPP

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "hdx/errors.hpp"
#include "hdx/exact.hpp"

namespace hdx {

using VertexTuple = std::vector<int>;

/**
 * Finite abstract simplicial complex.
 *
 * Invariants (established by build_complex, checked by validate_complex):
 *  - every face of every listed simplex is listed (downward closure);
 *  - tuples are strictly increasing, no duplicates within a degree;
 *  - simplices[0] enumerates exactly the vertex ids 0..vertex_count-1.
 *
 * Immutable after construction; safe to share read-only across threads.
 */
struct SimplicialComplex {
    int vertex_count = 0;

    /// simplices[l] lists the l-simplices in lexicographic order.
    std::vector<std::vector<VertexTuple>> simplices;

    /// index[l] maps a tuple to its position in simplices[l].
    std::vector<std::map<VertexTuple, int>> index;

    int dim() const { return static_cast<int>(simplices.size()) - 1; }

    /** Number of l-simplices; zero outside the stored range. */
    Index size(int l) const {
        if (l < 0 || l > dim())
            return 0;
        return static_cast<Index>(simplices[static_cast<std::size_t>(l)].size());
    }

    /** Position of a tuple in degree l, or -1 if absent. */
    int simplex_index(int l, const VertexTuple& t) const {
        if (l < 0 || l > dim())
            return -1;
        const auto& m = index[static_cast<std::size_t>(l)];
        auto it = m.find(t);
        return it == m.end() ? -1 : it->second;
    }

    bool operator==(const SimplicialComplex& o) const {
        return vertex_count == o.vertex_count && simplices == o.simplices;
    }

    /** The facet set: simplices that are not a face of any higher simplex. */
    std::vector<VertexTuple> facets() const;
};

namespace detail {

inline void insert_with_faces(std::vector<std::set<VertexTuple>>& by_degree,
                              const VertexTuple& simplex) {
    const std::size_t n = simplex.size();
    // Enumerate all nonempty subsets; facet sizes are small at desk scale.
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        VertexTuple face;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i))
                face.push_back(simplex[i]);
        by_degree[face.size() - 1].insert(std::move(face));
    }
}

} // namespace detail

/**
 * Build the downward closure of a facet list.
 *
 * Vertex ids must be nonnegative and, across all facets, cover 0..max id
 * without gaps (isolated vertices are expressed as singleton facets).
 *
 * Throws InvalidFacet on a repeated vertex within a facet, a negative id,
 * an empty facet, or a gap in the vertex ids.
 */
inline SimplicialComplex build_complex(const std::vector<VertexTuple>& facets) {
    std::set<int> vertices;
    std::size_t max_size = 0;
    for (const VertexTuple& f : facets) {
        if (f.empty())
            throw InvalidFacet("empty facet");
        VertexTuple sorted = f;
        std::sort(sorted.begin(), sorted.end());
        if (sorted.front() < 0)
            throw InvalidFacet("negative vertex id in facet");
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw InvalidFacet("repeated vertex within a facet");
        vertices.insert(sorted.begin(), sorted.end());
        max_size = std::max(max_size, sorted.size());
    }
    if (!vertices.empty()) {
        const int max_id = *vertices.rbegin();
        if (static_cast<int>(vertices.size()) != max_id + 1)
            throw InvalidFacet("vertex ids must cover 0..max without gaps");
    }
    if (max_size > 24)
        throw InvalidFacet("facet dimension too large");

    std::vector<std::set<VertexTuple>> by_degree(max_size);
    for (const VertexTuple& f : facets) {
        VertexTuple sorted = f;
        std::sort(sorted.begin(), sorted.end());
        detail::insert_with_faces(by_degree, sorted);
    }
    while (!by_degree.empty() && by_degree.back().empty())
        by_degree.pop_back();

    SimplicialComplex k;
    k.vertex_count = static_cast<int>(vertices.size());
    k.simplices.resize(by_degree.size());
    k.index.resize(by_degree.size());
    for (std::size_t l = 0; l < by_degree.size(); ++l) {
        k.simplices[l].assign(by_degree[l].begin(), by_degree[l].end());
        for (std::size_t i = 0; i < k.simplices[l].size(); ++i)
            k.index[l][k.simplices[l][i]] = static_cast<int>(i);
    }
    return k;
}

inline std::vector<VertexTuple> SimplicialComplex::facets() const {
    std::vector<VertexTuple> out;
    for (int l = 0; l <= dim(); ++l) {
        for (const VertexTuple& s : simplices[static_cast<std::size_t>(l)]) {
            bool maximal = true;
            if (l + 1 <= dim()) {
                // s is a face of some (l+1)-simplex iff adding any admissible
                // vertex produces a listed tuple.
                for (int v = 0; v < vertex_count && maximal; ++v) {
                    if (std::binary_search(s.begin(), s.end(), v))
                        continue;
                    VertexTuple t = s;
                    t.insert(std::upper_bound(t.begin(), t.end(), v), v);
                    if (simplex_index(l + 1, t) >= 0)
                        maximal = false;
                }
            }
            if (maximal)
                out.push_back(s);
        }
    }
    return out;
}

/**
 * Matrix of the boundary map from l-chains to (l-1)-chains, in the stored
 * simplex bases.  Entries lie in {-1, 0, +1}; requires 1 <= l <= dim.
 */
inline IntMat boundary_matrix(const SimplicialComplex& k, int l) {
    if (l < 1 || l > k.dim())
        throw DegreeOutOfRange("boundary_matrix: degree " + std::to_string(l) +
                               " not in [1, " + std::to_string(k.dim()) + "]");
    IntMat m = IntMat::Zero(k.size(l - 1), k.size(l));
    const auto& cells = k.simplices[static_cast<std::size_t>(l)];
    for (std::size_t c = 0; c < cells.size(); ++c) {
        const VertexTuple& s = cells[c];
        std::int64_t sign = 1;
        for (std::size_t i = 0; i < s.size(); ++i) {
            VertexTuple face = s;
            face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
            const int r = k.simplex_index(l - 1, face);
            m(r, static_cast<Index>(c)) = sign;
            sign = -sign;
        }
    }
    return m;
}

/**
 * Matrix of the coboundary d_l from l-cochains to (l+1)-cochains: the
 * transpose of boundary_matrix(k, l+1).  Requires 0 <= l <= dim-1.
 */
inline IntMat coboundary_matrix(const SimplicialComplex& k, int l) {
    if (l < 0 || l > k.dim() - 1)
        throw DegreeOutOfRange("coboundary_matrix: degree " + std::to_string(l) +
                               " not in [0, " + std::to_string(k.dim() - 1) + "]");
    return boundary_matrix(k, l + 1).transpose();
}

/**
 * For each vertex, the number of l-simplices containing it, indexed by
 * vertex id.  Requires 0 <= l <= dim.
 */
inline std::vector<int> vertex_l_degrees(const SimplicialComplex& k, int l) {
    if (l < 0 || l > k.dim())
        throw DegreeOutOfRange("vertex_l_degrees: degree out of range");
    std::vector<int> deg(static_cast<std::size_t>(k.vertex_count), 0);
    for (const VertexTuple& s : k.simplices[static_cast<std::size_t>(l)])
        for (int v : s)
            ++deg[static_cast<std::size_t>(v)];
    return deg;
}

/** Multiset (sorted list) of per-vertex l-degrees. */
inline std::vector<int> vertex_degree_profile(const SimplicialComplex& k, int l) {
    std::vector<int> deg = vertex_l_degrees(k, l);
    std::sort(deg.begin(), deg.end());
    return deg;
}

/** Collected validation findings; empty means valid. */
struct Diagnostics {
    std::vector<std::string> issues;

    bool ok() const { return issues.empty(); }

    void add(std::string msg) { issues.push_back(std::move(msg)); }

    std::string joined() const {
        std::string s;
        for (const auto& i : issues) {
            if (!s.empty())
                s += "; ";
            s += i;
        }
        return s;
    }
};

/**
 * Structural validation: tuple normalization, duplicate detection, vertex
 * enumeration, downward closure, and the exact chain identity dd = 0 for
 * every degree in range.
 */
inline Diagnostics validate_complex(const SimplicialComplex& k) {
    Diagnostics diag;
    for (int l = 0; l <= k.dim(); ++l) {
        const auto& cells = k.simplices[static_cast<std::size_t>(l)];
        std::set<VertexTuple> seen;
        for (const VertexTuple& s : cells) {
            if (static_cast<int>(s.size()) != l + 1)
                diag.add("degree " + std::to_string(l) + ": tuple of wrong length");
            if (!std::is_sorted(s.begin(), s.end()) ||
                std::adjacent_find(s.begin(), s.end()) != s.end())
                diag.add("degree " + std::to_string(l) + ": tuple not strictly increasing");
            if (!s.empty() && (s.front() < 0 || s.back() >= k.vertex_count))
                diag.add("degree " + std::to_string(l) + ": vertex id out of range");
            if (!seen.insert(s).second)
                diag.add("degree " + std::to_string(l) + ": duplicate tuple");
            if (l >= 1) {
                for (std::size_t i = 0; i < s.size(); ++i) {
                    VertexTuple face = s;
                    face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
                    if (k.simplex_index(l - 1, face) < 0)
                        diag.add("degree " + std::to_string(l) +
                                 ": missing face of a listed simplex");
                }
            }
        }
    }
    if (k.dim() >= 0 && k.size(0) != k.vertex_count)
        diag.add("degree 0 does not enumerate all vertices");
    if (k.dim() < 0 && k.vertex_count != 0)
        diag.add("vertex_count nonzero for empty complex");

    if (diag.ok()) {
        for (int l = 1; l + 1 <= k.dim(); ++l) {
            IntMat prod = boundary_matrix(k, l) * boundary_matrix(k, l + 1);
            if (prod.size() > 0 && prod.cwiseAbs().maxCoeff() != 0)
                diag.add("dd != 0 at degree " + std::to_string(l + 1));
        }
    }
    return diag;
}

} // namespace hdx

#endif // HDX_SIMPLICIAL_COMPLEX_HPP
