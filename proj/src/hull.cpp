#include "ihfan/hull.hpp"
#include "ihfan/linalg.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace ihfan {

std::vector<HullFacet> convex_hull_facets(const std::vector<VecQ>& points) {
    if (points.empty()) throw DegenerateInput("no points");
    const int n = static_cast<int>(points[0].size());
    const int m = static_cast<int>(points.size());
    if (m < n + 1) throw DegenerateInput("too few points to span the space");

    // affine span check
    MatQ diffs(n, m - 1);
    for (int i = 1; i < m; ++i) diffs.col(i - 1) = points[static_cast<size_t>(i)] - points[0];
    if (rank(diffs) != n) throw DegenerateInput("points do not affinely span the space");

    std::map<std::vector<int>, HullFacet> facets;
    std::vector<int> subset;
    std::function<void(int, int)> rec = [&](int start, int need) {
        if (need == 0) {
            // hyperplane through the chosen points: kernel of [p | 1]
            MatQ sys(static_cast<Eigen::Index>(subset.size()), n + 1);
            for (size_t r = 0; r < subset.size(); ++r) {
                for (int c = 0; c < n; ++c)
                    sys(static_cast<Eigen::Index>(r), c) = points[static_cast<size_t>(subset[r])](c);
                sys(static_cast<Eigen::Index>(r), n) = 1;
            }
            MatQ ker = kernel_basis(sys);
            if (ker.cols() != 1) return;
            VecQ u = ker.col(0).head(n);
            Rational c = -ker(n, 0);
            if (u.isZero()) return;
            bool le = true, ge = true;
            for (const auto& p : points) {
                Rational v = u.dot(p);
                if (v > c) le = false;
                if (v < c) ge = false;
            }
            if (!le && !ge) return;
            if (!le) { u = -u; c = -c; } // make the normal outer
            std::vector<int> verts;
            for (int i = 0; i < m; ++i)
                if (u.dot(points[static_cast<size_t>(i)]) == c) verts.push_back(i);
            if (verts.size() < static_cast<size_t>(n)) return;
            MatQ span(n, static_cast<Eigen::Index>(verts.size()) - 1);
            for (size_t i = 1; i < verts.size(); ++i)
                span.col(static_cast<Eigen::Index>(i - 1)) =
                    points[static_cast<size_t>(verts[i])] - points[static_cast<size_t>(verts[0])];
            if (rank(span) != n - 1) return; // lower-dimensional tangency
            if (!facets.count(verts)) facets[verts] = HullFacet{primitivize(u), c, verts};
            return;
        }
        for (int i = start; i <= m - need; ++i) {
            subset.push_back(i);
            rec(i + 1, need - 1);
            subset.pop_back();
        }
    };
    rec(0, n);

    std::vector<HullFacet> out;
    for (auto& [k, f] : facets) {
        f.offset = f.normal.dot(points[static_cast<size_t>(f.vertex_ids[0])]);
        out.push_back(f);
    }

    // every point must be a vertex: its facet normals span the space
    for (int i = 0; i < m; ++i) {
        MatQ normals(n, 0);
        for (const auto& f : out) {
            if (std::binary_search(f.vertex_ids.begin(), f.vertex_ids.end(), i))
                normals = hcat(normals, MatQ(f.normal));
        }
        if (normals.cols() == 0 || rank(normals) != n)
            throw DegenerateInput("input point " + std::to_string(i) + " is not a vertex");
    }
    return out;
}

Fan polytope_to_fan(const std::vector<VecQ>& vertices, PolytopeFanMode mode) {
    if (vertices.empty()) throw DegenerateInput("no vertices");
    const int n = static_cast<int>(vertices[0].size());
    auto facets = convex_hull_facets(vertices);

    if (mode == PolytopeFanMode::face_fan) {
        // translate the centroid to the origin, then cone over the facets
        VecQ centroid = VecQ::Zero(n);
        for (const auto& v : vertices) centroid += v;
        centroid /= Rational(static_cast<long>(vertices.size()));
        std::vector<VecQ> rays;
        for (const auto& v : vertices) rays.push_back(primitivize(v - centroid));
        std::vector<std::vector<int>> maxs;
        for (const auto& f : facets) maxs.push_back(f.vertex_ids);
        return build_fan(n, rays, maxs);
    }

    // normal fan: outer facet normals around each vertex
    std::vector<VecQ> rays;
    std::map<std::vector<std::string>, int> seen;
    std::vector<int> facet_ray(facets.size());
    for (size_t i = 0; i < facets.size(); ++i) {
        std::vector<std::string> key;
        for (Eigen::Index k = 0; k < facets[i].normal.size(); ++k)
            key.push_back(facets[i].normal(k).str());
        auto it = seen.find(key);
        if (it == seen.end()) {
            seen[key] = static_cast<int>(rays.size());
            facet_ray[i] = static_cast<int>(rays.size());
            rays.push_back(facets[i].normal);
        } else {
            facet_ray[i] = it->second;
        }
    }
    std::vector<std::vector<int>> maxs;
    for (size_t v = 0; v < vertices.size(); ++v) {
        std::vector<int> cone;
        for (size_t i = 0; i < facets.size(); ++i)
            if (std::binary_search(facets[i].vertex_ids.begin(), facets[i].vertex_ids.end(),
                                   static_cast<int>(v)))
                cone.push_back(facet_ray[i]);
        std::sort(cone.begin(), cone.end());
        maxs.push_back(std::move(cone));
    }
    return build_fan(n, rays, maxs);
}

} // namespace ihfan
