#include "ihfan/fan.hpp"
#include "ihfan/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <numeric>
#include <set>

namespace ihfan {

VecQ primitivize(const VecQ& v) {
    Integer lcm_den = 1;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        Integer den = boost::multiprecision::denominator(v(i));
        lcm_den = boost::multiprecision::lcm(lcm_den, den);
    }
    std::vector<Integer> ints(static_cast<size_t>(v.size()));
    Integer g = 0;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        Rational scaled = v(i) * Rational(lcm_den);
        ints[static_cast<size_t>(i)] = boost::multiprecision::numerator(scaled);
        g = boost::multiprecision::gcd(g, ints[static_cast<size_t>(i)]);
    }
    if (g == 0) throw Error("primitivize: zero vector");
    VecQ out(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i)
        out(i) = Rational(ints[static_cast<size_t>(i)] / g);
    return out;
}

namespace {

MatQ rays_as_rows(const std::vector<VecQ>& rays, const std::vector<int>& ids, int n) {
    MatQ m(static_cast<Eigen::Index>(ids.size()), n);
    for (size_t i = 0; i < ids.size(); ++i)
        m.row(static_cast<Eigen::Index>(i)) = rays[static_cast<size_t>(ids[i])].transpose();
    return m;
}

MatQ span_basis_of(const std::vector<VecQ>& rays, const std::vector<int>& ids, int n) {
    if (ids.empty()) return MatQ(0, n);
    Rref r = rref(rays_as_rows(rays, ids, n));
    return MatQ(r.mat.topRows(r.rank));
}

bool is_pointed(const std::vector<VecQ>& rays, const std::vector<int>& ids, int n) {
    if (ids.empty()) return true;
    // pointed iff 0 is not a convex combination of the generators
    MatQ a(n + 1, static_cast<Eigen::Index>(ids.size()));
    for (size_t j = 0; j < ids.size(); ++j) {
        for (int i = 0; i < n; ++i) a(i, static_cast<Eigen::Index>(j)) = rays[static_cast<size_t>(ids[j])](i);
        a(n, static_cast<Eigen::Index>(j)) = 1;
    }
    VecQ b = VecQ::Zero(n + 1);
    b(n) = 1;
    return !nonneg_solution_exists(a, b);
}

// Coordinates of the generators in the cone's own span basis: one column per
// generator, d rows.
MatQ generator_coords(const std::vector<VecQ>& rays, const std::vector<int>& ids,
                      const MatQ& basis) {
    const int d = static_cast<int>(basis.rows());
    MatQ bt = basis.transpose(); // n x d
    MatQ g(bt.rows(), static_cast<Eigen::Index>(ids.size()));
    for (size_t j = 0; j < ids.size(); ++j) g.col(static_cast<Eigen::Index>(j)) = rays[static_cast<size_t>(ids[j])];
    auto sol = solve_many(bt, g);
    if (!sol) throw Error("generator outside its own span (internal)");
    assert(sol->rows() == d);
    (void)d;
    return *sol;
}

// All faces of the cone on `ids`, as sorted global-ray-id sets (including the
// cone itself and the empty set).  Facets come from supporting functionals
// spanned by (d-1)-subsets of generators; all lower faces are intersections
// of facets.
std::set<std::vector<int>> enumerate_faces(const std::vector<VecQ>& rays,
                                           const std::vector<int>& ids, int n) {
    std::set<std::vector<int>> faces;
    std::vector<int> self(ids);
    std::sort(self.begin(), self.end());
    faces.insert(self);
    faces.insert(std::vector<int>{});
    if (ids.empty()) return faces;

    MatQ basis = span_basis_of(rays, ids, n);
    const int d = static_cast<int>(basis.rows());
    MatQ coords = generator_coords(rays, ids, basis); // d x m
    const int m = static_cast<int>(ids.size());

    std::set<std::vector<int>> facet_sets;
    // iterate over (d-1)-subsets of generators
    std::vector<bool> sel(static_cast<size_t>(m), false);
    std::function<void(int, int)> rec = [&](int start, int need) {
        if (need == 0) {
            std::vector<int> chosen;
            for (int i = 0; i < m; ++i)
                if (sel[static_cast<size_t>(i)]) chosen.push_back(i);
            MatQ sub(static_cast<Eigen::Index>(chosen.size()), d);
            for (size_t r = 0; r < chosen.size(); ++r)
                sub.row(static_cast<Eigen::Index>(r)) = coords.col(chosen[r]).transpose();
            MatQ ker = kernel_basis(sub);
            if (ker.cols() != 1) return;
            VecQ u = ker.col(0);
            VecQ vals = coords.transpose() * u; // one value per generator
            bool nonneg = true, nonpos = true;
            for (int i = 0; i < m; ++i) {
                if (vals(i) < 0) nonneg = false;
                if (vals(i) > 0) nonpos = false;
            }
            if (!nonneg && !nonpos) return;
            std::vector<int> zero_local;
            for (int i = 0; i < m; ++i)
                if (vals(i) == 0) zero_local.push_back(i);
            // facet = zero set of rank d-1
            std::vector<int> zero_ids;
            for (int i : zero_local) zero_ids.push_back(ids[static_cast<size_t>(i)]);
            std::sort(zero_ids.begin(), zero_ids.end());
            if (rank(rays_as_rows(rays, zero_ids, n)) == d - 1) facet_sets.insert(zero_ids);
            return;
        }
        for (int i = start; i <= m - need; ++i) {
            sel[static_cast<size_t>(i)] = true;
            rec(i + 1, need - 1);
            sel[static_cast<size_t>(i)] = false;
        }
    };
    rec(0, d - 1);

    // close under intersection
    std::vector<std::vector<int>> frontier(facet_sets.begin(), facet_sets.end());
    for (const auto& f : frontier) faces.insert(f);
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& f : frontier) {
            for (const auto& g : facet_sets) {
                std::vector<int> inter;
                std::set_intersection(f.begin(), f.end(), g.begin(), g.end(),
                                      std::back_inserter(inter));
                if (!faces.count(inter)) {
                    faces.insert(inter);
                    next.push_back(inter);
                }
            }
        }
        frontier = std::move(next);
    }
    return faces;
}

// Does sigma1 cap sigma2 stick out of span(common rays)?
bool intersection_exceeds_span(const Fan& fan_stub, const std::vector<VecQ>& rays,
                               const std::vector<int>& c1, const std::vector<int>& c2,
                               const std::vector<int>& common, int n) {
    (void)fan_stub;
    MatQ common_rows = rays_as_rows(rays, common, n); // may be 0 x n
    MatQ ann = kernel_basis(common_rows);             // functionals vanishing on span(common)
    if (ann.cols() == 0) return false;
    const int m1 = static_cast<int>(c1.size()), m2 = static_cast<int>(c2.size());
    for (Eigen::Index k = 0; k < ann.cols(); ++k) {
        for (int sign : {1, -1}) {
            MatQ a(n + 1, m1 + m2);
            for (int j = 0; j < m1; ++j) {
                const VecQ& r = rays[static_cast<size_t>(c1[static_cast<size_t>(j)])];
                for (int i = 0; i < n; ++i) a(i, j) = r(i);
                a(n, j) = sign * r.dot(ann.col(k));
            }
            for (int j = 0; j < m2; ++j) {
                const VecQ& r = rays[static_cast<size_t>(c2[static_cast<size_t>(j)])];
                for (int i = 0; i < n; ++i) a(i, m1 + j) = -r(i);
                a(n, m1 + j) = 0;
            }
            VecQ b = VecQ::Zero(n + 1);
            b(n) = 1;
            if (nonneg_solution_exists(a, b)) return true;
        }
    }
    return false;
}

} // namespace

Fan build_fan(int ambient_dim, const std::vector<VecQ>& rays,
              const std::vector<std::vector<int>>& max_cones, bool check_pairwise) {
    Fan f;
    f.ambient_dim_ = ambient_dim;
    f.rays_.reserve(rays.size());
    std::set<std::vector<std::string>> seen;
    for (const auto& r : rays) {
        if (static_cast<int>(r.size()) != ambient_dim)
            throw Error("ray dimension does not match ambient dimension");
        VecQ p = primitivize(r);
        std::vector<std::string> key;
        for (Eigen::Index i = 0; i < p.size(); ++i) key.push_back(p(i).str());
        if (!seen.insert(key).second) throw Error("duplicate ray direction in ray list");
        f.rays_.push_back(p);
    }

    // normalize the listed maximal cones
    std::vector<std::vector<int>> maxs;
    for (size_t c = 0; c < max_cones.size(); ++c) {
        std::vector<int> ids(max_cones[c]);
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
        for (int i : ids)
            if (i < 0 || i >= static_cast<int>(f.rays_.size()))
                throw Error("cone " + std::to_string(c) + " references unknown ray");
        if (!is_pointed(f.rays_, ids, ambient_dim))
            throw NonPointedCone("cone " + std::to_string(c) + " contains a line");
        maxs.push_back(std::move(ids));
    }
    if (maxs.empty()) maxs.push_back({}); // fan of the zero cone alone

    // face enumeration per listed cone
    std::vector<std::set<std::vector<int>>> face_lists;
    for (const auto& c : maxs) face_lists.push_back(enumerate_faces(f.rays_, c, ambient_dim));

    // absorb listed cones that are faces of other listed cones
    std::vector<bool> absorbed(maxs.size(), false);
    for (size_t i = 0; i < maxs.size(); ++i) {
        for (size_t j = 0; j < maxs.size(); ++j) {
            if (i == j || absorbed[j]) continue;
            if (maxs[i] == maxs[j] && i > j) { absorbed[i] = true; break; }
            if (maxs[i] != maxs[j] &&
                std::includes(maxs[j].begin(), maxs[j].end(), maxs[i].begin(), maxs[i].end())) {
                if (!face_lists[j].count(maxs[i]))
                    throw ConesIntersectBadly("listed cone " + std::to_string(i) +
                                              " lies inside cone " + std::to_string(j) +
                                              " without being a face");
                absorbed[i] = true;
                break;
            }
        }
    }

    // pairwise common-face validation of maximal cones
    if (check_pairwise) {
        for (size_t i = 0; i < maxs.size(); ++i) {
            if (absorbed[i]) continue;
            for (size_t j = i + 1; j < maxs.size(); ++j) {
                if (absorbed[j]) continue;
                std::vector<int> common;
                std::set_intersection(maxs[i].begin(), maxs[i].end(), maxs[j].begin(),
                                      maxs[j].end(), std::back_inserter(common));
                if (!face_lists[i].count(common) || !face_lists[j].count(common))
                    throw ConesIntersectBadly("cones " + std::to_string(i) + " and " +
                                              std::to_string(j) +
                                              " share rays that span no common face");
                if (intersection_exceeds_span(f, f.rays_, maxs[i], maxs[j], common, ambient_dim))
                    throw ConesIntersectBadly("cones " + std::to_string(i) + " and " +
                                              std::to_string(j) +
                                              " overlap beyond their common face");
            }
        }
    }

    // collect all faces, then sort canonically by (dim, rayset)
    std::set<std::vector<int>> all;
    for (size_t i = 0; i < maxs.size(); ++i)
        for (const auto& face : face_lists[i]) all.insert(face);

    struct Entry { std::vector<int> rays; int dim; };
    std::vector<Entry> entries;
    for (const auto& rs : all)
        entries.push_back({rs, rank(rays_as_rows(f.rays_, rs, ambient_dim))});
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        return a.rays < b.rays;
    });

    for (size_t id = 0; id < entries.size(); ++id) {
        Cone c;
        c.id = static_cast<int>(id);
        c.ray_ids = entries[id].rays;
        c.dim = entries[id].dim;
        c.span_basis = span_basis_of(f.rays_, c.ray_ids, ambient_dim);
        f.by_rays_[c.ray_ids] = c.id;
        f.cones_.push_back(std::move(c));
    }
    f.zero_id_ = f.by_rays_.at({});

    // face ids by rayset inclusion (valid after the pairwise check)
    for (auto& c : f.cones_) {
        for (const auto& other : f.cones_) {
            if (other.id == c.id) continue;
            if (std::includes(c.ray_ids.begin(), c.ray_ids.end(), other.ray_ids.begin(),
                              other.ray_ids.end()))
                c.face_ids.push_back(other.id);
        }
        std::sort(c.face_ids.begin(), c.face_ids.end());
    }

    for (size_t i = 0; i < maxs.size(); ++i)
        if (!absorbed[i]) f.max_cone_ids_.push_back(f.by_rays_.at(maxs[i]));
    std::sort(f.max_cone_ids_.begin(), f.max_cone_ids_.end());
    f.max_cone_ids_.erase(std::unique(f.max_cone_ids_.begin(), f.max_cone_ids_.end()),
                          f.max_cone_ids_.end());
    return f;
}

int Fan::cone_by_rays(const std::vector<int>& sorted_rays) const {
    auto it = by_rays_.find(sorted_rays);
    return it == by_rays_.end() ? -1 : it->second;
}

bool Fan::is_face_of(int tau, int sigma) const {
    if (tau == sigma) return true;
    const auto& fs = cones_[static_cast<size_t>(sigma)].face_ids;
    return std::binary_search(fs.begin(), fs.end(), tau);
}

std::vector<int> Fan::facets_of(int sigma) const {
    std::vector<int> out;
    const Cone& s = cones_[static_cast<size_t>(sigma)];
    for (int fid : s.face_ids)
        if (cones_[static_cast<size_t>(fid)].dim == s.dim - 1) out.push_back(fid);
    return out;
}

std::vector<int> Fan::cofacets_of(int tau) const {
    std::vector<int> out;
    const Cone& t = cones_[static_cast<size_t>(tau)];
    for (const auto& c : cones_)
        if (c.dim == t.dim + 1 && is_face_of(tau, c.id)) out.push_back(c.id);
    return out;
}

std::vector<int> Fan::cones_of_dim(int d) const {
    std::vector<int> out;
    for (const auto& c : cones_)
        if (c.dim == d) out.push_back(c.id);
    return out;
}

MatQ Fan::generator_matrix(int sigma) const {
    const Cone& c = cones_[static_cast<size_t>(sigma)];
    MatQ m(ambient_dim_, static_cast<Eigen::Index>(c.ray_ids.size()));
    for (size_t j = 0; j < c.ray_ids.size(); ++j)
        m.col(static_cast<Eigen::Index>(j)) = rays_[static_cast<size_t>(c.ray_ids[j])];
    return m;
}

Subfan Subfan::whole(const Fan& f) {
    Subfan s;
    s.parent = &f;
    for (const auto& c : f.cones()) s.cone_ids.push_back(c.id);
    return s;
}

Subfan Subfan::closure(const Fan& f, const std::vector<int>& generators) {
    std::set<int> ids;
    ids.insert(f.zero_cone_id());
    for (int g : generators) {
        ids.insert(g);
        for (int fid : f.cone(g).face_ids) ids.insert(fid);
    }
    Subfan s;
    s.parent = &f;
    s.cone_ids.assign(ids.begin(), ids.end());
    return s;
}

bool Subfan::contains(int id) const {
    return std::binary_search(cone_ids.begin(), cone_ids.end(), id);
}

std::vector<int> Subfan::max_cones() const {
    std::vector<int> out;
    for (int id : cone_ids) {
        bool maximal = true;
        for (int other : cone_ids) {
            if (other != id && parent->is_face_of(id, other)) { maximal = false; break; }
        }
        if (maximal) out.push_back(id);
    }
    return out;
}

Subfan boundary_subfan(const Fan& f) {
    const int n = f.ambient_dim();
    for (int m : f.max_cone_ids())
        if (f.cone(m).dim != n)
            throw NotPure("boundary subfan requires a purely " + std::to_string(n) +
                          "-dimensional fan");
    std::vector<int> walls;
    for (int w : f.cones_of_dim(n - 1)) {
        int count = 0;
        for (int m : f.max_cone_ids())
            if (f.is_face_of(w, m)) ++count;
        if (count == 1) walls.push_back(w);
    }
    return Subfan::closure(f, walls);
}

bool is_complete(const Fan& f) {
    const int n = f.ambient_dim();
    for (int m : f.max_cone_ids())
        if (f.cone(m).dim != n) return false;
    for (int w : f.cones_of_dim(n - 1)) {
        int count = 0;
        for (int m : f.max_cone_ids())
            if (f.is_face_of(w, m)) ++count;
        if (count != 2) return false;
    }
    return true;
}

bool is_simplicial(const Fan& f, int cone_id) {
    const Cone& c = f.cone(cone_id);
    return static_cast<int>(c.ray_ids.size()) == c.dim;
}

bool is_simplicial_fan(const Fan& f) {
    for (const auto& c : f.cones())
        if (!is_simplicial(f, c.id)) return false;
    return true;
}

bool is_face_rayset(const Fan& f, int sigma, const std::vector<int>& rayset) {
    const Cone& s = f.cone(sigma);
    // u free in d dual coordinates; u(g) = 0 on rayset, u(g) >= 1 elsewhere
    const int d = s.dim;
    MatQ basis = s.span_basis;
    std::vector<int> others;
    for (int r : s.ray_ids)
        if (!std::binary_search(rayset.begin(), rayset.end(), r)) others.push_back(r);
    for (int r : rayset)
        if (!std::binary_search(s.ray_ids.begin(), s.ray_ids.end(), r)) return false;
    if (others.empty()) return true; // the cone itself
    const int nz = static_cast<int>(rayset.size());
    const int no = static_cast<int>(others.size());
    // variables: u+ (d), u- (d), slacks (no)
    MatQ a(nz + no, 2 * d + no);
    a.setZero();
    VecQ b = VecQ::Zero(nz + no);
    auto coords_of = [&](int ray_id) {
        auto sol = solve(basis.transpose(), f.ray(ray_id));
        assert(sol);
        return *sol;
    };
    int row = 0;
    for (int r : rayset) {
        VecQ g = coords_of(r);
        for (int i = 0; i < d; ++i) { a(row, i) = g(i); a(row, d + i) = -g(i); }
        b(row) = 0;
        ++row;
    }
    for (int k = 0; k < no; ++k) {
        VecQ g = coords_of(others[static_cast<size_t>(k)]);
        for (int i = 0; i < d; ++i) { a(row, i) = g(i); a(row, d + i) = -g(i); }
        a(row, 2 * d + k) = -1;
        b(row) = 1;
        ++row;
    }
    return nonneg_solution_exists(a, b);
}

} // namespace ihfan
