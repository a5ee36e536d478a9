#ifndef IHFAN_FAN_HPP
#define IHFAN_FAN_HPP

#include "ihfan/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace ihfan {

/**
 * A face of the fan.  Cones are identified by their sorted ray-index sets;
 * inside a valid fan, rayset inclusion is equivalent to the face relation
 * (the geometric face test is run at construction time and is the authority).
 */
struct Cone {
    int id = -1;
    std::vector<int> ray_ids;   // sorted indices into Fan::rays()
    int dim = 0;                // rank of the generator matrix
    std::vector<int> face_ids;  // all proper faces, sorted by id; includes the zero cone
    MatQ span_basis;            // rows: canonical (rref) basis of V_sigma, dim x n

    bool is_zero() const { return ray_ids.empty(); }
};

class Fan {
public:
    Fan() = default;

    int ambient_dim() const { return ambient_dim_; }
    const std::vector<VecQ>& rays() const { return rays_; }
    const VecQ& ray(int i) const { return rays_[static_cast<size_t>(i)]; }
    const std::vector<Cone>& cones() const { return cones_; }
    const Cone& cone(int id) const { return cones_[static_cast<size_t>(id)]; }
    const std::vector<int>& max_cone_ids() const { return max_cone_ids_; }
    int zero_cone_id() const { return zero_id_; }
    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }

    int cone_by_rays(const std::vector<int>& sorted_rays) const; // -1 if absent
    bool is_face_of(int tau, int sigma) const;                   // proper or equal
    std::vector<int> facets_of(int sigma) const;                 // codim-1 faces
    std::vector<int> cofacets_of(int tau) const;                 // cones having tau as facet
    std::vector<int> cones_of_dim(int d) const;

    /// Matrix whose columns are the generators (primitive rays) of the cone.
    MatQ generator_matrix(int sigma) const;

    friend Fan build_fan(int, const std::vector<VecQ>&, const std::vector<std::vector<int>>&,
                         bool);

private:
    int ambient_dim_ = 0;
    std::vector<VecQ> rays_;
    std::vector<Cone> cones_;
    std::vector<int> max_cone_ids_;
    int zero_id_ = 0;
    std::map<std::vector<int>, int> by_rays_;
    std::string name_;
};

/**
 * Builds the fan with its full face lattice from primitive ray vectors and
 * maximal cones given as ray-index sets.  Faces are enumerated geometrically
 * via supporting functionals.  Throws NonPointedCone when a listed cone
 * contains a line and ConesIntersectBadly when two cones fail to meet in a
 * common face (the pairwise check can be skipped for fans constructed by
 * trusted internal refinements).
 */
Fan build_fan(int ambient_dim, const std::vector<VecQ>& rays,
              const std::vector<std::vector<int>>& max_cones, bool check_pairwise = true);

/// Scale a nonzero rational vector to its primitive integer representative.
VecQ primitivize(const VecQ& v);

/// Face-closed set of cones of a parent fan.  Always contains the zero cone.
struct Subfan {
    const Fan* parent = nullptr;
    std::vector<int> cone_ids; // sorted

    static Subfan whole(const Fan& f);
    static Subfan closure(const Fan& f, const std::vector<int>& generators);
    bool contains(int id) const;
    std::vector<int> max_cones() const; // inclusion-maximal members
};

/// Face closure of the walls lying in exactly one maximal cone.
/// Requires the fan to be purely n-dimensional.
Subfan boundary_subfan(const Fan& f);

/// Purity plus the wall condition: every (n-1)-cone lies in exactly two
/// n-cones.
bool is_complete(const Fan& f);

bool is_simplicial(const Fan& f, int cone_id);
bool is_simplicial_fan(const Fan& f);

/// Geometric face test: T (a subset of the rays of sigma) spans a face of
/// sigma iff some linear functional vanishes on T and is strictly positive on
/// the remaining generators.  Used by construction and by audits.
bool is_face_rayset(const Fan& f, int sigma, const std::vector<int>& rayset);

} // namespace ihfan

#endif
