#ifndef IHFAN_SHEAF_DATA_HPP
#define IHFAN_SHEAF_DATA_HPP

#include "ihfan/fan.hpp"
#include "ihfan/linalg.hpp"
#include "ihfan/poincare.hpp"
#include "ihfan/poly.hpp"

#include <map>
#include <utility>
#include <vector>

namespace ihfan {

/**
 * Formal presentation of a sheaf of graded modules on the fan topology, with
 * free stalks.  Each cone carries an ordered list of generator degrees; the
 * degree-2q slice of the stalk at sigma has the canonical basis
 * {(i, m) : m a monomial of degree q - q_i in the span coordinates of sigma},
 * ordered by generator then graded-lex.  Restriction maps are stored per
 * facet pair at generator level as polynomial expressions in the target
 * stalk and expanded to slice matrices on demand; restriction to deeper
 * faces composes along a canonical facet chain.
 *
 * The minimal extension sheaf populates this structure from its realization
 * by piecewise polynomials; simple sheaves and direct images are built here
 * directly.  All consumers (cochain complexes, section modules, residues,
 * decomposition) work on this formal data.
 */
class SheafData {
public:
    SheafData() = default;
    // the lazily built slice matrices derive from gen_deg and restr, so they
    // never travel with copies (callers may mutate the copy)
    SheafData(const SheafData& o)
        : fan(o.fan), max_q(o.max_q), gen_deg(o.gen_deg), restr(o.restr) {}
    SheafData& operator=(const SheafData& o) {
        fan = o.fan;
        max_q = o.max_q;
        gen_deg = o.gen_deg;
        restr = o.restr;
        slice_restr_cache_.clear();
        return *this;
    }
    SheafData(SheafData&&) = default;
    SheafData& operator=(SheafData&&) = default;

    const Fan* fan = nullptr;
    int max_q = 0; // slices 0..max_q available (cohomological degree 2*max_q)

    std::vector<std::vector<int>> gen_deg; // per cone id: ordinary degrees q_i

    /// restriction of generator i of sigma to a facet tau: one polynomial in
    /// tau's span coordinates per generator of tau (degree q_i - q_j each).
    struct GenExpr {
        std::vector<MultiPoly> comps;
    };
    std::map<std::pair<int, int>, std::vector<GenExpr>> restr;

    long slice_dim(int sigma, int q) const;
    std::vector<std::pair<int, Expo>> slice_basis(int sigma, int q) const;

    /// Slice q of the restriction map stalk(sigma) -> stalk(tau), tau a facet.
    const MatQ& restriction_facet(int sigma, int tau, int q) const;
    /// Composite restriction to an arbitrary face (identity when gamma == sigma).
    MatQ restriction_to_face(int sigma, int gamma, int q) const;

    /// Multiplication by the k-th ambient coordinate: slice q -> slice q+1.
    MatQ mult_ambient(int sigma, int k, int q) const;

    /// Graded dimensions of the stalk residue space (the generator degrees).
    PoincarePoly stalk_poly(int sigma) const;

    /// Substitution matrix of span coordinates of sigma restricted to a face.
    MatQ coord_subst(int sigma, int gamma) const;

private:
    mutable std::map<std::tuple<int, int, int>, MatQ> slice_restr_cache_;
};

/// Compatible tuples over the inclusion-maximal cones of a subfan, in
/// stacked stalk-slice coordinates.
struct SectionSpace {
    int q = 0;
    std::vector<int> max_cones;
    std::vector<long> offsets; // size max_cones.size() + 1
    MatQ basis;                // stacked coords x space dimension

    long dim() const { return basis.cols(); }
    /// Coordinates of one section's component at a listed max cone.
    VecQ component(const VecQ& section, size_t which) const;
};

SectionSpace formal_sections(const SheafData& F, const Subfan& L, int q);

/// Sections vanishing on every cone of `vanish_on` (a subfan of L).
SectionSpace formal_sections_relative(const SheafData& F, const Subfan& L,
                                      const Subfan& vanish_on, int q);

/// Products of ambient linear forms with the lower section space, expressed
/// in the coordinates of the upper one (columns; the span is m * sections).
MatQ m_products_in_sections(const SheafData& F, const SectionSpace& lower,
                            const SectionSpace& upper);

/// Residue dimensions of the section module over L, through t-degree bound D.
PoincarePoly formal_section_residues(const SheafData& F, const Subfan& L, int D);

/// Same for the submodule of sections vanishing on a subfan.
PoincarePoly formal_section_residues_relative(const SheafData& F, const Subfan& L,
                                              const Subfan& vanish_on, int D);

/// Degree shift F[-l]: a generator of degree 2q becomes one of degree 2q + l.
SheafData shift(const SheafData& F, int l);

SheafData direct_sum(const SheafData& a, const SheafData& b);

/**
 * The simple sheaf seeded at tau: the stalk at tau is the full polynomial
 * module with zero restriction to its faces, zero on the rest of the skeleton
 * up to dim tau, and extended upward cone by cone through the residues of its
 * boundary sections.
 */
SheafData build_simple_sheaf(const Fan& f, int tau, int degree_bound);

} // namespace ihfan

#endif
