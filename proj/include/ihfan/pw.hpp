#ifndef IHFAN_PW_HPP
#define IHFAN_PW_HPP

#include "ihfan/fan.hpp"
#include "ihfan/linalg.hpp"
#include "ihfan/poly.hpp"
#include "ihfan/refinement.hpp"

#include <map>
#include <vector>

namespace ihfan {

/**
 * Bookkeeping for piecewise polynomial functions on a simplicial refinement.
 * Every refinement cone carries the dual coordinates of its primitive ray
 * generators (in ray-index order).  In these coordinates restriction to a
 * face is plain coefficient extraction and the compatibility conditions of a
 * piecewise function have 0/1 coefficients.
 *
 * A PwFunc maps refinement cone ids to local polynomials; absent pieces are
 * zero.  Functions are homogeneous throughout: cohomological degree 2q corresponds
 * to local polynomials of ordinary degree q.
 */
using PwFunc = std::map<int, MultiPoly>;

class PwContext {
public:
    PwContext(const Fan& base, const Refinement& ref);

    const Fan& base() const { return *base_; }
    const Refinement& refinement() const { return *ref_; }
    const Fan& refined() const { return ref_->refined; }

    /// Restriction of an ambient polynomial (n variables) to a piece.
    MultiPoly ambient_to_local(int piece, const MultiPoly& ambient) const;
    /// Restriction of the k-th ambient coordinate to a piece.
    const MultiPoly& ambient_coord(int piece, int k) const;
    /// Restriction to a piece of a polynomial in the dual span-basis
    /// coordinates of a base cone containing the piece.
    MultiPoly cone_poly_to_local(int base_cone, int piece, const MultiPoly& p) const;

    /// Extract the local polynomial on a face piece from one on a larger
    /// piece (to_piece must be a face of from_piece).
    MultiPoly restrict_piece(int from_piece, int to_piece, const MultiPoly& f) const;

    /// Restrict a function given on the pieces of a region to the pieces of
    /// a smaller region (each target piece must be a face of a source piece).
    PwFunc restrict_func(const PwFunc& f, const std::vector<int>& target_pieces) const;

    struct Blocks {
        std::vector<int> pieces;
        int q = 0;
        std::vector<long> offsets; // size pieces.size() + 1
        long total = 0;
    };
    Blocks blocks(const std::vector<int>& pieces, int q) const;
    VecQ to_vector(const Blocks& b, const PwFunc& f) const;
    PwFunc from_vector(const Blocks& b, const VecQ& v) const;

    /// Matrix rows expressing the compatibility of a piecewise function
    /// across all shared faces of the listed (maximal) pieces.
    MatQ compatibility_rows(const Blocks& b) const;

    /// Matrix extracting, from a function on `b`, the coefficients on the
    /// pieces of a contained region (one containing source piece per target).
    MatQ extraction_matrix(const Blocks& from, const Blocks& to) const;

private:
    const Fan* base_;
    const Refinement* ref_;
    mutable std::map<int, std::vector<MultiPoly>> ambient_images_;
    mutable std::map<std::pair<int, int>, std::vector<MultiPoly>> cone_images_;
    const std::vector<MultiPoly>& ambient_images(int piece) const;
    const std::vector<MultiPoly>& cone_images(int base_cone, int piece) const;
};

/**
 * Basis of the degree-q piecewise polynomials on the listed maximal pieces
 * (columns, in block coordinates): the kernel of the compatibility system.
 */
MatQ pw_kernel_basis(const PwContext& ctx, const PwContext::Blocks& b);

/// Dimension of the space of piecewise polynomials of cohomological degree 2q on a
/// simplicial fan (or the face closure of the listed cones).
long pw_poly_dim(const Fan& simplicial, const std::vector<int>& max_cones, int q);

/**
 * Cellwise coning extension: the refinement of a nonzero cone is the join of
 * the pulled ray rho with cells of the far facets; writing x = a rho + y with
 * y in the base cell, the extension of s takes the value s(y).  The input is
 * a function on the boundary pieces of sigma; only the far-facet components
 * are consumed.
 */
PwFunc extend_from_boundary(const PwContext& ctx, int sigma, const PwFunc& s);

} // namespace ihfan

#endif
