#ifndef IHFAN_MINIMAL_SHEAF_HPP
#define IHFAN_MINIMAL_SHEAF_HPP

#include "ihfan/pw.hpp"
#include "ihfan/sheaf_data.hpp"

#include <memory>

namespace ihfan {

/**
 * A sheaf on a fan realized by piecewise polynomial functions on the pulling
 * refinement, together with its formal free presentation.  The stalk at a
 * cone is the module generated over the cone's polynomial ring by the listed
 * generator functions; restriction is function restriction.
 */
class RealizedSheaf {
public:
    struct Generator {
        int q = 0;   // polynomial degree (cohomological degree 2q)
        PwFunc func; // on the pieces of the owning cone
    };

    struct ConeAudit {
        bool pf = true;            // realized slice ranks match the free counts
        bool lme = true;           // boundary residues of the generators form a basis
        bool vanishing = true;     // generator degrees < dim sigma
        PoincarePoly residues;     // stalk residue dimensions
    };

    const Fan* fan = nullptr;
    int max_q = 0;
    std::shared_ptr<Refinement> ref;
    std::shared_ptr<PwContext> ctx;
    std::vector<std::vector<Generator>> gens; // per cone
    SheafData data;

    bool normalized = true; // (N): single degree-0 generator at the zero cone
    std::vector<ConeAudit> audit;

    bool all_pf() const;
    bool all_lme() const;
    bool all_vanishing() const;

    /// Function matrix of the degree-q stalk slice: columns realize the
    /// formal slice basis over the cone's pieces.
    const MatQ& stalk_matrix(int sigma, int q) const;
    PwContext::Blocks stalk_blocks(int sigma, int q) const;
    /// Function of a formal stalk vector.
    PwFunc realize(int sigma, int q, const VecQ& coords) const;
    /// Realize a formal section over a subfan as one function.
    PwFunc realize_section(const SectionSpace& space, const VecQ& coeffs) const;

    /// Residue dimensions of the stalk, recomputed from function ranks.
    PoincarePoly stalk_residues_oracle(int sigma) const;

private:
    mutable std::map<std::pair<int, int>, MatQ> stalk_cache_;
};

/**
 * Builds the minimal extension sheaf: the constant function at the zero cone
 * and, cone by cone in increasing dimension, coning extensions of canonical
 * residue lifts of the boundary sections.  Lifts are normalized to vanish on
 * the pulled ray, which makes the coned generator restrict on the boundary
 * exactly to its lift.  The (N)/(PF)/(LME) and vanishing audits are recorded
 * per cone; degree_bound is a t-degree and must be at least 2n + 2.
 */
RealizedSheaf build_minimal_extension(const Fan& f, int degree_bound);

/// Default degree bound 2n + 2.
RealizedSheaf build_minimal_extension(const Fan& f);

/**
 * Direct image along a refinement: the stalk at sigma is the module of
 * sections of the input sheaf over the cones refining sigma, re-presented by
 * minimal generators.  Throws NotARefinement when the input does not live on
 * the refinement's fan and NotFreeStalks when some stalk fails the Hilbert
 * freeness count.
 */
RealizedSheaf direct_image(std::shared_ptr<Refinement> refinement, const RealizedSheaf& inner);

/// Wraps an externally built refined fan (possibly with new rays) as a
/// Refinement of `base`; used to push sheaves along non-pulling subdivisions.
Refinement refinement_from(const Fan& base, Fan refined);

/// Vanishing condition at a cone: stalk residues are zero in cohomological
/// degrees at or above the cone's dimension.
inline bool check_vanishing(const RealizedSheaf& e, int sigma) {
    return e.audit[static_cast<size_t>(sigma)].vanishing;
}

} // namespace ihfan

#endif
