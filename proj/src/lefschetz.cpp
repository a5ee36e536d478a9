#include "ihfan/lefschetz.hpp"
#include "ihfan/minimal_sheaf.hpp"
#include "ihfan/projection.hpp"

#include <algorithm>
#include <cassert>

namespace ihfan {

namespace {

// minimal extension sheaf on the affine fan of the cone, for the V audit
bool vanishing_holds(const Fan& f, int sigma) {
    const Cone& c = f.cone(sigma);
    std::vector<VecQ> rays;
    std::vector<int> idx;
    for (int r : c.ray_ids) {
        idx.push_back(static_cast<int>(rays.size()));
        rays.push_back(f.ray(r));
    }
    Fan affine = build_fan(f.ambient_dim(), rays, {idx}, /*check_pairwise=*/false);
    RealizedSheaf e = build_minimal_extension(affine, 2 * f.ambient_dim() + 2);
    return e.all_vanishing();
}

MatQ section_functions(const RealizedSheaf& G, const SectionSpace& sp,
                       const PwContext::Blocks& blocks) {
    MatQ m(blocks.total, sp.dim());
    for (long c = 0; c < sp.dim(); ++c) {
        VecQ unit = VecQ::Zero(sp.dim());
        unit(c) = 1;
        m.col(c) = G.ctx->to_vector(blocks, G.realize_section(sp, unit));
    }
    return m;
}

} // namespace

LefschetzReport hard_lefschetz_check(const Fan& f, int sigma, int degree_bound) {
    LefschetzReport rep;
    const Cone& sc = f.cone(sigma);
    if (sc.dim < 1) throw ZeroCone("hard Lefschetz check needs a nonzero cone");
    rep.m = sc.dim - 1;

    rep.vanishing_ok = vanishing_holds(f, sigma);
    if (!rep.vanishing_ok) return rep; // reported, not a crash

    ProjectionData proj = projection_fan(f, sigma);
    const Fan& lambda = proj.lambda;
    const int m = rep.m;
    const int D = std::max(degree_bound, 2 * m + 2);
    RealizedSheaf G = build_minimal_extension(lambda, D);

    // psi per refinement piece: the height functional of the carrying facet
    std::map<int, int> facet_of_lambda_cone; // lambda max cone id -> facet of sigma
    for (const auto& [face, lam] : proj.cone_map) {
        if (lambda.cone(lam).dim == m) facet_of_lambda_cone[lam] = face;
    }
    std::map<int, MultiPoly> psi; // per piece
    std::vector<int> all_pieces;
    for (int mc : lambda.max_cone_ids()) {
        const VecQ& lam_form = proj.psi_on_facet.at(facet_of_lambda_cone.at(mc));
        for (int piece : G.ref->pieces_of(mc)) {
            psi[piece] = G.ctx->ambient_to_local(piece, MultiPoly::linear_form(lam_form));
            all_pieces.push_back(piece);
        }
    }

    Subfan whole = Subfan::whole(lambda);
    std::vector<SectionSpace> spaces;
    std::vector<MatQ> prods;
    for (int q = 0; 2 * q <= D; ++q) {
        spaces.push_back(formal_sections(G.data, whole, q));
        prods.push_back(q == 0 ? MatQ(spaces[0].dim(), 0)
                               : m_products_in_sections(G.data, spaces[static_cast<size_t>(q - 1)],
                                                        spaces[static_cast<size_t>(q)]));
    }
    for (int q = 0; 2 * q <= D; ++q) {
        long r = spaces[static_cast<size_t>(q)].dim() - rank(prods[static_cast<size_t>(q)]);
        if (r > 0) rep.gbar = rep.gbar + PoincarePoly::term(Integer(r), q);
    }

    for (int q = 0; q <= m; ++q) {
        LefschetzReport::Level lvl;
        lvl.two_q = 2 * q;
        lvl.dim_from = spaces[static_cast<size_t>(q)].dim() - rank(prods[static_cast<size_t>(q)]);
        lvl.dim_to =
            spaces[static_cast<size_t>(q + 1)].dim() - rank(prods[static_cast<size_t>(q + 1)]);
        lvl.needs_injective = (2 * q <= m - 1);
        lvl.needs_surjective = (2 * q >= m - 1);

        const SectionSpace& from = spaces[static_cast<size_t>(q)];
        const SectionSpace& to = spaces[static_cast<size_t>(q + 1)];
        if (from.dim() == 0 || to.dim() == 0) {
            lvl.rank = 0;
        } else {
            auto to_blocks = G.ctx->blocks(all_pieces, q + 1);
            MatQ to_funcs = section_functions(G, to, to_blocks);
            MatQ images(to.dim(), from.dim());
            for (long c = 0; c < from.dim(); ++c) {
                VecQ unit = VecQ::Zero(from.dim());
                unit(c) = 1;
                PwFunc s = G.realize_section(from, unit);
                PwFunc ps;
                for (const auto& [piece, poly] : s) {
                    MultiPoly prod = psi.at(piece) * poly;
                    if (!prod.is_zero()) ps[piece] = std::move(prod);
                }
                auto coords = solve(to_funcs, G.ctx->to_vector(to_blocks, ps));
                if (!coords)
                    throw Error("psi-multiple of a section left the sheaf (internal)");
                images.col(c) = *coords;
            }
            // rank of the induced residue map; psi-multiples of m-multiples
            // stay m-multiples, so the quotient map is well defined
            const MatQ& pr_to = prods[static_cast<size_t>(q + 1)];
            lvl.rank = rank(hcat(pr_to, images)) - rank(pr_to);
        }
        lvl.injective = (lvl.rank == lvl.dim_from);
        lvl.surjective = (lvl.rank == lvl.dim_to);
        rep.levels.push_back(lvl);
    }

    rep.passed = true;
    for (const auto& l : rep.levels) {
        if (l.needs_injective && !l.injective) rep.passed = false;
        if (l.needs_surjective && !l.surjective) rep.passed = false;
    }
    return rep;
}

} // namespace ihfan
