#include "ihfan/minimal_sheaf.hpp"

#include <algorithm>
#include <cassert>

namespace ihfan {

bool RealizedSheaf::all_pf() const {
    for (const auto& a : audit)
        if (!a.pf) return false;
    return true;
}
bool RealizedSheaf::all_lme() const {
    for (const auto& a : audit)
        if (!a.lme) return false;
    return true;
}
bool RealizedSheaf::all_vanishing() const {
    for (const auto& a : audit)
        if (!a.vanishing) return false;
    return true;
}

PwContext::Blocks RealizedSheaf::stalk_blocks(int sigma, int q) const {
    return ctx->blocks(ref->pieces_of(sigma), q);
}

const MatQ& RealizedSheaf::stalk_matrix(int sigma, int q) const {
    auto key = std::make_pair(sigma, q);
    auto it = stalk_cache_.find(key);
    if (it != stalk_cache_.end()) return it->second;

    auto blocks = stalk_blocks(sigma, q);
    auto basis = data.slice_basis(sigma, q);
    MatQ m(blocks.total, static_cast<Eigen::Index>(basis.size()));
    const int d = fan->cone(sigma).dim;
    for (size_t c = 0; c < basis.size(); ++c) {
        const auto& [i, mono] = basis[c];
        MultiPoly mono_poly(d);
        mono_poly.add_term(mono, 1);
        PwFunc func;
        const auto& g = gens[static_cast<size_t>(sigma)][static_cast<size_t>(i)];
        for (const auto& [piece, poly] : g.func) {
            MultiPoly prod = ctx->cone_poly_to_local(sigma, piece, mono_poly) * poly;
            if (!prod.is_zero()) func[piece] = std::move(prod);
        }
        m.col(static_cast<Eigen::Index>(c)) = ctx->to_vector(blocks, func);
    }
    return stalk_cache_.emplace(key, std::move(m)).first->second;
}

PwFunc RealizedSheaf::realize(int sigma, int q, const VecQ& coords) const {
    auto blocks = stalk_blocks(sigma, q);
    VecQ v = stalk_matrix(sigma, q) * coords;
    return ctx->from_vector(blocks, v);
}

PwFunc RealizedSheaf::realize_section(const SectionSpace& space, const VecQ& coeffs) const {
    VecQ stacked = space.basis * coeffs;
    PwFunc out;
    for (size_t w = 0; w < space.max_cones.size(); ++w) {
        VecQ comp = space.component(stacked, w);
        PwFunc part = realize(space.max_cones[w], space.q, comp);
        for (auto& [piece, poly] : part) out[piece] = std::move(poly);
    }
    return out;
}

PoincarePoly RealizedSheaf::stalk_residues_oracle(int sigma) const {
    PoincarePoly out;
    const int n = fan->ambient_dim();
    for (int q = 0; q <= max_q; ++q) {
        const MatQ& slice = stalk_matrix(sigma, q);
        long r = rank(slice);
        if (q > 0) {
            const MatQ& lower = stalk_matrix(sigma, q - 1);
            auto blocks = stalk_blocks(sigma, q);
            auto lower_blocks = stalk_blocks(sigma, q - 1);
            MatQ prods(blocks.total, static_cast<Eigen::Index>(n) * lower.cols());
            long col = 0;
            for (int k = 0; k < n; ++k) {
                for (Eigen::Index c = 0; c < lower.cols(); ++c) {
                    PwFunc f = ctx->from_vector(lower_blocks, VecQ(lower.col(c)));
                    PwFunc xf;
                    for (const auto& [piece, poly] : f) {
                        MultiPoly prod = ctx->ambient_coord(piece, k) * poly;
                        if (!prod.is_zero()) xf[piece] = std::move(prod);
                    }
                    prods.col(col++) = ctx->to_vector(blocks, xf);
                }
            }
            r -= rank(prods);
        }
        if (r > 0) out = out + PoincarePoly::term(Integer(r), q);
    }
    return out;
}

namespace {

SheafData::GenExpr expr_from_coords(const SheafData& data, int facet, int q, const VecQ& coords) {
    SheafData::GenExpr e;
    const int td = data.fan->cone(facet).dim;
    e.comps.assign(data.gen_deg[static_cast<size_t>(facet)].size(), MultiPoly(td));
    auto basis = data.slice_basis(facet, q);
    for (size_t b = 0; b < basis.size(); ++b) {
        if (coords(static_cast<Eigen::Index>(b)) == 0) continue;
        e.comps[static_cast<size_t>(basis[b].first)].add_term(basis[b].second,
                                                              coords(static_cast<Eigen::Index>(b)));
    }
    return e;
}

struct BoundaryData {
    Subfan subfan;
    std::vector<int> pieces; // all maximal pieces of the boundary region
    std::vector<SectionSpace> sections; // per q
    std::vector<MatQ> prods;            // per q, in section coordinates
};

BoundaryData boundary_sections(const RealizedSheaf& E, int sigma) {
    const Fan& f = *E.fan;
    BoundaryData b;
    b.subfan = Subfan::closure(f, f.facets_of(sigma));
    for (int fct : f.facets_of(sigma)) {
        auto p = E.ref->pieces_of(fct);
        b.pieces.insert(b.pieces.end(), p.begin(), p.end());
    }
    b.sections.reserve(static_cast<size_t>(E.max_q) + 1);
    b.prods.resize(static_cast<size_t>(E.max_q) + 1);
    for (int q = 0; q <= E.max_q; ++q) {
        b.sections.push_back(formal_sections(E.data, b.subfan, q));
        if (q > 0)
            b.prods[static_cast<size_t>(q)] = m_products_in_sections(
                E.data, b.sections[static_cast<size_t>(q - 1)], b.sections[static_cast<size_t>(q)]);
        else
            b.prods[0] = MatQ(b.sections[0].dim(), 0);
    }
    return b;
}

// Function matrix of the boundary section basis over the boundary pieces.
MatQ section_function_matrix(const RealizedSheaf& E, const BoundaryData& b, int q) {
    auto blocks = E.ctx->blocks(b.pieces, q);
    const SectionSpace& sp = b.sections[static_cast<size_t>(q)];
    MatQ m(blocks.total, sp.dim());
    for (long c = 0; c < sp.dim(); ++c) {
        VecQ unit = VecQ::Zero(sp.dim());
        unit(c) = 1;
        m.col(c) = E.ctx->to_vector(blocks, E.realize_section(sp, unit));
    }
    return m;
}

void build_cone(RealizedSheaf& E, int sigma) {
    const Fan& f = *E.fan;
    const Cone& sc = f.cone(sigma);
    BoundaryData b = boundary_sections(E, sigma);

    // value-on-the-pulled-ray functional, for normalizing lifts (dim >= 2)
    const int rho_ray = E.ref->pulled_ray(sigma);
    const int rho_cone = f.cone_by_rays({rho_ray});
    std::vector<VecQ> rho_value(static_cast<size_t>(E.max_q) + 1);
    if (sc.dim >= 2) {
        for (int q = 1; q <= E.max_q; ++q) {
            const SectionSpace& sp = b.sections[static_cast<size_t>(q)];
            VecQ val = VecQ::Zero(sp.dim());
            // restrict through the first facet containing the pulled ray
            size_t which = 0;
            while (which < sp.max_cones.size() &&
                   !f.is_face_of(rho_cone, sp.max_cones[which]))
                ++which;
            assert(which < sp.max_cones.size());
            MatQ r = E.data.restriction_to_face(sp.max_cones[which], rho_cone, q);
            assert(r.rows() == 1);
            for (long c = 0; c < sp.dim(); ++c)
                val(c) = (r * sp.component(sp.basis.col(c), which))(0);
            rho_value[static_cast<size_t>(q)] = val;
        }
    }

    // canonical residue lifts, normalized to vanish on the pulled ray
    std::vector<int> degrees;
    std::vector<std::pair<int, VecQ>> lifts; // (q, coefficients in section space)
    for (int q = 0; q <= E.max_q; ++q) {
        const SectionSpace& sp = b.sections[static_cast<size_t>(q)];
        if (sp.dim() == 0) continue;
        const MatQ& pr = b.prods[static_cast<size_t>(q)];
        auto idxs = complement_indices(pr, MatQ::Identity(sp.dim(), sp.dim()));
        for (int idx : idxs) {
            VecQ c = VecQ::Zero(sp.dim());
            c(idx) = 1;
            if (q >= 1 && sc.dim >= 2) {
                const VecQ& val = rho_value[static_cast<size_t>(q)];
                Rational v = val.dot(c);
                if (v != 0) {
                    VecQ vp = pr.transpose() * val; // row of values over product columns
                    auto x = solve(MatQ(vp.transpose()), VecQ(VecQ::Constant(1, v)));
                    if (!x)
                        throw Error("cannot normalize a residue lift on the pulled ray");
                    c -= pr * *x;
                }
            }
            degrees.push_back(q);
            lifts.emplace_back(q, c);
        }
    }

    // install the generators: coning extensions of the lifts
    E.data.gen_deg[static_cast<size_t>(sigma)] = degrees;
    auto facets = f.facets_of(sigma);
    std::map<int, std::vector<SheafData::GenExpr>> exprs;
    for (int fct : facets) exprs[fct] = {};

    for (const auto& [q, c] : lifts) {
        const SectionSpace& sp = b.sections[static_cast<size_t>(q)];
        PwFunc lift_func = E.realize_section(sp, c);
        PwFunc g = extend_from_boundary(*E.ctx, sigma, lift_func);
        E.gens[static_cast<size_t>(sigma)].push_back({q, g});

        VecQ stacked = sp.basis * c;
        for (size_t w = 0; w < sp.max_cones.size(); ++w) {
            const int fct = sp.max_cones[w];
            VecQ comp = sp.component(stacked, w);
            // the coned extension must restrict to the lift on the whole
            // boundary; verified exactly, with an expression solve as fallback
            auto fct_blocks = E.stalk_blocks(fct, q);
            PwFunc restricted = E.ctx->restrict_func(g, fct_blocks.pieces);
            VecQ rv = E.ctx->to_vector(fct_blocks, restricted);
            if (rv != E.stalk_matrix(fct, q) * comp) {
                auto honest = solve(E.stalk_matrix(fct, q), rv);
                if (!honest)
                    throw Error("coned generator leaves the sheaf on a facet (cone " +
                                std::to_string(sigma) + ")");
                comp = *honest;
            }
            exprs[fct].push_back(expr_from_coords(E.data, fct, q, comp));
        }
    }
    for (int fct : facets) E.data.restr[{sigma, fct}] = std::move(exprs[fct]);

    // audits
    auto& au = E.audit[static_cast<size_t>(sigma)];
    for (int q = 0; q <= E.max_q; ++q) {
        if (rank(E.stalk_matrix(sigma, q)) != E.data.slice_dim(sigma, q)) au.pf = false;
    }
    au.residues = E.stalk_residues_oracle(sigma);
    for (int q = 0; q <= E.max_q; ++q)
        if (au.residues.coeff(q) != 0 && 2 * q >= sc.dim) au.vanishing = false;

    // (LME): boundary restrictions of the generators, expressed in the
    // boundary sections by honest function solves, must complete the
    // m-multiples to a basis degree by degree.
    for (int q = 0; q <= E.max_q; ++q) {
        const SectionSpace& sp = b.sections[static_cast<size_t>(q)];
        long residue_dim = sp.dim() - rank(b.prods[static_cast<size_t>(q)]);
        std::vector<const PwFunc*> gens_q;
        for (const auto& g : E.gens[static_cast<size_t>(sigma)])
            if (g.q == q) gens_q.push_back(&g.func);
        if (static_cast<long>(gens_q.size()) != residue_dim) { au.lme = false; continue; }
        if (gens_q.empty()) continue;
        MatQ fm = section_function_matrix(E, b, q);
        auto bblocks = E.ctx->blocks(b.pieces, q);
        MatQ cols = b.prods[static_cast<size_t>(q)];
        long span_rank = rank(cols);
        for (const PwFunc* g : gens_q) {
            PwFunc restricted = E.ctx->restrict_func(*g, b.pieces);
            auto coords = solve(fm, E.ctx->to_vector(bblocks, restricted));
            if (!coords) { au.lme = false; break; }
            MatQ next = hcat(cols, MatQ(*coords));
            long next_rank = rank(next);
            if (next_rank != span_rank + 1) { au.lme = false; break; }
            cols = std::move(next);
            span_rank = next_rank;
        }
    }
}

} // namespace

RealizedSheaf build_minimal_extension(const Fan& f, int degree_bound) {
    if (degree_bound < 2 * f.ambient_dim() + 2)
        throw DegreeBoundTooSmall("degree bound must be at least 2n + 2 = " +
                                  std::to_string(2 * f.ambient_dim() + 2));
    RealizedSheaf E;
    E.fan = &f;
    E.max_q = degree_bound / 2;
    E.ref = std::make_shared<Refinement>(simplicial_refinement(f));
    E.ctx = std::make_shared<PwContext>(f, *E.ref);
    E.gens.resize(f.cones().size());
    E.audit.resize(f.cones().size());
    E.data.fan = &f;
    E.data.max_q = E.max_q;
    E.data.gen_deg.assign(f.cones().size(), {});

    const int o = f.zero_cone_id();
    int o_piece = E.ref->pieces_of(o)[0];
    E.gens[static_cast<size_t>(o)].push_back({0, PwFunc{{o_piece, MultiPoly::constant(0, 1)}}});
    E.data.gen_deg[static_cast<size_t>(o)] = {0};
    E.audit[static_cast<size_t>(o)].residues = PoincarePoly::one();

    int maxdim = 0;
    for (const auto& c : f.cones()) maxdim = std::max(maxdim, c.dim);
    for (int d = 1; d <= maxdim; ++d)
        for (int sigma : f.cones_of_dim(d)) build_cone(E, sigma);

    E.normalized = E.gens[static_cast<size_t>(o)].size() == 1 &&
                   E.gens[static_cast<size_t>(o)][0].q == 0;
    return E;
}

RealizedSheaf build_minimal_extension(const Fan& f) {
    return build_minimal_extension(f, 2 * f.ambient_dim() + 2);
}

Refinement refinement_from(const Fan& base, Fan refined) {
    Refinement r;
    r.base = &base;
    r.refined = std::move(refined);
    if (r.refined.ambient_dim() != base.ambient_dim())
        throw NotARefinement("ambient dimensions differ");

    // containment of a refined cone in a base cone: every ray is a
    // nonnegative combination of the base cone's generators
    auto contained_in = [&](const Cone& rc, const Cone& bc) {
        for (int rid : rc.ray_ids) {
            const VecQ& x = r.refined.ray(rid);
            MatQ gens = base.generator_matrix(bc.id);
            if (gens.cols() == 0) return false;
            if (!nonneg_solution_exists(gens, x)) return false;
        }
        return true;
    };

    r.carrier.assign(r.refined.cones().size(), -1);
    for (const auto& rc : r.refined.cones()) {
        int best = -1;
        for (const auto& bc : base.cones()) {
            if (rc.is_zero()) { best = base.zero_cone_id(); break; }
            if (bc.dim < rc.dim) continue;
            if (!contained_in(rc, bc)) continue;
            if (best < 0 || bc.dim < base.cone(best).dim) best = bc.id;
        }
        if (best < 0)
            throw NotARefinement("refined cone " + std::to_string(rc.id) +
                                 " is not contained in any base cone");
        r.carrier[static_cast<size_t>(rc.id)] = best;
    }

    r.cells.assign(base.cones().size(), {});
    for (const auto& rc : r.refined.cones()) {
        int car = r.carrier[static_cast<size_t>(rc.id)];
        if (r.refined.cone(rc.id).dim == base.cone(car).dim)
            r.cells[static_cast<size_t>(car)].push_back(rc.ray_ids);
    }
    for (const auto& bc : base.cones()) {
        if (r.cells[static_cast<size_t>(bc.id)].empty())
            throw NotARefinement("base cone " + std::to_string(bc.id) + " is not subdivided");
        std::sort(r.cells[static_cast<size_t>(bc.id)].begin(),
                  r.cells[static_cast<size_t>(bc.id)].end());
    }
    return r;
}

RealizedSheaf direct_image(std::shared_ptr<Refinement> refinement, const RealizedSheaf& inner) {
    if (inner.fan != &refinement->refined)
        throw NotARefinement("the inner sheaf does not live on the refinement's fan");
    if (!inner.ref->is_identity())
        throw NotARefinement("the inner sheaf must be realized on its own fan");
    const Fan& base = *refinement->base;

    RealizedSheaf out;
    out.fan = &base;
    out.max_q = inner.max_q;
    out.ref = refinement;
    out.ctx = std::make_shared<PwContext>(base, *refinement);
    out.gens.resize(base.cones().size());
    out.audit.resize(base.cones().size());
    out.data.fan = &base;
    out.data.max_q = inner.max_q;
    out.data.gen_deg.assign(base.cones().size(), {});

    int maxdim = 0;
    for (const auto& c : base.cones()) maxdim = std::max(maxdim, c.dim);

    for (int d = 0; d <= maxdim; ++d) {
        for (int sigma : base.cones_of_dim(d)) {
            // stalk: sections of the inner sheaf over the cones refining sigma
            std::vector<int> region = refinement->pieces_of(sigma);
            Subfan inner_subfan = Subfan::closure(*inner.fan, region);
            std::vector<SectionSpace> spaces;
            for (int q = 0; q <= out.max_q; ++q)
                spaces.push_back(formal_sections(inner.data, inner_subfan, q));

            std::vector<int> degrees;
            long expected = 0;
            for (int q = 0; q <= out.max_q; ++q) {
                const SectionSpace& sp = spaces[static_cast<size_t>(q)];
                MatQ pr(sp.dim(), 0);
                if (q > 0)
                    pr = m_products_in_sections(inner.data, spaces[static_cast<size_t>(q - 1)],
                                                sp);
                auto idxs = complement_indices(pr, MatQ::Identity(sp.dim(), sp.dim()));
                for (int idx : idxs) {
                    degrees.push_back(q);
                    VecQ unit = VecQ::Zero(sp.dim());
                    unit(idx) = 1;
                    PwFunc func = inner.realize_section(sp, unit);
                    out.gens[static_cast<size_t>(sigma)].push_back({q, func});
                }
                expected = 0;
                for (int qg : degrees)
                    expected += monomial_count(base.cone(sigma).dim, q - qg);
                if (sp.dim() != expected)
                    throw NotFreeStalks("stalk of the direct image at cone " +
                                        std::to_string(sigma) +
                                        " fails the Hilbert freeness count in degree " +
                                        std::to_string(2 * q));
            }
            out.data.gen_deg[static_cast<size_t>(sigma)] = degrees;
            out.audit[static_cast<size_t>(sigma)].residues = out.data.stalk_poly(sigma);

            // restriction expressions onto the facets
            for (int fct : base.facets_of(sigma)) {
                std::vector<SheafData::GenExpr> exprs;
                for (const auto& g : out.gens[static_cast<size_t>(sigma)]) {
                    auto blocks = out.ctx->blocks(refinement->pieces_of(fct), g.q);
                    PwFunc restricted = out.ctx->restrict_func(g.func, blocks.pieces);
                    auto coords = solve(out.stalk_matrix(fct, g.q),
                                        out.ctx->to_vector(blocks, restricted));
                    if (!coords)
                        throw Error("direct image restriction failed to land in the stalk");
                    exprs.push_back(expr_from_coords(out.data, fct, g.q, *coords));
                }
                out.data.restr[{sigma, fct}] = std::move(exprs);
            }
        }
    }
    return out;
}

} // namespace ihfan
