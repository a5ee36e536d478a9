#include "ihfan/pw.hpp"

#include <algorithm>
#include <cassert>

namespace ihfan {

PwContext::PwContext(const Fan& base, const Refinement& ref) : base_(&base), ref_(&ref) {
    assert(ref.base == &base);
}

const std::vector<MultiPoly>& PwContext::ambient_images(int piece) const {
    auto it = ambient_images_.find(piece);
    if (it != ambient_images_.end()) return it->second;
    const Cone& c = refined().cone(piece);
    const int n = base_->ambient_dim();
    const int d = static_cast<int>(c.ray_ids.size());
    std::vector<MultiPoly> images;
    for (int k = 0; k < n; ++k) {
        MultiPoly img(d);
        for (int a = 0; a < d; ++a) {
            Expo e(static_cast<size_t>(d), 0);
            e[static_cast<size_t>(a)] = 1;
            const Rational coeff = refined().ray(c.ray_ids[static_cast<size_t>(a)])(k);
            if (coeff != 0) img.add_term(e, coeff);
        }
        images.push_back(std::move(img));
    }
    return ambient_images_.emplace(piece, std::move(images)).first->second;
}

const std::vector<MultiPoly>& PwContext::cone_images(int base_cone, int piece) const {
    auto key = std::make_pair(base_cone, piece);
    auto it = cone_images_.find(key);
    if (it != cone_images_.end()) return it->second;
    const Cone& bc = base_->cone(base_cone);
    const Cone& pc = refined().cone(piece);
    const int d = static_cast<int>(pc.ray_ids.size());
    // coordinates of the piece rays in the base cone's span basis
    std::vector<MultiPoly> images(static_cast<size_t>(bc.dim), MultiPoly(d));
    for (int a = 0; a < d; ++a) {
        auto coords = solve(bc.span_basis.transpose(), refined().ray(pc.ray_ids[static_cast<size_t>(a)]));
        assert(coords); // piece lies inside the base cone
        for (int i = 0; i < bc.dim; ++i) {
            if ((*coords)(i) != 0) {
                Expo e(static_cast<size_t>(d), 0);
                e[static_cast<size_t>(a)] = 1;
                images[static_cast<size_t>(i)].add_term(e, (*coords)(i));
            }
        }
    }
    return cone_images_.emplace(key, std::move(images)).first->second;
}

MultiPoly PwContext::ambient_to_local(int piece, const MultiPoly& ambient) const {
    return ambient.substitute(ambient_images(piece));
}

const MultiPoly& PwContext::ambient_coord(int piece, int k) const {
    return ambient_images(piece)[static_cast<size_t>(k)];
}

MultiPoly PwContext::cone_poly_to_local(int base_cone, int piece, const MultiPoly& p) const {
    const auto& imgs = cone_images(base_cone, piece);
    if (imgs.empty()) {
        // zero-dimensional base cone: constants only
        return MultiPoly::constant(static_cast<int>(refined().cone(piece).ray_ids.size()),
                                   p.coeff(Expo{}));
    }
    return p.substitute(imgs);
}

MultiPoly PwContext::restrict_piece(int from_piece, int to_piece, const MultiPoly& f) const {
    const Cone& from = refined().cone(from_piece);
    const Cone& to = refined().cone(to_piece);
    std::vector<int> keep;
    for (int r : to.ray_ids) {
        auto it = std::lower_bound(from.ray_ids.begin(), from.ray_ids.end(), r);
        assert(it != from.ray_ids.end() && *it == r);
        keep.push_back(static_cast<int>(it - from.ray_ids.begin()));
    }
    return f.restrict_to(keep);
}

PwFunc PwContext::restrict_func(const PwFunc& f, const std::vector<int>& target_pieces) const {
    // absent pieces are zero, so an uncovered target restricts to zero
    PwFunc out;
    for (int tp : target_pieces) {
        const Cone& tc = refined().cone(tp);
        for (const auto& [sp, poly] : f) {
            const Cone& sc = refined().cone(sp);
            if (std::includes(sc.ray_ids.begin(), sc.ray_ids.end(), tc.ray_ids.begin(),
                              tc.ray_ids.end())) {
                MultiPoly r = restrict_piece(sp, tp, poly);
                if (!r.is_zero()) out[tp] = std::move(r);
                break;
            }
        }
    }
    return out;
}

PwContext::Blocks PwContext::blocks(const std::vector<int>& pieces, int q) const {
    Blocks b;
    b.pieces = pieces;
    b.q = q;
    b.offsets.push_back(0);
    for (int p : pieces) {
        const int d = static_cast<int>(refined().cone(p).ray_ids.size());
        b.offsets.push_back(b.offsets.back() + monomial_count(d, q));
    }
    b.total = b.offsets.back();
    return b;
}

VecQ PwContext::to_vector(const Blocks& b, const PwFunc& f) const {
    VecQ v = VecQ::Zero(b.total);
    for (size_t i = 0; i < b.pieces.size(); ++i) {
        auto it = f.find(b.pieces[i]);
        if (it == f.end()) continue;
        VecQ c = it->second.coeff_vector(b.q);
        for (Eigen::Index j = 0; j < c.size(); ++j) v(b.offsets[i] + j) = c(j);
    }
    return v;
}

PwFunc PwContext::from_vector(const Blocks& b, const VecQ& v) const {
    PwFunc f;
    for (size_t i = 0; i < b.pieces.size(); ++i) {
        const int d = static_cast<int>(refined().cone(b.pieces[i]).ray_ids.size());
        const long len = b.offsets[i + 1] - b.offsets[i];
        VecQ c(len);
        for (long j = 0; j < len; ++j) c(j) = v(b.offsets[i] + j);
        MultiPoly p = MultiPoly::from_coeff_vector(d, b.q, c);
        if (!p.is_zero()) f[b.pieces[i]] = std::move(p);
    }
    return f;
}

namespace {

// 0/1 matrix taking degree-q coefficients on a piece to those on a face
MatQ piece_extraction(const PwContext& ctx, int from_piece, int to_piece, int q) {
    const Cone& from = ctx.refined().cone(from_piece);
    const Cone& to = ctx.refined().cone(to_piece);
    const int df = static_cast<int>(from.ray_ids.size());
    const int dt = static_cast<int>(to.ray_ids.size());
    auto from_mons = monomials_of_degree(df, q);
    auto to_mons = monomials_of_degree(dt, q);
    std::map<Expo, int> to_index;
    for (size_t i = 0; i < to_mons.size(); ++i) to_index[to_mons[i]] = static_cast<int>(i);

    std::vector<int> pos; // position of each `to` ray inside `from` rays
    for (int r : to.ray_ids) {
        auto it = std::lower_bound(from.ray_ids.begin(), from.ray_ids.end(), r);
        assert(it != from.ray_ids.end() && *it == r);
        pos.push_back(static_cast<int>(it - from.ray_ids.begin()));
    }

    MatQ m = MatQ::Zero(static_cast<Eigen::Index>(to_mons.size()),
                        static_cast<Eigen::Index>(from_mons.size()));
    for (size_t j = 0; j < from_mons.size(); ++j) {
        const Expo& e = from_mons[j];
        bool survives = true;
        Expo ne(static_cast<size_t>(dt), 0);
        std::vector<bool> used(static_cast<size_t>(df), false);
        for (size_t a = 0; a < pos.size(); ++a) {
            ne[a] = e[static_cast<size_t>(pos[a])];
            used[static_cast<size_t>(pos[a])] = true;
        }
        for (int i = 0; i < df; ++i)
            if (!used[static_cast<size_t>(i)] && e[static_cast<size_t>(i)] != 0) survives = false;
        if (survives) m(to_index.at(ne), static_cast<Eigen::Index>(j)) = 1;
    }
    return m;
}

} // namespace

MatQ PwContext::compatibility_rows(const Blocks& b) const {
    std::vector<MatQ> rows;
    long nrows = 0;
    for (size_t i = 0; i < b.pieces.size(); ++i) {
        for (size_t j = i + 1; j < b.pieces.size(); ++j) {
            const Cone& ci = refined().cone(b.pieces[i]);
            const Cone& cj = refined().cone(b.pieces[j]);
            std::vector<int> common;
            std::set_intersection(ci.ray_ids.begin(), ci.ray_ids.end(), cj.ray_ids.begin(),
                                  cj.ray_ids.end(), std::back_inserter(common));
            int shared = refined().cone_by_rays(common);
            assert(shared >= 0);
            MatQ ei = piece_extraction(*this, b.pieces[i], shared, b.q);
            if (ei.rows() == 0) continue;
            MatQ ej = piece_extraction(*this, b.pieces[j], shared, b.q);
            MatQ block = MatQ::Zero(ei.rows(), b.total);
            block.middleCols(b.offsets[i], ei.cols()) = ei;
            block.middleCols(b.offsets[j], ej.cols()) -= ej;
            rows.push_back(std::move(block));
            nrows += ei.rows();
        }
    }
    MatQ m(nrows, b.total);
    long at = 0;
    for (const auto& r : rows) {
        m.middleRows(at, r.rows()) = r;
        at += r.rows();
    }
    return m;
}

MatQ PwContext::extraction_matrix(const Blocks& from, const Blocks& to) const {
    assert(from.q == to.q);
    MatQ m = MatQ::Zero(to.total, from.total);
    for (size_t t = 0; t < to.pieces.size(); ++t) {
        const Cone& tc = refined().cone(to.pieces[t]);
        bool found = false;
        for (size_t s = 0; s < from.pieces.size(); ++s) {
            const Cone& sc = refined().cone(from.pieces[s]);
            if (!std::includes(sc.ray_ids.begin(), sc.ray_ids.end(), tc.ray_ids.begin(),
                               tc.ray_ids.end()))
                continue;
            MatQ e = piece_extraction(*this, from.pieces[s], to.pieces[t], from.q);
            m.block(to.offsets[t], from.offsets[s], e.rows(), e.cols()) = e;
            found = true;
            break;
        }
        if (!found) throw Error("extraction_matrix: target piece not covered");
    }
    return m;
}

MatQ pw_kernel_basis(const PwContext& ctx, const PwContext::Blocks& b) {
    MatQ rows = ctx.compatibility_rows(b);
    if (rows.rows() == 0) return MatQ::Identity(b.total, b.total);
    return kernel_basis(rows);
}

long pw_poly_dim(const Fan& simplicial, const std::vector<int>& max_cones, int q) {
    if (!is_simplicial_fan(simplicial)) throw Error("pw_poly_dim expects a simplicial fan");
    Refinement r = simplicial_refinement(simplicial);
    PwContext ctx(simplicial, r);
    std::vector<int> pieces;
    for (int c : max_cones) {
        auto p = r.pieces_of(c);
        pieces.insert(pieces.end(), p.begin(), p.end());
    }
    auto b = ctx.blocks(pieces, q);
    return pw_kernel_basis(ctx, b).cols();
}

PwFunc extend_from_boundary(const PwContext& ctx, int sigma, const PwFunc& s) {
    const Fan& base = ctx.base();
    const Cone& sc = base.cone(sigma);
    if (sc.dim < 1) throw ZeroCone("extend_from_boundary needs a nonzero cone");
    const int rho = ctx.refinement().pulled_ray(sigma);

    PwFunc out;
    for (int piece : ctx.refinement().pieces_of(sigma)) {
        const Cone& pc = ctx.refined().cone(piece);
        // base cell: the piece with the pulled ray removed
        std::vector<int> base_rays;
        int rho_pos = -1;
        for (size_t a = 0; a < pc.ray_ids.size(); ++a) {
            if (pc.ray_ids[a] == rho) rho_pos = static_cast<int>(a);
            else base_rays.push_back(pc.ray_ids[a]);
        }
        assert(rho_pos >= 0);
        int base_cell = ctx.refined().cone_by_rays(base_rays);
        assert(base_cell >= 0);

        auto it = s.find(base_cell);
        MultiPoly src = (it != s.end())
                            ? it->second
                            : MultiPoly(static_cast<int>(base_rays.size()));
        // re-embed: base-cell variable a maps past the rho position
        std::vector<int> var_map;
        for (size_t a = 0; a < pc.ray_ids.size(); ++a) {
            if (static_cast<int>(a) == rho_pos) continue;
            var_map.push_back(static_cast<int>(a));
        }
        MultiPoly ext = src.embed(static_cast<int>(pc.ray_ids.size()), var_map);
        if (!ext.is_zero()) out[piece] = std::move(ext);
    }
    return out;
}

} // namespace ihfan
