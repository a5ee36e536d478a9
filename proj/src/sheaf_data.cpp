#include "ihfan/sheaf_data.hpp"

#include <algorithm>
#include <cassert>

namespace ihfan {

long SheafData::slice_dim(int sigma, int q) const {
    const int d = fan->cone(sigma).dim;
    long total = 0;
    for (int qi : gen_deg[static_cast<size_t>(sigma)]) total += monomial_count(d, q - qi);
    return total;
}

std::vector<std::pair<int, Expo>> SheafData::slice_basis(int sigma, int q) const {
    const int d = fan->cone(sigma).dim;
    std::vector<std::pair<int, Expo>> out;
    const auto& degs = gen_deg[static_cast<size_t>(sigma)];
    for (size_t i = 0; i < degs.size(); ++i) {
        for (const auto& m : monomials_of_degree(d, q - degs[i]))
            out.emplace_back(static_cast<int>(i), m);
    }
    return out;
}

MatQ SheafData::coord_subst(int sigma, int gamma) const {
    const Cone& s = fan->cone(sigma);
    const Cone& g = fan->cone(gamma);
    MatQ subst(s.dim, g.dim);
    for (int l = 0; l < g.dim; ++l) {
        auto coords = solve(s.span_basis.transpose(), VecQ(g.span_basis.row(l).transpose()));
        assert(coords);
        subst.col(l) = *coords;
    }
    return subst;
}

const MatQ& SheafData::restriction_facet(int sigma, int tau, int q) const {
    auto key = std::make_tuple(sigma, tau, q);
    auto it = slice_restr_cache_.find(key);
    if (it != slice_restr_cache_.end()) return it->second;

    const auto& exprs = restr.at({sigma, tau});
    const Cone& tc = fan->cone(tau);
    auto src = slice_basis(sigma, q);
    auto dst = slice_basis(tau, q);
    std::map<std::pair<int, Expo>, int> dst_index;
    for (size_t i = 0; i < dst.size(); ++i) dst_index[dst[i]] = static_cast<int>(i);

    // substitution of sigma coordinates restricted to the facet
    MatQ subst = coord_subst(sigma, tau);
    std::vector<MultiPoly> images;
    for (int k = 0; k < fan->cone(sigma).dim; ++k) {
        MultiPoly img(tc.dim);
        for (int l = 0; l < tc.dim; ++l) {
            if (subst(k, l) != 0) {
                Expo e(static_cast<size_t>(tc.dim), 0);
                e[static_cast<size_t>(l)] = 1;
                img.add_term(e, subst(k, l));
            }
        }
        images.push_back(std::move(img));
    }

    MatQ m = MatQ::Zero(static_cast<Eigen::Index>(dst.size()), static_cast<Eigen::Index>(src.size()));
    const auto& tdegs = gen_deg[static_cast<size_t>(tau)];
    for (size_t c = 0; c < src.size(); ++c) {
        const auto& [i, mono] = src[c];
        // (mono * g_i)|_tau = (mono o subst) * sum_j comps[j] g_j
        MultiPoly mono_poly(fan->cone(sigma).dim);
        mono_poly.add_term(mono, 1);
        MultiPoly restricted = images.empty() && fan->cone(sigma).dim == 0
                                   ? MultiPoly::constant(tc.dim, mono_poly.coeff(Expo{}))
                                   : mono_poly.substitute(images);
        const auto& expr = exprs[static_cast<size_t>(i)];
        for (size_t j = 0; j < expr.comps.size(); ++j) {
            if (expr.comps[j].is_zero()) continue;
            MultiPoly term = restricted * expr.comps[j];
            for (const auto& [e, coeff] : term.terms()) {
                auto idx = dst_index.find({static_cast<int>(j), e});
                assert(idx != dst_index.end());
                (void)tdegs;
                m(idx->second, static_cast<Eigen::Index>(c)) += coeff;
            }
        }
    }
    return slice_restr_cache_.emplace(key, std::move(m)).first->second;
}

MatQ SheafData::restriction_to_face(int sigma, int gamma, int q) const {
    if (sigma == gamma)
        return MatQ::Identity(slice_dim(sigma, q), slice_dim(sigma, q));
    // canonical descending facet chain: always step into the lowest-id facet
    // containing gamma
    int cur = sigma;
    MatQ acc = MatQ::Identity(slice_dim(sigma, q), slice_dim(sigma, q));
    while (cur != gamma) {
        int next = -1;
        for (int fct : fan->facets_of(cur)) {
            if (fan->is_face_of(gamma, fct)) { next = fct; break; }
        }
        assert(next >= 0);
        acc = restriction_facet(cur, next, q) * acc;
        cur = next;
    }
    return acc;
}

MatQ SheafData::mult_ambient(int sigma, int k, int q) const {
    const Cone& s = fan->cone(sigma);
    auto src = slice_basis(sigma, q);
    auto dst = slice_basis(sigma, q + 1);
    std::map<std::pair<int, Expo>, int> dst_index;
    for (size_t i = 0; i < dst.size(); ++i) dst_index[dst[i]] = static_cast<int>(i);

    MatQ m = MatQ::Zero(static_cast<Eigen::Index>(dst.size()), static_cast<Eigen::Index>(src.size()));
    // x_k restricted to V_sigma in span coordinates
    for (size_t c = 0; c < src.size(); ++c) {
        const auto& [i, mono] = src[c];
        for (int l = 0; l < s.dim; ++l) {
            const Rational coeff = s.span_basis(l, k);
            if (coeff == 0) continue;
            Expo e(mono);
            e[static_cast<size_t>(l)] += 1;
            auto idx = dst_index.find({i, e});
            assert(idx != dst_index.end());
            m(idx->second, static_cast<Eigen::Index>(c)) += coeff;
        }
    }
    return m;
}

PoincarePoly SheafData::stalk_poly(int sigma) const {
    PoincarePoly p;
    for (int qi : gen_deg[static_cast<size_t>(sigma)]) p = p + PoincarePoly::term(1, qi);
    return p;
}

VecQ SectionSpace::component(const VecQ& section, size_t which) const {
    const long len = offsets[which + 1] - offsets[which];
    VecQ out(len);
    for (long i = 0; i < len; ++i) out(i) = section(offsets[which] + i);
    return out;
}

namespace {

SectionSpace sections_impl(const SheafData& F, const Subfan& L, const Subfan* vanish_on, int q) {
    SectionSpace s;
    s.q = q;
    s.max_cones = L.max_cones();
    s.offsets.push_back(0);
    for (int m : s.max_cones) s.offsets.push_back(s.offsets.back() + F.slice_dim(m, q));
    const long total = s.offsets.back();

    std::vector<MatQ> rows;
    long nrows = 0;
    const Fan& fan = *F.fan;
    for (size_t i = 0; i < s.max_cones.size(); ++i) {
        for (size_t j = i + 1; j < s.max_cones.size(); ++j) {
            const Cone& ci = fan.cone(s.max_cones[i]);
            const Cone& cj = fan.cone(s.max_cones[j]);
            std::vector<int> common;
            std::set_intersection(ci.ray_ids.begin(), ci.ray_ids.end(), cj.ray_ids.begin(),
                                  cj.ray_ids.end(), std::back_inserter(common));
            int gamma = fan.cone_by_rays(common);
            assert(gamma >= 0);
            MatQ ri = F.restriction_to_face(s.max_cones[i], gamma, q);
            if (ri.rows() == 0) continue;
            MatQ rj = F.restriction_to_face(s.max_cones[j], gamma, q);
            MatQ block = MatQ::Zero(ri.rows(), total);
            block.middleCols(s.offsets[i], ri.cols()) = ri;
            block.middleCols(s.offsets[j], rj.cols()) -= rj;
            rows.push_back(std::move(block));
            nrows += rows.back().rows();
        }
        if (vanish_on) {
            for (int b : vanish_on->cone_ids) {
                if (!fan.is_face_of(b, s.max_cones[i])) continue;
                MatQ rb = F.restriction_to_face(s.max_cones[i], b, q);
                if (rb.rows() == 0) continue;
                MatQ block = MatQ::Zero(rb.rows(), total);
                block.middleCols(s.offsets[i], rb.cols()) = rb;
                rows.push_back(std::move(block));
                nrows += rb.rows();
            }
        }
    }
    MatQ sys(nrows, total);
    long at = 0;
    for (const auto& r : rows) {
        sys.middleRows(at, r.rows()) = r;
        at += r.rows();
    }
    s.basis = (nrows == 0) ? MatQ(MatQ::Identity(total, total)) : kernel_basis(sys);
    return s;
}

} // namespace

SectionSpace formal_sections(const SheafData& F, const Subfan& L, int q) {
    return sections_impl(F, L, nullptr, q);
}

SectionSpace formal_sections_relative(const SheafData& F, const Subfan& L,
                                      const Subfan& vanish_on, int q) {
    return sections_impl(F, L, &vanish_on, q);
}

MatQ m_products_in_sections(const SheafData& F, const SectionSpace& lower,
                            const SectionSpace& upper) {
    assert(upper.q == lower.q + 1);
    const int n = F.fan->ambient_dim();
    const long cols = static_cast<long>(n) * lower.dim();
    MatQ prods(upper.offsets.back(), cols);
    long col = 0;
    for (int k = 0; k < n; ++k) {
        std::vector<MatQ> mult;
        for (size_t w = 0; w < lower.max_cones.size(); ++w)
            mult.push_back(F.mult_ambient(lower.max_cones[w], k, lower.q));
        for (long c = 0; c < lower.dim(); ++c) {
            VecQ v(upper.offsets.back());
            for (size_t w = 0; w < lower.max_cones.size(); ++w) {
                VecQ comp = lower.component(lower.basis.col(c), w);
                VecQ up = mult[w] * comp;
                for (long i = 0; i < up.size(); ++i) v(upper.offsets[w] + i) = up(i);
            }
            prods.col(col++) = v;
        }
    }
    if (upper.dim() == 0) return MatQ(0, cols);
    auto sol = solve_many(upper.basis, prods);
    if (!sol) throw Error("m-multiple of a section failed to be a section (internal)");
    return *sol;
}

namespace {

PoincarePoly residues_impl(const SheafData& F, const Subfan& L, const Subfan* vanish_on, int D) {
    PoincarePoly out;
    SectionSpace prev;
    for (int q = 0; 2 * q <= D; ++q) {
        SectionSpace cur = vanish_on ? formal_sections_relative(F, L, *vanish_on, q)
                                     : formal_sections(F, L, q);
        long r = cur.dim();
        if (q > 0 && cur.dim() > 0) {
            MatQ prods = m_products_in_sections(F, prev, cur);
            r = cur.dim() - rank(prods);
        }
        if (r > 0) out = out + PoincarePoly::term(Integer(r), q);
        prev = std::move(cur);
    }
    return out;
}

} // namespace

PoincarePoly formal_section_residues(const SheafData& F, const Subfan& L, int D) {
    return residues_impl(F, L, nullptr, D);
}

PoincarePoly formal_section_residues_relative(const SheafData& F, const Subfan& L,
                                              const Subfan& vanish_on, int D) {
    return residues_impl(F, L, &vanish_on, D);
}

SheafData shift(const SheafData& F, int l) {
    assert(l % 2 == 0 && l >= 0);
    SheafData out = F;
    for (auto& degs : out.gen_deg)
        for (int& d : degs) d += l / 2;
    return out;
}

SheafData direct_sum(const SheafData& a, const SheafData& b) {
    assert(a.fan == b.fan);
    SheafData out;
    out.fan = a.fan;
    out.max_q = std::min(a.max_q, b.max_q);
    out.gen_deg.resize(a.gen_deg.size());
    for (size_t c = 0; c < a.gen_deg.size(); ++c) {
        out.gen_deg[c] = a.gen_deg[c];
        out.gen_deg[c].insert(out.gen_deg[c].end(), b.gen_deg[c].begin(), b.gen_deg[c].end());
    }
    for (const auto& sigma : a.fan->cones()) {
        for (int tau : a.fan->facets_of(sigma.id)) {
            const auto& ea = a.restr.at({sigma.id, tau});
            const auto& eb = b.restr.at({sigma.id, tau});
            const size_t na = a.gen_deg[static_cast<size_t>(tau)].size();
            const size_t nb = b.gen_deg[static_cast<size_t>(tau)].size();
            const int td = a.fan->cone(tau).dim;
            std::vector<SheafData::GenExpr> combined;
            for (const auto& e : ea) {
                SheafData::GenExpr ge;
                ge.comps = e.comps;
                ge.comps.resize(na + nb, MultiPoly(td));
                combined.push_back(std::move(ge));
            }
            for (const auto& e : eb) {
                SheafData::GenExpr ge;
                ge.comps.assign(na, MultiPoly(td));
                ge.comps.insert(ge.comps.end(), e.comps.begin(), e.comps.end());
                combined.push_back(std::move(ge));
            }
            out.restr[{sigma.id, tau}] = std::move(combined);
        }
    }
    return out;
}

SheafData build_simple_sheaf(const Fan& f, int tau, int degree_bound) {
    SheafData F;
    F.fan = &f;
    F.max_q = degree_bound / 2;
    F.gen_deg.assign(f.cones().size(), {});
    F.gen_deg[static_cast<size_t>(tau)] = {0};

    // zero restrictions below and out of the seed
    const int seed_dim = f.cone(tau).dim;
    for (const auto& c : f.cones()) {
        if (c.dim > seed_dim) continue;
        for (int fct : f.facets_of(c.id)) {
            std::vector<SheafData::GenExpr> exprs;
            for (size_t i = 0; i < F.gen_deg[static_cast<size_t>(c.id)].size(); ++i) {
                SheafData::GenExpr e;
                e.comps.assign(F.gen_deg[static_cast<size_t>(fct)].size(),
                               MultiPoly(f.cone(fct).dim));
                exprs.push_back(std::move(e));
            }
            F.restr[{c.id, fct}] = std::move(exprs);
        }
    }

    // upward induction: generators are canonical lifts of the boundary residues
    int maxdim = 0;
    for (const auto& c : f.cones()) maxdim = std::max(maxdim, c.dim);
    for (int d = seed_dim + 1; d <= maxdim; ++d) {
        for (int sigma : f.cones_of_dim(d)) {
            Subfan boundary = Subfan::closure(f, f.facets_of(sigma));
            std::vector<int> gen_degrees;
            std::vector<std::pair<int, VecQ>> lifts; // (q, section vector)
            std::vector<SectionSpace> spaces;
            for (int q = 0; q <= F.max_q; ++q)
                spaces.push_back(formal_sections(F, boundary, q));
            for (int q = 0; q <= F.max_q; ++q) {
                const SectionSpace& cur = spaces[static_cast<size_t>(q)];
                if (cur.dim() == 0) continue;
                MatQ prods(cur.dim(), 0);
                if (q > 0)
                    prods = m_products_in_sections(F, spaces[static_cast<size_t>(q - 1)], cur);
                auto lift_idx =
                    complement_indices(prods, MatQ::Identity(cur.dim(), cur.dim()));
                for (int idx : lift_idx) {
                    gen_degrees.push_back(q);
                    lifts.emplace_back(q, VecQ(cur.basis.col(idx)));
                }
            }
            F.gen_deg[static_cast<size_t>(sigma)] = gen_degrees;

            // restriction of generator i to each facet from its lift tuple
            auto facets = f.facets_of(sigma);
            for (int fct : facets) {
                std::vector<SheafData::GenExpr> exprs;
                for (size_t i = 0; i < lifts.size(); ++i) {
                    const auto& [q, vec] = lifts[i];
                    const SectionSpace& sp = spaces[static_cast<size_t>(q)];
                    SheafData::GenExpr e;
                    const int td = f.cone(fct).dim;
                    e.comps.assign(F.gen_deg[static_cast<size_t>(fct)].size(), MultiPoly(td));
                    // locate the facet among the boundary's max cones
                    auto pos = std::find(sp.max_cones.begin(), sp.max_cones.end(), fct);
                    assert(pos != sp.max_cones.end());
                    VecQ comp = sp.component(vec, static_cast<size_t>(pos - sp.max_cones.begin()));
                    auto basis = F.slice_basis(fct, q);
                    for (size_t b = 0; b < basis.size(); ++b) {
                        if (comp(static_cast<Eigen::Index>(b)) == 0) continue;
                        e.comps[static_cast<size_t>(basis[b].first)].add_term(
                            basis[b].second, comp(static_cast<Eigen::Index>(b)));
                    }
                    exprs.push_back(std::move(e));
                }
                F.restr[{sigma, fct}] = std::move(exprs);
            }
        }
    }
    return F;
}

} // namespace ihfan
