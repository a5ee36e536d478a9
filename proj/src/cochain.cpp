#include "ihfan/cochain.hpp"

#include <algorithm>
#include <cassert>

namespace ihfan {

bool CochainComplex::is_complex() const {
    for (size_t i = 0; i + 1 < deltas.size(); ++i) {
        if (deltas[i].cols() == 0 || deltas[i + 1].rows() == 0) continue;
        MatQ comp = deltas[i + 1] * deltas[i];
        if (!comp.isZero()) return false;
    }
    return true;
}

std::vector<long> CochainComplex::cohomology() const {
    std::vector<long> h;
    std::vector<long> ranks;
    for (const auto& d : deltas) ranks.push_back(rank(d));
    for (size_t i = 0; i < dims.size(); ++i) {
        long incoming = (i == 0) ? 0 : ranks[i - 1];
        long outgoing = (i < deltas.size()) ? ranks[i] : 0;
        h.push_back(dims[i] - outgoing - incoming);
    }
    return h;
}

bool CochainComplex::exact() const {
    for (long x : cohomology())
        if (x != 0) return false;
    return true;
}

std::vector<bool> boundary_mask(const Fan& f) {
    std::vector<bool> mask(f.cones().size(), false);
    if (is_complete(f)) return mask;
    Subfan b = boundary_subfan(f);
    for (int id : b.cone_ids) mask[static_cast<size_t>(id)] = true;
    return mask;
}

CochainComplex cochain_complex(const SheafData& F, CochainVariant v, int q,
                               const OrientationData& ori) {
    const Fan& fan = *F.fan;
    const int n = fan.ambient_dim();

    std::vector<bool> exclude(fan.cones().size(), false);
    if (v != CochainVariant::absolute) {
        for (int m : fan.max_cone_ids())
            if (fan.cone(m).dim != n)
                throw NotPure("relative cochain complexes need a purely n-dimensional fan");
        exclude = boundary_mask(fan);
    }

    // modules C^k = cones of dimension n - k, k = 0..n
    std::vector<std::vector<int>> level(static_cast<size_t>(n) + 1);
    std::vector<std::vector<long>> offsets(static_cast<size_t>(n) + 1);
    std::vector<long> level_dims(static_cast<size_t>(n) + 1, 0);
    for (int k = 0; k <= n; ++k) {
        for (int id : fan.cones_of_dim(n - k)) {
            if (exclude[static_cast<size_t>(id)]) continue;
            offsets[static_cast<size_t>(k)].push_back(level_dims[static_cast<size_t>(k)]);
            level[static_cast<size_t>(k)].push_back(id);
            level_dims[static_cast<size_t>(k)] += F.slice_dim(id, q);
        }
    }

    CochainComplex c;
    c.q = q;
    c.augmented = (v == CochainVariant::augmented_relative);

    SectionSpace global;
    if (c.augmented) {
        global = formal_sections(F, Subfan::whole(fan), q);
        c.dims.push_back(global.dim());
    }
    for (int k = 0; k <= n; ++k) c.dims.push_back(level_dims[static_cast<size_t>(k)]);

    if (c.augmented) {
        // sections -> C^0: a pure fan's maximal cones are exactly its n-cones
        assert(global.max_cones == level[0]);
        MatQ m(level_dims[0], global.dim());
        for (long col = 0; col < global.dim(); ++col) m.col(col) = global.basis.col(col);
        c.deltas.push_back(std::move(m));
    }

    for (int k = 0; k < n; ++k) {
        MatQ d = MatQ::Zero(level_dims[static_cast<size_t>(k + 1)],
                            level_dims[static_cast<size_t>(k)]);
        for (size_t si = 0; si < level[static_cast<size_t>(k)].size(); ++si) {
            const int sigma = level[static_cast<size_t>(k)][si];
            for (size_t ti = 0; ti < level[static_cast<size_t>(k + 1)].size(); ++ti) {
                const int tau = level[static_cast<size_t>(k + 1)][ti];
                if (!fan.is_face_of(tau, sigma)) continue;
                const MatQ& r = F.restriction_facet(sigma, tau, q);
                if (r.rows() == 0 || r.cols() == 0) continue;
                d.block(offsets[static_cast<size_t>(k + 1)][ti],
                        offsets[static_cast<size_t>(k)][si], r.rows(), r.cols()) +=
                    Rational(ori.sign(sigma, tau)) * r;
            }
        }
        c.deltas.push_back(std::move(d));
    }
    return c;
}

bool augmented_exact_through(const SheafData& F, int D, const OrientationData& ori) {
    for (int q = 0; 2 * q <= D; ++q) {
        CochainComplex c = cochain_complex(F, CochainVariant::augmented_relative, q, ori);
        if (!c.is_complex()) throw Error("coboundary fails to square to zero (internal)");
        if (!c.exact()) return false;
    }
    return true;
}

QCVerdict quasi_convex(const SheafData& F, int D, const OrientationData& ori) {
    const Fan& fan = *F.fan;
    if (is_complete(fan)) return QCVerdict::yes_syntactic;
    const auto& maxs = fan.max_cone_ids();
    if (maxs.size() == 1 && fan.cone(maxs[0]).dim == fan.ambient_dim())
        return QCVerdict::yes_syntactic;
    return augmented_exact_through(F, D, ori) ? QCVerdict::yes_oracle : QCVerdict::no_oracle;
}

namespace {

// dims(q) must equal sum_j residues(j) * monomial_count(n, q - j)
bool hilbert_match(const std::vector<long>& dims, const PoincarePoly& residues, int n) {
    for (size_t q = 0; q < dims.size(); ++q) {
        Integer expect = 0;
        for (int j = 0; j <= static_cast<int>(q); ++j)
            expect += residues.coeff(j) * Integer(monomial_count(n, static_cast<int>(q) - j));
        if (Integer(dims[q]) != expect) return false;
    }
    return true;
}

} // namespace

FreenessReport freeness_hilbert_check(const SheafData& F, int D) {
    const Fan& fan = *F.fan;
    const int n = fan.ambient_dim();
    FreenessReport rep;

    Subfan whole = Subfan::whole(fan);
    auto mask = boundary_mask(fan);
    std::vector<int> bd;
    for (size_t i = 0; i < mask.size(); ++i)
        if (mask[i]) bd.push_back(static_cast<int>(i));
    const bool has_boundary = !bd.empty();
    Subfan vanish = has_boundary ? Subfan::closure(fan, bd) : Subfan{};

    SectionSpace prev_abs, prev_rel;
    for (int q = 0; 2 * q <= D; ++q) {
        SectionSpace abs = formal_sections(F, whole, q);
        SectionSpace rel = has_boundary ? formal_sections_relative(F, whole, vanish, q) : abs;
        rep.abs_dims.push_back(abs.dim());
        rep.rel_dims.push_back(rel.dim());

        long r_abs = abs.dim(), r_rel = rel.dim();
        if (q > 0) {
            if (abs.dim() > 0) r_abs -= rank(m_products_in_sections(F, prev_abs, abs));
            if (rel.dim() > 0) r_rel -= rank(m_products_in_sections(F, prev_rel, rel));
        }
        if (r_abs > 0) rep.abs_residues = rep.abs_residues + PoincarePoly::term(Integer(r_abs), q);
        if (r_rel > 0) rep.rel_residues = rep.rel_residues + PoincarePoly::term(Integer(r_rel), q);
        prev_abs = std::move(abs);
        prev_rel = std::move(rel);
    }
    rep.absolute = hilbert_match(rep.abs_dims, rep.abs_residues, n);
    rep.relative = hilbert_match(rep.rel_dims, rep.rel_residues, n);
    return rep;
}

PoincarePoly oracle_global_poly(const SheafData& F, int D, bool relative) {
    const Fan& fan = *F.fan;
    Subfan whole = Subfan::whole(fan);
    if (!relative) return formal_section_residues(F, whole, D);
    auto mask = boundary_mask(fan);
    std::vector<int> bd;
    for (size_t i = 0; i < mask.size(); ++i)
        if (mask[i]) bd.push_back(static_cast<int>(i));
    if (bd.empty()) return formal_section_residues(F, whole, D);
    return formal_section_residues_relative(F, whole, Subfan::closure(fan, bd), D);
}

OracleDuality oracle_duality(const SheafData& F, int D) {
    OracleDuality d;
    d.absolute = oracle_global_poly(F, D, false);
    d.relative = oracle_global_poly(F, D, true);
    d.holds = (d.relative == d.absolute.duality_transform(F.fan->ambient_dim()));
    return d;
}

} // namespace ihfan
