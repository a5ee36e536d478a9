#include "ihfan/decompose.hpp"

#include <algorithm>
#include <cassert>

namespace ihfan {

namespace {

// stalk slice mapped into boundary-section coordinates (one column per
// stalk basis element); empty space handled by the caller
MatQ stalk_to_sections(const SheafData& F, int sigma, const SectionSpace& sp, int q) {
    const Fan& fan = *F.fan;
    const long total = sp.offsets.back();
    MatQ stacked(total, F.slice_dim(sigma, q));
    stacked.setZero();
    for (size_t w = 0; w < sp.max_cones.size(); ++w) {
        MatQ r = F.restriction_to_face(sigma, sp.max_cones[w], q);
        stacked.middleRows(sp.offsets[w], r.rows()) = r;
    }
    (void)fan;
    if (sp.dim() == 0) return MatQ(0, F.slice_dim(sigma, q));
    auto sol = solve_many(sp.basis, stacked);
    if (!sol) throw Error("stalk restriction is not a boundary section (internal)");
    return *sol;
}

} // namespace

bool is_flabby(const SheafData& F, int degree_bound) {
    const Fan& fan = *F.fan;
    for (const auto& c : fan.cones()) {
        if (c.dim == 0) continue;
        Subfan boundary = Subfan::closure(fan, fan.facets_of(c.id));
        for (int q = 0; 2 * q <= degree_bound; ++q) {
            SectionSpace sp = formal_sections(F, boundary, q);
            if (sp.dim() == 0) continue;
            MatQ m = stalk_to_sections(F, c.id, sp, q);
            if (rank(m) != sp.dim()) return false;
        }
    }
    return true;
}

DecompositionResult decompose_semisimple(const SheafData& F, int degree_bound) {
    const Fan& fan = *F.fan;
    if (!is_flabby(F, degree_bound))
        throw NotFlabby("the sheaf is not flabby; decomposition does not apply");

    DecompositionResult out;
    const int max_q = degree_bound / 2;

    int maxdim = 0;
    for (const auto& c : fan.cones()) maxdim = std::max(maxdim, c.dim);

    for (int d = 0; d <= maxdim; ++d) {
        for (int tau : fan.cones_of_dim(d)) {
            const auto& degs = F.gen_deg[static_cast<size_t>(tau)];
            if (degs.empty()) continue;

            if (d == 0) {
                // no boundary: every generator of the stalk survives
                for (int q = 0; q <= max_q; ++q) {
                    int mult = static_cast<int>(std::count(degs.begin(), degs.end(), q));
                    if (mult > 0) out.summands.push_back({tau, 2 * q, mult});
                }
                continue;
            }

            Subfan boundary = Subfan::closure(fan, fan.facets_of(tau));
            SectionSpace prev;
            for (int q = 0; q <= max_q; ++q) {
                SectionSpace sp = formal_sections(F, boundary, q);
                const int gens_q = static_cast<int>(std::count(degs.begin(), degs.end(), q));
                if (gens_q > 0) {
                    // columns: residue classes of the degree-q generators
                    MatQ all = stalk_to_sections(F, tau, sp, q);
                    // generator columns sit at the monomial-1 positions
                    auto basis = F.slice_basis(tau, q);
                    std::vector<long> cols;
                    const Expo unit(static_cast<size_t>(fan.cone(tau).dim), 0);
                    for (size_t b = 0; b < basis.size(); ++b) {
                        if (degs[static_cast<size_t>(basis[b].first)] == q &&
                            basis[b].second == unit)
                            cols.push_back(static_cast<long>(b));
                    }
                    assert(static_cast<int>(cols.size()) == gens_q);
                    MatQ prods = (q > 0 && sp.dim() > 0)
                                     ? m_products_in_sections(F, prev, sp)
                                     : MatQ(sp.dim(), 0);
                    MatQ gen_cols(sp.dim(), static_cast<Eigen::Index>(cols.size()));
                    for (size_t i = 0; i < cols.size(); ++i)
                        gen_cols.col(static_cast<Eigen::Index>(i)) = all.col(cols[i]);
                    // kernel of the residue map = gens_q - added rank
                    long added = rank(hcat(prods, gen_cols)) - rank(prods);
                    int mult = gens_q - static_cast<int>(added);
                    if (mult > 0) out.summands.push_back({tau, 2 * q, mult});
                }
                prev = std::move(sp);
            }
        }
    }

    // verification: summand stalk polynomials reproduce F's at every cone
    std::map<int, SheafData> simples;
    for (const auto& s : out.summands)
        if (!simples.count(s.tau)) simples.emplace(s.tau, build_simple_sheaf(fan, s.tau, degree_bound));

    out.stalk_sums_match = true;
    for (const auto& c : fan.cones()) {
        PoincarePoly sum;
        for (const auto& s : out.summands) {
            PoincarePoly piece = simples.at(s.tau).stalk_poly(c.id);
            sum = sum + PoincarePoly::term(Integer(s.multiplicity), s.shift / 2) * piece;
        }
        PoincarePoly expect = F.stalk_poly(c.id);
        // compare within the window where shifted summands are known
        if (sum.truncate_below(degree_bound + 1) != expect.truncate_below(degree_bound + 1)) {
            out.stalk_sums_match = false;
            out.mismatch_at = expect;
            break;
        }
    }
    return out;
}

} // namespace ihfan
