#include "ihfan/refinement.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace ihfan {

namespace {

// pulling triangulation of cone `id`, memoized over the fan's cone ids
const std::vector<std::vector<int>>& tri(const Fan& f, int id,
                                         std::vector<std::vector<std::vector<int>>>& memo,
                                         std::vector<bool>& done) {
    if (done[static_cast<size_t>(id)]) return memo[static_cast<size_t>(id)];
    const Cone& c = f.cone(id);
    std::vector<std::vector<int>> out;
    if (is_simplicial(f, id)) {
        out.push_back(c.ray_ids);
    } else {
        const int rho = c.ray_ids.front(); // lowest-index ray
        for (int g : f.facets_of(id)) {
            const auto& grays = f.cone(g).ray_ids;
            if (std::binary_search(grays.begin(), grays.end(), rho)) continue;
            for (const auto& cell : tri(f, g, memo, done)) {
                std::vector<int> joined(cell);
                joined.push_back(rho);
                std::sort(joined.begin(), joined.end());
                out.push_back(std::move(joined));
            }
        }
        std::sort(out.begin(), out.end());
    }
    memo[static_cast<size_t>(id)] = std::move(out);
    done[static_cast<size_t>(id)] = true;
    return memo[static_cast<size_t>(id)];
}

} // namespace

Refinement simplicial_refinement(const Fan& f) {
    Refinement r;
    r.base = &f;
    std::vector<std::vector<std::vector<int>>> memo(f.cones().size());
    std::vector<bool> done(f.cones().size(), false);
    for (const auto& c : f.cones()) tri(f, c.id, memo, done);
    r.cells = memo;

    std::vector<std::vector<int>> max_cells;
    for (int m : f.max_cone_ids())
        for (const auto& cell : r.cells[static_cast<size_t>(m)]) max_cells.push_back(cell);

    r.refined = build_fan(f.ambient_dim(), f.rays(), max_cells, /*check_pairwise=*/false);
    r.refined.set_name(f.name().empty() ? "refined" : f.name() + "-refined");

    // carrier: smallest base cone whose rayset contains the refined cone's rays
    r.carrier.assign(r.refined.cones().size(), -1);
    for (const auto& rc : r.refined.cones()) {
        int best = -1;
        for (const auto& bc : f.cones()) {
            if (!std::includes(bc.ray_ids.begin(), bc.ray_ids.end(), rc.ray_ids.begin(),
                               rc.ray_ids.end()))
                continue;
            if (best < 0 || bc.dim < f.cone(best).dim) best = bc.id;
        }
        assert(best >= 0);
        r.carrier[static_cast<size_t>(rc.id)] = best;
    }
    return r;
}

std::vector<int> Refinement::pieces_of(int base_cone) const {
    std::vector<int> out;
    for (const auto& cell : cells[static_cast<size_t>(base_cone)]) {
        int id = refined.cone_by_rays(cell);
        assert(id >= 0);
        out.push_back(id);
    }
    return out;
}

int Refinement::pulled_ray(int base_cone) const {
    const Cone& c = base->cone(base_cone);
    assert(!c.ray_ids.empty());
    return c.ray_ids.front();
}

bool Refinement::is_identity() const {
    return refined.cones().size() == base->cones().size();
}

} // namespace ihfan
