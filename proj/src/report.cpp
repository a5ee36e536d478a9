#include "ihfan/report.hpp"

#include "ihfan/cochain.hpp"
#include "ihfan/decompose.hpp"
#include "ihfan/lefschetz.hpp"
#include "ihfan/minimal_sheaf.hpp"
#include "ihfan/recursion.hpp"

#include <chrono>
#include <limits>
#include <sstream>

namespace ihfan {

using nlohmann::json;

namespace {

// integers are emitted as JSON numbers while they fit, decimal strings beyond
json integer_to_json(const Integer& x) {
    if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
        return json(static_cast<long long>(x));
    return json(x.str());
}

json intvec_to_json(const std::vector<Integer>& v) {
    json arr = json::array();
    for (const auto& x : v) arr.push_back(integer_to_json(x));
    return arr;
}

} // namespace

json poly_to_json(const PoincarePoly& p) {
    json arr = json::array();
    for (const auto& c : p.coeffs()) arr.push_back(integer_to_json(c));
    return json{{"coeffs", arr}, {"text", p.str()}};
}

namespace {

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

int default_degree_bound(const Fan& f, int requested) {
    return requested > 0 ? requested : 2 * f.ambient_dim() + 2;
}

} // namespace

Outcome compute_report(const Fan& f, bool relative, bool want_h, bool want_g) {
    Timer timer;
    Outcome out;
    json j;
    j["command"] = "compute";
    j["fan"] = f.name();
    j["ambient_dim"] = f.ambient_dim();
    j["cones"] = f.cones().size();
    j["complete"] = is_complete(f);
    j["simplicial"] = is_simplicial_fan(f);

    PoincarePoly abs = global_poly(f, false);
    j["poincare"] = poly_to_json(abs);
    if (relative) j["poincare_relative"] = poly_to_json(global_poly(f, true));
    if (want_h) j["h_vector"] = intvec_to_json(abs.as_h_vector());
    if (want_g) j["g_vector"] = intvec_to_json(abs.g_vector(f.ambient_dim()));

    out.ok = true;
    j["timing_ms"] = timer.ms();
    out.report = std::move(j);
    return out;
}

Outcome verify_report(const Fan& f, int degree_bound) {
    Timer timer;
    const int D = default_degree_bound(f, degree_bound);
    Outcome out;
    json j;
    j["command"] = "verify";
    j["fan"] = f.name();
    j["degree_bound"] = D;

    RealizedSheaf e = build_minimal_extension(f, D);

    bool ok = true;
    // axiom audit
    json axioms;
    axioms["normalization"] = e.normalized;
    axioms["pointwise_freeness"] = e.all_pf();
    axioms["local_minimal_extension"] = e.all_lme();
    axioms["vanishing"] = e.all_vanishing();
    ok = ok && e.normalized && e.all_pf() && e.all_lme() && e.all_vanishing();
    j["axioms"] = axioms;

    // per-cone residues against the local recursion
    LocalPolyTable table(f);
    json cones = json::array();
    bool locals_match = true;
    for (const auto& c : f.cones()) {
        const auto& res = e.audit[static_cast<size_t>(c.id)].residues;
        bool match = (res == table.local_poly(c.id));
        locals_match = locals_match && match;
        json jc;
        jc["cone"] = c.id;
        jc["dim"] = c.dim;
        jc["rays"] = c.ray_ids;
        jc["residues"] = poly_to_json(res);
        jc["recursion"] = poly_to_json(table.local_poly(c.id));
        jc["match"] = match;
        cones.push_back(jc);
    }
    j["local_polynomials"] = cones;
    j["locals_match"] = locals_match;
    ok = ok && locals_match;

    const int n = f.ambient_dim();
    bool pure = true;
    for (int m : f.max_cone_ids()) pure = pure && (f.cone(m).dim == n);
    j["pure"] = pure;

    if (pure) {
        OrientationData ori(f);
        QCVerdict qc = quasi_convex(e.data, D, ori);
        j["quasi_convex"] = (qc == QCVerdict::yes_syntactic) ? "yes-syntactic"
                            : (qc == QCVerdict::yes_oracle)  ? "yes-oracle"
                                                             : "no-oracle";
        // exactness table per degree
        json table_j = json::array();
        bool exact_all = true;
        for (int q = 0; 2 * q <= D; ++q) {
            CochainComplex c = cochain_complex(e.data, CochainVariant::augmented_relative, q, ori);
            auto h = c.cohomology();
            bool exact = c.exact();
            exact_all = exact_all && exact;
            json row;
            row["t_degree"] = 2 * q;
            row["cohomology"] = h;
            row["exact"] = exact;
            table_j.push_back(row);
        }
        j["augmented_relative_exactness"] = table_j;

        FreenessReport fr = freeness_hilbert_check(e.data, D);
        j["freeness"] = {{"absolute", fr.absolute},
                         {"relative", fr.relative},
                         {"absolute_residues", poly_to_json(fr.abs_residues)},
                         {"relative_residues", poly_to_json(fr.rel_residues)}};
        j["exactness_freeness_agree"] = (exact_all == (fr.absolute && fr.relative));
        ok = ok && (exact_all == (fr.absolute && fr.relative));

        OracleDuality od = oracle_duality(e.data, D);
        j["oracle_duality"] = {{"holds", od.holds},
                               {"absolute", poly_to_json(od.absolute)},
                               {"relative", poly_to_json(od.relative)}};

        const bool is_qc = qc != QCVerdict::no_oracle;
        j["quasi_convex_bool"] = is_qc;
        if (is_qc) {
            ok = ok && exact_all && fr.absolute && fr.relative && od.holds;
            DualityReport dr = check_duality(f, /*assume_quasi_convex=*/true);
            j["recursion_duality"] = {{"holds", dr.holds},
                                      {"absolute", poly_to_json(dr.absolute)},
                                      {"relative", poly_to_json(dr.relative)}};
            bool globals_match =
                (dr.absolute == od.absolute) && (dr.relative == od.relative);
            j["globals_match"] = globals_match;
            ok = ok && dr.holds && globals_match;

            DegreeBoundAudit audit = degree_bound_audit(f, true);
            j["degree_bounds"] = {{"relative_monic_2n", audit.relative_monic_2n},
                                  {"absolute_degree", audit.absolute_degree_ok},
                                  {"local_degrees", audit.local_degrees_ok}};
            ok = ok && audit.all();
        } else {
            // a definite negative verdict is itself a failed verdict
            ok = false;
        }
    } else {
        j["quasi_convex"] = "skipped-not-pure";
    }

    j["ok"] = ok;
    j["timing_ms"] = timer.ms();
    out.ok = ok;
    out.report = std::move(j);
    return out;
}

Outcome lefschetz_report(const Fan& f, int cone_id, int degree_bound) {
    Timer timer;
    Outcome out;
    json j;
    j["command"] = "lefschetz";
    j["fan"] = f.name();
    j["cone"] = cone_id;
    if (cone_id < 0 || cone_id >= static_cast<int>(f.cones().size()))
        throw Error("no cone with id " + std::to_string(cone_id));

    LefschetzReport rep = hard_lefschetz_check(f, cone_id, default_degree_bound(f, degree_bound));
    j["vanishing_ok"] = rep.vanishing_ok;
    j["m"] = rep.m;
    j["residues"] = poly_to_json(rep.gbar);
    json lv = json::array();
    for (const auto& l : rep.levels) {
        lv.push_back({{"two_q", l.two_q},
                      {"dim_from", l.dim_from},
                      {"dim_to", l.dim_to},
                      {"rank", l.rank},
                      {"injective", l.injective},
                      {"surjective", l.surjective},
                      {"needs_injective", l.needs_injective},
                      {"needs_surjective", l.needs_surjective}});
    }
    j["levels"] = lv;
    j["passed"] = rep.passed;
    j["timing_ms"] = timer.ms();
    out.ok = rep.passed;
    out.report = std::move(j);
    return out;
}

Outcome decompose_report(const Fan& f, int degree_bound) {
    Timer timer;
    const int D = default_degree_bound(f, degree_bound);
    Outcome out;
    json j;
    j["command"] = "decompose";
    j["fan"] = f.name();
    j["degree_bound"] = D;

    auto ref = std::make_shared<Refinement>(simplicial_refinement(f));
    j["refinement_cells"] = ref->refined.max_cone_ids().size();
    RealizedSheaf inner = build_minimal_extension(ref->refined, D);
    RealizedSheaf pushed = direct_image(ref, inner);
    DecompositionResult d = decompose_semisimple(pushed.data, D);

    json summands = json::array();
    bool shape_ok = true;
    for (const auto& s : d.summands) {
        summands.push_back({{"cone", s.tau},
                            {"rays", f.cone(s.tau).ray_ids},
                            {"shift", s.shift},
                            {"multiplicity", s.multiplicity}});
        if (s.tau == f.zero_cone_id()) {
            shape_ok = shape_ok && s.shift == 0 && s.multiplicity == 1;
        } else {
            shape_ok = shape_ok && f.cone(s.tau).dim >= 2 && s.shift > 0;
        }
    }
    j["summands"] = summands;
    j["stalk_sums_match"] = d.stalk_sums_match;
    j["shape_ok"] = shape_ok;
    j["timing_ms"] = timer.ms();
    out.ok = d.stalk_sums_match && shape_ok;
    j["ok"] = out.ok;
    out.report = std::move(j);
    return out;
}

std::string render_text(const json& j, int indent) {
    std::ostringstream os;
    const std::string pad(static_cast<size_t>(indent) * 2, ' ');
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (it.value().is_object() || it.value().is_array()) {
                os << pad << it.key() << ":\n" << render_text(it.value(), indent + 1);
            } else {
                os << pad << it.key() << ": " << it.value().dump() << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& v : j) {
            if (v.is_object() || v.is_array()) {
                os << pad << "-\n" << render_text(v, indent + 1);
            } else {
                os << pad << "- " << v.dump() << "\n";
            }
        }
    } else {
        os << pad << j.dump() << "\n";
    }
    return os.str();
}

} // namespace ihfan
