#ifndef IHFAN_REPORT_HPP
#define IHFAN_REPORT_HPP

#include "ihfan/fan.hpp"
#include "ihfan/poincare.hpp"

#include <json.hpp>

#include <string>

namespace ihfan {

nlohmann::json poly_to_json(const PoincarePoly& p);

struct Outcome {
    bool ok = false;          // every verdict that applies came back true
    nlohmann::json report;
};

/// Poincare polynomials, h- and g-vectors by the recursion path.
Outcome compute_report(const Fan& f, bool relative, bool want_h, bool want_g);

/// Full oracle audit: axioms, vanishing, quasi-convexity, exactness table,
/// freeness, duality, and the recursion-versus-oracle diff.
Outcome verify_report(const Fan& f, int degree_bound);

Outcome lefschetz_report(const Fan& f, int cone_id, int degree_bound);

/// Triangulate, push the refined structure sheaf forward, decompose.
Outcome decompose_report(const Fan& f, int degree_bound);

/// Plain-text rendering of a report object.
std::string render_text(const nlohmann::json& j, int indent = 0);

} // namespace ihfan

#endif
