// Acceptance suite: runs every criterion and prints one PASS/FAIL line each.
// Exits nonzero if any criterion fails.

#include "ihfan/cochain.hpp"
#include "ihfan/decompose.hpp"
#include "ihfan/fan_io.hpp"
#include "ihfan/lefschetz.hpp"
#include "ihfan/minimal_sheaf.hpp"
#include "ihfan/recursion.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

using namespace ihfan;

namespace {

struct Harness {
    int failures = 0;
    double total_ms = 0;

    void run(int number, const std::string& label, const std::function<bool(std::string&)>& body) {
        auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = body(detail);
        } catch (const std::exception& e) {
            ok = false;
            detail = std::string("exception: ") + e.what();
        }
        double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                .count();
        total_ms += ms;
        std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << number << ": " << label << " ("
                  << static_cast<long>(ms) << " ms)";
        if (!detail.empty()) std::cout << " -- " << detail;
        std::cout << "\n";
        if (!ok) ++failures;
    }
};

PoincarePoly P(std::vector<int> v) {
    std::vector<Integer> c;
    for (int x : v) c.push_back(Integer(x));
    return PoincarePoly(c);
}

std::vector<std::string> bundled() {
    return {"simplex-2d",      "simplex-3d",     "square",     "cube-face-fan",
            "cross-polytope",  "cone-over-square", "half-plane", "bad-boundary",
            "random-simplicial-2d", "random-simplicial-3d"};
}

struct Corpus {
    std::map<std::string, Fan> fans;
    std::map<std::string, RealizedSheaf> sheaves;

    const Fan& fan(const std::string& name) {
        auto it = fans.find(name);
        if (it == fans.end())
            it = fans.emplace(name, document_to_fan(example_document(name, 5))).first;
        return it->second;
    }
    const RealizedSheaf& sheaf(const std::string& name) {
        auto it = sheaves.find(name);
        if (it == sheaves.end()) it = sheaves.emplace(name, build_minimal_extension(fan(name))).first;
        return it->second;
    }
    bool is_pure(const std::string& name) {
        const Fan& f = fan(name);
        for (int m : f.max_cone_ids())
            if (f.cone(m).dim != f.ambient_dim()) return false;
        return true;
    }
    bool is_quasi_convex(const std::string& name) {
        if (name == "bad-boundary") return false;
        return true; // all other bundled fans are complete, affine, or the half-plane
    }
};

Corpus corpus;

} // namespace

int main() {
    Harness h;

    h.run(1, "golden h-vectors via the recursion", [&](std::string& detail) {
        auto t0 = std::chrono::steady_clock::now();
        bool ok = true;
        ok = ok && (global_poly(corpus.fan("cube-face-fan"), false) == P({1, 5, 5, 1}));
        ok = ok && (global_poly(corpus.fan("cube-face-fan"), false).g_vector(3) ==
                    std::vector<Integer>{1, 4});
        ok = ok && (global_poly(corpus.fan("square"), false) == P({1, 2, 1}));
        ok = ok && (global_poly(corpus.fan("simplex-2d"), false) == P({1, 1, 1}));
        ok = ok && (global_poly(corpus.fan("simplex-3d"), false) == P({1, 1, 1, 1}));
        double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                .count();
        if (ms >= 1000) { ok = false; detail = "too slow"; }
        return ok;
    });

    h.run(2, "local recursion golden values", [&](std::string& detail) {
        auto t0 = std::chrono::steady_clock::now();
        const Fan& cos = corpus.fan("cone-over-square");
        const Fan& coc = corpus.fan("cone-over-cube");
        bool ok = true;
        ok = ok && (local_poly(cos, cos.cone_by_rays({0, 1, 2, 3})) == P({1, 1}));
        ok = ok &&
             (local_poly(coc, coc.cone_by_rays({0, 1, 2, 3, 4, 5, 6, 7})) == P({1, 4}));
        double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                .count();
        if (ms >= 1000) { ok = false; detail = "too slow"; }
        return ok;
    });

    h.run(3, "oracle residues equal the recursion on every bundled fan with n <= 3",
          [&](std::string& detail) {
              auto t0 = std::chrono::steady_clock::now();
              bool ok = true;
              for (const auto& name : bundled()) {
                  const Fan& f = corpus.fan(name);
                  if (f.ambient_dim() > 3) continue;
                  const RealizedSheaf& e = corpus.sheaf(name);
                  LocalPolyTable table(f);
                  for (const auto& c : f.cones()) {
                      if (e.audit[static_cast<size_t>(c.id)].residues != table.local_poly(c.id)) {
                          ok = false;
                          detail = name + ": local mismatch at cone " + std::to_string(c.id);
                      }
                  }
                  if (corpus.is_quasi_convex(name)) {
                      PoincarePoly oracle = oracle_global_poly(e.data, 2 * f.ambient_dim(), false);
                      PoincarePoly recursion = global_poly(f, false, true);
                      if (oracle != recursion) {
                          ok = false;
                          detail = name + ": global mismatch";
                      }
                  }
              }
              double ms = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - t0)
                              .count();
              if (ms >= 60000) { ok = false; detail = "too slow"; }
              return ok;
          });

    h.run(4, "minimal extension axioms and vanishing on every bundled fan",
          [&](std::string& detail) {
              bool ok = true;
              for (const auto& name : bundled()) {
                  const RealizedSheaf& e = corpus.sheaf(name);
                  if (!(e.normalized && e.all_pf() && e.all_lme() && e.all_vanishing())) {
                      ok = false;
                      detail = name + ": axiom failure";
                  }
                  if (is_simplicial_fan(*e.fan)) {
                      for (const auto& c : e.fan->cones()) {
                          if (e.data.gen_deg[static_cast<size_t>(c.id)] != std::vector<int>{0}) {
                              ok = false;
                              detail = name + ": simplicial stalk is not the structure sheaf";
                          }
                      }
                  }
              }
              // cone over the 3-cube exercises dimension 4
              const RealizedSheaf& coc = corpus.sheaf("cone-over-cube");
              if (!(coc.all_pf() && coc.all_lme() && coc.all_vanishing())) {
                  ok = false;
                  detail = "cone-over-cube: axiom failure";
              }
              return ok;
          });

    h.run(5, "Bernstein-Lunts exactness on complete fans; contrast fan has cohomology",
          [&](std::string& detail) {
              bool ok = true;
              for (const auto& name : bundled()) {
                  const Fan& f = corpus.fan(name);
                  if (!is_complete(f)) continue;
                  const RealizedSheaf& e = corpus.sheaf(name);
                  OrientationData ori(f);
                  if (!augmented_exact_through(e.data, 2 * f.ambient_dim() + 2, ori)) {
                      ok = false;
                      detail = name + ": not exact";
                  }
              }
              const RealizedSheaf& bad = corpus.sheaf("bad-boundary");
              OrientationData ori(*bad.fan);
              if (augmented_exact_through(bad.data, 6, ori)) {
                  ok = false;
                  detail = "bad-boundary unexpectedly exact";
              }
              return ok;
          });

    h.run(6, "exactness and Hilbert freeness verdicts agree on every pure bundled fan",
          [&](std::string& detail) {
              bool ok = true;
              for (const auto& name : bundled()) {
                  if (!corpus.is_pure(name)) continue;
                  const Fan& f = corpus.fan(name);
                  const RealizedSheaf& e = corpus.sheaf(name);
                  OrientationData ori(f);
                  const int D = 2 * f.ambient_dim() + 2;
                  bool exact = augmented_exact_through(e.data, D, ori);
                  FreenessReport fr = freeness_hilbert_check(e.data, D);
                  if (exact != (fr.absolute && fr.relative)) {
                      ok = false;
                      detail = name + ": verdicts disagree";
                  }
              }
              return ok;
          });

    h.run(7, "duality identity via recursion and via oracle residues",
          [&](std::string& detail) {
              bool ok = true;
              for (const auto& name : bundled()) {
                  if (!corpus.is_quasi_convex(name)) continue;
                  const Fan& f = corpus.fan(name);
                  DualityReport dr = check_duality(f, true);
                  if (!dr.holds) {
                      ok = false;
                      detail = name + ": recursion duality fails";
                  }
                  const RealizedSheaf& e = corpus.sheaf(name);
                  OracleDuality od = oracle_duality(e.data, 2 * f.ambient_dim() + 2);
                  if (!od.holds) {
                      ok = false;
                      detail = name + ": oracle duality fails";
                  }
                  if (od.absolute != dr.absolute || od.relative != dr.relative) {
                      ok = false;
                      detail = name + ": oracle and recursion disagree";
                  }
              }
              return ok;
          });

    h.run(8, "hard Lefschetz ranks for the cones over the square and the 3-cube",
          [&](std::string& detail) {
              const Fan& cos = corpus.fan("cone-over-square");
              LefschetzReport a =
                  hard_lefschetz_check(cos, cos.cone_by_rays({0, 1, 2, 3}), 8);
              bool ok = a.vanishing_ok && a.passed && a.gbar == P({1, 2, 1}) &&
                        a.levels.at(0).rank == 1 && a.levels.at(0).injective &&
                        a.levels.at(1).rank == 1 && a.levels.at(1).surjective;
              if (!ok) detail = "cone-over-square pattern";

              const Fan& coc = corpus.fan("cone-over-cube");
              LefschetzReport b =
                  hard_lefschetz_check(coc, coc.cone_by_rays({0, 1, 2, 3, 4, 5, 6, 7}), 10);
              bool okb = b.vanishing_ok && b.passed && b.gbar == P({1, 5, 5, 1}) &&
                         b.levels.at(0).injective && b.levels.at(1).injective &&
                         b.levels.at(1).surjective && b.levels.at(2).surjective &&
                         b.levels.at(1).rank == 5;
              if (!okb) detail += std::string(detail.empty() ? "" : "; ") + "cone-over-cube pattern";
              return ok && okb;
          });

    h.run(9, "decomposition round trip and pushforward shape", [&](std::string& detail) {
        bool ok = true;
        // constructed direct sum round trip
        {
            const Fan& f = corpus.fan("cone-over-square");
            const RealizedSheaf& e = corpus.sheaf("cone-over-square");
            int sigma = f.cone_by_rays({0, 1, 2, 3});
            SheafData sum = direct_sum(e.data, shift(build_simple_sheaf(f, sigma, 8), 2));
            DecompositionResult d = decompose_semisimple(sum, 8);
            bool found_e = false, found_s = false;
            for (const auto& s : d.summands) {
                if (s.tau == f.zero_cone_id() && s.shift == 0 && s.multiplicity == 1)
                    found_e = true;
                if (s.tau == sigma && s.shift == 2 && s.multiplicity == 1) found_s = true;
            }
            if (!(d.summands.size() == 2 && found_e && found_s && d.stalk_sums_match)) {
                ok = false;
                detail = "round trip failed";
            }
        }
        // pushforwards of refined structure sheaves decompose with the
        // guaranteed shape: the minimal sheaf plus positively shifted simples
        // on cones of dimension at least two
        for (const char* name : {"cone-over-square", "cube-face-fan"}) {
            const Fan& f = corpus.fan(name);
            auto ref = std::make_shared<Refinement>(simplicial_refinement(f));
            RealizedSheaf inner = build_minimal_extension(ref->refined);
            RealizedSheaf pushed = direct_image(ref, inner);
            DecompositionResult d = decompose_semisimple(pushed.data, 2 * f.ambient_dim() + 2);
            bool found_e = false, shape = true;
            for (const auto& s : d.summands) {
                if (s.tau == f.zero_cone_id()) {
                    found_e = (s.shift == 0 && s.multiplicity == 1);
                } else {
                    shape = shape && f.cone(s.tau).dim >= 2 && s.shift > 0;
                }
            }
            if (!(found_e && shape && d.stalk_sums_match)) {
                ok = false;
                detail = std::string(name) + ": pushforward decomposition";
            }
        }
        return ok;
    });

    h.run(10, "structural property checks", [&](std::string& detail) {
        bool ok = true;
        // coboundary squares to zero on 100 randomized complexes
        std::mt19937_64 rng(99);
        std::vector<std::string> pool = {"square",           "simplex-3d", "half-plane",
                                         "bad-boundary",     "cone-over-square",
                                         "cross-polytope",   "random-simplicial-2d"};
        int checked = 0;
        while (checked < 100) {
            const std::string& name = pool[rng() % pool.size()];
            const Fan& f = corpus.fan(name);
            const RealizedSheaf& e = corpus.sheaf(name);
            OrientationData ori(f);
            int q = static_cast<int>(rng() % static_cast<unsigned long>(e.max_q + 1));
            CochainVariant v = static_cast<CochainVariant>(rng() % 3);
            if (!corpus.is_pure(name) && v != CochainVariant::absolute) continue;
            CochainComplex c = cochain_complex(e.data, v, q, ori);
            if (!c.is_complex()) {
                ok = false;
                detail = name + ": coboundary fails";
                break;
            }
            ++checked;
        }
        // f-vector identity on 20 random complete simplicial fans
        for (unsigned long seed = 1; ok && seed <= 10; ++seed) {
            for (const char* name : {"random-simplicial-2d", "random-simplicial-3d"}) {
                Fan f = document_to_fan(example_document(name, seed));
                const int n = f.ambient_dim();
                PoincarePoly hpoly;
                for (int k = 0; k <= n; ++k)
                    hpoly = hpoly + t2_minus_1_pow(n - k) *
                                        PoincarePoly({Integer(
                                            static_cast<long>(f.cones_of_dim(k).size()))});
                if (global_poly(f, false) != hpoly) {
                    ok = false;
                    detail = std::string(name) + " seed " + std::to_string(seed) +
                             ": f-vector identity fails";
                }
            }
        }
        // degree-bound audit corpus-wide
        for (const auto& name : bundled()) {
            if (!corpus.is_quasi_convex(name)) continue;
            DegreeBoundAudit a = degree_bound_audit(corpus.fan(name), true);
            if (!a.all()) {
                ok = false;
                detail = name + ": degree bound audit fails";
            }
        }
        return ok;
    });

    std::cout << (h.failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES PRESENT") << " ("
              << static_cast<long>(h.total_ms) << " ms total)\n";
    if (h.total_ms > 300000) {
        std::cout << "[FAIL] suite exceeded the five minute budget\n";
        return 1;
    }
    return h.failures == 0 ? 0 : 1;
}
