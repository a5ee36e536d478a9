#include "ihfan/fan_io.hpp"
#include "ihfan/hull.hpp"

#include <json.hpp>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

namespace ihfan {

using nlohmann::json;

FanDocument parse_fan_document(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaError(std::string("invalid JSON: ") + e.what());
    }
    FanDocument doc;
    if (!j.is_object()) throw SchemaError("top-level value must be an object");
    if (!j.contains("ambient_dim") || !j["ambient_dim"].is_number_integer())
        throw SchemaError("missing or non-integer field 'ambient_dim'");
    doc.ambient_dim = j["ambient_dim"].get<int>();
    if (doc.ambient_dim < 0) throw SchemaError("'ambient_dim' must be nonnegative");
    if (j.contains("schema_version")) {
        if (!j["schema_version"].is_number_integer())
            throw SchemaError("'schema_version' must be an integer");
        doc.schema_version = j["schema_version"].get<int>();
        if (doc.schema_version != 1)
            throw SchemaError("unsupported schema_version " +
                              std::to_string(doc.schema_version));
    }
    if (j.contains("name")) {
        if (!j["name"].is_string()) throw SchemaError("'name' must be a string");
        doc.name = j["name"].get<std::string>();
    }
    if (!j.contains("rays") || !j["rays"].is_array())
        throw SchemaError("missing or non-array field 'rays'");
    for (size_t i = 0; i < j["rays"].size(); ++i) {
        const auto& r = j["rays"][i];
        if (!r.is_array() || r.size() != static_cast<size_t>(doc.ambient_dim))
            throw SchemaError("ray " + std::to_string(i) + " must be an array of length " +
                              std::to_string(doc.ambient_dim));
        std::vector<Integer> v;
        for (size_t k = 0; k < r.size(); ++k) {
            if (!r[k].is_number_integer())
                throw SchemaError("ray " + std::to_string(i) + ", coordinate " +
                                  std::to_string(k) + " must be an integer");
            v.push_back(Integer(r[k].get<long long>()));
        }
        doc.rays.push_back(std::move(v));
    }
    if (!j.contains("cones") || !j["cones"].is_array())
        throw SchemaError("missing or non-array field 'cones'");
    for (size_t i = 0; i < j["cones"].size(); ++i) {
        const auto& c = j["cones"][i];
        if (!c.is_array()) throw SchemaError("cone " + std::to_string(i) + " must be an array");
        std::vector<int> ids;
        for (size_t k = 0; k < c.size(); ++k) {
            if (!c[k].is_number_integer())
                throw SchemaError("cone " + std::to_string(i) + ", entry " + std::to_string(k) +
                                  " must be a ray index");
            int idx = c[k].get<int>();
            if (idx < 0 || idx >= static_cast<int>(doc.rays.size()))
                throw SchemaError("cone " + std::to_string(i) + " references unknown ray " +
                                  std::to_string(idx));
            ids.push_back(idx);
        }
        doc.cones.push_back(std::move(ids));
    }
    return doc;
}

std::string emit_fan_document(const FanDocument& doc) {
    json j;
    j["schema_version"] = doc.schema_version;
    j["ambient_dim"] = doc.ambient_dim;
    if (!doc.name.empty()) j["name"] = doc.name;
    j["rays"] = json::array();
    for (const auto& r : doc.rays) {
        json row = json::array();
        for (const auto& x : r) row.push_back(static_cast<long long>(x));
        j["rays"].push_back(row);
    }
    j["cones"] = doc.cones;
    return j.dump(2) + "\n";
}

Fan document_to_fan(const FanDocument& doc) {
    std::vector<VecQ> rays;
    for (const auto& r : doc.rays) {
        VecQ v(static_cast<Eigen::Index>(r.size()));
        for (size_t k = 0; k < r.size(); ++k) v(static_cast<Eigen::Index>(k)) = Rational(r[k]);
        rays.push_back(std::move(v));
    }
    Fan f = build_fan(doc.ambient_dim, rays, doc.cones);
    f.set_name(doc.name);
    return f;
}

FanDocument fan_to_document(const Fan& f) {
    FanDocument doc;
    doc.ambient_dim = f.ambient_dim();
    doc.name = f.name();
    for (const auto& r : f.rays()) {
        std::vector<Integer> row;
        for (Eigen::Index k = 0; k < r.size(); ++k)
            row.push_back(boost::multiprecision::numerator(r(k)));
        doc.rays.push_back(std::move(row));
    }
    for (int m : f.max_cone_ids()) doc.cones.push_back(f.cone(m).ray_ids);
    return doc;
}

namespace {

FanDocument doc_of(int n, std::string name, std::vector<std::vector<long long>> rays,
                   std::vector<std::vector<int>> cones) {
    FanDocument doc;
    doc.ambient_dim = n;
    doc.name = std::move(name);
    for (auto& r : rays) {
        std::vector<Integer> row;
        for (long long x : r) row.push_back(Integer(x));
        doc.rays.push_back(std::move(row));
    }
    doc.cones = std::move(cones);
    return doc;
}

std::vector<std::vector<int>> cube_facet_cones() {
    std::vector<std::vector<int>> maxs;
    for (int axis = 0; axis < 3; ++axis) {
        for (int sign = 0; sign < 2; ++sign) {
            std::vector<int> cone;
            for (int i = 0; i < 8; ++i) {
                int coord = (axis == 0) ? i / 4 : (axis == 1) ? (i / 2) % 2 : i % 2;
                if (coord == sign) cone.push_back(i);
            }
            maxs.push_back(cone);
        }
    }
    return maxs;
}

std::vector<std::vector<long long>> cube_vertices(long long last = 0, bool append = false) {
    std::vector<std::vector<long long>> rays;
    for (long long x : {-1, 1})
        for (long long y : {-1, 1})
            for (long long z : {-1, 1}) {
                std::vector<long long> v = {x, y, z};
                if (append) v.push_back(last);
                rays.push_back(v);
            }
    return rays;
}

// complete simplicial 2D fan: the axes plus seeded extra primitive rays,
// sorted counterclockwise
FanDocument random_2d(unsigned long seed) {
    std::mt19937_64 rng(seed);
    std::set<std::pair<long long, long long>> dirs = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    const int extra = 2 + static_cast<int>(rng() % 5);
    int guard = 0;
    while (static_cast<int>(dirs.size()) < 4 + extra && guard++ < 200) {
        long long a = static_cast<long long>(rng() % 19) - 9;
        long long b = static_cast<long long>(rng() % 19) - 9;
        if (a == 0 && b == 0) continue;
        long long g = std::gcd(a, b);
        dirs.insert({a / g, b / g});
    }
    std::vector<std::pair<long long, long long>> sorted(dirs.begin(), dirs.end());
    auto half = [](const std::pair<long long, long long>& p) {
        return (p.second > 0 || (p.second == 0 && p.first > 0)) ? 0 : 1;
    };
    std::sort(sorted.begin(), sorted.end(), [&](const auto& p, const auto& q) {
        if (half(p) != half(q)) return half(p) < half(q);
        return p.first * q.second - p.second * q.first > 0; // cross product
    });
    std::vector<std::vector<long long>> rays;
    std::vector<std::vector<int>> cones;
    for (const auto& [a, b] : sorted) rays.push_back({a, b});
    for (size_t i = 0; i < sorted.size(); ++i)
        cones.push_back({static_cast<int>(i), static_cast<int>((i + 1) % sorted.size())});
    return doc_of(2, "random-simplicial-2d", std::move(rays), std::move(cones));
}

// complete simplicial 3D fan: the face fan of the hull of seeded points
FanDocument random_3d(unsigned long seed) {
    for (int attempt = 0; attempt < 100; ++attempt) {
        std::mt19937_64 rng(seed + 1000003UL * static_cast<unsigned long>(attempt));
        std::set<std::vector<long long>> pts = {{3, 0, 0}, {-3, 0, 0}, {0, 3, 0},
                                                {0, -3, 0}, {0, 0, 3}, {0, 0, -3}};
        const int extra = 2 + static_cast<int>(rng() % 4);
        int guard = 0;
        while (static_cast<int>(pts.size()) < 6 + extra && guard++ < 300) {
            std::vector<long long> p(3);
            long long norm2 = 0;
            for (auto& x : p) {
                x = static_cast<long long>(rng() % 7) - 3;
                norm2 += x * x;
            }
            if (norm2 < 6) continue; // keep points near the sphere, off the center
            pts.insert(p);
        }
        std::vector<VecQ> verts;
        for (const auto& p : pts) {
            VecQ v(3);
            v << p[0], p[1], p[2];
            verts.push_back(v);
        }
        try {
            Fan f = polytope_to_fan(verts, PolytopeFanMode::face_fan);
            if (!is_simplicial_fan(f) || !is_complete(f)) continue;
            FanDocument doc = fan_to_document(f);
            doc.name = "random-simplicial-3d";
            return doc;
        } catch (const DegenerateInput&) {
            continue; // some sample was not a vertex; retry with the next seed
        }
    }
    throw Error("random 3D fan generation failed to converge");
}

} // namespace

std::vector<std::string> example_names() {
    return {"simplex-2d",      "simplex-3d",           "square",
            "cube-face-fan",   "cross-polytope",       "cone-over-square",
            "cone-over-cube",  "half-plane",           "bad-boundary",
            "random-simplicial-2d", "random-simplicial-3d"};
}

FanDocument example_document(const std::string& name, unsigned long seed) {
    if (name == "simplex-2d")
        return doc_of(2, name, {{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}, {2, 0}});
    if (name == "simplex-3d")
        return doc_of(3, name, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}},
                      {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
    if (name == "square")
        return doc_of(2, name, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}},
                      {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    if (name == "cube-face-fan") return doc_of(3, name, cube_vertices(), cube_facet_cones());
    if (name == "cross-polytope")
        return doc_of(3, name, {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}},
                      {{0, 2, 4}, {0, 2, 5}, {0, 3, 4}, {0, 3, 5},
                       {1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {1, 3, 5}});
    if (name == "cone-over-square")
        return doc_of(3, name, {{1, 0, 1}, {0, 1, 1}, {-1, 0, 1}, {0, -1, 1}}, {{0, 1, 2, 3}});
    if (name == "cone-over-cube")
        return doc_of(4, name, cube_vertices(1, true), {{0, 1, 2, 3, 4, 5, 6, 7}});
    if (name == "half-plane")
        return doc_of(2, name, {{1, 0}, {0, 1}, {-1, 0}}, {{0, 1}, {1, 2}});
    if (name == "bad-boundary")
        return doc_of(2, name, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}}, {{0, 1}, {2, 3}});
    if (name == "random-simplicial-2d") return random_2d(seed);
    if (name == "random-simplicial-3d") return random_3d(seed);
    throw Error("unknown example '" + name + "'");
}

} // namespace ihfan
