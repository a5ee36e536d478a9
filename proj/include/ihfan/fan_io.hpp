#ifndef IHFAN_FAN_IO_HPP
#define IHFAN_FAN_IO_HPP

#include "ihfan/fan.hpp"

#include <string>
#include <vector>

namespace ihfan {

/**
 * The JSON fan document: primitive integer ray coordinates and maximal cones
 * as ray-index lists; faces are always recomputed.
 *
 *   { "schema_version": 1, "ambient_dim": 2, "name": "square",
 *     "rays": [[1,0],[0,1],[-1,0],[0,-1]],
 *     "cones": [[0,1],[1,2],[2,3],[3,0]] }
 */
struct FanDocument {
    int schema_version = 1;
    int ambient_dim = 0;
    std::string name;
    std::vector<std::vector<Integer>> rays;
    std::vector<std::vector<int>> cones;
};

/// Parses a document; schema violations carry the offending field.
FanDocument parse_fan_document(const std::string& text);
std::string emit_fan_document(const FanDocument& doc);

Fan document_to_fan(const FanDocument& doc);
FanDocument fan_to_document(const Fan& f);

/// Bundled example fans; random generators are seeded and deterministic.
std::vector<std::string> example_names();
FanDocument example_document(const std::string& name, unsigned long seed = 1);

} // namespace ihfan

#endif
