#pragma once

// File formats: polytope JSON documents, simplex-cover JSON, CSV point clouds,
// and the 12-significant-digit formatting used for printed results.

#include <string>
#include <vector>

#include <json.hpp>

#include "tropiball/core.hpp"
#include "tropiball/simplicial.hpp"

namespace tropiball {

struct PolytopeFile {
    TropPolytope polytope;
    std::string name;
};

// { "e": int, "vertices": [[...], ...], "name": optional }. Vertices are raw
// coordinates, normalized on load; non-finite numbers are rejected.
PolytopeFile parse_polytope(const nlohmann::json& j);
PolytopeFile load_polytope(const std::string& path);
nlohmann::json polytope_to_json(const TropPolytope& P, const std::string& name = "");
void save_polytope(const TropPolytope& P, const std::string& path, const std::string& name = "");

nlohmann::json cover_to_json(const SimplexCover& cover);
SimplexCover cover_from_json(const nlohmann::json& j);

// "%.12g" formatting; all printed floating results go through this.
std::string format12(Scalar x);

// Rounds through format12 so JSON results carry 12 significant digits.
nlohmann::json json_number(Scalar x);
nlohmann::json json_vector(const std::vector<Scalar>& xs);
nlohmann::json json_point(const TropPoint& p);

std::string points_to_csv(const std::vector<TropPoint>& pts);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace tropiball
