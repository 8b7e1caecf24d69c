#include "tropiball/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace tropiball {

PolytopeFile parse_polytope(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("e") || !j.contains("vertices")) {
        throw ParseError("polytope document needs fields \"e\" and \"vertices\"");
    }
    const int e = j.at("e").get<int>();
    if (e < 2) throw ParseError("\"e\" must be at least 2");
    if (!j.at("vertices").is_array() || j.at("vertices").empty()) {
        throw ParseError("\"vertices\" must be a non-empty array");
    }
    std::vector<TropPoint> verts;
    for (const auto& row : j.at("vertices")) {
        if (!row.is_array() || static_cast<int>(row.size()) != e) {
            throw ParseError("every vertex must have exactly e coordinates");
        }
        std::vector<Scalar> raw;
        raw.reserve(static_cast<std::size_t>(e));
        for (const auto& x : row) {
            if (!x.is_number()) throw ParseError("vertex coordinates must be finite numbers");
            const Scalar v = x.get<Scalar>();
            if (!std::isfinite(v)) throw ParseError("vertex coordinates must be finite numbers");
            raw.push_back(v);
        }
        verts.push_back(normalize(raw));
    }
    PolytopeFile out{TropPolytope(std::move(verts)), j.value("name", std::string{})};
    return out;
}

PolytopeFile load_polytope(const std::string& path) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(read_file(path));
    } catch (const nlohmann::json::exception& ex) {
        throw ParseError(std::string("invalid JSON in ") + path + ": " + ex.what());
    }
    return parse_polytope(j);
}

nlohmann::json polytope_to_json(const TropPolytope& P, const std::string& name) {
    nlohmann::json j;
    j["e"] = P.dim();
    if (!name.empty()) j["name"] = name;
    nlohmann::json verts = nlohmann::json::array();
    for (const TropPoint& v : P.vertices()) verts.push_back(v.coords());
    j["vertices"] = std::move(verts);
    return j;
}

void save_polytope(const TropPolytope& P, const std::string& path, const std::string& name) {
    write_file(path, polytope_to_json(P, name).dump(2) + "\n");
}

nlohmann::json cover_to_json(const SimplexCover& cover) {
    nlohmann::json j;
    nlohmann::json simp = nlohmann::json::array();
    for (const auto& s : cover.simplices) {
        nlohmann::json idx = nlohmann::json::array();
        for (int i : s) idx.push_back(i + 1); // 1-based in documents
        simp.push_back(std::move(idx));
    }
    j["simplices"] = std::move(simp);
    j["weights"] = json_vector(cover.weights);
    j["sample_size_used"] = cover.sample_size_used;
    j["seed"] = cover.seed;
    return j;
}

SimplexCover cover_from_json(const nlohmann::json& j) {
    SimplexCover cover;
    if (!j.is_object() || !j.contains("simplices") || !j.contains("weights")) {
        throw ParseError("cover document needs fields \"simplices\" and \"weights\"");
    }
    for (const auto& s : j.at("simplices")) {
        std::vector<int> idx;
        for (const auto& i : s) idx.push_back(i.get<int>() - 1);
        cover.simplices.push_back(std::move(idx));
    }
    for (const auto& w : j.at("weights")) cover.weights.push_back(w.get<Scalar>());
    if (cover.simplices.size() != cover.weights.size()) {
        throw ParseError("cover simplices and weights differ in length");
    }
    cover.sample_size_used = j.value("sample_size_used", 0LL);
    cover.seed = j.value("seed", 0ULL);
    return cover;
}

std::string format12(Scalar x) {
    if (x == 0.0) x = 0.0; // flush negative zero
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

nlohmann::json json_number(Scalar x) { return std::stod(format12(x)); }

nlohmann::json json_vector(const std::vector<Scalar>& xs) {
    nlohmann::json arr = nlohmann::json::array();
    for (Scalar x : xs) arr.push_back(json_number(x));
    return arr;
}

nlohmann::json json_point(const TropPoint& p) { return json_vector(p.coords()); }

std::string points_to_csv(const std::vector<TropPoint>& pts) {
    std::ostringstream out;
    for (const TropPoint& p : pts) {
        for (int i = 0; i < p.dim(); ++i) {
            if (i) out << ',';
            out << format12(p[i]);
        }
        out << '\n';
    }
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write file: " + path);
    out << content;
}

} // namespace tropiball
