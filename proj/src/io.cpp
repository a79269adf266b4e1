#include "bettic/io.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

namespace bettic {

using nlohmann::json;

json complex_to_json(const Complex& K) {
    json facets = json::array();
    for (Simplex f : K.facets()) facets.push_back(simplex_vertices(f));
    return json{{"m", K.m()}, {"facets", facets}};
}

Complex complex_from_json(const json& j, bool strict) {
    if (!j.is_object() || !j.contains("m") || !j.contains("facets"))
        throw std::invalid_argument("complex document needs \"m\" and \"facets\" keys");
    if (!j["m"].is_number_integer()) throw std::invalid_argument("\"m\" must be an integer");
    const int m = j["m"].get<int>();
    if (!j["facets"].is_array() || j["facets"].empty())
        throw std::invalid_argument("\"facets\" must be a nonempty list (use [[]] for the empty complex)");
    std::vector<std::vector<int>> faces;
    for (const auto& f : j["facets"]) {
        if (!f.is_array()) throw std::invalid_argument("each facet must be a list of vertices");
        std::vector<int> verts;
        for (const auto& v : f) {
            if (!v.is_number_integer()) throw std::invalid_argument("vertices must be integers");
            verts.push_back(v.get<int>());
        }
        faces.push_back(std::move(verts));
    }
    return Complex::build(m, faces, strict);
}

Complex read_complex_file(const std::string& path, bool strict) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    json j = json::parse(in); // parse errors carry byte positions
    return complex_from_json(j, strict);
}

void write_complex_file(const Complex& K, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write '" + path + "'");
    out << complex_to_json(K).dump(2) << "\n";
}

std::string complex_to_string(const Complex& K) { return complex_to_json(K).dump(2); }

json family_to_json(const SpernerFamily& F) {
    json members = json::array();
    std::vector<Simplex> sorted(F.members);
    std::sort(sorted.begin(), sorted.end(), size_lex_less);
    for (Simplex s : sorted) members.push_back(simplex_vertices(s));
    json out{{"ground", simplex_vertices(F.ground)}, {"members", members}};
    if (F.over) out["over"] = simplex_vertices(*F.over);
    return out;
}

static Simplex mask_from_list(const json& list) {
    Simplex s = 0;
    for (const auto& v : list) {
        if (!v.is_number_integer()) throw std::invalid_argument("vertices must be integers");
        const int vi = v.get<int>();
        if (vi < 1 || vi > kMaxVertices) throw std::range_error("vertex " + std::to_string(vi) + " out of range");
        s |= vertex_bit(vi);
    }
    return s;
}

SpernerFamily family_from_json(const json& j) {
    if (!j.is_object() || !j.contains("ground") || !j.contains("members"))
        throw std::invalid_argument("family document needs \"ground\" and \"members\" keys");
    SpernerFamily F;
    F.ground = mask_from_list(j["ground"]);
    for (const auto& mem : j["members"]) F.members.push_back(mask_from_list(mem));
    if (j.contains("over")) F.over = mask_from_list(j["over"]);
    return F;
}

SpernerFamily read_family_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    return family_from_json(json::parse(in));
}

} // namespace bettic
