// Copyright 2026 The highgenus Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fstream>
#include <sstream>

#include "highgenus/complex.hpp"
#include "highgenus/error.hpp"
#include "json.hpp"

namespace hg {

using nlohmann::json;

namespace {

json walk_to_json(const Walk& w) { return json{{"v", w.vertices}, {"e", w.edges}}; }

Walk walk_from_json(const json& j) {
    Walk w;
    j.at("v").get_to(w.vertices);
    j.at("e").get_to(w.edges);
    return w;
}

json blueprint_to_json(const Blueprint& bp) {
    return json{{"L", bp.L},
                {"N", bp.N},
                {"hole_side", bp.resolved_hole_side()},
                {"tube_length", bp.resolved_tube_length()},
                {"base_side", bp.resolved_base_side()},
                {"seed", bp.seed},
                {"symmetrized", bp.symmetrized},
                {"reversing_glue", bp.reversing_glue}};
}

Blueprint blueprint_from_json(const json& j) {
    Blueprint bp;
    bp.L = j.at("L").get<int>();
    bp.N = j.at("N").get<int>();
    bp.hole_side = j.at("hole_side").get<int>();
    bp.tube_length = j.at("tube_length").get<int>();
    bp.base_side = j.at("base_side").get<int>();
    bp.seed = j.at("seed").get<std::uint64_t>();
    bp.symmetrized = j.at("symmetrized").get<bool>();
    bp.reversing_glue = j.value("reversing_glue", false);
    return bp;
}

}  // namespace

std::string write_surface(const CellComplex& c) {
    json j;
    j["format"] = "highgenus-surface";
    j["version"] = std::to_string(kSurfaceFormatMajor) + "." + std::to_string(kSurfaceFormatMinor);
    j["blueprint"] = c.blueprint ? blueprint_to_json(*c.blueprint) : json(nullptr);
    j["seed"] = c.seed;
    j["vertices"] = c.num_vertices;
    json edges = json::array();
    for (const auto& e : c.edges) edges.push_back(json::array({e.a, e.b}));
    j["edges"] = std::move(edges);
    json faces = json::array();
    for (const auto& f : c.faces) faces.push_back(walk_to_json(f));
    j["faces"] = std::move(faces);
    json bounds = json::array();
    for (const auto& b : c.boundaries) bounds.push_back(walk_to_json(b));
    j["boundaries"] = std::move(bounds);
    j["edge_region"] = c.edge_region;
    json handles = json::array();
    for (const auto& h : c.handles) handles.push_back(json{{"id", h.id}, {"seam", walk_to_json(h.seam)}});
    j["handles"] = std::move(handles);
    json loops = json::array();
    for (const auto& l : c.marked_loops) loops.push_back(walk_to_json(l));
    j["marked_loops"] = std::move(loops);
    // nlohmann::json objects keep keys sorted, so dump() is canonical
    return j.dump(1) + "\n";
}

CellComplex read_surface(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& ex) {
        throw Error(ErrorKind::format_error, std::string("surface file is not valid JSON: ") + ex.what());
    }
    try {
        if (j.at("format").get<std::string>() != "highgenus-surface")
            throw Error(ErrorKind::format_error, "not a surface file");
        const auto version = j.at("version").get<std::string>();
        const int major = std::stoi(version.substr(0, version.find('.')));
        if (major != kSurfaceFormatMajor)
            throw Error(ErrorKind::format_error, "unsupported surface format version " + version);

        CellComplex c;
        if (!j.at("blueprint").is_null()) c.blueprint = blueprint_from_json(j.at("blueprint"));
        c.seed = j.at("seed").get<std::uint64_t>();
        c.num_vertices = j.at("vertices").get<int>();
        for (const auto& e : j.at("edges")) c.edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
        for (const auto& f : j.at("faces")) c.faces.push_back(walk_from_json(f));
        for (const auto& b : j.at("boundaries")) c.boundaries.push_back(walk_from_json(b));
        j.at("edge_region").get_to(c.edge_region);
        for (const auto& h : j.at("handles")) c.handles.push_back({h.at("id").get<int>(), walk_from_json(h.at("seam"))});
        for (const auto& l : j.at("marked_loops")) c.marked_loops.push_back(walk_from_json(l));
        if (c.edge_region.size() != c.edges.size())
            throw Error(ErrorKind::format_error, "edge_region length does not match edge count");
        return c;
    } catch (const json::exception& ex) {
        throw Error(ErrorKind::format_error, std::string("malformed surface file: ") + ex.what());
    }
}

CellComplex load_surface(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::io_error, "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return read_surface(ss.str());
}

void save_surface(const CellComplex& c, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::io_error, "cannot write " + path);
    out << write_surface(c);
    if (!out) throw Error(ErrorKind::io_error, "write failed for " + path);
}

std::uint64_t surface_hash(const CellComplex& c) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : write_surface(c)) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace hg
