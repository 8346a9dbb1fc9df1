#include "ballpoly/scene.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include <json.hpp>

namespace ballpoly::io {

namespace {

std::string fmt_number(double d) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", d);
    return buf;
}

Vec parse_coords(const nlohmann::json& arr, int dim, const std::string& where) {
    if (!arr.is_array() || static_cast<int>(arr.size()) != dim)
        throw SceneError(where + ": expected an array of length " + std::to_string(dim));
    Vec v(dim);
    for (int i = 0; i < dim; ++i) {
        if (!arr[i].is_number()) throw SceneError(where + ": non-numeric coordinate");
        v(i) = arr[i].get<double>();
    }
    return v;
}

}  // namespace

Scene parse_scene(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw SceneError(std::string("scene parse error: ") + e.what());
    }
    if (!j.is_object()) throw SceneError("scene: top level must be an object");
    Scene s;
    if (!j.contains("dim") || !j["dim"].is_number_integer())
        throw SceneError("scene.dim: required integer field");
    s.dim = j["dim"].get<int>();
    if (s.dim < 2) throw SceneError("scene.dim: must be at least 2");
    if (j.contains("points")) {
        if (!j["points"].is_array()) throw SceneError("scene.points: must be an array");
        int idx = 0;
        for (const auto& p : j["points"])
            s.points.push_back(parse_coords(p, s.dim, "scene.points[" + std::to_string(idx++) + "]"));
    }
    if (j.contains("centers")) {
        if (!j["centers"].is_array()) throw SceneError("scene.centers: must be an array");
        int idx = 0;
        for (const auto& p : j["centers"])
            s.centers.push_back(parse_coords(p, s.dim, "scene.centers[" + std::to_string(idx++) + "]"));
    }
    if (j.contains("radius")) {
        if (!j["radius"].is_number()) throw SceneError("scene.radius: must be a number");
        s.radius = j["radius"].get<double>();
        if (s.radius <= 0.0) throw SceneError("scene.radius: must be positive");
    }
    if (j.contains("metadata")) {
        if (!j["metadata"].is_object()) throw SceneError("scene.metadata: must be an object");
        for (auto it = j["metadata"].begin(); it != j["metadata"].end(); ++it) {
            if (!it.value().is_string()) throw SceneError("scene.metadata: string values only");
            s.metadata[it.key()] = it.value().get<std::string>();
        }
    }
    return s;
}

Scene load_scene(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SceneError("cannot open scene file: " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_scene(text);
}

std::string serialize_scene(const Scene& s) {
    Json j = Json::object();
    j.set("dim", Json(s.dim));
    Json pts = Json::array();
    for (const Vec& p : s.points) pts.push_back(vec_to_json(p));
    j.set("points", std::move(pts));
    Json cts = Json::array();
    for (const Vec& c : s.centers) cts.push_back(vec_to_json(c));
    j.set("centers", std::move(cts));
    j.set("radius", Json(s.radius));
    Json meta = Json::object();
    for (const auto& [k, v] : s.metadata) meta.set(k, Json(v));
    j.set("metadata", std::move(meta));
    return j.dump(2);
}

// -- Json ------------------------------------------------------------------------

Json Json::array() {
    Json j;
    j.type_ = Type::Array;
    return j;
}

Json Json::object() {
    Json j;
    j.type_ = Type::Object;
    return j;
}

Json& Json::push_back(Json v) {
    if (type_ != Type::Array) throw std::logic_error("Json::push_back on non-array");
    arr_.push_back(std::move(v));
    return *this;
}

Json& Json::set(const std::string& key, Json v) {
    if (type_ != Type::Object) throw std::logic_error("Json::set on non-object");
    for (auto& [k, val] : obj_)
        if (k == key) {
            val = std::move(v);
            return *this;
        }
    obj_.emplace_back(key, std::move(v));
    return *this;
}

void Json::dump_to(std::string& out, int indent, int depth) const {
    auto pad = [&](int d) {
        if (indent > 0) {
            out += '\n';
            out.append(static_cast<size_t>(indent) * d, ' ');
        }
    };
    switch (type_) {
        case Type::Null:
            out += "null";
            break;
        case Type::Bool:
            out += bool_ ? "true" : "false";
            break;
        case Type::Number:
            out += fmt_number(num_);
            break;
        case Type::String: {
            out += '"';
            for (char c : str_) {
                switch (c) {
                    case '"': out += "\\\""; break;
                    case '\\': out += "\\\\"; break;
                    case '\n': out += "\\n"; break;
                    case '\t': out += "\\t"; break;
                    default: out += c;
                }
            }
            out += '"';
            break;
        }
        case Type::Array: {
            out += '[';
            for (size_t i = 0; i < arr_.size(); ++i) {
                if (i) out += ',';
                pad(depth + 1);
                arr_[i].dump_to(out, indent, depth + 1);
            }
            if (!arr_.empty()) pad(depth);
            out += ']';
            break;
        }
        case Type::Object: {
            out += '{';
            for (size_t i = 0; i < obj_.size(); ++i) {
                if (i) out += ',';
                pad(depth + 1);
                out += '"' + obj_[i].first + "\":";
                if (indent > 0) out += ' ';
                obj_[i].second.dump_to(out, indent, depth + 1);
            }
            if (!obj_.empty()) pad(depth);
            out += '}';
            break;
        }
    }
}

std::string Json::dump(int indent) const {
    std::string out;
    dump_to(out, indent, 0);
    return out;
}

Json vec_to_json(const Vec& v) {
    Json j = Json::array();
    for (int i = 0; i < v.size(); ++i) j.push_back(Json(v(i)));
    return j;
}

void write_file_atomic(const std::string& path, const std::string& text) {
    namespace fs = std::filesystem;
    fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw std::runtime_error("cannot open for writing: " + tmp.string());
        out << text;
    }
    fs::rename(tmp, target);
}

}  // namespace ballpoly::io
