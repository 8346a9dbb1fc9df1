#pragma once

#include <map>
#include <string>

#include "ballpoly/types.hpp"

namespace ballpoly::io {

struct SceneError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// JSON scene: {"dim": int, "points": [[f..]..], "centers": [[f..]..],
/// "radius": f?, "metadata": {str: str}?}. Numbers are written with 17
/// significant digits.
struct Scene {
    int dim = 2;
    std::vector<Vec> points;
    std::vector<Vec> centers;
    double radius = 1.0;
    std::map<std::string, std::string> metadata;
};

Scene parse_scene(const std::string& json_text);
Scene load_scene(const std::string& path);
std::string serialize_scene(const Scene& s);

// -- minimal JSON value tree for reports ----------------------------------------

class Json {
  public:
    enum class Type { Null, Bool, Number, String, Array, Object };

    Json() : type_(Type::Null) {}
    Json(bool b) : type_(Type::Bool), bool_(b) {}
    Json(double d) : type_(Type::Number), num_(d) {}
    Json(int i) : type_(Type::Number), num_(i) {}
    Json(const char* s) : type_(Type::String), str_(s) {}
    Json(std::string s) : type_(Type::String), str_(std::move(s)) {}

    static Json array();
    static Json object();

    Json& push_back(Json v);
    Json& set(const std::string& key, Json v);

    /// Serialization with %.17g numbers, stable key order (insertion order).
    std::string dump(int indent = 0) const;

  private:
    Type type_;
    bool bool_ = false;
    double num_ = 0.0;
    std::string str_;
    std::vector<Json> arr_;
    std::vector<std::pair<std::string, Json>> obj_;
    void dump_to(std::string& out, int indent, int depth) const;
};

Json vec_to_json(const Vec& v);

/// Writes text atomically (temp file in the same directory, then rename).
void write_file_atomic(const std::string& path, const std::string& text);

}  // namespace ballpoly::io
