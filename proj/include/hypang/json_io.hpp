#pragma once

// JSON documents exchanged by the command-line tool. Numbers are written with
// shortest round-trip precision, so a written document reads back bit-exact.

#include <json.hpp>

#include <string>
#include <vector>

#include "hypang/embed.hpp"
#include "hypang/hyperelliptic.hpp"
#include "hypang/polygon.hpp"
#include "hypang/teich.hpp"

namespace hypang
{

using Json = nlohmann::json;

namespace detail
{

inline const Json& field(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key)) {
        throw Error(ErrorCode::MalformedInput, std::string("missing field \"") + key + "\"");
    }
    return j.at(key);
}

inline int genus_field(const Json& j)
{
    const Json& g = field(j, "genus");
    if (!g.is_number_integer()) {
        throw Error(ErrorCode::MalformedInput, "genus must be an integer");
    }
    return g.get<int>();
}

inline std::vector<double> real_array(const Json& j, const char* key)
{
    const Json& a = field(j, key);
    if (!a.is_array()) {
        throw Error(ErrorCode::MalformedInput, std::string(key) + " must be an array");
    }
    std::vector<double> out;
    for (const Json& x : a) {
        if (!x.is_number()) {
            throw Error(ErrorCode::MalformedInput, std::string(key) + " must hold numbers");
        }
        out.push_back(x.get<double>());
    }
    return out;
}

}  // namespace detail

inline Json to_json(const CanonicalPolygon& p)
{
    return Json{{"genus", p.genus}, {"sides", p.sides}, {"angles", p.angles}};
}

inline CanonicalPolygon polygon_from_json(const Json& j)
{
    CanonicalPolygon p;
    p.genus = detail::genus_field(j);
    p.sides = detail::real_array(j, "sides");
    p.angles = detail::real_array(j, "angles");
    p.check_shape();
    return p;
}

enum class ThetaKind { Teich, Hyperelliptic };

/** @brief Either chart's coordinates, as read from or written to a theta document */
struct ThetaDocument {
    ThetaKind kind{ThetaKind::Teich};
    int genus{0};
    std::vector<Angle> theta;

    TeichParams teich() const { return {genus, theta}; }
    HyperParams hyper() const { return {genus, theta}; }
};

inline Json to_json(const ThetaDocument& d)
{
    return Json{{"genus", d.genus},
                {"kind", d.kind == ThetaKind::Teich ? "teich" : "hyperelliptic"},
                {"theta", d.theta}};
}

inline ThetaDocument theta_from_json(const Json& j)
{
    ThetaDocument d;
    d.genus = detail::genus_field(j);
    const Json& k = detail::field(j, "kind");
    if (k == "teich") {
        d.kind = ThetaKind::Teich;
    } else if (k == "hyperelliptic") {
        d.kind = ThetaKind::Hyperelliptic;
    } else {
        throw Error(ErrorCode::MalformedInput, "kind must be \"teich\" or \"hyperelliptic\"");
    }
    d.theta = detail::real_array(j, "theta");
    const int want = d.kind == ThetaKind::Teich ? TeichParams::size_for(d.genus)
                                                : HyperParams::size_for(d.genus);
    if (d.genus < 2 || static_cast<int>(d.theta.size()) != want) {
        throw Error(ErrorCode::MalformedInput, "theta has the wrong length for its genus");
    }
    return d;
}

inline Json to_json(const PlanePolygon& pp)
{
    Json v = Json::array();
    for (const PlanePoint& q : pp.vertices) {
        v.push_back({q.x, q.y});
    }
    return Json{{"model", to_string(pp.model)}, {"vertices", v}};
}

inline PlanePolygon vertices_from_json(const Json& j, int genus)
{
    PlanePolygon pp;
    pp.genus = genus;
    const Json& m = detail::field(j, "model");
    if (m == "halfplane") {
        pp.model = Model::HalfPlane;
    } else if (m == "disk") {
        pp.model = Model::Disk;
    } else {
        throw Error(ErrorCode::MalformedInput, "model must be \"halfplane\" or \"disk\"");
    }
    const Json& v = detail::field(j, "vertices");
    if (!v.is_array() || static_cast<int>(v.size()) != 4 * genus) {
        throw Error(ErrorCode::MalformedInput, "expected 4g vertices");
    }
    for (const Json& q : v) {
        if (!q.is_array() || q.size() != 2 || !q[0].is_number() || !q[1].is_number()) {
            throw Error(ErrorCode::MalformedInput, "vertex must be [x, y]");
        }
        pp.vertices.push_back({pp.model, q[0].get<double>(), q[1].get<double>()});
    }
    return pp;
}

inline Json generators_to_json(const std::vector<Isometry>& gens)
{
    Json list = Json::array();
    for (const Isometry& t : gens) {
        list.push_back({{"matrix", {t.m11, t.m12, t.m21, t.m22}},
                        {"trace", t.trace()},
                        {"class", to_string(classify(t))}});
    }
    return Json{{"generators", list}, {"relation_defect", relation_defect(gens)}};
}

inline Json to_json(const ValidationReport& r)
{
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        checks.push_back({{"name", c.name}, {"pass", c.pass}, {"residual", c.residual}});
    }
    return Json{{"ok", r.ok()}, {"checks", checks}};
}

}  // namespace hypang
