#include "polylab/json_io.hpp"

#include <sstream>

namespace polylab {

Json to_json(const Dyadic& d) { return Json{{"num", d.num()}, {"exp", d.exp()}}; }

Dyadic dyadic_from_json(const Json& j) {
    return Dyadic::frac(j.at("num").get<long long>(), j.at("exp").get<int>());
}

Json to_json(const TorusInterval& iv) {
    return Json{{"left", to_json(iv.left)}, {"len_exp", iv.level}};
}

TorusInterval interval_from_json(const Json& j) {
    return TorusInterval(dyadic_from_json(j.at("left")), j.at("len_exp").get<int>());
}

Json to_json(const TorusRectangle& r) {
    return Json{{"x", to_json(r.x)}, {"y", to_json(r.y)}};
}

TorusRectangle rect_from_json(const Json& j) {
    return TorusRectangle(interval_from_json(j.at("x")), interval_from_json(j.at("y")));
}

Json to_json(const Quilt& q) {
    Json rects = Json::array();
    for (const auto& r : q.rects) rects.push_back(to_json(r));
    Json out{{"rects", std::move(rects)}, {"equiareal", q.equiareal}};
    if (q.common_area) out["common_area"] = to_json(*q.common_area);
    return out;
}

Quilt quilt_from_json(const Json& j) {
    Quilt q;
    for (const auto& r : j.at("rects")) q.rects.push_back(rect_from_json(r));
    q.equiareal = j.value("equiareal", false);
    if (j.contains("common_area")) q.common_area = dyadic_from_json(j.at("common_area"));
    return q;
}

Json to_json(const QuiltReport& r) {
    Json out{{"is_quilt", r.is_quilt},
             {"is_equiareal", r.is_equiareal},
             {"total_mass", to_json(r.total_mass)},
             {"total_union_area", to_json(r.total_union_area)},
             {"total_union_area_value", r.total_union_area.to_double()},
             {"worst_packing_ratio", r.worst_packing_ratio}};
    if (!r.error.empty()) out["error"] = r.error;
    return out;
}

Json to_json(const BlockReport& r) {
    Json out{{"index", r.index},
             {"eps", to_json(r.eps)},
             {"scale", r.scale},
             {"rects", r.rect_count},
             {"points", r.point_count},
             {"gamma", r.gamma},
             {"delta", r.delta},
             {"t_star", r.t_star},
             {"cert_bound", r.cert_bound},
             {"cert_dev", r.cert_dev},
             {"one_box_sup", r.one_box},
             {"open_set_ratio", r.open_set_ratio},
             {"ratio_at_least_m", r.ratio_at_least_m},
             {"interp_C_p2", r.interp_C_p2},
             {"interp_C_p1", r.interp_C_p1},
             {"max_ratio_p2", r.max_ratio_p2},
             {"max_ratio_p1", r.max_ratio_p1},
             {"max_residual", r.max_residual}};
    if (!r.error.empty()) out["error"] = r.error;
    return out;
}

Json to_json(const AssemblyReport& r) {
    Json blocks = Json::array();
    for (const auto& b : r.blocks) blocks.push_back(to_json(b));
    Json global{{"sigma_invariant", r.global.sigma_invariant},
                {"gamma", r.global.gamma},
                {"delta", r.global.delta},
                {"max_cross_gram", r.global.max_cross_gram},
                {"cross_gram_bound", r.global.cross_gram_bound},
                {"corona_delta_est", r.global.corona_delta_est},
                {"cross_power_chi", r.global.cross_power_chi},
                {"p2_residual", r.global.p2_residual},
                {"p2_C", r.global.p2_C},
                {"p2_bound", r.global.p2_bound},
                {"p1_residual", r.global.p1_residual},
                {"p1_C", r.global.p1_C},
                {"p1_bound", r.global.p1_bound},
                {"block_C_spread_p2", r.global.block_C_spread_p2},
                {"points", r.global.point_count}};
    Json out{{"seed", r.seed}, {"blocks", std::move(blocks)}, {"global", std::move(global)},
             {"all_ok", r.all_ok}};
    if (!r.failure.empty()) out["failure"] = r.failure;
    return out;
}

Dyadic parse_dyadic(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        try {
            size_t pos = 0;
            long long v = std::stoll(text, &pos);
            if (pos != text.size()) throw std::invalid_argument("");
            return Dyadic(v);
        } catch (...) {
            throw std::invalid_argument("not a dyadic rational: " + text);
        }
    }
    long long num = std::stoll(text.substr(0, slash));
    long long den = std::stoll(text.substr(slash + 1));
    if (den <= 0 || (den & (den - 1)) != 0)
        throw std::invalid_argument("denominator must be a power of two: " + text);
    int e = 0;
    while ((1LL << e) < den) ++e;
    return Dyadic::frac(num, e);
}

std::string assembly_csv(const AssemblyReport& r) {
    std::ostringstream os;
    os << "block,eps,scale,points,gamma,delta,one_box,open_set_ratio,interp_C_p2,interp_C_p1\n";
    for (const auto& b : r.blocks) {
        os << b.index << ',' << b.eps.to_double() << ',' << b.scale << ',' << b.point_count << ','
           << b.gamma << ',' << b.delta << ',' << b.one_box << ',' << b.open_set_ratio << ','
           << b.interp_C_p2 << ',' << b.interp_C_p1 << '\n';
    }
    return os.str();
}

}  // namespace polylab
