#pragma once

#include <json.hpp>

#include "qgw/finhopf.hpp"
#include "qgw/parse.hpp"

namespace qgw {

using nlohmann::json;

namespace detail {
inline std::string scalar_to_string(const Rat& v) { return qgw::to_string(v); }
inline std::string scalar_to_string(const ScalarQ& v) { return v.to_string(); }
inline void scalar_from_string(const std::string& s, Rat& out) { out = parse_rat(s); }
inline void scalar_from_string(const std::string& s, ScalarQ& out) { out = parse_scalar(s); }

template <class F>
json tensor3_to_json(const Tensor3<F>& t) {
    json out = json::array();
    for (std::size_t i = 0; i < t.n1; ++i) {
        json plane = json::array();
        for (std::size_t j = 0; j < t.n2; ++j) {
            json row = json::array();
            for (std::size_t k = 0; k < t.n3; ++k) row.push_back(scalar_to_string(t.at(i, j, k)));
            plane.push_back(std::move(row));
        }
        out.push_back(std::move(plane));
    }
    return out;
}

template <class F>
Tensor3<F> tensor3_from_json(const json& j, std::size_t n) {
    Tensor3<F> t(n, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t k = 0; k < n; ++k)
                scalar_from_string(j.at(i).at(x).at(k).get<std::string>(), t.at(i, x, k));
    return t;
}
} // namespace detail

template <class F>
constexpr const char* scalar_kind_name() {
    if constexpr (std::is_same_v<F, Rat>) return "rational";
    else return "scalarq";
}

template <class F>
json hopf_to_json(const FinHopf<F>& h) {
    json out;
    out["dim"] = h.dim;
    out["scalars"] = scalar_kind_name<F>();
    out["mult"] = detail::tensor3_to_json(h.mult);
    out["comult"] = detail::tensor3_to_json(h.comult);
    json unit = json::array(), counit = json::array(), antipode = json::array();
    for (const auto& v : h.unit) unit.push_back(detail::scalar_to_string(v));
    for (const auto& v : h.counit) counit.push_back(detail::scalar_to_string(v));
    for (const auto& row : h.antipode) {
        json r = json::array();
        for (const auto& v : row) r.push_back(detail::scalar_to_string(v));
        antipode.push_back(std::move(r));
    }
    out["unit"] = std::move(unit);
    out["counit"] = std::move(counit);
    out["antipode"] = std::move(antipode);
    return out;
}

inline std::string hopf_scalar_kind(const json& j) { return j.value("scalars", "rational"); }

template <class F>
FinHopf<F> hopf_from_json(const json& j) {
    if (hopf_scalar_kind(j) != scalar_kind_name<F>())
        throw DomainError("FinHopf document has scalar kind '" + hopf_scalar_kind(j) + "'");
    FinHopf<F> h;
    h.dim = j.at("dim").get<std::size_t>();
    h.mult = detail::tensor3_from_json<F>(j.at("mult"), h.dim);
    h.comult = detail::tensor3_from_json<F>(j.at("comult"), h.dim);
    h.unit.resize(h.dim);
    h.counit.resize(h.dim);
    for (std::size_t i = 0; i < h.dim; ++i) {
        detail::scalar_from_string(j.at("unit").at(i).get<std::string>(), h.unit[i]);
        detail::scalar_from_string(j.at("counit").at(i).get<std::string>(), h.counit[i]);
    }
    h.antipode.assign(h.dim, std::vector<F>(h.dim));
    for (std::size_t i = 0; i < h.dim; ++i)
        for (std::size_t k = 0; k < h.dim; ++k)
            detail::scalar_from_string(j.at("antipode").at(i).at(k).get<std::string>(), h.antipode[i][k]);
    return h;
}

} // namespace qgw
