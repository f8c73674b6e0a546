#include "qmap/serialize.h"

#include <cmath>

#include "qmap/errors.h"

namespace qmap {

namespace {

nlohmann::json num(double v) {
    if (!std::isfinite(v)) {
        return nullptr;
    }
    return v;
}

cplx cplx_from_json(const nlohmann::json &j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw InvalidParams("expected a complex number as [re, im]");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

nlohmann::json to_json(cplx z) {
    return nlohmann::json::array({num(z.real()), num(z.imag())});
}

nlohmann::json to_json(const MapParams &p) {
    return {
        {"a", {{num(p.a11), num(p.a12)}, {num(p.a21), num(p.a22)}}},
        {"lambda", to_json(p.lambda)},
        {"mu", to_json(p.mu)},
    };
}

nlohmann::json to_json(const ChoiMatrix &c) {
    nlohmann::json rows = nlohmann::json::array();
    for (size_t r = 0; r < 4; r++) {
        nlohmann::json row = nlohmann::json::array();
        for (size_t k = 0; k < 4; k++) {
            row.push_back(to_json(c.m(r, k)));
        }
        rows.push_back(row);
    }
    return rows;
}

nlohmann::json to_json(const Classification &c) {
    return {
        {"positive", c.positive},
        {"schwarz", c.schwarz},
        {"completely_positive", c.completely_positive},
        {"unital", c.unital},
        {"margins",
         {
             {"positive", num(c.margins.positive)},
             {"schwarz", num(c.margins.schwarz)},
             {"completely_positive", num(c.margins.completely_positive)},
         }},
    };
}

nlohmann::json to_json(const VolumeEstimate &v) {
    return {
        {"n", v.n},
        {"seed", v.seed},
        {"counts", {{"positive", v.counts.positive}, {"schwarz", v.counts.schwarz}, {"cp", v.counts.cp}}},
        {"v_pos", num(v.v_pos)},
        {"v_schwarz", num(v.v_schwarz)},
        {"v_cp", num(v.v_cp)},
        {"stderr", {{"pos", num(v.stderr_pos)}, {"schwarz", num(v.stderr_schwarz)}, {"cp", num(v.stderr_cp)}}},
    };
}

nlohmann::json to_json(const AgreementReport &r) {
    nlohmann::json dis = nlohmann::json::array();
    for (const auto &d : r.disagreements) {
        dis.push_back({
            {"index", d.index},
            {"check", d.check},
            {"params", to_json(d.params)},
            {"analytic", d.analytic},
            {"oracle", d.oracle},
            {"oracle_value", num(d.oracle_value)},
        });
    }
    return {
        {"sweep", std::string(to_string(r.kind))},
        {"n", r.n},
        {"seed", r.seed},
        {"budget", r.budget},
        {"excluded_near_boundary", r.excluded_near_boundary},
        {"checked", r.checked},
        {"counts", {{"positive", r.positive}, {"schwarz", r.schwarz}, {"completely_positive", r.completely_positive}}},
        {"disagreements", dis},
    };
}

MapParams map_params_from_json(const nlohmann::json &j) {
    try {
        const auto &a = j.at("a");
        if (!a.is_array() || a.size() != 2 || a[0].size() != 2 || a[1].size() != 2) {
            throw InvalidParams("\"a\" must be a 2x2 array");
        }
        return {a[0][0].get<double>(), a[0][1].get<double>(), a[1][0].get<double>(), a[1][1].get<double>(),
                cplx_from_json(j.at("lambda")), cplx_from_json(j.at("mu"))};
    } catch (const nlohmann::json::exception &e) {
        throw InvalidParams(std::string("malformed map parameters: ") + e.what());
    }
}

}  // namespace qmap
