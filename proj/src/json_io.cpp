#include "qhx/json_io.hpp"

#include <charconv>

namespace qhx::jsonio {

std::string format_double(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

namespace {

double scalar_from_json(const Json& j) {
    if (j.is_number()) return j.get<double>();
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        // Accept both decimal strings and exact "p/q" forms.
        if (auto slash = s.find('/'); slash != std::string::npos) {
            Rational r = Rational::parse(s);
            return r.to_double();
        }
        size_t pos = 0;
        double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("bad numeric string: " + s);
        return v;
    }
    throw std::invalid_argument("expected a number or numeric string");
}

Json complex_json(std::complex<double> c) { return Json::array({c.real(), c.imag()}); }

std::complex<double> complex_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2) throw std::invalid_argument("expected [re, im]");
    return {scalar_from_json(j[0]), scalar_from_json(j[1])};
}

} // namespace

Json to_json(const Quat& q) {
    return Json{{"x0", format_double(q.x0)},
                {"x1", format_double(q.x1)},
                {"x2", format_double(q.x2)},
                {"x3", format_double(q.x3)}};
}

Json to_json(const QuatQ& q) {
    return Json{{"x0", q.x0.to_string()},
                {"x1", q.x1.to_string()},
                {"x2", q.x2.to_string()},
                {"x3", q.x3.to_string()}};
}

Quat quat_from_json(const Json& j) {
    if (!j.is_object()) throw std::invalid_argument("quaternion: expected an object");
    return {scalar_from_json(j.at("x0")), scalar_from_json(j.at("x1")),
            scalar_from_json(j.at("x2")), scalar_from_json(j.at("x3"))};
}

Json to_json(const matgroup::Mat3& m) {
    Json rows = Json::array();
    for (int r = 0; r < 3; ++r) {
        Json row = Json::array();
        for (int c = 0; c < 3; ++c) row.push_back(complex_json(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return Json{{"rows", std::move(rows)}};
}

matgroup::Mat3 mat3_from_json(const Json& j) {
    const Json& rows = j.at("rows");
    if (!rows.is_array() || rows.size() != 3) throw std::invalid_argument("matrix: expected 3 rows");
    matgroup::Mat3 m;
    for (int r = 0; r < 3; ++r) {
        if (!rows[r].is_array() || rows[r].size() != 3)
            throw std::invalid_argument("matrix: expected 3 columns");
        for (int c = 0; c < 3; ++c) m.at(r, c) = complex_from_json(rows[r][c]);
    }
    return m;
}

Json to_json(const matgroup::GroupElement& g) {
    Json j = to_json(g.to_mat3());
    j["t_z"] = complex_json(g.t_z);
    j["t_zeta"] = complex_json(g.t_zeta);
    return j;
}

Json to_json(const matgroup::SubgroupClassification& c) {
    Json flags = Json::array();
    if (c.general_x) flags.push_back("GeneralX");
    if (c.moebius) flags.push_back("Moebius");
    if (c.heisenberg) flags.push_back("Heisenberg");
    if (c.heisenberg_tilde) flags.push_back("HeisenbergTilde");
    if (c.qht) flags.push_back("QHT");
    if (c.unimodular) flags.push_back("Unimodular");
    return Json{{"flags", std::move(flags)}};
}

Json to_json(const QhtTransform<double>& t) {
    return Json{{"u", to_json(t.u)}, {"v", to_json(t.v)}};
}

QhtTransform<double> transform_from_json(const Json& j) {
    return {quat_from_json(j.at("u")), quat_from_json(j.at("v"))};
}

Json to_json(const FixedPointResult<double>& r) {
    Json j{{"kind", to_string(r.kind)}};
    if (r.finite_point) j["finite_point"] = to_json(*r.finite_point);
    return j;
}

Json to_json(const holo::HolomorphyVerdict& v) {
    return Json{{"class", holo::to_string(v.cls)},
                {"max_residual", format_double(v.max_residual)},
                {"worst_point", to_json(v.worst_point)}};
}

Json to_json(const mobius::ExtendedComplex& z) {
    if (z.infinite) return Json("inf");
    return complex_json(z.value);
}

mobius::ExtendedComplex extended_from_json(const Json& j) {
    if (j.is_string() && j.get<std::string>() == "inf") return mobius::ExtendedComplex::inf();
    return {complex_from_json(j)};
}

Json coeff_map_json(symop::Catalog c, const symop::CoeffMap& m) {
    Json out = Json::object();
    for (const auto& [k, v] : m) out[symop::basis_symbol(c, k)] = v.to_string();
    return out;
}

Json to_json(const symop::CommutatorTable& t) {
    Json pairs = Json::array();
    for (const auto& [pair, coeffs] : t.entries)
        pairs.push_back(Json{{"i", pair.first},
                             {"j", pair.second},
                             {"result", coeff_map_json(t.catalog, coeffs)}});
    return Json{{"catalog", symop::catalog_name(t.catalog)}, {"pairs", std::move(pairs)}};
}

Json to_json(const symop::DiscrepancyReport& r, symop::Catalog symbols) {
    Json pairs = Json::array();
    for (const auto& e : r.entries)
        pairs.push_back(Json{{"i", e.i},
                             {"j", e.j},
                             {"computed", coeff_map_json(symbols, e.computed)},
                             {"reference", coeff_map_json(symbols, e.reference)},
                             {"match", e.match}});
    Json j{{"catalog", r.catalog},
           {"matches", r.match_count()},
           {"total", r.entries.size()},
           {"pairs", std::move(pairs)}};
    if (!r.notes.empty()) j["notes"] = r.notes;
    return j;
}

} // namespace qhx::jsonio
