#include "sievekit/json_io.hpp"

#include "sievekit/errors.hpp"

namespace sievekit {

json int_to_json(const Int& v) {
    static const Int lo = std::numeric_limits<int64_t>::min();
    static const Int hi = std::numeric_limits<int64_t>::max();
    if (v >= lo && v <= hi) return v.convert_to<int64_t>();
    return v.str();
}

Int int_from_json(const json& j) {
    if (j.is_string()) return Int(j.get<std::string>());
    if (j.is_number_integer()) return Int(j.get<int64_t>());
    throw InvalidInputError("int_from_json: expected integer or decimal string");
}

json to_json(const IntPoly& p) {
    json coeffs = json::array();
    for (const Int& c : p.coeffs()) coeffs.push_back(int_to_json(c));
    return json{{"coeffs", coeffs}};
}

IntPoly intpoly_from_json(const json& j) {
    std::vector<Int> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(int_from_json(c));
    return IntPoly(std::move(coeffs));
}

json to_json(const CycInt& z) {
    json coeffs = json::array();
    for (const Int& c : z.coeffs()) coeffs.push_back(int_to_json(c));
    return json{{"order", z.order()}, {"coeffs", coeffs}};
}

CycInt cycint_from_json(const json& j) {
    std::vector<Int> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(int_from_json(c));
    return CycInt(j.at("order").get<long>(), std::move(coeffs));
}

json to_json(const QExpr& e) {
    return json{{"scalar", int_to_json(e.scalar())},
                {"qpower", e.qpower()},
                {"num", e.num()},
                {"den", e.den()}};
}

QExpr qexpr_from_json(const json& j) {
    return QExpr(int_from_json(j.at("scalar")), j.at("qpower").get<long>(),
                 j.at("num").get<std::vector<long>>(), j.at("den").get<std::vector<long>>());
}

json to_json(const Dissection& T) {
    json diags = json::array();
    for (auto [a, b] : T.diagonals) diags.push_back(json::array({a, b}));
    return json{{"n", T.n}, {"diagonals", diags}};
}

Dissection dissection_from_json(const json& j) {
    std::vector<Diagonal> diags;
    for (const auto& d : j.at("diagonals")) diags.emplace_back(d.at(0).get<int>(), d.at(1).get<int>());
    return Dissection(j.at("n").get<int>(), std::move(diags));
}

json to_json(const PuncturedDissection& T) {
    json sectors = json::array();
    for (const Dissection& s : T.sectors) sectors.push_back(to_json(s));
    return json{{"n", T.n}, {"m", T.m}, {"spokes", T.spokes}, {"sectors", sectors}};
}

PuncturedDissection punctured_from_json(const json& j) {
    std::vector<Dissection> sectors;
    for (const auto& s : j.at("sectors")) sectors.push_back(dissection_from_json(s));
    return PuncturedDissection(j.at("n").get<int>(), j.at("m").get<int>(),
                               j.at("spokes").get<std::vector<int>>(), std::move(sectors));
}

json frieze_to_json(const FriezePattern& F) {
    json quid = json::array(), rows = json::array();
    for (const CycInt& c : F.quiddity().entries) quid.push_back(to_json(c));
    for (long k = 0; k <= F.width(); ++k) {
        json row = json::array();
        for (long i = 0; i < F.width(); ++i) row.push_back(to_json(F.value(i, i + k)));
        rows.push_back(row);
    }
    return json{{"width", F.width()},
                {"ring", F.quiddity().ring_order()},
                {"quiddity", quid},
                {"rows", rows}};
}

json frieze_to_json(const InfiniteFrieze& F, long rows_wanted) {
    json quid = json::array(), rows = json::array();
    for (const CycInt& c : F.quiddity().entries) quid.push_back(to_json(c));
    for (long k = 0; k < rows_wanted; ++k) {
        json row = json::array();
        for (long i = 0; i < F.period(); ++i) row.push_back(to_json(F.value(i, i + k)));
        rows.push_back(row);
    }
    return json{{"period", F.period()},
                {"ring", F.quiddity().ring_order()},
                {"quiddity", quid},
                {"rows", rows}};
}

json to_json(const CspReport& rep) {
    json divs = json::array();
    for (const auto& r : rep.divisors)
        divs.push_back(json{{"d", r.d},
                            {"eval", int_to_json(r.eval)},
                            {"fixed", int_to_json(r.fixed)},
                            {"match", r.match}});
    json census = json::object();
    for (const auto& [stab, cnt] : rep.orbit_census) census[std::to_string(stab)] = cnt;
    json out{{"size_match", rep.size_match},
             {"divisors", divs},
             {"orbit_census", census},
             {"all_match", rep.all_match()},
             {"coefficients_checked", rep.coefficients_checked}};
    if (rep.coefficients_checked) {
        out["coefficients_match"] = rep.coefficients_match;
        json coeffs = json::array();
        for (const Int& c : rep.reduced_coefficients) coeffs.push_back(int_to_json(c));
        out["reduced_coefficients"] = coeffs;
    }
    return out;
}

} // namespace sievekit
