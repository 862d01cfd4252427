#pragma once

#include <json.hpp>

#include "sievekit/csp.hpp"
#include "sievekit/cycint.hpp"
#include "sievekit/dissect.hpp"
#include "sievekit/frieze.hpp"
#include "sievekit/intpoly.hpp"
#include "sievekit/punctured.hpp"
#include "sievekit/qexpr.hpp"

namespace sievekit {

using json = nlohmann::json;

// big integers serialize as numbers when they fit in int64, strings otherwise
json int_to_json(const Int& v);
Int int_from_json(const json& j);

json to_json(const IntPoly& p);       // {"coeffs": [...]}
IntPoly intpoly_from_json(const json& j);

json to_json(const CycInt& z);        // {"order": M, "coeffs": [...]}
CycInt cycint_from_json(const json& j);

json to_json(const QExpr& e);         // {"scalar": s, "qpower": e, "num": [...], "den": [...]}
QExpr qexpr_from_json(const json& j);

json to_json(const Dissection& T);    // {"n": N, "diagonals": [[i, j], ...]}
Dissection dissection_from_json(const json& j);

json to_json(const PuncturedDissection& T); // {"n":N,"m":M,"spokes":[...],"sectors":[...]}
PuncturedDissection punctured_from_json(const json& j);

// {"width": n, "ring": M, "quiddity": [...], "rows": [[...], ...]}
json frieze_to_json(const FriezePattern& F);
json frieze_to_json(const InfiniteFrieze& F, long rows);

json to_json(const CspReport& rep);

} // namespace sievekit
