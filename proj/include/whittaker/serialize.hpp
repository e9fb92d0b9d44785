#pragma once

#include <json.hpp>

#include "whittaker/qlaurent.hpp"
#include "whittaker/ratfunc.hpp"

namespace whittaker {

// {"vars":["l1","eps"],"num":[[[e1,e2],"c"],...],"den":[...]}
nlohmann::ordered_json to_json(const RatFunc& f);
RatFunc ratfunc_from_json(const nlohmann::ordered_json& j);

// {"num":[["e","c"],...],"den":[...]} with exponents and coefficients as "p/q".
nlohmann::ordered_json to_json(const QRatFunc& f);
QRatFunc qratfunc_from_json(const nlohmann::ordered_json& j);

}  // namespace whittaker
