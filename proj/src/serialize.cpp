#include "whittaker/serialize.hpp"

#include "whittaker/errors.hpp"

namespace whittaker {

using nlohmann::ordered_json;

namespace {

ordered_json poly_terms(const MultiPoly& p, const std::vector<int>& slots) {
  ordered_json arr = ordered_json::array();
  for (const auto& t : p.terms()) {
    ordered_json exps = ordered_json::array();
    for (int s : slots) exps.push_back(t.mono.exp(s));
    arr.push_back(ordered_json::array({exps, to_string(t.coeff)}));
  }
  return arr;
}

MultiPoly poly_from_terms(const ordered_json& arr, const std::vector<int>& slots) {
  std::vector<MultiPoly::Term> terms;
  for (const auto& t : arr) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_array() || t[0].size() != slots.size())
      throw ParseError("malformed polynomial term");
    Monomial m;
    for (std::size_t i = 0; i < slots.size(); ++i) {
      const unsigned e = t[0][i].get<unsigned>();
      if (e) m = m * Monomial::var(slots[i], e);
    }
    terms.push_back({m, parse_rational(t[1].get<std::string>())});
  }
  return MultiPoly::from_terms(std::move(terms));
}

ordered_json laurent_terms(const QLaurent& p) {
  ordered_json arr = ordered_json::array();
  for (const auto& t : p.terms()) arr.push_back(ordered_json::array({to_string(t.exp), to_string(t.coeff)}));
  return arr;
}

QLaurent laurent_from_terms(const ordered_json& arr) {
  std::vector<QLaurent::Term> terms;
  for (const auto& t : arr) {
    if (!t.is_array() || t.size() != 2) throw ParseError("malformed q-Laurent term");
    terms.push_back({parse_rational(t[0].get<std::string>()), parse_rational(t[1].get<std::string>())});
  }
  return QLaurent::from_terms(std::move(terms));
}

}  // namespace

ordered_json to_json(const RatFunc& f) {
  const std::uint32_t support = f.num().support() | f.den().support();
  std::vector<int> slots;
  ordered_json vars = ordered_json::array();
  for (int s = 0; s < Monomial::kSlots; ++s)
    if (support & (1u << s)) {
      slots.push_back(s);
      vars.push_back(var_name(s));
    }
  ordered_json j;
  j["vars"] = vars;
  j["num"] = poly_terms(f.num(), slots);
  j["den"] = poly_terms(f.den(), slots);
  return j;
}

RatFunc ratfunc_from_json(const ordered_json& j) {
  try {
    std::vector<int> slots;
    for (const auto& v : j.at("vars")) {
      const int s = var_slot(v.get<std::string>());
      if (s < 0) throw ParseError("unknown variable " + v.get<std::string>());
      slots.push_back(s);
    }
    return RatFunc(poly_from_terms(j.at("num"), slots), poly_from_terms(j.at("den"), slots));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
}

ordered_json to_json(const QRatFunc& f) {
  ordered_json j;
  j["num"] = laurent_terms(f.num());
  j["den"] = laurent_terms(f.den());
  return j;
}

QRatFunc qratfunc_from_json(const ordered_json& j) {
  try {
    return QRatFunc(laurent_from_terms(j.at("num")), laurent_from_terms(j.at("den")));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
}

}  // namespace whittaker
