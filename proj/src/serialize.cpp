#include "spbaw/serialize.hpp"

namespace spbaw {

json json_of(const FieldContext& ctx) {
  return {{"p", ctx.p}, {"f", ctx.f}, {"q", ctx.q}, {"ell", ctx.ell}, {"e", ctx.e}, {"epsilon", ctx.epsilon}};
}

json json_of(const FqPoly& g) { return json(g.coeffs()); }

json json_of(const PolyClass& c) {
  const bool f0 = c.family() == Family::F0;
  return {{"coeffs", json_of(c.gamma())},
          {"family", to_string(c.family())},
          {"delta", f0 ? json(nullptr) : json(c.delta())},
          {"sign", f0 ? json(nullptr) : json(c.sign())},
          {"eGamma", c.e_gamma()},
          {"betaGamma", c.beta()}};
}

json json_of(const Partition& p) { return json(p); }

json json_of(const LSymbol& s) { return json::array({json(s.first()), json(s.second())}); }

json json_of(const Shape& s) {
  return std::visit([](const auto& v) { return json_of(v); }, s);
}

json json_of(const CoreTower& t) {
  json levels = json::array();
  for (const auto& level : t.levels) {
    json l = json::array();
    for (const auto& p : level) l.push_back(json_of(p));
    levels.push_back(std::move(l));
  }
  return levels;
}

json json_of(const SemisimpleLabel& s) {
  json mult = json::array();
  for (const auto& [c, m] : s.mult) mult.push_back({{"gamma", json_of(c.gamma())}, {"m", m}});
  json out = {{"mult", std::move(mult)}, {"eta_minus", s.eta_minus}};
  out["eta_plus"] = s.eta_plus == 0 ? json(nullptr) : json(s.eta_plus);
  return out;
}

namespace {

json shapes(const std::vector<Shape>& v) {
  json out = json::array();
  for (const auto& s : v) out.push_back(json_of(s));
  return out;
}

}  // namespace

json json_of(const BlockLabel& b) { return {{"s", json_of(b.s)}, {"kappa", shapes(b.kappa)}, {"i", b.i}}; }

json json_of(const IBrLabel& x) { return {{"s", json_of(x.s)}, {"lambda", shapes(x.lambda)}, {"j", x.j}}; }

json json_of(const WeightLabelQ& w) {
  json q = json::array();
  for (const auto& tuple : w.Q) {
    json t = json::array();
    for (const auto& p : tuple) t.push_back(json_of(p));
    q.push_back(std::move(t));
  }
  return {{"block", json_of(w.block)}, {"Q", std::move(q)}};
}

json json_of(const WeightLabelK& w) {
  json k = json::array();
  for (const auto& branches : w.K) {
    json b = json::array();
    for (const auto& t : branches) b.push_back(json_of(t));
    k.push_back(std::move(b));
  }
  return {{"block", json_of(w.block)}, {"K", std::move(k)}};
}

json json_of(const BlockReport& r) {
  return {{"n_ibr", r.n_ibr},
          {"n_weights_Q", r.n_weights_Q},
          {"n_weights_K", r.n_weights_K},
          {"bijective", r.bijective},
          {"inverse_ok", r.inverse_ok},
          {"k_forms_match", r.k_forms_match},
          {"equivariant", r.equivariant}};
}

}  // namespace spbaw
