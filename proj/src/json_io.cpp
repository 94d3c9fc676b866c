#include "cliffop/json_io.hpp"

namespace cliffop {

Json to_json(const RMulti& m) {
  Json terms = Json::array();
  for (const auto& [mask, coeff] : m.terms()) {
    Json blade = Json::array();
    for (int j = 1; j <= m.signature().n(); ++j)
      if (mask & (BladeMask{1} << (j - 1))) blade.push_back(j);
    terms.push_back({{"blade", blade}, {"coeff", rational_to_string(coeff)}});
  }
  return Json{{"signature", {m.signature().p, m.signature().q}}, {"terms", terms}};
}

RMulti multivector_from_json(const Json& j) {
  Signature sig(j.at("signature").at(0).get<int>(), j.at("signature").at(1).get<int>());
  RMulti m(sig);
  for (const auto& term : j.at("terms")) {
    BladeMask mask = 0;
    int prev = 0;
    for (const auto& idx : term.at("blade")) {
      int v = idx.get<int>();
      if (v <= prev || v > sig.n()) throw Error("blade indices must be strictly increasing");
      prev = v;
      mask |= BladeMask{1} << (v - 1);
    }
    m += RMulti::blade(sig, mask, parse_rational(term.at("coeff").get<std::string>()));
  }
  return m;
}

Json to_json(const RPoly& p, const Rational& envelope) {
  Json terms = Json::array();
  for (const auto& [alpha, coeff] : p.terms()) {
    Json exps = Json::array();
    for (unsigned e : alpha) exps.push_back(e);
    terms.push_back({{"exponents", exps}, {"multivector", to_json(coeff)}});
  }
  return Json{{"n", p.vars()},
              {"signature", {p.signature().p, p.signature().q}},
              {"envelope", rational_to_string(envelope)},
              {"terms", terms}};
}

Json to_json(const RWeighted& f) { return to_json(f.poly, f.envelope); }

RWeighted weighted_from_json(const Json& j) {
  int n = j.at("n").get<int>();
  Signature sig(j.at("signature").at(0).get<int>(), j.at("signature").at(1).get<int>());
  Rational envelope(0);
  if (j.contains("envelope")) envelope = parse_rational(j.at("envelope").get<std::string>());
  RPoly poly(n, sig);
  for (const auto& term : j.at("terms")) {
    MultiIndex alpha;
    for (const auto& e : term.at("exponents")) alpha.push_back(e.get<unsigned>());
    poly.add_term(alpha, multivector_from_json(term.at("multivector")));
  }
  return RWeighted(envelope, poly);
}

RPoly poly_from_json(const Json& j) {
  RWeighted f = weighted_from_json(j);
  if (!cliffop::is_zero(f.envelope)) throw Error("expected a polynomial with envelope 0");
  return f.poly;
}

Json to_json(const HermiteState& state) {
  return Json{{"k", state.k},
              {"raw", to_json(state.raw)},
              {"norm_sq", rational_to_string(state.norm_sq)},
              {"u_scale", rational_to_string(state.u_scale)},
              {"lowering_coeff", rational_to_string(state.lowering_coeff)}};
}

Json to_json(const MaxwellSolution& sol) {
  return Json{{"n", sol.n},
              {"s", sol.s},
              {"monogenic_seed", sol.monogenic_seed},
              {"rho_sq", rational_to_string(sol.rho_sq)},
              {"seed", to_json(sol.seed)},
              {"cosh_part", to_json(sol.cosh_part)},
              // sinh part = rho * sinh_rho_part; serialized as the rho cofactor.
              {"sinh_part_rho_coeff", to_json(sol.sinh_rho_part)}};
}

Json identity_report_json(const IdentityReport& report) {
  Json j{{"expr", report.expr},
         {"tag", report.tag},
         {"n", report.n},
         {"bound", report.bound},
         {"verdict", report.zero ? "zero" : "nonzero"}};
  if (report.witness) {
    Json exps = Json::array();
    for (unsigned e : report.witness->exponents) exps.push_back(e);
    Json blade = Json::array();
    for (int j2 = 0; j2 < kMaxDimension; ++j2)
      if (report.witness->blade & (BladeMask{1} << j2)) blade.push_back(j2 + 1);
    j["witness"] = Json{{"exponents", exps}, {"blade", blade}, {"image", report.witness->image}};
  }
  return j;
}

}  // namespace cliffop
