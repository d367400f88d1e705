#include "wdeg/report.hpp"

namespace wdeg {

Json to_json(const Gamma& g) {
  if (g.levels() == 1) return g[0];
  Json out = Json::array();
  for (std::int64_t v : g.values()) out.push_back(v);
  return out;
}

Json to_json(const Degree& d) {
  if (d.is_minus_infinity()) return "-inf";
  return to_json(d.value());
}

Json to_json(const Quantity& q) {
  if (const auto* d = std::get_if<Degree>(&q)) return to_json(*d);
  return std::get<std::int64_t>(q);
}

Json to_json(const IneqReport& report) {
  Json out;
  out["name"] = report.name;
  out["lhs"] = to_json(report.lhs);
  out["rhs"] = to_json(report.rhs);
  out["holds"] = report.holds;
  out["degenerate"] = report.degenerate;
  Json inter = Json::object();
  for (const auto& [key, value] : report.intermediates) inter[key] = to_json(value);
  out["intermediates"] = std::move(inter);
  Json polys = Json::object();
  for (const auto& [key, text] : report.polynomials) polys[key] = text;
  out["polynomials"] = std::move(polys);
  Json checks = Json::object();
  for (const auto& [key, ok] : report.side_checks) checks[key] = ok;
  out["side_checks"] = std::move(checks);
  out["verdict"] = report.verdict();
  return out;
}

Json to_json(const PlaneBoundResult& result) {
  Json out = to_json(result.report);
  out["applicable"] = result.applicable;
  out["divisibility"] = result.divisibility;
  out["verdict"] = result.verdict();
  return out;
}

}  // namespace wdeg
