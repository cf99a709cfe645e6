#include "klnet/json_io.hpp"

namespace klnet {

json int_to_json(const Int& v) {
  static const Int limit = Int(1) << 53;
  if (v <= limit && v >= -limit) return json(v.convert_to<std::int64_t>());
  return json(v.str());
}

Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw std::invalid_argument("expected integer or decimal string");
}

json poly_to_json(const QPoly& p) {
  json out = json::array();
  for (const Int& c : p.coeffs()) out.push_back(int_to_json(c));
  return out;
}

QPoly poly_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial: expected coefficient array");
  std::vector<Int> coeffs;
  for (const json& c : j) coeffs.push_back(int_from_json(c));
  return QPoly(std::move(coeffs));
}

json hecke_to_json(const HeckeElement& h) {
  json terms = json::array();
  for (const auto& [v, p] : h.terms())
    terms.push_back(json{{"perm", to_string(v)}, {"poly", poly_to_json(p)}});
  return json{{"n", h.degree()}, {"terms", std::move(terms)}};
}

HeckeElement hecke_from_json(const json& j) {
  HeckeElement h(j.at("n").get<int>());
  for (const json& term : j.at("terms"))
    h.add_term(parse_permutation(term.at("perm").get<std::string>()),
               poly_from_json(term.at("poly")));
  return h;
}

namespace {

std::vector<Interval> intervals_from_json(const json& j) {
  std::vector<Interval> out;
  for (const json& pair : j) {
    if (!pair.is_array() || pair.size() != 2) throw std::invalid_argument("interval: expected [a,b]");
    out.push_back(Interval{pair[0].get<int>(), pair[1].get<int>()});
  }
  return out;
}

json intervals_to_json(const std::vector<Interval>& intervals) {
  json out = json::array();
  for (Interval iv : intervals) out.push_back(json::array({iv.a, iv.b}));
  return out;
}

}  // namespace

json network_to_json(const StarNetwork& f) {
  return json{{"n", f.n()},
              {"intervals", intervals_to_json(f.intervals())},
              {"condensed", json(f.condensed())}};
}

StarNetwork network_from_json(const json& j) {
  std::vector<bool> condensed;
  if (j.contains("condensed")) condensed = j.at("condensed").get<std::vector<bool>>();
  return StarNetwork::build(j.at("n").get<int>(), intervals_from_json(j.at("intervals")),
                            std::move(condensed));
}

json interval_sequence_to_json(const IntervalSequence& seq) {
  return json{{"n", seq.n}, {"intervals", intervals_to_json(seq.intervals)}};
}

IntervalSequence interval_sequence_from_json(const json& j) {
  return IntervalSequence{j.at("n").get<int>(), intervals_from_json(j.at("intervals"))};
}

json family_to_json(const StarNetwork& f, const PathFamily& pi) {
  json ds = json::array();
  for (const Defect& d : defects(f, pi)) ds.push_back(json::array({d.i, d.j, d.k}));
  return json{{"type", to_string(family_type(f, pi))},
              {"dfct", defect_count(f, pi)},
              {"defects", std::move(ds)},
              {"paths", json(pi.paths)}};
}

PathFamily family_from_json(const json& j) {
  PathFamily pi;
  pi.paths = j.at("paths").get<std::vector<std::vector<int>>>();
  return pi;
}

json phi_trace_to_json(const PhiTrace& t, int defects_before, int defects_after) {
  return json{{"k", t.k},
              {"r", t.r},
              {"s", t.s},
              {"t", t.t},
              {"ell", t.ell},
              {"defects_before", defects_before},
              {"defects_after", defects_after}};
}

json factorization_result_to_json(const FactorizationResult& r) {
  json out;
  switch (r.status) {
    case SearchStatus::kFound:
      out["status"] = "Found";
      out["sequence"] = interval_sequence_to_json(*r.sequence);
      out["overlap"] = poly_to_json(r.overlap);
      break;
    case SearchStatus::kNotFoundWithinBound:
      out["status"] = "NotFoundWithinBound";
      out["bound"] = r.bound;
      break;
    case SearchStatus::kProvedImpossible:
      out["status"] = "ProvedImpossible";
      out["gap"] = r.gap;
      break;
  }
  out["searched"] = r.searched;
  return out;
}

}  // namespace klnet
