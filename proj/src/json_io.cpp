#include "sympdec/json_io.hpp"

#include <limits>

namespace sympdec::json_io {

json integer(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() &&
      x <= std::numeric_limits<std::int64_t>::max()) {
    return x.convert_to<std::int64_t>();
  }
  return x.str();
}

json group(const FgAbGroup& g) {
  json out = json::array();
  for (const auto& k : g.orders()) out.push_back(integer(k));
  return out;
}

json table_answer(const homotopy::TableAnswer& a) {
  using Kind = homotopy::TableAnswer::Kind;
  json out;
  switch (a.kind) {
    case Kind::Group:
      out["group"] = group(a.group);
      out["group_text"] = a.group.to_string();
      break;
    case Kind::TorsionOnly: out["group"] = "torsion-only"; break;
    case Kind::OutOfRange: out["group"] = "out-of-range"; break;
  }
  out["provenance"] = a.provenance;
  out["asserted"] = a.asserted;
  return out;
}

namespace {

json components(const std::vector<induced::Component>& parts) {
  json out = json::array();
  for (const auto& c : parts) {
    json j;
    j["label"] = c.label;
    j["group"] = group(c.group);
    j["group_text"] = c.torsion_unknown ? std::string("finite (untabulated)") : c.group.to_string();
    j["torsion_unknown"] = c.torsion_unknown;
    out.push_back(std::move(j));
  }
  return out;
}

}  // namespace

json hom(const induced::AbHom& h) {
  json out;
  out["source"] = components(h.source_parts);
  out["target"] = components(h.target_parts);
  json rows = json::array();
  for (std::size_t r = 0; r < h.matrix.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < h.matrix.cols(); ++c) row.push_back(integer(h.matrix(r, c)));
    rows.push_back(std::move(row));
  }
  out["matrix"] = std::move(rows);
  out["valid_range"] = h.valid_range;
  out["provenance"] = h.provenance;
  return out;
}

json image(const induced::ImageDescriptor& d) {
  json out;
  out["cokernel"] = group(d.cokernel);
  out["surjective"] = d.surjective;
  out["description"] = d.to_string();
  out["cyclic_index"] = d.cyclic_index ? integer(*d.cyclic_index) : json(nullptr);
  return out;
}

json bezout(const lifting::BezoutWitness& w) {
  return {{"m", w.m}, {"n", w.n}, {"u", w.u}, {"v", w.v}, {"sign", w.sign}, {"N", w.N}};
}

json no_section(const lifting::NoSectionWitness& w) {
  json out;
  out["degree"] = w.degree;
  out["case"] = w.which == lifting::NoSectionCase::SphereTop ? "sphere_4m+4" : "sphere_C";
  out["hom"] = hom(w.hom);
  out["image"] = image(w.image);
  return out;
}

json postnikov(const lifting::PostnikovReport& r) {
  json out;
  out["m"] = r.m;
  out["n"] = r.n;
  out["k1_degree"] = r.k1_degree;
  out["pass"] = r.pass;
  json entries = json::array();
  for (const auto& e : r.entries) {
    entries.push_back({{"i", e.i}, {"degree", e.degree}, {"pass", e.pass}});
  }
  out["entries"] = std::move(entries);
  return out;
}

json decision(const lifting::DecisionReport& r) {
  json out;
  out["verdict"] = lifting::to_string(r.verdict);
  out["theorem"] = r.theorem;
  json hyps = json::array();
  for (const auto& h : r.hypotheses) hyps.push_back({{"name", h.name}, {"holds", h.holds}});
  out["hypotheses"] = std::move(hyps);
  out["failing_hypothesis"] = r.failing_hypothesis ? json(*r.failing_hypothesis) : json(nullptr);
  out["witness"] = r.witness ? bezout(*r.witness) : json(nullptr);
  out["connectivity"] = r.connectivity ? json(*r.connectivity) : json(nullptr);
  out["obstruction"] = r.obstruction ? no_section(*r.obstruction) : json(nullptr);
  out["factors"] = r.factors ? json::array({r.factors->first, r.factors->second}) : json(nullptr);
  out["postnikov"] = r.postnikov ? postnikov(*r.postnikov) : json(nullptr);
  out["notes"] = r.notes;
  return out;
}

json verify_report(const verify::VerifyReport& r) {
  json out;
  out["suite"] = r.suite;
  out["seed"] = std::to_string(r.seed);
  out["samples"] = r.samples;
  out["bounds"] = {{"max_m", r.max_m}, {"max_n", r.max_n}, {"max_r", r.max_r}};
  out["cases"] = r.cases;
  json failures = json::array();
  for (const auto& f : r.failures) {
    json j;
    j["check"] = f.check;
    json params = json::object();
    for (const auto& [k, v] : f.params) params[k] = v;
    j["params"] = std::move(params);
    j["sample"] = f.sample ? json(*f.sample) : json(nullptr);
    j["sample_seed"] = f.sample_seed ? json(std::to_string(*f.sample_seed)) : json(nullptr);
    j["message"] = f.message;
    failures.push_back(std::move(j));
  }
  out["failures"] = std::move(failures);
  if (r.elapsed_ms) out["elapsed_ms"] = *r.elapsed_ms;
  return out;
}

json verify_reports(const std::vector<verify::VerifyReport>& reports) {
  json out;
  json suites = json::array();
  std::size_t total = 0;
  long cases = 0;
  for (const auto& r : reports) {
    suites.push_back(verify_report(r));
    total += r.failures.size();
    cases += r.cases;
  }
  out["suites"] = std::move(suites);
  out["cases"] = cases;
  out["failures"] = total;
  out["ok"] = total == 0;
  return out;
}

}  // namespace sympdec::json_io
