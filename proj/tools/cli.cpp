#include "cli.hpp"

#include <CLI11.hpp>
#include <iostream>
#include <map>
#include <sstream>

#include "sympdec/error.hpp"
#include "sympdec/homotopy_tables.hpp"
#include "sympdec/induced_maps.hpp"
#include "sympdec/json_io.hpp"
#include "sympdec/lifting.hpp"
#include "sympdec/verify.hpp"

namespace sympdec::cli {

namespace {

using json = nlohmann::json;
namespace ind = sympdec::induced;
namespace lift = sympdec::lifting;

enum class Output { Human, Json };

struct Options {
  Output output = Output::Json;
  std::uint64_t seed = 0;

  std::string family;
  std::string space = "group";

  std::string op;
  long m = 1;
  long n = 1;
  long i = 0;
  long r = 1;
  std::optional<long> u;
  std::optional<long> v;
  std::string z = "unknown";

  std::string kind;
  long dim = 0;

  std::string suite = "all";
  std::optional<long> samples;
  std::optional<long> max_m;
  std::optional<long> max_n;
  std::optional<long> max_r;
  std::optional<long> only_sample;
  bool timing = false;
};

void emit(std::ostream& out, Output mode, const json& j, const std::string& human) {
  if (mode == Output::Json) {
    out << j.dump(2) << '\n';
  } else {
    out << human;
  }
}

std::string hom_text(const ind::AbHom& h) {
  std::ostringstream os;
  const auto parts = [](const std::vector<ind::Component>& cs) {
    std::string s;
    for (std::size_t k = 0; k < cs.size(); ++k) {
      if (k) s += " x ";
      s += cs[k].label + " = " + (cs[k].torsion_unknown ? "finite" : cs[k].group.to_string());
    }
    return s;
  };
  os << "source: " << parts(h.source_parts) << '\n';
  os << "target: " << parts(h.target_parts) << '\n';
  os << "matrix: " << h.matrix.to_string() << '\n';
  os << "formula: " << h.provenance << '\n';
  os << "valid: " << h.valid_range << '\n';
  return os.str();
}

json hom_with_verdicts(const ind::AbHom& h) {
  json j = json_io::hom(h);
  j["surjective"] = ind::is_surjective(h);
  try {
    const bool inj = ind::is_injective(h);
    j["injective"] = inj;
    j["isomorphism"] = inj && j["surjective"].get<bool>();
  } catch (const Error&) {
    j["injective"] = nullptr;
    j["isomorphism"] = nullptr;
  }
  try {
    j["image"] = json_io::image(ind::image_description(h));
  } catch (const Error&) {
    j["image"] = nullptr;
  }
  return j;
}

ind::ZValue parse_z(const std::string& z) {
  if (z == "0") return ind::ZValue::Zero;
  if (z == "1") return ind::ZValue::One;
  if (z == "unknown") return ind::ZValue::Unknown;
  throw CLI::ValidationError("--z", "must be 0, 1 or unknown");
}

int cmd_pi(const Options& o, std::ostream& out) {
  const auto fam = homotopy::parse_family(o.family);
  if (!fam) throw CLI::ValidationError("--family", "unknown family '" + o.family + "'");
  homotopy::GroupQuery q{*fam, o.n, o.i,
                         o.space == "classifying" ? homotopy::Space::Classifying
                                                  : homotopy::Space::Group};
  const auto a = homotopy::lookup(q);
  json j = json_io::table_answer(a);
  j["query"] = {{"family", homotopy::to_string(*fam)}, {"n", o.n}, {"i", o.i}, {"space", o.space}};
  std::string text;
  switch (a.kind) {
    case homotopy::TableAnswer::Kind::Group: text = a.group.to_string(); break;
    case homotopy::TableAnswer::Kind::TorsionOnly: text = "torsion-only"; break;
    case homotopy::TableAnswer::Kind::OutOfRange: text = "out-of-range"; break;
  }
  emit(out, o.output, j, text + "\n  " + a.provenance + (a.asserted ? " [asserted]" : "") + "\n");
  return 0;
}

int cmd_induced(const Options& o, std::ostream& out) {
  std::vector<ind::AbHom> homs;
  std::vector<int> zs;
  const auto witness = [&]() -> std::pair<long, long> {
    if (o.u && o.v) return {*o.u, *o.v};
    if (o.u || o.v) throw CLI::ValidationError("--u/--v", "give both or neither");
    const auto w = lift::bezout_uv(o.m, o.n);
    return {w.u, w.v};
  };
  if (o.op == "direct-sum") {
    homs.push_back(ind::hom_direct_sum(o.i, o.m, o.n));
  } else if (o.op == "r-fold") {
    homs.push_back(ind::hom_r_fold(o.i, o.n, o.r));
  } else if (o.op == "doubling") {
    homs.push_back(ind::hom_doubling(o.i, o.n));
  } else if (o.op == "tensor-sp-o") {
    homs.push_back(ind::hom_tensor_sp_o(o.i, o.m, o.n));
  } else if (o.op == "tensor-quotient") {
    homs.push_back(ind::hom_tensor_quotient(o.i, o.m, o.n));
  } else if (o.op == "tensor-sp-sp") {
    homs.push_back(ind::hom_tensor_sp_sp(o.i, o.m, o.n));
  } else if (o.op == "square-tensor") {
    homs.push_back(ind::hom_square_tensor(o.i, o.m));
  } else if (o.op == "ttilde" || o.op == "J") {
    const auto [u, v] = witness();
    const auto z = parse_z(o.z);
    homs = o.op == "J" ? ind::hom_J_candidates(o.i, o.m, o.n, u, v, z)
                       : ind::hom_Ttilde_candidates(o.i, o.m, o.n, u, v, z);
    const bool z_matters = o.op == "J" ? o.i == 2 : o.i == 1;
    for (int zv : z_matters ? ind::z_values(z) : std::vector<int>{}) zs.push_back(zv);
  } else {
    throw CLI::ValidationError("op", "unknown operation '" + o.op + "'");
  }
  if (homs.size() == 1) {
    json j = hom_with_verdicts(homs[0]);
    if (zs.size() == 1) j["z"] = zs[0];
    std::string text = hom_text(homs[0]);
    text += std::string("isomorphism: ") + (j["isomorphism"].is_null() ? "undetermined"
                                           : j["isomorphism"].get<bool>() ? "yes" : "no") +
            "\n";
    emit(out, o.output, j, text);
    return 0;
  }
  json cands = json::array();
  std::string text;
  std::optional<bool> iso_all;
  bool z_sensitive = false;
  for (std::size_t k = 0; k < homs.size(); ++k) {
    json j = hom_with_verdicts(homs[k]);
    j["z"] = zs.at(k);
    const json iso = j["isomorphism"];
    if (!iso.is_null()) {
      if (iso_all && *iso_all != iso.get<bool>()) z_sensitive = true;
      iso_all = iso.get<bool>();
    }
    text += "z = " + std::to_string(zs[k]) + "\n" + hom_text(homs[k]) + "isomorphism: " +
            (iso.is_null() ? "undetermined" : iso.get<bool>() ? "yes" : "no") + "\n";
    cands.push_back(std::move(j));
  }
  json j;
  j["candidates"] = std::move(cands);
  j["z_sensitive"] = z_sensitive;
  text += std::string("z-sensitive: ") + (z_sensitive ? "yes" : "no") + "\n";
  emit(out, o.output, j, text);
  return 0;
}

std::string decision_text(const lift::DecisionReport& r) {
  std::ostringstream os;
  os << "verdict: " << lift::to_string(r.verdict) << '\n';
  os << "theorem: " << r.theorem << '\n';
  for (const auto& h : r.hypotheses) os << "  [" << (h.holds ? "x" : " ") << "] " << h.name << '\n';
  if (r.witness) {
    os << "witness: u=" << r.witness->u << " v=" << r.witness->v << " N=" << r.witness->N << '\n';
  }
  if (r.connectivity) os << "J connectivity: " << *r.connectivity << '\n';
  if (r.factors) os << "factors: " << r.factors->first << "; " << r.factors->second << '\n';
  if (r.obstruction) {
    os << "obstruction: degree " << r.obstruction->degree << ", image "
       << r.obstruction->image.to_string() << '\n';
  }
  if (r.postnikov) os << "postnikov degrees: " << (r.postnikov->pass ? "pass" : "FAIL") << '\n';
  for (const auto& note : r.notes) os << "note: " << note << '\n';
  return os.str();
}

int cmd_decide(const Options& o, std::ostream& out) {
  lift::DecisionReport r;
  if (o.kind == "azumaya") {
    r = lift::decide_azumaya(o.m, o.n, o.dim);
  } else if (o.kind == "bundle") {
    r = lift::decide_bundle(o.m, o.n, o.dim);
  } else {
    throw CLI::ValidationError("kind", "must be azumaya or bundle");
  }
  emit(out, o.output, json_io::decision(r), decision_text(r));
  return 0;
}

int cmd_obstruction(const Options& o, std::ostream& out) {
  lift::NoSectionCase kind;
  if (o.kind == "sphere_4m+4") {
    kind = lift::NoSectionCase::SphereTop;
  } else if (o.kind == "sphere_C") {
    kind = lift::NoSectionCase::SphereC;
  } else {
    throw CLI::ValidationError("kind", "must be sphere_4m+4 or sphere_C");
  }
  const auto r = lift::example_obstruction(kind, o.m, o.n);
  emit(out, o.output, json_io::decision(r), decision_text(r));
  return 0;
}

int cmd_bezout(const Options& o, std::ostream& out) {
  const auto w = lift::bezout_uv(o.m, o.n);
  std::ostringstream os;
  os << "u=" << w.u << " v=" << w.v << " sign=" << w.sign << " N=" << w.N << '\n';
  emit(out, o.output, json_io::bezout(w), os.str());
  return 0;
}

int cmd_connectivity(const Options& o, std::ostream& out) {
  const long c = lift::connectivity_J(o.m, o.n);
  emit(out, o.output, {{"m", o.m}, {"n", o.n}, {"connectivity", c}},
       "J is " + std::to_string(c) + "-connected\n");
  return 0;
}

int cmd_postnikov(const Options& o, std::ostream& out) {
  const auto r = lift::postnikov_degree_check(o.m, o.n);
  std::ostringstream os;
  for (const auto& e : r.entries) {
    os << "i=" << e.i << " degree " << e.degree << (e.pass ? " ok" : " FAIL") << '\n';
  }
  os << "k1 stage degree " << r.k1_degree << " (reported separately)\n";
  os << (r.pass ? "pass" : "FAIL") << '\n';
  emit(out, o.output, json_io::postnikov(r), os.str());
  return r.pass ? 0 : 1;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const auto suite = verify::parse_suite(o.suite);
  if (!suite) throw CLI::ValidationError("suite", "unknown suite '" + o.suite + "'");
  verify::VerifyConfig cfg;
  cfg.suite = *suite;
  cfg.seed = o.seed;
  cfg.samples = o.samples;
  cfg.max_m = o.max_m;
  cfg.max_n = o.max_n;
  cfg.max_r = o.max_r;
  cfg.only_sample = o.only_sample;
  cfg.timing = o.timing;
  const auto reports = verify::run(cfg);
  std::ostringstream os;
  std::size_t failures = 0;
  for (const auto& r : reports) {
    os << r.suite << ": " << r.cases << " cases, " << r.failures.size() << " failures";
    if (r.elapsed_ms) os << ", " << *r.elapsed_ms << " ms";
    os << '\n';
    for (const auto& f : r.failures) {
      os << "  FAIL " << f.check;
      for (const auto& [k, v] : f.params) os << ' ' << k << '=' << v;
      if (f.sample) os << " sample=" << *f.sample;
      os << ": " << f.message << '\n';
    }
    failures += r.failures.size();
  }
  json j = json_io::verify_reports(reports);
  j["seed"] = std::to_string(o.seed);
  emit(out, o.output, j, os.str());
  return failures == 0 ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"sympdec: symplectic decomposition toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  std::string output = "json";
  app.add_option("--output", output, "human or json")
      ->check(CLI::IsMember({"human", "json"}))
      ->capture_default_str();
  app.add_option("--seed", o.seed, "seed for randomized suites")->envname("SYMPDEC_SEED");

  auto* pi = app.add_subcommand("pi", "homotopy group lookup");
  pi->add_option("--family", o.family, "sp, psp, o, so, u, gl")->required();
  pi->add_option("--n", o.n, "size parameter")->required();
  pi->add_option("--i", o.i, "degree")->required();
  pi->add_option("--space", o.space, "group or classifying")
      ->check(CLI::IsMember({"group", "classifying"}));

  auto* induced = app.add_subcommand("induced", "induced map on homotopy groups");
  induced->add_option("op", o.op,
                      "direct-sum, r-fold, doubling, tensor-sp-o, tensor-quotient, "
                      "tensor-sp-sp, square-tensor, ttilde, J")
      ->required();
  induced->add_option("--m", o.m, "first size parameter");
  induced->add_option("--n", o.n, "second size parameter");
  induced->add_option("--i", o.i, "degree")->required();
  induced->add_option("--r", o.r, "fold count for r-fold");
  induced->add_option("--u", o.u, "Bezout u (default: minimal witness)");
  induced->add_option("--v", o.v, "Bezout v (default: minimal witness)");
  induced->add_option("--z", o.z, "0, 1 or unknown");

  auto* decide = app.add_subcommand("decide", "decomposability decision");
  decide->add_option("kind", o.kind, "azumaya or bundle")->required();
  decide->add_option("--m", o.m)->required();
  decide->add_option("--n", o.n)->required();
  decide->add_option("--dim", o.dim, "dimension of the base")->required();

  auto* obstruction = app.add_subcommand("obstruction", "sphere example without decomposition");
  obstruction->add_option("kind", o.kind, "sphere_4m+4 or sphere_C")->required();
  obstruction->add_option("--m", o.m)->required();
  obstruction->add_option("--n", o.n)->required();

  auto* bezout = app.add_subcommand("bezout", "minimal u, v with |vn - 4um^2| = 1");
  bezout->add_option("--m", o.m)->required();
  bezout->add_option("--n", o.n)->required();

  auto* connectivity = app.add_subcommand("connectivity", "connectivity of J");
  connectivity->add_option("--m", o.m)->required();
  connectivity->add_option("--n", o.n)->required();

  auto* postnikov = app.add_subcommand("postnikov", "obstruction degree bookkeeping");
  postnikov->add_option("--m", o.m);
  postnikov->add_option("--n", o.n)->required();

  auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
  verify_cmd->add_option("suite", o.suite,
                         "closure, lemmas, mixed-product, center, formulas, bezout, J-iso, all");
  verify_cmd->add_option("--samples", o.samples);
  verify_cmd->add_option("--max-m", o.max_m);
  verify_cmd->add_option("--max-n", o.max_n);
  verify_cmd->add_option("--max-r", o.max_r);
  verify_cmd->add_option("--only-sample", o.only_sample, "replay a single sample index");
  verify_cmd->add_flag("--timing", o.timing, "include elapsed_ms");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  o.output = output == "human" ? Output::Human : Output::Json;

  const std::map<CLI::App*, int (*)(const Options&, std::ostream&)> commands = {
      {pi, cmd_pi},
      {induced, cmd_induced},
      {decide, cmd_decide},
      {obstruction, cmd_obstruction},
      {bezout, cmd_bezout},
      {connectivity, cmd_connectivity},
      {postnikov, cmd_postnikov},
      {verify_cmd, cmd_verify},
  };
  try {
    for (const auto& [sub, fn] : commands) {
      if (sub->parsed()) return fn(o, out);
    }
    return 2;
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    if (o.output == Output::Json) {
      out << json{{"error", std::string(to_string(e.kind()))}, {"message", e.what()}}.dump(2)
          << '\n';
    }
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return 2;
  }
}

}  // namespace sympdec::cli
