#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "sdb/axioms.hpp"
#include "sdb/classifier.hpp"
#include "sdb/errors.hpp"
#include "sdb/families.hpp"
#include "sdb/json_io.hpp"
#include "sdb/knot.hpp"
#include "sdb/quandle.hpp"

namespace sdb::cli {

namespace {

struct Options {
  std::string command;
  std::string in, pd, quandle, expect;
  int type = 0;
  std::uint32_t p = 0;
  bool pretty = false;
  std::set<std::string> given;
};

// Facts a command can be asked to confirm via --expect, and its defaults.
struct CommandSpec {
  std::set<std::string> options;
  std::set<std::string> facts;
  std::vector<std::string> default_expect;
};

const std::map<std::string, CommandSpec>& commands() {
  static const std::map<std::string, CommandSpec> table = {
      {"check",
       {{"--in", "--expect"},
        {"associative", "coassociative", "cocommutative", "counital", "non-counital", "unital", "non-unital",
         "consistency", "sd", "cube-zero", "sd-algebra", "rack", "non-rack"},
        {}}},
      {"classify", {{"--p", "--type", "--expect"}, {"complete", "dual-catalog"}, {"complete"}}},
      {"audit", {{"--p", "--type", "--expect"}, {"sound", "complete"}, {"sound"}}},
      {"idempotents",
       {{"--in", "--expect"}, {"only-zero", "quandle-direct", "quandle-opposite", "non-rack-carrier"}, {}}},
      {"quandles", {{"--quandle", "--p", "--expect"}, {"quandle", "rack", "bialgebra"}, {}}},
      {"color", {{"--pd", "--quandle"}, {}, {}}},
      {"families", {{"--type", "--p", "--expect"}, {"sound"}, {}}},
  };
  return table;
}

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError(path + ": cannot read file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json load_json(const std::string& path) {
  try {
    return parse_json(read_file(path), path);
  } catch (const input_error& e) {
    throw UsageError(e.what());
  }
}

// Re-raises input problems with the file path attached.
template <class F>
auto with_path(const std::string& path, F&& f) {
  try {
    return f();
  } catch (const UsageError&) {
    throw;
  } catch (const sdb::error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

void require(const Options& o, const std::string& option) {
  if (!o.given.count(option)) throw UsageError(o.command + ": " + option + " is required");
}

void validate_desk_prime(std::uint32_t p) {
  if (p == 2 || p == 3 || p == 5) return;
  if (!is_prime_number(p)) throw UsageError("--p " + std::to_string(p) + ": not a prime");
  const double tensors = std::pow(static_cast<double>(p), 8.0);
  std::ostringstream msg;
  msg << "--p " << p << " refused: the scan covers " << std::fixed << std::setprecision(0) << tensors
      << " tensors, " << std::setprecision(1) << tensors / 390625.0 << "x the p=5 run; use 2, 3 or 5";
  throw UsageError(msg.str());
}

void validate_type(int type) {
  if (type < 1 || type > 5) throw UsageError("--type must be 1..5");
}

Field load_prime(const Options& o) {
  if (!o.given.count("--p")) return Field::rational();
  try {
    return Field::prime(o.p);
  } catch (const field_error& e) {
    throw UsageError(std::string("--p: ") + e.what());
  }
}

using Facts = std::map<std::string, bool>;

struct Outcome {
  Json body;
  Facts facts;
};

Json element_or_null(const std::optional<Element>& e) { return e ? Json(e->render()) : Json(nullptr); }

Json elements(const std::vector<Element>& es) {
  Json out = Json::array();
  for (const auto& e : es) out.push_back(e.render());
  return out;
}

// ---- commands --------------------------------------------------------------

Outcome run_check(const Options& o, const std::set<std::string>& wanted) {
  require(o, "--in");
  const StructureFile s = with_path(o.in, [&] { return structure_from_json(load_json(o.in)); });
  const Algebra& a = s.algebra;
  static const std::set<std::string> needs_comul = {"coassociative", "cocommutative", "counital",
                                                    "non-counital",  "consistency",   "sd"};
  static const std::set<std::string> needs_prime = {"sd-algebra", "rack", "non-rack"};
  for (const auto& f : wanted) {
    if (needs_comul.count(f) && !s.coalgebra) throw UsageError(o.in + ": --expect " + f + " needs \"comul\"");
    if (needs_prime.count(f) && !a.field.is_prime()) {
      throw UsageError(o.in + ": --expect " + f + " needs a prime field, got " + a.field.describe());
    }
  }
  Outcome r;
  Json checks = Json::object();
  const auto record = [&](const char* name, const CheckReport& rep) { checks[name] = report_to_json(rep); };

  const CheckReport assoc = check_associativity(a);
  record("associativity", assoc);
  r.facts["associative"] = assoc.verdict();
  const auto unit = find_unit(a);
  r.facts["unital"] = unit.has_value();
  r.facts["non-unital"] = !unit;
  const CheckReport cube = check_cube_zero(a);
  record("cube_zero", cube);
  r.facts["cube-zero"] = cube.verdict();

  Json counit = nullptr;
  if (s.coalgebra) {
    const Bialgebra b{a, *s.coalgebra};
    with_path(o.in, [&] {
      b.validate();
      return 0;
    });
    const CheckReport coassoc = check_coassociativity(b.coalgebra);
    const CheckReport cocomm = check_cocommutativity(b.coalgebra);
    const CheckReport cons = check_consistency(b);
    const CheckReport sd = check_sd_bialgebra(b);
    record("coassociativity", coassoc);
    record("cocommutativity", cocomm);
    record("consistency", cons);
    record("sd", sd);
    r.facts["coassociative"] = coassoc.verdict();
    r.facts["cocommutative"] = cocomm.verdict();
    r.facts["consistency"] = cons.verdict();
    r.facts["sd"] = sd.verdict();
    const auto eps = find_counit(b.coalgebra);
    r.facts["counital"] = eps.has_value();
    r.facts["non-counital"] = !eps;
    if (eps) {
      counit = Json::array();
      for (const auto& v : *eps) counit.push_back(v.render());
    }
  }

  // Carrier scans are cubic in p^dim; run them when asked or when small.
  const bool small_carrier = a.field.is_prime() && a.dim() <= finite::max_dim &&
                             finite::ipow(a.field.characteristic(), static_cast<std::uint32_t>(a.dim())) <= 125;
  const bool asked = wanted.count("sd-algebra") || wanted.count("rack") || wanted.count("non-rack");
  if (a.field.is_prime() && (small_carrier || asked)) {
    const CheckReport sda = check_sd_algebra_pointwise(a);
    const CheckReport rack = is_rack_carrier(a);
    record("sd_algebra", sda);
    record("rack_carrier", rack);
    r.facts["sd-algebra"] = sda.verdict();
    r.facts["rack"] = rack.verdict();
    r.facts["non-rack"] = !rack.verdict();
  }

  r.body = Json{{"field", field_to_json(a.field)}, {"dim", a.dim()}, {"checks", std::move(checks)}};
  r.body["counit"] = counit;
  r.body["unit"] = element_or_null(unit);
  return r;
}

Outcome run_classify(const Options& o) {
  require(o, "--p");
  Outcome r;
  if (o.given.count("--type")) {
    const auto sols = enumerate_sd_multiplications(o.type, o.p);
    Json list = Json::array();
    for (const auto& t : sols) list.push_back(tensor2_to_json(t));
    r.body = Json{{"type", o.type}, {"p", o.p}, {"count", sols.size()}, {"solutions", std::move(list)}};
    return r;
  }
  const Field field = Field::prime(o.p);
  std::vector<Tensor2> cases;
  for (const auto& t : associative_nonunital_tables(field)) cases.push_back(canonical_form(t));
  Json classes = Json::array();
  bool complete = true;
  for (const auto& cls : enumerate_associative_nonunital(o.p)) {
    Json matches = Json::array();
    for (std::size_t i = 0; i < cases.size(); ++i) {
      if (cases[i] == cls.canonical) matches.push_back(i + 1);
    }
    complete = complete && !matches.empty();
    classes.push_back(Json{{"canonical", tensor2_to_json(cls.canonical)},
                           {"representative", tensor2_to_json(cls.representative)},
                           {"orbit_size", cls.orbit_size},
                           {"members", cls.members},
                           {"cases", std::move(matches)}});
  }
  Json duals = Json::array();
  bool dual_ok = true;
  for (const auto& d : dualization_report(o.p)) {
    dual_ok = dual_ok && d.matches_expected();
    Json g = d.basis_change ? Json(*d.basis_change) : Json(nullptr);
    duals.push_back(Json{{"case", d.algebra_case},
                         {"expected_type", d.expected_type},
                         {"matched_type", d.matched_type ? Json(*d.matched_type) : Json(nullptr)},
                         {"basis_change", std::move(g)},
                         {"dual", tensor2_to_json(finite::to_tensor2(finite::FpTensor::from_coalgebra(d.dual)))}});
  }
  r.facts["complete"] = complete;
  r.facts["dual-catalog"] = dual_ok;
  r.body = Json{{"p", o.p}, {"classes", std::move(classes)}, {"complete", complete}, {"dualization", std::move(duals)}};
  return r;
}

Outcome run_audit(const Options& o) {
  require(o, "--p");
  require(o, "--type");
  const AuditReport a = verify_family_completeness(o.type, o.p);
  return {audit_to_json(a), {{"sound", a.sound}, {"complete", a.missing_from_families.empty()}}};
}

Outcome run_idempotents(const Options& o) {
  require(o, "--in");
  const StructureFile s = with_path(o.in, [&] { return structure_from_json(load_json(o.in)); });
  if (!s.algebra.field.is_prime()) {
    throw UsageError(o.in + ": idempotent search enumerates the carrier and needs a prime field, got " +
                     s.algebra.field.describe());
  }
  const auto rep = with_path(o.in, [&] { return idempotent_quandle_report(s.algebra); });
  const CheckReport carrier = is_rack_carrier(s.algebra);
  Outcome r;
  r.body = Json{{"idempotents", elements(rep.idempotents)},
                {"nonzero", elements(rep.nonzero)},
                {"direct", orientation_to_json(rep.direct)},
                {"opposite", orientation_to_json(rep.opposite)},
                {"carrier_rack", report_to_json(carrier)}};
  r.facts["only-zero"] = rep.nonzero.empty();
  r.facts["quandle-direct"] = rep.direct.closed && rep.direct.quandle.verdict();
  r.facts["quandle-opposite"] = rep.opposite.closed && rep.opposite.quandle.verdict();
  r.facts["non-rack-carrier"] = !carrier.verdict();
  return r;
}

Json ring_checks(const CayleyTable& q, const Field& field, bool& ok) {
  const Bialgebra b{quandle_ring(q, field), group_like_coalgebra(field, q.order())};
  const CheckReport cons = check_consistency(b);
  const CheckReport sd = check_sd_bialgebra(b);
  const auto eps = find_counit(b.coalgebra);
  const bool ones = eps && std::all_of(eps->begin(), eps->end(), [](const Scalar& v) { return v.is_one(); });
  ok = cons.verdict() && sd.verdict() && ones;
  Json counit = nullptr;
  if (eps) {
    counit = Json::array();
    for (const auto& v : *eps) counit.push_back(v.render());
  }
  return Json{{"consistency", report_to_json(cons)}, {"sd", report_to_json(sd)}, {"counit", counit}};
}

Outcome run_quandles(const Options& o) {
  const Field field = load_prime(o);
  Outcome r;
  if (o.given.count("--quandle")) {
    const CayleyTable q = with_path(o.quandle, [&] { return quandle_from_json(load_json(o.quandle)); });
    const CheckReport qr = is_quandle(q);
    const CheckReport rr = is_rack(q);
    bool ring_ok = false;
    r.body = Json{{"field", field_to_json(field)},
                  {"quandle", report_to_json(qr)},
                  {"rack", report_to_json(rr)},
                  {"ring", ring_checks(q, field, ring_ok)}};
    r.facts = {{"quandle", qr.verdict()}, {"rack", rr.verdict()}, {"bialgebra", ring_ok}};
    return r;
  }
  Json list = Json::array();
  bool all_ok = true;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const auto& q : enumerate_quandles(n)) {
      bool ok = false;
      Json entry = quandle_to_json(q);
      entry["ring"] = ring_checks(q, field, ok);
      all_ok = all_ok && ok;
      list.push_back(std::move(entry));
    }
  }
  r.body = Json{{"field", field_to_json(field)}, {"count", list.size()}, {"quandles", std::move(list)}};
  r.facts = {{"quandle", true}, {"rack", true}, {"bialgebra", all_ok}};
  return r;
}

Outcome run_color(const Options& o) {
  require(o, "--pd");
  require(o, "--quandle");
  const PDCode pd = with_path(o.pd, [&] { return parse_pd(read_file(o.pd)); });
  const CayleyTable q = with_path(o.quandle, [&] { return quandle_from_json(load_json(o.quandle)); });
  const Diagram d(pd);
  const auto count = with_path(o.quandle, [&] { return count_colorings(d, q); });
  return {Json{{"colorings", count}}, {}};
}

Outcome run_families(const Options& o) {
  const bool points = o.given.count("--p") > 0;
  Json list = Json::array();
  bool all_ok = true;
  for (const auto& f : family_catalog()) {
    if (o.given.count("--type") && f.comul_type != o.type) continue;
    const Bialgebra b = symbolic_bialgebra(f);
    const CheckReport cons = check_consistency(b);
    const CheckReport sd = check_sd_bialgebra(b);
    const bool non_counital = !find_counit(b.coalgebra);
    bool ok = cons.verdict() && sd.verdict() && non_counital;
    Json loci = Json::array();
    for (const auto& poly : f.nonzero) loci.push_back(poly.render(f.parameters()));
    Json entry{{"label", f.label},
               {"type", f.comul_type},
               {"parameters", f.parameters()},
               {"nonzero", std::move(loci)},
               {"mul", structure_to_json(f.mul)["mul"]},
               {"consistency", report_to_json(cons)},
               {"sd", report_to_json(sd)},
               {"non_counital", non_counital}};
    if (points) {
      std::size_t instances = 0, failures = 0;
      for (const auto& inst : admissible_instances(f, o.p)) {
        ++instances;
        const bool good = check_consistency(inst.bialgebra).verdict() &&
                          check_sd_bialgebra(inst.bialgebra).verdict() && !find_counit(inst.bialgebra.coalgebra);
        failures += !good;
      }
      entry["instances"] = instances;
      entry["failing_instances"] = failures;
      ok = ok && failures == 0;
    }
    all_ok = all_ok && ok;
    list.push_back(std::move(entry));
  }
  Json body{{"families", std::move(list)}};
  if (points) body["p"] = o.p;
  return {std::move(body), {{"sound", all_ok}}};
}

}  // namespace

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Self-distributive bialgebra toolkit", "sdbialg"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  Options o;
  auto* in_opt = app.add_option("--in", o.in, "structure JSON file");
  auto* type_opt = app.add_option("--type", o.type, "comultiplication type 1..5");
  auto* p_opt = app.add_option("--p", o.p, "prime 2, 3 or 5");
  auto* pd_opt = app.add_option("--pd", o.pd, "PD-code JSON file");
  auto* q_opt = app.add_option("--quandle", o.quandle, "quandle JSON file");
  auto* expect_opt = app.add_option("--expect", o.expect, "comma-separated facts that must hold");
  app.add_flag("--pretty", o.pretty, "indent the JSON report");
  for (const auto& [name, spec] : commands()) app.add_subcommand(name, "");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "sdbialg: " << e.what() << "\n";
    return 2;
  }

  try {
    o.command = app.get_subcommands().front()->get_name();
    const std::vector<std::pair<CLI::Option*, std::string>> opts = {
        {in_opt, "--in"}, {type_opt, "--type"}, {p_opt, "--p"}, {pd_opt, "--pd"}, {q_opt, "--quandle"},
        {expect_opt, "--expect"}};
    const CommandSpec& spec = commands().at(o.command);
    for (const auto& [opt, name] : opts) {
      if (opt->count() == 0) continue;
      if (!spec.options.count(name)) throw UsageError(o.command + ": " + name + " does not apply");
      o.given.insert(name);
    }
    if (o.given.count("--type")) validate_type(o.type);
    if (o.given.count("--p") && o.command != "quandles") validate_desk_prime(o.p);
    std::vector<std::string> wanted = o.given.count("--expect") ? split_list(o.expect) : spec.default_expect;
    // The per-type solution listing has no facts to confirm.
    if (o.command == "classify" && o.given.count("--type")) {
      if (o.given.count("--expect")) throw UsageError("classify: --expect does not apply with --type");
      wanted.clear();
    }
    for (const auto& f : wanted) {
      if (!spec.facts.count(f)) throw UsageError(o.command + ": unknown --expect item '" + f + "'");
    }
    const std::set<std::string> wanted_set(wanted.begin(), wanted.end());

    Outcome r;
    if (o.command == "check") r = run_check(o, wanted_set);
    else if (o.command == "classify") r = run_classify(o);
    else if (o.command == "audit") r = run_audit(o);
    else if (o.command == "idempotents") r = run_idempotents(o);
    else if (o.command == "quandles") r = run_quandles(o);
    else if (o.command == "color") r = run_color(o);
    else r = run_families(o);

    bool ok = true;
    if (!wanted.empty()) {
      Json expectations = Json::object();
      for (const auto& f : wanted) {
        const auto it = r.facts.find(f);
        const bool holds = it != r.facts.end() && it->second;
        expectations[f] = holds;
        ok = ok && holds;
      }
      r.body["expectations"] = std::move(expectations);
    }
    out << (o.pretty ? r.body.dump(2) : r.body.dump()) << "\n";
    return ok ? 0 : 1;
  } catch (const UsageError& e) {
    err << "sdbialg: " << e.what() << "\n";
    return 2;
  } catch (const sdb::error& e) {
    err << "sdbialg: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace sdb::cli
