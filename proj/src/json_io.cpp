#include "sdb/json_io.hpp"

#include "sdb/errors.hpp"

namespace sdb {

namespace {

std::string scalar_text(const Json& j, const std::string& path) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw input_error(path + ": expected a scalar expression string or integer");
}

Tensor3 tensor_from_json(const Json& j, const Field& field, std::size_t n, const std::string& name) {
  const auto shape_error = [&](const std::string& path) {
    return input_error(path + ": expected an array of length " + std::to_string(n));
  };
  if (!j.is_array() || j.size() != n) throw shape_error(name);
  Tensor3 t(field, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string pi = name + "[" + std::to_string(i) + "]";
    if (!j[i].is_array() || j[i].size() != n) throw shape_error(pi);
    for (std::size_t k = 0; k < n; ++k) {
      const std::string pj = pi + "[" + std::to_string(k) + "]";
      if (!j[i][k].is_array() || j[i][k].size() != n) throw shape_error(pj);
      for (std::size_t l = 0; l < n; ++l) {
        const std::string path = pj + "[" + std::to_string(l) + "]";
        try {
          t(i, k, l) = parse_scalar(scalar_text(j[i][k][l], path), field);
        } catch (const parse_error& e) {
          throw input_error(path + ": " + e.what());
        } catch (const pole_error& e) {
          throw input_error(path + ": " + e.what());
        }
      }
    }
  }
  return t;
}

Json tensor_to_json(const Tensor3& t) {
  Json out = Json::array();
  for (std::size_t i = 0; i < t.dim(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < t.dim(); ++j) {
      Json cell = Json::array();
      for (std::size_t k = 0; k < t.dim(); ++k) cell.push_back(t(i, j, k).render());
      row.push_back(std::move(cell));
    }
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw input_error(source + ": malformed JSON: " + e.what());
  }
}

Field field_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    throw input_error("field: expected an object with a string \"kind\"");
  }
  const std::string kind = j["kind"].get<std::string>();
  try {
    if (kind == "rational") return Field::rational();
    if (kind == "prime") {
      if (!j.contains("p") || !j["p"].is_number_unsigned()) throw input_error("field.p: expected a positive integer");
      return Field::prime(j["p"].get<std::uint64_t>());
    }
    if (kind == "params") {
      if (!j.contains("vars") || !j["vars"].is_array()) throw input_error("field.vars: expected an array of names");
      std::vector<std::string> vars;
      for (const auto& v : j["vars"]) {
        if (!v.is_string()) throw input_error("field.vars: names must be strings");
        vars.push_back(v.get<std::string>());
      }
      return Field::params(std::move(vars));
    }
  } catch (const field_error& e) {
    throw input_error(std::string("field: ") + e.what());
  }
  throw input_error("field.kind: unknown kind '" + kind + "'");
}

Json field_to_json(const Field& f) {
  switch (f.kind()) {
    case Field::Kind::rational:
      return Json{{"kind", "rational"}};
    case Field::Kind::prime:
      return Json{{"kind", "prime"}, {"p", f.characteristic()}};
    case Field::Kind::params:
      return Json{{"kind", "params"}, {"vars", f.vars()}};
  }
  return {};
}

StructureFile structure_from_json(const Json& j) {
  if (!j.is_object()) throw input_error("structure: expected a JSON object");
  if (!j.contains("field")) throw input_error("field: missing");
  const Field field = field_from_json(j["field"]);
  if (!j.contains("dim") || !j["dim"].is_number_unsigned() || j["dim"].get<std::size_t>() == 0) {
    throw input_error("dim: expected a positive integer");
  }
  const auto n = j["dim"].get<std::size_t>();
  if (!j.contains("mul")) throw input_error("mul: missing");
  StructureFile out{Algebra{field, tensor_from_json(j["mul"], field, n, "mul")}, std::nullopt};
  if (j.contains("comul")) out.coalgebra = Coalgebra{field, tensor_from_json(j["comul"], field, n, "comul")};
  return out;
}

Json structure_to_json(const Algebra& a, const Coalgebra* c) {
  Json out{{"field", field_to_json(a.field)}, {"dim", a.dim()}, {"mul", tensor_to_json(a.mul)}};
  if (c) out["comul"] = tensor_to_json(c->comul);
  return out;
}

CayleyTable quandle_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("order") || !j["order"].is_number_unsigned()) {
    throw input_error("order: expected a nonnegative integer");
  }
  const auto n = j["order"].get<std::size_t>();
  if (!j.contains("table") || !j["table"].is_array() || j["table"].size() != n) {
    throw input_error("table: expected " + std::to_string(n) + " rows");
  }
  std::vector<std::uint32_t> entries;
  for (std::size_t x = 0; x < n; ++x) {
    const auto& row = j["table"][x];
    const std::string path = "table[" + std::to_string(x) + "]";
    if (!row.is_array() || row.size() != n) throw input_error(path + ": expected " + std::to_string(n) + " entries");
    for (std::size_t y = 0; y < n; ++y) {
      if (!row[y].is_number_unsigned() || row[y].get<std::size_t>() >= n) {
        throw input_error(path + "[" + std::to_string(y) + "]: expected an index below " + std::to_string(n));
      }
      entries.push_back(row[y].get<std::uint32_t>());
    }
  }
  return CayleyTable(n, std::move(entries));
}

Json quandle_to_json(const CayleyTable& t) {
  Json rows = Json::array();
  for (std::size_t x = 0; x < t.order(); ++x) {
    Json row = Json::array();
    for (std::size_t y = 0; y < t.order(); ++y) row.push_back(t(x, y));
    rows.push_back(std::move(row));
  }
  return Json{{"order", t.order()}, {"table", std::move(rows)}};
}

Json report_to_json(const CheckReport& r) {
  Json witnesses = Json::array();
  for (const auto& w : r.witnesses()) witnesses.push_back(Json{{"at", w.at}, {"lhs", w.lhs}, {"rhs", w.rhs}});
  return Json{{"verdict", r.verdict()}, {"witnesses", std::move(witnesses)}};
}

Json tensor2_to_json(const Tensor2& t) {
  Json out = Json::array();
  for (std::size_t i = 0; i < 2; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < 2; ++j) row.push_back(Json::array({t[4 * i + 2 * j], t[4 * i + 2 * j + 1]}));
    out.push_back(std::move(row));
  }
  return out;
}

Json audit_to_json(const AuditReport& r) {
  Json missing = Json::array(), unsound = Json::array();
  for (const auto& t : r.missing_from_families) missing.push_back(tensor2_to_json(t));
  for (const auto& t : r.unsound_instances) unsound.push_back(tensor2_to_json(t));
  return Json{{"type", r.type},
              {"p", r.p},
              {"sound", r.sound},
              {"missing_from_families", std::move(missing)},
              {"unsound_instances", std::move(unsound)},
              {"family_instances", r.family_instances},
              {"solutions", r.solutions}};
}

Json orientation_to_json(const OrientationReport& r) {
  Json out{{"closed", r.closed}};
  out["table"] = r.table ? quandle_to_json(*r.table) : Json(nullptr);
  out["quandle"] = report_to_json(r.quandle);
  out["rack"] = report_to_json(r.rack);
  return out;
}

}  // namespace sdb
