#pragma once

// JSON surface shared by the CLI and test fixtures. Reading errors are raised
// as input_error with the offending JSON path in the message.

#include <json.hpp>
#include <optional>
#include <string>

#include "sdb/classifier.hpp"
#include "sdb/magma.hpp"
#include "sdb/quandle.hpp"
#include "sdb/report.hpp"
#include "sdb/tensor.hpp"

namespace sdb {

using Json = nlohmann::ordered_json;

/// A structure file: multiplication plus optional comultiplication.
struct StructureFile {
  Algebra algebra;
  std::optional<Coalgebra> coalgebra;
};

Field field_from_json(const Json& j);
Json field_to_json(const Field& f);

StructureFile structure_from_json(const Json& j);
Json structure_to_json(const Algebra& a, const Coalgebra* c = nullptr);

CayleyTable quandle_from_json(const Json& j);
Json quandle_to_json(const CayleyTable& t);

Json report_to_json(const CheckReport& r);
Json tensor2_to_json(const Tensor2& t);
Json audit_to_json(const AuditReport& r);
Json orientation_to_json(const OrientationReport& r);

/// Parses text, converting parse failures into input_error naming `source`.
Json parse_json(const std::string& text, const std::string& source);

}  // namespace sdb
