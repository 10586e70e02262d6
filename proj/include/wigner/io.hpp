#pragma once

#include <optional>
#include <string>
#include <variant>

#include <json.hpp>

#include "wigner/generators.hpp"
#include "wigner/reconstruct.hpp"

namespace wigner {

/// One parsed operator file: a witness matrix, a bare vector, or a generator
/// spec. Complex entries are [re, im] pairs; matrices are row-major.
struct OperatorRecord {
  std::variant<IsometryWitness, Vector, GeneratorSpec> payload;
  nlohmann::json meta;
};

nlohmann::json witness_record(const IsometryWitness& w,
                              const nlohmann::json& meta = nlohmann::json::object());
nlohmann::json vector_record(const Vector& v);
nlohmann::json generator_record(const GeneratorSpec& spec);

OperatorRecord parse_operator_record(const nlohmann::json& j);
OperatorRecord read_operator_file(const std::string& path);

/// Instance behind a record: witness records are wrapped with phase
/// scrambling, generator records are instantiated.
SymmetryMap symmetry_from_record(const OperatorRecord& record,
                                 std::uint64_t scramble_seed,
                                 const Tolerances& tol = {});

nlohmann::json report_to_json(const ReconstructionReport& report,
                              const std::string& status,
                              const std::string& reason);

/// Write-temp-then-rename so readers never observe a torn file.
void write_json_atomic(const std::string& path, const nlohmann::json& j);

}  // namespace wigner
