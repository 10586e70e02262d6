#include "wigner/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

namespace wigner {

using nlohmann::json;

namespace {

json complex_to_json(const Complex& z) {
  return json::array({z.real(), z.imag()});
}

Complex complex_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw IoError("field '" + where + "': complex entries must be [re, im]");
  }
  return Complex(j[0].get<double>(), j[1].get<double>());
}

json matrix_to_json(const Matrix& a) {
  json rows = json::array();
  for (Index r = 0; r < a.rows(); ++r) {
    json row = json::array();
    for (Index c = 0; c < a.cols(); ++c) {
      row.push_back(complex_to_json(a(r, c)));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& j, Index rows, Index cols) {
  if (!j.is_array() || static_cast<Index>(j.size()) != rows) {
    throw IoError("field 'matrix': expected " + std::to_string(rows) + " rows");
  }
  Matrix a(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    const json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Index>(row.size()) != cols) {
      throw IoError("field 'matrix': expected " + std::to_string(cols) +
                    " columns in row " + std::to_string(r));
    }
    for (Index c = 0; c < cols; ++c) {
      a(r, c) = complex_from_json(row[static_cast<std::size_t>(c)], "matrix");
    }
  }
  return a;
}

Index require_index(const json& j, const std::string& field) {
  if (!j.contains(field) || !j[field].is_number_integer()) {
    throw IoError("field '" + field + "': missing or not an integer");
  }
  return j[field].get<Index>();
}

}  // namespace

json witness_record(const IsometryWitness& w, const json& meta) {
  return json{{"kind", "witness"},
              {"n", w.domain_dim()},
              {"m", w.codomain_dim()},
              {"tag", w.tag == LinearityTag::Linear ? "linear" : "antilinear"},
              {"matrix", matrix_to_json(w.a)},
              {"meta", meta}};
}

json vector_record(const Vector& v) {
  Matrix column(v.size(), 1);
  column.col(0) = v;
  return json{{"kind", "vector"},
              {"n", v.size()},
              {"m", 1},
              {"matrix", matrix_to_json(column)},
              {"meta", json::object()}};
}

json generator_record(const GeneratorSpec& spec) {
  json meta{{"seed", spec.seed}, {"generator", to_string(spec.kind)}};
  if (spec.kind == GeneratorSpec::Kind::PartialConjugation) {
    meta["j"] = spec.j;
  }
  return json{{"kind", "generator"},
              {"n", spec.n},
              {"m", spec.m > 0 ? spec.m : spec.n},
              {"meta", std::move(meta)}};
}

OperatorRecord parse_operator_record(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    throw IoError("field 'kind': missing or not a string");
  }
  const std::string kind = j["kind"].get<std::string>();
  OperatorRecord record;
  record.meta = j.value("meta", json::object());

  if (kind == "witness") {
    const Index n = require_index(j, "n");
    const Index m = require_index(j, "m");
    if (n < 1 || m < n) throw IoError("field 'n'/'m': need 1 <= n <= m");
    if (!j.contains("tag") || !j["tag"].is_string()) {
      throw IoError("field 'tag': missing or not a string");
    }
    const std::string tag = j["tag"].get<std::string>();
    if (tag != "linear" && tag != "antilinear") {
      throw IoError("field 'tag': must be 'linear' or 'antilinear'");
    }
    if (!j.contains("matrix")) throw IoError("field 'matrix': missing");
    IsometryWitness w;
    w.tag = tag == "linear" ? LinearityTag::Linear : LinearityTag::Antilinear;
    w.a = matrix_from_json(j["matrix"], m, n);
    record.payload = std::move(w);
    return record;
  }

  if (kind == "vector") {
    const Index n = require_index(j, "n");
    if (n < 1) throw IoError("field 'n': must be positive");
    if (!j.contains("matrix")) throw IoError("field 'matrix': missing");
    const Matrix column = matrix_from_json(j["matrix"], n, 1);
    record.payload = Vector(column.col(0));
    return record;
  }

  if (kind == "generator") {
    GeneratorSpec spec;
    spec.n = require_index(j, "n");
    spec.m = j.contains("m") ? require_index(j, "m") : 0;
    if (!record.meta.contains("generator") || !record.meta["generator"].is_string()) {
      throw IoError("field 'meta.generator': missing or not a string");
    }
    spec.kind = generator_kind_from_string(record.meta["generator"].get<std::string>());
    spec.seed = record.meta.value("seed", std::uint64_t{0});
    spec.j = record.meta.value("j", Index{0});
    record.payload = spec;
    return record;
  }

  throw IoError("field 'kind': unknown record kind '" + kind + "'");
}

OperatorRecord read_operator_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw IoError("malformed JSON in " + path + ": " + e.what());
  }
  return parse_operator_record(j);
}

SymmetryMap symmetry_from_record(const OperatorRecord& record,
                                 std::uint64_t scramble_seed,
                                 const Tolerances& tol) {
  if (const auto* w = std::get_if<IsometryWitness>(&record.payload)) {
    return symmetry_from_witness(*w, scramble_seed, tol);
  }
  if (const auto* spec = std::get_if<GeneratorSpec>(&record.payload)) {
    return make_symmetry(*spec, tol);
  }
  throw IoError("record does not describe a symmetry instance");
}

json report_to_json(const ReconstructionReport& report,
                    const std::string& status, const std::string& reason) {
  return json{
      {"status", status},
      {"reason", reason},
      {"witness", witness_record(report.witness)},
      {"max_gap_residual", report.max_gap_residual},
      {"mean_gap_residual", report.mean_gap_residual},
      {"parseval_residual", report.parseval_residual},
      {"phase_relation_residual", report.phase_relation_residual},
      {"classification_evidence",
       json::array({report.classification_evidence[0],
                    report.classification_evidence[1]})},
      {"sample_count", report.sample_count},
  };
}

void write_json_atomic(const std::string& path, const json& j) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw IoError("cannot write file: " + tmp);
    out << j.dump(2) << '\n';
    if (!out) throw IoError("write failed: " + tmp);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw IoError("cannot rename " + tmp + " to " + path);
}

}  // namespace wigner
