#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>

#include <json.hpp>

#include "qsep/criteria.hpp"
#include "qsep/linalg.hpp"
#include "qsep/maps.hpp"

namespace qsep {

/// On-disk operator: {"n_qubits": n, "meta": {...}, "entries": [[[re, im], ...], ...]}.
struct OperatorFile {
  HermitianOperator op;
  nlohmann::json meta = nlohmann::json::object();
};

/// Shortest decimal that round-trips the double; -0 is written as 0.
std::string format_number(double v);

std::string to_json_text(const OperatorFile& file);
OperatorFile from_json_text(std::string_view text);

OperatorFile load_operator(const std::filesystem::path& path);
void save_operator(const OperatorFile& file, const std::filesystem::path& path);

/// Parses "1:P,2:T" or "all:P". Kinds: P, T, H, X, Identity (case-insensitive; I for Identity).
MapSpec parse_map_spec(std::string_view text, int n_qubits);
MapKind parse_map_kind(std::string_view text);

/// Builds one of the fixture families from key=value parameters.
/// Families: horodecki-b (b), isotropic (s, bell), pure-p (p), ghz (n),
/// random-msep (n, terms, seed).
OperatorFile generate_family(std::string_view family, const std::map<std::string, std::string>& params);

/// Human-readable multi-line rendering of a report.
std::string render_report(const DetectionReport& report);

}  // namespace qsep
