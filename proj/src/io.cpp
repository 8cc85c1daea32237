#include "qsep/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "qsep/states.hpp"

namespace qsep {

using nlohmann::json;

std::string format_number(double v) {
  if (v == 0.0) return "0";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  if (res.ec != std::errc{}) throw std::runtime_error("format_number: conversion failed");
  return std::string(buf, res.ptr);
}

std::string to_json_text(const OperatorFile& file) {
  const auto& m = file.op.matrix();
  std::string out;
  out += "{\n  \"n_qubits\": " + std::to_string(file.op.n_qubits()) + ",\n";
  if (!file.meta.empty()) out += "  \"meta\": " + file.meta.dump() + ",\n";
  out += "  \"entries\": [\n";
  for (std::size_t i = 0; i < m.dim(); ++i) {
    out += "    [";
    for (std::size_t j = 0; j < m.dim(); ++j) {
      if (j) out += ", ";
      out += '[' + format_number(m(i, j).real()) + ", " + format_number(m(i, j).imag()) + ']';
    }
    out += i + 1 < m.dim() ? "],\n" : "]\n";
  }
  out += "  ]\n}\n";
  return out;
}

OperatorFile from_json_text(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("operator file: ") + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("operator file: top level must be an object");
  if (!doc.contains("n_qubits") || !doc["n_qubits"].is_number_integer()) {
    throw std::invalid_argument("operator file: missing integer field n_qubits");
  }
  const auto n = doc["n_qubits"].get<long long>();
  if (n < 1 || n > kMaxQubits) {
    throw std::invalid_argument("operator file: n_qubits " + std::to_string(n) + " outside [1, " +
                                std::to_string(kMaxQubits) + "]");
  }
  const std::size_t d = std::size_t{1} << n;
  if (!doc.contains("entries") || !doc["entries"].is_array() || doc["entries"].size() != d) {
    throw std::invalid_argument("operator file: entries must be an array of " + std::to_string(d) +
                                " rows");
  }
  ComplexMatrix m(d);
  const json& rows = doc["entries"];
  for (std::size_t i = 0; i < d; ++i) {
    const json& row = rows[i];
    if (!row.is_array() || row.size() != d) {
      throw std::invalid_argument("operator file: row " + std::to_string(i) + " must have " +
                                  std::to_string(d) + " elements");
    }
    for (std::size_t j = 0; j < d; ++j) {
      const json& e = row[j];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
        throw std::invalid_argument("operator file: element (" + std::to_string(i) + "," +
                                    std::to_string(j) + ") must be [re, im]");
      }
      m(i, j) = Complex(e[0].get<double>(), e[1].get<double>());
    }
  }
  OperatorFile file{HermitianOperator(std::move(m)), json::object()};
  if (doc.contains("meta")) {
    if (!doc["meta"].is_object()) throw std::invalid_argument("operator file: meta must be an object");
    file.meta = doc["meta"];
  }
  return file;
}

OperatorFile load_operator(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_json_text(buf.str());
}

void save_operator(const OperatorFile& file, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << to_json_text(file);
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_double(const std::string& key, const std::string& text) {
  double v = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
    throw std::invalid_argument("parameter " + key + "=" + text + " is not a number");
  }
  return v;
}

long long parse_int(const std::string& key, const std::string& text) {
  long long v = 0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
    throw std::invalid_argument("parameter " + key + "=" + text + " is not an integer");
  }
  return v;
}

const std::string& require(const std::map<std::string, std::string>& params, const std::string& key) {
  const auto it = params.find(key);
  if (it == params.end()) throw std::invalid_argument("missing parameter " + key);
  return it->second;
}

void reject_unknown(const std::map<std::string, std::string>& params,
                    std::initializer_list<std::string_view> allowed) {
  for (const auto& [key, value] : params) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw std::invalid_argument("unknown parameter " + key);
    }
  }
}

BellState parse_bell(const std::string& text) {
  const std::string t = lower(text);
  if (t == "phi+") return BellState::PhiPlus;
  if (t == "phi-") return BellState::PhiMinus;
  if (t == "psi+") return BellState::PsiPlus;
  if (t == "psi-") return BellState::PsiMinus;
  throw std::invalid_argument("unknown Bell state " + text + " (expected phi+, phi-, psi+, psi-)");
}

}  // namespace

MapKind parse_map_kind(std::string_view text) {
  const std::string t = lower(trim(text));
  if (t == "p") return MapKind::P;
  if (t == "t") return MapKind::T;
  if (t == "h") return MapKind::H;
  if (t == "x") return MapKind::X;
  if (t == "identity" || t == "i" || t == "id") return MapKind::Identity;
  throw std::invalid_argument("unknown map kind '" + std::string(text) + "'");
}

MapSpec parse_map_spec(std::string_view text, int n_qubits) {
  MapSpec spec;
  std::string_view rest = text;
  if (trim(rest).empty()) throw std::invalid_argument("empty map spec");
  while (true) {
    const auto comma = rest.find(',');
    const std::string_view item = trim(rest.substr(0, comma));
    const auto colon = item.find(':');
    if (colon == std::string_view::npos) {
      throw std::invalid_argument("map spec item '" + std::string(item) + "' is not qubit:kind");
    }
    const std::string_view qubit = trim(item.substr(0, colon));
    const MapKind kind = parse_map_kind(item.substr(colon + 1));
    if (lower(qubit) == "all") {
      if (text.find(',') != std::string_view::npos) {
        throw std::invalid_argument("'all:KIND' cannot be combined with other items");
      }
      return MapSpec::all(n_qubits, kind);
    }
    int q = 0;
    const auto res = std::from_chars(qubit.data(), qubit.data() + qubit.size(), q);
    if (res.ec != std::errc{} || res.ptr != qubit.data() + qubit.size()) {
      throw std::invalid_argument("map spec qubit '" + std::string(qubit) + "' is not an integer");
    }
    spec.assignments.emplace_back(q, kind);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  spec.validate(n_qubits);
  return spec;
}

OperatorFile generate_family(std::string_view family, const std::map<std::string, std::string>& params) {
  json meta = json::object();
  meta["generator"] = std::string(family);
  meta["params"] = params;

  if (family == "horodecki-b") {
    reject_unknown(params, {"b"});
    const double b = parse_double("b", require(params, "b"));
    meta["label"] = "horodecki_b";
    return {horodecki_b(b).op(), meta};
  }
  if (family == "isotropic") {
    reject_unknown(params, {"s", "bell"});
    const double s = parse_double("s", require(params, "s"));
    const auto bell_it = params.find("bell");
    const BellState bell = bell_it == params.end() ? BellState::PhiPlus : parse_bell(bell_it->second);
    meta["label"] = "isotropic";
    return {isotropic({s, bell}).op(), meta};
  }
  if (family == "pure-p") {
    reject_unknown(params, {"p"});
    const double p = parse_double("p", require(params, "p"));
    meta["label"] = "pure_superposition";
    return {pure_superposition(p).op(), meta};
  }
  if (family == "ghz") {
    reject_unknown(params, {"n"});
    const auto n = parse_int("n", require(params, "n"));
    if (n < 2 || n > kMaxQubits) throw std::invalid_argument("ghz: n outside [2, 12]");
    meta["label"] = "ghz";
    return {ghz(static_cast<int>(n)).op(), meta};
  }
  if (family == "random-msep") {
    reject_unknown(params, {"n", "terms", "seed"});
    const auto n = parse_int("n", require(params, "n"));
    if (n < 1 || n > kMaxQubits) throw std::invalid_argument("random-msep: n outside [1, 12]");
    const auto terms_it = params.find("terms");
    const auto terms = terms_it == params.end() ? 4 : parse_int("terms", terms_it->second);
    if (terms < 1 || terms > 1'000'000) throw std::invalid_argument("random-msep: terms outside [1, 1e6]");
    const auto seed_it = params.find("seed");
    std::uint64_t seed = 0;
    if (seed_it != params.end()) {
      const auto& t = seed_it->second;
      const auto res = std::from_chars(t.data(), t.data() + t.size(), seed);
      if (res.ec != std::errc{} || res.ptr != t.data() + t.size()) {
        throw std::invalid_argument("parameter seed=" + t + " is not an unsigned integer");
      }
    }
    meta["label"] = "random_multiseparable";
    return {random_multiseparable({static_cast<int>(n), static_cast<int>(terms), seed}).op(), meta};
  }
  throw std::invalid_argument("unknown family '" + std::string(family) +
                              "' (expected horodecki-b, isotropic, pure-p, ghz, random-msep)");
}

std::string render_report(const DetectionReport& report) {
  std::ostringstream out;
  out << "verdict: " << to_string(report.verdict) << '\n';
  out << "criterion: " << to_string(report.criterion) << '\n';
  if (report.spec_used) out << "spec: " << to_string(*report.spec_used) << '\n';
  if (!report.witness) {
    out << "witness: none\n";
    if (report.criterion == Criterion::MapNegativity) {
      out << "min_eigenvalue: " << format_number(report.statistic) << '\n';
    } else if (std::isfinite(report.statistic)) {
      out << "best_margin: " << format_number(report.statistic) << '\n';
    }
    return out.str();
  }
  if (const auto* w = std::get_if<OffDiagonalWitness>(&*report.witness)) {
    out << "witness: element (" << w->a << "," << w->b << ")\n";
    out << "value: [" << format_number(w->value.real()) << ", " << format_number(w->value.imag()) << "]\n";
    out << "abs_value: " << format_number(std::abs(w->value)) << '\n';
    out << "hamming_distance: " << w->hamming_distance << '\n';
    out << "bound: " << format_number(w->bound) << '\n';
    out << "margin: " << format_number(w->margin()) << '\n';
  } else if (const auto* e = std::get_if<EigenWitness>(&*report.witness)) {
    out << "witness: eigenvector\n";
    out << "min_eigenvalue: " << format_number(e->min_eigenvalue) << '\n';
    out << "eigenvector: [";
    for (std::size_t i = 0; i < e->eigenvector.size(); ++i) {
      if (i) out << ", ";
      out << '[' << format_number(e->eigenvector[i].real()) << ", "
          << format_number(e->eigenvector[i].imag()) << ']';
    }
    out << "]\n";
  }
  return out.str();
}

}  // namespace qsep
