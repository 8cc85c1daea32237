#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <stdexcept>

#include "qsep/io.hpp"
#include "qsep/states.hpp"

using namespace qsep;

TEST_CASE("format_number: shortest round trip") {
  CHECK(format_number(0.5) == "0.5");
  CHECK(format_number(1.0) == "1");
  CHECK(format_number(-0.0) == "0");
  CHECK(format_number(0.1) == "0.1");
  CHECK(format_number(1e-20) == "1e-20");
  CHECK(format_number(1.0 / 3.0) == "0.3333333333333333");

  Rng rng(17);
  for (int i = 0; i < 2000; ++i) {
    const double v = std::ldexp(rng.uniform(-1, 1), static_cast<int>(rng.next_u64() % 80) - 40);
    const std::string s = format_number(v);
    CHECK(std::stod(s) == v);
    std::string digits;
    for (char c : s) {
      if (c == 'e') break;
      if (c >= '0' && c <= '9') digits += c;
    }
    const auto first = digits.find_first_not_of('0');
    const auto last = digits.find_last_not_of('0');
    CHECK(last - first + 1 <= 17);  // significant digits
  }
}

TEST_CASE("operator file: save -> load -> save is byte-identical") {
  Rng rng(23);
  for (int i = 0; i < 60; ++i) {
    const int n = 1 + i % 4;
    OperatorFile file{random_hermitian_unit_trace(n, rng), nlohmann::json::object()};
    if (i % 2) file.meta = {{"label", "random"}, {"index", i}};
    const std::string first = to_json_text(file);
    const OperatorFile loaded = from_json_text(first);
    CHECK(loaded.op.matrix() == file.op.matrix());
    CHECK(loaded.meta == file.meta);
    CHECK(to_json_text(loaded) == first);
  }
}

TEST_CASE("operator file: disk round trip") {
  const auto path = std::filesystem::temp_directory_path() / "qsep_io_roundtrip.json";
  const OperatorFile file{horodecki_b(0.25).op(), {{"label", "horodecki_b"}}};
  save_operator(file, path);
  const auto loaded = load_operator(path);
  CHECK(loaded.op.matrix() == file.op.matrix());
  CHECK(loaded.meta["label"] == "horodecki_b");
  std::filesystem::remove(path);
  CHECK_THROWS_AS(load_operator(path), std::runtime_error);
}

TEST_CASE("operator file: schema errors") {
  CHECK_THROWS_AS(from_json_text("not json"), std::invalid_argument);
  CHECK_THROWS_AS(from_json_text("[]"), std::invalid_argument);
  CHECK_THROWS_AS(from_json_text(R"({"entries": [[[1,0],[0,0]],[[0,0],[0,0]]]})"), std::invalid_argument);
  CHECK_THROWS_AS(from_json_text(R"({"n_qubits": 2, "entries": [[[1,0],[0,0]],[[0,0],[0,0]]]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(from_json_text(R"({"n_qubits": 1, "entries": [[[1,0],[0,0]],[[0,0]]]})"), std::invalid_argument);
  CHECK_THROWS_AS(from_json_text(R"({"n_qubits": 1, "entries": [[[1,0],[0,0]],[[0,0],[0]]]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(from_json_text(R"({"n_qubits": 1, "entries": [[[1,0],["x",0]],[[0,0],[0,0]]]})"),
                  std::invalid_argument);
  // Not Hermitian.
  CHECK_THROWS_AS(from_json_text(R"({"n_qubits": 1, "entries": [[[1,0],[0,1]],[[0,1],[0,0]]]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(from_json_text(R"({"n_qubits": 13, "entries": []})"), std::invalid_argument);
  CHECK_THROWS_AS(from_json_text(R"({"n_qubits": 1, "meta": 3, "entries": [[[1,0],[0,0]],[[0,0],[0,0]]]})"),
                  std::invalid_argument);
  CHECK_NOTHROW(from_json_text(R"({"n_qubits": 1, "entries": [[[1,0],[0,0]],[[0,0],[0,0]]]})"));
}

TEST_CASE("parse_map_spec: grammar") {
  CHECK(parse_map_spec("1:P,2:P", 2) == MapSpec::all(2, MapKind::P));
  CHECK(parse_map_spec("all:P", 3) == MapSpec::all(3, MapKind::P));
  CHECK(parse_map_spec(" 2 : t ", 2) == MapSpec::single(2, MapKind::T));
  CHECK(parse_map_spec("1:Identity", 1) == MapSpec::single(1, MapKind::Identity));
  CHECK(parse_map_spec("3:H,1:X", 3) == MapSpec{{{3, MapKind::H}, {1, MapKind::X}}});

  CHECK_THROWS_AS(parse_map_spec("", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_map_spec("1P", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_map_spec("1:Q", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_map_spec("x:P", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_map_spec("3:P", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_map_spec("1:P,1:T", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_map_spec("all:P,1:T", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_map_spec("1:P,", 2), std::invalid_argument);
}

TEST_CASE("generate_family") {
  const auto hb = generate_family("horodecki-b", {{"b", "0.1"}});
  CHECK(hb.op.n_qubits() == 3);
  CHECK(std::abs(hb.op(7, 4).real() - std::sqrt(0.99) / 3.4) <= 1e-15);
  CHECK(hb.meta["generator"] == "horodecki-b");
  CHECK(hb.meta["params"]["b"] == "0.1");

  CHECK(generate_family("ghz", {{"n", "2"}}).op.matrix() == ghz(2).matrix());
  CHECK(max_abs_diff(generate_family("isotropic", {{"s", "0"}, {"bell", "phi+"}}).op.matrix(), ghz(2).matrix()) <=
        kTolHerm);
  CHECK(generate_family("pure-p", {{"p", "0.3"}}).op.matrix() == pure_superposition(0.3).matrix());
  CHECK(generate_family("random-msep", {{"n", "3"}, {"terms", "5"}, {"seed", "9"}}).op.matrix() ==
        random_multiseparable({3, 5, 9}).matrix());

  CHECK_THROWS_AS(generate_family("werner", {}), std::invalid_argument);
  CHECK_THROWS_AS(generate_family("horodecki-b", {}), std::invalid_argument);
  CHECK_THROWS_AS(generate_family("horodecki-b", {{"b", "abc"}}), std::invalid_argument);
  CHECK_THROWS_AS(generate_family("horodecki-b", {{"b", "1.5"}}), std::invalid_argument);
  CHECK_THROWS_AS(generate_family("horodecki-b", {{"b", "0.1"}, {"c", "2"}}), std::invalid_argument);
  CHECK_THROWS_AS(generate_family("isotropic", {{"s", "-1"}}), std::invalid_argument);
  CHECK_THROWS_AS(generate_family("isotropic", {{"s", "0"}, {"bell", "chi+"}}), std::invalid_argument);
  CHECK_THROWS_AS(generate_family("ghz", {{"n", "1"}}), std::invalid_argument);
  CHECK_THROWS_AS(generate_family("random-msep", {{"n", "2"}, {"seed", "-1"}}), std::invalid_argument);
}

TEST_CASE("render_report") {
  const auto hit = hamming_offdiagonal_check(horodecki_b(0.1));
  const std::string text = render_report(hit);
  CHECK(text.find("verdict: Inseparable") != std::string::npos);
  CHECK(text.find("criterion: HammingOffDiagonal") != std::string::npos);
  CHECK(text.find("witness: element (7,4)") != std::string::npos);
  CHECK(text.find("bound: 0.25") != std::string::npos);

  const auto miss = map_negativity_check(horodecki_b(0.5), MapSpec::single(1, MapKind::T));
  const std::string miss_text = render_report(miss);
  CHECK(miss_text.find("verdict: Inconclusive") != std::string::npos);
  CHECK(miss_text.find("spec: 1:T") != std::string::npos);
  CHECK(miss_text.find("min_eigenvalue: ") != std::string::npos);
}
