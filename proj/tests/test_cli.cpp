#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sys/wait.h>

#include "wzw/serialize.hpp"

using namespace wzw;
namespace fs = std::filesystem;

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(WZW_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, p)) out.append(buf, n);
  const int st = pclose(p);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

fs::path fresh_dir() {
  std::random_device rd;
  const fs::path d = fs::temp_directory_path() / ("wzw_cache_test_" + std::to_string(rd()));
  fs::create_directories(d);
  return d;
}

}  // namespace

TEST_CASE("modular-data emits a self-describing report") {
  const auto r = run("modular-data A1 -k 2");
  REQUIRE(r.status == 0);
  const auto j = Json::parse(r.out);
  CHECK(j["command"] == "modular-data");
  CHECK(j["input"]["level"] == 2);
  CHECK(j["modular_data"]["labels"].size() == 3);
  CHECK(j["modular_data"]["Delta"][1] == "3/16");
  CHECK(j["modular_data"]["c"] == "3/2");
}

TEST_CASE("output is deterministic") {
  CHECK(run("extend A2 -k 3").out == run("extend A2 -k 3").out);
  CHECK(run("boundary A1 -k 2 --shift 1").out == run("boundary A1 -k 2 --shift 1").out);
}

TEST_CASE("extend su(2) level 4") {
  const auto j = Json::parse(run("extend A1 -k 4").out);
  CHECK(j["extended"]["labels"].size() == 3);
  CHECK(j["extended"]["Delta"][1] == "1/3");
}

TEST_CASE("error reports and exit codes") {
  const auto cap = run("modular-data E8 -k 2");
  CHECK(cap.status == 1);
  const auto e = Json::parse(cap.out)["error"];
  CHECK(e["code"] == "E_WEYL_CAP");
  CHECK(e["partial"] == 200000);

  const auto bad = run("modular-data Q3 -k 1");
  CHECK(bad.status == 2);
  CHECK(Json::parse(bad.out)["error"]["code"] == "E_INVALID_INPUT");

  CHECK(run("modular-data A1").status == 2);  // level missing
  CHECK(Json::parse(run("orbifold A1 -k 2 --shift 0").out)["error"]["code"] == "E_PRECONDITION");
}

TEST_CASE("csv sweep") {
  const auto r = run("sweep A1 -k 4 -m 3 --format csv");
  REQUIRE(r.status == 0);
  CHECK(r.out.rfind("algebra,", 0) == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') >= 4);
}

TEST_CASE("cache hits skip the Weyl traversal") {
  const auto dir = fresh_dir();
  const auto a2 = build_algebra('A', 2);
  {
    ModularDataCache c(dir);
    c.get(a2, 3);
    CHECK(c.misses() == 1);
    CHECK(fs::exists(c.path(a2, 3)));
  }
  ModularDataCache c(dir);
  const auto before = weyl_traversal_count();
  const auto md = c.get(a2, 3);
  CHECK(weyl_traversal_count() == before);
  CHECK(c.hits() == 1);

  const auto fresh = kac_peterson(a2, 3);
  CHECK(md.labels == fresh.labels);
  CHECK(md.delta == fresh.delta);
  CHECK(md.c == fresh.c);
  CHECK(md.S == fresh.S);  // exact roundtrip
  fs::remove_all(dir);
}

TEST_CASE("corrupt and outdated entries are recomputed") {
  const auto dir = fresh_dir();
  const auto a1 = build_algebra('A', 1);
  ModularDataCache c(dir);
  c.get(a1, 3);
  std::ofstream(c.path(a1, 3)) << "{ not json";
  const auto md = c.get(a1, 3);
  CHECK(c.invalidated() == 1);
  CHECK(md.size() == 4);

  auto j = Json::parse(std::ifstream(c.path(a1, 3)));
  CHECK(j["version"] == kSchemaVersion);
  j["version"] = kSchemaVersion + 1;
  std::ofstream(c.path(a1, 3)) << j.dump();
  c.get(a1, 3);
  CHECK(c.invalidated() == 2);
  CHECK(Json::parse(std::ifstream(c.path(a1, 3)))["version"] == kSchemaVersion);
  fs::remove_all(dir);
}

TEST_CASE("json parsing rejects schema mismatches") {
  auto j = to_json(kac_peterson(build_algebra('A', 1), 1), "A1", 1);
  CHECK(modular_data_from_json(j).size() == 2);
  j.erase("S");
  try {
    modular_data_from_json(j);
    FAIL("expected E_CACHE_CORRUPT");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CacheCorrupt);
  }
}

TEST_CASE("matrix json roundtrip") {
  CMat m(2, 2);
  m << Complex(0.1, 1.0 / 3), Complex(-2e-17, 5), Complex(1e300, 0), Complex(0, -0.7);
  CHECK(matrix_from_json(Json::parse(matrix_json(m).dump())) == m);
}
