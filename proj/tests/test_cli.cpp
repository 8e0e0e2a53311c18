#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fillperm/cli.hpp"

using nlohmann::json;
using fillperm::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
  json data() const { return json::parse(out); }
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string without_timing(const std::string& text) {
  json j = json::parse(text);
  j.erase("timing_seconds");
  return j.dump();
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto p = std::filesystem::temp_directory_path() / name;
  std::ofstream(p) << content;
  return p;
}

std::size_t occurrences(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("enumerate") {
  const Result r = call({"enumerate", "--genus", "2", "--count-only"});
  CHECK(r.code == 0);
  const json j = r.data();
  CHECK(j["schema"] == 1);
  CHECK(j["root_count"] == 48);
  CHECK(j["filling_count"] == 0);
  CHECK(j["class_count"] == 0);
  CHECK_FALSE(j.contains("representatives"));
  CHECK(j.contains("timing_seconds"));

  CHECK(call({"enumerate", "--genus", "1"}).data()["class_count"] == 1);
  const json g3 = call({"enumerate", "-g", "3", "--classes", "--limit", "2"}).data();
  CHECK(g3["filling_count"] == 600);
  CHECK(g3["representatives"].size() == 2);
  CHECK(g3["representatives_truncated"] == true);
  std::size_t members = 0;
  const json listed = call({"enumerate", "-g", "3", "--classes"}).data();
  REQUIRE(listed["classes"].size() == 5);
  for (const auto& c : listed["classes"]) members += c["members"].get<std::size_t>();
  CHECK(members == 600);
}

TEST_CASE("enumerate output does not depend on jobs") {
  const std::string one = without_timing(call({"enumerate", "--genus", "3", "--jobs", "1"}).out);
  CHECK(without_timing(call({"enumerate", "--genus", "3", "--jobs", "4"}).out) == one);
  CHECK(without_timing(call({"enumerate", "--genus", "3", "--jobs", "8", "--classes"}).out) ==
        without_timing(call({"enumerate", "--genus", "3", "--classes"}).out));
}

TEST_CASE("guard and flags") {
  const Result g6 = call({"enumerate", "--genus", "6"});
  CHECK(g6.code == 2);
  CHECK(g6.out.empty());
  CHECK(g6.err.find("guard") != std::string::npos);
  CHECK(call({"enumerate"}).code == 64);
  CHECK(call({"enumerate", "--genus", "3", "--bogus"}).code == 64);
  CHECK(call({"enumerate", "--genus", "3", "--count-only", "--classes"}).code == 64);
  CHECK(call({"enumerate", "--genus", "0"}).code == 64);
  CHECK(call({"frobnicate"}).code == 64);
  CHECK(call({}).code == 64);
  CHECK(call({"--help"}).code == 0);
  CHECK(call({"--version"}).out == std::string(fillperm::cli::kVersion) + "\n");
  ::setenv("FILLPERM_GUARD", "2", 1);
  CHECK(call({"enumerate", "--genus", "3", "--count-only"}).code == 2);
  CHECK(call({"enumerate", "--genus", "3", "--count-only", "--force"}).code == 0);
  ::setenv("FILLPERM_GUARD", "x", 1);
  CHECK(call({"enumerate", "--genus", "1"}).code == 64);
  ::unsetenv("FILLPERM_GUARD");
}

TEST_CASE("verify and reconstruct") {
  const Result ok = call({"verify", "[2,3,4,1]", "--genus", "1"});
  CHECK(ok.code == 0);
  CHECK(ok.data()["valid"] == true);
  const Result bad = call({"verify", "[3,4,1,2]", "--genus", "1"});
  CHECK(bad.code == 1);
  CHECK(bad.data()["failure"] == "not an n-cycle");
  CHECK(bad.err.find("not an n-cycle") != std::string::npos);
  CHECK(call({"verify", "[2,3,4", "--genus", "1"}).code == 65);
  CHECK(call({"verify", "[1,1,2,3]", "--genus", "1"}).code == 65);
  CHECK(call({"verify", "[2,3,1]", "--genus", "1"}).code == 65);

  const json rec = call({"reconstruct", "[2,3,4,1]", "--genus", "1"}).data();
  CHECK(rec["genus"] == 1);
  CHECK(rec["vertex_classes"].size() == 1);
  CHECK(rec["alpha_is_single_curve"] == true);
  CHECK(call({"reconstruct", "[3,4,1,2]", "--genus", "1"}).code == 1);
}

TEST_CASE("extend") {
  const Result r = call({"extend", "[2,3,4,1]", "--genus", "1", "--vertex", "1"});
  CHECK(r.code == 0);
  const json j = r.data();
  CHECK(j["result_genus"] == 3);
  CHECK(j["result_intersections"] == 5);
  CHECK(j["zpieces"].size() == 1);
  CHECK(call({"verify", j["result"].get<std::string>(), "--genus", "3"}).code == 0);
  CHECK(call({"extend", "[2,3,4,1]", "--genus", "1", "--vertex", "2"}).code == 64);
}

TEST_CASE("pattern files") {
  const auto torus = temp_file("fillperm-torus.json", R"({"i": 1, "polygons": [[1, 2, -1, -2]]})");
  const json t = call({"t1", torus.string()}).data();
  CHECK(t["t1"] == 2);
  CHECK(t["genus"] == 1);
  CHECK(call({"genus", torus.string()}).data()["genus"] == 1);
  const auto sphere = temp_file("fillperm-bad.json", R"({"i": 1, "polygons": [[1, -1, 2, -2]]})");
  const Result bad = call({"genus", sphere.string()});
  CHECK(bad.code == 1);
  CHECK(bad.data()["valid"] == false);
  const auto junk = temp_file("fillperm-junk.json", "{not json");
  CHECK(call({"t1", junk.string()}).code == 65);
  CHECK(call({"t1", "/nonexistent/fillperm.json"}).code == 74);
  std::filesystem::remove(torus);
  std::filesystem::remove(sphere);
  std::filesystem::remove(junk);
}

TEST_CASE("bounds and hyp") {
  const json b4 = call({"bounds", "--genus", "4"}).data();
  CHECK(b4["upper"] == 84480);
  CHECK(b4["lower"].is_null());
  const json b3 = call({"bounds", "--genus", "3", "--exact"}).data();
  CHECK(b3["upper"] == 672);
  CHECK(b3["lower"] == "1/100");
  CHECK(b3["within_bounds"] == true);
  CHECK(call({"bounds", "--genus", "2"}).code == 1);
  const json big = call({"bounds", "--genus", "30"}).data();
  CHECK(big["upper"].is_string());

  const json h = call({"hyp", "--genus", "3"}).data();
  CHECK(h["max_coincident"] == 168);
  CHECK(h["inj_radius_quoted"] == 0.3253);
  CHECK(h["inj_radius_discrepancy"] != "none");
  CHECK(call({"hyp", "--genus", "1"}).code == 1);
}

TEST_CASE("diagram") {
  const Result svg = call({"diagram", "[2,3,4,1]", "--genus", "1"});
  CHECK(svg.code == 0);
  CHECK(svg.out.rfind("<?xml", 0) == 0);
  CHECK(svg.out.find("version=\"1.1\"") != std::string::npos);
  CHECK(occurrences(svg.out, "class=\"edge\"") == 4);
  CHECK(occurrences(svg.out, "class=\"chord\"") == 2);
  CHECK(svg.out.find("</svg>") != std::string::npos);
  const auto path = std::filesystem::temp_directory_path() / "fillperm-diagram.svg";
  const json j = call({"diagram", "[2,3,4,1]", "--genus", "1", "-o", path.string()}).data();
  CHECK(j["edges"] == 4);
  CHECK(j["chords"] == 2);
  CHECK(std::filesystem::file_size(path) > 0);
  std::filesystem::remove(path);
  CHECK(call({"diagram", "[2,3,4,1]", "--genus", "1", "-o", "/nonexistent/dir/x.svg"}).code == 74);
}
