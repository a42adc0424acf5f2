// End-to-end tests driving the installed CLI binary through a shell.

#include "poskit/json_io.hpp"

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

const std::string cli = std::string("'") + POSKIT_CLI_PATH + "'";

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& command) {
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[4096];
  while (std::size_t n = std::fread(buffer, 1, sizeof(buffer), pipe))
    result.output.append(buffer, n);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string trimmed(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == ' ')) s.pop_back();
  return s;
}

std::filesystem::path write_temp(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path);
  out << contents;
  return path;
}

} // namespace

TEST_CASE("flag build pipes into blowup seshadri") {
  const RunResult r = run(cli + " flag build A3 | " + cli + " blowup seshadri --L 3,1,2");
  CHECK(r.exit_code == 0);
  CHECK(trimmed(r.output) == "1");
}

TEST_CASE("flag build output round-trips through every model consumer") {
  CHECK(run(cli + " flag build b2 | " + cli + " model validate").exit_code == 0);
  CHECK(run(cli + " flag build b2 | " + cli + " model nef --L 1,0").exit_code == 0);
  CHECK(run(cli + " flag build b2 | " + cli + " blowup nefcone").exit_code == 0);
  CHECK(trimmed(run(cli + " flag build b2 | " + cli + " model intersect --L 3,1 --curve C2").output) ==
        "1");
  const RunResult r = run(cli + " flag projective 4 | " + cli + " model seshadri --L 6");
  CHECK(trimmed(r.output) == "6");

  // --json is accepted after the subcommand as well.
  const RunResult tail_json = run(cli + " flag build a2 | " + cli + " model ample --L 1,2 --json");
  const poskit::Json envelope = poskit::parse_json_text(tail_json.output);
  CHECK(envelope["payload"]["value"] == poskit::Json(true));
}

TEST_CASE("toric seshadri of the zero divisor is 0") {
  const auto p2 = write_temp("poskit_p2.json",
                             R"({"dim":2,"rays":[[1,0],[0,1],[-1,-1]],"max_cones":[[0,1],[0,2],[1,2]]})");
  const RunResult r = run(cli + " toric seshadri " + p2.string() + " --D 0,0,0 --cone 0");
  CHECK(r.exit_code == 0);
  CHECK(trimmed(r.output) == "0");
}

TEST_CASE("blowup isnef explains the failing strict transform") {
  const auto model = run(cli + " flag build A2");
  const auto path = write_temp("poskit_a2.json", model.output);
  const RunResult r = run(cli + " blowup isnef " + path.string() + " --b 1,0 --c 1");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("false") != std::string::npos);
  CHECK(r.output.find("strict transform") != std::string::npos);
}

TEST_CASE("json and text modes report identical values") {
  const std::string tail = " flag build A3 | " + cli;
  const RunResult text = run(cli + tail + " blowup seshadri --L 5,7,9");
  const RunResult json = run(cli + tail + " --json blowup seshadri --L 5,7,9");
  CHECK(text.exit_code == 0);
  CHECK(json.exit_code == 0);
  const poskit::Json envelope = poskit::parse_json_text(json.output);
  CHECK(envelope["status"] == poskit::Json("ok"));
  CHECK(envelope["payload"]["seshadri"]["num"] == poskit::Json(5));
  CHECK(envelope["payload"]["seshadri"]["den"] == poskit::Json(1));
  CHECK(trimmed(text.output) == "5");
}

TEST_CASE("exit codes: input_error 2, refused 3") {
  CHECK(run(cli + " no_such_command 2>/dev/null").exit_code == 2);

  const auto bad = write_temp("poskit_bad.json", "{\"name\": }");
  const RunResult malformed = run(cli + " model validate " + bad.string() + " 2>&1");
  CHECK(malformed.exit_code == 2);
  CHECK(malformed.output.find("byte") != std::string::npos);

  const RunResult refused =
      run(cli + " flag build A2 | " + cli + " model seshadri --L 0,1 2>/dev/null");
  CHECK(refused.exit_code == 3);
}

TEST_CASE("cone subcommands work against files and stdin") {
  const auto cone = write_temp("poskit_cone.json", R"({"dim":2,"generators":[[1,0],[-1,0],[0,1]]})");
  const RunResult dual = run(cli + " cone dual " + cone.string());
  CHECK(dual.exit_code == 0);
  const poskit::RationalCone d = poskit::cone_from_json(poskit::parse_json_text(dual.output));
  REQUIRE(d.generators.size() == 1);
  CHECK(d.generators[0] == poskit::QVec{poskit::Rat(0), poskit::Rat(1)});

  const auto ray = write_temp("poskit_ray.json", R"({"dim":2,"generators":[[0,1]]})");
  CHECK(trimmed(run(cli + " cone dual " + cone.string() + " | " + cli + " cone contains --v 0,3").output) ==
        "true");
  const RunResult eq = run(cli + " cone equal " + ray.string() + " " + cone.string());
  CHECK(trimmed(eq.output) == "false");
}

TEST_CASE("bundle subcommands consume a model from stdin and a fan by flag") {
  const auto splitting = write_temp("poskit_split.json",
                                    R"({"rank":2,"c1":[5,5],"per_curve":{"C1":[2,3],"C2":[1,4]}})");
  const RunResult nef = run(cli + " flag build A2 | " + cli + " bundle nef " + splitting.string());
  CHECK(trimmed(nef.output) == "true");
  const RunResult ses =
      run(cli + " flag build A2 | " + cli + " bundle seshadri " + splitting.string());
  CHECK(trimmed(ses.output) == "1");

  const auto fan = write_temp(
      "poskit_f2.json", R"({"dim":2,"rays":[[1,0],[0,1],[-1,2],[0,-1]],"max_cones":[[0,1],[1,2],[2,3],[3,0]]})");
  const auto fan_split = write_temp(
      "poskit_fan_split.json",
      R"({"rank":1,"c1":[2,1,0,0],"per_curve":{"w0":[1],"w1":[0],"w2":[1],"w3":[2]}})");
  const RunResult fan_ses = run(cli + " bundle seshadri " + fan_split.string() + " --fan " +
                                fan.string() + " --cone 0 < /dev/null");
  CHECK(fan_ses.exit_code == 0);
  CHECK(trimmed(fan_ses.output) == "0");
  CHECK(run(cli + " bundle ample " + fan_split.string() + " --fan " + fan.string() +
            " 2>/dev/null < /dev/null")
            .exit_code == 3);
}

TEST_CASE("POSKIT_MAX_CONE_DIM raises the duality bound") {
  std::string gens = "[";
  for (int i = 0; i < 13; ++i) {
    if (i) gens += ",";
    std::string row = "[";
    for (int j = 0; j < 13; ++j) row += (j ? "," : "") + std::string(i == j ? "1" : "0");
    gens += row + "]";
  }
  gens += "]";
  const auto big = write_temp("poskit_big_cone.json", R"({"dim":13,"generators":)" + gens + "}");
  CHECK(run(cli + " cone dual " + big.string() + " 2>/dev/null").exit_code == 3);
  CHECK(run("POSKIT_MAX_CONE_DIM=13 " + cli + " cone dual " + big.string()).exit_code == 0);
}

TEST_CASE("toric walls and validate emit documents") {
  const auto fan = write_temp(
      "poskit_f2b.json", R"({"dim":2,"rays":[[1,0],[0,1],[-1,2],[0,-1]],"max_cones":[[0,1],[1,2],[2,3],[3,0]]})");
  const RunResult walls = run(cli + " toric walls " + fan.string());
  const poskit::Json j = poskit::parse_json_text(walls.output);
  REQUIRE(j.size() == 4);
  CHECK(j[1]["relation"] == poskit::Json::array({2}));

  const RunResult report = run(cli + " --json toric validate " + fan.string());
  const poskit::Json envelope = poskit::parse_json_text(report.output);
  CHECK(envelope["payload"]["report"]["pass"] == poskit::Json(true));
}
