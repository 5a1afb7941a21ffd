// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "test_support.hpp"
#include "twistwidth/cli.hpp"
#include "twistwidth/io.hpp"

namespace twistwidth {
namespace {

using testing::fixture;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch_dir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("twistwidth_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

TEST(IoTest, FixturesRoundTripByteForByte) {
  for (const char* name : {"d_b.json", "d_r.json", "f53.json", "d0.json"}) {
    const std::string text = detail::read_file(fixture(name));
    EXPECT_EQ(serialize(parse_set_system(text)), text) << name;
  }
  for (const char* name : {"r4.json", "l0.json", "l1.json", "t2.json", "point.json"}) {
    const std::string text = detail::read_file(fixture(name));
    EXPECT_EQ(serialize(parse_ribbon_graph(text)), text) << name;
  }
}

TEST(IoTest, FixturesMatchInMemoryInstances) {
  EXPECT_EQ(parse_set_system_file(fixture("d_b.json")), testing::bouchet());
  EXPECT_EQ(parse_set_system_file(fixture("d_r.json")), testing::counterexample_system());
  EXPECT_EQ(parse_set_system_file(fixture("f53.json")), testing::four_loop_family());
  EXPECT_EQ(parse_ribbon_graph_file(fixture("r4.json")), testing::four_loops());
  EXPECT_EQ(parse_ribbon_graph_file(fixture("t2.json")), testing::torus_pair());
}

TEST(IoTest, NormalizesOrderAndDuplicates) {
  const SetSystem d = parse_set_system(R"({"ground":3,"feasible":[[3,1],[],[1,3]]})");
  EXPECT_EQ(serialize(d), "{\"ground\":3,\"feasible\":[[],[1,3]]}\n");
}

TEST(IoTest, ErrorCodes) {
  auto code_of = [](const std::string& text) {
    try {
      parse_set_system(text);
    } catch (const Error& e) {
      return e.code();
    }
    ADD_FAILURE() << "no error for " << text;
    return Errc::kParseError;
  };
  EXPECT_EQ(code_of(R"({"ground":4,"feasible":[[9]]})"), Errc::kOutOfRangeElement);
  EXPECT_EQ(code_of(R"({"ground":4,"feasible":[[0]]})"), Errc::kOutOfRangeElement);
  EXPECT_EQ(code_of(R"({"ground":65,"feasible":[[]]})"), Errc::kGroundSetTooLarge);
  EXPECT_EQ(code_of(R"({"ground":-1,"feasible":[[]]})"), Errc::kParseError);
  EXPECT_EQ(code_of(R"({"ground":4})"), Errc::kParseError);
  EXPECT_EQ(code_of(R"({"ground":4,"feasible":[["a"]]})"), Errc::kParseError);
  EXPECT_EQ(code_of("not json"), Errc::kParseError);
  try {
    parse_ribbon_graph(R"({"edges":[{"twisted":false}],"vertices":[[0]]})");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kInvalidGraph);
  }
  EXPECT_THROW(parse_set_system_file("/nonexistent/file.json"), Error);
}

TEST(IoTest, ScriptParsing) {
  const ChoiceStrategy s = parse_script_file(fixture("d_b_script.json"));
  const WidthTrace trace = monotone_sequence(testing::bouchet(), s);
  EXPECT_EQ(trace.sequence, (std::vector<Element>{0, 1}));
  EXPECT_THROW(parse_script(R"({"choices":[{"X":[1]}]})"), Error);
}

TEST(CliTest, MonotoneOnBouchet) {
  const Outcome r = run_cli({"dm", "monotone", fixture("d_b.json")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "sequence 2 1\nwidths 2 2 4\nmax_twist_width 4\nfeasible_final true\n");
  const Outcome j = run_cli({"--json", "dm", "monotone", fixture("d_b.json")});
  EXPECT_EQ(j.out,
            "{\"sequence\":[2,1],\"widths\":[2,2,4],\"max_twist_width\":4,\"feasible_final\":true}\n");
}

TEST(CliTest, ScriptedMonotone) {
  const Outcome r = run_cli({"--format", "json", "dm", "monotone", fixture("d_b.json"), "--script",
                             fixture("d_b_script.json")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out,
            "{\"sequence\":[1,2],\"widths\":[2,2,4],\"max_twist_width\":4,\"feasible_final\":true}\n");
  const Outcome f = run_cli({"dm", "monotone", fixture("f53.json"), "--script",
                             fixture("f53_script.json")});
  EXPECT_EQ(f.code, 0) << f.err;
  EXPECT_NE(f.out.find("sequence 1 3\n"), std::string::npos);
}

TEST(CliTest, MonotoneRefusesCounterexampleSystem) {
  const Outcome r = run_cli({"dm", "monotone", fixture("d_r.json")});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.err.rfind("NotDeltaMatroid", 0), 0u) << r.err;
}

TEST(CliTest, SetSystemActions) {
  EXPECT_EQ(run_cli({"dm", "maxwidth", "--brute", fixture("d_r.json")}).out, "5\n");
  EXPECT_EQ(run_cli({"dm", "maxwidth", fixture("d_r.json")}).out, "5\n");
  EXPECT_EQ(run_cli({"dm", "width", fixture("d_r.json")}).out, "r_min 0\nr_max 4\nwidth 4\n");
  EXPECT_EQ(run_cli({"dm", "check", fixture("d_b.json")}).out, "holds\n");
  EXPECT_EQ(run_cli({"dm", "check", fixture("d_r.json")}).out, "fails: X={} Y={3,4,5} u=3\n");
  EXPECT_EQ(run_cli({"dm", "hat", fixture("d_r.json")}).out, "{1,2}\n{3,4,5}\n");
  EXPECT_EQ(run_cli({"dm", "twist", fixture("d_b.json"), "-A", "1"}).out,
            "ground 4\n{1}\n{2}\n{3}\n{4}\n{1,2,3}\n{1,2,4}\n{1,3,4}\n");
  EXPECT_EQ(run_cli({"dm", "profile", fixture("d_r.json"), "-S", "1,2"}).out, "4 3 5\n");
  EXPECT_EQ(run_cli({"dm", "profile", fixture("d_b.json"), "-S", ""}).out, "2\n");
}

TEST(CliTest, RibbonActions) {
  EXPECT_EQ(run_cli({"rg", "maxpdgenus", fixture("r4.json")}).out, "4\n");
  EXPECT_EQ(run_cli({"rg", "genus", fixture("r4.json")}).out, "2\n");
  EXPECT_EQ(run_cli({"rg", "deficiency", fixture("r4.json")}).out, "1\n");
  EXPECT_EQ(run_cli({"rg", "pdgenus", fixture("r4.json"), "-A", "1,3"}).out, "4\n");
  EXPECT_EQ(run_cli({"rg", "boundaries", fixture("l0.json"), "-A", "1"}).out, "2\n");
  EXPECT_EQ(run_cli({"rg", "quasitrees", fixture("l1.json")}).out, "{}\n{1}\n");
  EXPECT_EQ(run_cli({"rg", "dm", fixture("r4.json")}).out, detail::read_file(fixture("f53.json")));
  const Outcome j = run_cli({"--json", "rg", "genus", fixture("t2.json")});
  EXPECT_EQ(j.out, "{\"genus\":2,\"components\":1,\"vertices\":1,\"edges\":2,\"faces\":1}\n");
}

TEST(CliTest, PartialDualToFile) {
  const auto dir = scratch_dir("pdual");
  const std::string path = (dir / "dual.json").string();
  const Outcome r = run_cli({"rg", "pdual", fixture("r4.json"), "-A", "1,3", "-o", path});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(run_cli({"rg", "genus", path}).out, "4\n");
  const Outcome direct = run_cli({"rg", "pdual", fixture("r4.json"), "-A", "1,3"});
  EXPECT_EQ(direct.out, detail::read_file(path));
  // Dualizing again on the same edges gives back the genus of the original.
  EXPECT_EQ(run_cli({"rg", "pdgenus", path, "-A", "1,3"}).out, "2\n");
}

TEST(CliTest, JsonAndTextAgree) {
  const Outcome t = run_cli({"dm", "maxwidth", fixture("f53.json")});
  const Outcome j = run_cli({"--json", "dm", "maxwidth", fixture("f53.json")});
  EXPECT_EQ(std::stoi(t.out), Json::parse(j.out)["max_twist_width"].get<int>());
  const Outcome tp = run_cli({"dm", "profile", fixture("f53.json"), "-S", "1,3"});
  const Outcome jp = run_cli({"--json", "dm", "profile", fixture("f53.json"), "-S", "1,3"});
  EXPECT_EQ(jp.out, "{\"sequence\":[1,3],\"widths\":[2,2,4]}\n");
  EXPECT_EQ(tp.out, "2 2 4\n");
}

TEST(CliTest, DomainErrorsExitOne) {
  Outcome r = run_cli({"dm", "twist", fixture("d_b.json"), "-A", "9"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.err.rfind("OutOfRangeElement", 0), 0u) << r.err;
  r = run_cli({"dm", "profile", fixture("d_b.json"), "-S", "1,1"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.err.rfind("RepeatedElement", 0), 0u) << r.err;
  r = run_cli({"rg", "deficiency", fixture("r4.json")});
  EXPECT_EQ(r.code, 0);
}

TEST(CliTest, UsageErrorsExitTwo) {
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"dm"}).code, 2);
  EXPECT_EQ(run_cli({"dm", "bogus"}).code, 2);
  EXPECT_EQ(run_cli({"dm", "twist", fixture("d_b.json")}).code, 2);
  EXPECT_EQ(run_cli({"dm", "twist", fixture("d_b.json"), "-A", "x"}).code, 2);
  EXPECT_EQ(run_cli({"--format", "xml", "dm", "width", fixture("d_b.json")}).code, 2);
  EXPECT_EQ(run_cli({"dm", "width", "/nonexistent.json"}).code, 2);
  EXPECT_EQ(run_cli({"--help"}).code, 0);
}

TEST(CliTest, VerifyAll) {
  const Outcome r = run_cli({"verify", "all", "--seed", "42", "--trials", "5"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("PASS pairwise_oracle_equivalence"), std::string::npos);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  const Outcome j = run_cli({"--json", "verify", "all", "--trials", "2"});
  EXPECT_TRUE(Json::parse(j.out)["all_passed"].get<bool>());
  EXPECT_EQ(run_cli({"verify", "all", "--trials", "0"}).code, 2);
}

}  // namespace
}  // namespace twistwidth
