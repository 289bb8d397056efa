#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <string>

#include "support/process.hpp"

using pai::testkit::golden_path;
using pai::testkit::read_file;
using pai::testkit::run_cli;

namespace {

struct GoldenCase {
  const char* args;
  const char* file;
};

const GoldenCase kGoldens[] = {
    {"sweep-omega --channel F0", "omega_f0.csv"},
    {"sweep-omega --channel F2", "omega_f2.csv"},
    {"sweep-delta --channel F0", "delta_f0.csv"},
    {"sweep-delta --channel F2", "delta_f2.csv"},
    {"populations", "populations.csv"},
    {"sweep-theta --channel F0", "theta_f0.csv"},
    {"sweep-theta --channel F2", "theta_f2.csv"},
};

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("pai_cli_test_" + name);
}

}  // namespace

TEST(Cli, GoldenFiles) {
  for (const auto& g : kGoldens) {
    const auto r = run_cli(g.args);
    EXPECT_EQ(r.status, 0) << g.args;
    EXPECT_EQ(r.out, read_file(golden_path(g.file))) << g.args;
  }
}

TEST(Cli, ThreadsDoNotChangeBytes) {
  const auto a = run_cli("sweep-delta --channel F2 --threads 1");
  const auto b = run_cli("sweep-delta --channel F2 --threads 3");
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, RatioOutputs) {
  EXPECT_EQ(run_cli("ratio --channel F2 --amps 0.5,0.7071067811865476,0.5").out,
            "channel,with,without,cross\nF2,0.5625,0.3125,0.25\n");
  EXPECT_EQ(run_cli("ratio --channel F0 --omega 0").out, "channel,with,without,cross\nF0,1,1,0\n");
  // Amplitudes are renormalized.
  EXPECT_EQ(run_cli("ratio --channel F0 --amps 0,2,0").out,
            "channel,with,without,cross\nF0,1,1,0\n");
}

TEST(Cli, GroundAndBandMin) {
  EXPECT_EQ(run_cli("ground").out,
            "omega,delta,epsilon,q,energy,c_m1,c_0,c_p1\n0,0,0.65,0,-0.65,0,1,0\n");
  const auto r = run_cli("band-min --omega 1");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "omega,delta,epsilon,q_star,energy");
  EXPECT_NE(r.out.find("\n1,0,0.65,0,"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli("ratio --channel F1 --omega 1").status, 3);
  EXPECT_EQ(run_cli("sweep-theta --channel F1").status, 3);
  EXPECT_EQ(run_cli("ground --omega -1").status, 2);
  EXPECT_EQ(run_cli("band-scan --points 1").status, 2);
  EXPECT_EQ(run_cli("sweep-omega --omega-min 5 --omega-max 1").status, 2);
  EXPECT_EQ(run_cli("ratio --amps 0,0,0").status, 2);
  EXPECT_EQ(run_cli("bogus").status, 2);
  EXPECT_EQ(run_cli("").status, 2);
  EXPECT_EQ(run_cli("populations --out /nonexistent-dir/x.csv").status, 4);
  EXPECT_EQ(run_cli("--help").status, 0);
}

TEST(Cli, OptionalColumnsAndComments) {
  const auto r = run_cli("sweep-omega --points 3 --no-interference-column --units-comment");
  EXPECT_EQ(r.out.substr(0, 2), "# ");
  EXPECT_NE(r.out.find("\nx,with,cross\n0,1,0\n"), std::string::npos);
}

TEST(Cli, WritesFileAndPlotScript) {
  const auto csv = temp_path("pop.csv");
  const auto gp = temp_path("pop.gp");
  const auto r = run_cli("populations --points 5 --out " + csv.string() + " --plot-script " +
                         gp.string());
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(read_file(csv.string()), pai::testkit::run_cli("populations --points 5").out);
  EXPECT_NE(read_file(gp.string()).find(csv.string()), std::string::npos);
  std::filesystem::remove(csv);
  std::filesystem::remove(gp);
}
