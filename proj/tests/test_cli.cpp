#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

namespace {

namespace fs = std::filesystem;

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string command = std::string(LINF_EMBED_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("linf_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  void write(const std::string& name, const std::string& text) const { std::ofstream(dir_ / name) << text; }

  fs::path dir_;
};

TEST_F(Cli, GenerateEmbedVerify) {
  ASSERT_EQ(run("gen --color 321 --n 6 --seed 7 --out " + path("m.txt")).code, 0);
  ASSERT_EQ(run("embed --in " + path("m.txt") + " --gain 3 --out " + path("e.txt")).code, 0);
  auto v = run("verify --metric " + path("m.txt") + " --embedding " + path("e.txt"));
  EXPECT_EQ(v.code, 0);
  EXPECT_EQ(v.out, "isometric, k=3, n=6\n");
}

TEST_F(Cli, QuadColorPrintsSums) {
  write("m.txt", "4\n0 1 101/100\n0 2 104/100\n0 3 109/100\n1 2 101/100\n1 3 104/100\n2 3 101/100\n");
  auto r = run("color --in " + path("m.txt") + " --quad 0 1 2 3");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "321\nR1 = 101/50\nR2 = 52/25\nR3 = 21/10\n");
}

TEST_F(Cli, ColorHistogramAndMonoSearch) {
  ASSERT_EQ(run("gen --color 132 --n 6 --seed 1 --out " + path("m.txt")).code, 0);
  auto h = run("color --in " + path("m.txt"));
  EXPECT_EQ(h.code, 0);
  EXPECT_NE(h.out.find("132 15\n"), std::string::npos);
  EXPECT_NE(h.out.find("monochromatic 132"), std::string::npos);
  auto m = run("color --in " + path("m.txt") + " --find-mono 5");
  EXPECT_EQ(m.code, 0);
  EXPECT_EQ(m.out, "color 132, subset 0 1 2 3 4\n");
}

TEST_F(Cli, CertificateHarnessFindsNoForbiddenColors) {
  auto r = run("lemma4 --trials 1000 --seed 1");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("0/1000 random 5-point spaces monochromatic 213/312"), std::string::npos);
  EXPECT_NE(r.out.find("identical multisets"), std::string::npos);
}

TEST_F(Cli, ExactM) {
  write("m.txt", "3\n0 1 1\n0 2 3/2\n1 2 7/4\n");
  auto r = run("exact-m --in " + path("m.txt"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, 6), "m = 2\n");
  ASSERT_EQ(run("gen --color random --n 8 --out " + path("big.txt")).code, 0);
  EXPECT_EQ(run("exact-m --in " + path("big.txt")).code, 2);
}

TEST_F(Cli, TamperedEmbeddingFailsVerification) {
  write("m.txt", "3\n0 1 1\n0 2 2\n1 2 5/2\n");
  write("e.txt", "3 2\n0 0\n-1 1/2\n5/2 -2\n");
  auto r = run("verify --metric " + path("m.txt") + " --embedding " + path("e.txt"));
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("not isometric"), std::string::npos);
  EXPECT_NE(r.out.find("pair (0,2)"), std::string::npos);
}

TEST_F(Cli, MalformedInputExitsTwo) {
  write("bad.txt", "3\n0 1 1\n");
  EXPECT_EQ(run("color --in " + path("bad.txt")).code, 2);
  write("tri.txt", "3\n0 1 1\n0 2 3\n1 2 1\n");
  EXPECT_EQ(run("embed --in " + path("tri.txt") + " --gain 1 --out " + path("e.txt")).code, 2);
  write("m.txt", "2\n0 1 1\n");
  write("e.txt", "3 1\n0\n1\n2\n");
  EXPECT_EQ(run("verify --metric " + path("m.txt") + " --embedding " + path("e.txt")).code, 2);
}

TEST_F(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("gen --color 213 --n 5 --out " + path("m.txt")).code, 2);
  EXPECT_EQ(run("gen --color 321 --out " + path("m.txt")).code, 2);
  ASSERT_EQ(run("gen --color 321 --n 6 --out " + path("m.txt")).code, 0);
  EXPECT_EQ(run("embed --in " + path("m.txt") + " --gain 1 --strategy magic --out " + path("e.txt")).code, 2);
  EXPECT_EQ(run("embed --in " + path("m.txt") + " --gain 1 --epsilon 0 --out " + path("e.txt")).code, 2);
  EXPECT_EQ(run("color --in " + path("m.txt") + " --quad 3 2 1 0").code, 2);
  EXPECT_EQ(run("color --in " + path("m.txt") + " --find-mono 9").code, 2);
  EXPECT_EQ(run("color --in " + path("missing.txt")).code, 2);
}

TEST_F(Cli, RepeatedRunsAreByteIdentical) {
  for (int i = 0; i < 2; ++i) {
    const std::string tag = std::to_string(i);
    ASSERT_EQ(run("gen --color 231 --n 9 --seed 5 --out " + path("m" + tag)).code, 0);
    ASSERT_EQ(run("embed --in " + path("m" + tag) + " --gain 2 --seed 3 --out " + path("e" + tag) + " --cover-out " +
                  path("c" + tag))
                  .code,
              0);
  }
  EXPECT_EQ(slurp(path("m0")), slurp(path("m1")));
  EXPECT_EQ(slurp(path("e0")), slurp(path("e1")));
  EXPECT_EQ(slurp(path("c0")), slurp(path("c1")));
}

TEST_F(Cli, PerturbedEmbeddingCanBeVerifiedAgainstWrittenMetric) {
  write("line.txt", "4\n0 1 1\n0 2 2\n0 3 3\n1 2 1\n1 3 2\n2 3 1\n");
  auto r = run("embed --in " + path("line.txt") + " --gain 1 --epsilon 1/100 --out " + path("e.txt") +
               " --metric-out " + path("p.txt"));
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("perturbed: yes, epsilon 1/100"), std::string::npos);
  EXPECT_EQ(run("verify --metric " + path("p.txt") + " --embedding " + path("e.txt")).code, 0);
  EXPECT_EQ(run("verify --metric " + path("line.txt") + " --embedding " + path("e.txt")).code, 1);
}

}  // namespace
