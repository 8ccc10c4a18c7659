#include <gtest/gtest.h>

#include <sys/wait.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;

namespace {

// One directory per test so ctest -j runs do not collide.
fs::path workdir() {
  const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
  const fs::path d = fs::current_path() / "cli_test_files" / info->name();
  fs::create_directories(d);
  return d;
}

int run(const std::string& args) {
  const std::string cmd = std::string(CFGCAUSAL_CLI_PATH) + " " + args + " > " +
                          (workdir() / "stdout").string() + " 2> " + (workdir() / "stderr").string();
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string read(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path write(const std::string& name, const std::string& content) {
  const auto p = workdir() / name;
  std::ofstream(p) << content;
  return p;
}

std::size_t data_lines(const std::string& csv) {
  std::size_t n = 0;
  std::istringstream in(csv);
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      header_seen = true;
      continue;
    }
    ++n;
  }
  return n;
}

}  // namespace

TEST(Cli, InferPrintsOneVerdictPerModel) {
  const auto pair = write("pair.txt", "0 1 1 0 1 0 0 1\n1 1 0 1 0 0 1 1\n");
  ASSERT_EQ(run("infer " + pair.string() + " --model lz-p"), 0);
  const auto out = read(workdir() / "stdout");
  EXPECT_EQ(std::count(out.begin(), out.end(), '\n'), 1);
  EXPECT_NE(out.find("\"model\":\"lz-p\""), std::string::npos);
  ASSERT_EQ(run("infer " + pair.string()), 0);
  const auto all = read(workdir() / "stdout");
  EXPECT_EQ(std::count(all.begin(), all.end(), '\n'), 3);
}

TEST(Cli, InferDiscretizesRealLines) {
  const auto pair = write("reals.txt", "0.1 0.7 0.3 0.9\n1.5 0.2 2.2 0.4\n");
  EXPECT_EQ(run("infer " + pair.string()), 2);
  EXPECT_EQ(run("infer " + pair.string() + " --discretize 2"), 0);
}

TEST(Cli, IdenticalSequencesAreADataError) {
  const auto pair = write("same.txt", "0 1 0 1\n0 1 0 1\n");
  EXPECT_EQ(run("infer " + pair.string()), 2);
  EXPECT_NE(read(workdir() / "stderr").find("identical sequences"), std::string::npos);
}

TEST(Cli, UsageErrorsExitOne) {
  EXPECT_EQ(run(""), 1);
  EXPECT_EQ(run("infer"), 1);
  EXPECT_EQ(run("simulate --out x --trials 0"), 1);
  EXPECT_EQ(run("infer x.txt --model nope"), 1);
  EXPECT_EQ(run("infer x.txt --threshold -1"), 1);
  EXPECT_EQ(run("--help"), 0);
}

TEST(Cli, SimulateDefaultsToTwentyCouplings) {
  const auto prefix = (workdir() / "sim").string();
  ASSERT_EQ(run("simulate --trials 1 --length 64 --models lz-p --out " + prefix), 0);
  EXPECT_EQ(data_lines(read(prefix + ".benchmark.csv")), 20u);
  const auto csv = read(prefix + ".benchmark.csv");
  EXPECT_EQ(csv.rfind("# cfgcausal ", 0), 0u);
  EXPECT_NE(csv.find("seed=0"), std::string::npos);
}

TEST(Cli, GenomeSingleMemberAndRejects) {
  const auto ref = write("ref.fa", ">ref\nACGTACGGTACCATGACGTA\n");
  const auto cohort = write("cohort.fa", ">s1\nACGTACGGTACCATGACCTA\n>s2\nACGTNACG\n");
  const auto prefix = (workdir() / "genome").string();
  ASSERT_EQ(run("genome --reference " + ref.string() + " --cohort " + cohort.string() +
                " --models lz-p --out " + prefix),
            0);
  EXPECT_EQ(data_lines(read(prefix + ".records.csv")), 1u);
  EXPECT_EQ(data_lines(read(prefix + ".rejects.csv")), 1u);
  EXPECT_NE(read(prefix + ".rejects.csv").find("s2,"), std::string::npos);
}

TEST(Cli, AmbiguousReferenceIsADataError) {
  const auto ref = write("bad_ref.fa", ">ref\nACGTNACGT\n");
  const auto cohort = write("cohort2.fa", ">s1\nACGTACGT\n");
  EXPECT_EQ(run("genome --reference " + ref.string() + " --cohort " + cohort.string() +
                " --out " + (workdir() / "bad").string()),
            2);
}
