#include "jif/cli.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "jif/image_io.hpp"

namespace jif::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) lines.push_back(line);
  return lines;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream is(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(is), {}};
}

class CliFiles : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("jif_cli_test_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::remove_all(dir_);
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::filesystem::path dir_;
};

TEST(ParseComplex, Forms) {
  EXPECT_EQ(parse_complex("0.1"), (ComplexValue{0.1, 0.0}));
  EXPECT_EQ(parse_complex("-0.3124999945+0.7942708667i"), (ComplexValue{-0.3124999945, 0.7942708667}));
  EXPECT_EQ(parse_complex("1.5-7.6i"), (ComplexValue{1.5, -7.6}));
  EXPECT_EQ(parse_complex("+2i"), (ComplexValue{0.0, 2.0}));
  EXPECT_EQ(parse_complex("-i"), (ComplexValue{0.0, -1.0}));
  EXPECT_EQ(parse_complex("1+i"), (ComplexValue{1.0, 1.0}));
  EXPECT_EQ(parse_complex("1e-3-2.5e+1i"), (ComplexValue{1e-3, -25.0}));
  EXPECT_EQ(parse_complex(".5"), (ComplexValue{0.5, 0.0}));
  for (const char* bad : {"", "abc", "1+2", "1 + 2i", "1+2j", "--1", "1++2i", "inf", "nan+1i", "1e400"}) {
    EXPECT_THROW(parse_complex(bad), std::invalid_argument) << bad;
  }
}

TEST(ParseWindowAndSize, Forms) {
  Viewport v;
  parse_window("-2.5,1,-1.5,1.5", v);
  EXPECT_EQ(v.re_min, -2.5);
  EXPECT_EQ(v.re_max, 1.0);
  EXPECT_EQ(v.im_min, -1.5);
  EXPECT_EQ(v.im_max, 1.5);
  parse_size("640x480", v);
  EXPECT_EQ(v.width_px, 640);
  EXPECT_EQ(v.height_px, 480);
  EXPECT_THROW(parse_window("1,2,3", v), std::invalid_argument);
  EXPECT_THROW(parse_window("1,2,3,4,5", v), std::invalid_argument);
  EXPECT_THROW(parse_size("640", v), std::invalid_argument);
  EXPECT_THROW(parse_size("0x10", v), std::invalid_argument);
  EXPECT_THROW(parse_size("10x-1", v), std::invalid_argument);
}

TEST(Run, OrbitReproducesFirstQuadraticTable) {
  const Result r = invoke({"orbit", "--n", "2", "--alpha", "0.5", "--beta", "0.5", "--c", "0.1",
                           "--z0", "-0.3124999945+0.7942708667i", "--decimals", "4"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto lines = lines_of(r.out);
  ASSERT_GT(lines.size(), 22u);
  EXPECT_EQ(lines[0], "k,re,im,abs,abs_re");
  auto abs_re = [&](int row) { return lines[row].substr(lines[row].rfind(',') + 1); };
  EXPECT_EQ(abs_re(1), "0.3125");
  EXPECT_EQ(abs_re(2), "0.0478");
  EXPECT_EQ(abs_re(21), "0.1127");
}

TEST(Run, OrbitValidation) {
  const Result r = invoke({"orbit", "--n", "2", "--alpha", "1.5", "--beta", "0.5", "--z0", "0"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_EQ(lines_of(r.err).size(), 1u);
  EXPECT_NE(r.err.find("alpha"), std::string::npos);
  EXPECT_EQ(invoke({"orbit", "--n", "1", "--alpha", "0.5", "--beta", "0.5", "--z0", "0"}).code, kExitUsage);
  EXPECT_EQ(invoke({"orbit", "--n", "2", "--alpha", "0.5", "--beta", "0.5", "--z0", "1+"}).code, kExitUsage);
  EXPECT_EQ(invoke({"orbit", "--n", "2", "--alpha", "0.5", "--beta", "0.5"}).code, kExitUsage);
  EXPECT_EQ(invoke({"orbit", "--n", "2", "--alpha", "0.5", "--beta", "0.5", "--z0", "0", "--max-iter", "0"}).code,
            kExitUsage);
  EXPECT_EQ(invoke({"orbit", "--n", "two", "--alpha", "0.5", "--beta", "0.5", "--z0", "0"}).code, kExitUsage);
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({"bogus"}).code, kExitUsage);
}

TEST(Run, HelpExitsCleanly) {
  const Result r = invoke({"--help"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("orbit"), std::string::npos);
}

TEST(Run, RootsCsv) {
  const Result r = invoke({"roots", "--n", "2", "--c", "0.1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto lines = lines_of(r.out);
  ASSERT_EQ(lines.size(), 3u);
  EXPECT_EQ(lines[0], "re,im,residual");
  EXPECT_EQ(lines[1].rfind("0.11270166537925", 0), 0u);
  EXPECT_EQ(lines[2].rfind("0.88729833462074", 0), 0u);
}

TEST(Run, RootsNonConvergenceIsRuntimeFailure) {
  const Result r = invoke({"roots", "--n", "6", "--c", "0.1", "--max-iter", "1"});
  EXPECT_EQ(r.code, kExitRuntime);
  EXPECT_FALSE(r.err.empty());
}

TEST_F(CliFiles, RenderWritesValidPpm) {
  const auto path = dir_ / "m.ppm";
  const Result r = invoke({"render", "--mode", "mandelbrot", "--n", "2", "--alpha", "0.5", "--beta",
                           "0.5", "--size", "120x80", "--window", "-2,2,-2,2", "--max-iter", "100",
                           "--out", path.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const std::string bytes = read_file(path);
  const PpmHeader header = parse_ppm_header(bytes);
  EXPECT_EQ(header.width_px, 120);
  EXPECT_EQ(header.height_px, 80);
  EXPECT_EQ(header.maxval, 255);
  EXPECT_EQ(bytes.size(), header.data_offset + 3u * 120 * 80);
}

TEST_F(CliFiles, IdenticalFlagsGiveIdenticalFilesForAnyThreadCount) {
  const std::vector<std::string> base{"render", "--mode", "julia", "--n", "3", "--alpha", "0.8",
                                      "--beta", "0.8", "--param", "0.1", "--size", "90x70",
                                      "--scheme", "banded", "--out"};
  auto with_out = [&](const std::string& name) {
    auto args = base;
    args.push_back((dir_ / name).string());
    return args;
  };
  ::setenv("JF_THREADS", "1", 1);
  ASSERT_EQ(invoke(with_out("a.ppm")).code, kExitOk);
  ::setenv("JF_THREADS", "9", 1);
  ASSERT_EQ(invoke(with_out("b.ppm")).code, kExitOk);
  ::unsetenv("JF_THREADS");
  ASSERT_EQ(invoke(with_out("c.ppm")).code, kExitOk);
  EXPECT_EQ(read_file(dir_ / "a.ppm"), read_file(dir_ / "b.ppm"));
  EXPECT_EQ(read_file(dir_ / "a.ppm"), read_file(dir_ / "c.ppm"));

  ::setenv("JF_THREADS", "zero", 1);
  EXPECT_EQ(invoke(with_out("d.ppm")).code, kExitUsage);
  ::unsetenv("JF_THREADS");
  EXPECT_FALSE(std::filesystem::exists(dir_ / "d.ppm"));
}

TEST_F(CliFiles, FailedRenderLeavesNoFile) {
  const auto path = dir_ / "nested" / "x.ppm";
  const Result r = invoke({"render", "--size", "8x8", "--out", path.string()});
  EXPECT_EQ(r.code, kExitRuntime);
  EXPECT_FALSE(std::filesystem::exists(path));
  EXPECT_FALSE(std::filesystem::exists(dir_ / "nested"));
}

TEST(Run, RenderValidation) {
  EXPECT_EQ(invoke({"render", "--mode", "julia", "--size", "8x8"}).code, kExitUsage);
  EXPECT_EQ(invoke({"render", "--mode", "spiral"}).code, kExitUsage);
  EXPECT_EQ(invoke({"render", "--window", "2,-2,-2,2"}).code, kExitUsage);
  EXPECT_EQ(invoke({"render", "--size", "5000x5000"}).code, kExitUsage);
  EXPECT_EQ(invoke({"render", "--beta", "1.2"}).code, kExitUsage);
}

TEST(Run, SymCheck) {
  const Result conj = invoke({"symcheck", "--n", "2", "--size", "64x64", "--symmetry", "conjugation"});
  ASSERT_EQ(conj.code, kExitOk) << conj.err;
  EXPECT_EQ(conj.out, "mismatch=0\n");
  const Result point = invoke({"symcheck", "--n", "3", "--alpha", "0.8", "--beta", "0.8", "--size",
                               "64x64", "--symmetry", "point"});
  ASSERT_EQ(point.code, kExitOk) << point.err;
  EXPECT_EQ(point.out, "mismatch=0\n");
  EXPECT_EQ(invoke({"symcheck", "--window", "-2.5,1,-1.5,1.5", "--symmetry", "point"}).code, kExitUsage);
}

}  // namespace
}  // namespace jif::cli
