#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "cli.hpp"
#include "poincare/error.hpp"

namespace poincare::cli {
namespace {

CliResult exec(std::vector<std::string> args) { return execute(args); }

TEST(ParseArgsTest, SolveInfersQ) {
  const auto req = parse_args({"solve", "--p", "0,2,1", "--N", "8"});
  EXPECT_EQ(req.command, Command::Solve);
  EXPECT_EQ(req.precision, 8);
  ASSERT_TRUE(req.q.has_value());
  EXPECT_EQ(*req.q, FieldElement(Rational(2)));
  EXPECT_EQ(req.p->degree(), 2);
}

TEST(ParseArgsTest, FracIterate) {
  const auto req = parse_args({"frac-iterate", "--p", "0,1,1", "--t", "1/2", "--N", "6"});
  EXPECT_EQ(req.command, Command::FracIterate);
  EXPECT_EQ(*req.t, FieldElement(Rational(1, 2)));
}

TEST(ParseArgsTest, UsageErrorsNameTheFlag) {
  auto message = [](std::vector<std::string> args) {
    try {
      (void)parse_args(args);
    } catch (const UsageError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_NE(message({"solve", "--p", "1,2,1", "--N", "4"}).find("--p"), std::string::npos);
  EXPECT_NE(message({"solve", "--p", "0,2,1", "--N", "0"}).find("--N"), std::string::npos);
  EXPECT_NE(message({"solve", "--p", "0,2,1", "--N", "x"}).find("--N"), std::string::npos);
  EXPECT_NE(message({"solve", "--p", "0,2,1"}).find("--N"), std::string::npos);
  EXPECT_NE(message({"solve", "--p", "0,2,1", "--N", "3", "--q", "3"}).find("--q"), std::string::npos);
  EXPECT_NE(message({"iterate", "--p", "0,2,1", "--N", "3"}).find("--n"), std::string::npos);
  EXPECT_NE(message({"solve", "--p", "0,2,1", "--N", "3", "--output", "xml"}).find("--output"), std::string::npos);
  EXPECT_NE(message({"bogus"}), "no error");
  EXPECT_NE(message({}), "no error");
}

TEST(ParseArgsTest, MalformedRationalIsParseError) {
  try {
    (void)parse_args({"solve", "--p", "0,2/,1", "--N", "4"});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
  }
  EXPECT_EQ(exec({"solve", "--p", "0,2/,1", "--N", "4"}).exit_code, kExitUsage);
}

TEST(RunTest, SolveJson) {
  const auto r = exec({"solve", "--p", "0,2,1", "--N", "4", "--output", "json"});
  EXPECT_EQ(r.exit_code, kExitOk);
  EXPECT_EQ(r.out, "{\"field\":\"Q\",\"precision\":4,\"coeffs\":[\"0\",\"1\",\"1/2\",\"1/6\",\"1/24\"]}\n");
  const auto nonrec = exec({"solve", "--p", "0,2,1", "--N", "4", "--output", "json", "--method", "nonrecursive"});
  EXPECT_EQ(nonrec.out, r.out);
  const auto explicit_g = exec({"solve", "--p", "0,2,1", "--N", "2", "--g", "-1,1;2,-3,1"});
  EXPECT_EQ(explicit_g.out, "0: 0\n1: 1\n2: 1/2\n");
}

TEST(RunTest, VerifyExitCodes) {
  EXPECT_EQ(exec({"verify", "--p", "0,2,1", "--N", "8"}).exit_code, kExitOk);
  const auto bad = exec({"verify", "--p", "0,2,1", "--N", "4", "--f", "0,1,1"});
  EXPECT_EQ(bad.exit_code, kExitResidual);
  EXPECT_NE(bad.out.find("degree 2: 1"), std::string::npos);
}

TEST(RunTest, IterateNegative) {
  const auto r = exec({"iterate", "--p", "0,2,1", "--n", "-1", "--N", "3"});
  EXPECT_EQ(r.exit_code, kExitOk);
  EXPECT_EQ(r.out, "0: 0\n1: 1/2\n2: -1/8\n3: 1/16\n");
}

TEST(RunTest, OtherCommands) {
  EXPECT_EQ(exec({"schroder", "--p", "0,2,1", "--N", "4"}).out, "0: 0\n1: 1\n2: -1/2\n3: 1/3\n4: -1/4\n");
  EXPECT_EQ(exec({"frac-iterate", "--p", "0,1,1", "--t", "1/2", "--N", "3"}).out, "0: 0\n1: 1\n2: 1/2\n3: -1/4\n");
  EXPECT_EQ(exec({"qdiff", "--g", "-1,1", "--q", "2", "--f", "0,1,1"}).out, "0: 1\n1: 3\n");
  EXPECT_EQ(exec({"interp", "--p", "0,1,1", "--j", "3"}).out, "0: 0\n1: -1\n2: 1\n");
  EXPECT_EQ(exec({"interp", "--p", "0,1,1", "--j", "3", "--output", "json"}).out,
            "{\"field\":\"Q\",\"degree\":2,\"coeffs\":[\"0\",\"-1\",\"1\"]}\n");
}

TEST(RunTest, SymbolicField) {
  const auto r = exec({"solve", "--p", "0,q,1", "--field", "Qq", "--N", "2", "--output", "json"});
  EXPECT_EQ(r.exit_code, kExitOk);
  EXPECT_EQ(r.out, "{\"field\":\"Q(q)\",\"precision\":2,\"coeffs\":[\"0\",\"1\",\"1/(q^2-q)\"]}\n");
}

TEST(RunTest, MathPreconditionsExitThree) {
  const auto r = exec({"solve", "--p", "0,1,1", "--N", "4"});
  EXPECT_EQ(r.exit_code, kExitMath);
  EXPECT_NE(r.err.find("q = 1 is a root of unity"), std::string::npos);
  EXPECT_EQ(exec({"frac-iterate", "--p", "0,2,1", "--t", "1/2", "--N", "3"}).exit_code, kExitMath);
  EXPECT_EQ(exec({"iterate", "--p", "0,0,1", "--n", "-1", "--N", "3"}).exit_code, kExitMath);
}

TEST(RunTest, PrecisionCapFromEnvironment) {
  ::setenv("POINCARE_MAX_N", "5", 1);
  EXPECT_EQ(exec({"solve", "--p", "0,2,1", "--N", "6"}).exit_code, kExitUsage);
  EXPECT_EQ(exec({"solve", "--p", "0,2,1", "--N", "5"}).exit_code, kExitOk);
  ::unsetenv("POINCARE_MAX_N");
  EXPECT_EQ(exec({"solve", "--p", "0,2,1", "--N", "257"}).exit_code, kExitUsage);
}

TEST(RunTest, JsonRoundTripVerifies) {
  for (const char* p : {"0,2,1", "0,3,-1,1/2", "0,5/2,0,1"}) {
    const auto solved = exec({"solve", "--p", p, "--N", "7", "--output", "json"});
    ASSERT_EQ(solved.exit_code, kExitOk);
    std::string doc = solved.out;
    doc.pop_back();
    EXPECT_EQ(exec({"verify", "--p", p, "--series", doc}).exit_code, kExitOk) << p;
    const auto path = std::filesystem::temp_directory_path() / "poincare_roundtrip.json";
    std::ofstream(path) << doc;
    EXPECT_EQ(exec({"verify", "--p", p, "--series", "@" + path.string()}).exit_code, kExitOk);
    std::filesystem::remove(path);
  }
  const auto sym = exec({"solve", "--p", "0,q,1", "--field", "Qq", "--N", "4", "--output", "json"});
  std::string doc = sym.out;
  doc.pop_back();
  EXPECT_EQ(exec({"verify", "--p", "0,q,1", "--field", "Qq", "--series", doc}).exit_code, kExitOk);
}

TEST(RunTest, Deterministic) {
  const std::vector<std::string> args = {"frac-iterate", "--p", "0,1,2,-1", "--t", "-3/7", "--N", "8", "--output", "json"};
  EXPECT_EQ(exec(args).out, exec(args).out);
}

TEST(RunTest, Help) {
  const auto r = exec({"--help"});
  EXPECT_EQ(r.exit_code, kExitOk);
  EXPECT_NE(r.out.find("frac-iterate"), std::string::npos);
}

}  // namespace
}  // namespace poincare::cli
