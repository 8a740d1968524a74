#include <gtest/gtest.h>

#include "analysis.hpp"
#include "macaulay/errors.hpp"

using namespace macaulay;
using cli::AnalysisRequest;
using cli::Report;

namespace {

int exit_code_of(const AnalysisRequest& request) {
  try {
    cli::run(request);
  } catch (const std::exception& e) {
    return cli::exit_code(e);
  }
  return 0;
}

}  // namespace

TEST(Cli, HilbertOfExtremalQuintic) {
  const auto r = cli::run({"hilbert", 2, {"y1^3*y2^2 + y2^4"}, {}, {}, true, 1});
  EXPECT_EQ(r["result"]["hilbert_function"], Report::parse("[1,2,3,3,2,1]"));
  EXPECT_EQ(r["algebra"]["socle_type"], Report::parse("[0,0,0,0,0,1]"));
  EXPECT_TRUE(r["algebra"]["compressed"].get<bool>());
  EXPECT_NE(cli::render_text(r).find("1 2 3 3 2 1"), std::string::npos);
}

TEST(Cli, DeltaOrderZero) {
  const auto r = cli::run({"delta", 2, {"y1^4"}, 0, {}, false, 1});
  const auto& m = r["result"]["forms"][0]["matrix"];
  ASSERT_EQ(m.size(), 5u);
  EXPECT_EQ(m[0][0], "24");
  for (std::size_t i = 1; i < 5; ++i) EXPECT_EQ(m[i][0], "0");
  EXPECT_EQ(exit_code_of({"delta", 2, {"y1^4"}, {}, {}, false, 1}), 2);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(exit_code_of({"hilbert", 2, {"y1 + y3"}, {}, {}, false, 1}), 1);
  EXPECT_EQ(exit_code_of({"hilbert", 2, {"y1^2", "y1^2 + y1"}, {}, {}, false, 1}), 2);
  EXPECT_EQ(exit_code_of({"hilbert", 2, {"y1^2"}, {}, {}, false, 1}), 0);
  EXPECT_EQ(cli::exit_code(std::runtime_error("x")), 4);
}

TEST(Cli, GradedReportVerifiesCertificate) {
  const auto r = cli::run({"graded", 2, {"y1^3*y2 - y1*y2^3"}, {}, {}, false, 1});
  EXPECT_EQ(r["result"]["outcome"], "GRADED");
  EXPECT_TRUE(r["result"]["certificate_verified"].get<bool>());
}

TEST(Cli, StructuredOutputRoundTrips) {
  const auto r = cli::run({"mmatrix", 2, {"y1^3*y2^2 + y2^4"}, {}, 1, false, 1});
  const std::string text = r.dump(2);
  EXPECT_EQ(Report::parse(text).dump(2), text);
}

TEST(Cli, PaperExamplesAreDeterministic) {
  const auto a = cli::paper_examples(7), b = cli::paper_examples(7);
  EXPECT_EQ(a.dump(), b.dump());
  EXPECT_GE(a["total"].get<int>(), 6);
}
