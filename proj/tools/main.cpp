#include <iostream>

#include "CLI11.hpp"
#include "analysis.hpp"

int main(int argc, char** argv) {
  using namespace macaulay::cli;
  CLI::App app{"Artinian algebras from Macaulay inverse systems"};
  AnalysisRequest request;
  std::string format = "text";
  app.add_option("command", request.command, "hilbert | socle | delta | mmatrix | compressed | graded | paper-examples")
      ->required()
      ->check(CLI::IsMember(commands()));
  app.add_option("generators", request.generators, "dual generators, e.g. \"y1^3*y2^2 + y2^4\"");
  app.add_option("-n", request.num_vars, "number of variables");
  app.add_option("-q", request.q, "catalecticant order (delta)");
  app.add_option("-p", request.p, "step, 1 <= p <= s-1 (mmatrix)");
  app.add_flag("--check", request.check, "cross-check through an independent route");
  app.add_option("--seed", request.seed, "seed for sampled examples");
  app.add_option("--format", format, "text or structured")->check(CLI::IsMember({"text", "structured"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    const Report report = run(request);
    std::cout << (format == "structured" ? report.dump(2) + "\n" : render_text(report));
    if (request.command == "paper-examples" && !report["all_passed"].get<bool>()) return 4;
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e);
  }
}
