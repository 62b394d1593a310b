// gzs: faces of Gelfand-Tsetlin polytopes and the Schubert cells they represent.

#include "gzs/cli_io.hpp"
#include "gzs/error.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>

int main(int argc, char** argv) {
  CLI::App app{"Faces of Gelfand-Tsetlin polytopes as Schubert cycles"};
  app.require_subcommand(1);

  std::string lambda;
  std::string vertex;
  std::string borel;
  std::string format = "text";
  unsigned threads = 0;

  const std::pair<const char*, const char*> commands[] = {
      {"vertices", "list the simple vertices sigma_v lambda with their GZ patterns"},
      {"face", "the face Gamma(v,B) and its root set R(v,B)"},
      {"chevalley", "face-based Chevalley expansion of the cell O(v,B)"},
      {"chevalley-classical", "classical Chevalley formula for the class of O(v,B)"},
      {"admissible", "admissibility of (v,B), or the census of all classes"},
      {"verify", "compare face-based and classical expansions over all (v,B)"},
      {"lattice-count", "count lattice points against the Weyl dimension"},
      {"oracle-faces", "brute-force face lattice (n <= 4)"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--lambda", lambda, "strictly increasing weight, e.g. 0,1,3")->required();
    sub->add_option("--vertex", vertex, "sigma_v in one-line notation, e.g. 2,3,1");
    sub->add_option("--borel", borel, "u with B = u B+ u^-1 (default: identity)");
    sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--threads", threads, "worker threads for verify (0: all cores)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return gzs::kExitUsage;
  }

  gzs::RunConfig config;
  try {
    config.command = gzs::parse_command(app.get_subcommands().front()->get_name());
    config.lambda = gzs::AmbientWeight::parse(lambda);
    if (!vertex.empty()) config.vertex = gzs::Permutation::parse(vertex);
    if (!borel.empty()) config.borel = gzs::Permutation::parse(borel);
    config.format = gzs::parse_format(format);
    config.threads = threads;
  } catch (const gzs::Error& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return gzs::kExitUsage;
  }

  const auto result = gzs::run(config);
  (result.exit_code == gzs::kExitUsage ? std::cerr : std::cout) << result.output;
  return result.exit_code;
}
