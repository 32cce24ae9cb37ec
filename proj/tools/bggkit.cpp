#include "bggkit/bggkit.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <string>

using namespace bggkit;

int main(int argc, char** argv) {
  CLI::App app{"exact Kostant-homology and curved-Casimir toolkit"};
  app.require_subcommand(1);

  JobSpec job;
  std::string out_file, dump_file;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--type", job.type, "Dynkin type, e.g. A2, B3, G2")->required();
    sub->add_option("--crossed", job.crossed, "crossed node indices, 1-based, comma separated")
        ->required()
        ->delimiter(',');
    sub->add_option("--weight", job.weight,
                    "dominant highest weight in fundamental coordinates, comma separated")
        ->required()
        ->delimiter(',');
    sub->add_option("--format", job.format, "output format (default json; diagram mode: dot)")
        ->check(CLI::IsMember({"json", "text", "dot"}));
    sub->add_option("--max-dim", job.max_dim, "override the module-dimension guardrail");
    sub->add_option("--out", out_file, "write output to FILE instead of stdout");
    sub->add_option("--dump-realization", dump_file,
                    "additionally write the realized algebra (labels, brackets, Killing) as JSON");
  };
  CLI::App* rpt = app.add_subcommand("report", "fast symbolic report");
  CLI::App* ver = app.add_subcommand("verify", "report plus matrix-realization cross-checks");
  CLI::App* dia = app.add_subcommand("diagram", "DOT rendering of the BGG graph");
  add_common(rpt);
  add_common(ver);
  add_common(dia);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  CLI::App* active = rpt->parsed() ? rpt : ver->parsed() ? ver : dia;
  job.mode = active->get_name();
  if (job.mode == "diagram") {
    if (active->count("--format") > 0 && job.format != "dot") {
      std::cerr << "usage error: diagram mode emits dot only\n";
      return 2;
    }
    job.format = "dot";
  }

  try {
    const Report rep = run_report(job);
    if (!dump_file.empty()) {
      Guardrails guards = Guardrails::from_env();
      if (job.max_dim > 0) guards.irrep_dim = job.max_dim;
      const RootSystem rs = build_root_system(DynkinSpec::parse(job.type));
      std::ofstream df(dump_file);
      df << dump_realization_json(realize_algebra(rs, guards)).dump(2) << "\n";
    }
    const std::string text = render_report(rep);
    if (out_file.empty()) {
      std::cout << text;
    } else {
      std::ofstream of(out_file);
      of << text;
    }
    return rep.has_verification && !rep.verification_passed ? 1 : 0;
  } catch (const GuardrailError& e) {
    std::cerr << "guardrail: " << e.what() << "\n";
    return 3;
  } catch (const InternalError& e) {
    std::cerr << "internal invariant failure: " << e.what() << "\n";
    return 4;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
}
