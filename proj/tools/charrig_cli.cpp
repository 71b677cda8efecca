// charrig: command-line front end over the C API.
//
//   charrig inspect corpus/rp2
//   charrig diagram corpus/s1 --degree 1
//   charrig ring corpus/t2 --degrees 1,1 --format pretty
//   charrig pseudo corpus/s2 --cycle corpus/cycles/s2_equator.json
//
// Exit status: 0 when every check passes, 1 when one fails, 2 on input
// errors.

#include "charrig.h"

#include "CLI11.hpp"

#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

namespace {

constexpr int kExitFailed = 1;
constexpr int kExitInput = 2;

struct Args {
  std::string command, complex_path;
  std::vector<int> degrees;
  std::vector<std::string> degree_pairs;
  std::string cycle, format = "canonical", output;
  std::uint64_t seed = 0;
  int max_subdiv = 2;
  int threads = 1;
};

int input_error(const std::string& message) {
  std::cerr << "charrig: " << message << "\n";
  return kExitInput;
}

bool parse_pair(const std::string& text, int& k, int& l) {
  char tail = 0;
  return std::sscanf(text.c_str(), "%d,%d%c", &k, &l, &tail) == 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Differential-character verification on simplicial complexes"};
  app.set_version_flag("--version", std::string(charrig_version()));
  app.require_subcommand(1);
  Args a;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("complex", a.complex_path, "complex file, or a corpus name")->required();
    sub->add_option("--seed", a.seed, "seed for sampled classes")->capture_default_str();
    sub->add_option("--format", a.format, "canonical (JSON) or pretty")
        ->check(CLI::IsMember({"canonical", "pretty"}))
        ->capture_default_str();
    sub->add_option("--max-subdiv", a.max_subdiv, "subdivision budget")
        ->check(CLI::Range(0, 2))
        ->capture_default_str();
    sub->add_option("--threads", a.threads, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();
    sub->add_option("-o,--output", a.output, "write the report here instead of stdout");
  };

  auto* inspect = app.add_subcommand("inspect", "cohomology in Z, Q, Q/Z and integral-form generators");
  auto* diagram = app.add_subcommand("diagram", "exactness and commutativity of the character diagram");
  auto* phi = app.add_subcommand("phi", "equivalence of cocycles and characters");
  auto* ring = app.add_subcommand("ring", "product axioms");
  auto* pseudo = app.add_subcommand("pseudo", "pseudomanifold normalization and bounding");
  for (auto* sub : {inspect, diagram, phi, ring, pseudo}) add_common(sub);
  for (auto* sub : {diagram, phi})
    sub->add_option("--degree", a.degrees, "degree k (repeatable; default 1..dim+1)");
  ring->add_option("--degrees", a.degree_pairs, "degree pair k,l (repeatable; default all with k+l <= dim+1)");
  pseudo->add_option("--cycle", a.cycle, "cycle file (chain JSON)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }
  a.command = app.get_subcommands().front()->get_name();

  std::vector<int> pairs;
  for (const auto& p : a.degree_pairs) {
    int k = 0, l = 0;
    if (!parse_pair(p, k, l)) return input_error("--degrees expects k,l, got '" + p + "'");
    pairs.push_back(k);
    pairs.push_back(l);
  }

  charrig_complex* raw = nullptr;
  if (charrig_complex_load(a.complex_path.c_str(), &raw) != CHARRIG_OK) return input_error(charrig_last_error());
  std::unique_ptr<charrig_complex, decltype(&charrig_complex_free)> x(raw, charrig_complex_free);

  charrig_options o;
  charrig_options_init(&o);
  o.degrees = a.degrees.data();
  o.degree_count = a.degrees.size();
  o.degree_pairs = pairs.data();
  o.pair_count = pairs.size() / 2;
  o.cycle_path = a.cycle.empty() ? nullptr : a.cycle.c_str();
  o.seed = a.seed;
  o.max_subdiv = a.max_subdiv;
  o.threads = a.threads;

  charrig_report* rep = nullptr;
  if (int status = charrig_run(a.command.c_str(), x.get(), &o, &rep); status != CHARRIG_OK)
    return input_error(std::string(charrig_status_name(status)) + ": " + charrig_last_error());
  std::unique_ptr<charrig_report, decltype(&charrig_report_free)> report(rep, charrig_report_free);

  const char* text = a.format == "pretty" ? charrig_report_pretty(rep) : charrig_report_canonical(rep);
  if (a.output.empty()) {
    std::cout << text;
  } else {
    std::FILE* f = std::fopen(a.output.c_str(), "wb");
    if (!f) return input_error("cannot write " + a.output);
    std::fputs(text, f);
    std::fclose(f);
  }
  return charrig_report_passed(rep) ? 0 : kExitFailed;
}
