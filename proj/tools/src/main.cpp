#include <fstream>
#include <iostream>
#include <iterator>
#include <map>

#include <CLI11.hpp>

#include "minkring/cli.hpp"

using minkring::cli::Command;
using minkring::cli::Format;
using minkring::cli::Verb;

namespace {

std::string read_stdin() {
  std::string s((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minkowski ring queries"};
  app.require_subcommand(1);
  app.fallthrough();

  Command cmd;
  bool text = false;
  std::string out_file;
  app.add_flag("--text", text, "print only the result values");
  app.add_option("-o,--output", out_file, "also write the report to this file");

  struct Spec {
    Verb verb;
    const char* help;
    bool ring, payload, polytope, cover, tile, bound;
  };
  const Spec specs[] = {
      {Verb::Member, "kernel membership of a polynomial", true, true, false, false, false, false},
      {Verb::Normalize, "canonical form; second normal form on grid rings", true, true, false, false, false, false},
      {Verb::Tile, "tiling of z^n or y^n", false, false, false, false, true, false},
      {Verb::Identity, "expand and check the identity of a face cover", false, false, true, true, false, false},
      {Verb::MinimalCovers, "minimal vertex-cover antichains", false, false, true, false, false, false},
      {Verb::Euler, "Euler characteristic of the image", true, true, false, false, false, false},
      {Verb::Product, "product presentation and tensor check", true, false, false, false, false, true},
      {Verb::Classify, "declared ideal and interval class", true, false, false, false, false, false},
  };
  std::map<CLI::App*, Verb> verbs;
  for (const auto& s : specs) {
    CLI::App* sub = app.add_subcommand(std::string(minkring::cli::verb_name(s.verb)), s.help);
    verbs[sub] = s.verb;
    if (s.ring) sub->add_option("-r,--ring", cmd.ring, "ring selector")->capture_default_str();
    if (s.payload) sub->add_option("poly", cmd.payload, "polynomial; read from stdin when omitted");
    if (s.polytope) sub->add_option("-p,--polytope", cmd.polytope, "triangle | square | interval")->required();
    if (s.cover) sub->add_option("-c,--cover", cmd.cover, "faces such as edge:OA,vertex:B")->required();
    if (s.tile) {
      sub->add_option("-n", cmd.n, "power")->required();
      sub->add_option("-a,--axis", cmd.axis, "z | y | y1 | y2 | y3")->capture_default_str();
    }
    if (s.bound) sub->add_option("-b,--bound", cmd.bound, "monomial degree bound")->capture_default_str();
  }

  CLI11_PARSE(app, argc, argv);

  for (const auto& [sub, verb] : verbs) {
    if (sub->parsed()) cmd.verb = verb;
  }
  bool needs_payload = cmd.verb == Verb::Member || cmd.verb == Verb::Normalize || cmd.verb == Verb::Euler;
  if (needs_payload && cmd.payload.empty()) cmd.payload = read_stdin();
  cmd.format = text ? Format::Text : Format::Structured;

  auto report = minkring::cli::run(cmd);
  std::string rendered = report.render(cmd.format);
  std::cout << rendered;
  if (report.status != 0) std::cerr << "minkring: " << report.error << "\n";
  if (!out_file.empty()) {
    std::ofstream os(out_file);
    os << rendered;
    if (!os) {
      std::cerr << "minkring: cannot write " << out_file << "\n";
      return 1;
    }
  }
  return report.status;
}
