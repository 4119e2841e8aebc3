#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "curvelim/curvelim.h"

namespace {

struct Flags {
  std::string input = "-";
  std::string output;
  double tol = 1e-8;
  uint64_t seed = 1;
  size_t samples = 20;
};

bool read_all(const std::string& path, std::string& text) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    ss << in.rdbuf();
  }
  text = ss.str();
  return true;
}

int run(const std::string& command, const Flags& f) {
  std::string input;
  if (!read_all(f.input, input)) {
    std::cerr << "curvelim: cannot read " << f.input << "\n";
    return CURVELIM_E_INPUT;
  }
  curvelim_job* job = nullptr;
  if (curvelim_job_create(command.c_str(), &job) != CURVELIM_OK) {
    std::cerr << "curvelim: " << curvelim_last_error() << "\n";
    return CURVELIM_E_INPUT;
  }
  curvelim_status st = curvelim_job_set_tol(job, f.tol);
  if (st == CURVELIM_OK) st = curvelim_job_set_seed(job, f.seed);
  if (st == CURVELIM_OK) st = curvelim_job_set_samples(job, f.samples);
  if (st != CURVELIM_OK) {
    std::cerr << "curvelim: " << curvelim_last_error() << "\n";
    curvelim_job_destroy(job);
    return st;
  }
  const curvelim_status code = curvelim_job_run(job, input.c_str());
  const std::string report = curvelim_job_report(job);
  curvelim_job_destroy(job);

  if (f.output.empty()) {
    std::cout << report;
  } else {
    std::ofstream out(f.output, std::ios::binary);
    if (!(out << report)) {
      std::cerr << "curvelim: cannot write " << f.output << "\n";
      return CURVELIM_E_INPUT;
    }
  }
  if (code != CURVELIM_OK) std::cerr << "curvelim: " << command << ": exit " << code << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Elimination along determinantal curves and rational transforms of commutative vessels"};
  app.require_subcommand(1);
  Flags flags;
  app.add_option("-i,--input", flags.input, "JSON input file, - for stdin")->capture_default_str();
  app.add_option("-o,--output", flags.output, "write the report here instead of stdout");
  app.add_option("--tol", flags.tol, "relative tolerance of float verdicts")
      ->capture_default_str()
      ->check(CLI::Range(1e-300, 0.5));
  app.add_option("--seed", flags.seed, "seed for fixtures and sampling")->capture_default_str();
  app.add_option("--samples", flags.samples, "sample count for vanishing checks")
      ->capture_default_str()
      ->check(CLI::Range(0, 100000));
  app.fallthrough();

  std::string command;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& full, const std::string& help) {
    parent->add_subcommand(name, help)->fallthrough()->callback([&command, full] { command = full; });
  };
  leaf(&app, "bezout", "bezout", "Bezout matrix of univariate p, q");
  leaf(&app, "resultant", "resultant", "Sylvester resultant and bezoutian");
  leaf(&app, "image-line", "image-line", "determinantal image of the line under (p1/p0, p2/p0)");

  auto* curve = app.add_subcommand("curve", "elimination along a determinantal curve")->fallthrough();
  curve->require_subcommand(1);
  leaf(curve, "vn", "curve vn", "principal subspace V_n");
  leaf(curve, "bezout", "curve bezout", "generalized Bezout matrix");
  leaf(curve, "common-zeros", "curve common-zeros", "common zeros of p, q along the curve");
  leaf(curve, "image", "curve image", "determinantal representation of the image curve");

  auto* vessel = app.add_subcommand("vessel", "two-operator commutative vessels")->fallthrough();
  vessel->require_subcommand(1);
  leaf(vessel, "check", "vessel check", "vessel axioms");
  leaf(vessel, "discriminant", "vessel discriminant", "discriminant, Cayley-Hamilton, fibers");
  leaf(vessel, "transform", "vessel transform", "rational transform V -> V'");
  leaf(vessel, "reduce", "vessel reduce", "basepoint reduction V' -> V''");
  leaf(vessel, "verify-theorems", "vessel verify-theorems", "all structural checks");

  auto* fixtures = app.add_subcommand("fixtures", "fixture generation")->fallthrough();
  fixtures->require_subcommand(1);
  leaf(fixtures, "gen", "fixtures gen", "generate a seeded fixture");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : CURVELIM_E_INPUT;
  }
  return run(command, flags);
}
