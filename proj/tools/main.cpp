#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include <CLI11.hpp>

#include "alcmod/family.hpp"
#include "alcmod/locality.hpp"
#include "alcmod/module_builder.hpp"
#include "alcmod/normalize.hpp"
#include "alcmod/parser.hpp"

using namespace alcmod;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitResource = 2;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_out(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

struct CommonArgs {
  std::string ontology_path;
  std::string signature_path;
  std::string output_path;
  std::string report_path;
  long subsumption_budget_ms = 10000;
  long conflict_budget_ms = 0;
  long max_tableau_nodes = 100000;

  void attach(CLI::App* cmd, bool with_signature = true) {
    cmd->add_option("-i,--input", ontology_path, "ontology file")->required();
    if (with_signature)
      cmd->add_option("-s,--signature", signature_path, "signature file")
          ->required();
    cmd->add_option("-o,--output", output_path, "output file (default stdout)");
    cmd->add_option("--report", report_path, "write a JSON run report here");
    cmd->add_option("--subsumption-budget-ms", subsumption_budget_ms,
                    "budget for subsumed-clause deletion")
        ->capture_default_str();
    cmd->add_option("--conflict-budget-ms", conflict_budget_ms,
                    "budget for the conflict-set computation (0 = unlimited)")
        ->capture_default_str();
    cmd->add_option("--max-tableau-nodes", max_tableau_nodes,
                    "node limit for the built-in tableau")
        ->capture_default_str();
  }

  PipelineOptions pipeline() const {
    PipelineOptions p;
    p.subsumption_budget = std::chrono::milliseconds(subsumption_budget_ms);
    p.conflict_budget = std::chrono::milliseconds(conflict_budget_ms);
    p.oracle.max_nodes = static_cast<std::size_t>(max_tableau_nodes);
    return p;
  }

  Ontology load_ontology() const { return parse_ontology(slurp(ontology_path)); }
  Signature load_signature() const {
    return parse_signature(slurp(signature_path));
  }
};

void maybe_report(const CommonArgs& args, const RunReport& report) {
  if (!args.report_path.empty()) write_out(args.report_path, emit_report(report));
}

int run_module_command(const CommonArgs& args,
                       ModuleResult (*build)(const Ontology&, const Signature&,
                                             const PipelineOptions&)) {
  Ontology o = args.load_ontology();
  Signature sigma = args.load_signature();
  ModuleResult r = build(o, sigma, args.pipeline());
  Ontology out;
  for (const auto& ax : r.axioms) out.add(ax);
  write_out(args.output_path, serialize_ontology(out));
  maybe_report(args, r.report);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Signature-based module and interpolant computation for ALC ontologies"};
  app.require_subcommand(1);

  CommonArgs normalize_args, gm_args, gms_args, dm_args, ui_args, loc_args;
  auto* cmd_normalize = app.add_subcommand("normalize", "clausal normal form");
  normalize_args.attach(cmd_normalize, false);
  auto* cmd_gm = app.add_subcommand("gm", "general module");
  gm_args.attach(cmd_gm);
  auto* cmd_gms = app.add_subcommand("gm-star", "optimized general module");
  gms_args.attach(cmd_gms);
  auto* cmd_dm = app.add_subcommand("dm", "deductive module (axiom subset)");
  dm_args.attach(cmd_dm);
  auto* cmd_ui = app.add_subcommand("ui", "uniform interpolant");
  ui_args.attach(cmd_ui);
  auto* cmd_loc =
      app.add_subcommand("locality", "syntactic nested-locality module");
  loc_args.attach(cmd_loc);

  // check
  CommonArgs check_args;
  std::string check_axiom, other_path;
  std::uint64_t seed = 1;
  std::size_t samples = 200;
  auto* cmd_check = app.add_subcommand(
      "check", "entailment of one axiom, or sampled inseparability");
  check_args.attach(cmd_check, false);
  cmd_check->add_option("--axiom", check_axiom,
                        "SubClassOf(...) statement to test for entailment");
  cmd_check->add_option("--other", other_path,
                        "second ontology: run the sampled inseparability check");
  cmd_check->add_option("-s,--signature", check_args.signature_path,
                        "signature for the inseparability check");
  cmd_check->add_option("--seed", seed, "sampler seed")->capture_default_str();
  cmd_check->add_option("--samples", samples, "number of sampled axioms")
      ->capture_default_str();

  // bench
  CommonArgs bench_args;
  std::size_t bench_n = 6;
  auto* cmd_bench = app.add_subcommand(
      "bench", "time the pipeline over the scaling family");
  cmd_bench->add_option("-n", bench_n, "largest family instance")
      ->capture_default_str();
  cmd_bench->add_option("--subsumption-budget-ms",
                        bench_args.subsumption_budget_ms, "")
      ->capture_default_str();
  cmd_bench->add_option("--conflict-budget-ms", bench_args.conflict_budget_ms, "")
      ->capture_default_str();

  // family
  std::size_t family_n = 2;
  std::string family_out, family_sig_out;
  auto* cmd_family =
      app.add_subcommand("family", "emit a scaling-family instance");
  cmd_family->add_option("-n", family_n, "instance size")->capture_default_str();
  cmd_family->add_option("-o,--output", family_out, "ontology output file");
  cmd_family->add_option("--signature-output", family_sig_out,
                         "signature output file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_normalize->parsed()) {
      Ontology o = normalize_args.load_ontology();
      NormalizedOntology norm = clausify(o);
      std::ostringstream out;
      for (const auto& c : norm.clauses) out << serialize_axiom(c.to_axiom()) << '\n';
      for (const auto& [d, def] : norm.definition)
        out << "# " << d << " := " << serialize_concept(def) << '\n';
      write_out(normalize_args.output_path, out.str());
      RunReport rep;
      rep.input_length = length(o);
      for (const auto& c : norm.clauses) rep.cl_length += length(c.to_axiom());
      maybe_report(normalize_args, rep);
      return kExitOk;
    }
    if (cmd_gm->parsed()) return run_module_command(gm_args, &general_module);
    if (cmd_gms->parsed())
      return run_module_command(gms_args, &general_module_opt);
    if (cmd_ui->parsed()) return run_module_command(ui_args, &uniform_interpolant);
    if (cmd_dm->parsed()) {
      Ontology o = dm_args.load_ontology();
      DeductiveResult r =
          deductive_module(o, dm_args.load_signature(), dm_args.pipeline());
      write_out(dm_args.output_path, serialize_ontology(r.module));
      maybe_report(dm_args, r.report);
      return kExitOk;
    }
    if (cmd_loc->parsed()) {
      Ontology o = loc_args.load_ontology();
      LocalityModule m = extract_star_module(o, loc_args.load_signature());
      write_out(loc_args.output_path, serialize_ontology(m.module));
      RunReport rep;
      rep.input_length = length(o);
      rep.result_length = length(m.module);
      rep.result_axioms = m.module.axioms.size();
      for (const auto& ax : m.module.axioms)
        rep.max_axiom_length = std::max(rep.max_axiom_length, length(ax));
      maybe_report(loc_args, rep);
      return kExitOk;
    }
    if (cmd_check->parsed()) {
      Ontology o = check_args.load_ontology();
      OracleOptions oracle;
      oracle.max_nodes = static_cast<std::size_t>(check_args.max_tableau_nodes);
      if (!check_axiom.empty()) {
        Ontology probe = parse_ontology(check_axiom);
        if (probe.axioms.size() != 1)
          throw std::runtime_error("--axiom expects exactly one statement");
        auto res = entails(o, probe.axioms.front(), oracle);
        if (!res) {
          std::cout << "resource-limit\n";
          return kExitResource;
        }
        std::cout << (*res ? "entailed" : "not-entailed") << '\n';
        return kExitOk;
      }
      if (other_path.empty())
        throw std::runtime_error("check needs --axiom or --other");
      if (check_args.signature_path.empty())
        throw std::runtime_error("inseparability check needs --signature");
      Ontology other = parse_ontology(slurp(other_path));
      Signature sigma = check_args.load_signature();
      InseparabilityReport rep =
          inseparable_sampled(o, other, sigma, seed, samples, oracle);
      if (rep.separable) {
        std::cout << "separable " << serialize_axiom(*rep.witness) << '\n';
        return kExitOk;
      }
      std::cout << (rep.resource_exceeded ? "inconclusive" : "no-witness-found")
                << " after " << rep.samples_checked << " checks\n";
      return rep.resource_exceeded ? kExitResource : kExitOk;
    }
    if (cmd_bench->parsed()) {
      for (std::size_t n = 1; n <= bench_n; ++n) {
        FamilyInstance f = make_family(n);
        auto t0 = std::chrono::steady_clock::now();
        ModuleResult r = general_module(f.ontology, f.sigma, bench_args.pipeline());
        double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
        std::vector<std::size_t> lens;
        for (const auto& ax : r.axioms) lens.push_back(length(ax));
        std::sort(lens.begin(), lens.end());
        std::size_t max_len = lens.empty() ? 0 : lens.back();
        double avg_len = 0, med_len = 0;
        if (!lens.empty()) {
          for (std::size_t l : lens) avg_len += static_cast<double>(l);
          avg_len /= static_cast<double>(lens.size());
          med_len = lens.size() % 2 == 1
                        ? static_cast<double>(lens[lens.size() / 2])
                        : (static_cast<double>(lens[lens.size() / 2 - 1]) +
                           static_cast<double>(lens[lens.size() / 2])) /
                              2.0;
        }
        std::cout << "n=" << n << " input_length=" << r.report.input_length
                  << " module_axioms=" << r.report.result_axioms
                  << " module_length=" << r.report.result_length
                  << " max_axiom_length=" << max_len
                  << " avg_axiom_length=" << avg_len
                  << " med_axiom_length=" << med_len << " time_ms=" << ms
                  << '\n';
      }
      return kExitOk;
    }
    if (cmd_family->parsed()) {
      FamilyInstance f = make_family(family_n);
      write_out(family_out, serialize_ontology(f.ontology));
      if (!family_sig_out.empty())
        write_out(family_sig_out, serialize_signature(f.sigma));
      return kExitOk;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitOk;
}
