// twistspec: Reidemeister spectra of finite permutation groups.
//
// Exit codes: 0 success, 1 input error, 2 budget exceeded, 3 theorem-battery
// failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "twistspec/catalog.hpp"
#include "twistspec/report.hpp"

namespace
{

using namespace twistspec;

enum ExitCode { ok = 0, input_error = 1, budget_exceeded = 2, battery_failed = 3 };

struct CommonFlags
{
  std::optional<std::uint64_t> budget;
  std::size_t order_cap = Budget::default_order_cap;
  std::string method = "fixed";
  bool json = false;

  Budget resolve() const
  {
    Budget b;
    b.order_cap = order_cap;
    if (budget) {
      b.max_products = *budget;
    } else if (char const *env = std::getenv("TWISTSPEC_BUDGET")) {
      try {
        b.max_products = std::stoull(env);
      } catch (std::exception const &) {
        throw InvalidArgument(std::string("TWISTSPEC_BUDGET is not a number: ") + env);
      }
    }
    return b;
  }

  ReidemeisterMethod reidemeister_method() const
  {
    if (method == "fixed")
      return ReidemeisterMethod::fixed_classes;
    if (method == "orbits")
      return ReidemeisterMethod::orbits;
    return ReidemeisterMethod::checked;
  }
};

void add_budget_flags(CLI::App *cmd, CommonFlags &flags)
{
  cmd->add_option("--budget", flags.budget,
                   "maximum group products per morphism search (env TWISTSPEC_BUDGET)");
  cmd->add_option("--order-cap", flags.order_cap, "largest group order to materialize");
}

int run_info(std::string const &file, CommonFlags const &flags)
{
  auto def = load_definition(file);
  auto group = materialize(def, flags.resolve().order_cap);
  auto info = group_info(group, def.name);
  std::cout << (flags.json ? info_to_json(info) : info_to_table(info));
  return ok;
}

int run_spectrum(std::string const &file, bool extended, CommonFlags const &flags)
{
  auto def = load_definition(file);
  SpectrumOptions options;
  options.budget = flags.resolve();
  options.method = flags.reidemeister_method();
  options.extended = extended;
  options.battery = false;

  auto group = materialize(def, options.budget.order_cap);
  auto report = classify(group, def.name, options);
  std::cout << (flags.json ? report_to_json(report) : report_to_table(report));

  if (extended && !report.extended_spectrum) {
    std::cerr << "twistspec: " << report.extended_skipped << '\n';
    return budget_exceeded;
  }
  return ok;
}

int run_verify(std::string const &file, CommonFlags const &flags)
{
  auto def = load_definition(file);
  SpectrumOptions options;
  options.budget = flags.resolve();
  options.method = ReidemeisterMethod::checked;

  auto group = materialize(def, options.budget.order_cap);
  auto report = classify(group, def.name, options);
  std::cout << (flags.json ? report_to_json(report) : report_to_table(report));

  if (!report.battery_passed())
    return battery_failed;
  for (auto const &check : *report.theorem_battery) {
    if (check.skipped)
      return budget_exceeded;
  }
  return ok;
}

int run_survey(std::string const &dir, std::string const &filter, int jobs,
               std::string const &out, CommonFlags const &flags)
{
  SurveyOptions options;
  options.spectrum.budget = flags.resolve();
  options.spectrum.method = flags.reidemeister_method();
  options.filters = parse_filters(filter);
  options.jobs = jobs;

  auto survey = twistspec::run_survey(dir, options);
  auto text = survey_to_json(survey, options.filters);

  std::ofstream os(out, std::ios::binary);
  if (!os)
    throw InvalidArgument(out + ": cannot write report");
  os << text;

  std::cout << survey_to_table(survey);
  return ok;
}

int run_export(std::string const &dir)
{
  std::filesystem::create_directories(dir);
  for (auto const &def : shipped_catalog()) {
    auto path = std::filesystem::path(dir) / file_name_for(def.name);
    save_definition(def, path);
    std::cout << path.string() << '\n';
  }
  return ok;
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Twisted conjugacy and Reidemeister spectra of finite groups"};
  app.set_version_flag("--version", std::string(twistspec::tool_version));
  app.require_subcommand(1);

  CommonFlags flags;
  std::string file, dir, out, filter;
  bool extended = false;
  int jobs = 1;

  auto *info = app.add_subcommand("info", "order, class structure and structural flags");
  info->add_option("file", file, "group definition file")->required();
  info->add_flag("--json", flags.json, "machine-readable output");
  add_budget_flags(info, flags);

  auto *spectrum = app.add_subcommand("spectrum", "Reidemeister spectrum of a group");
  spectrum->add_option("file", file, "group definition file")->required();
  spectrum->add_flag("--extended", extended, "also sweep all endomorphisms");
  spectrum->add_option("--method", flags.method, "Reidemeister number method")
    ->check(CLI::IsMember({"fixed", "orbits", "checked"}));
  spectrum->add_flag("--json", flags.json, "machine-readable output");
  add_budget_flags(spectrum, flags);

  auto *verify = app.add_subcommand("verify", "run the theorem battery");
  verify->add_option("file", file, "group definition file")->required();
  verify->add_flag("--json", flags.json, "machine-readable output");
  add_budget_flags(verify, flags);

  auto *survey = app.add_subcommand("survey", "classify every group in a directory");
  survey->add_option("dir", dir, "directory of group definition files")->required();
  survey->add_option("--filter", filter, "comma-separated clauses, e.g. order<=120,trivial_spectrum=true");
  survey->add_option("--jobs", jobs, "groups classified concurrently")->check(CLI::PositiveNumber);
  survey->add_option("--out", out, "JSON report path")->required();
  survey->add_option("--method", flags.method, "Reidemeister number method")
    ->check(CLI::IsMember({"fixed", "orbits", "checked"}));
  add_budget_flags(survey, flags);

  auto *export_cmd = app.add_subcommand("export-catalog", "write the built-in catalog as definition files");
  export_cmd->add_option("dir", dir, "output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const &e) {
    int code = app.exit(e);
    return code == 0 ? ok : input_error;
  }

  try {
    if (*info)
      return run_info(file, flags);
    if (*spectrum)
      return run_spectrum(file, extended, flags);
    if (*verify)
      return run_verify(file, flags);
    if (*survey)
      return run_survey(dir, filter, jobs, out, flags);
    if (*export_cmd)
      return run_export(dir);
  } catch (BudgetExceeded const &e) {
    std::cerr << "twistspec: " << e.what() << '\n';
    return budget_exceeded;
  } catch (std::exception const &e) {
    std::cerr << "twistspec: " << e.what() << '\n';
    return input_error;
  }
  return ok;
}
