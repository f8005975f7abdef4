#ifndef TWISTSPEC_REPORT_HPP
#define TWISTSPEC_REPORT_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twistspec/spectra.hpp"

namespace twistspec
{

inline constexpr char const *tool_version = "0.1.0";
inline constexpr int report_schema = 1;

/// Structural summary printed by `info`.
struct GroupInfo
{
  std::string name;
  std::size_t order = 0;
  std::size_t class_number = 0;
  std::vector<std::size_t> class_sizes;
  std::size_t center_order = 0;
  bool abelian = false;
  bool nilpotent = false;
  bool perfect = false;
  bool simple = false;
  bool quasisimple = false;
};

GroupInfo group_info(GroupPtr const &group, std::string name);

std::string info_to_json(GroupInfo const &info);
std::string info_to_table(GroupInfo const &info);

std::string report_to_json(SpectrumReport const &report);
std::string report_to_table(SpectrumReport const &report);

/// One `key op value` clause of a survey filter, e.g. "order<=120" or
/// "full_extended_spectrum=true".
struct Filter
{
  enum class Op { eq, ne, lt, le, gt, ge };

  std::string key;
  Op op = Op::eq;
  std::string value;
  std::string text;  ///< the clause as written

  bool matches(SpectrumReport const &report) const;
};

/// Comma-separated clauses; throws InvalidArgument on unknown keys.
std::vector<Filter> parse_filters(std::string_view text);

struct SurveyOptions
{
  SpectrumOptions spectrum;
  std::vector<Filter> filters;
  int jobs = 1;
};

struct SurveyFailure
{
  std::string file;
  std::string kind;  ///< "input" or "budget"
  std::string message;
};

struct SurveyReport
{
  std::vector<SpectrumReport> groups;  ///< matching groups, sorted by (order, name)
  std::vector<SurveyFailure> failures; ///< sorted by file
  std::size_t scanned = 0;
};

/// Classifies every definition file in dir. Per-file failures are recorded,
/// never thrown. Output is independent of options.jobs.
SurveyReport run_survey(std::filesystem::path const &dir, SurveyOptions const &options);

std::string survey_to_json(SurveyReport const &survey, std::vector<Filter> const &filters);
std::string survey_to_table(SurveyReport const &survey);

} // namespace twistspec

#endif // TWISTSPEC_REPORT_HPP
