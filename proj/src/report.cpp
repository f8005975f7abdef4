#include "twistspec/report.hpp"

#include <algorithm>
#include <exception>
#include <iomanip>
#include <map>
#include <sstream>

#include <json.hpp>

#include "twistspec/catalog.hpp"

namespace twistspec
{

namespace
{

using nlohmann::ordered_json;

ordered_json spectrum_json(Spectrum const &spec)
{
  ordered_json values = ordered_json::array();
  ordered_json mult = ordered_json::array();
  for (auto const &[r, count] : spec.multiplicities) {
    values.push_back(r);
    mult.push_back({r, count});
  }
  return ordered_json{{"values", values}, {"multiplicities", mult}};
}

ordered_json optional_bool(std::optional<bool> value)
{
  return value ? ordered_json(*value) : ordered_json(nullptr);
}

ordered_json report_json(SpectrumReport const &r)
{
  ordered_json j;
  j["name"] = r.name;
  j["order"] = r.order;
  j["class_number"] = r.class_number;
  j["class_sizes"] = r.class_sizes;
  j["center_order"] = r.center_order;
  j["aut_count"] = r.aut_count;
  j["class_preserving_aut_count"] = r.class_preserving_aut_count;
  j["out_order"] = r.out_order;
  j["spectrum"] = spectrum_json(r.spectrum);

  ordered_json ext;
  if (r.extended_spectrum) {
    ext["status"] = "computed";
    ext["end_count"] = *r.end_count;
    ext["fixed_point_free_end_count"] = *r.fixed_point_free_end_count;
    auto spec = spectrum_json(*r.extended_spectrum);
    ext["values"] = spec["values"];
    ext["multiplicities"] = spec["multiplicities"];
  } else {
    ext["status"] = "skipped";
    ext["reason"] = r.extended_skipped;
  }
  j["extended_spectrum"] = ext;

  auto const &f = r.flags;
  j["flags"] = ordered_json{
    {"trivial_spectrum", f.trivial_spectrum},
    {"trivial_extended_spectrum", optional_bool(f.trivial_extended_spectrum)},
    {"full_extended_spectrum", optional_bool(f.full_extended_spectrum)},
    {"abelian", f.abelian},
    {"nilpotent", f.nilpotent},
    {"perfect", f.perfect},
    {"simple", f.simple},
    {"quasisimple", f.quasisimple},
    {"odd_order", f.odd_order},
  };

  if (r.theorem_battery) {
    ordered_json checks = ordered_json::array();
    for (auto const &c : *r.theorem_battery) {
      ordered_json cj;
      cj["name"] = c.name;
      cj["status"] = c.skipped ? "skipped" : c.passed ? "pass" : "fail";
      if (!c.witness.empty())
        cj["witness"] = c.witness;
      checks.push_back(cj);
    }
    j["theorem_battery"] = checks;
  }
  return j;
}

std::string set_string(std::vector<std::size_t> const &values)
{
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < values.size(); ++i)
    os << (i ? ", " : "") << values[i];
  os << '}';
  return os.str();
}

std::string flag_string(std::optional<bool> value)
{
  return value ? (*value ? "yes" : "no") : "skipped";
}

/// Value of a filterable key, as a number, a boolean or a string.
struct FieldValue
{
  enum class Kind { number, boolean, text, missing } kind = Kind::missing;
  double number = 0;
  bool boolean = false;
  std::string text;
};

FieldValue field(SpectrumReport const &r, std::string const &key)
{
  FieldValue v;
  auto num = [&](std::size_t x) { v.kind = FieldValue::Kind::number; v.number = static_cast<double>(x); };
  auto flag = [&](std::optional<bool> b) {
    if (b) {
      v.kind = FieldValue::Kind::boolean;
      v.boolean = *b;
    }
  };

  auto const &f = r.flags;
  if (key == "name") { v.kind = FieldValue::Kind::text; v.text = r.name; }
  else if (key == "order") num(r.order);
  else if (key == "class_number") num(r.class_number);
  else if (key == "center_order") num(r.center_order);
  else if (key == "aut_count") num(r.aut_count);
  else if (key == "out_order") num(r.out_order);
  else if (key == "end_count") { if (r.end_count) num(*r.end_count); }
  else if (key == "trivial_spectrum") flag(f.trivial_spectrum);
  else if (key == "trivial_extended_spectrum") flag(f.trivial_extended_spectrum);
  else if (key == "full_extended_spectrum") flag(f.full_extended_spectrum);
  else if (key == "abelian") flag(f.abelian);
  else if (key == "nilpotent") flag(f.nilpotent);
  else if (key == "perfect") flag(f.perfect);
  else if (key == "simple") flag(f.simple);
  else if (key == "quasisimple") flag(f.quasisimple);
  else if (key == "odd_order") flag(f.odd_order);
  return v;
}

bool known_key(std::string const &key)
{
  static const std::vector<std::string> keys{
    "name", "order", "class_number", "center_order", "aut_count", "out_order",
    "end_count", "trivial_spectrum", "trivial_extended_spectrum",
    "full_extended_spectrum", "abelian", "nilpotent", "perfect", "simple",
    "quasisimple", "odd_order"};
  return std::find(keys.begin(), keys.end(), key) != keys.end();
}

template<typename T>
bool compare(T const &lhs, Filter::Op op, T const &rhs)
{
  switch (op) {
  case Filter::Op::eq: return lhs == rhs;
  case Filter::Op::ne: return lhs != rhs;
  case Filter::Op::lt: return lhs < rhs;
  case Filter::Op::le: return lhs <= rhs;
  case Filter::Op::gt: return lhs > rhs;
  case Filter::Op::ge: return lhs >= rhs;
  }
  return false;
}

} // namespace

GroupInfo group_info(GroupPtr const &group, std::string name)
{
  GroupInfo info;
  auto classes = conjugacy_classes(group);
  info.name = std::move(name);
  info.order = group->order();
  info.class_number = classes.count();
  info.class_sizes = classes.sizes;
  info.center_order = center(group).order();
  info.abelian = group->is_abelian();
  info.nilpotent = is_nilpotent(group);
  info.perfect = is_perfect(group);
  info.simple = is_simple(group);
  info.quasisimple = info.perfect && is_quasisimple(group);
  return info;
}

std::string info_to_json(GroupInfo const &info)
{
  ordered_json j;
  j["schema"] = report_schema;
  j["tool_version"] = tool_version;
  j["name"] = info.name;
  j["order"] = info.order;
  j["class_number"] = info.class_number;
  j["class_sizes"] = info.class_sizes;
  j["center_order"] = info.center_order;
  j["flags"] = ordered_json{
    {"abelian", info.abelian},
    {"nilpotent", info.nilpotent},
    {"perfect", info.perfect},
    {"simple", info.simple},
    {"quasisimple", info.quasisimple},
  };
  return j.dump(2) + "\n";
}

std::string info_to_table(GroupInfo const &info)
{
  std::ostringstream os;
  auto row = [&](char const *label, auto const &value) {
    os << std::left << std::setw(14) << label << value << '\n';
  };
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  row("group", info.name);
  row("order", info.order);
  row("k(G)", info.class_number);
  std::ostringstream sizes;
  for (std::size_t i = 0; i < info.class_sizes.size(); ++i)
    sizes << (i ? " " : "") << info.class_sizes[i];
  row("class sizes", sizes.str());
  row("|Z(G)|", info.center_order);
  row("abelian", yn(info.abelian));
  row("nilpotent", yn(info.nilpotent));
  row("perfect", yn(info.perfect));
  row("simple", yn(info.simple));
  row("quasisimple", yn(info.quasisimple));
  return os.str();
}

std::string report_to_json(SpectrumReport const &report)
{
  ordered_json j;
  j["schema"] = report_schema;
  j["tool_version"] = tool_version;
  j["report"] = report_json(report);
  return j.dump(2) + "\n";
}

std::string report_to_table(SpectrumReport const &r)
{
  std::ostringstream os;
  auto row = [&](char const *label, auto const &value) {
    os << std::left << std::setw(28) << label << value << '\n';
  };
  row("group", r.name);
  row("order", r.order);
  row("k(G)", r.class_number);
  row("|Aut(G)|", r.aut_count);
  row("|Out(G)|", r.out_order);
  row("class-preserving autos", r.class_preserving_aut_count);
  row("spectrum", set_string(r.spectrum.values()));
  if (r.extended_spectrum) {
    row("|End(G)|", *r.end_count);
    row("extended spectrum", set_string(r.extended_spectrum->values()));
  } else {
    row("extended spectrum", "skipped (" + r.extended_skipped + ")");
  }
  row("trivial spectrum", r.flags.trivial_spectrum ? "yes" : "no");
  row("trivial extended spectrum", flag_string(r.flags.trivial_extended_spectrum));
  row("full extended spectrum", flag_string(r.flags.full_extended_spectrum));

  if (r.theorem_battery) {
    os << '\n';
    for (auto const &c : *r.theorem_battery) {
      os << std::left << std::setw(8)
         << (c.skipped ? "SKIP" : c.passed ? "PASS" : "FAIL") << c.name;
      if (!c.witness.empty())
        os << "  witness " << c.witness;
      os << '\n';
    }
  }
  return os.str();
}

bool Filter::matches(SpectrumReport const &report) const
{
  auto v = field(report, key);
  switch (v.kind) {
  case FieldValue::Kind::missing:
    return false;
  case FieldValue::Kind::text:
    return compare(v.text, op, value);
  case FieldValue::Kind::boolean:
    if (value != "true" && value != "false")
      return false;
    return compare(v.boolean, op, value == "true");
  case FieldValue::Kind::number:
    try {
      return compare(v.number, op, std::stod(value));
    } catch (std::exception const &) {
      return false;
    }
  }
  return false;
}

std::vector<Filter> parse_filters(std::string_view text)
{
  std::vector<Filter> res;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(',', start);
    if (end == std::string_view::npos)
      end = text.size();
    std::string clause(text.substr(start, end - start));
    start = end + 1;
    if (clause.empty())
      continue;

    Filter f;
    f.text = clause;
    auto pos = clause.find_first_of("<>=!");
    if (pos == std::string::npos || pos == 0)
      throw InvalidArgument("malformed filter clause '" + clause + "'");

    bool two = pos + 1 < clause.size() && clause[pos + 1] == '=';
    std::size_t len = two ? 2 : 1;
    switch (clause[pos]) {
    case '<': f.op = two ? Filter::Op::le : Filter::Op::lt; break;
    case '>': f.op = two ? Filter::Op::ge : Filter::Op::gt; break;
    case '!':
      if (!two)
        throw InvalidArgument("malformed filter clause '" + clause + "'");
      f.op = Filter::Op::ne;
      break;
    default:
      f.op = Filter::Op::eq;
      len = two ? 2 : 1;  // accept both = and ==
    }

    f.key = clause.substr(0, pos);
    f.value = clause.substr(pos + len);
    if (!known_key(f.key))
      throw InvalidArgument("unknown filter key '" + f.key + "'");
    res.push_back(std::move(f));
  }
  return res;
}

SurveyReport run_survey(std::filesystem::path const &dir, SurveyOptions const &options)
{
  auto entries = load_directory(dir);
  auto n = static_cast<long>(entries.size());

  std::vector<std::optional<SpectrumReport>> reports(entries.size());
  std::vector<std::optional<SurveyFailure>> failures(entries.size());

  #pragma omp parallel for schedule(dynamic, 1) num_threads(std::max(1, options.jobs))
  for (long i = 0; i < n; ++i) {
    auto const &entry = entries[i];
    auto file = entry.path.filename().string();
    if (auto const *err = std::get_if<std::string>(&entry.content)) {
      failures[i] = SurveyFailure{file, "input", *err};
      continue;
    }
    auto const &def = std::get<GroupDefinition>(entry.content);
    try {
      auto group = materialize(def, options.spectrum.budget.order_cap);
      reports[i] = classify(group, def.name, options.spectrum);
    } catch (BudgetExceeded const &e) {
      failures[i] = SurveyFailure{file, "budget", e.what()};
    } catch (std::exception const &e) {
      failures[i] = SurveyFailure{file, "input", e.what()};
    }
  }

  SurveyReport survey;
  survey.scanned = entries.size();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (failures[i])
      survey.failures.push_back(*failures[i]);
    if (!reports[i])
      continue;
    bool keep = std::all_of(options.filters.begin(), options.filters.end(),
                            [&](Filter const &f) { return f.matches(*reports[i]); });
    if (keep)
      survey.groups.push_back(std::move(*reports[i]));
  }

  std::stable_sort(survey.groups.begin(), survey.groups.end(),
                   [](SpectrumReport const &a, SpectrumReport const &b) {
                     return std::tie(a.order, a.name) < std::tie(b.order, b.name);
                   });
  return survey;
}

std::string survey_to_json(SurveyReport const &survey, std::vector<Filter> const &filters)
{
  ordered_json j;
  j["schema"] = report_schema;
  j["tool_version"] = tool_version;

  ordered_json filter_text = ordered_json::array();
  for (auto const &f : filters)
    filter_text.push_back(f.text);
  j["filters"] = filter_text;
  j["scanned"] = survey.scanned;
  j["matched"] = survey.groups.size();

  std::map<std::string, std::size_t> counts;
  for (char const *flag : {"trivial_spectrum", "trivial_extended_spectrum",
                           "full_extended_spectrum", "abelian", "nilpotent",
                           "perfect", "simple", "quasisimple", "odd_order"})
    counts[flag] = 0;
  std::size_t skipped = 0;
  for (auto const &r : survey.groups) {
    auto const &f = r.flags;
    counts["trivial_spectrum"] += f.trivial_spectrum;
    counts["trivial_extended_spectrum"] += f.trivial_extended_spectrum.value_or(false);
    counts["full_extended_spectrum"] += f.full_extended_spectrum.value_or(false);
    counts["abelian"] += f.abelian;
    counts["nilpotent"] += f.nilpotent;
    counts["perfect"] += f.perfect;
    counts["simple"] += f.simple;
    counts["quasisimple"] += f.quasisimple;
    counts["odd_order"] += f.odd_order;
    skipped += !r.extended_spectrum.has_value();
  }
  ordered_json summary;
  for (auto const &[flag, count] : counts)
    summary[flag] = count;
  summary["extended_skipped"] = skipped;
  j["summary"] = summary;

  ordered_json groups = ordered_json::array();
  for (auto const &r : survey.groups)
    groups.push_back(report_json(r));
  j["groups"] = groups;

  ordered_json failures = ordered_json::array();
  for (auto const &f : survey.failures)
    failures.push_back({{"file", f.file}, {"kind", f.kind}, {"message", f.message}});
  j["failures"] = failures;

  return j.dump(2) + "\n";
}

std::string survey_to_table(SurveyReport const &survey)
{
  std::ostringstream os;
  os << std::left << std::setw(14) << "group" << std::right << std::setw(6) << "order"
     << std::setw(5) << "k" << "  " << std::left << std::setw(22) << "spectrum"
     << std::setw(36) << "extended spectrum" << "flags\n";
  for (auto const &r : survey.groups) {
    std::string ext = r.extended_spectrum ? set_string(r.extended_spectrum->values()) : "skipped";
    std::string flags;
    if (r.flags.trivial_spectrum)
      flags += " trivial";
    if (r.flags.trivial_extended_spectrum.value_or(false))
      flags += " trivial-ext";
    if (r.flags.full_extended_spectrum.value_or(false))
      flags += " full-ext";
    if (!r.battery_passed())
      flags += " BATTERY-FAIL";
    os << std::left << std::setw(14) << r.name << std::right << std::setw(6) << r.order
       << std::setw(5) << r.class_number << "  " << std::left << std::setw(22)
       << set_string(r.spectrum.values()) << std::setw(36) << ext
       << (flags.empty() ? "-" : flags.substr(1)) << '\n';
  }
  for (auto const &f : survey.failures)
    os << "failed: " << f.file << " (" << f.kind << "): " << f.message << '\n';
  return os.str();
}

} // namespace twistspec
