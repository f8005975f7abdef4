#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>

#include <unistd.h>

#include "helpers.hpp"
#include "twistspec/report.hpp"
#include "twistspec/spectra.hpp"

using namespace testing;
using nlohmann::json;
namespace fs = std::filesystem;

namespace
{

SpectrumReport s3_report()
{
  return classify(build(builders::symmetric(3)), "S3");
}

} // namespace

TEST_CASE("info")
{
  auto info = group_info(build(builders::symmetric(3)), "S3");
  CHECK(info.order == 6);
  CHECK(info.class_number == 3);
  CHECK_FALSE(info.abelian);

  auto j = json::parse(info_to_json(info));
  CHECK(j["schema"] == 1);
  CHECK(j["tool_version"] == "0.1.0");
  CHECK(j["class_number"] == 3);
  CHECK(j["flags"]["nilpotent"] == false);

  auto table = info_to_table(info);
  CHECK(table.find("k(G)") != std::string::npos);

  auto sl = group_info(build(builders::sl2(5)), "SL(2,5)");
  CHECK(sl.quasisimple);
  CHECK(sl.perfect);
  CHECK_FALSE(sl.simple);
  CHECK(sl.center_order == 2);
}

TEST_CASE("spectrum report json")
{
  auto doc = json::parse(report_to_json(s3_report()));
  CHECK(doc["schema"] == 1);
  auto j = doc["report"];
  CHECK(j["name"] == "S3");
  CHECK(j["spectrum"]["values"] == json::array({3}));
  CHECK(j["extended_spectrum"]["status"] == "computed");
  CHECK(j["extended_spectrum"]["values"] == json::array({1, 2, 3}));
  CHECK(j["extended_spectrum"]["end_count"] == 10);
  CHECK(j["flags"]["full_extended_spectrum"] == true);
  for (auto const &c : j["theorem_battery"])
    CHECK(c["status"] == "pass");

  SpectrumOptions skip;
  skip.extended = false;
  auto k = json::parse(report_to_json(classify(build(builders::symmetric(3)), "S3", skip)))["report"];
  CHECK(k["extended_spectrum"]["status"] == "skipped");
  CHECK(k["flags"]["full_extended_spectrum"].is_null());

  CHECK(report_to_json(s3_report()) == report_to_json(s3_report()));
  CHECK(report_to_table(s3_report()).find("{1, 2, 3}") != std::string::npos);
}

TEST_CASE("filters")
{
  auto r = s3_report();
  auto match = [&](char const *text) {
    auto fs = parse_filters(text);
    return std::all_of(fs.begin(), fs.end(), [&](auto const &f) { return f.matches(r); });
  };
  CHECK(match("order=6"));
  CHECK(match("order==6"));
  CHECK(match("order<=6,order>=6,order<7,order>5"));
  CHECK(match("order!=5"));
  CHECK_FALSE(match("order>6"));
  CHECK(match("name=S3"));
  CHECK(match("trivial_spectrum=true"));
  CHECK(match("full_extended_spectrum=true"));
  CHECK_FALSE(match("abelian=true"));
  CHECK_FALSE(match("abelian=maybe"));
  CHECK(match(""));

  auto fs = parse_filters("class_number<=4,odd_order=false");
  REQUIRE(fs.size() == 2);
  CHECK(fs[0].key == "class_number");
  CHECK(fs[0].op == Filter::Op::le);
  CHECK(fs[0].value == "4");
  CHECK(fs[1].text == "odd_order=false");

  CHECK_THROWS_AS(parse_filters("colour=red"), InvalidArgument);
  CHECK_THROWS_AS(parse_filters("order"), InvalidArgument);
  CHECK_THROWS_AS(parse_filters("=3"), InvalidArgument);
  CHECK_THROWS_AS(parse_filters("order!3"), InvalidArgument);

  // unset flags never match
  SpectrumOptions skip;
  skip.extended = false;
  auto partial = classify(build(builders::symmetric(3)), "S3", skip);
  for (auto text : {"full_extended_spectrum=true", "full_extended_spectrum=false", "end_count>0"})
    CHECK_FALSE(parse_filters(text)[0].matches(partial));
}

TEST_CASE("survey")
{
  auto dir = fs::temp_directory_path() / ("twistspec-survey-" + std::to_string(::getpid()));
  fs::remove_all(dir);
  fs::create_directories(dir);
  for (auto const &def : {builders::symmetric(3), builders::cyclic(5), builders::alternating(4),
                          builders::dicyclic(2)})
    save_definition(def, dir / file_name_for(def.name));
  std::ofstream(dir / "broken.json") << "{}";
  auto big = builders::symmetric(3);
  big.name = "Big";
  big.expected = ExpectedInvariants{6, 4};
  save_definition(big, dir / "big.json");

  SurveyOptions opts;
  auto all = run_survey(dir, opts);
  CHECK(all.scanned == 6);
  REQUIRE(all.groups.size() == 4);
  CHECK(all.groups[0].name == "Z5");
  CHECK(all.groups[1].name == "S3");
  CHECK(all.groups[2].name == "Q8");
  CHECK(all.groups[3].name == "A4");
  REQUIRE(all.failures.size() == 2);
  CHECK(all.failures[0].file == "big.json");
  CHECK(all.failures[0].kind == "input");
  CHECK(all.failures[1].file == "broken.json");

  opts.filters = parse_filters("full_extended_spectrum=true");
  auto full = run_survey(dir, opts);
  REQUIRE(full.groups.size() == 2);
  CHECK(full.groups[0].name == "S3");
  CHECK(full.groups[1].name == "A4");

  auto j = json::parse(survey_to_json(full, opts.filters));
  CHECK(j["matched"] == 2);
  CHECK(j["scanned"] == 6);
  CHECK(j["filters"] == json::array({"full_extended_spectrum=true"}));
  CHECK(j["summary"]["full_extended_spectrum"] == 2);

  opts.jobs = 4;
  CHECK(survey_to_json(run_survey(dir, opts), opts.filters) == survey_to_json(full, opts.filters));
  CHECK(survey_to_table(full).find("A4") != std::string::npos);

  opts.filters.clear();
  opts.spectrum.budget.max_products = 100;
  auto starved = run_survey(dir, opts);
  CHECK(starved.groups.size() < 4);
  bool budget_failure = false;
  for (auto const &f : starved.failures)
    budget_failure = budget_failure || f.kind == "budget";
  CHECK(budget_failure);

  fs::remove_all(dir);
  fs::create_directories(dir);
  auto empty = run_survey(dir, {});
  CHECK(empty.scanned == 0);
  CHECK(empty.groups.empty());
  fs::remove_all(dir);
}
