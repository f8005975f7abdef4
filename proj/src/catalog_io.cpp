#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "twistspec/catalog.hpp"

namespace twistspec
{

namespace
{

using nlohmann::json;

[[noreturn]] void fail(std::string_view source, std::string const &what)
{
  throw ParseError(std::string(source) + ": " + what);
}

std::size_t as_count(json const &value, std::string_view source, std::string const &field)
{
  if (!value.is_number_integer() || value.get<std::int64_t>() < 0)
    fail(source, "field '" + field + "': expected a non-negative integer");
  return value.get<std::size_t>();
}

} // namespace

std::string to_json(GroupDefinition const &def)
{
  // hand-formatted so each generator stays on one line
  std::ostringstream os;
  os << "{\n";
  os << "  \"name\": " << json(def.name).dump() << ",\n";
  os << "  \"degree\": " << def.degree << ",\n";
  os << "  \"generators\": [";
  for (std::size_t i = 0; i < def.generators.size(); ++i) {
    os << (i ? ",\n    " : "\n    ") << '[';
    auto const &g = def.generators[i];
    for (std::size_t j = 0; j < g.size(); ++j)
      os << (j ? ", " : "") << g[j];
    os << ']';
  }
  os << (def.generators.empty() ? "]" : "\n  ]");

  if (def.expected) {
    os << ",\n  \"expected\": {";
    bool first = true;
    if (def.expected->order) {
      os << "\"order\": " << *def.expected->order;
      first = false;
    }
    if (def.expected->class_number)
      os << (first ? "" : ", ") << "\"class_number\": " << *def.expected->class_number;
    os << '}';
  }
  os << "\n}\n";
  return os.str();
}

GroupDefinition parse_definition(std::string_view text, std::string_view source)
{
  json doc;
  try {
    doc = json::parse(text);
  } catch (json::parse_error const &e) {
    auto upto = text.substr(0, std::min<std::size_t>(e.byte, text.size()));
    auto line = 1 + std::count(upto.begin(), upto.end(), '\n');
    std::ostringstream msg;
    msg << "line " << line << ": invalid JSON (" << e.what() << ")";
    fail(source, msg.str());
  }

  if (!doc.is_object())
    fail(source, "top level must be an object");

  for (auto const &[key, value] : doc.items()) {
    if (key != "name" && key != "degree" && key != "generators" && key != "expected")
      fail(source, "unknown field '" + key + "'");
  }

  GroupDefinition def;

  if (!doc.contains("name") || !doc["name"].is_string())
    fail(source, "field 'name': expected a string");
  def.name = doc["name"].get<std::string>();

  if (!doc.contains("degree"))
    fail(source, "field 'degree': missing");
  def.degree = as_count(doc["degree"], source, "degree");
  if (def.degree == 0)
    fail(source, "field 'degree': must be positive");

  if (!doc.contains("generators") || !doc["generators"].is_array())
    fail(source, "field 'generators': expected an array");
  auto const &gens = doc["generators"];
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::string field = "generators[" + std::to_string(i) + "]";
    if (!gens[i].is_array())
      fail(source, "field '" + field + "': expected an array of images");
    if (gens[i].size() != def.degree) {
      std::ostringstream msg;
      msg << "field '" << field << "': has " << gens[i].size()
          << " images, expected " << def.degree;
      fail(source, msg.str());
    }

    auto &images = def.generators.emplace_back();
    std::vector<bool> seen(def.degree + 1, false);
    for (std::size_t j = 0; j < gens[i].size(); ++j) {
      std::string at = field + "[" + std::to_string(j) + "]";
      auto const &v = gens[i][j];
      if (!v.is_number_integer())
        fail(source, "field '" + at + "': expected an integer");
      auto x = v.get<std::int64_t>();
      if (x < 1 || x > static_cast<std::int64_t>(def.degree))
        fail(source, "field '" + at + "': image " + std::to_string(x) + " outside 1.." +
                       std::to_string(def.degree));
      if (seen[static_cast<std::size_t>(x)])
        fail(source, "field '" + at + "': image " + std::to_string(x) +
                       " repeated, not a permutation");
      seen[static_cast<std::size_t>(x)] = true;
      images.push_back(x);
    }
  }

  if (doc.contains("expected")) {
    auto const &exp = doc["expected"];
    if (!exp.is_object())
      fail(source, "field 'expected': expected an object");
    ExpectedInvariants inv;
    for (auto const &[key, value] : exp.items()) {
      if (key == "order")
        inv.order = as_count(value, source, "expected.order");
      else if (key == "class_number")
        inv.class_number = as_count(value, source, "expected.class_number");
      else
        fail(source, "unknown field 'expected." + key + "'");
    }
    def.expected = inv;
  }

  return def;
}

GroupDefinition load_definition(std::filesystem::path const &path)
{
  std::ifstream in(path);
  if (!in)
    throw ParseError(path.string() + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_definition(buf.str(), path.string());
}

void save_definition(GroupDefinition const &def, std::filesystem::path const &path)
{
  std::ofstream out(path);
  if (!out)
    throw InvalidArgument(path.string() + ": cannot write file");
  out << to_json(def);
}

std::vector<CatalogEntry> load_directory(std::filesystem::path const &dir)
{
  if (!std::filesystem::is_directory(dir))
    throw InvalidArgument(dir.string() + ": not a directory");

  std::vector<std::filesystem::path> files;
  for (auto const &entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json")
      files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  std::vector<CatalogEntry> res;
  for (auto const &path : files) {
    try {
      res.push_back({path, load_definition(path)});
    } catch (std::exception const &e) {
      res.push_back({path, std::string(e.what())});
    }
  }
  return res;
}

} // namespace twistspec
