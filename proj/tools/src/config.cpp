#include "config.hpp"

#include <iterator>
#include <sstream>

#include <json.hpp>

namespace ecdlp::cli {

namespace {

std::vector<CLI::ConfigItem> from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw CLI::ConfigError(std::string("unreadable JSON config: ") + e.what());
  }
  const nlohmann::json& cfg = doc.contains("config") ? doc["config"] : doc;
  if (!cfg.is_object()) throw CLI::ConfigError("JSON config must be an object");
  std::vector<CLI::ConfigItem> items;
  for (const auto& [key, value] : cfg.items()) {
    if (value.is_null()) continue;
    CLI::ConfigItem item;
    item.name = key;
    if (value.is_string()) {
      item.inputs = {value.get<std::string>()};
    } else if (value.is_boolean()) {
      item.inputs = {value.get<bool>() ? "true" : "false"};
    } else if (value.is_number()) {
      item.inputs = {value.dump()};
    } else {
      throw CLI::ConfigError("config key '" + key + "' must be a scalar");
    }
    items.push_back(std::move(item));
  }
  return items;
}

}  // namespace

std::vector<CLI::ConfigItem> FlatConfig::from_config(std::istream& input) const {
  std::string text(std::istreambuf_iterator<char>(input), {});
  const auto first = text.find_first_not_of(" \t\r\n");
  std::vector<CLI::ConfigItem> items;
  if (first != std::string::npos && text[first] == '{') {
    items = from_json(text);
  } else {
    std::istringstream is(text);
    items = CLI::ConfigINI::from_config(is);
  }
  const auto subs = app_->get_subcommands();
  if (!subs.empty()) {
    for (auto& item : items)
      if (item.parents.empty()) item.parents = {subs.front()->get_name()};
  }
  return items;
}

}  // namespace ecdlp::cli
