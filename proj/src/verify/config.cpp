#include "sepmon/verify/config.hpp"

#include <algorithm>
#include <charconv>

#include "sepmon/verify/suite.hpp"

namespace sepmon::verify {

std::string mutation_name(Mutation m) {
  switch (m) {
    case Mutation::None: return "none";
    case Mutation::Mu: return "mu";
    case Mutation::Xi: return "xi";
    case Mutation::Action: return "action";
  }
  return "unknown";
}

namespace {

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  auto flush = [&] {
    auto b = cur.find_first_not_of(" \t");
    auto e = cur.find_last_not_of(" \t");
    out.push_back(b == std::string::npos ? "" : cur.substr(b, e - b + 1));
    cur.clear();
  };
  for (char c : text) {
    if (c == ',') {
      flush();
    } else {
      cur += c;
    }
  }
  flush();
  return out;
}

}  // namespace

std::vector<groups::Element> parse_element_list(const std::string& text) {
  std::vector<groups::Element> out;
  if (text.find_first_not_of(" \t") == std::string::npos) return out;
  for (const auto& item : split_commas(text)) {
    groups::Element v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw ConfigError("invalid element index '" + item + "' in '" + text + "'");
    }
    out.push_back(v);
  }
  return out;
}

std::vector<std::string> parse_check_list(const std::string& text) {
  if (text == "all" || text.empty()) return {};
  auto out = split_commas(text);
  for (const auto& id : out) {
    if (id.empty()) throw ConfigError("empty check id in '" + text + "'");
  }
  return out;
}

void validate(const SuiteConfig& cfg) {
  if (cfg.family_size < 1) throw ConfigError("family size must be at least 1");
  if (cfg.subgroup != "all") parse_element_list(cfg.subgroup);
  const auto& known = check_ids();
  for (const auto& id : cfg.checks) {
    if (std::find(known.begin(), known.end(), id) == known.end()) throw ConfigError("unknown check id '" + id + "'");
  }
}

}  // namespace sepmon::verify
