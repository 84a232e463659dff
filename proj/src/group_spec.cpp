#include "grouplab/group_spec.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include <json.hpp>

#include "grouplab/error.hpp"

namespace grouplab {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

GroupSpec parse_atom(std::string_view s) {
  s = trim(s);
  if (s.size() < 2) throw Error(ErrorKind::ParseError, "bad group atom '" + std::string(s) + "'");
  int n = 0;
  const auto* first = s.data() + 1;
  const auto* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, n);
  if (ec != std::errc() || ptr != last)
    throw Error(ErrorKind::ParseError, "bad order in '" + std::string(s) + "'");
  GroupSpec spec;
  spec.order = n;
  switch (s.front()) {
    case 'C': spec.kind = GroupSpec::Kind::Cyclic; break;
    case 'D': spec.kind = GroupSpec::Kind::Dihedral; break;
    case 'Q': spec.kind = GroupSpec::Kind::Quaternion; break;
    default: throw Error(ErrorKind::ParseError, "unknown group family '" + std::string(s) + "'");
  }
  return spec;
}

}  // namespace

GroupSpec parse_group_spec(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw Error(ErrorKind::ParseError, "empty group spec");
  if (text.front() == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorKind::ParseError, e.what());
    }
    if (!j.contains("table") || !j["table"].is_array())
      throw Error(ErrorKind::ParseError, "JSON group spec needs a 'table' array");
    GroupSpec spec;
    spec.kind = GroupSpec::Kind::Table;
    spec.name = j.value("name", std::string("T"));
    try {
      spec.table = j["table"].get<std::vector<std::vector<int>>>();
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorKind::ParseError, e.what());
    }
    spec.order = static_cast<int>(spec.table.size());
    return spec;
  }

  std::vector<GroupSpec> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find('x', start);
    parts.push_back(parse_atom(text.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  if (parts.size() == 1) return parts.front();
  GroupSpec acc = std::move(parts.front());
  for (std::size_t i = 1; i < parts.size(); ++i) {
    GroupSpec prod;
    prod.kind = GroupSpec::Kind::Product;
    prod.order = acc.order * parts[i].order;
    prod.factors = {std::move(acc), std::move(parts[i])};
    acc = std::move(prod);
  }
  return acc;
}

GroupPtr build_group(const GroupSpec& spec) {
  switch (spec.kind) {
    case GroupSpec::Kind::Cyclic: return cyclic(spec.order);
    case GroupSpec::Kind::Dihedral: return dihedral(spec.order);
    case GroupSpec::Kind::Quaternion: return quaternion(spec.order);
    case GroupSpec::Kind::Product: {
      auto a = build_group(spec.factors.at(0));
      auto b = build_group(spec.factors.at(1));
      return direct_product(*a, *b);
    }
    case GroupSpec::Kind::Table: return FiniteGroup::from_table(spec.name, spec.table);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown group spec kind");
}

GroupPtr build_group(std::string_view text) { return build_group(parse_group_spec(text)); }

std::string to_string(const GroupSpec& spec) {
  switch (spec.kind) {
    case GroupSpec::Kind::Cyclic: return "C" + std::to_string(spec.order);
    case GroupSpec::Kind::Dihedral: return "D" + std::to_string(spec.order);
    case GroupSpec::Kind::Quaternion: return "Q" + std::to_string(spec.order);
    case GroupSpec::Kind::Product: return to_string(spec.factors.at(0)) + "x" + to_string(spec.factors.at(1));
    case GroupSpec::Kind::Table: return nlohmann::json{{"name", spec.name}, {"table", spec.table}}.dump();
  }
  return {};
}

}  // namespace grouplab
