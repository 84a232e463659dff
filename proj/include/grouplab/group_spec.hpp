#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "grouplab/group.hpp"

namespace grouplab {

/// Parsed group-spec text: `C<n>`, `D<2n>`, `Q<4m>`, `A x B` (left
/// associative), or a JSON object `{"name": ..., "table": [[...]]}`.
struct GroupSpec {
  enum class Kind { Cyclic, Dihedral, Quaternion, Product, Table };

  Kind kind = Kind::Cyclic;
  int order = 1;
  std::vector<GroupSpec> factors;       // Product
  std::string name;                     // Table
  std::vector<std::vector<int>> table;  // Table
};

/// Throws Error{ParseError}.
GroupSpec parse_group_spec(std::string_view text);
GroupPtr build_group(const GroupSpec& spec);
GroupPtr build_group(std::string_view text);
/// Canonical text form; Table specs render as compact JSON.
std::string to_string(const GroupSpec& spec);

}  // namespace grouplab
