#pragma once

#include <string>

#include "loclab/perm_group.hpp"

namespace loclab {

/// Parses the group file format:
///   name: <token>
///   degree: <int>
///   gens: <cycles>;<cycles>;...
/// with `#` comment lines, cycles in 1-based notation like (1 2)(3 4).
PermGroup parse_group_file(const std::string& text);
PermGroup load_group_file(const std::string& path);

}  // namespace loclab
