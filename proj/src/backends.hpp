#pragma once

#include <string>
#include <vector>

#include "topology.hpp"

namespace qroute {

// Backends bundled from the hardware calibration tables, addressable by name.
std::vector<std::string> builtin_backend_names();
bool is_builtin_backend(const std::string& name);
std::string builtin_backend_json(const std::string& name);
Topology builtin_backend(const std::string& name);

// Loads a backend by builtin name or file path.
Topology resolve_backend(const std::string& name_or_path);

} // namespace qroute
