#pragma once

#include <json.hpp>
#include <string>

#include "caustic/acampo.hpp"
#include "caustic/virtualmorse.hpp"

namespace caustic {

using json = nlohmann::json;

json to_json(const VirtualMorsification& vm);
VirtualMorsification vm_from_json(const json& j);

json to_json(const Divide& d);
Divide divide_from_json(const json& j);

json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

// Resolves a seed argument: a JSON file (seed or divide), or a shipped class name.
VirtualMorsification load_seed(const std::string& what);
std::string data_dir();

}  // namespace caustic
