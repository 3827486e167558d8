#pragma once

#include <json.hpp>

#include "stabmod/complex.hpp"

namespace stabmod::io {

using json = nlohmann::ordered_json;

json ring_to_json(const exactla::RingSpec& r);
exactla::RingSpec ring_from_json(const json& j);

/// Built-in groups serialize by constructor name and parameters; custom
/// groups carry their full table. Loading a builtin reruns the audited
/// constructor.
json group_to_json(const grp::GroupPtr& g);
grp::GroupPtr group_from_json(const json& j);

/// Matrices carry exact entries as strings plus ring metadata.
json matrix_to_json(const exactla::Matrix& m);
exactla::Matrix matrix_from_json(const json& j);

/// Modules serialize by generator-indexed matrices; the full element action
/// is reconstructed by generator words and audited on load (an invalid
/// action is a hard error naming the failing pair).
json module_to_json(const rep::RepModule& m);
rep::RepModule module_from_json(const json& j);

json complex_to_json(const homalg::ChainComplex& c);
homalg::ChainComplex complex_from_json(const json& j);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace stabmod::io
