#pragma once

#include <json.hpp>

#include "ei/atoms.hpp"
#include "ei/blowup.hpp"
#include "ei/config.hpp"
#include "ei/fuzz.hpp"

namespace ei {

using Json = nlohmann::json;

inline constexpr int kFormatVersion = 1;

// Integers ride as JSON numbers while they fit exactly in a double-backed
// consumer (|v| < 2^53) and as decimal strings beyond that.
Json int_to_json(const Int& v);
Int int_from_json(const Json& j);

Json config_to_json(const Configuration& c);
Configuration config_from_json(const Json& j);
Configuration load_config(const std::string& path);
void save_config(const Configuration& c, const std::string& path);

Json atom_to_json(const AtomRecord& a);
AtomRecord atom_from_json(const Json& j);

Json center_to_json(const BlowupCenter& c);
BlowupCenter center_from_json(const Json& j);

Json blowup_report_to_json(const BlowupReport& r);
Json fuzz_report_to_json(const FuzzReport& r);
Json catalog_to_json(std::int64_t p, const AtomCatalog& cat);
Json obstruction_report_to_json(const ObstructionReport& r);

Json class_to_json(const GroupElementClass& cls);

// Canonical dump: 2-space indent, trailing newline; byte-identical for equal
// documents.
std::string dump_json(const Json& j);

}  // namespace ei
