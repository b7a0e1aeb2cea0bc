#pragma once

#include "sgal/cohomology.hpp"
#include "sgal/galois.hpp"
#include "sgal/psg.hpp"

#include <json.hpp>

namespace sgal::cli {

using Json = nlohmann::json;

/// Reads a PSG document: name, basis_size, minus_one, value_sets.
/// Throws ParseError on any schema problem.
Psg psg_from_json(const Json& doc);
Psg psg_from_file(const std::string& path);
Json psg_to_json(const Psg& p);

Json to_json(const ValidationReport& r, std::size_t n);
Json to_json(const StandardReport& r, std::size_t n);
Json to_json(const BaseChangeReport& r);
Json to_json(const MilnorReport& r, std::size_t n);

/// Pretty output with sorted keys; parsing and dumping it again is byte-identical.
std::string dump(const Json& j);

}  // namespace sgal::cli
