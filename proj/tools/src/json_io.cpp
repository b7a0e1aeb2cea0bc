#include "sgal_cli/json_io.hpp"

#include "sgal/errors.hpp"

#include <fstream>

namespace sgal::cli {

namespace {

std::string bits(Element x, std::size_t n) { return to_bitstring(x, n); }

Json elements_json(const std::vector<Element>& xs, std::size_t n) {
  Json a = Json::array();
  for (Element x : xs) a.push_back(bits(x, n));
  return a;
}

template <class T>
T required(const Json& doc, const char* key) {
  if (!doc.contains(key)) throw ParseError(std::string("missing key '") + key + "'");
  try {
    return doc.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ParseError(std::string("key '") + key + "' has the wrong type");
  }
}

}  // namespace

Psg psg_from_json(const Json& doc) {
  if (!doc.is_object()) throw ParseError("PSG document must be a JSON object");
  const auto name = required<std::string>(doc, "name");
  const auto n = required<std::size_t>(doc, "basis_size");
  if (n > kMaxPsgBasis) throw GuardrailError("basis_size exceeds the supported maximum", "n <= " + std::to_string(kMaxPsgBasis));
  const Element minus_one = parse_element(required<std::string>(doc, "minus_one"), n);
  if (!doc.contains("value_sets")) throw ParseError("missing key 'value_sets'");
  const Json& sets = doc.at("value_sets");
  if (!sets.is_object()) throw ParseError("value_sets must be an object keyed by bitstrings");
  const std::size_t size = std::size_t{1} << n;
  std::vector<BitVec> members(size, BitVec(size));
  std::vector<bool> seen(size, false);
  for (const auto& [key, list] : sets.items()) {
    const Element x = parse_element(key, n);
    if (seen[x.bits]) throw ParseError("duplicate value_sets key " + key);
    seen[x.bits] = true;
    if (!list.is_array()) throw ParseError("value set of " + key + " must be an array");
    for (const auto& y : list) {
      if (!y.is_string()) throw ParseError("value set entries must be bitstrings");
      members[x.bits].set(parse_element(y.get<std::string>(), n).bits);
    }
  }
  for (std::size_t x = 0; x < size; ++x)
    if (!seen[x]) throw ParseError("value_sets is missing key " + to_bitstring(Element{static_cast<std::uint32_t>(x)}, n));
  return Psg(name, n, minus_one, std::move(members));
}

Psg psg_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return psg_from_json(doc);
}

Json psg_to_json(const Psg& p) {
  Json sets = Json::object();
  for (std::uint32_t x = 0; x < p.size(); ++x)
    sets[bits(Element{x}, p.n())] = elements_json(p.value_set_elements(Element{x}), p.n());
  return Json{{"name", p.name()}, {"basis_size", p.n()}, {"minus_one", bits(p.minus_one(), p.n())}, {"value_sets", sets}};
}

Json to_json(const ValidationReport& r, std::size_t n) {
  Json v = Json::array();
  for (const auto& x : r.violations)
    v.push_back({{"axiom", x.axiom}, {"witness", elements_json(x.witness, n)}, {"detail", x.detail}});
  return v;
}

Json to_json(const StandardReport& r, std::size_t n) {
  auto entries = [n](const std::vector<StandardEntry>& es) {
    Json a = Json::array();
    for (const auto& e : es)
      a.push_back({{"elements", elements_json(e.elements, n)}, {"relation", e.relation}, {"quotient_exists", e.quotient_exists}, {"images", e.images}});
    return a;
  };
  return Json{{"standard", r.standard()},
              {"k_stable", r.k_stable},
              {"z4_witnesses", entries(r.z4)},
              {"d4_witnesses", entries(r.d4)},
              {"failures", r.failures}};
}

Json to_json(const BaseChangeReport& r) {
  return Json{{"bases", r.bases},
              {"order_mismatches", r.order_mismatches},
              {"fingerprint_mismatches", r.fingerprint_mismatches},
              {"non_bijective", r.non_bijective},
              {"cocycle_failures", r.cocycle_failures},
              {"ok", r.ok()}};
}

Json to_json(const MilnorReport& r, std::size_t n) {
  Json rows = Json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"a", bits(row.a, n)}, {"b", bits(row.b, n)}, {"cup_is_coboundary", row.cup_is_coboundary}});
  return rows;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace sgal::cli
