#include "sgal_cli/commands.hpp"

#include "sgal/errors.hpp"
#include "sgal_cli/json_io.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <map>
#include <ostream>

namespace sgal::cli {

namespace {

constexpr std::size_t kDefaultGaloisLimit = 16;
constexpr std::size_t kDefaultCohomologyLimit = 14;
constexpr std::size_t kDefaultH2Limit = 6;

struct Outcome {
  Json report;
  int code = kOk;
};

std::string bits(Element x, std::size_t n) { return to_bitstring(x, n); }

Json characters_json(const std::vector<Character>& cs, std::size_t n) {
  Json a = Json::array();
  for (const auto& c : cs) a.push_back(to_bitstring(Element{c.coeffs}, n));
  return a;
}

Psg load(const RunConfig& cfg, std::ostream& err) {
  if (cfg.file) return psg_from_file(*cfg.file);
  if (!cfg.catalog) throw ParseError("an input is required: pass --catalog NAME or --file PATH");
  std::error_code ec;
  if (std::filesystem::is_regular_file(*cfg.catalog, ec)) {
    err << "warning: '" << *cfg.catalog << "' names both a catalog entry and a file; using the file\n";
    return psg_from_file(*cfg.catalog);
  }
  return catalog(*cfg.catalog);
}

/// Validation gate shared by the analysis commands.
std::optional<Outcome> require_valid(const Psg& p, std::ostream& err) {
  const ValidationReport r = validate(p);
  if (r.ok()) return std::nullopt;
  err << "error: " << p.name() << " is not a valid pre-special group\n";
  return Outcome{Json{{"name", p.name()}, {"valid", false}, {"violations", to_json(r, p.n())}}, kDomainFailure};
}

void guard(std::size_t needed, std::size_t limit, const std::string& what) {
  if (needed > limit)
    throw GuardrailError(what + " needs |Gal| = 2^" + std::to_string(needed) + " but the limit is 2^" +
                             std::to_string(limit) + "; rerun with --max-order " + std::to_string(needed),
                         "--max-order " + std::to_string(needed));
}

Outcome cmd_validate(const RunConfig& cfg, const Psg& p) {
  const ValidationReport r = validate(p);
  Json report{{"name", p.name()}, {"basis_size", p.n()}, {"valid", r.ok()}, {"violations", to_json(r, p.n())}};
  bool ok = r.ok();
  if (cfg.require_special) {
    const ValidationReport s = validate_special(p);
    report["special"] = s.ok();
    report["special_violations"] = to_json(s, p.n());
    ok = ok && s.ok();
  }
  return {report, ok ? kOk : kDomainFailure};
}

Outcome cmd_info(const Psg& p) {
  const RelationModule rm = relation_module(p);
  return {Json{{"name", p.name()},
               {"basis_size", p.n()},
               {"size", p.size()},
               {"minus_one", bits(p.minus_one(), p.n())},
               {"reduced", is_reduced(p)},
               {"k_stable", k_stable_check(p).ok()},
               {"k2_dim", rm.k2_dim},
               {"relation_module_dim", rm.q.dim()},
               {"relation_pairs", relation_pairs(p).size()},
               {"orderings", characters_json(orderings(p), p.n())}},
          kOk};
}

Outcome cmd_galois(const RunConfig& cfg, const Psg& p) {
  const GalGroup g = gal_group(p);
  const std::size_t limit = cfg.max_order.value_or(kDefaultGaloisLimit);
  guard(g.order_log2(), limit, "involution class enumeration");
  Json cosets = Json::array();
  for (const auto& c : involution_cosets(g)) cosets.push_back(c.to_string());
  const InvolutionStructure inv = involution_structure(g, limit);
  Json classes = Json::array();
  for (const auto& [coset, count] : inv.classes_per_coset) classes.push_back({{"coset", coset.to_string()}, {"classes", count}});

  int code = kOk;
  Json report{{"name", p.name()},
              {"order_log2", g.order_log2()},
              {"fingerprint", fingerprint_label(g)},
              {"k2_dim", g.relations().k2_dim},
              {"maximal_count", maximal_subgroups(g).size()},
              {"involution_cosets", cosets},
              {"involution_classes", classes},
              {"formally_real", is_formally_real(g)},
              {"pythagorean", is_pythagorean(g)}};
  report["order"] = g.order_log2() < 63 ? Json(std::uint64_t{1} << g.order_log2()) : Json(nullptr);
  if (k_stable_check(p).ok())
    report["orderings"] = characters_json(orderings_via_galois(g), p.n());
  else
    report["orderings"] = nullptr;
  if (cfg.standard) {
    const StandardReport s = is_standard(p);
    report["standard"] = to_json(s, p.n());
    if (!s.standard()) code = kDomainFailure;
  }
  if (cfg.bases > 0) {
    const BaseChangeReport b = base_change_check(p, cfg.bases, cfg.seed);
    report["base_change"] = to_json(b);
    if (!b.ok()) code = kDomainFailure;
  }
  return {report, code};
}

Outcome cmd_orderings(const Psg& p) {
  const auto direct = orderings(p);
  const auto via = orderings_via_galois(gal_group(p));
  const bool agree = direct == via;
  return {Json{{"name", p.name()}, {"orderings", characters_json(direct, p.n())}, {"via_galois", characters_json(via, p.n())}, {"agree", agree}},
          agree ? kOk : kDomainFailure};
}

Outcome cmd_standard(const Psg& p) {
  const StandardReport s = is_standard(p);
  Json report = to_json(s, p.n());
  report["name"] = p.name();
  return {report, s.standard() ? kOk : kDomainFailure};
}

Outcome cmd_cohomology(const RunConfig& cfg, const Psg& p) {
  const GalGroup g = gal_group(p);
  const std::size_t limit = cfg.max_order.value_or(kDefaultCohomologyLimit);
  guard(g.order_log2(), limit, "the cup-product experiment");
  const H1Group h = h1(g);
  const MilnorReport m = milnor_map_experiment(p, limit);
  Json report{{"name", p.name()},
              {"h0", h0(g).order},
              {"h1_dim", h.dim},
              {"minus_one_character", h.distinguished.functional.to_string()},
              {"relation_pairs", to_json(m, p.n())},
              {"k2_map_well_defined", m.well_defined()}};
  const std::size_t h2_limit = cfg.max_order.value_or(kDefaultH2Limit);
  report["h2_dim"] = g.order_log2() <= h2_limit ? Json(h2_dim(g, h2_limit)) : Json(nullptr);
  return {report, kOk};
}

Outcome cmd_catalog_list() {
  return {Json{{"catalog", catalog_names()}}, kOk};
}

void render_text(const Json& j, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      out << pad << key << ":\n";
      render_text(value, out, indent + 2);
    } else if (value.is_array() && !value.empty() && value.front().is_object()) {
      out << pad << key << ":\n";
      for (const auto& item : value) {
        std::string line;
        for (const auto& [k, v] : item.items()) line += (line.empty() ? "" : "  ") + k + "=" + (v.is_string() ? v.get<std::string>() : v.dump());
        out << pad << "  - " << line << "\n";
      }
    } else if (value.is_array()) {
      std::string line;
      for (const auto& v : value) line += (line.empty() ? "" : ", ") + (v.is_string() ? v.get<std::string>() : v.dump());
      out << pad << key << ": [" << line << "]\n";
    } else {
      out << pad << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
  }
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"validate", "info", "galois", "orderings", "standard", "cohomology", "catalog-list"};
  return names;
}

namespace {

const std::map<std::string, std::string>& command_help() {
  static const std::map<std::string, std::string> help{
      {"validate", "check the axioms and report violations with witnesses"},
      {"info", "basic invariants: size, -1, reduced, k2 dimension"},
      {"galois", "order, fingerprint and involution data of Gal(G)"},
      {"orderings", "orderings of G and their Galois-side counterparts"},
      {"standard", "decide standardness with Z4/D4 quotient witnesses"},
      {"cohomology", "H0, H1, H2 and cup products on relation pairs"},
      {"catalog-list", "list the built-in catalog"}};
  return help;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    Outcome o;
    if (cfg.command == "catalog-list") {
      o = cmd_catalog_list();
    } else {
      const Psg p = load(cfg, err);
      if (cfg.command == "validate") {
        o = cmd_validate(cfg, p);
      } else if (auto bad = require_valid(p, err)) {
        o = *bad;
      } else if (cfg.command == "info") {
        o = cmd_info(p);
      } else if (cfg.command == "galois") {
        o = cmd_galois(cfg, p);
      } else if (cfg.command == "orderings") {
        o = cmd_orderings(p);
      } else if (cfg.command == "standard") {
        o = cmd_standard(p);
      } else if (cfg.command == "cohomology") {
        o = cmd_cohomology(cfg, p);
      } else {
        err << "error: unknown command '" << cfg.command << "'\n";
        return kUsage;
      }
    }
    if (cfg.json)
      out << dump(o.report);
    else
      render_text(o.report, out, 0);
    return o.code;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const GuardrailError& e) {
    err << "guardrail: " << e.what() << " (required: " << e.limit() << ")\n";
    return kGuardrail;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kDomainFailure;
  }
}

int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Galois groups of finite pre-special groups", "sg-galois"};
  app.require_subcommand(1, 1);
  RunConfig cfg;
  std::size_t max_order = 0;
  for (const auto& name : command_names()) {
    CLI::App* sub = app.add_subcommand(name, command_help().at(name));
    if (name == "catalog-list") {
      sub->add_flag("--json", cfg.json, "emit JSON");
      continue;
    }
    auto* cat = sub->add_option("--catalog", cfg.catalog, "catalog name, e.g. FAN2 or PRODUCT(Z2_REAL,F3LIKE)");
    auto* file = sub->add_option("--file", cfg.file, "path to a PSG JSON document");
    cat->excludes(file);
    file->excludes(cat);
    sub->add_flag("--json", cfg.json, "emit JSON");
    sub->add_option("--seed", cfg.seed, "seed for randomized checks")->default_val(0);
    sub->add_option("--max-order", max_order, "guardrail override as an exponent of 2");
    if (name == "validate") sub->add_flag("--require-special", cfg.require_special, "also check 3-transitivity");
    if (name == "galois") {
      sub->add_flag("--standard", cfg.standard, "run the standardness decision procedure");
      sub->add_option("--bases", cfg.bases, "number of random bases for base-change checks");
    }
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }
  for (auto* sub : app.get_subcommands()) {
    cfg.command = sub->get_name();
    if (sub->get_option_no_throw("--max-order") && sub->count("--max-order") > 0) cfg.max_order = max_order;
  }
  return run(cfg, out, err);
}

}  // namespace sgal::cli
