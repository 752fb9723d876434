#include "magnocorr/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "magnocorr/output.hpp"
#include "magnocorr/units.hpp"

namespace magnocorr {

namespace {

namespace pt = boost::property_tree;

std::vector<std::string> tokens(const std::string& text, bool split_commas = false) {
  std::string s = text;
  if (split_commas) {
    for (char& c : s) {
      if (c == ',') c = ' ';
    }
  }
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

// Inline comments start with ';' or '#'.
void strip_inline_comments(pt::ptree& tree) {
  for (auto& [key, node] : tree) {
    if (!node.empty()) {
      strip_inline_comments(node);
      continue;
    }
    std::string value = node.data();
    value.erase(std::min(value.size(), value.find_first_of(";#")));
    value.erase(value.find_last_not_of(" \t") + 1);
    node.put_value(value);
  }
}

double parse_number(const std::string& key, const std::string& text) {
  double v = 0.0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) throw ConfigError(key + ": '" + text + "' is not a number");
  return v;
}

int parse_count(const std::string& key, const std::string& text) {
  int v = 0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) throw ConfigError(key + ": '" + text + "' is not an integer");
  return v;
}

Unit default_unit(ParameterKind kind, Unit rate_default) {
  switch (kind) {
    case ParameterKind::Rate: return rate_default;
    case ParameterKind::Temperature: return Unit::Kelvin;
    case ParameterKind::GyroRatio: return Unit::RadPerSecond;
    default: return Unit::Dimensionless;
  }
}

Unit unit_or_throw(const std::string& key, const std::string& text) {
  const auto u = parse_unit(text);
  if (!u) throw ConfigError(key + ": unknown unit '" + text + "'");
  return *u;
}

ParameterKind kind_or_throw(const std::string& key, const std::string& name) {
  const auto kind = parameter_kind(name);
  if (!kind) throw ConfigError(key + ": unknown parameter '" + name + "'");
  return *kind;
}

template <class F>
auto rethrow_as_config(const std::string& key, F&& f) {
  try {
    return f();
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError(key + ": " + e.what());
  }
}

void read_system(const pt::ptree& section, Unit rate_default, PhysicalParams& p) {
  struct Entry {
    std::string key;
    double value;
    Unit unit;
  };
  std::vector<Entry> numeric;
  std::optional<Entry> eta;
  bool gain_given = false;

  for (const auto& [key, node] : section) {
    const std::string text = node.get_value<std::string>();
    if (key == "units") continue;
    if (key == "coupling_mode") {
      p.coupling_mode = rethrow_as_config(key, [&] { return parse_coupling_mode(text); });
      continue;
    }
    if (key == "diffusion" || key == "diffusion_convention") {
      p.diffusion_convention = rethrow_as_config(key, [&] { return parse_diffusion_convention(text); });
      continue;
    }
    if (key == "drift" || key == "drift_variant") {
      p.drift_variant = rethrow_as_config(key, [&] { return parse_drift_variant(text); });
      continue;
    }
    const ParameterKind kind = kind_or_throw(key, key);
    const auto parts = tokens(text);
    if (parts.empty() || parts.size() > 2) throw ConfigError(key + ": expected '<value> [unit]'");
    Entry e{key, parse_number(key, parts[0]),
            parts.size() == 2 ? unit_or_throw(key, parts[1]) : default_unit(kind, rate_default)};
    if (key == "eta") {
      eta = e;
    } else {
      gain_given |= key == "gain_g";
      numeric.push_back(e);
    }
  }
  if (eta && gain_given) throw ConfigError("eta: conflicts with gain_g; give only one");

  // The reference scales first so kappa1/omega_b units resolve against them.
  for (const char* ref : {"kappa_1", "omega_b"}) {
    for (const Entry& e : numeric) {
      if (e.key != ref) continue;
      if ((e.key == "kappa_1" && e.unit == Unit::Kappa1) || (e.key == "omega_b" && e.unit == Unit::OmegaB)) {
        throw ConfigError(e.key + ": cannot be given in units of itself");
      }
      rethrow_as_config(e.key, [&] {
        set_parameter(p, e.key, to_internal(e.value, e.unit, ParameterKind::Rate, p));
        return 0;
      });
    }
  }
  for (const Entry& e : numeric) {
    if (e.key == "kappa_1" || e.key == "omega_b") continue;
    rethrow_as_config(e.key, [&] {
      set_parameter(p, e.key, to_internal(e.value, e.unit, *parameter_kind(e.key), p));
      return 0;
    });
  }
  if (eta) {
    rethrow_as_config("eta", [&] {
      set_parameter(p, "eta", to_internal(eta->value, eta->unit, ParameterKind::Dimensionless, p));
      return 0;
    });
  }
}

Axis read_axis(const std::string& key, const std::string& text, Unit rate_default) {
  const auto parts = tokens(text);
  if (parts.size() != 4 && parts.size() != 5) {
    throw ConfigError(key + ": expected '<name> <min> <max> <count> [unit]'");
  }
  const ParameterKind kind = kind_or_throw(key, parts[0]);
  Axis a;
  a.name = parts[0];
  a.min = parse_number(key, parts[1]);
  a.max = parse_number(key, parts[2]);
  a.count = parse_count(key, parts[3]);
  a.unit = parts.size() == 5 ? unit_or_throw(key, parts[4]) : default_unit(kind, rate_default);
  return a;
}

void check_keys(const pt::ptree& section, const std::string& name,
                std::initializer_list<const char*> allowed) {
  for (const auto& [key, node] : section) {
    bool ok = false;
    for (const char* a : allowed) ok |= key == a;
    if (!ok) throw ConfigError("[" + name + "] unknown key '" + key + "'");
  }
}

}  // namespace

Config parse_config(std::istream& in) {
  pt::ptree tree;
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError(std::string("config syntax: ") + e.what());
  }
  strip_inline_comments(tree);

  Unit rate_default = Unit::RadPerSecond;
  for (const auto& [key, node] : tree) {
    if (!node.empty()) {
      if (key != "system" && key != "sweep" && key != "output" && key != "tc") {
        throw ConfigError("unknown section [" + key + "]");
      }
      continue;
    }
    if (key != "units") throw ConfigError("unknown top-level key '" + key + "'");
    rate_default = unit_or_throw(key, node.get_value<std::string>());
  }
  if (const auto u = tree.get_optional<std::string>("system.units")) rate_default = unit_or_throw("units", *u);
  if (rate_default != Unit::RadPerSecond && rate_default != Unit::Hz2pi && rate_default != Unit::Kappa1 &&
      rate_default != Unit::OmegaB) {
    throw ConfigError("units: must be a rate unit (rad_s|Hz2pi|kappa1|omega_b)");
  }

  Config cfg;
  if (const auto sys = tree.get_child_optional("system")) read_system(*sys, rate_default, cfg.spec.base);
  rethrow_as_config("system", [&] {
    cfg.spec.base.validate();
    return 0;
  });

  if (const auto sweep = tree.get_child_optional("sweep")) {
    check_keys(*sweep, "sweep", {"axis1", "axis2", "delta2", "jobs", "name"});
    if (const auto a = sweep->get_optional<std::string>("axis1")) {
      cfg.spec.axes.push_back(read_axis("axis1", *a, rate_default));
    }
    if (const auto a = sweep->get_optional<std::string>("axis2")) {
      if (cfg.spec.axes.empty()) throw ConfigError("axis2: given without axis1");
      cfg.spec.axes.push_back(read_axis("axis2", *a, rate_default));
    }
    if (const auto d = sweep->get_optional<std::string>("delta2")) {
      if (*d == "independent") cfg.spec.delta2_rule = Delta2Rule::Independent;
      else if (*d == "equal") cfg.spec.delta2_rule = Delta2Rule::Equal;
      else if (*d == "opposite") cfg.spec.delta2_rule = Delta2Rule::Opposite;
      else throw ConfigError("delta2: expected independent|equal|opposite");
    }
    if (const auto j = sweep->get_optional<std::string>("jobs")) {
      cfg.jobs = parse_count("jobs", *j);
      if (cfg.jobs < 1) throw ConfigError("jobs: must be >= 1");
    }
    cfg.spec.name = sweep->get<std::string>("name", "");
  }
  rethrow_as_config("sweep", [&] {
    cfg.spec.validate();
    return 0;
  });

  if (const auto out = tree.get_child_optional("output")) {
    check_keys(*out, "output", {"format", "quantities"});
    if (const auto f = out->get_optional<std::string>("format")) {
      if (*f == "csv") cfg.spec.format = OutputFormat::Csv;
      else if (*f == "jsonl" || *f == "json-lines") cfg.spec.format = OutputFormat::JsonLines;
      else throw ConfigError("format: expected csv|jsonl");
    }
    if (const auto q = out->get_optional<std::string>("quantities")) {
      cfg.spec.quantities = tokens(*q, true);
    }
    rethrow_as_config("quantities", [&] { return output_columns(cfg.spec).size(); });
  }

  if (const auto tc = tree.get_child_optional("tc")) {
    check_keys(*tc, "tc", {"pair"});
    const auto parts = tokens(tc->get<std::string>("pair", ""), true);
    if (parts.size() != 2) throw ConfigError("pair: expected two modes, e.g. 'a2 m'");
    cfg.tc_pair = rethrow_as_config("pair", [&] {
      const ModePair pair{parse_mode(parts[0]), parse_mode(parts[1])};
      if (pair.first == pair.second) throw std::invalid_argument("modes must differ");
      return pair;
    });
  }
  return cfg;
}

Config load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path.string() + "'");
  return parse_config(in);
}

}  // namespace magnocorr
