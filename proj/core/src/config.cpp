#include "lhm/config.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>
#include <vector>

namespace lhm {

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::optional<double> to_double(std::string_view s) {
  s = trim(s);
  if (s.empty()) return std::nullopt;
  if (s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

enum class KeyType { Real, Angle, Count, Branch, Text, Format };

struct KeySpec {
  KeyType type;
  bool required;
};

const std::map<std::string, KeySpec, std::less<>>& key_table() {
  static const std::map<std::string, KeySpec, std::less<>> table = {
      {"omega1_over_gamma", {KeyType::Real, true}},
      {"omega2_over_gamma", {KeyType::Real, true}},
      {"omega3_over_gamma", {KeyType::Real, true}},
      {"phi3_rad", {KeyType::Angle, true}},
      {"delta2_over_gamma", {KeyType::Real, true}},
      {"gamma1_over_gamma", {KeyType::Real, true}},
      {"gamma2_over_gamma", {KeyType::Real, true}},
      {"gamma4_over_gamma", {KeyType::Real, true}},
      {"delta1_over_gamma", {KeyType::Real, false}},
      {"delta4_over_gamma", {KeyType::Real, false}},
      {"gamma_scale_per_s", {KeyType::Real, false}},
      {"density_per_m3", {KeyType::Real, false}},
      {"d21_C_m", {KeyType::Real, false}},
      {"mu42_J_per_T", {KeyType::Real, false}},
      {"delta1_min_over_gamma", {KeyType::Real, false}},
      {"delta1_max_over_gamma", {KeyType::Real, false}},
      {"points", {KeyType::Count, false}},
      {"tol_abs", {KeyType::Real, false}},
      {"branch", {KeyType::Branch, false}},
      {"output_path", {KeyType::Text, false}},
      {"format", {KeyType::Format, false}},
  };
  return table;
}

[[noreturn]] void parse_error(std::size_t line, std::string_view key, const std::string& what) {
  std::string msg = "line " + std::to_string(line);
  if (!key.empty()) msg += ", key '" + std::string(key) + "'";
  raise(ErrorKind::ParseError, msg + ": " + what);
}

}  // namespace

std::string_view format_name(OutputFormat format) noexcept {
  return format == OutputFormat::Csv ? "csv" : "json";
}

OutputFormat parse_format(std::string_view text) {
  if (text == "csv") return OutputFormat::Csv;
  if (text == "json") return OutputFormat::Json;
  raise(ErrorKind::ValidationError, "format must be 'csv' or 'json', got '" + std::string(text) + "'");
}

double parse_angle(std::string_view text) {
  std::string_view s = trim(text);
  const auto pi_pos = s.find("pi");
  if (pi_pos == std::string_view::npos) {
    if (auto v = to_double(s)) return *v;
    raise(ErrorKind::ParseError, "invalid angle '" + std::string(text) + "'");
  }

  std::string_view coef = trim(s.substr(0, pi_pos));
  std::string_view rest = trim(s.substr(pi_pos + 2));
  if (!coef.empty() && coef.back() == '*') coef = trim(coef.substr(0, coef.size() - 1));

  double factor = 1.0;
  if (coef == "-") {
    factor = -1.0;
  } else if (coef == "+" || coef.empty()) {
    factor = 1.0;
  } else if (auto v = to_double(coef)) {
    factor = *v;
  } else {
    raise(ErrorKind::ParseError, "invalid angle coefficient in '" + std::string(text) + "'");
  }

  double denom = 1.0;
  if (!rest.empty()) {
    if (rest.front() != '/') raise(ErrorKind::ParseError, "invalid angle '" + std::string(text) + "'");
    const auto d = to_double(rest.substr(1));
    if (!d || *d == 0.0) raise(ErrorKind::ParseError, "invalid angle denominator in '" + std::string(text) + "'");
    denom = *d;
  }
  return factor * std::numbers::pi / denom;
}

SweepSpec RunConfig::sweep_spec() const {
  SweepSpec spec;
  spec.delta1_min = delta1_min;
  spec.delta1_max = delta1_max;
  spec.points = points;
  spec.params = system;
  spec.medium = medium;
  spec.branch = branch;
  return spec;
}

void RunConfig::validate() const {
  system.validate();
  medium.validate();
  sweep_spec().validate();
  if (!(tol_abs > 0.0)) raise(ErrorKind::ValidationError, "tol_abs must be > 0");
}

RunConfig parse_config(std::string_view text) {
  const auto& table = key_table();
  std::map<std::string, std::pair<std::string, std::size_t>, std::less<>> entries;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) parse_error(line_no, {}, "expected 'key = value'");
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key.empty()) parse_error(line_no, {}, "empty key");
    if (table.find(key) == table.end()) parse_error(line_no, key, "unknown key");
    if (entries.count(key)) parse_error(line_no, key, "duplicate key");
    if (value.empty()) parse_error(line_no, key, "empty value");
    entries.emplace(std::string(key), std::pair{std::string(value), line_no});
  }

  std::vector<std::string> missing;
  for (const auto& [key, spec] : table) {
    if (spec.required && !entries.count(key)) missing.push_back(key);
  }
  if (!missing.empty()) {
    std::string msg = "missing required keys:";
    for (const auto& k : missing) msg += " " + k;
    raise(ErrorKind::ValidationError, msg);
  }

  RunConfig cfg;
  auto real = [&](std::string_view key, double fallback) {
    const auto it = entries.find(key);
    if (it == entries.end()) return fallback;
    const auto v = to_double(it->second.first);
    if (!v) parse_error(it->second.second, key, "not a number: '" + it->second.first + "'");
    return *v;
  };
  auto text_of = [&](std::string_view key) -> std::optional<std::pair<std::string, std::size_t>> {
    const auto it = entries.find(key);
    if (it == entries.end()) return std::nullopt;
    return it->second;
  };

  SystemParams& s = cfg.system;
  s.omega1 = real("omega1_over_gamma", 0.0);
  s.omega2 = real("omega2_over_gamma", 0.0);
  s.omega3 = real("omega3_over_gamma", 0.0);
  {
    const auto [raw, line] = *text_of("phi3_rad");
    try {
      s.phi3 = parse_angle(raw);
    } catch (const Error& e) {
      parse_error(line, "phi3_rad", e.what());
    }
  }
  s.delta1 = real("delta1_over_gamma", 0.0);
  s.delta2 = real("delta2_over_gamma", 0.0);
  s.delta4 = real("delta4_over_gamma", 0.0);
  s.gamma1 = real("gamma1_over_gamma", 0.0);
  s.gamma2 = real("gamma2_over_gamma", 0.0);
  s.gamma4 = real("gamma4_over_gamma", 0.0);
  s.gamma_scale = real("gamma_scale_per_s", 1.0e6);

  cfg.medium.density_n = real("density_per_m3", cfg.medium.density_n);
  cfg.medium.d21 = real("d21_C_m", cfg.medium.d21);
  cfg.medium.mu42 = real("mu42_J_per_T", cfg.medium.mu42);

  cfg.delta1_min = real("delta1_min_over_gamma", cfg.delta1_min);
  cfg.delta1_max = real("delta1_max_over_gamma", cfg.delta1_max);
  if (const auto v = text_of("points")) {
    std::size_t n = 0;
    const std::string& raw = v->first;
    const auto [ptr, ec] = std::from_chars(raw.data(), raw.data() + raw.size(), n);
    if (ec != std::errc{} || ptr != raw.data() + raw.size()) {
      parse_error(v->second, "points", "not a non-negative integer: '" + raw + "'");
    }
    cfg.points = n;
  }
  cfg.tol_abs = real("tol_abs", cfg.tol_abs);
  if (const auto v = text_of("branch")) cfg.branch = parse_branch(v->first);
  if (const auto v = text_of("format")) cfg.format = parse_format(v->first);
  if (const auto v = text_of("output_path")) cfg.output_path = v->first;

  cfg.validate();
  return cfg;
}

RunConfig load_config(const std::string& path) {
  namespace fs = std::filesystem;
  if (!fs::exists(path)) {
    if (const auto preset = bundled_preset(fs::path(path).filename().string())) return parse_config(*preset);
    raise(ErrorKind::ParseError, "config file not found: " + path);
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(ErrorKind::ParseError, "cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

}  // namespace lhm
