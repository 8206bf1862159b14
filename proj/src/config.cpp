#include "ddfpp/config.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "ddfpp/problems.hpp"

namespace ddfpp {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void bad(const std::string& key, const std::string& value, const char* expect) {
  throw ConfigError("config key '" + key + "': invalid value '" + value + "' (expected " + expect + ")");
}

bool to_bool(const std::string& k, const std::string& v) {
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  bad(k, v, "true|false");
}

long to_long(const std::string& k, const std::string& v) {
  try {
    std::size_t pos = 0;
    const long r = std::stol(v, &pos);
    if (pos != v.size()) bad(k, v, "an integer");
    return r;
  } catch (const std::logic_error&) {
    bad(k, v, "an integer");
  }
}

double to_double(const std::string& k, const std::string& v) {
  try {
    std::size_t pos = 0;
    const double r = std::stod(v, &pos);
    if (pos != v.size()) bad(k, v, "a number");
    return r;
  } catch (const std::logic_error&) {
    bad(k, v, "a number");
  }
}

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

const char* b2s(bool b) { return b ? "true" : "false"; }

const char* section_of(const std::string& k) {
  static const std::pair<const char*, const char*> table[] = {
      {"problem", "run"},      {"t_end", "run"},         {"max_steps", "run"},     {"nx", "grid"},
      {"ny", "grid"},          {"order", "scheme"},      {"ddf_projection", "scheme"}, {"pp_limiter", "scheme"},
      {"chardecomp", "scheme"}, {"discriminant", "scheme"}, {"viscosity", "scheme"}, {"cfl", "time"},
      {"cfl_convention", "time"}, {"check_admissible", "time"}, {"dir", "output"}, {"format", "output"},
      {"every", "output"},     {"run_log", "output"},    {"resolutions", "study"}, {"norm", "study"},
      {"threads", "parallel"}};
  for (const auto& [key, sec] : table)
    if (k == key) return sec;
  return nullptr;
}

}  // namespace

void set_config_value(RunConfig& c, const std::string& full_key, const std::string& v) {
  const auto dot = full_key.rfind('.');
  const std::string k = dot == std::string::npos ? full_key : full_key.substr(dot + 1);
  const char* sec = section_of(k);
  if (!sec || (dot != std::string::npos && full_key.substr(0, dot) != sec))
    throw ConfigError("unknown config key '" + full_key + "'");
  if (k == "problem") c.problem = v;
  else if (k == "t_end") c.t_end = to_double(k, v);
  else if (k == "max_steps") c.max_steps = to_long(k, v);
  else if (k == "nx") c.nx = static_cast<int>(to_long(k, v));
  else if (k == "ny") c.ny = static_cast<int>(to_long(k, v));
  else if (k == "order") c.order = static_cast<int>(to_long(k, v));
  else if (k == "ddf_projection") c.ddf_projection = to_bool(k, v);
  else if (k == "pp_limiter") c.pp_limiter = to_bool(k, v);
  else if (k == "chardecomp") c.chardecomp = to_bool(k, v);
  else if (k == "discriminant") {
    if (v == "printed") c.discriminant = DiscriminantForm::Printed;
    else if (v == "standard") c.discriminant = DiscriminantForm::Standard;
    else bad(k, v, "printed|standard");
  } else if (k == "viscosity") {
    if (v == "envelope") c.viscosity = ViscosityMode::Envelope;
    else if (v == "bound") c.viscosity = ViscosityMode::PositivityBound;
    else bad(k, v, "envelope|bound");
  } else if (k == "cfl") c.cfl = to_double(k, v);
  else if (k == "cfl_convention") {
    if (v == "bound") c.cfl_convention = CflConvention::Bound;
    else if (v == "classic") c.cfl_convention = CflConvention::Classic;
    else bad(k, v, "bound|classic");
  } else if (k == "check_admissible") c.check_admissible = to_bool(k, v);
  else if (k == "dir") c.out_dir = v;
  else if (k == "format") c.format = v;
  else if (k == "every") c.every = static_cast<int>(to_long(k, v));
  else if (k == "run_log") c.run_log = to_bool(k, v);
  else if (k == "resolutions") {
    c.resolutions.clear();
    std::stringstream ss(v);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      tok = trim(tok);
      if (!tok.empty()) c.resolutions.push_back(static_cast<int>(to_long(k, tok)));
    }
  } else if (k == "norm") {
    if (v == "integral") c.norm = NormKind::Integral;
    else if (v == "mean") c.norm = NormKind::Mean;
    else bad(k, v, "integral|mean");
  } else if (k == "threads") c.threads = static_cast<int>(to_long(k, v));
  else throw ConfigError("unknown config key '" + full_key + "'");
}

RunConfig parse_config(const std::string& text, RunConfig c) {
  std::stringstream in(text);
  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError("config line " + std::to_string(lineno) + ": malformed section");
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    set_config_value(c, section.empty() ? key : section + "." + key, trim(line.substr(eq + 1)));
  }
  return c;
}

RunConfig load_config(const std::string& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), std::move(base));
}

std::string serialize_config(const RunConfig& c) {
  std::ostringstream o;
  o << "[run]\nproblem = " << c.problem << "\nt_end = " << g17(c.t_end) << "\nmax_steps = " << c.max_steps << "\n\n";
  o << "[grid]\nnx = " << c.nx << "\nny = " << c.ny << "\n\n";
  o << "[scheme]\norder = " << c.order << "\nddf_projection = " << b2s(c.ddf_projection)
    << "\npp_limiter = " << b2s(c.pp_limiter) << "\nchardecomp = " << b2s(c.chardecomp)
    << "\ndiscriminant = " << (c.discriminant == DiscriminantForm::Printed ? "printed" : "standard")
    << "\nviscosity = " << (c.viscosity == ViscosityMode::Envelope ? "envelope" : "bound") << "\n\n";
  o << "[time]\ncfl = " << g17(c.cfl) << "\ncfl_convention = "
    << (c.cfl_convention == CflConvention::Bound ? "bound" : "classic")
    << "\ncheck_admissible = " << b2s(c.check_admissible) << "\n\n";
  o << "[output]\ndir = " << c.out_dir << "\nformat = " << c.format << "\nevery = " << c.every
    << "\nrun_log = " << b2s(c.run_log) << "\n\n";
  o << "[study]\nresolutions = ";
  for (std::size_t r = 0; r < c.resolutions.size(); ++r) o << (r ? "," : "") << c.resolutions[r];
  o << "\nnorm = " << (c.norm == NormKind::Integral ? "integral" : "mean") << "\n\n";
  o << "[parallel]\nthreads = " << c.threads << "\n";
  return o.str();
}

void RunConfig::validate() const {
  find_problem(problem);
  if (order != 2 && order != 5) throw ConfigError("order must be 2 or 5, got " + std::to_string(order));
  if (nx < 0 || ny < 0) throw ConfigError("nx, ny must be positive (0 selects the preset)");
  if (!(cfl > 0.0 && cfl < 1.0)) throw ConfigError("cfl must lie in (0, 1)");
  if (format != "csv" && format != "vtk" && format != "none") throw ConfigError("format must be csv, vtk or none");
  if (every < 0) throw ConfigError("every must be >= 0");
  if (threads < 1) throw ConfigError("threads must be >= 1");
  if (max_steps < 0) throw ConfigError("max_steps must be >= 0");
  for (int n : resolutions)
    if (n < 1) throw ConfigError("resolutions must be positive");
}

SchemeOptions RunConfig::scheme_options() const {
  SchemeOptions o;
  o.k = order;
  o.ddf_projection = ddf_projection;
  o.pp_limiter = pp_limiter;
  o.chardecomp = chardecomp;
  o.discriminant = discriminant;
  o.viscosity = viscosity;
  o.threads = threads;
  return o;
}

}  // namespace ddfpp
