// Copyright (c) 2026 slfem contributors
// SPDX-License-Identifier: Apache-2.0

#include "slfem/config.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace slfem {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

[[noreturn]] void fail(const std::string& key, const std::string& why) {
  throw std::invalid_argument("config: field '" + key + "' " + why);
}

double parse_double(const std::string& key, const std::string& v) {
  try {
    size_t pos = 0;
    const double d = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument("");
    return d;
  } catch (...) {
    fail(key, "is not a number: '" + v + "'");
  }
}

int parse_int(const std::string& key, const std::string& v) {
  try {
    size_t pos = 0;
    const int i = std::stoi(v, &pos);
    if (pos != v.size()) throw std::invalid_argument("");
    return i;
  } catch (...) {
    fail(key, "is not an integer: '" + v + "'");
  }
}

std::vector<double> parse_double_list(const std::string& key,
                                      const std::string& v) {
  std::vector<double> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(parse_double(key, item));
  }
  return out;
}

LoadType parse_load_type(const std::string& key, const std::string& v) {
  const std::string s = lower(v);
  if (s == "uniform") return LoadType::Uniform;
  if (s == "slope") return LoadType::Slope;
  if (s == "sine") return LoadType::Sine;
  if (s == "parabolic") return LoadType::Parabolic;
  fail(key, "must be one of uniform|slope|sine|parabolic, got '" + v + "'");
}

// Known keys, so unknown ones and env overrides can be reported precisely.
const std::vector<std::string>& known_keys() {
  static const std::vector<std::string> keys = {
      "case",
      "material.mu",
      "material.lambda",
      "material.gamma",
      "material.fiber_axis",
      "material.alpha",
      "material.beta",
      "load.profile",
      "load.sigma_t",
      "mesh.width",
      "mesh.height",
      "mesh.crack_length",
      "mesh.nx",
      "mesh.ny",
      "mesh.grading",
      "solver.method",
      "solver.rel_tol",
      "solver.max_iter",
      "solver.preconditioner",
      "picard.tol",
      "picard.max_iter",
      "picard.stagnation_window",
      "picard.stagnation_rel",
      "sweep.alpha",
      "sweep.beta",
      "sweep.sigma_t",
      "compare.loads",
      "compare.sigma_t",
      "output_dir",
      "threads",
      "seed",
  };
  return keys;
}

void apply_key(RunConfig& cfg, const std::string& key, const std::string& raw) {
  const std::string value = trim(raw);
  if (key == "case") {
    const std::string s = lower(value);
    if (s == "case1a") cfg.kind = CaseKind::Case1a;
    else if (s == "case1b") cfg.kind = CaseKind::Case1b;
    else if (s == "case2a") cfg.kind = CaseKind::Case2a;
    else if (s == "case2b") cfg.kind = CaseKind::Case2b;
    else if (s == "uniform_x") cfg.kind = CaseKind::UniformX;
    else if (s == "uniform_y") cfg.kind = CaseKind::UniformY;
    else if (s == "custom") cfg.kind = CaseKind::Custom;
    else fail(key, "unknown case '" + value + "'");
  } else if (key == "material.mu") {
    cfg.material.mu = parse_double(key, value);
  } else if (key == "material.lambda") {
    cfg.material.lambda = parse_double(key, value);
  } else if (key == "material.gamma") {
    cfg.material.gamma = parse_double(key, value);
  } else if (key == "material.fiber_axis") {
    const std::string s = lower(value);
    if (s == "x") cfg.material.fiber_axis = FiberAxis::X;
    else if (s == "y") cfg.material.fiber_axis = FiberAxis::Y;
    else fail(key, "must be x or y, got '" + value + "'");
  } else if (key == "material.alpha") {
    cfg.material.alpha = parse_double(key, value);
  } else if (key == "material.beta") {
    cfg.material.beta = parse_double(key, value);
  } else if (key == "load.profile") {
    cfg.load.type = parse_load_type(key, value);
  } else if (key == "load.sigma_t") {
    cfg.load.sigma_t = parse_double(key, value);
  } else if (key == "mesh.width") {
    cfg.mesh.width = parse_double(key, value);
  } else if (key == "mesh.height") {
    cfg.mesh.height = parse_double(key, value);
  } else if (key == "mesh.crack_length") {
    cfg.mesh.crack_length = parse_double(key, value);
  } else if (key == "mesh.nx") {
    cfg.mesh.nx = parse_int(key, value);
  } else if (key == "mesh.ny") {
    cfg.mesh.ny = parse_int(key, value);
  } else if (key == "mesh.grading") {
    cfg.mesh.grading = parse_double(key, value);
  } else if (key == "solver.method") {
    const std::string s = lower(value);
    if (s == "direct") cfg.solver.method = SolverMethod::Direct;
    else if (s == "cg") cfg.solver.method = SolverMethod::ConjugateGradient;
    else fail(key, "must be direct or cg, got '" + value + "'");
  } else if (key == "solver.rel_tol") {
    cfg.solver.rel_tol = parse_double(key, value);
  } else if (key == "solver.max_iter") {
    cfg.solver.max_iter = parse_int(key, value);
  } else if (key == "solver.preconditioner") {
    const std::string s = lower(value);
    if (s == "none") cfg.solver.preconditioner = PreconditionerKind::None;
    else if (s == "jacobi") cfg.solver.preconditioner = PreconditionerKind::Jacobi;
    else if (s == "ic" || s == "incomplete_cholesky")
      cfg.solver.preconditioner = PreconditionerKind::IncompleteCholesky;
    else fail(key, "must be none|jacobi|ic, got '" + value + "'");
  } else if (key == "picard.tol") {
    cfg.picard.tol = parse_double(key, value);
  } else if (key == "picard.max_iter") {
    cfg.picard.max_iter = parse_int(key, value);
  } else if (key == "picard.stagnation_window") {
    cfg.picard.stagnation_window = parse_int(key, value);
  } else if (key == "picard.stagnation_rel") {
    cfg.picard.stagnation_rel = parse_double(key, value);
  } else if (key == "sweep.alpha") {
    cfg.sweep.alpha = parse_double_list(key, value);
  } else if (key == "sweep.beta") {
    cfg.sweep.beta = parse_double_list(key, value);
  } else if (key == "sweep.sigma_t") {
    cfg.sweep.sigma_t = parse_double_list(key, value);
  } else if (key == "compare.loads") {
    cfg.compare_loads.clear();
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ','))
      if (!trim(item).empty())
        cfg.compare_loads.push_back(parse_load_type(key, trim(item)));
  } else if (key == "compare.sigma_t") {
    cfg.compare_sigma_t = parse_double_list(key, value);
  } else if (key == "output_dir") {
    cfg.output_dir = value;
  } else if (key == "threads") {
    cfg.threads = parse_int(key, value);
  } else if (key == "seed") {
    cfg.seed = static_cast<unsigned>(parse_int(key, value));
  } else {
    fail(key, "is not a recognized configuration key");
  }
}

void apply_case_preset(RunConfig& cfg) {
  switch (cfg.kind) {
    case CaseKind::Case1a:
      cfg.material.fiber_axis = FiberAxis::X;
      cfg.load.type = LoadType::Slope;
      break;
    case CaseKind::Case1b:
      cfg.material.fiber_axis = FiberAxis::Y;
      cfg.load.type = LoadType::Slope;
      break;
    case CaseKind::Case2a:
      cfg.material.fiber_axis = FiberAxis::X;
      cfg.load.type = LoadType::Sine;
      break;
    case CaseKind::Case2b:
      cfg.material.fiber_axis = FiberAxis::Y;
      cfg.load.type = LoadType::Sine;
      break;
    case CaseKind::UniformX:
      cfg.material.fiber_axis = FiberAxis::X;
      cfg.load.type = LoadType::Uniform;
      break;
    case CaseKind::UniformY:
      cfg.material.fiber_axis = FiberAxis::Y;
      cfg.load.type = LoadType::Uniform;
      break;
    case CaseKind::Custom:
      break;
  }
}

void validate(const RunConfig& cfg) {
  // Construction performs the full material validity check (SPD included).
  MaterialModel probe(cfg.material);
  if (cfg.mesh.crack_length < 0.0 || cfg.mesh.crack_length >= cfg.mesh.width)
    fail("mesh.crack_length", "must lie in [0, mesh.width)");
  if (cfg.mesh.nx < 2 || cfg.mesh.ny < 1) fail("mesh.nx/ny", "too small");
  if (!(cfg.mesh.grading >= 1.0)) fail("mesh.grading", "must be >= 1");
  if (!(cfg.solver.rel_tol > 0.0 && cfg.solver.rel_tol < 1.0))
    fail("solver.rel_tol", "must lie in (0, 1)");
  if (!(cfg.picard.tol > 0.0)) fail("picard.tol", "must be > 0");
  if (cfg.picard.max_iter < 1) fail("picard.max_iter", "must be >= 1");
  if (cfg.threads < 1) fail("threads", "must be >= 1");
  if (cfg.compare_loads.empty()) fail("compare.loads", "must be non-empty");
  if (cfg.compare_sigma_t.empty()) fail("compare.sigma_t", "must be non-empty");
}

}  // namespace

std::string env_var_for_key(const std::string& key) {
  std::string name = "SLFEM_";
  for (const char c : key)
    name += c == '.' ? '_' : static_cast<char>(std::toupper(c));
  return name;
}

RunConfig parse_config_text(const std::string& text) {
  RunConfig cfg;
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config: line " + std::to_string(lineno) +
                                  " is not 'key = value': '" + line + "'");
    apply_key(cfg, trim(line.substr(0, eq)), line.substr(eq + 1));
  }

  for (const auto& key : known_keys()) {
    if (const char* v = std::getenv(env_var_for_key(key).c_str()))
      apply_key(cfg, key, v);
  }

  apply_case_preset(cfg);
  validate(cfg);
  return cfg;
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw std::invalid_argument("config: cannot open file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config_text(buffer.str());
}

const char* to_string(CaseKind kind) {
  switch (kind) {
    case CaseKind::Case1a: return "case1a";
    case CaseKind::Case1b: return "case1b";
    case CaseKind::Case2a: return "case2a";
    case CaseKind::Case2b: return "case2b";
    case CaseKind::UniformX: return "uniform_x";
    case CaseKind::UniformY: return "uniform_y";
    case CaseKind::Custom: return "custom";
  }
  return "?";
}

}  // namespace slfem
