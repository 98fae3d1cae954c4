#include "orf/config.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "orf/errors.hpp"

namespace orf {

namespace {

const std::set<std::string> kSuites = {
    "orthonormality", "kernel_equivalence", "lp_convergence",
    "jump_pointwise", "dini_pointwise",     "bounds",
    "probes"};

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::vector<std::string> tokens(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

double parse_double(const std::string& t, int line) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(t, &pos);
  } catch (const std::exception&) {
    throw ConfigParseError(line, "expected a number, got '" + t + "'");
  }
  if (pos != t.size() || !std::isfinite(v))
    throw ConfigParseError(line, "expected a finite number, got '" + t + "'");
  return v;
}

int parse_int(const std::string& t, int line) {
  std::size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(t, &pos);
  } catch (const std::exception&) {
    throw ConfigParseError(line, "expected an integer, got '" + t + "'");
  }
  if (pos != t.size())
    throw ConfigParseError(line, "expected an integer, got '" + t + "'");
  return static_cast<int>(v);
}

std::uint64_t parse_u64(const std::string& t, int line) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(t, &pos);
  } catch (const std::exception&) {
    throw ConfigParseError(line, "expected an unsigned integer, got '" + t +
                                     "'");
  }
  if (pos != t.size())
    throw ConfigParseError(line, "expected an unsigned integer, got '" + t +
                                     "'");
  return v;
}

std::string fmt_param(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

GeneratorSpec parse_generator(const std::string& value, int line) {
  const auto t = tokens(value);
  if (t.empty()) throw ConfigParseError(line, "generator value is empty");
  GeneratorSpec g;
  g.kind = t[0];
  auto want = [&](std::size_t n) {
    if (t.size() != n + 1)
      throw ConfigParseError(line, "generator '" + g.kind + "' takes " +
                                       std::to_string(n) + " argument(s)");
  };
  if (g.kind == "constant") {
    want(2);
    g.p1 = parse_double(t[1], line);
    g.p2 = parse_double(t[2], line);
    if (!(g.p2 > 0.0))
      throw ConfigParseError(line, "constant pole needs Im > 0");
  } else if (g.kind == "geometric_im") {
    want(1);
    g.p1 = parse_double(t[1], line);
    if (!(g.p1 > 0.0))
      throw ConfigParseError(line, "geometric_im base must be positive");
  } else if (g.kind == "power_law") {
    want(2);
    g.p1 = parse_double(t[1], line);
    g.p2 = parse_double(t[2], line);
  } else if (g.kind == "mixed_cycle") {
    want(0);
  } else if (g.kind == "file") {
    want(1);
    g.path = t[1];
  } else {
    throw ConfigParseError(line, "unknown generator '" + g.kind + "'");
  }
  return g;
}

FunctionSpec parse_function(const std::string& value, int line) {
  const auto t = tokens(value);
  if (t.empty()) throw ConfigParseError(line, "function value is empty");
  FunctionSpec f;
  f.name = t[0];
  if (f.name == "runge" || f.name == "gauss" || f.name == "sign_exp" ||
      f.name == "sign_gauss" || f.name == "zero") {
    if (t.size() != 1)
      throw ConfigParseError(line, "function '" + f.name +
                                       "' takes no arguments");
  } else if (f.name == "const") {
    if (t.size() != 4)
      throw ConfigParseError(line, "const takes: value lo hi");
    f.c = parse_double(t[1], line);
    f.lo = parse_double(t[2], line);
    f.hi = parse_double(t[3], line);
    if (!(f.hi > f.lo))
      throw ConfigParseError(line, "const support needs hi > lo");
  } else {
    throw ConfigParseError(line, "unknown function '" + f.name + "'");
  }
  return f;
}

std::vector<int> parse_n_list(const std::string& value, int line) {
  const auto t = tokens(value);
  if (t.empty()) throw ConfigParseError(line, "n_list must not be empty");
  std::vector<int> out;
  for (const auto& s : t) {
    const int n = parse_int(s, line);
    if (n < 1) throw ConfigParseError(line, "n_list entries must be >= 1");
    if (!out.empty() && n <= out.back())
      throw ConfigParseError(line, "n_list must be strictly increasing");
    out.push_back(n);
  }
  return out;
}

void default_n_list(SuiteConfig& sc) {
  if (!sc.n_list.empty()) return;
  if (sc.suite == "lp_convergence")
    sc.n_list = {1, 2, 4, 8, 16};
  else if (sc.suite == "jump_pointwise" || sc.suite == "dini_pointwise")
    sc.n_list = {2, 4, 8, 16, 32};
  else if (sc.suite == "bounds")
    sc.n_list = {5, 10, 20};
  else if (sc.suite == "probes")
    sc.n_list = {1, 4, 16, 64};
}

void require_positive(double v, const char* what, int line) {
  if (!(v > 0.0))
    throw ConfigParseError(line, std::string(what) + " must be positive");
}

// Per-key constraints are enforced where the key appears; only cross-field
// relations are deferred to suite close and reported at the header line.
void check_suite(const SuiteConfig& sc) {
  const int line = sc.header_line;
  if (sc.suite == "bounds") {
    if (sc.x_max < sc.x_min) throw ConfigParseError(line, "x_max < x_min");
    if (sc.y_max < sc.y_min) throw ConfigParseError(line, "y_max < y_min");
  }
}

}  // namespace

std::string GeneratorSpec::label() const {
  if (kind == "constant") return "constant " + fmt_param(p1) + " " + fmt_param(p2);
  if (kind == "geometric_im") return "geometric_im " + fmt_param(p1);
  if (kind == "power_law")
    return "power_law " + fmt_param(p1) + " " + fmt_param(p2);
  if (kind == "file") return "file " + path;
  return kind;
}

std::string FunctionSpec::label() const {
  if (name == "const")
    return "const " + fmt_param(c) + " " + fmt_param(lo) + " " + fmt_param(hi);
  return name;
}

PoleSequence make_poles(const GeneratorSpec& spec, int count) {
  if (spec.kind == "constant")
    return constant_pole({spec.p1, spec.p2}, count);
  if (spec.kind == "geometric_im") return geometric_im(spec.p1, count);
  if (spec.kind == "power_law") return power_law(spec.p1, spec.p2, count);
  if (spec.kind == "mixed_cycle") return mixed_cycle(count);
  PoleSequence seq = poles_from_file(spec.path);
  if (seq.size() < static_cast<std::size_t>(count))
    throw PrefixTooShort(count, seq.size());
  return seq;
}

TargetFunction make_function(const FunctionSpec& spec) {
  TargetFunction f;
  f.name = spec.label();
  const auto sgn = [](double x) {
    return static_cast<double>((x > 0.0) - (x < 0.0));
  };
  if (spec.name == "runge") {
    f.eval = [](double x) {
      return std::complex<double>(1.0 / (1.0 + x * x), 0.0);
    };
    f.decay = DecayClass::Algebraic;
    f.algebraic_order = 2.0;
    f.algebraic_scale = 1.0;
  } else if (spec.name == "gauss") {
    f.eval = [](double x) {
      return std::complex<double>(std::exp(-x * x), 0.0);
    };
    f.decay = DecayClass::SchwartzLike;
  } else if (spec.name == "sign_exp") {
    f.eval = [sgn](double x) {
      return std::complex<double>(sgn(x) * std::exp(-std::abs(x)), 0.0);
    };
    f.decay = DecayClass::SchwartzLike;
    f.marked_points = {{0.0, -1.0, 1.0}};
  } else if (spec.name == "sign_gauss") {
    f.eval = [sgn](double x) {
      return std::complex<double>(sgn(x) * std::exp(-x * x), 0.0);
    };
    f.decay = DecayClass::SchwartzLike;
    f.marked_points = {{0.0, -1.0, 1.0}};
  } else if (spec.name == "const") {
    const double c = spec.c, lo = spec.lo, hi = spec.hi;
    f.eval = [c, lo, hi](double x) {
      return std::complex<double>(x >= lo && x <= hi ? c : 0.0, 0.0);
    };
    f.decay = DecayClass::Compact;
    f.support_lo = lo;
    f.support_hi = hi;
    f.marked_points = {{lo, 0.0, c}, {hi, c, 0.0}};
  } else if (spec.name == "zero") {
    f.eval = [](double) { return std::complex<double>(0.0, 0.0); };
    f.decay = DecayClass::SchwartzLike;
  } else {
    throw Error("unknown function '" + spec.name + "'");
  }
  return f;
}

ExperimentConfig parse_config_text(const std::string& text) {
  ExperimentConfig cfg;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  SuiteConfig* current = nullptr;

  const auto close_current = [](SuiteConfig* sc) {
    if (!sc) return;
    default_n_list(*sc);
    check_suite(*sc);
  };

  while (std::getline(in, raw)) {
    ++line_no;
    const std::string s = trim(raw);
    if (s.empty() || s[0] == '#' || s[0] == ';') continue;

    if (s.front() == '[') {
      if (s.back() != ']')
        throw ConfigParseError(line_no, "unterminated section header");
      const auto head = tokens(s.substr(1, s.size() - 2));
      if (head.empty() || head.size() > 2)
        throw ConfigParseError(line_no,
                               "section header must be [suite] or [suite label]");
      if (!kSuites.count(head[0]))
        throw ConfigParseError(line_no, "unknown suite '" + head[0] + "'");
      close_current(current);
      SuiteConfig sc;
      sc.suite = head[0];
      if (head.size() == 2) sc.label = head[1];
      sc.header_line = line_no;
      cfg.suites.push_back(sc);
      current = &cfg.suites.back();
      continue;
    }

    const auto eq = s.find('=');
    if (eq == std::string::npos)
      throw ConfigParseError(line_no, "expected 'key = value'");
    const std::string key = trim(s.substr(0, eq));
    const std::string value = trim(s.substr(eq + 1));
    if (key.empty()) throw ConfigParseError(line_no, "missing key");
    if (value.empty())
      throw ConfigParseError(line_no, "missing value for '" + key + "'");

    if (!current) {
      if (key == "seed")
        cfg.seed = parse_u64(value, line_no);
      else if (key == "output")
        cfg.output = value;
      else if (key == "quad_tol") {
        cfg.quad_tol = parse_double(value, line_no);
        require_positive(cfg.quad_tol, "quad_tol", line_no);
      } else if (key == "slack") {
        cfg.slack = parse_double(value, line_no);
        require_positive(cfg.slack, "slack", line_no);
      } else if (key == "fd_slack") {
        cfg.fd_slack = parse_double(value, line_no);
        require_positive(cfg.fd_slack, "fd_slack", line_no);
      } else {
        throw ConfigParseError(line_no, "unknown global key '" + key + "'");
      }
      continue;
    }

    SuiteConfig& sc = *current;
    if (key == "generator")
      sc.generator = parse_generator(value, line_no);
    else if (key == "function")
      sc.function = parse_function(value, line_no);
    else if (key == "n_list")
      sc.n_list = parse_n_list(value, line_no);
    else if (key == "tol") {
      sc.tol = parse_double(value, line_no);
      require_positive(sc.tol, "tol", line_no);
    } else if (key == "k_range") {
      sc.k_range = parse_int(value, line_no);
      if (sc.k_range < 0)
        throw ConfigParseError(line_no, "k_range must be >= 0");
    } else if (key == "gram_tol") {
      sc.gram_tol = parse_double(value, line_no);
      require_positive(sc.gram_tol, "gram_tol", line_no);
    } else if (key == "n_max") {
      sc.n_max = parse_int(value, line_no);
      if (sc.n_max < 1) throw ConfigParseError(line_no, "n_max must be >= 1");
    } else if (key == "pairs") {
      sc.pairs = parse_int(value, line_no);
      if (sc.pairs < 1) throw ConfigParseError(line_no, "pairs must be >= 1");
    } else if (key == "separation") {
      sc.separation = parse_double(value, line_no);
      require_positive(sc.separation, "separation", line_no);
    } else if (key == "cd_tol") {
      sc.cd_tol = parse_double(value, line_no);
      require_positive(sc.cd_tol, "cd_tol", line_no);
    } else if (key == "dirichlet_tol") {
      sc.dirichlet_tol = parse_double(value, line_no);
      require_positive(sc.dirichlet_tol, "dirichlet_tol", line_no);
    } else if (key == "p") {
      sc.p = parse_double(value, line_no);
      if (!(sc.p > 1.0)) throw ConfigParseError(line_no, "p must exceed 1");
    } else if (key == "x0") {
      sc.x0 = parse_double(value, line_no);
    } else if (key == "final_tol") {
      sc.final_tol = parse_double(value, line_no);
      require_positive(sc.final_tol, "final_tol", line_no);
    } else if (key == "decay_factor") {
      sc.decay_factor = parse_double(value, line_no);
      if (!(sc.decay_factor > 0.0 && sc.decay_factor <= 1.0))
        throw ConfigParseError(line_no, "decay_factor must lie in (0, 1]");
    } else if (key == "x_min") {
      sc.x_min = parse_double(value, line_no);
    } else if (key == "x_max") {
      sc.x_max = parse_double(value, line_no);
    } else if (key == "x_step") {
      sc.x_step = parse_double(value, line_no);
      require_positive(sc.x_step, "x_step", line_no);
    } else if (key == "y_min") {
      sc.y_min = parse_double(value, line_no);
      require_positive(sc.y_min, "y_min", line_no);
    } else if (key == "y_max") {
      sc.y_max = parse_double(value, line_no);
    } else if (key == "y_step") {
      sc.y_step = parse_double(value, line_no);
      require_positive(sc.y_step, "y_step", line_no);
    } else if (key == "x") {
      sc.x = parse_double(value, line_no);
    } else if (key == "delta") {
      sc.delta = parse_double(value, line_no);
      require_positive(sc.delta, "delta", line_no);
    } else {
      throw ConfigParseError(line_no, "unknown key '" + key + "'");
    }
  }
  close_current(current);
  if (cfg.suites.empty())
    throw ConfigParseError(line_no, "config declares no suites");
  return cfg;
}

ExperimentConfig parse_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

}  // namespace orf
