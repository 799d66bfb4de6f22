#include "cvqaoa/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "cvqaoa/error.hpp"

namespace cvqaoa {
namespace {

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return trim(pos == std::string::npos ? line : line.substr(0, pos));
}

std::vector<std::string> split_fields(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

double parse_double(const std::string& s, std::size_t line) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("expected a number, got '" + s + "'", line);
  }
}

std::uint64_t parse_unsigned(const std::string& s, std::size_t line) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw ConfigError("expected a non-negative integer, got '" + s + "'", line);
  return v;
}

bool parse_bool(const std::string& s, std::size_t line) {
  if (s == "true" || s == "1" || s == "yes" || s == "on") return true;
  if (s == "false" || s == "0" || s == "no" || s == "off") return false;
  throw ConfigError("expected true or false, got '" + s + "'", line);
}

std::vector<double> parse_vector(const std::string& s, std::size_t line) {
  std::vector<double> v;
  for (const auto& f : split_fields(s)) v.push_back(parse_double(f, line));
  if (v.empty()) throw ConfigError("expected at least one number", line);
  return v;
}

struct Entry {
  std::string value;
  std::size_t line = 0;
};

const std::map<std::string, std::set<std::string>>& schema() {
  static const std::map<std::string, std::set<std::string>> s = {
      {"problem", {"kind", "dimension", "file"}},
      {"grid", {"half_extent", "points"}},
      {"initial", {"position", "momentum", "squeezing"}},
      {"schedule", {"steps", "T", "eta", "gamma", "decay", "mixer"}},
      {"sampling", {"n", "seed", "jitter", "threshold"}},
      {"guards", {"leakage_threshold", "band_fraction", "aliasing", "occupancy"}},
      {"scan", {"T"}},
      {"pubo", {"beta", "omega", "lambda"}},
      {"grover", {"target", "width", "momentum", "iterations"}},
      {"output", {"dir"}},
  };
  return s;
}

// Broadcasts a scalar to `n` components, or checks the length.
std::vector<double> per_axis(std::vector<double> v, std::size_t n, const std::string& what, std::size_t line) {
  if (v.size() == 1 && n > 1) v.assign(n, v[0]);
  if (v.size() != n)
    throw ConfigError(what + " has " + std::to_string(v.size()) + " components, expected " + std::to_string(n), line);
  return v;
}

std::istringstream open_lines(const std::filesystem::path& path, const char* what) {
  std::ifstream f(path);
  if (!f) throw ConfigError(std::string("cannot open ") + what + " '" + path.string() + "'");
  std::ostringstream os;
  os << f.rdbuf();
  return std::istringstream(os.str());
}

} // namespace

const char* to_string(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::StyblinskiTang: return "styblinski-tang";
    case ProblemKind::PolynomialFile: return "polynomial-file";
    case ProblemKind::PuboFile: return "pubo-file";
    case ProblemKind::Grover: return "grover";
  }
  return "unknown";
}

GridSpec ExperimentConfig::make_grid() const { return cvqaoa::make_grid(grid); }

Schedule ExperimentConfig::make_schedule() const {
  if (!eta.empty() || !gamma.empty()) return Schedule(eta, gamma, mixer);
  if (steps == 0) return Schedule({}, {}, mixer);
  return decayed_schedule(steps, T.value_or(0.0), T.value_or(0.0), decay, mixer);
}

ExperimentConfig parse_config(std::istream& in, const std::filesystem::path& base_dir) {
  std::map<std::string, Entry> entries;  // "section.key"
  std::string section;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = strip_comment(raw);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError("unterminated section header", line_no);
      section = trim(line.substr(1, line.size() - 2));
      if (!schema().count(section)) throw ConfigError("unknown section [" + section + "]", line_no);
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("expected 'key = value'", line_no);
    if (section.empty()) throw ConfigError("key outside of a [section]", line_no);
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    if (!schema().at(section).count(key)) throw ConfigError("unknown key '" + key + "' in [" + section + "]", line_no);
    if (value.empty()) throw ConfigError("empty value for '" + key + "'", line_no);
    const auto full = section + "." + key;
    if (entries.count(full)) throw ConfigError("duplicate key '" + full + "'", line_no);
    entries[full] = {value, line_no};
  }

  ExperimentConfig c;
  auto get = [&](const std::string& k) -> const Entry* {
    auto it = entries.find(k);
    return it == entries.end() ? nullptr : &it->second;
  };

  if (auto* e = get("problem.kind")) {
    const auto& v = e->value;
    if (v == "styblinski-tang") c.kind = ProblemKind::StyblinskiTang;
    else if (v == "polynomial-file") c.kind = ProblemKind::PolynomialFile;
    else if (v == "pubo-file") c.kind = ProblemKind::PuboFile;
    else if (v == "grover") c.kind = ProblemKind::Grover;
    else throw ConfigError("unknown problem kind '" + v + "'", e->line);
  } else {
    throw ConfigError("missing [problem] kind");
  }
  if (auto* e = get("problem.dimension")) {
    c.dimension = parse_unsigned(e->value, e->line);
    if (c.dimension == 0) throw ConfigError("dimension must be positive", e->line);
  }
  const std::size_t n = c.dimension;

  {
    const auto* ext = get("grid.half_extent");
    const auto* pts = get("grid.points");
    if (!ext || !pts) throw ConfigError("[grid] needs half_extent and points");
    const auto extents = per_axis(parse_vector(ext->value, ext->line), n, "half_extent", ext->line);
    const auto points = per_axis(parse_vector(pts->value, pts->line), n, "points", pts->line);
    for (std::size_t i = 0; i < n; ++i) {
      if (points[i] < 0 || points[i] != static_cast<double>(static_cast<std::size_t>(points[i])))
        throw ConfigError("points must be integers", pts->line);
      c.grid.emplace_back(extents[i], static_cast<std::size_t>(points[i]));
    }
    try {
      (void)cvqaoa::make_grid(c.grid);
    } catch (const InvalidArgument& err) {
      throw ConfigError(err.what(), pts->line);
    }
  }

  if (auto* e = get("initial.position")) c.initial.center_position = per_axis(parse_vector(e->value, e->line), n, "position", e->line);
  if (auto* e = get("initial.momentum")) c.initial.center_momentum = per_axis(parse_vector(e->value, e->line), n, "momentum", e->line);
  if (auto* e = get("initial.squeezing")) c.initial.squeezing = per_axis(parse_vector(e->value, e->line), n, "squeezing", e->line);

  if (auto* e = get("schedule.steps")) c.steps = parse_unsigned(e->value, e->line);
  if (auto* e = get("schedule.T")) c.T = parse_double(e->value, e->line);
  if (auto* e = get("schedule.eta")) c.eta = parse_vector(e->value, e->line);
  if (auto* e = get("schedule.gamma")) c.gamma = parse_vector(e->value, e->line);
  if (auto* e = get("schedule.decay")) {
    c.decay = parse_double(e->value, e->line);
    if (c.decay < 0.0) throw ConfigError("decay must be >= 0", e->line);
  }
  if (auto* e = get("schedule.mixer")) {
    if (e->value == "kinetic") c.mixer = MixerKind::Kinetic;
    else if (e->value == "number") c.mixer = MixerKind::Number;
    else throw ConfigError("mixer must be kinetic or number", e->line);
  }
  if (!c.eta.empty() || !c.gamma.empty()) {
    const auto* e = get(!c.eta.empty() ? "schedule.eta" : "schedule.gamma");
    if (c.eta.size() != c.gamma.size()) throw ConfigError("eta and gamma must have the same length", e->line);
    if (get("schedule.steps") && c.steps != c.eta.size())
      throw ConfigError("steps does not match the length of eta/gamma", e->line);
    c.steps = c.eta.size();
  } else if (c.steps > 0 && !c.T && c.kind != ProblemKind::Grover) {
    throw ConfigError("[schedule] needs T or explicit eta/gamma vectors");
  }

  if (auto* e = get("sampling.n")) {
    c.samples = parse_unsigned(e->value, e->line);
    if (c.samples == 0) throw ConfigError("n must be at least 1", e->line);
  }
  if (auto* e = get("sampling.seed")) c.seed = parse_unsigned(e->value, e->line);
  if (auto* e = get("sampling.jitter")) c.jitter = parse_bool(e->value, e->line);
  if (auto* e = get("sampling.threshold")) c.threshold = parse_double(e->value, e->line);

  if (auto* e = get("guards.leakage_threshold")) c.guard.leakage_threshold = parse_double(e->value, e->line);
  if (auto* e = get("guards.band_fraction")) {
    c.guard.band_fraction = parse_double(e->value, e->line);
    if (!(c.guard.band_fraction > 0.0 && c.guard.band_fraction < 0.5))
      throw ConfigError("band_fraction must lie in (0, 0.5)", e->line);
  }
  if (auto* e = get("guards.occupancy")) c.guard.occupancy = parse_double(e->value, e->line);
  if (auto* e = get("guards.aliasing")) {
    if (e->value == "ignore") c.guard.aliasing = AliasingPolicy::Ignore;
    else if (e->value == "warn") c.guard.aliasing = AliasingPolicy::Warn;
    else if (e->value == "error") c.guard.aliasing = AliasingPolicy::Error;
    else throw ConfigError("aliasing must be ignore, warn or error", e->line);
  }

  if (auto* e = get("scan.T")) c.scan_T = parse_vector(e->value, e->line);

  if (auto* e = get("pubo.beta")) c.pubo.beta = parse_double(e->value, e->line);
  if (auto* e = get("pubo.omega")) c.pubo.omega = parse_double(e->value, e->line);
  if (auto* e = get("pubo.lambda")) c.pubo.lambda = parse_double(e->value, e->line);

  c.grover_target.assign(n, 0.0);
  c.grover_momentum.assign(n, 0.0);
  if (auto* e = get("grover.target")) c.grover_target = per_axis(parse_vector(e->value, e->line), n, "target", e->line);
  if (auto* e = get("grover.width")) {
    c.grover_width = parse_double(e->value, e->line);
    if (!(c.grover_width > 0.0)) throw ConfigError("width must be positive", e->line);
  }
  if (auto* e = get("grover.momentum")) c.grover_momentum = per_axis(parse_vector(e->value, e->line), n, "momentum", e->line);
  if (auto* e = get("grover.iterations")) c.grover_iterations = parse_unsigned(e->value, e->line);

  if (auto* e = get("output.dir")) c.output_dir = e->value;

  if (c.kind == ProblemKind::PolynomialFile || c.kind == ProblemKind::PuboFile) {
    const auto* e = get("problem.file");
    if (!e) throw ConfigError("problem kind " + std::string(to_string(c.kind)) + " needs [problem] file");
    c.problem_file = std::filesystem::path(e->value).is_absolute() ? std::filesystem::path(e->value)
                                                                   : base_dir / e->value;
    if (!std::filesystem::exists(c.problem_file))
      throw ConfigError("problem file '" + c.problem_file.string() + "' does not exist", e->line);
  }

  try {
    switch (c.kind) {
      case ProblemKind::StyblinskiTang: c.cost = styblinski_tang(n); break;
      case ProblemKind::PolynomialFile: c.cost = load_problem(c.problem_file, n); break;
      case ProblemKind::PuboFile:
        c.binary_terms = load_pubo(c.problem_file, n);
        c.cost = pubo_encode(n, c.binary_terms, c.pubo);
        break;
      case ProblemKind::Grover: break;
    }
  } catch (const InvalidArgument& err) {
    throw ConfigError(err.what());
  }

  for (const auto& [k, e] : entries) c.provenance.push_back(k + " = " + e.value);
  return c;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  auto in = open_lines(path, "config file");
  try {
    return parse_config(in, path.parent_path().empty() ? std::filesystem::path(".") : path.parent_path());
  } catch (const ConfigError& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

namespace {

Monomial parse_monomial(const std::vector<std::string>& fields, std::size_t dimension, std::size_t line) {
  if (fields.size() != dimension + 1)
    throw ConfigError("expected a coefficient and " + std::to_string(dimension) + " exponents", line);
  Monomial m;
  m.coefficient = parse_double(fields[0], line);
  for (std::size_t i = 1; i < fields.size(); ++i) {
    const auto e = parse_unsigned(fields[i], line);
    if (e > 64) throw ConfigError("exponent too large", line);
    m.exponents.push_back(static_cast<unsigned>(e));
  }
  return m;
}

std::map<std::string, double> parse_block_params(const std::vector<std::string>& fields, std::size_t line,
                                                 const std::set<std::string>& allowed) {
  std::map<std::string, double> out;
  for (std::size_t i = 1; i < fields.size(); ++i) {
    const auto eq = fields[i].find('=');
    if (eq == std::string::npos) throw ConfigError("expected name=value, got '" + fields[i] + "'", line);
    const auto name = fields[i].substr(0, eq);
    if (!allowed.count(name)) throw ConfigError("unknown parameter '" + name + "'", line);
    out[name] = parse_double(fields[i].substr(eq + 1), line);
  }
  return out;
}

} // namespace

CostSpec parse_problem(std::istream& in, std::size_t dimension) {
  std::vector<Term> terms;
  enum class Block { None, Equality, Inequality } block = Block::None;
  std::vector<Monomial> block_terms;
  std::map<std::string, double> block_params;
  std::size_t block_line = 0;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = strip_comment(raw);
    if (line.empty()) continue;
    const auto fields = split_fields(line);
    if (fields[0] == "equality" || fields[0] == "inequality") {
      if (block != Block::None) throw ConfigError("nested constraint block", line_no);
      block = fields[0] == "equality" ? Block::Equality : Block::Inequality;
      block_params = block == Block::Equality ? parse_block_params(fields, line_no, {"c", "lambda"})
                                              : parse_block_params(fields, line_no, {"d", "beta"});
      block_terms.clear();
      block_line = line_no;
      continue;
    }
    if (fields[0] == "end") {
      if (block == Block::None) throw ConfigError("'end' without a constraint block", line_no);
      if (block_terms.empty()) throw ConfigError("constraint block has no terms", line_no);
      Polynomial poly(dimension, block_terms);
      try {
        if (block == Block::Equality) {
          auto it = block_params.find("lambda");
          terms.push_back(equality_penalty(std::move(poly), block_params.count("c") ? block_params["c"] : 0.0,
                                           it == block_params.end() ? 10.0 : it->second));
        } else {
          auto it = block_params.find("beta");
          terms.push_back(inequality_penalty(std::move(poly), block_params.count("d") ? block_params["d"] : 0.0,
                                             it == block_params.end() ? 5.0 : it->second));
        }
      } catch (const InvalidArgument& e) {
        throw ConfigError(e.what(), block_line);
      }
      block = Block::None;
      continue;
    }
    auto m = parse_monomial(fields, dimension, line_no);
    if (block == Block::None) terms.emplace_back(std::move(m));
    else block_terms.push_back(std::move(m));
  }
  if (block != Block::None) throw ConfigError("constraint block is not closed with 'end'", block_line);
  if (terms.empty()) throw ConfigError("problem file has no terms");
  return CostSpec(dimension, std::move(terms));
}

CostSpec load_problem(const std::filesystem::path& path, std::size_t dimension) {
  auto in = open_lines(path, "problem file");
  try {
    return parse_problem(in, dimension);
  } catch (const ConfigError& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

namespace {

void write_monomial(std::ostream& out, const Monomial& m, const char* indent) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", m.coefficient);
  out << indent << buf;
  for (auto e : m.exponents) out << ' ' << e;
  out << '\n';
}

} // namespace

void write_problem(std::ostream& out, const CostSpec& cost) {
  char buf[128];
  for (const auto& term : cost.terms()) {
    if (const auto* m = std::get_if<Monomial>(&term)) {
      write_monomial(out, *m, "");
    } else if (const auto* eq = std::get_if<EqualityPenalty>(&term)) {
      std::snprintf(buf, sizeof buf, "equality c=%.17g lambda=%.17g\n", eq->c, eq->lambda);
      out << buf;
      for (const auto& t : eq->g.terms()) write_monomial(out, t, "  ");
      out << "end\n";
    } else if (const auto* iq = std::get_if<InequalityPenalty>(&term)) {
      std::snprintf(buf, sizeof buf, "inequality d=%.17g beta=%.17g\n", iq->d, iq->beta);
      out << buf;
      for (const auto& t : iq->h.terms()) write_monomial(out, t, "  ");
      out << "end\n";
    } else {
      throw InvalidArgument("term kind " + term_kind(term) + " has no problem-file form; use a PUBO file");
    }
  }
}

std::vector<BinaryTerm> parse_pubo(std::istream& in, std::size_t dimension) {
  std::vector<BinaryTerm> terms;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = strip_comment(raw);
    if (line.empty()) continue;
    const auto fields = split_fields(line);
    if (fields.size() != dimension + 1)
      throw ConfigError("expected alpha and " + std::to_string(dimension) + " bits", line_no);
    BinaryTerm t;
    t.alpha = parse_double(fields[0], line_no);
    for (std::size_t i = 1; i < fields.size(); ++i) {
      if (fields[i] != "0" && fields[i] != "1") throw ConfigError("bits must be 0 or 1", line_no);
      t.support.push_back(fields[i] == "1" ? 1 : 0);
    }
    terms.push_back(std::move(t));
  }
  if (terms.empty()) throw ConfigError("PUBO file has no terms");
  return terms;
}

std::vector<BinaryTerm> load_pubo(const std::filesystem::path& path, std::size_t dimension) {
  auto in = open_lines(path, "PUBO file");
  try {
    return parse_pubo(in, dimension);
  } catch (const ConfigError& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

} // namespace cvqaoa
