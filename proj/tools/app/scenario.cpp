#include "app/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

namespace yukawa::app {

using nlohmann::json;

namespace {

std::string compose(const std::string& message, const std::string& field, int line) {
  std::string out;
  if (line > 0) out += "line " + std::to_string(line) + ": ";
  if (!field.empty()) out += field + ": ";
  return out + message;
}

struct Context {
  std::string_view text;

  int line_of(std::size_t offset) const {
    offset = std::min(offset, text.size());
    return 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
  }

  /// Best-effort line of a JSON pointer: follows object keys in order through
  /// the text. Array indices do not advance the cursor.
  int locate(const std::string& pointer) const {
    if (text.empty() || pointer.empty()) return 0;
    std::size_t pos = 0;
    bool found = false;
    std::size_t start = 1;
    while (start <= pointer.size()) {
      const std::size_t end = std::min(pointer.find('/', start), pointer.size());
      const std::string seg = pointer.substr(start, end - start);
      start = end + 1;
      if (seg.empty() || std::all_of(seg.begin(), seg.end(), [](char c) { return c >= '0' && c <= '9'; })) continue;
      const std::size_t hit = text.find("\"" + seg + "\"", pos);
      if (hit == std::string_view::npos) break;
      pos = hit;
      found = true;
    }
    return found ? line_of(pos) : 0;
  }

  [[noreturn]] void fail(const std::string& pointer, const std::string& message) const {
    throw ConfigError(message, pointer, locate(pointer));
  }
};

// Context-free parsing helpers throw with line 0; parse_scenario fills in the line.
[[noreturn]] void bad(const std::string& pointer, const std::string& message) { throw ConfigError(message, pointer, 0); }

std::string type_name(const json& j) { return j.type_name(); }

double as_number(const json& j, const std::string& ptr) {
  if (!j.is_number()) bad(ptr, "expected a number, got " + type_name(j));
  const double v = j.get<double>();
  if (!std::isfinite(v)) bad(ptr, "expected a finite number");
  return v;
}

std::int64_t as_integer(const json& j, const std::string& ptr, std::int64_t lo, std::int64_t hi) {
  if (!j.is_number_integer() && !j.is_number_unsigned()) bad(ptr, "expected an integer, got " + type_name(j));
  const auto v = j.get<std::int64_t>();
  if (v < lo || v > hi) bad(ptr, "integer " + std::to_string(v) + " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return v;
}

Complex as_complex(const json& j, const std::string& ptr) {
  if (!j.is_array() || j.size() != 2) bad(ptr, "expected a complex number as [re, im]");
  return {as_number(j[0], ptr + "/0"), as_number(j[1], ptr + "/1")};
}

CVec as_complex_list(const json& j, const std::string& ptr) {
  if (!j.is_array()) bad(ptr, "expected an array of [re, im] pairs");
  CVec out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_complex(j[i], ptr + "/" + std::to_string(i)));
  return out;
}

std::vector<double> as_number_list(const json& j, const std::string& ptr, bool allow_scalar) {
  std::vector<double> out;
  if (allow_scalar && j.is_number()) {
    out.push_back(as_number(j, ptr));
    return out;
  }
  if (!j.is_array()) bad(ptr, "expected an array of numbers");
  if (j.empty()) bad(ptr, "must not be empty");
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_number(j[i], ptr + "/" + std::to_string(i)));
  return out;
}

const json& object(const json& j, const std::string& ptr) {
  if (!j.is_object()) bad(ptr, "expected an object, got " + type_name(j));
  return j;
}

void allow_keys(const json& j, const std::string& ptr, std::initializer_list<std::string_view> keys) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (std::find(keys.begin(), keys.end(), it.key()) == keys.end()) bad(ptr + "/" + it.key(), "unknown field");
  }
}

const json& required(const json& j, const std::string& ptr, const std::string& key) {
  if (!j.contains(key)) bad(ptr + "/" + key, "required field missing");
  return j.at(key);
}

std::vector<double> parse_grid(const json& j, const std::string& ptr) {
  if (j.is_object()) {
    allow_keys(j, ptr, {"start", "stop", "count"});
    const double a = as_number(required(j, ptr, "start"), ptr + "/start");
    const double b = as_number(required(j, ptr, "stop"), ptr + "/stop");
    const auto n = as_integer(required(j, ptr, "count"), ptr + "/count", 1, 100000);
    std::vector<double> out;
    for (std::int64_t i = 0; i < n; ++i) out.push_back(n == 1 ? a : a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1));
    return out;
  }
  return as_number_list(j, ptr, false);
}

void check_radii(const std::vector<double>& g, const std::string& ptr) {
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!(g[i] >= 0.0 && g[i] < 1.0)) bad(ptr + "/" + std::to_string(i), "radius must lie in [0, 1)");
  }
}

HarmonicPolynomial parse_harmonic(const json& j, int n, const std::string& ptr) {
  try {
    if (j.is_string()) return HarmonicPolynomial::catalogue(j.get<std::string>(), n);
    object(j, ptr);
    allow_keys(j, ptr, {"degree", "terms"});
    const int degree = static_cast<int>(as_integer(required(j, ptr, "degree"), ptr + "/degree", 0, 64));
    const json& terms = required(j, ptr, "terms");
    if (!terms.is_array() || terms.empty()) bad(ptr + "/terms", "expected a nonempty array of monomials");
    std::vector<Monomial> out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      const std::string tp = ptr + "/terms/" + std::to_string(i);
      object(terms[i], tp);
      allow_keys(terms[i], tp, {"coef", "powers"});
      Monomial m;
      m.coef = as_complex(required(terms[i], tp, "coef"), tp + "/coef");
      const json& pw = required(terms[i], tp, "powers");
      if (!pw.is_array()) bad(tp + "/powers", "expected an array of integers");
      for (std::size_t k = 0; k < pw.size(); ++k) {
        m.powers.push_back(static_cast<int>(as_integer(pw[k], tp + "/powers/" + std::to_string(k), 0, 64)));
      }
      out.push_back(std::move(m));
    }
    return HarmonicPolynomial(n, degree, std::move(out));
  } catch (const DomainError& e) {
    bad(ptr, e.what());
  }
}

}  // namespace

ConfigError::ConfigError(std::string message, std::string field, int line)
    : std::runtime_error(compose(message, field, line)), field_(std::move(field)), line_(line), detail_(std::move(message)) {}

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << v;
  return os.str();
}

Solution parse_solution(const json& j, const std::string& ptr) {
  object(j, ptr);
  if (j.contains("catalogue")) {
    allow_keys(j, ptr, {"catalogue"});
    const json& name = j.at("catalogue");
    if (!name.is_string()) bad(ptr + "/catalogue", "expected a string");
    try {
      return catalogue_solution(name.get<std::string>());
    } catch (const DomainError& e) {
      bad(ptr + "/catalogue", e.what());
    }
  }
  const json& fam = required(j, ptr, "family");
  if (!fam.is_string()) bad(ptr + "/family", "expected a string");
  const std::string family = fam.get<std::string>();
  try {
    if (family == "exponential") {
      allow_keys(j, ptr, {"family", "n", "a", "b"});
      const int n = static_cast<int>(as_integer(required(j, ptr, "n"), ptr + "/n", 1, 16));
      CVec a = as_complex_list(required(j, ptr, "a"), ptr + "/a");
      CVec b = as_complex_list(required(j, ptr, "b"), ptr + "/b");
      if (static_cast<int>(a.size()) != n) bad(ptr + "/a", "expected " + std::to_string(n) + " entries");
      if (static_cast<int>(b.size()) != n) bad(ptr + "/b", "expected " + std::to_string(n) + " entries");
      return make_exponential(n, std::move(a), std::move(b));
    }
    if (family == "separable") {
      allow_keys(j, ptr, {"family", "n", "lambda", "harmonic", "truncation"});
      const int n = static_cast<int>(as_integer(required(j, ptr, "n"), ptr + "/n", 1, 16));
      const double lambda = as_number(required(j, ptr, "lambda"), ptr + "/lambda");
      HarmonicPolynomial h = parse_harmonic(required(j, ptr, "harmonic"), n, ptr + "/harmonic");
      const int trunc = j.contains("truncation")
                            ? static_cast<int>(as_integer(j.at("truncation"), ptr + "/truncation", 1, 1000))
                            : kDefaultTruncation;
      return make_separable(n, std::move(h), lambda, trunc);
    }
    if (family == "planar_harmonic") {
      allow_keys(j, ptr, {"family", "n", "h", "g"});
      if (j.contains("n")) as_integer(j.at("n"), ptr + "/n", 1, 1);
      CVec h = j.contains("h") ? as_complex_list(j.at("h"), ptr + "/h") : CVec{};
      CVec g = j.contains("g") ? as_complex_list(j.at("g"), ptr + "/g") : CVec{};
      return make_planar_harmonic(std::move(h), std::move(g));
    }
  } catch (const DomainError& e) {
    bad(ptr, e.what());
  }
  bad(ptr + "/family", "unknown family '" + family + "' (expected exponential, separable or planar_harmonic)");
}

Majorant parse_majorant(const json& j, const std::string& ptr) {
  try {
    if (j.is_number()) return Majorant::power(as_number(j, ptr));
    object(j, ptr);
    allow_keys(j, ptr, {"kind", "alpha", "scale"});
    const json& kind = required(j, ptr, "kind");
    if (!kind.is_string()) bad(ptr + "/kind", "expected a string");
    const std::string k = kind.get<std::string>();
    if (k == "power") return Majorant::power(as_number(required(j, ptr, "alpha"), ptr + "/alpha"));
    if (k == "scaled_power") {
      return Majorant::scaled_power(as_number(required(j, ptr, "scale"), ptr + "/scale"),
                                    as_number(required(j, ptr, "alpha"), ptr + "/alpha"));
    }
    if (k == "log_damped") return Majorant::log_damped();
    bad(ptr + "/kind", "unknown majorant kind '" + k + "'");
  } catch (const DomainError& e) {
    bad(ptr, e.what());
  }
}

Scenario parse_scenario(std::string_view text, std::string name) {
  const Context ctx{text};
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const std::size_t at = e.byte > 0 ? e.byte - 1 : 0;
    std::string what = e.what();
    const auto cut = what.find("syntax error");
    throw ConfigError(cut == std::string::npos ? what : what.substr(cut), "", ctx.line_of(at));
  }

  Scenario s;
  s.name = std::move(name);
  s.source = root;
  s.hash = fnv1a(root.dump());
  try {
    object(root, "");
    allow_keys(root, "", {"name", "solution", "checks", "params", "quadrature", "grids", "tolerance"});
    if (root.contains("name")) {
      if (!root.at("name").is_string()) bad("/name", "expected a string");
      s.name = root.at("name").get<std::string>();
    }

    const json& sol = required(root, "", "solution");
    Solution f = parse_solution(sol);
    s.solution_label = sol.contains("catalogue") ? sol.at("catalogue").get<std::string>() : f.describe();

    if (root.contains("checks")) {
      const json& c = root.at("checks");
      if (c.is_string() && c.get<std::string>() == "all") {
        s.checks = check_ids();
      } else if (c.is_array()) {
        std::set<std::string> seen;
        for (std::size_t i = 0; i < c.size(); ++i) {
          const std::string ptr = "/checks/" + std::to_string(i);
          if (!c[i].is_string()) bad(ptr, "expected a check id string");
          const std::string id = c[i].get<std::string>();
          if (!is_check_id(id)) bad(ptr, "unknown check id '" + id + "'");
          if (!seen.insert(id).second) bad(ptr, "duplicate check id '" + id + "'");
          s.checks.push_back(id);
        }
      } else {
        bad("/checks", "expected an array of check ids or \"all\"");
      }
    }

    if (root.contains("params")) {
      const json& p = object(root.at("params"), "/params");
      allow_keys(p, "/params", {"p", "beta", "lambda", "majorants", "lambda_grid"});
      if (p.contains("p")) s.params.p = as_number_list(p.at("p"), "/params/p", true);
      if (p.contains("beta")) s.params.beta = as_number_list(p.at("beta"), "/params/beta", true);
      if (p.contains("lambda_grid")) s.params.lambda_grid = parse_grid(p.at("lambda_grid"), "/params/lambda_grid");
      if (p.contains("majorants")) {
        const json& m = p.at("majorants");
        if (!m.is_array() || m.empty()) bad("/params/majorants", "expected a nonempty array");
        std::vector<Majorant> ws;
        for (std::size_t i = 0; i < m.size(); ++i) ws.push_back(parse_majorant(m[i], "/params/majorants/" + std::to_string(i)));
        s.params.majorants = std::move(ws);
      }
      if (p.contains("lambda")) {
        const double lam = as_number(p.at("lambda"), "/params/lambda");
        try {
          f = with_lambda(f, lam);
        } catch (const DomainError& e) {
          bad("/params/lambda", e.what());
        }
      }
    }
    s.solution = std::move(f);

    if (root.contains("quadrature")) {
      const json& q = object(root.at("quadrature"), "/quadrature");
      allow_keys(q, "/quadrature", {"sphere_order", "radial_order", "energy_radial_order", "oscillation_sphere_order",
                                    "oscillation_radial_order", "mc_samples", "seed", "auto_double"});
      auto order = [&](const char* key, int& slot, int lo) {
        if (q.contains(key)) slot = static_cast<int>(as_integer(q.at(key), std::string("/quadrature/") + key, lo, 1 << 20));
      };
      order("sphere_order", s.options.sphere_order, 1);
      order("radial_order", s.options.radial_order, 2);
      order("energy_radial_order", s.options.energy_radial_order, 8);
      order("oscillation_sphere_order", s.options.oscillation_sphere_order, 1);
      order("oscillation_radial_order", s.options.oscillation_radial_order, 2);
      order("mc_samples", s.options.mc_samples, 1);
      if (q.contains("seed")) {
        const json& seed = q.at("seed");
        if (!seed.is_number_unsigned() && !(seed.is_number_integer() && seed.get<std::int64_t>() >= 0)) {
          bad("/quadrature/seed", "expected a nonnegative integer");
        }
        s.options.seed = seed.get<std::uint64_t>();
        s.seed_given = true;
      }
      if (q.contains("auto_double")) {
        if (!q.at("auto_double").is_boolean()) bad("/quadrature/auto_double", "expected a boolean");
        s.options.auto_double = q.at("auto_double").get<bool>();
      }
    }

    if (root.contains("grids")) {
      const json& g = object(root.at("grids"), "/grids");
      allow_keys(g, "/grids", {"r_grid", "z_samples", "ball_samples", "mean_r_grid"});
      if (g.contains("r_grid")) {
        s.params.r_grid = parse_grid(g.at("r_grid"), "/grids/r_grid");
        check_radii(*s.params.r_grid, "/grids/r_grid");
      }
      if (g.contains("mean_r_grid")) {
        s.mean_r_grid = parse_grid(g.at("mean_r_grid"), "/grids/mean_r_grid");
        check_radii(*s.mean_r_grid, "/grids/mean_r_grid");
      }
      if (g.contains("z_samples")) s.params.z_samples = static_cast<std::size_t>(as_integer(g.at("z_samples"), "/grids/z_samples", 1, 10000000));
      if (g.contains("ball_samples")) {
        s.params.ball_samples = static_cast<std::size_t>(as_integer(g.at("ball_samples"), "/grids/ball_samples", 1, 10000000));
      }
    }

    if (root.contains("tolerance")) {
      const json& t = object(root.at("tolerance"), "/tolerance");
      allow_keys(t, "/tolerance", {"abs", "rel"});
      const double a = as_number(required(t, "/tolerance", "abs"), "/tolerance/abs");
      const double r = as_number(required(t, "/tolerance", "rel"), "/tolerance/rel");
      if (a < 0.0 || r < 0.0) bad("/tolerance", "tolerances must be nonnegative");
      s.options.tolerance = Tolerance{a, r};
    }
  } catch (const ConfigError& e) {
    if (e.line() > 0 || e.field().empty()) throw;
    throw ConfigError(e.detail(), e.field(), ctx.locate(e.field()));
  }
  return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open scenario file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str(), path.stem().string());
}

bool needs_seed(const Scenario& s) {
  static const std::set<std::string, std::less<>> sampled{
      "residual", "monotone_subharmonic", "lipschitz_mean", "gradient_from_means",
      "bmo",      "gradient_decay",       "power_inequality",
  };
  const bool monte_carlo = s.solution && default_sphere_method(s.solution->dim()) == SphereMethod::monte_carlo;
  for (const auto& id : s.checks) {
    if (sampled.count(id)) return true;
    if (monte_carlo && id != "majorant_regularity") return true;
  }
  return false;
}

std::vector<double> parse_range(std::string_view spec) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = spec.find(':', start);
    parts.emplace_back(spec.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  if (parts.size() != 3) throw ConfigError("expected start:stop:count, got '" + std::string(spec) + "'");
  double a = 0.0, b = 0.0;
  long n = 0;
  try {
    std::size_t used = 0;
    a = std::stod(parts[0], &used);
    if (used != parts[0].size()) throw std::invalid_argument("start");
    b = std::stod(parts[1], &used);
    if (used != parts[1].size()) throw std::invalid_argument("stop");
    n = std::stol(parts[2], &used);
    if (used != parts[2].size() || n < 1) throw std::invalid_argument("count");
  } catch (const std::exception&) {
    throw ConfigError("malformed range '" + std::string(spec) + "'");
  }
  std::vector<double> out;
  for (long i = 0; i < n; ++i) out.push_back(n == 1 ? a : a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1));
  return out;
}

}  // namespace yukawa::app
