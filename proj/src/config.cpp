#include "ifns/config.hpp"

#include <array>
#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>

namespace ifns {

using nlohmann::json;

namespace {

constexpr std::array<std::string_view, 8> kTaskNames{"axioms",     "classify", "orbit",  "scan",
                                                     "diameter",   "regularity", "bounds", "set-afpp"};

// A section of the document plus its dotted path, so errors can name keys.
class Section {
 public:
  Section(const json* node, std::string path) : node_(node), path_(std::move(path)) {}

  bool present() const { return node_ != nullptr; }
  bool has(const std::string& key) const { return node_ && node_->contains(key); }
  std::string key(const std::string& k) const { return path_.empty() ? k : path_ + "." + k; }

  Section child(const std::string& k) const {
    if (!has(k)) return {nullptr, key(k)};
    const json& v = node_->at(k);
    if (!v.is_object()) throw SchemaError(key(k), "expected an object");
    return {&v, key(k)};
  }

  const json& at(const std::string& k) const { return node_->at(k); }

  void only(std::initializer_list<std::string_view> allowed) const {
    if (!node_) return;
    for (const auto& item : node_->items()) {
      bool ok = false;
      for (auto a : allowed) ok = ok || item.key() == a;
      if (!ok) throw SchemaError(key(item.key()), "unknown key");
    }
  }

  std::string string(const std::string& k) const {
    const json& v = at(k);
    if (!v.is_string()) throw SchemaError(key(k), "expected a string");
    return v.get<std::string>();
  }

  double number(const std::string& k) const {
    const json& v = at(k);
    if (!v.is_number()) throw SchemaError(key(k), "expected a number");
    const double d = v.get<double>();
    if (!std::isfinite(d)) throw SchemaError(key(k), "must be finite");
    return d;
  }

  std::size_t count(const std::string& k, std::size_t min) const {
    const json& v = at(k);
    if (!v.is_number_integer() || v.get<long long>() < static_cast<long long>(min)) {
      throw SchemaError(key(k), "expected an integer >= " + std::to_string(min));
    }
    return v.get<std::size_t>();
  }

  bool boolean(const std::string& k) const {
    const json& v = at(k);
    if (!v.is_boolean()) throw SchemaError(key(k), "expected true or false");
    return v.get<bool>();
  }

  std::uint64_t seed(const std::string& k) const {
    const json& v = at(k);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
      throw SchemaError(key(k), "expected a non-negative integer");
    }
    return v.get<std::uint64_t>();
  }

  const json& array(const std::string& k) const {
    const json& v = at(k);
    if (!v.is_array()) throw SchemaError(key(k), "expected an array");
    return v;
  }

 private:
  const json* node_;
  std::string path_;
};

template <class F>
auto named(const std::string& key, F&& make) {
  try {
    return make();
  } catch (const std::invalid_argument& e) {
    throw SchemaError(key, e.what());
  } catch (const std::domain_error& e) {
    throw SchemaError(key, e.what());
  }
}

void read_space(const Section& s, RunConfig& cfg, std::size_t& dimension) {
  s.only({"base_norm", "construction", "tnorm", "tconorm", "dimension"});
  BaseNorm base = BaseNorm::absolute;
  if (s.has("base_norm")) {
    const auto name = s.string("base_norm");
    base = named(s.key("base_norm"), [&] { return base_norm_from_name(name); });
  }
  if (s.has("construction") && s.string("construction") != "standard") {
    throw SchemaError(s.key("construction"), "only \"standard\" is supported");
  }
  if (s.has("dimension")) dimension = s.count("dimension", 1);
  if (base == BaseNorm::absolute && dimension != 1) {
    throw SchemaError(s.key("base_norm"), "\"absolute\" requires dimension 1");
  }
  cfg.space.pair = FuzzyNormPair::standard(base, dimension);
  if (s.has("tnorm")) {
    const auto name = s.string("tnorm");
    cfg.space.tnorm = named(s.key("tnorm"), [&] { return TriangularOp::from_name(name); });
    if (cfg.space.tnorm.kind() != OpKind::tnorm) throw SchemaError(s.key("tnorm"), name + " is not a t-norm");
  }
  if (s.has("tconorm")) {
    const auto name = s.string("tconorm");
    cfg.space.tconorm = named(s.key("tconorm"), [&] { return TriangularOp::from_name(name); });
    if (cfg.space.tconorm.kind() != OpKind::tconorm) {
      throw SchemaError(s.key("tconorm"), name + " is not a t-conorm");
    }
  }
}

Box read_domain(const Section& s, std::size_t dimension) {
  const json& list = s.array("domain");
  const std::string key = s.key("domain");
  if (list.size() != dimension) {
    throw SchemaError(key, "expected " + std::to_string(dimension) + " intervals, got " + std::to_string(list.size()));
  }
  std::vector<Interval> sides;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const json& side = list[i];
    const std::string k = key + "[" + std::to_string(i) + "]";
    if (!side.is_array() || side.size() < 2 || side.size() > 4 || !side[0].is_number() || !side[1].is_number()) {
      throw SchemaError(k, "expected [lo, hi, open_lo, open_hi]");
    }
    Interval iv;
    iv.lo = side[0].get<double>();
    iv.hi = side[1].get<double>();
    for (std::size_t b = 2; b < side.size(); ++b) {
      if (!side[b].is_boolean()) throw SchemaError(k, "open flags must be booleans");
    }
    iv.open_lo = side.size() > 2 && side[2].get<bool>();
    iv.open_hi = side.size() > 3 && side[3].get<bool>();
    sides.push_back(iv);
  }
  return named(key, [&] { return Box(std::move(sides)); });
}

void read_map(const Section& s, RunConfig& cfg, std::size_t dimension) {
  s.only({"exprs", "dimension", "domain"});
  if (!s.has("exprs")) throw SchemaError(s.key("exprs"), "required key is missing");
  const auto exprs = s.string("exprs");
  if (s.has("dimension")) {
    const auto d = s.count("dimension", 1);
    if (d != dimension) {
      throw SchemaError(s.key("dimension"), "disagrees with space.dimension (" + std::to_string(dimension) + ")");
    }
  }
  Box domain = s.has("domain") ? read_domain(s, dimension) : default_domain(dimension);
  try {
    cfg.map = parse_map(exprs, dimension, std::move(domain));
  } catch (const InputError& e) {
    throw SchemaError(s.key("exprs"), e.what());
  }
}

std::vector<Scale> read_scales(const Section& s, const std::string& k) {
  const json& list = s.array(k);
  if (list.empty()) throw SchemaError(s.key(k), "needs at least one scale");
  std::vector<Scale> out;
  for (const auto& v : list) {
    if (!v.is_number()) throw SchemaError(s.key(k), "scales must be numbers");
    out.push_back(named(s.key(k), [&] { return Scale(v.get<double>()); }));
  }
  return out;
}

void read_afp(const Section& s, RunConfig& cfg, std::size_t dimension) {
  s.only({"eps", "scales", "grid", "orbit_steps", "x0"});
  if (s.has("eps")) {
    cfg.afp.eps = s.number("eps");
    if (!(cfg.afp.eps > 0.0 && cfg.afp.eps < 1.0)) throw SchemaError(s.key("eps"), "must lie in (0,1)");
  }
  if (s.has("scales")) cfg.afp.scales = read_scales(s, "scales");
  if (s.has("grid")) cfg.afp.grid = s.count("grid", 2);
  if (s.has("orbit_steps")) cfg.afp.orbit_steps = s.count("orbit_steps", 1);
  if (s.has("x0")) {
    const json& v = s.at("x0");
    Vector x0(static_cast<Eigen::Index>(dimension));
    if (v.is_number() && dimension == 1) {
      x0(0) = v.get<double>();
    } else if (v.is_array() && v.size() == dimension) {
      for (std::size_t i = 0; i < dimension; ++i) {
        if (!v[i].is_number()) throw SchemaError(s.key("x0"), "coordinates must be numbers");
        x0(static_cast<Eigen::Index>(i)) = v[i].get<double>();
      }
    } else {
      throw SchemaError(s.key("x0"), "expected " + std::to_string(dimension) + " coordinate(s)");
    }
    cfg.afp.x0 = x0;
  }
}

void read_classify(const Section& s, RunConfig& cfg) {
  s.only({"kind", "params", "samples", "seed", "fit"});
  if (s.has("kind")) {
    const auto name = s.string("kind");
    cfg.classify.kind = named(s.key("kind"), [&] { return class_kind_from_name(name); });
  }
  const Section p = s.child("params");
  p.only({"a", "k", "c", "L"});
  if (p.has("a")) cfg.classify.a = p.number("a");
  if (p.has("k")) cfg.classify.k = p.number("k");
  if (p.has("c")) cfg.classify.c = p.number("c");
  if (p.has("L")) cfg.classify.L = p.number("L");
  if (s.has("samples")) cfg.classify.samples = s.count("samples", 1);
  if (s.has("seed")) cfg.seed = s.seed("seed");
  if (s.has("fit")) cfg.classify.fit = s.boolean("fit");
}

void read_bounds(const Section& s, RunConfig& cfg) {
  s.only({"kind", "a"});
  if (s.has("kind")) {
    const auto name = s.string("kind");
    cfg.bounds.kind = named(s.key("kind"), [&] { return class_kind_from_name(name); });
  }
  if (s.has("a")) cfg.bounds.a = s.number("a");
  const double a = cfg.bounds.a;
  switch (cfg.bounds.kind) {
    case ClassKind::contraction:
    case ClassKind::weak_contraction:
      if (!(a > 0.0 && a < 1.0)) throw SchemaError(s.key("a"), "must lie in (0,1)");
      break;
    case ClassKind::kannan:
    case ClassKind::chatterjea:
      if (!(a > 0.0 && a < 0.5)) throw SchemaError(s.key("a"), "must lie in (0,1/2)");
      break;
    default:
      throw SchemaError(s.key("kind"), "bounds exist for contraction, kannan, chatterjea, weak_contraction");
  }
}

void read_output(const Section& s, RunConfig& cfg) {
  s.only({"format", "path"});
  if (s.has("format")) {
    const auto f = s.string("format");
    if (f == "json") {
      cfg.output.format = OutputFormat::json;
    } else if (f == "csv") {
      cfg.output.format = OutputFormat::csv;
    } else {
      throw SchemaError(s.key("format"), "expected \"json\" or \"csv\"");
    }
  }
  if (s.has("path")) cfg.output.path = s.string("path");
}

}  // namespace

Task task_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kTaskNames.size(); ++i) {
    if (kTaskNames[i] == name) return static_cast<Task>(i);
  }
  throw InputError("unknown task \"" + std::string(name) + "\"");
}

std::string_view to_string(Task t) noexcept { return kTaskNames[static_cast<std::size_t>(t)]; }

ClassSpec class_spec(const RunConfig& cfg) {
  const auto& c = cfg.classify;
  return named("classify.params", [&] {
    switch (c.kind) {
      case ClassKind::contraction: return ClassSpec::contraction(c.a);
      case ClassKind::nonexpansive: return ClassSpec::nonexpansive();
      case ClassKind::kannan: return ClassSpec::kannan(c.a);
      case ClassKind::chatterjea: return ClassSpec::chatterjea(c.a);
      case ClassKind::zamfirescu: return ClassSpec::zamfirescu(c.a, c.k, c.c);
      case ClassKind::weak_contraction: return ClassSpec::weak_contraction(c.a, c.L);
    }
    return ClassSpec::nonexpansive();
  });
}

bool is_sampled(Task t) noexcept { return t == Task::axioms || t == Task::classify || t == Task::set_afpp; }

RunConfig parse_config(const json& doc, std::optional<Task> task, std::optional<std::uint64_t> seed) {
  if (!doc.is_object()) throw SchemaError("(root)", "config must be a JSON object");
  const Section root(&doc, "");
  root.only({"task", "seed", "space", "map", "afp", "classify", "axioms", "bounds", "diameter", "set_afpp", "output"});

  RunConfig cfg;
  cfg.echo = doc;
  if (task) {
    cfg.task = *task;
  } else if (root.has("task")) {
    const auto name = root.string("task");
    cfg.task = named("task", [&] { return task_from_name(name); });
  } else {
    throw SchemaError("task", "required key is missing");
  }
  if (root.has("seed")) cfg.seed = root.seed("seed");

  std::size_t dimension = 1;
  read_space(root.child("space"), cfg, dimension);

  const Section map = root.child("map");
  if (map.present()) read_map(map, cfg, dimension);
  read_afp(root.child("afp"), cfg, dimension);
  read_classify(root.child("classify"), cfg);

  const Section axioms = root.child("axioms");
  axioms.only({"samples", "scale_count"});
  if (axioms.has("samples")) cfg.axioms.samples = axioms.count("samples", 1);
  if (axioms.has("scale_count")) cfg.axioms.scale_count = axioms.count("scale_count", 2);

  const Section bounds = root.child("bounds");
  if (bounds.present()) read_bounds(bounds, cfg);

  const Section diameter = root.child("diameter");
  diameter.only({"grid"});
  if (diameter.has("grid")) cfg.diameter.grid = diameter.count("grid", 2);

  const Section set = root.child("set_afpp");
  set.only({"grids", "samples"});
  if (set.has("grids")) {
    const json& list = set.array("grids");
    if (list.empty()) throw SchemaError(set.key("grids"), "needs at least one grid resolution");
    cfg.set_afpp.grids.clear();
    for (const auto& g : list) {
      if (!g.is_number_integer() || g.get<long long>() < 2) {
        throw SchemaError(set.key("grids"), "grid resolutions must be integers >= 2");
      }
      cfg.set_afpp.grids.push_back(g.get<std::size_t>());
    }
  }
  if (set.has("samples")) cfg.set_afpp.samples = set.count("samples", 1);

  read_output(root.child("output"), cfg);

  if (seed) cfg.seed = seed;
  if (is_sampled(cfg.task) && !cfg.seed) {
    throw SchemaError("seed", "required for task \"" + std::string(to_string(cfg.task)) + "\"");
  }
  if (cfg.task != Task::axioms && !cfg.map) throw SchemaError("map.exprs", "required key is missing");
  if (cfg.task == Task::classify) class_spec(cfg);
  if (cfg.task == Task::bounds && !bounds.present()) throw SchemaError("bounds", "required section is missing");
  if ((cfg.task == Task::orbit || cfg.task == Task::regularity || cfg.task == Task::bounds) && !cfg.afp.x0) {
    throw SchemaError("afp.x0", "required for task \"" + std::string(to_string(cfg.task)) + "\"");
  }
  if (cfg.output.format == OutputFormat::csv && cfg.task != Task::scan) {
    throw SchemaError("output.format", "csv is only available for the scan task");
  }
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path, std::optional<Task> task, std::optional<std::uint64_t> seed) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open config " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();

  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, column = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw InputError(path.string() + ":" + std::to_string(line) + ":" + std::to_string(column) +
                     ": JSON parse error: " + e.what());
  }
  return parse_config(doc, task, seed);
}

}  // namespace ifns
