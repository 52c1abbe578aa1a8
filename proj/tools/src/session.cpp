#include "frobkit_cli/session.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <variant>

#include <json.hpp>

#include "frobkit/koszul.hpp"
#include "frobkit/parse.hpp"
#include "frobkit/solutions.hpp"
#include "frobkit/verify/battery.hpp"

namespace frobkit::cli {

namespace {

using json = nlohmann::ordered_json;

// Problems found while loading the session; they abort before any command.
struct InputError : std::runtime_error {
  InputError(std::string k, const std::string& what, std::string obj = {})
      : std::runtime_error(what), kind(std::move(k)), object(std::move(obj)) {}
  std::string kind;
  std::string object;
  std::size_t line = 0;
  std::size_t column = 0;
};

std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

using Object = std::variant<CartierModule, GammaSheaf, ClosedImmersion>;

const char* kind_name(const Object& o) {
  switch (o.index()) {
    case 0: return "module";
    case 1: return "gamma";
    default: return "immersion";
  }
}

struct Env {
  const std::string* source = nullptr;
  FieldPtr field;
  std::string gen = "t";
  RingPtr ring;
  QuotientContext ctx;
  Budget budget;
  std::map<std::string, Object> objects;

  // Points a polynomial parse error at the offending character of the file.
  [[noreturn]] void fail_parse(const ParseError& e, const std::string& literal, const std::string& object) const {
    InputError err("parse_error", e.what(), object);
    const std::size_t at = source->find("\"" + literal + "\"");
    if (at != std::string::npos) {
      std::tie(err.line, err.column) = line_column(*source, at + 1);
      if (e.column()) err.column += e.column() - 1;
    } else {
      err.column = e.column();
    }
    throw err;
  }

  Polynomial poly(const std::string& text, const std::string& object) const {
    try {
      return parse_polynomial(ring, text, gen);
    } catch (const ParseError& e) {
      fail_parse(e, text, object);
    }
  }
  FreeVector vec(std::size_t rank, const std::string& text, const std::string& object) const {
    try {
      return parse_vector(ring, rank, text, gen);
    } catch (const ParseError& e) {
      fail_parse(e, text, object);
    } catch (const RankMismatch& e) {
      throw InputError("rank_mismatch", std::string(e.what()) + " in \"" + text + "\"", object);
    }
  }

  std::string str(const Polynomial& f) const { return f.to_string(gen); }
  std::string str(const FreeVector& v) const { return v.to_string(gen); }
};

// --- schema helpers ---------------------------------------------------------

const json& member(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw InputError("schema_error", where + ": missing \"" + key + "\"", where);
  return j.at(key);
}

std::string as_string(const json& j, const std::string& where) {
  if (!j.is_string()) throw InputError("schema_error", where + ": expected a string", where);
  return j.get<std::string>();
}

std::uint64_t as_uint(const json& j, const std::string& where) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
    throw InputError("schema_error", where + ": expected a nonnegative integer", where);
  return j.get<std::uint64_t>();
}

std::vector<std::string> string_list(const json& j, const std::string& where) {
  if (!j.is_array()) throw InputError("schema_error", where + ": expected an array of strings", where);
  std::vector<std::string> out;
  for (const auto& e : j) out.push_back(as_string(e, where));
  return out;
}

// --- loading ----------------------------------------------------------------

void load_field(Env& env, const json& j) {
  FieldSpec spec;
  spec.p = static_cast<std::uint32_t>(as_uint(member(j, "p", "field"), "field.p"));
  if (j.contains("e")) spec.e = static_cast<std::uint32_t>(as_uint(j["e"], "field.e"));
  if (j.contains("modulus")) {
    if (!j["modulus"].is_array()) throw InputError("schema_error", "field.modulus: expected an array", "field");
    for (const auto& c : j["modulus"]) spec.modulus.push_back(static_cast<std::uint32_t>(as_uint(c, "field.modulus")));
  }
  if (j.contains("gen")) env.gen = as_string(j["gen"], "field.gen");
  try {
    env.field = spec.e > 1 && spec.modulus.empty() ? Field::extension(spec.p, spec.e) : Field::create(spec);
  } catch (const Error& e) {
    throw InputError(e.kind(), e.what(), "field");
  }
}

void load_ring(Env& env, const json& j) {
  const auto vars = string_list(member(j, "vars", "ring"), "ring.vars");
  MonomialOrder order = MonomialOrder::GRevLex;
  if (j.contains("order")) {
    const std::string o = as_string(j["order"], "ring.order");
    if (o == "lex") {
      order = MonomialOrder::Lex;
    } else if (o != "grevlex") {
      throw InputError("schema_error", "ring.order must be \"grevlex\" or \"lex\"", "ring");
    }
  }
  try {
    env.ring = Ring::create(env.field, vars, order);
  } catch (const Error& e) {
    throw InputError(e.kind(), e.what(), "ring");
  }
}

QuotientContext load_context(const Env& env, const json& gens, const std::string& where) {
  std::vector<Polynomial> polys;
  for (const auto& s : string_list(gens, where + ".ideal")) polys.push_back(env.poly(s, where));
  if (polys.empty()) return QuotientContext::ambient(env.ring);
  return QuotientContext::create(env.ring, std::move(polys), env.budget);
}

// "j,a_1 a_2 ... a_n"
std::pair<std::uint32_t, Monomial> kappa_key(const Env& env, const std::string& key, const std::string& name) {
  const auto comma = key.find(',');
  std::istringstream js(key.substr(0, comma));
  std::uint32_t j = 0;
  Monomial a;
  bool ok = static_cast<bool>(js >> j);
  if (comma != std::string::npos) {
    std::istringstream as(key.substr(comma + 1));
    std::size_t i = 0;
    for (std::uint32_t e; as >> e; ++i) {
      if (i >= env.ring->nvars()) {
        ok = false;
        break;
      }
      a[i] = e;
    }
    ok = ok && as.eof() && i == env.ring->nvars();
  } else {
    ok = ok && env.ring->nvars() == 0;
  }
  if (!ok) throw InputError("schema_error", name + ": bad kappa key \"" + key + "\" (expected \"j,a_1 ... a_n\")", name);
  return {j, a};
}

Object load_object(const Env& env, const std::string& name, const json& j) {
  const std::string type = as_string(member(j, "type", name), name + ".type");
  const std::string kind = j.contains("kind") ? as_string(j["kind"], name + ".kind") : "table";
  const QuotientContext ctx = j.contains("ideal") ? load_context(env, j["ideal"], name) : env.ctx;
  auto relations = [&](std::size_t rank) {
    std::vector<FreeVector> out;
    if (j.contains("relations")) {
      for (const auto& s : string_list(j["relations"], name + ".relations")) out.push_back(env.vec(rank, s, name));
    }
    return out;
  };
  if (type == "module") {
    if (kind == "omega") return CartierModule::omega(env.ring);
    if (kind == "matrix") {
      const json& rows = member(j, "matrix", name);
      if (!rows.is_array() || rows.empty()) throw InputError("schema_error", name + ".matrix: expected rows", name);
      Matrix u(rows.size(), rows.size());
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (!rows[r].is_array() || rows[r].size() != rows.size())
          throw InputError("schema_error", name + ".matrix must be square", name);
        for (std::size_t c = 0; c < rows.size(); ++c) {
          const std::uint64_t code = as_uint(rows[r][c], name + ".matrix");
          if (code >= env.field->order()) throw InputError("schema_error", name + ".matrix: entry out of range", name);
          u.at(r, c) = env.field->element(code);
        }
      }
      return CartierModule::from_matrix(env.ring, u);
    }
    if (kind != "table") throw InputError("schema_error", name + ": unknown module kind \"" + kind + "\"", name);
    const std::size_t rank = as_uint(member(j, "rank", name), name + ".rank");
    std::vector<KappaEntry> entries;
    if (j.contains("kappa")) {
      if (!j["kappa"].is_object()) throw InputError("schema_error", name + ".kappa: expected an object", name);
      for (const auto& [key, value] : j["kappa"].items()) {
        const auto [col, a] = kappa_key(env, key, name);
        if (col >= rank) throw InputError("schema_error", name + ": kappa key \"" + key + "\" exceeds the rank", name);
        entries.push_back({col, a, env.vec(rank, as_string(value, name + ".kappa"), name)});
      }
    }
    CartierModule m = CartierModule::create(ctx, rank, relations(rank), entries, env.budget);
    const ValidationReport report = validate_cartier_structure(m);
    if (!report.ok) {
      throw InputError("validation_error",
                       name + ": kappa does not respect the relations (" +
                           std::to_string(report.violations.size()) + " violations)",
                       name);
    }
    return m;
  }
  if (type == "gamma") {
    if (kind == "unit") return GammaSheaf::unit(ctx);
    if (kind != "table") throw InputError("schema_error", name + ": unknown gamma kind \"" + kind + "\"", name);
    const std::size_t rank = as_uint(member(j, "rank", name), name + ".rank");
    const json& rows = member(j, "matrix", name);
    if (!rows.is_array() || rows.size() != rank)
      throw InputError("schema_error", name + ".matrix must have rank rows", name);
    PolyMatrix a(env.ring, rank, rank);
    for (std::size_t r = 0; r < rank; ++r) {
      const auto row = string_list(rows[r], name + ".matrix");
      if (row.size() != rank) throw InputError("schema_error", name + ".matrix must be square", name);
      for (std::size_t c = 0; c < rank; ++c) a.at(r, c) = env.poly(row[c], name);
    }
    try {
      return GammaSheaf::create(ctx, rank, relations(rank), a, env.budget);
    } catch (const InvalidArgument& e) {
      throw InputError("validation_error", name + ": " + e.what(), name);
    }
  }
  if (type == "immersion") {
    std::vector<Polynomial> seq;
    for (const auto& s : string_list(member(j, "sequence", name), name + ".sequence")) seq.push_back(env.poly(s, name));
    try {
      return ClosedImmersion::create(ctx, std::move(seq), env.budget);
    } catch (const InvalidArgument& e) {
      throw InputError("validation_error", name + ": " + e.what(), name);
    }
  }
  throw InputError("schema_error", name + ": unknown object type \"" + type + "\"", name);
}

// --- commands ---------------------------------------------------------------

struct Args {
  std::vector<std::string> pos;
  std::map<std::string, std::string> flags;
  std::set<std::string> switches;
  std::string as;

  const std::string* flag(const std::string& k) const {
    const auto it = flags.find(k);
    return it == flags.end() ? nullptr : &it->second;
  }
};

const std::set<std::string> kSwitches{"--all-points", "--quick"};

Args split_args(const std::vector<std::string>& raw) {
  Args a;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const std::string& t = raw[i];
    if (t.rfind("--", 0) != 0) {
      a.pos.push_back(t);
    } else if (kSwitches.count(t)) {
      a.switches.insert(t);
    } else {
      if (i + 1 >= raw.size()) throw InvalidArgument("flag " + t + " needs a value");
      if (t == "--as") {
        a.as = raw[++i];
      } else {
        a.flags[t] = raw[++i];
      }
    }
  }
  return a;
}

struct OpSpec {
  std::size_t refs;       // leading positional arguments naming objects
  std::size_t min_pos;
  std::size_t max_pos;    // SIZE_MAX: unbounded
};

const std::map<std::string, OpSpec>& op_table() {
  static const std::map<std::string, OpSpec> t{
      {"gb", {0, 1, 1}},            {"validate", {1, 1, 1}},     {"nilpotent", {1, 1, 1}},
      {"crystal-zero", {1, 1, 1}},  {"supported-on", {1, 2, SIZE_MAX}},
      {"twist-to-cartier", {1, 1, 1}}, {"twist-to-gamma", {1, 1, 1}}, {"pullback", {2, 2, 2}},
      {"dualizing", {1, 1, 1}},     {"transition", {2, 2, 2}},   {"check-2-14", {2, 2, 2}},
      {"gen-dim", {1, 1, 1}},       {"solutions", {1, 1, 1}},    {"as-kernel", {0, 1, 1}},
      {"verify-suite", {0, 0, 0}},
  };
  return t;
}

std::uint64_t parse_uint(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  std::uint64_t v = 0;
  try {
    v = std::stoull(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw InvalidArgument(what + " must be a nonnegative integer, got \"" + s + "\"");
  return v;
}

json monomial_json(const Env& env, const Monomial& a) {
  json out = json::array();
  for (std::size_t i = 0; i < env.ring->nvars(); ++i) out.push_back(a[i]);
  return out;
}

std::string kappa_key_text(const Env& env, std::uint32_t j, const Monomial& a) {
  std::string s = std::to_string(j) + ",";
  for (std::size_t i = 0; i < env.ring->nvars(); ++i) s += (i ? " " : "") + std::to_string(a[i]);
  return s;
}

json basis_json(const Env& env, const GroebnerBasis& gb) {
  json out = json::array();
  for (const auto& v : gb.vectors()) out.push_back(env.str(v));
  return out;
}

json module_json(const Env& env, const CartierModule& m) {
  json out;
  out["rank"] = m.rank();
  out["relations"] = basis_json(env, m.relations());
  json kappa = json::object();
  for (const auto& e : m.entries()) kappa[kappa_key_text(env, e.j, e.a)] = env.str(e.value);
  out["kappa"] = kappa;
  return out;
}

json poly_matrix_json(const Env& env, const PolyMatrix& a) {
  json rows = json::array();
  for (std::size_t r = 0; r < a.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < a.cols(); ++c) row.push_back(env.str(a.at(r, c)));
    rows.push_back(row);
  }
  return rows;
}

json gamma_json(const Env& env, const GammaSheaf& n) {
  json out;
  out["rank"] = n.rank();
  out["relations"] = basis_json(env, n.relations());
  out["matrix"] = poly_matrix_json(env, n.matrix());
  return out;
}

json element_list(const Env& env, const Field& L, const std::vector<FieldElement>& v) {
  json out = json::array();
  for (auto x : v) out.push_back(L.to_string(x, env.gen));
  return out;
}

class Runner {
 public:
  explicit Runner(Env& env) : env_(env) {}

  json run(const std::string& op, const Args& a) {
    result_.reset();
    const auto& handlers = table();
    return handlers.at(op)(a);
  }
  // Object produced by the last command, stored under --as.
  std::optional<Object> result_;

 private:
  using Handler = std::function<json(const Args&)>;

  const Object& get(const std::string& name) const {
    const auto it = env_.objects.find(name);
    if (it == env_.objects.end()) throw InvalidArgument("unknown object \"" + name + "\"");
    return it->second;
  }
  template <class T>
  const T& get_as(const std::string& name, const char* expected) const {
    const Object& o = get(name);
    if (const T* p = std::get_if<T>(&o)) return *p;
    throw InvalidArgument("\"" + name + "\" is a " + kind_name(o) + ", expected " + expected);
  }
  // Cartier modules directly; gamma-sheaves through the twist.
  CartierModule cartier_of(const std::string& name) const {
    const Object& o = get(name);
    if (const auto* m = std::get_if<CartierModule>(&o)) return *m;
    if (const auto* n = std::get_if<GammaSheaf>(&o))
      return twist_to_cartier(*n, n->context().generators, env_.budget);
    throw InvalidArgument("\"" + name + "\" is an immersion, expected a module or gamma-sheaf");
  }

  static json verdict_json(const NilpotenceResult& r) {
    json out;
    out["verdict"] = to_string(r.verdict);
    out["index"] = r.index;
    return out;
  }

  json op_gb(const Args& a) {
    const std::string& what = a.pos[0];
    json out;
    if (what == "ideal") {
      json list = json::array();
      for (const auto& f : env_.ctx.ideal.polynomials()) list.push_back(env_.str(f));
      out["rank"] = 1;
      out["basis"] = list;
      return out;
    }
    const Object& o = get(what);
    if (const auto* m = std::get_if<CartierModule>(&o)) {
      out["rank"] = m->rank();
      out["basis"] = basis_json(env_, m->relations());
    } else if (const auto* n = std::get_if<GammaSheaf>(&o)) {
      out["rank"] = n->rank();
      out["basis"] = basis_json(env_, n->relations());
    } else {
      const auto& im = std::get<ClosedImmersion>(o);
      json list = json::array();
      for (const auto& f : im.target().ideal.polynomials()) list.push_back(env_.str(f));
      out["rank"] = 1;
      out["basis"] = list;
    }
    return out;
  }

  json op_validate(const Args& a) {
    const Object& o = get(a.pos[0]);
    json out;
    json violations = json::array();
    if (const auto* m = std::get_if<CartierModule>(&o)) {
      const ValidationReport r = validate_cartier_structure(*m);
      for (const auto& v : r.violations) {
        json item;
        item["relation"] = v.relation;
        item["a"] = monomial_json(env_, v.a);
        item["residue"] = env_.str(v.residue);
        violations.push_back(item);
      }
      out["ok"] = r.ok;
    } else if (const auto* n = std::get_if<GammaSheaf>(&o)) {
      const auto cols = gamma_violations(n->context(), n->relations(), n->matrix(), env_.budget);
      for (auto c : cols) violations.push_back(c);
      out["ok"] = cols.empty();
    } else {
      const auto& im = std::get<ClosedImmersion>(o);
      out["ok"] = is_regular_sequence(im.sequence(), im.ambient(), env_.budget);
    }
    out["violations"] = violations;
    return out;
  }

  json op_nilpotent(const Args& a) {
    const Object& o = get(a.pos[0]);
    if (const auto* n = std::get_if<GammaSheaf>(&o)) {
      std::uint32_t e_max = 8;
      if (const auto* f = a.flag("--e-max")) {
        e_max = static_cast<std::uint32_t>(parse_uint(*f, "--e-max"));
      } else if (const auto stairs = n->relations().staircase()) {
        e_max = static_cast<std::uint32_t>(std::max<std::size_t>(stairs->size(), 1));
      }
      return verdict_json(gamma_is_nilpotent(*n, e_max, env_.budget));
    }
    return verdict_json(is_nilpotent(cartier_of(a.pos[0]), env_.budget));
  }

  json op_crystal_zero(const Args& a) {
    const NilpotenceResult r = crystal_is_zero(cartier_of(a.pos[0]), env_.budget);
    json out;
    out["zero"] = r.verdict == NilVerdict::Nilpotent;
    out.update(verdict_json(r));
    return out;
  }

  json op_supported_on(const Args& a) {
    std::vector<Polynomial> j;
    for (std::size_t i = 1; i < a.pos.size(); ++i) j.push_back(parse_polynomial(env_.ring, a.pos[i], env_.gen));
    json out;
    out["supported"] = is_crystal_supported_on(cartier_of(a.pos[0]), j, env_.budget);
    return out;
  }

  json op_twist_to_cartier(const Args& a) {
    const auto& n = get_as<GammaSheaf>(a.pos[0], "a gamma-sheaf");
    CartierModule m = twist_to_cartier(n, n.context().generators, env_.budget);
    json out = module_json(env_, m);
    result_ = std::move(m);
    return out;
  }

  json op_twist_to_gamma(const Args& a) {
    GammaSheaf n = twist_to_gamma(get_as<CartierModule>(a.pos[0], "a Cartier module"), env_.budget);
    json out = gamma_json(env_, n);
    result_ = std::move(n);
    return out;
  }

  json op_pullback(const Args& a) {
    const auto& im = get_as<ClosedImmersion>(a.pos[1], "an immersion");
    const Object& o = get(a.pos[0]);
    if (const auto* n = std::get_if<GammaSheaf>(&o)) {
      GammaSheaf g = gamma_pullback(*n, im, env_.budget);
      json out = gamma_json(env_, g);
      result_ = std::move(g);
      return out;
    }
    CartierModule m = cartier_pullback(get_as<CartierModule>(a.pos[0], "a module or gamma-sheaf"), im, env_.budget);
    json out = module_json(env_, m);
    result_ = std::move(m);
    return out;
  }

  json op_dualizing(const Args& a) {
    CartierModule m = dualizing_module(get_as<ClosedImmersion>(a.pos[0], "an immersion"), env_.budget);
    json out = module_json(env_, m);
    result_ = std::move(m);
    return out;
  }

  json op_transition(const Args& a) {
    const auto& f = get_as<ClosedImmersion>(a.pos[0], "an immersion");
    const auto& g = get_as<ClosedImmersion>(a.pos[1], "an immersion");
    const TransitionMatrix t = transition_factor(f.sequence(), g.sequence(), f.ambient(), env_.budget);
    json out;
    out["matrix"] = poly_matrix_json(env_, t.c);
    out["det"] = env_.str(t.det);
    return out;
  }

  json op_check(const Args& a) {
    const auto& n = get_as<GammaSheaf>(a.pos[0], "a gamma-sheaf");
    const auto& im = get_as<ClosedImmersion>(a.pos[1], "an immersion");
    const CommutationReport r = check_pullback_commutation(n, im, env_.budget);
    json out;
    out["equal"] = r.equal;
    json list = json::array();
    for (std::size_t i = 0; i < r.discrepancies.size() && i < 16; ++i) {
      const auto& d = r.discrepancies[i];
      json item;
      item["j"] = d.j;
      item["a"] = monomial_json(env_, d.a);
      item["pullback_of_twist"] = env_.str(d.pullback_of_twist);
      item["twist_of_pullback"] = env_.str(d.twist_of_pullback);
      list.push_back(item);
    }
    out["discrepancies"] = list;
    return out;
  }

  json op_gen_dim(const Args& a) {
    json out;
    out["dim"] = gen_stable_dimension(get_as<GammaSheaf>(a.pos[0], "a gamma-sheaf"), env_.budget);
    return out;
  }

  json point_record(const GammaSheaf& root, const RationalPoint& pt) const {
    const SolutionSpace sol = solutions_at_point(root, pt);
    json out;
    out["point"] = element_list(env_, *pt.field, pt.coords);
    out["m"] = pt.m;
    out["dim"] = sol.dim;
    json basis = json::array();
    for (const auto& b : sol.basis) basis.push_back(element_list(env_, *pt.field, b));
    out["basis"] = basis;
    return out;
  }

  json op_solutions(const Args& a) {
    const auto& root = get_as<GammaSheaf>(a.pos[0], "a gamma-sheaf");
    std::uint32_t m = 1;
    if (const auto* f = a.flag("--m")) m = static_cast<std::uint32_t>(parse_uint(*f, "--m"));
    if (m == 0) throw InvalidArgument("--m must be positive");
    if (const auto* p = a.flag("--point")) {
      if (a.switches.count("--all-points")) throw InvalidArgument("--point and --all-points are exclusive");
      const FieldPtr L = point_field(env_.ring->field(), m);
      RationalPoint pt{m, L, {}};
      std::istringstream coords(*p);
      for (std::string c; std::getline(coords, c, ',');) {
        const std::uint64_t code = parse_uint(c, "point coordinate");
        if (code >= L->order()) throw InvalidArgument("point coordinate " + c + " outside the point field");
        pt.coords.push_back(L->element(code));
      }
      if (pt.coords.size() != env_.ring->nvars()) throw InvalidArgument("--point needs one coordinate per variable");
      return point_record(root, pt);
    }
    json points = json::array();
    for (const auto& pt : enumerate_points(root.context(), m, env_.budget)) points.push_back(point_record(root, pt));
    json out;
    out["m"] = m;
    out["count"] = points.size();
    out["points"] = points;
    return out;
  }

  json op_as_kernel(const Args& a) {
    const std::uint64_t q = parse_uint(a.pos[0], "q");
    json out;
    out["q"] = q;
    out["dim"] = artin_schreier_kernel(q, env_.budget);
    return out;
  }

  json op_verify(const Args& a) {
    verify::BatteryOptions opt;
    if (const auto* s = a.flag("--seed")) opt.seed = parse_uint(*s, "--seed");
    opt.quick = a.switches.count("--quick") > 0;
    return battery_json(verify::run_battery(opt));
  }

 public:
  static json battery_json(const std::vector<verify::CheckResult>& results) {
    json out;
    std::size_t passed = 0;
    json checks = json::array();
    for (const auto& r : results) {
      passed += r.passed;
      json item;
      item["id"] = r.id;
      item["name"] = r.name;
      item["passed"] = r.passed;
      item["detail"] = r.detail;
      checks.push_back(item);
    }
    out["passed"] = passed;
    out["failed"] = results.size() - passed;
    out["checks"] = checks;
    return out;
  }

 private:
  const std::map<std::string, Handler>& table() {
    if (handlers_.empty()) {
      auto bind = [this](json (Runner::*f)(const Args&)) { return [this, f](const Args& a) { return (this->*f)(a); }; };
      handlers_ = {
          {"gb", bind(&Runner::op_gb)},
          {"validate", bind(&Runner::op_validate)},
          {"nilpotent", bind(&Runner::op_nilpotent)},
          {"crystal-zero", bind(&Runner::op_crystal_zero)},
          {"supported-on", bind(&Runner::op_supported_on)},
          {"twist-to-cartier", bind(&Runner::op_twist_to_cartier)},
          {"twist-to-gamma", bind(&Runner::op_twist_to_gamma)},
          {"pullback", bind(&Runner::op_pullback)},
          {"dualizing", bind(&Runner::op_dualizing)},
          {"transition", bind(&Runner::op_transition)},
          {"check-2-14", bind(&Runner::op_check)},
          {"gen-dim", bind(&Runner::op_gen_dim)},
          {"solutions", bind(&Runner::op_solutions)},
          {"as-kernel", bind(&Runner::op_as_kernel)},
          {"verify-suite", bind(&Runner::op_verify)},
      };
    }
    return handlers_;
  }

  Env& env_;
  std::map<std::string, Handler> handlers_;
};

struct Command {
  std::string op;
  std::vector<std::string> raw;
  Args args;
};

std::vector<std::string> raw_args(const json& j, const std::string& where) {
  std::vector<std::string> out;
  if (j.is_string()) {
    std::istringstream in(j.get<std::string>());
    for (std::string t; in >> t;) out.push_back(t);
  } else if (j.is_array()) {
    for (const auto& e : j) {
      if (e.is_string()) {
        out.push_back(e.get<std::string>());
      } else if (e.is_number_integer()) {
        out.push_back(std::to_string(e.get<std::int64_t>()));
      } else {
        throw InputError("schema_error", where + ": arguments must be strings or integers", where);
      }
    }
  } else if (!j.is_null()) {
    throw InputError("schema_error", where + ": args must be a string or an array", where);
  }
  return out;
}

std::vector<Command> load_commands(const Env& env, const json& list) {
  if (!list.is_array()) throw InputError("schema_error", "commands: expected an array", "commands");
  std::set<std::string> known;
  for (const auto& [name, _] : env.objects) known.insert(name);
  std::vector<Command> out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string where = "commands[" + std::to_string(i) + "]";
    Command c;
    c.op = as_string(member(list[i], "op", where), where + ".op");
    const auto spec = op_table().find(c.op);
    if (spec == op_table().end()) throw InputError("schema_error", where + ": unknown op \"" + c.op + "\"", where);
    c.raw = list[i].contains("args") ? raw_args(list[i]["args"], where) : std::vector<std::string>{};
    if (list[i].contains("as")) {
      c.raw.push_back("--as");
      c.raw.push_back(as_string(list[i]["as"], where + ".as"));
    }
    try {
      c.args = split_args(c.raw);
    } catch (const Error& e) {
      throw InputError("schema_error", where + ": " + e.what(), where);
    }
    const auto& s = spec->second;
    if (c.args.pos.size() < s.min_pos || c.args.pos.size() > s.max_pos)
      throw InputError("schema_error", where + ": wrong number of arguments for " + c.op, where);
    for (std::size_t r = 0; r < s.refs; ++r) {
      if (!known.count(c.args.pos[r]))
        throw InputError("unknown_object", where + ": unknown object \"" + c.args.pos[r] + "\"", c.args.pos[r]);
    }
    if (c.op == "gb" && c.args.pos[0] != "ideal" && !known.count(c.args.pos[0]))
      throw InputError("unknown_object", where + ": unknown object \"" + c.args.pos[0] + "\"", c.args.pos[0]);
    if (!c.args.as.empty()) known.insert(c.args.as);
    out.push_back(std::move(c));
  }
  return out;
}

json error_json(const std::string& kind, const std::string& message) {
  json e;
  e["kind"] = kind;
  e["message"] = message;
  return e;
}

void emit(std::ostream& out, const json& j) { out << j.dump() << '\n'; }

}  // namespace

int run_session(const std::string& text, std::ostream& out, std::ostream& log, const Budget& budget) {
  Env env;
  env.source = &text;
  env.budget = budget;
  std::vector<Command> commands;
  try {
    json doc;
    try {
      doc = json::parse(text);
    } catch (const json::parse_error& e) {
      InputError err("parse_error", e.what());
      std::tie(err.line, err.column) = line_column(text, e.byte ? e.byte - 1 : 0);
      throw err;
    }
    if (!doc.is_object()) throw InputError("schema_error", "session must be a JSON object");
    load_field(env, member(doc, "field", "session"));
    load_ring(env, member(doc, "ring", "session"));
    env.ctx = doc.contains("ideal") ? load_context(env, doc["ideal"], "ideal") : QuotientContext::ambient(env.ring);
    if (doc.contains("objects")) {
      if (!doc["objects"].is_object()) throw InputError("schema_error", "objects: expected an object", "objects");
      for (const auto& [name, spec] : doc["objects"].items()) {
        try {
          env.objects.emplace(name, load_object(env, name, spec));
        } catch (const InputError&) {
          throw;
        } catch (const Error& e) {
          throw InputError(e.kind(), name + ": " + e.what(), name);
        }
      }
    }
    commands = load_commands(env, doc.contains("commands") ? doc["commands"] : json::array());
  } catch (const InputError& e) {
    json rec;
    rec["status"] = "error";
    json err = error_json(e.kind, e.what());
    if (!e.object.empty()) err["object"] = e.object;
    if (e.line) err["line"] = e.line;
    if (e.column) err["column"] = e.column;
    rec["error"] = err;
    emit(out, rec);
    log << "frobkit: " << e.what() << '\n';
    return kInputError;
  } catch (const Error& e) {
    json rec;
    rec["status"] = "error";
    rec["error"] = error_json(e.kind(), e.what());
    emit(out, rec);
    log << "frobkit: " << e.what() << '\n';
    return kInputError;
  }

  Runner runner(env);
  std::size_t failed = 0;
  for (std::size_t i = 0; i < commands.size(); ++i) {
    const Command& c = commands[i];
    json rec;
    rec["cmd"] = i;
    rec["op"] = c.op;
    rec["args"] = c.raw;
    const auto start = std::chrono::steady_clock::now();
    try {
      json payload = runner.run(c.op, c.args);
      rec["status"] = "ok";
      if (!c.args.as.empty()) {
        if (!runner.result_) throw InvalidArgument(c.op + " produces no object to name with --as");
        env.objects.insert_or_assign(c.args.as, *runner.result_);
        rec["as"] = c.args.as;
      }
      rec.update(payload);
    } catch (const Error& e) {
      rec["status"] = "error";
      rec["error"] = error_json(e.kind(), e.what());
    } catch (const std::exception& e) {
      rec["status"] = "error";
      rec["error"] = error_json("internal", e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = rec["status"] == "ok";
    failed += !ok;
    emit(out, rec);
    log << "[" << i << "] " << c.op << ' ' << (ok ? "ok" : "error") << ' ' << secs << "s\n";
  }
  log << commands.size() - failed << "/" << commands.size() << " commands ok\n";
  return failed ? kCommandError : kOk;
}

int run_verify_suite(std::uint64_t seed, bool quick, std::ostream& out, std::ostream& log) {
  verify::BatteryOptions opt;
  opt.seed = seed;
  opt.quick = quick;
  const auto results = verify::run_battery(opt);
  json rec;
  rec["op"] = "verify-suite";
  rec["seed"] = seed;
  rec["quick"] = quick;
  rec["status"] = "ok";
  rec.update(Runner::battery_json(results));
  emit(out, rec);
  for (const auto& r : results) {
    log << (r.passed ? "PASS " : "FAIL ") << r.id << ". " << r.name << " (" << r.seconds << "s) " << r.detail << '\n';
  }
  return rec["failed"] == 0 ? kOk : kCommandError;
}

}  // namespace frobkit::cli
