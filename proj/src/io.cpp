#include "ekt/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ekt/error.hpp"

namespace ekt::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) bad(where + " must be an object");
  auto it = j.find(key);
  if (it == j.end()) bad(where + " needs \"" + key + "\"");
  return *it;
}

int as_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) bad(where + " must be an integer");
  const auto v = j.get<long long>();
  if (v < -(1LL << 30) || v > (1LL << 30)) bad(where + " is out of range");
  return static_cast<int>(v);
}

std::vector<int> int_list(const json& j, const std::string& where) {
  if (!j.is_array()) bad(where + " must be an array");
  std::vector<int> v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(as_int(j[i], where + "[" + std::to_string(i) + "]"));
  return v;
}

mpq_class rational_from_json(const json& j, const std::string& where) {
  if (j.is_number_integer()) return mpq_class(mpz_class(std::to_string(j.get<long long>())));
  if (j.is_string()) {
    mpq_class q;
    if (q.set_str(j.get<std::string>(), 10) != 0 || q.get_den() == 0) bad(where + " is not a rational");
    q.canonicalize();
    return q;
  }
  bad(where + " must be an integer or a \"p/q\" string");
}

json integer(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

json rational(const mpq_class& q) {
  if (q.get_den() == 1) return integer(q.get_num());
  return q.get_str();
}

json values(const ClassFunction& chi) {
  json a = json::array();
  for (const auto& v : chi.values()) a.push_back(to_json(v));
  return a;
}

json series(const PowerSeries& s) { return to_json(s); }

json int_table(const std::vector<std::vector<int>>& t) {
  json a = json::array();
  for (const auto& row : t) a.push_back(row);
  return a;
}

// character at x transported to the orbit representative: chi_rep(h) = chi_x(t h t^-1)
ClassFunction transport_to_rep(const GSet& base, int x, const ClassFunction& chi_x) {
  const int o = base.orbit_of(x);
  const Subgroup& rep_stab = base.rep_stabilizer(o);
  const Subgroup stab_x = base.stabilizer(x);
  const int t = base.transporter(x);
  const FiniteGroup& g = base.group();
  const FiniteGroup& h = *rep_stab.group();
  std::vector<Cyclotomic> v;
  for (int c = 0; c < h.num_classes(); ++c)
    v.push_back(chi_x.at(stab_x.local(g.conj(t, rep_stab.global(h.class_rep(c))))));
  return ClassFunction(rep_stab.group(), std::move(v));
}

ClassFunction fiber_from_json(const json& j, const Subgroup& stab, const std::string& where) {
  const GroupPtr& h = stab.group();
  if (j.is_object()) {
    const auto mults = field(j, "irreducible_multiplicities", where);
    const auto table = character_table(h);
    if (!mults.is_array() || static_cast<int>(mults.size()) != table.size())
      bad(where + " needs " + std::to_string(table.size()) + " multiplicities");
    std::vector<long> m;
    for (std::size_t i = 0; i < mults.size(); ++i) {
      const int k = as_int(mults[i], where);
      if (k < 0) bad(where + " has a negative multiplicity");
      m.push_back(k);
    }
    return combine(table, m);
  }
  if (!j.is_array()) bad(where + " must be a list of values or a multiplicity object");
  if (static_cast<int>(j.size()) != h->num_classes())
    bad(where + " needs one value per class of the stabilizer (" + std::to_string(h->num_classes()) + ")");
  std::vector<Cyclotomic> v;
  for (const auto& x : j) v.push_back(cyclotomic_from_json(x));
  return ClassFunction(h, std::move(v));
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) bad("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

json parse(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    bad(origin + ": " + e.what());
  }
}

GroupSpec group_spec_from_json(const json& j) {
  GroupSpec s;
  if (!j.is_object()) bad("group must be an object");
  if (auto it = j.find("name"); it != j.end()) {
    if (!it->is_string()) bad("group name must be a string");
    s.name = it->get<std::string>();
  }
  s.degree = as_int(field(j, "degree", "group"), "degree");
  if (s.degree < 1) throw Error(ErrorCode::InvalidArgument, "degree must be positive");
  const json& gens = field(j, "generators", "group");
  if (!gens.is_array()) bad("generators must be an array");
  for (std::size_t k = 0; k < gens.size(); ++k)
    s.generators.push_back(int_list(gens[k], "generators[" + std::to_string(k) + "]"));
  if (auto it = j.find("normal_subgroup_generators"); it != j.end())
    s.normal_generators = int_list(*it, "normal_subgroup_generators");
  for (int i : s.normal_generators)
    if (i < 0 || i >= static_cast<int>(s.generators.size()))
      bad("normal subgroup generator index " + std::to_string(i) + " is out of range");
  return s;
}

json to_json(const GroupSpec& spec) {
  json j;
  j["name"] = spec.name;
  j["degree"] = spec.degree;
  j["generators"] = int_table(spec.generators);
  if (!spec.normal_generators.empty()) j["normal_subgroup_generators"] = spec.normal_generators;
  return j;
}

Cyclotomic cyclotomic_from_json(const json& j) {
  if (!j.is_object()) return Cyclotomic(rational_from_json(j, "value"));
  const int e = as_int(field(j, "e", "value"), "e");
  if (e < 1 || e > 100000) bad("root order out of range");
  const json& c = field(j, "coeffs", "value");
  if (!c.is_array() || static_cast<int>(c.size()) > e) bad("coeffs must be an array of at most e entries");
  std::vector<mpq_class> q;
  for (const auto& x : c) q.push_back(rational_from_json(x, "coefficient"));
  return Cyclotomic::from_exponents(e, q);
}

json to_json(const Cyclotomic& x) {
  const Cyclotomic r = x.reduced();
  json c = json::array();
  for (const auto& q : r.exponent_coefficients()) c.push_back(rational(q));
  return json{{"e", r.order()}, {"coeffs", c}};
}

json to_json(const ClassFunction& chi) { return values(chi); }

json to_json(const CharacterTable& t) {
  const FiniteGroup& g = *t.group;
  json classes = json::array();
  for (int c = 0; c < g.num_classes(); ++c)
    classes.push_back({{"representative", g.class_rep(c)},
                       {"size", g.class_size(c)},
                       {"element_order", g.element_order(g.class_rep(c))}});
  json rows = json::array();
  for (const auto& r : t.rows)
    rows.push_back({{"degree", rational(r.degree().rational_value())}, {"values", values(r)}});
  return json{{"group", g.name()}, {"order", g.order()}, {"classes", classes}, {"rows", rows}};
}

json to_json(const ObstructionRecord& r) {
  return json{{"degree", r.rho.dimension},
              {"stabilizer_order", r.stabilizer.order()},
              {"quotient_order", r.quotient_order()},
              {"root_order", r.root_order},
              {"omega", int_table(r.omega)},
              {"trivial", r.trivial}};
}

json to_json(const IrrOrbitRecord& r, const CharacterTable& table_a) {
  return json{{"representative", r.representative},
              {"character", values(table_a.rows[r.representative])},
              {"orbit", r.orbit},
              {"orbit_size", r.orbit.size()},
              {"stabilizer_order", r.stabilizer.order()},
              {"quotient_order", r.obstruction.quotient_order()},
              {"obstruction_trivial", r.obstruction.trivial},
              {"lying_over", r.lying_over},
              {"twisted_count", r.twisted_count},
              {"regular_count", r.regular_count},
              {"obstruction", to_json(r.obstruction)}};
}

json to_json(const DecompositionReport& r) {
  json orbits = json::array();
  std::string identity = std::to_string(r.total_irr) + " =";
  for (std::size_t i = 0; i < r.orbits.size(); ++i) {
    orbits.push_back(to_json(r.orbits[i], r.table_a));
    identity += (i ? " + " : " ") + std::to_string(r.orbits[i].twisted_count);
  }
  return json{{"group", r.group->name()},
              {"group_order", r.group->order()},
              {"normal_order", r.normal.order()},
              {"normal_members", r.normal.members()},
              {"irr_count", r.total_irr},
              {"orbits", orbits},
              {"sum_of_counts", r.sum_of_counts},
              {"sum_of_regular_counts", r.sum_of_regular_counts},
              {"identity", identity},
              {"partition_ok", r.partition_ok},
              {"consistent", r.consistent}};
}

json to_json(const PowerSeries& s) {
  json a = json::array();
  for (const auto& c : s.coefficients()) a.push_back(integer(c));
  return a;
}

json to_json(const GlobalSeries& s) {
  json classes = json::array();
  for (const auto& c : s.classes)
    classes.push_back({{"subgroup_order", c.representative.order()},
                       {"members", c.representative.members()},
                       {"class_size", c.class_size},
                       {"normalizer_order", c.normalizer_order},
                       {"series", series(c.series)}});
  return json{{"series", series(s.total)}, {"breakdown", {{"classes", classes}}}};
}

json to_json(const D2pReport& r) {
  json families = json::array();
  for (const auto& f : r.families) {
    json orders = json::array();
    for (const auto& h : f.members) orders.push_back(h.order());
    families.push_back({{"name", f.name}, {"size", f.members.size()}, {"member_orders", orders}, {"closed", f.closed}});
  }
  json pairs = json::array();
  for (const auto& p : r.pairs)
    pairs.push_back({{"larger", p.larger},
                     {"smaller", p.smaller},
                     {"difference", p.difference},
                     {"subgroup_order", p.representative.order()},
                     {"class_size", p.class_size},
                     {"weyl_order", p.weyl_order},
                     {"series", series(p.series)}});
  json g = to_json(r.global);
  g["breakdown"]["families"] = families;
  g["breakdown"]["pairs"] = pairs;
  return json{{"p", r.p},
              {"max_degree", r.max_degree},
              {"localization", r.localization},
              {"series", g["series"]},
              {"breakdown", g["breakdown"]},
              {"swap_pairs", r.swap_pairs},
              {"fixed_characters", r.fixed_characters},
              {"checks",
               {{"families", r.families_ok},
                {"adjacency", r.adjacency_ok},
                {"pairs", r.pairs_ok},
                {"odd_vanishing", r.odd_vanishing},
                {"nonnegative", r.nonnegative},
                {"sum_matches", r.sum_matches}}},
              {"ok", r.ok}};
}

json to_json(const VerificationReport& r) {
  json points = json::array();
  for (const auto& p : r.points) {
    json pieces = json::array();
    for (const auto& piece : p.pieces) pieces.push_back(values(piece));
    points.push_back({{"point", p.point},
                      {"declared", p.declared},
                      {"ok", p.ok},
                      {"stabilizer_order", p.fiber.group().order()},
                      {"fiber", values(p.fiber)},
                      {"sum", values(p.sum)},
                      {"pieces", pieces}});
  }
  return json{{"ok", r.ok}, {"points", points}};
}

BundleFile load_bundle(const std::string& path, std::size_t max_order) {
  const auto dir = std::filesystem::path(path).parent_path().string();
  return bundle_from_json(parse(read_file(path), path), dir, max_order);
}

BundleFile bundle_from_json(const json& j, const std::string& base_dir, std::size_t max_order) {
  BundleFile f;
  const json& gj = field(j, "group", "bundle");
  if (gj.is_string()) {
    const auto p = (std::filesystem::path(base_dir) / gj.get<std::string>()).string();
    f.spec = group_spec_from_json(parse(read_file(p), p));
  } else {
    f.spec = group_spec_from_json(gj);
  }
  if (auto it = j.find("normal_subgroup_generators"); it != j.end()) {
    f.spec.normal_generators = int_list(*it, "normal_subgroup_generators");
    for (int i : f.spec.normal_generators)
      if (i < 0 || i >= static_cast<int>(f.spec.generators.size()))
        bad("normal subgroup generator index " + std::to_string(i) + " is out of range");
  }
  f.group = build(f.spec, max_order);
  f.normal = distinguished_normal(f.group, f.spec);

  const json& bj = field(j, "base", "bundle");
  const int m = as_int(field(bj, "points", "base"), "points");
  if (m < 1 || m > 100000) bad("points out of range");
  const json& aj = field(bj, "action", "base");
  if (!aj.is_array()) bad("action must be an array");
  std::vector<std::vector<int>> images;
  for (std::size_t k = 0; k < aj.size(); ++k) images.push_back(int_list(aj[k], "action[" + std::to_string(k) + "]"));
  GSet base = GSet::from_generator_images(f.group, m, images);

  const json& fj = field(j, "fibers", "bundle");
  if (!fj.is_array()) bad("fibers must be an array");
  std::vector<ClassFunction> fibers(base.num_orbits());
  std::vector<bool> have(base.num_orbits(), false);
  std::vector<std::pair<int, ClassFunction>> declarations;
  for (std::size_t i = 0; i < fj.size(); ++i) {
    const std::string where = "fibers[" + std::to_string(i) + "]";
    const int x = as_int(field(fj[i], "orbit_rep", where), where + ".orbit_rep");
    if (x < 0 || x >= m) bad(where + ".orbit_rep is not a point");
    ClassFunction chi = fiber_from_json(field(fj[i], "character", where), base.stabilizer(x), where);
    const int o = base.orbit_of(x);
    if (!have[o]) {
      fibers[o] = x == base.orbit_rep(o) ? ClassFunction(base.rep_stabilizer(o).group(), chi.values())
                                        : transport_to_rep(base, x, chi);
      have[o] = true;
    } else {
      declarations.emplace_back(x, std::move(chi));
    }
  }
  for (int o = 0; o < base.num_orbits(); ++o)
    if (!have[o]) bad("no fiber given for the orbit of point " + std::to_string(base.orbit_rep(o)));
  f.bundle = EquivariantBundle(std::move(base), std::move(fibers));
  for (auto& [x, chi] : declarations) f.bundle.declare(x, chi);
  return f;
}

std::string fnv1a_hex(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) s[i] = digits[h & 15];
  return s;
}

}  // namespace ekt::io
