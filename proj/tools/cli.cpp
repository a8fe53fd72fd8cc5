#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "ekt/bordism.hpp"
#include "ekt/bundle.hpp"
#include "ekt/catalog.hpp"
#include "ekt/character.hpp"
#include "ekt/clifford.hpp"
#include "ekt/error.hpp"
#include "ekt/io.hpp"

namespace ekt::cli {

namespace {

using io::json;

struct Settings {
  std::string format = "table";
  double tol = 1e-8;
  std::uint64_t seed = 0x5EED;
  std::size_t max_order = kDefaultMaxOrder;

  CliffordOptions clifford() const {
    CliffordOptions o;
    o.rep.tol = tol;
    o.rep.snap_tol = 100 * tol;
    o.rep.seed = seed;
    o.max_order = max_order;
    return o;
  }
};

struct GroupInput {
  std::string file;
  std::string catalog;
};

struct Loaded {
  GroupSpec spec;
  GroupPtr group;
};

struct Outcome {
  json results;
  std::vector<std::string> warnings;
  int exit = kOk;
  std::string text;
};

int exit_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::ParseError:
    case ErrorCode::InvalidArgument:
    case ErrorCode::InvalidPermutation:
    case ErrorCode::NotSubgroup:
    case ErrorCode::GroupMismatch:
    case ErrorCode::NotPrime:
    case ErrorCode::NotOdd:
      return kInput;
    case ErrorCode::CapExceeded:
    case ErrorCode::ClosureOverflow:
      return kCap;
    case ErrorCode::NotNormal:
      return kNotNormal;
    case ErrorCode::NotATrivial:
      return kNotATrivial;
    default:
      return kInconsistent;
  }
}

Loaded load_group(const GroupInput& in, const Settings& s, json& inputs) {
  Loaded l;
  if (in.file.empty() == in.catalog.empty())
    throw Error(ErrorCode::InvalidArgument, "give exactly one of a group file or --catalog NAME");
  if (!in.catalog.empty()) {
    l.spec = catalog_entry(in.catalog).spec;
  } else {
    l.spec = io::group_spec_from_json(io::parse(io::read_file(in.file), in.file));
    if (l.spec.name.empty()) l.spec.name = std::filesystem::path(in.file).stem().string();
  }
  inputs["group"] = io::to_json(l.spec);
  l.group = build(l.spec, s.max_order);
  return l;
}

// "file" (the group's own distinguished subgroup), "trivial", "center",
// "whole", or comma separated generator indices such as "0,2"
Subgroup parse_normal(const std::string& text, const Loaded& l) {
  if (text == "file") {
    if (l.spec.normal_generators.empty())
      throw Error(ErrorCode::InvalidArgument, "the group names no normal subgroup; pass --normal");
    return distinguished_normal(l.group, l.spec);
  }
  if (text == "trivial") return Subgroup::trivial(l.group);
  if (text == "center") return center(l.group);
  if (text == "whole") return Subgroup::whole(l.group);
  GroupSpec s = l.spec;
  s.normal_generators.clear();
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    int k = -1;
    try {
      k = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size())
      throw Error(ErrorCode::InvalidArgument, "bad --normal value \"" + text + "\"");
    s.normal_generators.push_back(k);
  }
  if (s.normal_generators.empty()) throw Error(ErrorCode::InvalidArgument, "empty --normal list");
  for (int k : s.normal_generators)
    if (k < 0 || k >= static_cast<int>(l.spec.generators.size()))
      throw Error(ErrorCode::InvalidArgument, "generator index " + std::to_string(k) + " is out of range");
  return distinguished_normal(l.group, s);
}

// Plain text columns, each padded to its widest cell.
std::string columns(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> w;
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (w.size() <= i) w.push_back(0);
      w[i] = std::max(w[i], r[i].size());
    }
  std::string s;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i) line += "  ";
      line += r[i];
      if (i + 1 < r.size()) line.append(w[i] - r[i].size(), ' ');
    }
    s += line + "\n";
  }
  return s;
}

std::string value_text(const Cyclotomic& v) { return v.reduced().to_string(); }

std::string yes(bool b) { return b ? "yes" : "no"; }

std::string series_text(const PowerSeries& s) {
  std::vector<std::vector<std::string>> rows{{"degree", "coefficient"}};
  for (int n = 0; n <= s.max_degree(); ++n) rows.push_back({std::to_string(n), s[n].get_str()});
  return columns(rows);
}

std::string members_text(const Subgroup& h) {
  std::string s = "{";
  for (std::size_t i = 0; i < h.members().size(); ++i) s += (i ? "," : "") + std::to_string(h.members()[i]);
  return s + "}";
}

Outcome cmd_irr(const Loaded& l, const Settings& s) {
  const auto t = character_table(l.group, {s.max_order});
  Outcome o;
  o.results = io::to_json(t);
  const FiniteGroup& g = *l.group;
  std::vector<std::vector<std::string>> rows{{"class"}, {"size"}, {"order"}};
  for (int c = 0; c < g.num_classes(); ++c) {
    rows[0].push_back(std::to_string(c));
    rows[1].push_back(std::to_string(g.class_size(c)));
    rows[2].push_back(std::to_string(g.element_order(g.class_rep(c))));
  }
  for (int r = 0; r < t.size(); ++r) {
    std::vector<std::string> row{"X" + std::to_string(r)};
    for (const auto& v : t.rows[r].values()) row.push_back(value_text(v));
    rows.push_back(std::move(row));
  }
  o.text = g.name() + ": order " + std::to_string(g.order()) + ", " + std::to_string(t.size()) +
           " irreducible characters\n" + columns(rows);
  return o;
}

std::string decomposition_text(const DecompositionReport& r) {
  std::string s = r.group->name() + " over a normal subgroup of order " + std::to_string(r.normal.order()) +
                  " " + members_text(r.normal) + "\n";
  std::vector<std::vector<std::string>> rows{
      {"rep", "orbit", "|G_rho|", "|Q|", "d", "extends", "twisted", "regular", "lying over"}};
  std::string identity = std::to_string(r.total_irr) + " =";
  for (std::size_t i = 0; i < r.orbits.size(); ++i) {
    const auto& rec = r.orbits[i];
    std::string orbit, over;
    for (std::size_t k = 0; k < rec.orbit.size(); ++k) orbit += (k ? "," : "") + std::to_string(rec.orbit[k]);
    for (std::size_t k = 0; k < rec.lying_over.size(); ++k)
      over += (k ? "," : "") + std::to_string(rec.lying_over[k]);
    rows.push_back({std::to_string(rec.representative), "{" + orbit + "}", std::to_string(rec.stabilizer.order()),
                    std::to_string(rec.obstruction.quotient_order()), std::to_string(rec.obstruction.rho.dimension),
                    yes(rec.obstruction.trivial), std::to_string(rec.twisted_count),
                    std::to_string(rec.regular_count), "{" + over + "}"});
    identity += (i ? " + " : " ") + std::to_string(rec.twisted_count);
  }
  s += columns(rows);
  s += "|Irr(G)|: " + identity + "\n";
  s += "consistent: " + yes(r.consistent) + "\n";
  return s;
}

Outcome cmd_clifford(const Loaded& l, const Settings& s, const std::string& normal) {
  Outcome o;
  std::vector<Subgroup> subs;
  if (normal == "all") subs = normal_subgroups(l.group);
  else subs.push_back(parse_normal(normal, l));
  json reports = json::array();
  bool consistent = true;
  for (const auto& a : subs) {
    const auto r = k_decomposition_report(a, s.clifford());
    reports.push_back(io::to_json(r));
    for (const auto& w : r.warnings) o.warnings.push_back(w);
    consistent = consistent && r.consistent;
    if (!o.text.empty()) o.text += "\n";
    o.text += decomposition_text(r);
  }
  o.results = normal == "all" ? json{{"reports", reports}} : reports[0];
  o.exit = consistent ? kOk : kInconsistent;
  return o;
}

Outcome cmd_bundle(const std::string& path, const std::string& normal, const Settings& s, json& inputs) {
  auto f = io::load_bundle(path, s.max_order);
  inputs["group"] = io::to_json(f.spec);
  inputs["bundle"] = io::parse(io::read_file(path), path);
  Loaded l{f.spec, f.group};
  const Subgroup a = normal.empty() ? f.normal : parse_normal(normal, l);
  if (!a.is_normal()) throw Error(ErrorCode::NotNormal, "the chosen subgroup is not normal");
  if (!f.bundle.base().fixed_by(a)) throw Error(ErrorCode::NotATrivial, "the normal subgroup moves a base point");
  const auto orbits = orbit_decomposition(a, s.clifford());
  const auto report = verify_decomposition(f.bundle, orbits);
  const auto pieces = twisted_pieces(f.bundle, orbits);

  Outcome o;
  json tp = json::array();
  for (const auto& p : pieces) tp.push_back({{"representative", p.representative}, {"ranks", p.ranks}});
  o.results = io::to_json(report);
  o.results["group"] = f.group->name();
  o.results["normal_order"] = a.order();
  o.results["base_points"] = f.bundle.base().size();
  o.results["orbits"] = f.bundle.base().num_orbits();
  o.results["twisted_pieces"] = tp;
  o.exit = report.ok ? kOk : kFalse;

  std::vector<std::vector<std::string>> rows{{"point", "source", "|Stab|", "rank", "status"}};
  for (const auto& p : report.points)
    rows.push_back({std::to_string(p.point), p.declared ? "declared" : "orbit", std::to_string(p.fiber.group().order()),
                    value_text(p.fiber.degree()), p.ok ? "ok" : "mismatch"});
  o.text = f.group->name() + " bundle over " + std::to_string(f.bundle.base().size()) + " points, " +
           std::to_string(f.bundle.base().num_orbits()) + " orbits, normal subgroup of order " +
           std::to_string(a.order()) + "\n" + columns(rows) + "decomposition: " + (report.ok ? "ok" : "mismatch") +
           "\n";
  for (const auto& p : report.points)
    if (!p.ok) o.warnings.push_back("mismatch at point " + std::to_string(p.point));
  return o;
}

void check_degree(int m) {
  if (m < 0 || m > 120) throw Error(ErrorCode::InvalidArgument, "--max-degree must lie in 0..120");
}

Outcome cmd_bordism(const Loaded& l, const std::string& normal, int m) {
  check_degree(m);
  Outcome o;
  if (!normal.empty()) {
    const Subgroup a = parse_normal(normal, l);
    const auto s = adjacent_family_series(a, m);
    const auto q = quotient(a);
    const auto prof = rank_profile(a);
    o.results = {{"series", io::to_json(s)},
                 {"breakdown",
                  {{"normal_order", a.order()},
                   {"normal_members", a.members()},
                   {"weyl_order", q.group()->order()},
                   {"dims", prof.dims}}}};
    o.text = "adjacent families differing by the class of a normal subgroup of order " +
             std::to_string(a.order()) + ", Weyl group of order " + std::to_string(q.group()->order()) + "\n" +
             series_text(s);
  } else {
    const auto gs = global_generator_series(l.group, m);
    o.results = io::to_json(gs);
    o.text = l.group->name() + ": sum over " + std::to_string(gs.classes.size()) +
             " conjugacy classes of subgroups\n" + series_text(gs.total);
  }
  o.results["localization"] = "Z_P-local";
  return o;
}

Outcome cmd_d2p(int p, int m) {
  const auto r = d2p_certify(p, m);
  Outcome o;
  o.results = io::to_json(r);
  o.exit = r.ok ? kOk : kFalse;
  std::vector<std::vector<std::string>> rows{{"pair", "class", "|W|", "class size"}};
  for (const auto& pr : r.pairs)
    rows.push_back({pr.larger + " > " + pr.smaller, pr.difference, std::to_string(pr.weyl_order),
                    std::to_string(pr.class_size)});
  o.text = "D" + std::to_string(2 * p) + ", Z_P-local generator counts to degree " + std::to_string(m) + "\n" +
           columns(rows) + series_text(r.global.total);
  auto line = [&](const char* name, bool v) { o.text += std::string(name) + ": " + yes(v) + "\n"; };
  line("families", r.families_ok);
  line("adjacency", r.adjacency_ok);
  line("pair series", r.pairs_ok);
  line("odd degrees vanish", r.odd_vanishing);
  line("nonnegative", r.nonnegative);
  line("sum matches", r.sum_matches);
  if (!r.odd_vanishing) o.warnings.push_back("nonzero coefficient in odd degree");
  return o;
}

// one generator per line, in the key order of the file format
std::string group_file_text(const GroupSpec& spec) {
  std::string s = "{\n  \"name\": " + json(spec.name).dump() + ",\n  \"degree\": " + std::to_string(spec.degree) +
                  ",\n  \"generators\": [";
  for (std::size_t k = 0; k < spec.generators.size(); ++k)
    s += std::string(k ? "," : "") + "\n    " + json(spec.generators[k]).dump();
  s += spec.generators.empty() ? "]" : "\n  ]";
  if (!spec.normal_generators.empty()) s += ",\n  \"normal_subgroup_generators\": " + json(spec.normal_generators).dump();
  return s + "\n}\n";
}

Outcome cmd_catalog(const std::string& export_dir) {
  Outcome o;
  json entries = json::array();
  std::vector<std::vector<std::string>> rows{{"name", "order", "classes", "subgroup classes"}};
  for (const auto& e : catalog()) {
    entries.push_back({{"name", e.spec.name},
                       {"order", e.order},
                       {"classes", e.num_classes},
                       {"subgroup_classes", e.num_subgroup_classes}});
    rows.push_back({e.spec.name, std::to_string(e.order), std::to_string(e.num_classes),
                    e.num_subgroup_classes ? std::to_string(e.num_subgroup_classes) : "-"});
    if (!export_dir.empty()) {
      std::filesystem::create_directories(export_dir);
      std::ofstream f(std::filesystem::path(export_dir) / (e.spec.name + ".json"));
      if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write into " + export_dir);
      f << group_file_text(e.spec);
    }
  }
  o.results = {{"entries", entries}};
  o.text = columns(rows);
  return o;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Clifford theory, twisted ranks and bordism generator counts for finite groups", "ekt"};
  app.fallthrough();
  app.require_subcommand(1);
  Settings s;
  app.add_option("--format", s.format, "table or json")->check(CLI::IsMember({"table", "json"}))->capture_default_str();
  app.add_option("--tol", s.tol, "construction residual tolerance; snapping uses 100x this")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--seed", s.seed, "seed for the random commutant elements")->capture_default_str();
  app.add_option("--max-order", s.max_order, "largest group order accepted")->capture_default_str();

  GroupInput gi;
  auto add_group = [&](CLI::App* c) {
    c->add_option("group", gi.file, "group file (JSON)");
    c->add_option("--catalog", gi.catalog, "built-in group by name (see `ekt catalog`)");
  };

  auto* irr = app.add_subcommand("irr", "character table");
  add_group(irr);

  std::string normal = "file";
  auto* clif = app.add_subcommand("clifford", "orbits of G on Irr(A) and the twisted counts");
  add_group(clif);
  clif->add_option("--normal", normal, "file, trivial, center, whole, all, or generator indices like 0,2")
      ->capture_default_str();

  std::string bundle_path, bundle_normal;
  auto* bun = app.add_subcommand("bundle-verify", "check a bundle against its decomposition");
  bun->add_option("bundle", bundle_path, "bundle file (JSON)")->required();
  bun->add_option("--normal", bundle_normal, "override the normal subgroup (same syntax as clifford)");

  std::string bord_normal;
  int max_degree = 20;
  auto* bord = app.add_subcommand("bordism", "generator-count series");
  add_group(bord);
  bord->add_option("--normal", bord_normal, "normal subgroup for the adjacent pair; omit for the global sum");
  bord->add_option("--max-degree", max_degree, "largest degree")->capture_default_str();

  int p = 3;
  auto* d2p = app.add_subcommand("d2p", "dihedral certification");
  d2p->add_option("--p", p, "odd prime")->capture_default_str();
  d2p->add_option("--max-degree", max_degree, "largest degree")->capture_default_str();

  std::string export_dir;
  auto* cat = app.add_subcommand("catalog", "built-in groups");
  cat->add_option("--export", export_dir, "write one group file per entry into this directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInput;
  }

  CLI::App* cmd = app.get_subcommands().front();
  json inputs{{"command", cmd->get_name()}};
  for (const auto* opt : cmd->get_options())
    if (opt->count() > 0 && opt->get_name() != "group" && opt->get_name() != "bundle" &&
        opt->get_name() != "--catalog")
      inputs["options"][opt->get_name()] = opt->as<std::string>();
  inputs["settings"] = {{"tol", app.get_option("--tol")->as<std::string>()},
                        {"seed", std::to_string(s.seed)},
                        {"max_order", std::to_string(s.max_order)}};

  Outcome o;
  json error;
  try {
    if (cmd == irr) {
      o = cmd_irr(load_group(gi, s, inputs), s);
    } else if (cmd == clif) {
      o = cmd_clifford(load_group(gi, s, inputs), s, normal);
    } else if (cmd == bun) {
      o = cmd_bundle(bundle_path, bundle_normal, s, inputs);
    } else if (cmd == bord) {
      o = cmd_bordism(load_group(gi, s, inputs), bord_normal, max_degree);
    } else if (cmd == d2p) {
      o = cmd_d2p(p, max_degree);
    } else {
      o = cmd_catalog(export_dir);
    }
  } catch (const Error& e) {
    o = Outcome{};
    o.exit = exit_for(e.code());
    error = {{"code", error_code_name(e.code())}, {"message", e.what()}};
  } catch (const std::exception& e) {
    o = Outcome{};
    o.exit = kInconsistent;
    error = {{"code", "Internal"}, {"message", e.what()}};
  }

  if (s.format == "json") {
    json report{{"schema_version", io::kSchemaVersion},
                {"command", cmd->get_name()},
                {"inputs_digest", io::fnv1a_hex(inputs.dump())},
                {"results", o.results},
                {"warnings", o.warnings},
                {"exit_status", o.exit}};
    if (!error.is_null()) report["error"] = error;
    out << report.dump(2) << "\n";
  } else {
    out << o.text;
    for (const auto& w : o.warnings) err << "warning: " << w << "\n";
    if (!error.is_null()) err << "error: " << error["message"].get<std::string>() << "\n";
  }
  return o.exit;
}

}  // namespace ekt::cli
