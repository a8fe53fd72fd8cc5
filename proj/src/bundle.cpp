#include "ekt/bundle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "ekt/error.hpp"

namespace ekt {

namespace {

// Integer combination of e-th roots of unity, an element of Z[x]/(x^e - 1).
// Character values of subgroups of G are algebraic integers in Q(zeta_e) with
// e = exp(G), so the coset sums below stay integral; projecting to Q(zeta_e)
// is a ring map and happens once per value.
struct RootSum {
  std::vector<long> c;

  explicit RootSum(int e = 1) : c(e, 0) {}

  RootSum& operator+=(const RootSum& o) {
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
    return *this;
  }

  void add_product(const RootSum& a, const RootSum& b) {
    const std::size_t e = c.size();
    for (std::size_t i = 0; i < e; ++i) {
      if (a.c[i] == 0) continue;
      for (std::size_t j = 0; j < e; ++j)
        if (b.c[j] != 0) c[(i + j) % e] += a.c[i] * b.c[j];
    }
  }

  static RootSum of(const Cyclotomic& x, int e) {
    const Cyclotomic r = x.reduced();
    if (e % r.order() != 0)
      throw Error(ErrorCode::InvalidArgument, "value " + x.to_string() + " is not in Q(zeta_" +
                                                  std::to_string(e) + ")");
    RootSum s(e);
    const auto coeffs = r.lift(e).exponent_coefficients();
    for (int i = 0; i < e; ++i) {
      if (coeffs[i].get_den() != 1)
        throw Error(ErrorCode::InvalidArgument, "value " + x.to_string() + " is not an algebraic integer");
      s.c[i] = coeffs[i].get_num().get_si();
    }
    return s;
  }

  Cyclotomic value() const {
    std::vector<mpq_class> q(c.begin(), c.end());
    return Cyclotomic::from_exponents(static_cast<int>(c.size()), q);
  }
};

bool same_group(const GroupPtr& a, const GroupPtr& b) {
  return a == b || (a && b && a->same_table(*b));
}

void require_a_trivial(const GSet& base, const Subgroup& a) {
  if (!same_group(base.group_ptr(), a.parent_ptr()))
    throw Error(ErrorCode::GroupMismatch, "normal subgroup and base live on different groups");
  if (!base.fixed_by(a)) throw Error(ErrorCode::NotATrivial, "the normal subgroup moves a base point");
}

void require_character(const ClassFunction& chi, const GroupPtr& h, const std::string& what) {
  const auto table = character_table(h);
  std::vector<long> mults;
  try {
    mults = decompose(chi, table);
  } catch (const Error&) {
    throw Error(ErrorCode::InvalidArgument, what + " has non-integral multiplicities");
  }
  for (long m : mults)
    if (m < 0) throw Error(ErrorCode::InvalidArgument, what + " has a negative multiplicity");
}

}  // namespace

// GSet

GSet GSet::from_action(GroupPtr g, std::vector<std::vector<int>> action) {
  const int n = g->order();
  if (static_cast<int>(action.size()) != n)
    throw Error(ErrorCode::InvalidArgument, "action needs one row per group element");
  const int m = action.empty() ? 0 : static_cast<int>(action[0].size());
  for (const auto& row : action) {
    if (static_cast<int>(row.size()) != m)
      throw Error(ErrorCode::InvalidArgument, "action rows have different lengths");
    std::vector<bool> hit(m, false);
    for (int y : row) {
      if (y < 0 || y >= m || hit[y]) throw Error(ErrorCode::InvalidArgument, "action row is not a permutation");
      hit[y] = true;
    }
  }
  for (int x = 0; x < m; ++x)
    if (action[0][x] != x) throw Error(ErrorCode::InvalidArgument, "identity moves a point");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int x = 0; x < m; ++x)
        if (action[g->mul(a, b)][x] != action[a][action[b][x]])
          throw Error(ErrorCode::InvalidArgument, "point images are not compatible with the group law");
  GSet s;
  s.group_ = std::move(g);
  s.points_ = m;
  s.action_ = std::move(action);
  s.finish();
  return s;
}

GSet GSet::from_generator_images(GroupPtr g, int points, const std::vector<std::vector<int>>& images) {
  const auto& gens = g->generators();
  if (images.size() != gens.size())
    throw Error(ErrorCode::InvalidArgument, "need one point permutation per group generator (" +
                                                std::to_string(gens.size()) + ")");
  for (const auto& img : images) {
    if (static_cast<int>(img.size()) != points)
      throw Error(ErrorCode::InvalidArgument, "generator image has the wrong number of points");
    std::vector<bool> hit(points, false);
    for (int y : img) {
      if (y < 0 || y >= points || hit[y])
        throw Error(ErrorCode::InvalidArgument, "generator image is not a permutation");
      hit[y] = true;
    }
  }
  const int n = g->order();
  std::vector<std::vector<int>> action(n);
  action[0].resize(points);
  std::iota(action[0].begin(), action[0].end(), 0);
  std::vector<int> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const int h = queue[i];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const int sh = g->mul(gens[k], h);
      if (!action[sh].empty()) continue;
      action[sh].resize(points);
      for (int x = 0; x < points; ++x) action[sh][x] = images[k][action[h][x]];
      queue.push_back(sh);
    }
  }
  for (const auto& row : action)
    if (row.empty()) throw Error(ErrorCode::InvalidArgument, "generators do not generate the group");
  return from_action(std::move(g), std::move(action));
}

GSet GSet::cosets(const Subgroup& h) {
  const FiniteGroup& g = h.parent();
  const int n = g.order();
  std::vector<int> coset_of(n, -1);
  std::vector<int> mins;
  for (int x = 0; x < n; ++x) {
    if (coset_of[x] >= 0) continue;
    const int id = static_cast<int>(mins.size());
    mins.push_back(x);
    for (int y : h.members()) coset_of[g.mul(x, y)] = id;
  }
  const int m = static_cast<int>(mins.size());
  std::vector<std::vector<int>> action(n, std::vector<int>(m));
  for (int a = 0; a < n; ++a)
    for (int i = 0; i < m; ++i) action[a][i] = coset_of[g.mul(a, mins[i])];
  GSet s;
  s.group_ = h.parent_ptr();
  s.points_ = m;
  s.action_ = std::move(action);
  s.finish();
  return s;
}

GSet GSet::disjoint_union(const std::vector<GSet>& parts) {
  if (parts.empty()) throw Error(ErrorCode::InvalidArgument, "empty union has no group");
  GSet s;
  s.group_ = parts.front().group_;
  const int n = s.group_->order();
  s.action_.assign(n, {});
  for (const auto& p : parts) {
    if (!same_group(p.group_, s.group_))
      throw Error(ErrorCode::GroupMismatch, "union of G-sets over different groups");
    for (int a = 0; a < n; ++a)
      for (int x = 0; x < p.points_; ++x) s.action_[a].push_back(p.action_[a][x] + s.points_);
    s.points_ += p.points_;
  }
  s.finish();
  return s;
}

void GSet::finish() {
  const FiniteGroup& g = *group_;
  orbits_.clear();
  orbit_of_.assign(points_, -1);
  transporter_.assign(points_, -1);
  rep_stabilizers_.clear();
  for (int r = 0; r < points_; ++r) {
    if (orbit_of_[r] >= 0) continue;
    const int o = static_cast<int>(orbits_.size());
    std::vector<int> orbit;
    std::vector<int> stab;
    for (int a = 0; a < g.order(); ++a) {
      const int x = action_[a][r];
      if (x == r) stab.push_back(a);
      if (transporter_[x] < 0) {
        transporter_[x] = a;
        orbit_of_[x] = o;
        orbit.push_back(x);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits_.push_back(std::move(orbit));
    rep_stabilizers_.push_back(Subgroup::from_members(group_, std::move(stab)));
  }
}

Subgroup GSet::stabilizer(int x) const {
  const int o = orbit_of_[x];
  if (x == orbit_rep(o)) return rep_stabilizers_[o];
  std::vector<int> members;
  for (int a = 0; a < group_->order(); ++a)
    if (action_[a][x] == x) members.push_back(a);
  return Subgroup::from_members(group_, std::move(members));
}

bool GSet::fixed_by(const Subgroup& a) const {
  for (int y : a.members())
    for (int x = 0; x < points_; ++x)
      if (action_[y][x] != x) return false;
  return true;
}

// EquivariantBundle

EquivariantBundle::EquivariantBundle(GSet base, std::vector<ClassFunction> fibers)
    : base_(std::move(base)) {
  if (static_cast<int>(fibers.size()) != base_.num_orbits())
    throw Error(ErrorCode::InvalidArgument, "need one fiber character per orbit");
  for (int o = 0; o < base_.num_orbits(); ++o) {
    const GroupPtr& h = base_.rep_stabilizer(o).group();
    if (fibers[o].size() != static_cast<std::size_t>(h->num_classes()) ||
        !same_group(fibers[o].group_ptr(), h))
      throw Error(ErrorCode::GroupMismatch, "fiber character of orbit " + std::to_string(o) +
                                                " does not live on the stabilizer");
    require_character(fibers[o], h, "fiber of orbit " + std::to_string(o));
    fibers_.emplace_back(h, fibers[o].values());
  }
}

EquivariantBundle EquivariantBundle::from_multiplicities(GSet base, const std::vector<std::vector<long>>& mults) {
  if (static_cast<int>(mults.size()) != base.num_orbits())
    throw Error(ErrorCode::InvalidArgument, "need one multiplicity vector per orbit");
  std::vector<ClassFunction> fibers;
  for (int o = 0; o < base.num_orbits(); ++o) {
    const auto table = character_table(base.rep_stabilizer(o).group());
    if (static_cast<int>(mults[o].size()) != table.size())
      throw Error(ErrorCode::InvalidArgument, "orbit " + std::to_string(o) + " needs " +
                                                  std::to_string(table.size()) + " multiplicities");
    fibers.push_back(combine(table, mults[o]));
  }
  return EquivariantBundle(std::move(base), std::move(fibers));
}

int EquivariantBundle::rank(int x) const {
  return static_cast<int>(fibers_[base_.orbit_of(x)].degree().rational_value().get_num().get_si());
}

const Cyclotomic& EquivariantBundle::fiber_value(int x, int k) const {
  const FiniteGroup& g = base_.group();
  const int o = base_.orbit_of(x);
  const int t = base_.transporter(x);
  const int back = g.mul(g.inv(t), g.mul(k, t));
  const int local = base_.rep_stabilizer(o).local(back);
  if (local < 0) throw Error(ErrorCode::InvalidArgument, "element does not fix the point");
  return fibers_[o].at(local);
}

void EquivariantBundle::declare(int x, const ClassFunction& chi) {
  if (x < 0 || x >= base_.size()) throw Error(ErrorCode::InvalidArgument, "no such point");
  const Subgroup stab = base_.stabilizer(x);
  if (chi.size() != static_cast<std::size_t>(stab.group()->num_classes()) ||
      !same_group(chi.group_ptr(), stab.group()))
    throw Error(ErrorCode::GroupMismatch, "declared fiber does not live on the stabilizer");
  require_character(chi, stab.group(), "declared fiber at point " + std::to_string(x));
  declared_.insert_or_assign(x, ClassFunction(stab.group(), chi.values()));
}

FiberCharacter fiber_character(const EquivariantBundle& e, int x) {
  FiberCharacter f;
  f.stabilizer = e.base().stabilizer(x);
  const FiniteGroup& h = *f.stabilizer.group();
  std::vector<Cyclotomic> values;
  for (int c = 0; c < h.num_classes(); ++c) values.push_back(e.fiber_value(x, f.stabilizer.global(h.class_rep(c))));
  f.character = ClassFunction(f.stabilizer.group(), std::move(values));
  return f;
}

long isotypic_rank(const EquivariantBundle& e, const Subgroup& a, const ClassFunction& rho, int x) {
  require_a_trivial(e.base(), a);
  Cyclotomic sum;
  for (int i = 0; i < a.order(); ++i) sum += e.fiber_value(x, a.global(i)) * rho.at(i).conj();
  sum /= mpq_class(a.order());
  if (!sum.is_rational() || sum.rational_value().get_den() != 1 || sum.rational_value() < 0)
    throw Error(ErrorCode::Inconsistent, "isotypic multiplicity is not a natural number");
  return sum.rational_value().get_num().get_si();
}

namespace {

// Everything about one orbit record needed to evaluate its piece, in RootSum form.
struct PiecePlan {
  const IrrOrbitRecord* record;
  std::vector<int> cosets;      // minimal elements of the left cosets g G_rho
  std::vector<RootSum> rho_bar; // conj(rho(a)) by local index of A
  mpq_class scale;              // deg(rho) / |A|
};

struct Evaluator {
  const EquivariantBundle& bundle;
  const FiniteGroup& g;
  int e;
  std::vector<std::vector<RootSum>> fiber;  // [orbit][class of the rep stabilizer]
  std::vector<PiecePlan> plans;

  Evaluator(const EquivariantBundle& b, const std::vector<IrrOrbitRecord>& orbits)
      : bundle(b), g(b.base().group()), e(g.exponent()) {
    const GSet& base = b.base();
    for (int o = 0; o < base.num_orbits(); ++o) {
      const auto& chi = b.orbit_fiber(o);
      std::vector<RootSum> v;
      for (std::size_t c = 0; c < chi.size(); ++c) v.push_back(RootSum::of(chi[static_cast<int>(c)], e));
      fiber.push_back(std::move(v));
    }
    for (const auto& rec : orbits) {
      PiecePlan p;
      p.record = &rec;
      const Subgroup& a = rec.obstruction.normal;
      const ClassFunction& rho = rec.obstruction.rho.character;
      for (int i = 0; i < a.order(); ++i) p.rho_bar.push_back(RootSum::of(rho.at(i).conj(), e));
      p.scale = mpq_class(rec.obstruction.rho.dimension, a.order());
      p.scale.canonicalize();
      std::vector<bool> seen(g.order(), false);
      for (int x = 0; x < g.order(); ++x) {
        if (seen[x]) continue;
        p.cosets.push_back(x);
        for (int s : rec.stabilizer.members()) seen[g.mul(x, s)] = true;
      }
      plans.push_back(std::move(p));
    }
  }

  const RootSum& value(int y, int z) const {
    const GSet& base = bundle.base();
    const int o = base.orbit_of(y);
    const int t = base.transporter(y);
    const Subgroup& stab = base.rep_stabilizer(o);
    const int local = stab.local(g.mul(g.inv(t), g.mul(z, t)));
    return fiber[o][stab.group()->class_of(local)];
  }

  // piece of plan p at point x, evaluated at k in Stab(x)
  Cyclotomic piece(const PiecePlan& p, int x, int k) const {
    const Subgroup& a = p.record->obstruction.normal;
    const Subgroup& grho = p.record->stabilizer;
    RootSum acc(e);
    for (int c : p.cosets) {
      const int ci = g.inv(c);
      const int h = g.mul(ci, g.mul(k, c));
      if (!grho.contains(h)) continue;
      const int y = bundle.base().act(ci, x);
      for (int i = 0; i < a.order(); ++i) acc.add_product(p.rho_bar[i], value(y, g.mul(h, a.global(i))));
    }
    return acc.value() * p.scale;
  }
};

}  // namespace

FiberCharacter induction_piece_character(const EquivariantBundle& e, const IrrOrbitRecord& orbit, int x) {
  require_a_trivial(e.base(), orbit.obstruction.normal);
  std::vector<IrrOrbitRecord> one{orbit};
  Evaluator ev(e, one);
  FiberCharacter f;
  f.stabilizer = e.base().stabilizer(x);
  const FiniteGroup& h = *f.stabilizer.group();
  std::vector<Cyclotomic> values;
  for (int c = 0; c < h.num_classes(); ++c)
    values.push_back(ev.piece(ev.plans[0], x, f.stabilizer.global(h.class_rep(c))));
  f.character = ClassFunction(f.stabilizer.group(), std::move(values));
  return f;
}

VerificationReport verify_decomposition(const EquivariantBundle& e, const std::vector<IrrOrbitRecord>& orbits) {
  if (orbits.empty()) throw Error(ErrorCode::InvalidArgument, "no orbit records");
  require_a_trivial(e.base(), orbits.front().obstruction.normal);
  Evaluator ev(e, orbits);
  const GSet& base = e.base();
  VerificationReport report;
  report.ok = true;
  for (int x = 0; x < base.size(); ++x) {
    PointCheck pc;
    pc.point = x;
    const Subgroup stab = base.stabilizer(x);
    const FiniteGroup& h = *stab.group();
    auto it = e.declared().find(x);
    pc.declared = it != e.declared().end();
    pc.fiber = pc.declared ? it->second : fiber_character(e, x).character;
    pc.sum = ClassFunction::zero(pc.fiber.group_ptr());
    for (const auto& plan : ev.plans) {
      std::vector<Cyclotomic> values;
      for (int c = 0; c < h.num_classes(); ++c) values.push_back(ev.piece(plan, x, stab.global(h.class_rep(c))));
      pc.pieces.emplace_back(pc.fiber.group_ptr(), std::move(values));
      pc.sum += pc.pieces.back();
    }
    pc.ok = pc.sum == pc.fiber;
    report.ok = report.ok && pc.ok;
    report.points.push_back(std::move(pc));
  }
  return report;
}

VerificationReport verify_decomposition(const EquivariantBundle& e, const Subgroup& a,
                                        const CliffordOptions& opts) {
  require_a_trivial(e.base(), a);
  return verify_decomposition(e, orbit_decomposition(a, opts));
}

std::vector<TwistedPiece> twisted_pieces(const EquivariantBundle& e, const std::vector<IrrOrbitRecord>& orbits) {
  std::vector<TwistedPiece> out;
  for (const auto& rec : orbits) {
    TwistedPiece t;
    t.representative = rec.representative;
    for (int x = 0; x < e.base().size(); ++x)
      t.ranks.push_back(isotypic_rank(e, rec.obstruction.normal, rec.obstruction.rho.character, x));
    out.push_back(std::move(t));
  }
  return out;
}

// BundleSampler

BundleSampler::BundleSampler(const Subgroup& a) : a_(a) {
  for (const auto& h : all_subgroups(a.parent_ptr()))
    if (a.is_subgroup_of(h)) {
      candidates_.push_back(h);
      tables_.push_back(character_table(h.group()));
    }
}

EquivariantBundle BundleSampler::sample(std::mt19937_64& rng, int max_orbits, int max_multiplicity) const {
  const int k = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_orbits));
  std::vector<GSet> parts;
  std::vector<const CharacterTable*> tables;
  for (int i = 0; i < k; ++i) {
    const std::size_t pick = rng() % candidates_.size();
    parts.push_back(GSet::cosets(candidates_[pick]));
    tables.push_back(&tables_[pick]);
  }
  GSet base = GSet::disjoint_union(parts);
  std::vector<ClassFunction> fibers;
  for (int o = 0; o < k; ++o) {
    const CharacterTable& t = *tables[o];
    std::vector<long> m(t.size());
    bool any = false;
    for (auto& v : m) {
      v = static_cast<long>(rng() % static_cast<std::uint64_t>(max_multiplicity + 1));
      any = any || v != 0;
    }
    if (!any) m[rng() % m.size()] = 1;
    const auto chi = combine(t, m);
    fibers.emplace_back(base.rep_stabilizer(o).group(), chi.values());
  }
  return EquivariantBundle(std::move(base), std::move(fibers));
}

}  // namespace ekt
