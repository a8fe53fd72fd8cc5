#include "ekt/clifford.hpp"

#include <algorithm>
#include <set>

#include "ekt/error.hpp"

namespace ekt {

ClassFunction conjugate_character(const ClassFunction& chi, const Subgroup& a, int g) {
  const FiniteGroup& G = a.parent();
  const FiniteGroup& A = *a.group();
  const int gi = G.inv(g);
  std::vector<Cyclotomic> values;
  values.reserve(A.num_classes());
  for (int c = 0; c < A.num_classes(); ++c)
    values.push_back(chi.at(a.local(G.conj(gi, a.global(A.class_rep(c))))));
  return ClassFunction(a.group(), std::move(values));
}

int irr_action(const Subgroup& a, const CharacterTable& table_a, int g, int tau) {
  const int k = table_a.find(conjugate_character(table_a.rows[tau], a, g));
  if (k < 0) throw Error(ErrorCode::Inconsistent, "conjugate of an irreducible is not in the table");
  return k;
}

std::vector<std::vector<int>> irr_action_table(const Subgroup& a, const CharacterTable& table_a) {
  if (!a.is_normal()) throw Error(ErrorCode::NotNormal, "G acts on Irr(A) only for normal A");
  const FiniteGroup& G = a.parent();
  std::vector<std::vector<int>> act(G.order(), std::vector<int>(table_a.size()));
  for (int g = 0; g < G.order(); ++g)
    for (int t = 0; t < table_a.size(); ++t) act[g][t] = irr_action(a, table_a, g, t);
  return act;
}

Subgroup irr_stabilizer(const Subgroup& a, const ClassFunction& chi) {
  std::vector<int> members;
  for (int g = 0; g < a.parent().order(); ++g)
    if (conjugate_character(chi, a, g) == chi) members.push_back(g);
  return Subgroup::from_members(a.parent_ptr(), std::move(members));
}

bool extension_exists(const Subgroup& stabilizer, const Subgroup& a, const ClassFunction& chi) {
  if (!a.is_subgroup_of(stabilizer))
    throw Error(ErrorCode::NotSubgroup, "normal subgroup is not inside the stabilizer");
  for (int g : stabilizer.members())
    if (conjugate_character(chi, a, g) != chi)
      throw Error(ErrorCode::NotStabilized, "element " + std::to_string(g) + " moves the character");
  std::vector<int> local;
  for (int x : a.members()) local.push_back(stabilizer.local(x));
  const auto inner = Subgroup::from_members(stabilizer.group(), std::move(local));
  const auto table = character_table(stabilizer.group());
  for (const auto& row : table.rows)
    if (row.degree() == chi.degree() && restrict(row, inner) == chi) return true;
  return false;
}

int omega_regular_count(const FiniteGroup& q, const std::vector<std::vector<int>>& omega,
                        int root_order) {
  if (!is_normalized_cocycle(q, omega, root_order))
    throw Error(ErrorCode::InvalidCocycle, "table is not a normalized 2-cocycle");
  int count = 0;
  for (int c = 0; c < q.num_classes(); ++c) {
    const int x = q.class_rep(c);
    bool regular = true;
    for (int y = 0; y < q.order() && regular; ++y)
      if (q.mul(x, y) == q.mul(y, x))
        regular = (omega[x][y] - omega[y][x]) % root_order == 0;
    if (regular) ++count;
  }
  return count;
}

namespace {

std::vector<IrrOrbitRecord> decompose_orbits(const Subgroup& a, const CharacterTable& table_g,
                                             const CharacterTable& table_a,
                                             const CliffordOptions& opts) {
  const auto reps = matrix_irreps(table_a, opts.rep);
  const auto act = irr_action_table(a, table_a);
  std::vector<ClassFunction> restricted;
  for (const auto& chi : table_g.rows) restricted.push_back(restrict(chi, a));

  std::vector<IrrOrbitRecord> out;
  std::vector<bool> seen(table_a.size(), false);
  for (int tau = 0; tau < table_a.size(); ++tau) {
    if (seen[tau]) continue;
    IrrOrbitRecord rec;
    rec.representative = tau;
    std::set<int> orbit;
    for (const auto& row : act) orbit.insert(row[tau]);
    for (int t : orbit) seen[t] = true;
    rec.orbit.assign(orbit.begin(), orbit.end());
    rec.obstruction = obstruction_cocycle(a, reps[tau], opts.rep);
    rec.stabilizer = rec.obstruction.stabilizer;
    for (int i = 0; i < table_g.size(); ++i)
      if (multiplicity(restricted[i], table_a.rows[tau]) > 0) rec.lying_over.push_back(i);
    rec.twisted_count = static_cast<int>(rec.lying_over.size());
    rec.regular_count = omega_regular_count(*rec.obstruction.quotient.group(), rec.obstruction.omega,
                                            rec.obstruction.root_order);
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace

std::vector<IrrOrbitRecord> orbit_decomposition(const Subgroup& a, const CliffordOptions& opts) {
  if (!a.is_normal()) throw Error(ErrorCode::NotNormal, "orbit decomposition needs a normal subgroup");
  const CharacterOptions co{opts.max_order};
  return decompose_orbits(a, character_table(a.parent_ptr(), co), character_table(a.group(), co), opts);
}

DecompositionReport k_decomposition_report(const Subgroup& a, const CliffordOptions& opts) {
  if (!a.is_normal()) throw Error(ErrorCode::NotNormal, "decomposition needs a normal subgroup");
  const CharacterOptions co{opts.max_order};
  DecompositionReport r;
  r.group = a.parent_ptr();
  r.normal = a;
  r.table_g = character_table(a.parent_ptr(), co);
  r.table_a = character_table(a.group(), co);
  r.orbits = decompose_orbits(a, r.table_g, r.table_a, opts);
  r.total_irr = r.table_g.size();

  std::vector<int> owner(r.total_irr, 0);
  bool counts_agree = true;
  for (const auto& o : r.orbits) {
    r.sum_of_counts += o.twisted_count;
    r.sum_of_regular_counts += o.regular_count;
    for (int i : o.lying_over) ++owner[i];
    if (o.twisted_count != o.regular_count) {
      counts_agree = false;
      r.warnings.push_back("orbit of irreducible " + std::to_string(o.representative) + ": " +
                           std::to_string(o.twisted_count) + " irreducibles lie over it but " +
                           std::to_string(o.regular_count) + " classes are omega-regular");
    }
    const int nc = o.obstruction.quotient.group()->num_classes();
    const bool all_regular = o.regular_count == nc;
    if (o.obstruction.trivial != all_regular)
      r.warnings.push_back("orbit of irreducible " + std::to_string(o.representative) +
                           ": extension test says " + (o.obstruction.trivial ? "trivial" : "nontrivial") +
                           " but " + std::to_string(o.regular_count) + " of " + std::to_string(nc) +
                           " classes are omega-regular");
    const FiniteGroup& q = *o.obstruction.quotient.group();
    if (o.obstruction.trivial != is_coboundary(q, o.obstruction.omega, o.obstruction.root_order))
      r.warnings.push_back("orbit of irreducible " + std::to_string(o.representative) +
                           ": extension test and the snapped cocycle disagree on triviality");
  }
  r.partition_ok = std::all_of(owner.begin(), owner.end(), [](int k) { return k == 1; });
  r.consistent = r.partition_ok && counts_agree && r.sum_of_counts == r.total_irr;
  return r;
}

}  // namespace ekt
