#include "ekt/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <unordered_map>

#include "ekt/error.hpp"

namespace ekt {

namespace {

struct PermHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int v : p) {
      h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

Permutation compose(const Permutation& g, const Permutation& h) {
  Permutation r(h.size());
  for (std::size_t x = 0; x < h.size(); ++x) r[x] = g[h[x]];
  return r;
}

void check_permutation(int degree, const Permutation& p) {
  if (static_cast<int>(p.size()) != degree)
    throw Error(ErrorCode::InvalidPermutation, "wrong length " + std::to_string(p.size()));
  std::vector<char> seen(degree, 0);
  for (int v : p) {
    if (v < 0 || v >= degree || seen[v])
      throw Error(ErrorCode::InvalidPermutation, "not a bijection on 0.." +
                                                     std::to_string(degree - 1));
    seen[v] = 1;
  }
}

}  // namespace

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ClosureOverflow: return "ClosureOverflow";
    case ErrorCode::InvalidPermutation: return "InvalidPermutation";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::NotSubgroup: return "NotSubgroup";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::GroupMismatch: return "GroupMismatch";
    case ErrorCode::SplitFailure: return "SplitFailure";
    case ErrorCode::NumericalDegeneracy: return "NumericalDegeneracy";
    case ErrorCode::SnapFailure: return "SnapFailure";
    case ErrorCode::NonScalar: return "NonScalar";
    case ErrorCode::NotStabilized: return "NotStabilized";
    case ErrorCode::InvalidCocycle: return "InvalidCocycle";
    case ErrorCode::NotATrivial: return "NotATrivial";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::NotOdd: return "NotOdd";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Inconsistent: return "Inconsistent";
  }
  return "Unknown";
}

int FiniteGroup::pow(int a, long long k) const {
  const int n = element_order_[a];
  k %= n;
  if (k < 0) k += n;
  int r = 0;
  int base = a;
  while (k > 0) {
    if (k & 1) r = mul(r, base);
    base = mul(base, base);
    k >>= 1;
  }
  return r;
}

void FiniteGroup::finish() {
  const int n = order_;
  inverse_.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (mul(a, b) == 0) {
        inverse_[a] = b;
        break;
      }

  element_order_.assign(n, 0);
  exponent_ = 1;
  for (int a = 0; a < n; ++a) {
    int k = 1;
    for (int x = a; x != 0; x = mul(x, a)) ++k;
    element_order_[a] = k;
    exponent_ = std::lcm(exponent_, k);
  }

  classes_.clear();
  class_of_.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    if (class_of_[x] >= 0) continue;
    const int c = static_cast<int>(classes_.size());
    std::vector<int> cls;
    for (int g = 0; g < n; ++g) {
      const int y = conj(g, x);
      if (class_of_[y] < 0) {
        class_of_[y] = c;
        cls.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes_.push_back(std::move(cls));
  }
}

GroupPtr FiniteGroup::from_table(std::string name, std::vector<std::vector<int>> table) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "empty multiplication table");
  for (const auto& row : table)
    if (static_cast<int>(row.size()) != n)
      throw Error(ErrorCode::InvalidArgument, "multiplication table is not square");

  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->name_ = std::move(name);
  g->order_ = n;
  g->table_.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    std::vector<char> seen(n, 0);
    for (int b = 0; b < n; ++b) {
      const int v = table[a][b];
      if (v < 0 || v >= n || seen[v])
        throw Error(ErrorCode::InvalidArgument, "table row is not a permutation");
      seen[v] = 1;
      g->table_[static_cast<std::size_t>(a) * n + b] = v;
    }
  }
  for (int a = 0; a < n; ++a)
    if (g->mul(0, a) != a || g->mul(a, 0) != a)
      throw Error(ErrorCode::InvalidArgument, "element 0 is not the identity");

  auto assoc = [&](int a, int b, int c) {
    if (g->mul(g->mul(a, b), c) != g->mul(a, g->mul(b, c)))
      throw Error(ErrorCode::InvalidArgument, "table is not associative");
  };
  if (n <= 512) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) assoc(a, b, c);
  } else {
    std::mt19937_64 rng(0x5EED);
    for (int i = 0; i < 200000; ++i)
      assoc(static_cast<int>(rng() % n), static_cast<int>(rng() % n),
            static_cast<int>(rng() % n));
  }
  // Columns must also be permutations for a group (right cancellation).
  for (int b = 0; b < n; ++b) {
    std::vector<char> seen(n, 0);
    for (int a = 0; a < n; ++a) {
      const int v = g->mul(a, b);
      if (seen[v]) throw Error(ErrorCode::InvalidArgument, "table column is not a permutation");
      seen[v] = 1;
    }
  }
  g->finish();
  return g;
}

GroupPtr group_from_generators(int degree, const std::vector<Permutation>& generators,
                               std::size_t max_order, std::string name) {
  if (degree <= 0) throw Error(ErrorCode::InvalidPermutation, "degree must be positive");
  for (const auto& p : generators) check_permutation(degree, p);

  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0);

  std::vector<Permutation> elems{id};
  std::unordered_map<Permutation, int, PermHash> index{{id, 0}};
  // elements discovered as gen[k] * elems[parent]
  std::vector<std::pair<int, int>> origin{{-1, -1}};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t k = 0; k < generators.size(); ++k) {
      Permutation p = compose(generators[k], elems[i]);
      if (index.find(p) != index.end()) continue;
      if (elems.size() >= max_order)
        throw Error(ErrorCode::ClosureOverflow,
                    "closure exceeds " + std::to_string(max_order) + " elements");
      index.emplace(p, static_cast<int>(elems.size()));
      elems.push_back(std::move(p));
      origin.emplace_back(static_cast<int>(k), static_cast<int>(i));
    }
  }

  const int n = static_cast<int>(elems.size());
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->name_ = std::move(name);
  g->order_ = n;
  g->table_.assign(static_cast<std::size_t>(n) * n, -1);

  // right multiplication by each generator, via lookup
  std::vector<std::vector<int>> right(generators.size(), std::vector<int>(n));
  for (std::size_t k = 0; k < generators.size(); ++k) {
    for (int i = 0; i < n; ++i) right[k][i] = index.at(compose(elems[i], generators[k]));
    g->generators_.push_back(index.at(generators[k]));
  }
  auto at = [&](int a, int b) -> int& { return g->table_[static_cast<std::size_t>(a) * n + b]; };
  for (int i = 0; i < n; ++i) at(i, 0) = i;
  // column j = gen_k * parent: i * j = (i * gen_k) * parent
  for (int j = 1; j < n; ++j) {
    const auto [k, parent] = origin[j];
    for (int i = 0; i < n; ++i) at(i, j) = at(right[k][i], parent);
  }
  g->permutations_ = std::move(elems);
  g->finish();
  return g;
}

// ---------------------------------------------------------------- Subgroup

void Subgroup::build_local() {
  const int n = parent_->order();
  local_of_.assign(n, -1);
  for (std::size_t i = 0; i < members_.size(); ++i) local_of_[members_[i]] = static_cast<int>(i);

  const int m = static_cast<int>(members_.size());
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->name_ = parent_->name() + ".sub" + std::to_string(m);
  g->order_ = m;
  g->table_.resize(static_cast<std::size_t>(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      g->table_[static_cast<std::size_t>(a) * m + b] =
          local_of_[parent_->mul(members_[a], members_[b])];
  for (int x : generators_) g->generators_.push_back(local_of_[x]);
  if (!parent_->permutations().empty())
    for (int x : members_) g->permutations_.push_back(parent_->permutations()[x]);
  g->finish();
  local_ = std::move(g);
}

Subgroup Subgroup::generated(GroupPtr parent, const std::vector<int>& generators) {
  const int n = parent->order();
  std::vector<char> in(n, 0);
  std::vector<int> members{0};
  in[0] = 1;
  for (int x : generators)
    if (x < 0 || x >= n) throw Error(ErrorCode::InvalidArgument, "generator index out of range");
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (int x : generators) {
      const int y = parent->mul(members[i], x);
      if (!in[y]) {
        in[y] = 1;
        members.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  Subgroup h;
  h.parent_ = std::move(parent);
  h.members_ = std::move(members);
  h.generators_ = generators;
  h.build_local();
  return h;
}

Subgroup Subgroup::from_members(GroupPtr parent, std::vector<int> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  const int n = parent->order();
  std::vector<char> in(n, 0);
  for (int x : members) {
    if (x < 0 || x >= n) throw Error(ErrorCode::NotSubgroup, "element index out of range");
    in[x] = 1;
  }
  if (members.empty() || members.front() != 0)
    throw Error(ErrorCode::NotSubgroup, "identity missing");
  for (int a : members) {
    if (!in[parent->inv(a)]) throw Error(ErrorCode::NotSubgroup, "not closed under inverse");
    for (int b : members)
      if (!in[parent->mul(a, b)]) throw Error(ErrorCode::NotSubgroup, "not closed under product");
  }
  Subgroup h;
  h.parent_ = std::move(parent);
  h.generators_ = members;
  h.members_ = std::move(members);
  h.build_local();
  return h;
}

Subgroup Subgroup::whole(GroupPtr parent) {
  std::vector<int> all(parent->order());
  std::iota(all.begin(), all.end(), 0);
  Subgroup h;
  h.parent_ = std::move(parent);
  h.generators_ = h.parent_->generators().empty() ? all : h.parent_->generators();
  h.members_ = std::move(all);
  h.build_local();
  return h;
}

Subgroup Subgroup::trivial(GroupPtr parent) {
  Subgroup h;
  h.parent_ = std::move(parent);
  h.members_ = {0};
  h.build_local();
  return h;
}

bool Subgroup::is_normal() const {
  const auto& gens = generators_.empty() ? members_ : generators_;
  for (int g = 0; g < parent_->order(); ++g)
    for (int x : gens)
      if (!contains(parent_->conj(g, x))) return false;
  return true;
}

bool Subgroup::is_subgroup_of(const Subgroup& other) const {
  if (parent_ != other.parent_) return false;
  return std::all_of(members_.begin(), members_.end(),
                     [&](int x) { return other.contains(x); });
}

// ----------------------------------------------------------- constructions

QuotientGroup quotient(const Subgroup& normal) {
  if (!normal.is_normal())
    throw Error(ErrorCode::NotNormal, "subgroup of order " + std::to_string(normal.order()) +
                                          " is not normal in " + normal.parent().name());
  const FiniteGroup& g = normal.parent();
  const int n = g.order();
  QuotientGroup q;
  q.projection_.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    if (q.projection_[x] >= 0) continue;
    const int c = static_cast<int>(q.section_.size());
    q.section_.push_back(x);
    for (int a : normal.members()) q.projection_[g.mul(x, a)] = c;
  }
  const int m = static_cast<int>(q.section_.size());
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      table[a][b] = q.projection_[g.mul(q.section_[a], q.section_[b])];

  auto qg = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  qg->name_ = g.name() + "/N" + std::to_string(normal.order());
  qg->order_ = m;
  qg->table_.resize(static_cast<std::size_t>(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) qg->table_[static_cast<std::size_t>(a) * m + b] = table[a][b];
  qg->finish();
  q.quotient_ = std::move(qg);
  return q;
}

Subgroup normalizer(const Subgroup& h) {
  const FiniteGroup& g = h.parent();
  const auto& gens = h.generators().empty() ? h.members() : h.generators();
  std::vector<int> members;
  for (int x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (int y : gens)
      if (!h.contains(g.conj(x, y))) {
        ok = false;
        break;
      }
    if (ok) members.push_back(x);
  }
  return Subgroup::from_members(h.parent_ptr(), std::move(members));
}

Subgroup center(const GroupPtr& g) {
  std::vector<int> members;
  for (int c = 0; c < g->num_classes(); ++c)
    if (g->class_size(c) == 1) members.push_back(g->class_rep(c));
  return Subgroup::from_members(g, std::move(members));
}

Subgroup conjugate(const Subgroup& h, int x) {
  std::vector<int> members;
  members.reserve(h.members().size());
  for (int y : h.members()) members.push_back(h.parent().conj(x, y));
  std::vector<int> gens;
  for (int y : h.generators()) gens.push_back(h.parent().conj(x, y));
  return Subgroup::generated(h.parent_ptr(), gens.empty() ? members : gens);
}

std::vector<Subgroup> all_subgroups(const GroupPtr& g) {
  if (g->order() > 512)
    throw Error(ErrorCode::CapExceeded, "subgroup enumeration is limited to order 512");
  const int n = g->order();
  // one generator per cyclic subgroup
  std::set<std::vector<int>> cyclic_seen;
  std::vector<int> cyclic_gens;
  for (int x = 1; x < n; ++x) {
    std::vector<int> c{0};
    for (int y = x; y != 0; y = g->mul(y, x)) c.push_back(y);
    std::sort(c.begin(), c.end());
    if (cyclic_seen.insert(c).second) cyclic_gens.push_back(x);
  }

  std::map<std::vector<int>, std::vector<int>> found;  // members -> generators
  std::vector<std::vector<int>> work{{0}};
  found.emplace(std::vector<int>{0}, std::vector<int>{});
  for (std::size_t i = 0; i < work.size(); ++i) {
    const std::vector<int> members = work[i];
    const std::vector<int> gens = found.at(members);
    std::vector<char> in(n, 0);
    for (int x : members) in[x] = 1;
    for (int x : cyclic_gens) {
      if (in[x]) continue;
      std::vector<int> ngens = gens;
      ngens.push_back(x);
      Subgroup s = Subgroup::generated(g, ngens);
      if (found.emplace(s.members(), ngens).second) work.push_back(s.members());
    }
  }
  std::vector<std::pair<std::vector<int>, std::vector<int>>> entries(found.begin(), found.end());
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  std::vector<Subgroup> out;
  out.reserve(entries.size());
  for (auto& [members, gens] : entries) {
    Subgroup s = Subgroup::generated(g, gens);
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<std::vector<Subgroup>> subgroup_classes(const GroupPtr& g) {
  std::vector<Subgroup> subs = all_subgroups(g);
  std::map<std::vector<int>, int> position;
  for (std::size_t i = 0; i < subs.size(); ++i) position[subs[i].members()] = static_cast<int>(i);
  std::vector<char> used(subs.size(), 0);
  std::vector<std::vector<Subgroup>> out;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (used[i]) continue;
    std::set<int> cls;
    for (int x = 0; x < g->order(); ++x) {
      std::vector<int> members;
      for (int y : subs[i].members()) members.push_back(g->conj(x, y));
      std::sort(members.begin(), members.end());
      cls.insert(position.at(members));
    }
    std::vector<Subgroup> group_class;
    for (int j : cls) {
      used[j] = 1;
      group_class.push_back(subs[j]);
    }
    out.push_back(std::move(group_class));
  }
  return out;
}

std::vector<Subgroup> normal_subgroups(const GroupPtr& g) {
  std::vector<Subgroup> out;
  for (auto& s : all_subgroups(g))
    if (s.is_normal()) out.push_back(std::move(s));
  return out;
}

}  // namespace ekt
