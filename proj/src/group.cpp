#include "grouplab/group.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "grouplab/error.hpp"

namespace grouplab {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidTable: return "InvalidTable";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::ParentMismatch: return "ParentMismatch";
    case ErrorKind::NotInvariant: return "NotInvariant";
    case ErrorKind::NotInKernel: return "NotInKernel";
    case ErrorKind::Incompatible: return "Incompatible";
    case ErrorKind::TrivialOrientation: return "TrivialOrientation";
    case ErrorKind::AbelianGroup: return "AbelianGroup";
    case ErrorKind::PNotSubgroup: return "PNotSubgroup";
    case ErrorKind::ContextMismatch: return "ContextMismatch";
    case ErrorKind::NotAUnit: return "NotAUnit";
  }
  return "Unknown";
}

std::shared_ptr<const FiniteGroup> FiniteGroup::from_table(std::string name,
                                                           const std::vector<std::vector<int>>& table,
                                                           int full_check_bound) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw Error(ErrorKind::InvalidTable, "empty table");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n)
      throw Error(ErrorKind::InvalidTable, "table is not square");
    for (int v : row)
      if (v < 0 || v >= n) throw Error(ErrorKind::InvalidTable, "entry out of range");
  }

  // Latin square.
  for (int a = 0; a < n; ++a) {
    std::vector<bool> row_seen(n), col_seen(n);
    for (int b = 0; b < n; ++b) {
      if (row_seen[table[a][b]] || col_seen[table[b][a]])
        throw Error(ErrorKind::InvalidTable, "not a Latin square");
      row_seen[table[a][b]] = true;
      col_seen[table[b][a]] = true;
    }
  }

  int e = -1;
  for (int a = 0; a < n && e < 0; ++a) {
    bool ok = true;
    for (int b = 0; b < n && ok; ++b) ok = table[a][b] == b && table[b][a] == b;
    if (ok) e = a;
  }
  if (e < 0) throw Error(ErrorKind::InvalidTable, "no two-sided identity");

  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->n_ = n;
  g->identity_ = e;
  g->name_ = std::move(name);
  g->table_.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g->table_[static_cast<std::size_t>(a) * n + b] = table[a][b];

  g->inv_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (table[a][b] == e) {
        if (table[b][a] != e) throw Error(ErrorKind::InvalidTable, "left and right inverses differ");
        g->inv_[a] = b;
      }
    }
  }

  auto assoc = [&](int a, int b, int c) {
    return g->mul(g->mul(a, b), c) == g->mul(a, g->mul(b, c));
  };
  if (n <= full_check_bound) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (!assoc(a, b, c)) throw Error(ErrorKind::InvalidTable, "multiplication is not associative");
  } else {
    std::mt19937 rng(0x5eed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int t = 0; t < 1000; ++t)
      if (!assoc(pick(rng), pick(rng), pick(rng)))
        throw Error(ErrorKind::InvalidTable, "multiplication is not associative");
  }
  return g;
}

Element FiniteGroup::pow(Element a, long long k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  Element result = identity_;
  Element base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

std::vector<std::vector<int>> FiniteGroup::table() const {
  std::vector<std::vector<int>> t(n_, std::vector<int>(n_));
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) t[a][b] = mul(a, b);
  return t;
}

GroupPtr cyclic(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "cyclic order must be positive");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return FiniteGroup::from_table("C" + std::to_string(n), t);
}

GroupPtr dihedral(int order) {
  if (order < 2 || order % 2 != 0)
    throw Error(ErrorKind::InvalidArgument, "dihedral order must be even and >= 2");
  const int n = order / 2;
  std::vector<std::vector<int>> t(order, std::vector<int>(order));
  for (int x = 0; x < order; ++x) {
    for (int y = 0; y < order; ++y) {
      const int a = x % n, f = x / n, b = y % n, g = y / n;
      // r^a s^f r^b s^g = r^(a + (-1)^f b) s^(f+g)
      const int k = f == 0 ? (a + b) % n : ((a - b) % n + n) % n;
      t[x][y] = k + ((f + g) % 2) * n;
    }
  }
  return FiniteGroup::from_table("D" + std::to_string(order), t);
}

GroupPtr quaternion(int order) {
  if (order < 8 || order % 4 != 0)
    throw Error(ErrorKind::InvalidArgument, "quaternion order must be a multiple of 4, at least 8");
  const int m = order / 4;
  const int cyc = 2 * m;
  std::vector<std::vector<int>> t(order, std::vector<int>(order));
  for (int x = 0; x < order; ++x) {
    for (int y = 0; y < order; ++y) {
      const int a = x % cyc, f = x / cyc, b = y % cyc, g = y / cyc;
      int k = f == 0 ? a + b : a - b;
      int h = f + g;
      if (h == 2) {
        k += m;  // b^2 = a^m
        h = 0;
      }
      t[x][y] = ((k % cyc) + cyc) % cyc + h * cyc;
    }
  }
  return FiniteGroup::from_table("Q" + std::to_string(order), t);
}

GroupPtr direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const int na = a.order(), nb = b.order(), n = na * nb;
  if (a.identity() != 0 || b.identity() != 0)
    throw Error(ErrorKind::InvalidArgument, "direct product factors must have identity 0");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      t[x][y] = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
  return FiniteGroup::from_table(a.name() + "x" + b.name(), t);
}

SubgroupSet::SubgroupSet(GroupPtr parent, std::vector<Element> members)
    : parent_(std::move(parent)), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  const int n = parent_->order();
  mask_.assign(n, false);
  for (Element g : members_) {
    if (g < 0 || g >= n) throw Error(ErrorKind::InvalidArgument, "subgroup member out of range");
    mask_[g] = true;
  }
  if (!mask_[parent_->identity()]) throw Error(ErrorKind::InvalidArgument, "subgroup lacks identity");
  for (Element a : members_) {
    if (!mask_[parent_->inv(a)]) throw Error(ErrorKind::InvalidArgument, "subgroup not closed under inverse");
    for (Element b : members_)
      if (!mask_[parent_->mul(a, b)])
        throw Error(ErrorKind::InvalidArgument, "subgroup not closed under multiplication");
  }
}

bool is_abelian(const FiniteGroup& g) {
  for (int a = 0; a < g.order(); ++a)
    for (int b = a + 1; b < g.order(); ++b)
      if (!g.commute(a, b)) return false;
  return true;
}

int element_order(const FiniteGroup& g, Element x) {
  int k = 1;
  for (Element y = x; y != g.identity(); y = g.mul(y, x)) ++k;
  return k;
}

SubgroupSet center(const GroupPtr& g) {
  std::vector<Element> z;
  for (int a = 0; a < g->order(); ++a) {
    bool central = true;
    for (int b = 0; b < g->order() && central; ++b) central = g->commute(a, b);
    if (central) z.push_back(a);
  }
  return SubgroupSet(g, std::move(z));
}

std::vector<Element> commutator_set(const FiniteGroup& g) {
  std::vector<bool> seen(g.order());
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b) seen[g.commutator(a, b)] = true;
  std::vector<Element> out;
  for (int a = 0; a < g.order(); ++a)
    if (seen[a]) out.push_back(a);
  return out;
}

SubgroupSet subgroup_generated(const GroupPtr& g, std::span<const Element> gens) {
  std::vector<bool> in(g->order());
  std::vector<Element> members{g->identity()};
  in[g->identity()] = true;
  // Finite group: closure under right multiplication by generators suffices.
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (Element s : gens) {
      const Element y = g->mul(members[i], s);
      if (!in[y]) {
        in[y] = true;
        members.push_back(y);
      }
    }
  }
  return SubgroupSet(g, std::move(members));
}

bool is_normal(const SubgroupSet& h) {
  const auto& g = *h.parent();
  for (int x = 0; x < g.order(); ++x)
    for (Element m : h.members())
      if (!h.contains(g.mul(g.mul(x, m), g.inv(x)))) return false;
  return true;
}

QuotientResult quotient(const SubgroupSet& h) {
  if (!is_normal(h)) throw Error(ErrorKind::NotNormal, "subgroup is not normal");
  const auto& g = *h.parent();
  const int n = g.order();
  QuotientResult q;
  q.projection.assign(n, -1);
  // Scan elements in index order, so the identity coset receives label 0.
  std::vector<Element> scan(n);
  std::iota(scan.begin(), scan.end(), 0);
  std::stable_partition(scan.begin(), scan.end(), [&](Element x) { return x == g.identity(); });
  for (Element x : scan) {
    if (q.projection[x] >= 0) continue;
    const int label = static_cast<int>(q.representatives.size());
    q.representatives.push_back(x);
    for (Element m : h.members()) q.projection[g.mul(x, m)] = label;
  }
  const int m = static_cast<int>(q.representatives.size());
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      t[a][b] = q.projection[g.mul(q.representatives[a], q.representatives[b])];
  q.quotient = FiniteGroup::from_table(g.name() + "/" + std::to_string(h.size()), t);
  return q;
}

EmbeddedSubgroup as_group(const SubgroupSet& h) {
  const auto& g = *h.parent();
  std::vector<Element> embed = h.members();
  // Put the identity first so the relabelled group uses index 0 for it.
  std::stable_partition(embed.begin(), embed.end(), [&](Element x) { return x == g.identity(); });
  std::vector<int> local(g.order(), -1);
  for (std::size_t i = 0; i < embed.size(); ++i) local[embed[i]] = static_cast<int>(i);
  const int m = static_cast<int>(embed.size());
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) t[a][b] = local[g.mul(embed[a], embed[b])];
  return {FiniteGroup::from_table(g.name() + "<" + std::to_string(m) + ">", t), std::move(embed)};
}

std::vector<std::vector<Element>> conjugacy_classes(const FiniteGroup& g) {
  std::vector<bool> done(g.order());
  std::vector<std::vector<Element>> classes;
  for (int a = 0; a < g.order(); ++a) {
    if (done[a]) continue;
    std::vector<Element> cls;
    for (int x = 0; x < g.order(); ++x) {
      const Element c = g.mul(g.mul(x, a), g.inv(x));
      if (!done[c]) {
        done[c] = true;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

bool is_klein_four(const FiniteGroup& g) {
  if (g.order() != 4) return false;
  for (int a = 0; a < 4; ++a)
    if (a != g.identity() && element_order(g, a) != 2) return false;
  return true;
}

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

PElements p_elements(const FiniteGroup& g, int p) {
  if (!is_prime(p)) throw Error(ErrorKind::InvalidArgument, "p must be prime");
  PElements out;
  std::vector<bool> in(g.order());
  for (int a = 0; a < g.order(); ++a) {
    int k = element_order(g, a);
    while (k % p == 0) k /= p;
    if (k == 1) {
      out.elements.push_back(a);
      in[a] = true;
    }
  }
  out.is_subgroup = true;
  for (Element a : out.elements)
    for (Element b : out.elements)
      if (!in[g.mul(a, b)]) {
        out.is_subgroup = false;
        return out;
      }
  return out;
}

std::vector<Element> generating_set(const FiniteGroup& g) {
  std::vector<Element> by_order(g.order());
  std::iota(by_order.begin(), by_order.end(), 0);
  std::vector<int> ord(g.order());
  for (int a = 0; a < g.order(); ++a) ord[a] = element_order(g, a);
  std::stable_sort(by_order.begin(), by_order.end(), [&](Element a, Element b) { return ord[a] > ord[b]; });

  std::vector<Element> gens;
  std::vector<bool> covered(g.order());
  covered[g.identity()] = true;
  std::vector<Element> closure{g.identity()};
  for (Element cand : by_order) {
    if (covered[cand]) continue;
    gens.push_back(cand);
    // Recompute closure of the enlarged generator set.
    closure.assign(1, g.identity());
    std::fill(covered.begin(), covered.end(), false);
    covered[g.identity()] = true;
    for (std::size_t i = 0; i < closure.size(); ++i)
      for (Element s : gens) {
        const Element y = g.mul(closure[i], s);
        if (!covered[y]) {
          covered[y] = true;
          closure.push_back(y);
        }
      }
    if (static_cast<int>(closure.size()) == g.order()) break;
  }
  return gens;
}

}  // namespace grouplab
