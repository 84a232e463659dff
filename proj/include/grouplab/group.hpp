#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace grouplab {

using Element = int;

/// A finite group stored as a dense multiplication table over 0..n-1.
///
/// Instances are immutable and shared through GroupPtr; SubgroupSet,
/// AntiAutomorphism and the algebra types hold a pointer to their parent and
/// compare parents by identity.
class FiniteGroup {
 public:
  /// Validates the table: Latin square, two-sided identity, inverses and
  /// associativity (exhaustive for n <= full_check_bound, 1000 sampled
  /// triples above). Throws Error{InvalidTable}.
  static std::shared_ptr<const FiniteGroup> from_table(std::string name,
                                                       const std::vector<std::vector<int>>& table,
                                                       int full_check_bound = 64);

  int order() const noexcept { return n_; }
  Element identity() const noexcept { return identity_; }
  Element mul(Element a, Element b) const noexcept {
    return table_[static_cast<std::size_t>(a) * n_ + b];
  }
  Element inv(Element a) const noexcept { return inv_[a]; }
  Element pow(Element a, long long k) const;
  const std::string& name() const noexcept { return name_; }
  std::span<const Element> row(Element a) const noexcept {
    return {table_.data() + static_cast<std::size_t>(a) * n_, static_cast<std::size_t>(n_)};
  }
  std::vector<std::vector<int>> table() const;

  bool commute(Element a, Element b) const noexcept { return mul(a, b) == mul(b, a); }
  /// (a,b) = a^-1 b^-1 a b
  Element commutator(Element a, Element b) const noexcept {
    return mul(mul(inv(a), inv(b)), mul(a, b));
  }

 private:
  FiniteGroup() = default;

  int n_ = 0;
  Element identity_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inv_;
  std::string name_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Constructors. Index 0 is the identity in all of them.
GroupPtr cyclic(int n);
/// Dihedral group of the given order (2n): r^k s^f stored at k + f*n.
GroupPtr dihedral(int order);
/// Dicyclic group of the given order 4m (Q8, Q16 are the generalized
/// quaternion cases): a^k b^f at k + f*2m, with b^2 = a^m, b a b^-1 = a^-1.
GroupPtr quaternion(int order);
/// (a, b) stored at a*|B| + b.
GroupPtr direct_product(const FiniteGroup& a, const FiniteGroup& b);

/// Sorted member set of a subgroup of a parent group.
class SubgroupSet {
 public:
  /// Throws Error{InvalidArgument} if members do not form a subgroup.
  SubgroupSet(GroupPtr parent, std::vector<Element> members);

  const GroupPtr& parent() const noexcept { return parent_; }
  const std::vector<Element>& members() const noexcept { return members_; }
  int size() const noexcept { return static_cast<int>(members_.size()); }
  bool contains(Element g) const noexcept { return mask_[g]; }
  int index() const noexcept { return parent_->order() / size(); }

  friend bool operator==(const SubgroupSet& a, const SubgroupSet& b) {
    return a.parent_ == b.parent_ && a.members_ == b.members_;
  }

 private:
  GroupPtr parent_;
  std::vector<Element> members_;
  std::vector<bool> mask_;
};

struct QuotientResult {
  GroupPtr quotient;
  std::vector<Element> projection;  // parent element -> coset index
  std::vector<Element> representatives;  // coset index -> least parent element
};

/// A subgroup relabelled as a standalone group.
struct EmbeddedSubgroup {
  GroupPtr group;
  std::vector<Element> embedding;  // subgroup element -> parent element
};

bool is_abelian(const FiniteGroup& g);
int element_order(const FiniteGroup& g, Element x);
SubgroupSet center(const GroupPtr& g);
/// Sorted set of all (g,h) = g^-1 h^-1 g h.
std::vector<Element> commutator_set(const FiniteGroup& g);
SubgroupSet subgroup_generated(const GroupPtr& g, std::span<const Element> gens);
bool is_normal(const SubgroupSet& h);
/// Throws Error{NotNormal}.
QuotientResult quotient(const SubgroupSet& h);
EmbeddedSubgroup as_group(const SubgroupSet& h);
/// Conjugacy classes, each sorted, ordered by least member.
std::vector<std::vector<Element>> conjugacy_classes(const FiniteGroup& g);
bool is_klein_four(const FiniteGroup& g);

struct PElements {
  std::vector<Element> elements;  // sorted, identity included
  bool is_subgroup = false;
};
/// Elements whose order is a power of p. p must be prime.
PElements p_elements(const FiniteGroup& g, int p);

bool is_prime(long long p);
/// A generating set chosen greedily (largest order first); deterministic.
std::vector<Element> generating_set(const FiniteGroup& g);

}  // namespace grouplab
