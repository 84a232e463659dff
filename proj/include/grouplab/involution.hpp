#pragma once

#include <vector>

#include "grouplab/group.hpp"

namespace grouplab {

/// A group involution: image(gh) = image(h) image(g), image^2 = id.
class AntiAutomorphism {
 public:
  /// Validates both axioms exhaustively; throws Error{InvalidArgument}.
  AntiAutomorphism(GroupPtr parent, std::vector<Element> image);

  const GroupPtr& parent() const noexcept { return parent_; }
  const std::vector<Element>& image() const noexcept { return image_; }
  Element operator()(Element g) const noexcept { return image_[g]; }
  bool is_classical() const;

  friend bool operator==(const AntiAutomorphism& a, const AntiAutomorphism& b) {
    return a.parent_ == b.parent_ && a.image_ == b.image_;
  }

 private:
  GroupPtr parent_;
  std::vector<Element> image_;
};

/// A homomorphism G -> {+1, -1}.
class Orientation {
 public:
  /// From a sign vector; throws Error{InvalidArgument} if not a homomorphism.
  Orientation(GroupPtr parent, std::vector<int> sign);
  /// From a kernel of index <= 2; throws Error{InvalidArgument} otherwise.
  static Orientation from_kernel(const SubgroupSet& kernel);
  static Orientation trivial(GroupPtr parent);

  const GroupPtr& parent() const noexcept { return parent_; }
  int operator()(Element g) const noexcept { return sign_[g]; }
  const std::vector<int>& sign() const noexcept { return sign_; }
  const SubgroupSet& kernel() const noexcept { return kernel_; }
  bool is_trivial() const noexcept { return kernel_.size() == parent_->order(); }

 private:
  GroupPtr parent_;
  std::vector<int> sign_;
  SubgroupSet kernel_;
};

struct OrientedPair {
  AntiAutomorphism star;
  Orientation sigma;
  bool compatible = false;  // g * star(g) in ker(sigma) for all g
};

AntiAutomorphism classical_involution(const GroupPtr& g);

struct InvolutionOptions {
  int max_group_order = 16;
  int max_count = 512;
};
/// All order <= 2 anti-automorphisms, built as phi o inversion for phi in
/// Aut(G). Sorted by image vector. Throws Error{BoundExceeded}.
std::vector<AntiAutomorphism> enumerate_involutions(const GroupPtr& g, InvolutionOptions opts = {});
/// All automorphisms of G, sorted by image vector.
std::vector<std::vector<Element>> enumerate_automorphisms(const FiniteGroup& g);

/// One orientation per subgroup of index <= 2 taken as kernel; the trivial
/// orientation (first, when requested) then the rest sorted by sign vector.
std::vector<Orientation> enumerate_orientations(const GroupPtr& g, bool include_trivial);

/// Throws Error{ParentMismatch}.
OrientedPair make_pair(AntiAutomorphism star, Orientation sigma);

struct InducedPair {
  QuotientResult quotient;
  OrientedPair pair;
};
/// Throws Error{NotNormal}, Error{NotInvariant} or Error{NotInKernel}.
InducedPair induce_on_quotient(const OrientedPair& pair, const SubgroupSet& h);

}  // namespace grouplab
