#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "grouplab/group.hpp"
#include "grouplab/involution.hpp"
#include "grouplab/modular_linalg.hpp"

namespace grouplab {

/// F_p G with the oriented involution  sum a_g g  ->  sum a_g sigma(g) g*.
class AlgebraContext {
 public:
  /// Throws Error{InvalidArgument} unless p is an odd prime and
  /// Error{Incompatible} unless the pair is compatible.
  static std::shared_ptr<const AlgebraContext> make(Residue p, OrientedPair pair);

  const GroupPtr& group() const noexcept { return pair_.star.parent(); }
  int dimension() const noexcept { return group()->order(); }
  const PrimeField& field() const noexcept { return field_; }
  Residue p() const noexcept { return field_.modulus(); }
  const OrientedPair& pair() const noexcept { return pair_; }

 private:
  AlgebraContext(Residue p, OrientedPair pair) : field_(p), pair_(std::move(pair)) {}

  PrimeField field_;
  OrientedPair pair_;
};

using ContextPtr = std::shared_ptr<const AlgebraContext>;

class AlgebraElement {
 public:
  static AlgebraElement zero(ContextPtr ctx);
  static AlgebraElement one(ContextPtr ctx);
  static AlgebraElement basis(ContextPtr ctx, Element g);
  /// Coefficients are reduced mod p; negative inputs are allowed.
  static AlgebraElement from_coeffs(ContextPtr ctx, std::span<const long long> coeffs);
  static AlgebraElement from_residues(ContextPtr ctx, Vec coeffs);

  const ContextPtr& context() const noexcept { return ctx_; }
  const Vec& coeffs() const noexcept { return coeffs_; }
  Residue operator[](Element g) const noexcept { return coeffs_[g]; }
  bool is_zero() const noexcept;

  friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b);
  /// Convolution: (ab)_g = sum over xy = g of a_x b_y.
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator*(Residue s, const AlgebraElement& a);
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.ctx_ == b.ctx_ && a.coeffs_ == b.coeffs_;
  }

 private:
  AlgebraElement(ContextPtr ctx, Vec coeffs) : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {}

  ContextPtr ctx_;
  Vec coeffs_;
};

// Raw-coefficient kernels shared with the enumeration code. out must not
// alias a or b.
void convolve(const FiniteGroup& g, const PrimeField& f, std::span<const Residue> a,
              std::span<const Residue> b, std::span<Residue> out);
void apply_star(const AlgebraContext& ctx, std::span<const Residue> a, std::span<Residue> out);

AlgebraElement apply_star(const AlgebraElement& a);

/// Left-regular matrix: column y holds the coefficients of a*y.
Matrix left_regular(const AlgebraContext& ctx, std::span<const Residue> a);
bool is_unit(const AlgebraElement& a);
std::optional<AlgebraElement> inverse(const AlgebraElement& a);

/// Reusable scratch space for unit tests over raw coefficient vectors.
class UnitTester {
 public:
  explicit UnitTester(const AlgebraContext& ctx);
  bool is_unit(std::span<const Residue> a);
  /// Writes a^-1 into out and returns true, or returns false if a is not a unit.
  bool inverse(std::span<const Residue> a, std::span<Residue> out);

 private:
  void load(std::span<const Residue> a);
  bool eliminate(std::span<const Residue> a, bool with_rhs);

  const AlgebraContext& ctx_;
  int n_;
  Vec m_;
  Vec rhs_;
};

/// Fixed space of the oriented involution. One vector per orbit {g, g*}:
/// g + sigma(g) g* when g != g*, g when g = g* and sigma(g) = +1. Ordered
/// by least element of the orbit.
std::vector<AlgebraElement> symmetric_basis(const ContextPtr& ctx);
/// Anti-fixed space: g - sigma(g) g*, or g when g = g* and sigma(g) = -1.
std::vector<AlgebraElement> skew_basis(const ContextPtr& ctx);
/// n - rank(star - id), computed independently of the orbit construction.
int symmetric_dimension_by_rank(const ContextPtr& ctx);

struct CommutationCheck {
  bool holds = true;
  std::optional<std::pair<AlgebraElement, AlgebraElement>> witness;
};

CommutationCheck symmetric_is_commutative(const ContextPtr& ctx);
/// Every symmetric basis vector commutes with every group element.
CommutationCheck symmetric_is_central(const ContextPtr& ctx);
/// Class sums, ordered by least class member.
std::vector<AlgebraElement> center_basis(const ContextPtr& ctx);
bool same_span(std::span<const AlgebraElement> a, std::span<const AlgebraElement> b);
int span_rank(std::span<const AlgebraElement> a);

/// Linearly independent basis of a two-sided ideal.
class IdealBasis {
 public:
  /// Reduces generators to an echelon basis and checks closure under left
  /// and right multiplication by group elements. Throws Error{InvalidArgument}.
  IdealBasis(ContextPtr ctx, std::vector<AlgebraElement> generators);

  const ContextPtr& context() const noexcept { return ctx_; }
  const std::vector<AlgebraElement>& basis() const noexcept { return basis_; }
  int dimension() const noexcept { return static_cast<int>(basis_.size()); }

 private:
  ContextPtr ctx_;
  std::vector<AlgebraElement> basis_;
};

/// Kernel of F G -> F(G/H), spanned by g - rep(gH). Throws Error{NotNormal}.
IdealBasis delta_ideal(const ContextPtr& ctx, const SubgroupSet& h);
/// Least k <= bound with ideal^k = 0.
std::optional<int> nilpotency_index(const IdealBasis& ideal, int bound);
/// For finite G: p does not divide |G|.
bool is_regular(const AlgebraContext& ctx);

struct RadicalFact {
  std::optional<IdealBasis> radical;  // absent when neither known case applies
  std::string note;
};
/// J = 0 when p does not divide |G|; J = Delta(G,P) when P is a normal
/// p-subgroup. No other case is attempted.
RadicalFact known_radical(const ContextPtr& ctx);

struct IdempotentCheck {
  bool all_central = true;
  long long idempotents = 0;
  std::optional<AlgebraElement> witness;
};
/// Sweeps the symmetric subspace for idempotents. Throws Error{BoundExceeded}
/// when p^dim exceeds the bound.
IdempotentCheck symmetric_idempotents_central(const ContextPtr& ctx, long long bound = 1'000'000);

}  // namespace grouplab
