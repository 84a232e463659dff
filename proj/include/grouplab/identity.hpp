#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "grouplab/algebra.hpp"
#include "grouplab/kernels.hpp"

namespace grouplab {

/// A non-trivial freely reduced word in x1..xk.
///
/// Text grammar: `x<i>` variables, juxtaposition (or `*`) for products,
/// `w^<k>` powers with k possibly negative, `(w)` grouping, and
/// `(w1,w2,...,wm)` the left-normed commutator with (a,b) = a^-1 b^-1 a b.
class WordIdentity {
 public:
  struct Letter {
    int variable;  // 1-based
    int exponent;  // non-zero
    friend bool operator==(const Letter&, const Letter&) = default;
  };

  /// Reduces the letters; throws Error{InvalidArgument} if the result is
  /// empty or a variable index is < 1.
  explicit WordIdentity(std::vector<Letter> letters);
  /// Throws Error{ParseError}, or Error{InvalidArgument} for a trivial word.
  static WordIdentity parse(std::string_view text);
  static WordIdentity commutator();

  int arity() const noexcept { return arity_; }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::string to_string() const;
  kernels::RawWord raw() const;

 private:
  std::vector<Letter> letters_;
  int arity_ = 0;
};

/// Free reduction of a letter list (adjacent equal variables merge).
std::vector<WordIdentity::Letter> reduce_word(std::vector<WordIdentity::Letter> letters);

class UnitSet {
 public:
  UnitSet(ContextPtr ctx, bool symmetric_only, kernels::UnitsAndInverses data)
      : ctx_(std::move(ctx)), symmetric_only_(symmetric_only), data_(std::move(data)) {}

  const ContextPtr& context() const noexcept { return ctx_; }
  bool symmetric_only() const noexcept { return symmetric_only_; }
  std::size_t size() const noexcept { return data_.units.count(); }
  AlgebraElement unit(std::size_t i) const;
  AlgebraElement inverse_of(std::size_t i) const;
  const kernels::UnitsAndInverses& raw() const noexcept { return data_; }

 private:
  ContextPtr ctx_;
  bool symmetric_only_;
  kernels::UnitsAndInverses data_;
};

struct SearchOptions {
  long long space_bound = 10'000'000;   // points swept when enumerating
  long long tuple_bound = 100'000'000;  // tuples checked by word searches
  bool parallel = true;
};

/// Every unit of F_p G, or every symmetric unit (sweeping only the symmetric
/// subspace). Deterministic order. Throws Error{BoundExceeded}.
UnitSet enumerate_units(const ContextPtr& ctx, bool symmetric_only, const SearchOptions& opts = {});

/// Throws Error{NotAUnit}, Error{ContextMismatch}, Error{InvalidArgument}.
AlgebraElement evaluate_word(const WordIdentity& w, std::span<const AlgebraElement> args);

struct IdentityCheck {
  bool holds = true;
  std::optional<std::vector<int>> witness_indices;  // into the UnitSet
  std::vector<AlgebraElement> witness;              // the failing arguments
  std::optional<AlgebraElement> witness_value;      // word value on them
};

/// Lexicographically least failing tuple as witness. Throws Error{BoundExceeded}.
IdentityCheck satisfies_identity(const UnitSet& set, const WordIdentity& w, const SearchOptions& opts = {});

/// Least n <= n_max with (u,v)^(p^n) = 1 over all symmetric unit pairs.
/// Throws Error{BoundExceeded}.
std::optional<int> commutator_p_power(const UnitSet& symmetric_units, int n_max, const SearchOptions& opts = {});
std::optional<int> commutator_p_power(const ContextPtr& ctx, int n_max, const SearchOptions& opts = {});

}  // namespace grouplab
