#pragma once

#include <optional>
#include <string>
#include <vector>

#include "grouplab/group.hpp"
#include "grouplab/involution.hpp"

namespace grouplab {

/// Non-abelian, and gh = hg exactly when one of g, h, gh is central.
bool has_lc_property(const GroupPtr& g);
/// G / Z(G) is a Klein four group.
bool lc_via_center_quotient(const GroupPtr& g);
/// s when the commutator set is exactly {1, s}.
std::optional<Element> unique_commutator(const FiniteGroup& g);
/// LC with unique commutator s, and star fixes central elements and sends
/// every other g to s g.
bool is_slc_canonical(const GroupPtr& g, const AntiAutomorphism& star);
/// Non-abelian 2-group all of whose subgroups are normal.
bool is_hamiltonian_2group(const GroupPtr& g);

struct ClassificationReport {
  std::string group;
  bool is_abelian = false;
  bool lc_G = false;
  bool lc_N = false;
  std::optional<Element> unique_commutator;
  bool slc_canonical = false;
  bool thm1_cond1 = false;
  bool thm1_cond2 = false;
  bool lemma8_verdict = false;
  /// Z(N) = N n Z(G), recomputed rather than assumed.
  bool center_N_matches = false;
  std::vector<std::string> notes;
};

/// cond1 and cond2 for a non-abelian G with a compatible non-trivial
/// pair. Throws Error{Incompatible}, Error{TrivialOrientation},
/// Error{AbelianGroup}.
ClassificationReport check_theorem1(const GroupPtr& g, const OrientedPair& pair);

struct Theorem2Report {
  int p = 0;
  PElements p_set;
  InducedPair induced;
  ClassificationReport quotient_report;
  /// 1: G/P abelian, 2: N/P abelian with (G/P \ N/P) fixed, 3: LC case
  /// split on G/P; 0: none holds.
  int theorem2_case = 0;
  bool conditions_hold() const { return theorem2_case != 0; }
};

/// Computes P, its normality, the induced pair on G/P and the quotient
/// classification. p only needs to be prime here; the algebra side is what
/// requires it odd. Throws Error{PNotSubgroup}, Error{NotNormal},
/// Error{Incompatible}, Error{TrivialOrientation}.
Theorem2Report check_theorem2(const GroupPtr& g, const OrientedPair& pair, int p);

}  // namespace grouplab
