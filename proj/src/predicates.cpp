#include "grouplab/predicates.hpp"

#include <algorithm>

#include "grouplab/error.hpp"

namespace grouplab {

bool has_lc_property(const GroupPtr& g) {
  if (is_abelian(*g)) return false;
  const auto z = center(g);
  for (int a = 0; a < g->order(); ++a) {
    for (int b = 0; b < g->order(); ++b) {
      const bool some_central = z.contains(a) || z.contains(b) || z.contains(g->mul(a, b));
      if (g->commute(a, b) != some_central) return false;
    }
  }
  return true;
}

bool lc_via_center_quotient(const GroupPtr& g) {
  return is_klein_four(*quotient(center(g)).quotient);
}

std::optional<Element> unique_commutator(const FiniteGroup& g) {
  const auto comms = commutator_set(g);
  if (comms.size() != 2) return std::nullopt;
  return comms[0] == g.identity() ? comms[1] : comms[0];
}

bool is_slc_canonical(const GroupPtr& g, const AntiAutomorphism& star) {
  if (star.parent() != g) throw Error(ErrorKind::ParentMismatch, "involution lives on a different group");
  if (!has_lc_property(g)) return false;
  const auto s = unique_commutator(*g);
  if (!s) return false;
  const auto z = center(g);
  for (int a = 0; a < g->order(); ++a) {
    const Element expected = z.contains(a) ? a : g->mul(*s, a);
    if (star(a) != expected) return false;
  }
  return true;
}

bool is_hamiltonian_2group(const GroupPtr& g) {
  int n = g->order();
  while (n % 2 == 0) n /= 2;
  if (n != 1 || is_abelian(*g)) return false;
  // Every subgroup is a join of cyclic ones, so normal cyclic subgroups suffice.
  for (int a = 0; a < g->order(); ++a) {
    const Element gen[] = {a};
    if (!is_normal(subgroup_generated(g, gen))) return false;
  }
  return true;
}

ClassificationReport check_theorem1(const GroupPtr& g, const OrientedPair& pair) {
  if (pair.star.parent() != g || pair.sigma.parent() != g)
    throw Error(ErrorKind::ParentMismatch, "pair lives on a different group");
  if (!pair.compatible) throw Error(ErrorKind::Incompatible, "g g* is not in ker(sigma) for some g");
  if (pair.sigma.is_trivial()) throw Error(ErrorKind::TrivialOrientation, "orientation must be non-trivial");
  if (is_abelian(*g)) throw Error(ErrorKind::AbelianGroup, "the conditions address non-abelian groups");

  ClassificationReport r;
  r.group = g->name();
  r.is_abelian = false;
  const auto& kernel = pair.sigma.kernel();
  const auto n_group = as_group(kernel);
  const auto z = center(g);

  r.lc_G = has_lc_property(g);
  r.lc_N = has_lc_property(n_group.group);
  r.unique_commutator = unique_commutator(*g);
  r.slc_canonical = is_slc_canonical(g, pair.star);

  const auto zn = center(n_group.group);
  std::vector<Element> zn_parent;
  for (Element x : zn.members()) zn_parent.push_back(n_group.embedding[x]);
  std::sort(zn_parent.begin(), zn_parent.end());
  std::vector<Element> n_cap_z;
  for (Element x : kernel.members())
    if (z.contains(x)) n_cap_z.push_back(x);
  r.center_N_matches = zn_parent == n_cap_z;

  r.thm1_cond1 = is_abelian(*n_group.group);
  for (int a = 0; a < g->order() && r.thm1_cond1; ++a)
    if (!kernel.contains(a)) r.thm1_cond1 = pair.star(a) == a;

  r.thm1_cond2 = r.lc_G && r.lc_N && r.unique_commutator.has_value();
  for (int a = 0; a < g->order() && r.thm1_cond2; ++a) {
    const bool in_n = kernel.contains(a);
    const bool central = z.contains(a);
    const bool fixed = (in_n && central) || (!in_n && !central);
    r.thm1_cond2 = pair.star(a) == (fixed ? a : g->mul(*r.unique_commutator, a));
  }

  r.lemma8_verdict = r.thm1_cond1 || r.thm1_cond2;
  r.notes.push_back("char-4 branch excluded: coefficients form a field of odd characteristic");
  r.notes.push_back("field hypotheses (uncountable, or no exotic division components) are not decided here");
  if (r.thm1_cond2 && !r.center_N_matches)
    r.notes.push_back("unexpected: LC case split holds but Z(N) != N n Z(G)");
  return r;
}

Theorem2Report check_theorem2(const GroupPtr& g, const OrientedPair& pair, int p) {
  if (pair.star.parent() != g || pair.sigma.parent() != g)
    throw Error(ErrorKind::ParentMismatch, "pair lives on a different group");
  if (!pair.compatible) throw Error(ErrorKind::Incompatible, "g g* is not in ker(sigma) for some g");

  auto p_set = p_elements(*g, p);
  if (!p_set.is_subgroup)
    throw Error(ErrorKind::PNotSubgroup, "the " + std::to_string(p) + "-elements do not form a subgroup");
  if (pair.sigma.is_trivial()) throw Error(ErrorKind::TrivialOrientation, "orientation must be non-trivial");
  const SubgroupSet psub(g, p_set.elements);
  if (!is_normal(psub)) throw Error(ErrorKind::NotNormal, "P is not normal");

  auto induced = induce_on_quotient(pair, psub);
  Theorem2Report out{p, std::move(p_set), std::move(induced), {}, 0};
  const auto& qg = out.induced.quotient.quotient;
  if (is_abelian(*qg)) {
    out.quotient_report.group = qg->name();
    out.quotient_report.is_abelian = true;
    out.quotient_report.notes.push_back("G/P abelian");
    out.theorem2_case = 1;
  } else {
    out.quotient_report = check_theorem1(qg, out.induced.pair);
    if (out.quotient_report.thm1_cond1)
      out.theorem2_case = 2;
    else if (out.quotient_report.thm1_cond2)
      out.theorem2_case = 3;
  }
  if (out.theorem2_case != 0)
    out.quotient_report.notes.push_back("group algebra expected PI (informational, not verified)");
  return out;
}

}  // namespace grouplab
