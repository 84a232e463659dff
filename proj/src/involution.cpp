#include "grouplab/involution.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "grouplab/error.hpp"

namespace grouplab {

namespace {

// BFS spanning tree over the generators: every non-identity x equals
// mul(tree_parent[x], gens[tree_gen[x]]); order lists elements parent-first.
struct SpanningTree {
  std::vector<Element> order;
  std::vector<Element> tree_parent;
  std::vector<int> tree_gen;
};

SpanningTree spanning_tree(const FiniteGroup& g, const std::vector<Element>& gens) {
  SpanningTree t;
  t.tree_parent.assign(g.order(), -1);
  t.tree_gen.assign(g.order(), -1);
  std::vector<bool> seen(g.order());
  t.order.push_back(g.identity());
  seen[g.identity()] = true;
  for (std::size_t i = 0; i < t.order.size(); ++i) {
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const Element y = g.mul(t.order[i], gens[k]);
      if (!seen[y]) {
        seen[y] = true;
        t.tree_parent[y] = t.order[i];
        t.tree_gen[y] = static_cast<int>(k);
        t.order.push_back(y);
      }
    }
  }
  return t;
}

SubgroupSet kernel_of(const GroupPtr& g, const std::vector<int>& sign) {
  std::vector<Element> k;
  for (int a = 0; a < g->order(); ++a)
    if (sign[a] == 1) k.push_back(a);
  return SubgroupSet(g, std::move(k));
}

}  // namespace

AntiAutomorphism::AntiAutomorphism(GroupPtr parent, std::vector<Element> image)
    : parent_(std::move(parent)), image_(std::move(image)) {
  const auto& g = *parent_;
  const int n = g.order();
  if (static_cast<int>(image_.size()) != n)
    throw Error(ErrorKind::InvalidArgument, "involution image has wrong length");
  for (Element x : image_)
    if (x < 0 || x >= n) throw Error(ErrorKind::InvalidArgument, "involution image out of range");
  for (int a = 0; a < n; ++a) {
    if (image_[image_[a]] != a) throw Error(ErrorKind::InvalidArgument, "map does not square to identity");
    for (int b = 0; b < n; ++b)
      if (image_[g.mul(a, b)] != g.mul(image_[b], image_[a]))
        throw Error(ErrorKind::InvalidArgument, "map is not an anti-homomorphism");
  }
}

bool AntiAutomorphism::is_classical() const {
  for (int a = 0; a < parent_->order(); ++a)
    if (image_[a] != parent_->inv(a)) return false;
  return true;
}

Orientation::Orientation(GroupPtr parent, std::vector<int> sign)
    : parent_(std::move(parent)), sign_(std::move(sign)), kernel_(SubgroupSet(parent_, {parent_->identity()})) {
  const auto& g = *parent_;
  if (static_cast<int>(sign_.size()) != g.order())
    throw Error(ErrorKind::InvalidArgument, "orientation has wrong length");
  for (int s : sign_)
    if (s != 1 && s != -1) throw Error(ErrorKind::InvalidArgument, "orientation values must be +1 or -1");
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b)
      if (sign_[g.mul(a, b)] != sign_[a] * sign_[b])
        throw Error(ErrorKind::InvalidArgument, "orientation is not a homomorphism");
  kernel_ = kernel_of(parent_, sign_);
}

Orientation Orientation::from_kernel(const SubgroupSet& kernel) {
  if (kernel.index() > 2) throw Error(ErrorKind::InvalidArgument, "orientation kernel must have index <= 2");
  if (kernel.index() == 2 && !is_normal(kernel))
    throw Error(ErrorKind::InvalidArgument, "kernel is not normal");
  std::vector<int> sign(kernel.parent()->order(), -1);
  for (Element g : kernel.members()) sign[g] = 1;
  return Orientation(kernel.parent(), std::move(sign));
}

Orientation Orientation::trivial(GroupPtr parent) {
  std::vector<int> sign(parent->order(), 1);
  return Orientation(std::move(parent), std::move(sign));
}

AntiAutomorphism classical_involution(const GroupPtr& g) {
  std::vector<Element> image(g->order());
  for (int a = 0; a < g->order(); ++a) image[a] = g->inv(a);
  return AntiAutomorphism(g, std::move(image));
}

std::vector<std::vector<Element>> enumerate_automorphisms(const FiniteGroup& g) {
  const auto gens = generating_set(g);
  const auto tree = spanning_tree(g, gens);
  const int n = g.order();
  std::vector<int> ord(n);
  for (int a = 0; a < n; ++a) ord[a] = element_order(g, a);

  std::vector<std::vector<Element>> autos;
  std::vector<Element> images(gens.size());
  std::vector<Element> phi(n);
  std::vector<bool> hit(n);

  auto try_extend = [&]() {
    phi[g.identity()] = g.identity();
    for (std::size_t i = 1; i < tree.order.size(); ++i) {
      const Element x = tree.order[i];
      phi[x] = g.mul(phi[tree.tree_parent[x]], images[tree.tree_gen[x]]);
    }
    std::fill(hit.begin(), hit.end(), false);
    for (int a = 0; a < n; ++a) {
      if (hit[phi[a]]) return;
      hit[phi[a]] = true;
    }
    // phi(x s) = phi(x) phi(s) for generators s implies a homomorphism.
    for (int a = 0; a < n; ++a)
      for (std::size_t k = 0; k < gens.size(); ++k)
        if (phi[g.mul(a, gens[k])] != g.mul(phi[a], images[k])) return;
    autos.push_back(phi);
  };

  std::function<void(std::size_t)> assign = [&](std::size_t k) {
    if (k == gens.size()) {
      try_extend();
      return;
    }
    for (int cand = 0; cand < n; ++cand) {
      if (ord[cand] != ord[gens[k]]) continue;
      if (std::find(images.begin(), images.begin() + static_cast<long>(k), cand) != images.begin() + static_cast<long>(k))
        continue;
      images[k] = cand;
      assign(k + 1);
    }
  };
  assign(0);
  std::sort(autos.begin(), autos.end());
  return autos;
}

std::vector<AntiAutomorphism> enumerate_involutions(const GroupPtr& g, InvolutionOptions opts) {
  if (g->order() > opts.max_group_order)
    throw Error(ErrorKind::BoundExceeded,
                "group order " + std::to_string(g->order()) + " exceeds involution bound " +
                    std::to_string(opts.max_group_order));
  std::vector<std::vector<Element>> images;
  for (const auto& phi : enumerate_automorphisms(*g)) {
    std::vector<Element> tau(g->order());
    for (int a = 0; a < g->order(); ++a) tau[a] = phi[g->inv(a)];
    bool order_two = true;
    for (int a = 0; a < g->order() && order_two; ++a) order_two = tau[tau[a]] == a;
    if (order_two) images.push_back(std::move(tau));
  }
  std::sort(images.begin(), images.end());
  if (static_cast<int>(images.size()) > opts.max_count)
    throw Error(ErrorKind::BoundExceeded, std::to_string(images.size()) + " involutions exceed cap " +
                                              std::to_string(opts.max_count));
  std::vector<AntiAutomorphism> out;
  out.reserve(images.size());
  for (auto& im : images) out.emplace_back(g, std::move(im));
  return out;
}

std::vector<Orientation> enumerate_orientations(const GroupPtr& g, bool include_trivial) {
  const auto gens = generating_set(*g);
  const auto tree = spanning_tree(*g, gens);
  const int n = g->order();
  std::vector<std::vector<int>> signs;
  for (unsigned mask = 1; mask < (1u << gens.size()); ++mask) {
    std::vector<int> s(n, 1);
    for (std::size_t i = 1; i < tree.order.size(); ++i) {
      const Element x = tree.order[i];
      const int gs = (mask >> tree.tree_gen[x]) & 1u ? -1 : 1;
      s[x] = s[tree.tree_parent[x]] * gs;
    }
    bool hom = true;
    for (int a = 0; a < n && hom; ++a)
      for (std::size_t k = 0; k < gens.size() && hom; ++k) {
        const int gs = (mask >> k) & 1u ? -1 : 1;
        hom = s[g->mul(a, gens[k])] == s[a] * gs;
      }
    if (hom) signs.push_back(std::move(s));
  }
  std::sort(signs.begin(), signs.end(), std::greater<>());
  signs.erase(std::unique(signs.begin(), signs.end()), signs.end());

  std::vector<Orientation> out;
  if (include_trivial) out.push_back(Orientation::trivial(g));
  for (auto& s : signs) out.emplace_back(g, std::move(s));
  return out;
}

OrientedPair make_pair(AntiAutomorphism star, Orientation sigma) {
  if (star.parent() != sigma.parent())
    throw Error(ErrorKind::ParentMismatch, "involution and orientation live on different groups");
  const auto& g = *star.parent();
  bool compatible = true;
  for (int a = 0; a < g.order() && compatible; ++a) compatible = sigma(g.mul(a, star(a))) == 1;
  return OrientedPair{std::move(star), std::move(sigma), compatible};
}

InducedPair induce_on_quotient(const OrientedPair& pair, const SubgroupSet& h) {
  if (h.parent() != pair.star.parent())
    throw Error(ErrorKind::ParentMismatch, "subgroup and pair live on different groups");
  if (!is_normal(h)) throw Error(ErrorKind::NotNormal, "subgroup is not normal");
  for (Element x : h.members()) {
    if (!h.contains(pair.star(x))) throw Error(ErrorKind::NotInvariant, "subgroup is not star-invariant");
    if (pair.sigma(x) != 1) throw Error(ErrorKind::NotInKernel, "subgroup is not contained in ker(sigma)");
  }
  auto q = quotient(h);
  const int m = q.quotient->order();
  std::vector<Element> star_bar(m);
  std::vector<int> sign_bar(m);
  for (int c = 0; c < m; ++c) {
    star_bar[c] = q.projection[pair.star(q.representatives[c])];
    sign_bar[c] = pair.sigma(q.representatives[c]);
  }
  auto induced = make_pair(AntiAutomorphism(q.quotient, std::move(star_bar)),
                           Orientation(q.quotient, std::move(sign_bar)));
  return InducedPair{std::move(q), std::move(induced)};
}

}  // namespace grouplab
