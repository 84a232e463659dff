#include <random>

#include <gtest/gtest.h>

#include "grouplab/algebra.hpp"
#include "grouplab/error.hpp"
#include "grouplab/group_spec.hpp"
#include "grouplab/harness.hpp"
#include "grouplab/modular_linalg.hpp"

using namespace grouplab;

namespace {

SubgroupSet gen(const GroupPtr& g, std::vector<Element> xs) { return subgroup_generated(g, xs); }

ContextPtr classical_ctx(const std::string& spec, Residue p, bool sign = false) {
  const auto g = build_group(spec);
  const auto sigma = sign ? enumerate_orientations(g, false).front() : Orientation::trivial(g);
  return AlgebraContext::make(p, make_pair(classical_involution(g), sigma));
}

AlgebraElement el(const ContextPtr& ctx, std::vector<long long> c) { return AlgebraElement::from_coeffs(ctx, c); }

AlgebraElement random_element(const ContextPtr& ctx, std::mt19937& rng) {
  std::uniform_int_distribution<long long> d(0, ctx->p() - 1);
  std::vector<long long> c(ctx->dimension());
  for (auto& x : c) x = d(rng);
  return el(ctx, c);
}

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST(PrimeField, MatchesNaiveArithmetic) {
  std::mt19937 rng(11);
  for (Residue p : {3u, 5u, 7u, 65521u, 65537u, 2147483647u}) {
    const PrimeField f(p);
    std::uniform_int_distribution<Residue> d(0, p - 1);
    for (int t = 0; t < 2000; ++t) {
      const Residue a = d(rng), b = d(rng);
      ASSERT_EQ(f.mul(a, b), static_cast<Residue>(static_cast<std::uint64_t>(a) * b % p)) << p;
      ASSERT_EQ(f.add(a, b), (a + static_cast<std::uint64_t>(b)) % p);
      ASSERT_EQ(f.add(f.sub(a, b), b), a);
      ASSERT_EQ(f.add(a, f.neg(a)), 0u);
      if (a != 0) ASSERT_EQ(f.mul(a, f.inv(a)), 1u);
    }
    EXPECT_EQ(f.reduce(-1), p - 1);
    EXPECT_THROW(f.inv(0), Error);
  }
  EXPECT_THROW(PrimeField(9), Error);
}

TEST(Linalg, RankKernelSolve) {
  const PrimeField f(5);
  Matrix m(3, 3);
  // rows (1,2,3), (0,1,4), (1,3,2): third = first + second
  const Residue v[] = {1, 2, 3, 0, 1, 4, 1, 3, 2};
  m.data.assign(std::begin(v), std::end(v));
  EXPECT_EQ(rank(m, f), 2);
  EXPECT_FALSE(is_invertible(m, f));
  const auto k = kernel_basis(m, f);
  ASSERT_EQ(k.size(), 1u);
  for (int i = 0; i < 3; ++i) {
    Residue s = 0;
    for (int j = 0; j < 3; ++j) s = f.add(s, f.mul(m.at(i, j), k[0][j]));
    EXPECT_EQ(s, 0u);
  }
  EXPECT_FALSE(solve_square(m, {1, 1, 1}, f));

  Matrix id(2, 2);
  id.at(0, 0) = 2;
  id.at(1, 1) = 3;
  id.at(0, 1) = 1;
  const auto x = solve_square(id, {1, 1}, f);
  ASSERT_TRUE(x);
  EXPECT_EQ(f.add(f.mul(2, (*x)[0]), (*x)[1]), 1u);
  EXPECT_EQ(f.mul(3, (*x)[1]), 1u);

  const std::vector<Vec> vs{{1, 2, 0}, {2, 4, 0}, {0, 0, 1}};
  EXPECT_EQ(span_basis(vs, f).size(), 2u);
}

TEST(Context, Errors) {
  const auto g = cyclic(4);
  EXPECT_EQ(kind_of([&] { AlgebraContext::make(2, make_pair(classical_involution(g), Orientation::trivial(g))); }),
            ErrorKind::InvalidArgument);
  EXPECT_EQ(kind_of([&] { AlgebraContext::make(9, make_pair(classical_involution(g), Orientation::trivial(g))); }),
            ErrorKind::InvalidArgument);
  const auto d = dihedral(8);
  for (const auto& s : enumerate_involutions(d))
    for (const auto& o : enumerate_orientations(d, false)) {
      const auto pair = make_pair(s, o);
      if (!pair.compatible) {
        EXPECT_EQ(kind_of([&] { AlgebraContext::make(3, pair); }), ErrorKind::Incompatible);
        return;
      }
    }
  FAIL() << "no incompatible pair on D8";
}

TEST(Arithmetic, Examples) {
  const auto ctx = classical_ctx("C2", 3);
  const auto x = el(ctx, {1, 1});
  EXPECT_EQ(x * x, el(ctx, {2, 2}));
  EXPECT_EQ(AlgebraElement::one(ctx) * x, x);
  EXPECT_EQ(x - x, AlgebraElement::zero(ctx));
  EXPECT_EQ(el(ctx, {-1, 4}), el(ctx, {2, 1}));

  const auto d = classical_ctx("D8", 5);
  const auto& g = *d->group();
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b)
      EXPECT_EQ(AlgebraElement::basis(d, a) * AlgebraElement::basis(d, b), AlgebraElement::basis(d, g.mul(a, b)));

  const auto other = classical_ctx("C2", 3);
  EXPECT_EQ(kind_of([&] { (void)(x + AlgebraElement::one(other)); }), ErrorKind::ContextMismatch);
}

TEST(Arithmetic, RingAxiomsOnSamples) {
  std::mt19937 rng(3);
  for (const char* spec : {"D6", "Q8", "C2xC4"}) {
    const auto ctx = classical_ctx(spec, 5);
    for (int t = 0; t < 50; ++t) {
      const auto a = random_element(ctx, rng), b = random_element(ctx, rng), c = random_element(ctx, rng);
      ASSERT_EQ((a * b) * c, a * (b * c));
      ASSERT_EQ(a * (b + c), a * b + a * c);
    }
  }
}

TEST(Star, Examples) {
  const auto ctx = classical_ctx("C2", 3, true);
  EXPECT_EQ(apply_star(el(ctx, {1, 2})), el(ctx, {1, -2}));
  EXPECT_EQ(apply_star(AlgebraElement::one(ctx)), AlgebraElement::one(ctx));
}

TEST(Star, AntiAutomorphismAcrossCorpus) {
  std::mt19937 rng(5);
  for (const auto& entry : default_corpus()) {
    const auto& g = entry.group;
    for (const auto& sigma : enumerate_orientations(g, true)) {
      const auto pair = make_pair(classical_involution(g), sigma);
      const auto ctx = AlgebraContext::make(3, pair);
      for (int t = 0; t < 20; ++t) {
        const auto a = random_element(ctx, rng), b = random_element(ctx, rng);
        ASSERT_EQ(apply_star(apply_star(a)), a) << entry.spec;
        ASSERT_EQ(apply_star(a * b), apply_star(b) * apply_star(a)) << entry.spec;
        ASSERT_EQ(apply_star(a + b), apply_star(a) + apply_star(b));
      }
    }
  }
}

TEST(Symmetric, Dimensions) {
  EXPECT_EQ(symmetric_basis(classical_ctx("C2", 3, true)).size(), 1u);
  EXPECT_EQ(symmetric_basis(classical_ctx("Q8", 3)).size(), 5u);
  for (const char* spec : {"C4", "C6", "C2xC2", "C2xC4", "C8", "C3xC3"}) {
    const auto ctx = classical_ctx(spec, 3);
    const auto& g = *ctx->group();
    int t = 0;
    for (int x = 0; x < g.order(); ++x) t += g.mul(x, x) == 0;
    EXPECT_EQ(static_cast<int>(symmetric_basis(ctx).size()), t + (g.order() - t) / 2) << spec;
  }
}

TEST(Symmetric, OrbitCountMatchesRankAndSkew) {
  for (const auto& entry : default_corpus()) {
    if (entry.group->order() > 16) continue;
    const auto invs = enumerate_involutions(entry.group);
    const auto oris = enumerate_orientations(entry.group, true);
    for (std::size_t i = 0; i < invs.size(); i += 7)
      for (const auto& o : oris) {
        const auto pair = make_pair(invs[i], o);
        if (!pair.compatible) continue;
        const auto ctx = AlgebraContext::make(5, pair);
        const auto sym = symmetric_basis(ctx);
        const auto skew = skew_basis(ctx);
        ASSERT_EQ(static_cast<int>(sym.size()), symmetric_dimension_by_rank(ctx)) << entry.spec;
        ASSERT_EQ(static_cast<int>(sym.size() + skew.size()), ctx->dimension());
        for (const auto& s : sym) ASSERT_EQ(apply_star(s), s);
        for (const auto& s : skew) ASSERT_EQ(apply_star(s), AlgebraElement::zero(ctx) - s);
        std::vector<AlgebraElement> both(sym);
        both.insert(both.end(), skew.begin(), skew.end());
        ASSERT_EQ(span_rank(both), ctx->dimension());
      }
  }
}

TEST(Symmetric, Commutativity) {
  EXPECT_TRUE(symmetric_is_commutative(classical_ctx("C6", 3)).holds);
  EXPECT_TRUE(symmetric_is_commutative(classical_ctx("Q8", 3)).holds);
  const auto d = symmetric_is_commutative(classical_ctx("D8", 3));
  EXPECT_FALSE(d.holds);
  ASSERT_TRUE(d.witness);
  const auto& [a, b] = *d.witness;
  EXPECT_NE(a * b, b * a);
  EXPECT_EQ(apply_star(a), a);
  EXPECT_EQ(apply_star(b), b);
}

TEST(Symmetric, Centrality) {
  EXPECT_TRUE(symmetric_is_central(classical_ctx("Q8", 3)).holds);
  EXPECT_TRUE(symmetric_is_central(classical_ctx("C4xC4", 5)).holds);
  EXPECT_FALSE(symmetric_is_central(classical_ctx("D8", 3)).holds);
}

TEST(Center, ClassSums) {
  EXPECT_EQ(center_basis(classical_ctx("C6", 3)).size(), 6u);
  EXPECT_EQ(center_basis(classical_ctx("Q8", 3)).size(), 5u);
  EXPECT_EQ(center_basis(classical_ctx("D8", 3)).size(), 5u);
  const auto q = classical_ctx("Q8", 3);
  const auto z = center_basis(q);
  const auto s = symmetric_basis(q);
  EXPECT_TRUE(same_span(z, s));
  const auto d = classical_ctx("D8", 3);
  const auto zd = center_basis(d);
  const auto sd = symmetric_basis(d);
  EXPECT_FALSE(same_span(zd, sd));
  for (const auto& c : z)
    for (int g = 0; g < 8; ++g) EXPECT_EQ(c * AlgebraElement::basis(q, g), AlgebraElement::basis(q, g) * c);
}

TEST(Units, InverseAndRegularMatrix) {
  std::mt19937 rng(9);
  const auto ctx = classical_ctx("D6", 5);
  UnitTester tester(*ctx);
  Vec out(ctx->dimension());
  int units = 0;
  for (int t = 0; t < 200; ++t) {
    const auto a = random_element(ctx, rng);
    const bool u = is_unit(a);
    ASSERT_EQ(tester.is_unit(a.coeffs()), u);
    ASSERT_EQ(is_invertible(left_regular(*ctx, a.coeffs()), ctx->field()), u);
    const auto inv = inverse(a);
    ASSERT_EQ(inv.has_value(), u);
    if (u) {
      ++units;
      ASSERT_EQ(a * *inv, AlgebraElement::one(ctx));
      ASSERT_EQ(*inv * a, AlgebraElement::one(ctx));
      tester.inverse(a.coeffs(), out);
      ASSERT_EQ(AlgebraElement::from_residues(ctx, out), *inv);
    }
  }
  EXPECT_GT(units, 0);
  EXPECT_FALSE(is_unit(AlgebraElement::zero(ctx)));
  EXPECT_TRUE(is_unit(AlgebraElement::one(ctx)));
}

TEST(Delta, Examples) {
  const auto c6 = classical_ctx("C6", 3);
  const auto& g = c6->group();
  EXPECT_EQ(delta_ideal(c6, gen(g, {})).dimension(), 0);
  EXPECT_EQ(delta_ideal(c6, gen(g, {2})).dimension(), 4);
  EXPECT_EQ(delta_ideal(c6, gen(g, {1})).dimension(), 5);
  const auto d6 = classical_ctx("D6", 5);
  EXPECT_EQ(kind_of([&] { delta_ideal(d6, gen(d6->group(), {3})); }), ErrorKind::NotNormal);
}

TEST(Delta, Nilpotency) {
  const auto c6 = classical_ctx("C6", 3);
  EXPECT_EQ(nilpotency_index(delta_ideal(c6, gen(c6->group(), {})), 8), 1);
  EXPECT_EQ(nilpotency_index(delta_ideal(c6, gen(c6->group(), {2})), 8), 3);
  // Delta(C6, C6) over F_3 is not nilpotent: C2 part is semisimple.
  EXPECT_FALSE(nilpotency_index(delta_ideal(c6, gen(c6->group(), {1})), 8));
  // Nilpotency index of Delta(C3xC3) in char 3 is 2(3-1)+1 = 5.
  const auto e = classical_ctx("C3xC3", 3);
  EXPECT_EQ(nilpotency_index(delta_ideal(e, gen(e->group(), {1, 3})), 16), 5);
}

TEST(Delta, NormalPPartIsNilpotentAcrossCorpus) {
  for (const auto& entry : default_corpus()) {
    for (Residue p : {3u, 5u}) {
      const auto ps = p_elements(*entry.group, p);
      if (!ps.is_subgroup || ps.elements.size() == 1) continue;
      const SubgroupSet h(entry.group, ps.elements);
      if (!is_normal(h)) continue;
      const auto ctx = AlgebraContext::make(p, make_pair(classical_involution(entry.group),
                                                         Orientation::trivial(entry.group)));
      const auto delta = delta_ideal(ctx, h);
      const auto n = nilpotency_index(delta, 64);
      ASSERT_TRUE(n) << entry.spec << " p=" << p;
      EXPECT_LE(*n, static_cast<int>(ps.elements.size())) << entry.spec;
      const auto fact = known_radical(ctx);
      ASSERT_TRUE(fact.radical);
      EXPECT_EQ(fact.radical->dimension(), delta.dimension());
    }
  }
}

TEST(Regular, Examples) {
  const auto q = classical_ctx("Q8", 3);
  EXPECT_TRUE(is_regular(*q));
  const auto fact = known_radical(q);
  ASSERT_TRUE(fact.radical);
  EXPECT_EQ(fact.radical->dimension(), 0);
  EXPECT_FALSE(is_regular(*classical_ctx("C6", 3)));
  const auto q12 = known_radical(classical_ctx("Q12", 3));
  ASSERT_TRUE(q12.radical);
  EXPECT_EQ(q12.radical->dimension(), 8);  // 12 (1 - 1/3)
}

TEST(Idempotents, Examples) {
  const auto c2 = symmetric_idempotents_central(classical_ctx("C2", 3, true));
  EXPECT_TRUE(c2.all_central);
  EXPECT_EQ(c2.idempotents, 2);
  EXPECT_TRUE(symmetric_idempotents_central(classical_ctx("C4", 5)).all_central);
  EXPECT_TRUE(symmetric_idempotents_central(classical_ctx("Q8", 3)).all_central);
  EXPECT_EQ(kind_of([] { symmetric_idempotents_central(classical_ctx("C16", 5), 1000); }),
            ErrorKind::BoundExceeded);
}
