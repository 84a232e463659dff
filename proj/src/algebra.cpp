#include "grouplab/algebra.hpp"

#include <algorithm>

#include "grouplab/error.hpp"

namespace grouplab {

namespace {

void require_same(const ContextPtr& a, const ContextPtr& b) {
  if (a != b) throw Error(ErrorKind::ContextMismatch, "elements belong to different algebras");
}

// Reduces v against an echelon basis whose rows each start with a unit pivot.
Vec reduce_against(const std::vector<Vec>& echelon, Vec v, const PrimeField& f) {
  for (const auto& row : echelon) {
    const auto pivot = std::find_if(row.begin(), row.end(), [](Residue x) { return x != 0; });
    const auto c = static_cast<std::size_t>(pivot - row.begin());
    if (v[c] == 0) continue;
    const Residue t = v[c];
    for (std::size_t j = c; j < v.size(); ++j) v[j] = f.sub(v[j], f.mul(t, row[j]));
  }
  return v;
}

bool all_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](Residue x) { return x == 0; });
}

std::vector<Vec> coeff_vectors(std::span<const AlgebraElement> xs) {
  std::vector<Vec> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(x.coeffs());
  return out;
}

}  // namespace

std::shared_ptr<const AlgebraContext> AlgebraContext::make(Residue p, OrientedPair pair) {
  if (p == 2 || !is_prime(p)) throw Error(ErrorKind::InvalidArgument, "p must be an odd prime");
  if (!pair.compatible)
    throw Error(ErrorKind::Incompatible, "g g* not in ker(sigma) for some g; the map is not an involution");
  return std::shared_ptr<const AlgebraContext>(new AlgebraContext(p, std::move(pair)));
}

AlgebraElement AlgebraElement::zero(ContextPtr ctx) {
  const int n = ctx->dimension();
  return AlgebraElement(std::move(ctx), Vec(n, 0));
}

AlgebraElement AlgebraElement::one(ContextPtr ctx) {
  const Element e = ctx->group()->identity();
  return basis(std::move(ctx), e);
}

AlgebraElement AlgebraElement::basis(ContextPtr ctx, Element g) {
  const int n = ctx->dimension();
  if (g < 0 || g >= n) throw Error(ErrorKind::InvalidArgument, "group element out of range");
  Vec c(n, 0);
  c[g] = 1;
  return AlgebraElement(std::move(ctx), std::move(c));
}

AlgebraElement AlgebraElement::from_coeffs(ContextPtr ctx, std::span<const long long> coeffs) {
  if (static_cast<int>(coeffs.size()) != ctx->dimension())
    throw Error(ErrorKind::InvalidArgument, "coefficient vector has wrong length");
  Vec c(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) c[i] = ctx->field().reduce(coeffs[i]);
  return AlgebraElement(std::move(ctx), std::move(c));
}

AlgebraElement AlgebraElement::from_residues(ContextPtr ctx, Vec coeffs) {
  if (static_cast<int>(coeffs.size()) != ctx->dimension())
    throw Error(ErrorKind::InvalidArgument, "coefficient vector has wrong length");
  for (auto& x : coeffs) x %= ctx->p();
  return AlgebraElement(std::move(ctx), std::move(coeffs));
}

bool AlgebraElement::is_zero() const noexcept { return all_zero(coeffs_); }

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
  require_same(a.ctx_, b.ctx_);
  Vec c(a.coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.ctx_->field().add(a.coeffs_[i], b.coeffs_[i]);
  return AlgebraElement(a.ctx_, std::move(c));
}

AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
  require_same(a.ctx_, b.ctx_);
  Vec c(a.coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.ctx_->field().sub(a.coeffs_[i], b.coeffs_[i]);
  return AlgebraElement(a.ctx_, std::move(c));
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  require_same(a.ctx_, b.ctx_);
  Vec c(a.coeffs_.size());
  convolve(*a.ctx_->group(), a.ctx_->field(), a.coeffs_, b.coeffs_, c);
  return AlgebraElement(a.ctx_, std::move(c));
}

AlgebraElement operator*(Residue s, const AlgebraElement& a) {
  Vec c(a.coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.ctx_->field().mul(s % a.ctx_->p(), a.coeffs_[i]);
  return AlgebraElement(a.ctx_, std::move(c));
}

void convolve(const FiniteGroup& g, const PrimeField& f, std::span<const Residue> a,
              std::span<const Residue> b, std::span<Residue> out) {
  const int n = g.order();
  const std::uint64_t p = f.modulus();
  if ((p - 1) * (p - 1) <= UINT64_MAX / static_cast<std::uint64_t>(n)) {
    // Lazy reduction: n products of residues fit in 64 bits.
    thread_local std::vector<std::uint64_t> acc;
    acc.assign(n, 0);
    for (int x = 0; x < n; ++x) {
      if (a[x] == 0) continue;
      const auto row = g.row(x);
      const std::uint64_t ax = a[x];
      for (int y = 0; y < n; ++y) acc[row[y]] += ax * b[y];
    }
    for (int z = 0; z < n; ++z) out[z] = static_cast<Residue>(acc[z] % p);
    return;
  }
  std::fill(out.begin(), out.end(), 0);
  for (int x = 0; x < n; ++x) {
    if (a[x] == 0) continue;
    const auto row = g.row(x);
    for (int y = 0; y < n; ++y) {
      if (b[y] == 0) continue;
      out[row[y]] = f.add(out[row[y]], f.mul(a[x], b[y]));
    }
  }
}

void apply_star(const AlgebraContext& ctx, std::span<const Residue> a, std::span<Residue> out) {
  std::fill(out.begin(), out.end(), 0);
  const auto& pair = ctx.pair();
  const auto& f = ctx.field();
  for (int g = 0; g < ctx.dimension(); ++g) {
    if (a[g] == 0) continue;
    const Residue term = pair.sigma(g) == 1 ? a[g] : f.neg(a[g]);
    out[pair.star(g)] = f.add(out[pair.star(g)], term);
  }
}

AlgebraElement apply_star(const AlgebraElement& a) {
  Vec c(a.coeffs().size());
  apply_star(*a.context(), a.coeffs(), c);
  return AlgebraElement::from_residues(a.context(), std::move(c));
}

Matrix left_regular(const AlgebraContext& ctx, std::span<const Residue> a) {
  const auto& g = *ctx.group();
  const int n = g.order();
  Matrix m(n, n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) m.at(g.mul(x, y), y) = a[x];
  return m;
}

bool is_unit(const AlgebraElement& a) { return is_invertible(left_regular(*a.context(), a.coeffs()), a.context()->field()); }

std::optional<AlgebraElement> inverse(const AlgebraElement& a) {
  const auto& ctx = a.context();
  Vec rhs(ctx->dimension(), 0);
  rhs[ctx->group()->identity()] = 1;
  auto x = solve_square(left_regular(*ctx, a.coeffs()), std::move(rhs), ctx->field());
  if (!x) return std::nullopt;
  return AlgebraElement::from_residues(ctx, std::move(*x));
}

UnitTester::UnitTester(const AlgebraContext& ctx)
    : ctx_(ctx), n_(ctx.dimension()), m_(static_cast<std::size_t>(n_) * n_), rhs_(n_) {}

void UnitTester::load(std::span<const Residue> a) {
  const auto& g = *ctx_.group();
  for (int x = 0; x < n_; ++x) {
    const auto row = g.row(x);
    for (int y = 0; y < n_; ++y) m_[static_cast<std::size_t>(row[y]) * n_ + y] = a[x];
  }
}

bool UnitTester::eliminate(std::span<const Residue> a, bool with_rhs) {
  load(a);
  const auto& f = ctx_.field();
  Residue* m = m_.data();
  Residue* b = rhs_.data();
  const int n = n_;
  if (with_rhs) {
    std::fill(rhs_.begin(), rhs_.end(), 0);
    b[ctx_.group()->identity()] = 1;
  }
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i)
      if (m[i * n + c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return false;
    if (piv != c) {
      std::swap_ranges(m + piv * n + c, m + piv * n + n, m + c * n + c);
      if (with_rhs) std::swap(b[piv], b[c]);
    }
    const Residue s = f.inv(m[c * n + c]);
    for (int j = c + 1; j < n; ++j) m[c * n + j] = f.mul(m[c * n + j], s);
    if (with_rhs) b[c] = f.mul(b[c], s);
    const Residue* pivot = m + c * n;
    for (int i = c + 1; i < n; ++i) {
      Residue* row = m + i * n;
      const Residue t = row[c];
      if (t == 0) continue;
      if (f.tiny()) {
        // row + (p - t) pivot stays below p (p + 1), so one reduction suffices
        const Residue u = f.modulus() - t;
        for (int j = c + 1; j < n; ++j) row[j] = f.reduce_tiny(row[j] + u * pivot[j]);
      } else {
        for (int j = c + 1; j < n; ++j) row[j] = f.sub(row[j], f.mul(t, pivot[j]));
      }
      if (with_rhs) b[i] = f.sub(b[i], f.mul(t, b[c]));
    }
  }
  return true;
}

bool UnitTester::is_unit(std::span<const Residue> a) { return eliminate(a, false); }

bool UnitTester::inverse(std::span<const Residue> a, std::span<Residue> out) {
  if (!eliminate(a, true)) return false;
  // unit upper triangular now; back-substitute
  const auto& f = ctx_.field();
  const int n = n_;
  for (int i = n - 1; i >= 0; --i) {
    Residue x = rhs_[i];
    for (int j = i + 1; j < n; ++j) x = f.sub(x, f.mul(m_[static_cast<std::size_t>(i) * n + j], out[j]));
    out[i] = x;
  }
  return true;
}

std::vector<AlgebraElement> symmetric_basis(const ContextPtr& ctx) {
  const auto& pair = ctx->pair();
  const auto& f = ctx->field();
  const int n = ctx->dimension();
  std::vector<AlgebraElement> out;
  for (int g = 0; g < n; ++g) {
    const Element s = pair.star(g);
    if (s < g) continue;  // orbit already handled at its least element
    Vec c(n, 0);
    if (s == g) {
      if (pair.sigma(g) != 1) continue;
      c[g] = 1;
    } else {
      c[g] = 1;
      c[s] = pair.sigma(g) == 1 ? 1 : f.neg(1);
    }
    out.push_back(AlgebraElement::from_residues(ctx, std::move(c)));
  }
  return out;
}

std::vector<AlgebraElement> skew_basis(const ContextPtr& ctx) {
  const auto& pair = ctx->pair();
  const auto& f = ctx->field();
  const int n = ctx->dimension();
  std::vector<AlgebraElement> out;
  for (int g = 0; g < n; ++g) {
    const Element s = pair.star(g);
    if (s < g) continue;
    Vec c(n, 0);
    if (s == g) {
      if (pair.sigma(g) != -1) continue;
      c[g] = 1;
    } else {
      c[g] = 1;
      c[s] = pair.sigma(g) == 1 ? f.neg(1) : 1;
    }
    out.push_back(AlgebraElement::from_residues(ctx, std::move(c)));
  }
  return out;
}

int symmetric_dimension_by_rank(const ContextPtr& ctx) {
  const int n = ctx->dimension();
  const auto& f = ctx->field();
  Matrix m(n, n);
  Vec e(n), img(n);
  for (int g = 0; g < n; ++g) {
    std::fill(e.begin(), e.end(), 0);
    e[g] = 1;
    apply_star(*ctx, e, img);
    img[g] = f.sub(img[g], 1);
    for (int r = 0; r < n; ++r) m.at(r, g) = img[r];
  }
  return n - rank(std::move(m), f);
}

CommutationCheck symmetric_is_commutative(const ContextPtr& ctx) {
  const auto basis = symmetric_basis(ctx);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (!(basis[i] * basis[j] == basis[j] * basis[i])) return {false, std::pair{basis[i], basis[j]}};
  return {};
}

CommutationCheck symmetric_is_central(const ContextPtr& ctx) {
  const auto basis = symmetric_basis(ctx);
  for (const auto& b : basis)
    for (int g = 0; g < ctx->dimension(); ++g) {
      const auto x = AlgebraElement::basis(ctx, g);
      if (!(b * x == x * b)) return {false, std::pair{b, x}};
    }
  return {};
}

std::vector<AlgebraElement> center_basis(const ContextPtr& ctx) {
  std::vector<AlgebraElement> out;
  for (const auto& cls : conjugacy_classes(*ctx->group())) {
    Vec c(ctx->dimension(), 0);
    for (Element g : cls) c[g] = 1;
    out.push_back(AlgebraElement::from_residues(ctx, std::move(c)));
  }
  return out;
}

int span_rank(std::span<const AlgebraElement> a) {
  if (a.empty()) return 0;
  const auto vs = coeff_vectors(a);
  return static_cast<int>(span_basis(vs, a.front().context()->field()).size());
}

bool same_span(std::span<const AlgebraElement> a, std::span<const AlgebraElement> b) {
  if (a.empty() || b.empty()) return span_rank(a) == span_rank(b);
  std::vector<AlgebraElement> both(a.begin(), a.end());
  both.insert(both.end(), b.begin(), b.end());
  const int r = span_rank(both);
  return r == span_rank(a) && r == span_rank(b);
}

IdealBasis::IdealBasis(ContextPtr ctx, std::vector<AlgebraElement> generators) : ctx_(std::move(ctx)) {
  for (const auto& g : generators) require_same(ctx_, g.context());
  const auto& f = ctx_->field();
  const auto echelon = span_basis(coeff_vectors(generators), f);
  for (const auto& v : echelon) basis_.push_back(AlgebraElement::from_residues(ctx_, v));
  for (const auto& b : basis_)
    for (int g = 0; g < ctx_->dimension(); ++g) {
      const auto x = AlgebraElement::basis(ctx_, g);
      if (!all_zero(reduce_against(echelon, (x * b).coeffs(), f)) ||
          !all_zero(reduce_against(echelon, (b * x).coeffs(), f)))
        throw Error(ErrorKind::InvalidArgument, "span is not a two-sided ideal");
    }
}

IdealBasis delta_ideal(const ContextPtr& ctx, const SubgroupSet& h) {
  if (h.parent() != ctx->group()) throw Error(ErrorKind::ParentMismatch, "subgroup lives on a different group");
  const auto q = quotient(h);
  std::vector<AlgebraElement> gens;
  const auto& f = ctx->field();
  for (int g = 0; g < ctx->dimension(); ++g) {
    const Element rep = q.representatives[q.projection[g]];
    if (rep == g) continue;
    Vec c(ctx->dimension(), 0);
    c[g] = 1;
    c[rep] = f.neg(1);
    gens.push_back(AlgebraElement::from_residues(ctx, std::move(c)));
  }
  return IdealBasis(ctx, std::move(gens));
}

std::optional<int> nilpotency_index(const IdealBasis& ideal, int bound) {
  if (bound < 1) throw Error(ErrorKind::InvalidArgument, "bound must be at least 1");
  if (ideal.dimension() == 0) return 1;
  const auto& f = ideal.context()->field();
  std::vector<AlgebraElement> power = ideal.basis();
  for (int k = 2; k <= bound; ++k) {
    std::vector<Vec> products;
    for (const auto& a : power)
      for (const auto& b : ideal.basis()) products.push_back((a * b).coeffs());
    const auto next = span_basis(products, f);
    if (next.empty()) return k;
    power.clear();
    for (const auto& v : next) power.push_back(AlgebraElement::from_residues(ideal.context(), v));
  }
  return std::nullopt;
}

bool is_regular(const AlgebraContext& ctx) { return ctx.dimension() % static_cast<int>(ctx.p()) != 0; }

RadicalFact known_radical(const ContextPtr& ctx) {
  if (is_regular(*ctx))
    return {IdealBasis(ctx, {}), "p does not divide |G|: semisimple, J = 0"};
  const auto pe = p_elements(*ctx->group(), static_cast<int>(ctx->p()));
  if (pe.is_subgroup) {
    const SubgroupSet psub(ctx->group(), pe.elements);
    if (is_normal(psub))
      return {delta_ideal(ctx, psub), "P is a normal p-subgroup: J = Delta(G,P), equal to the prime radical"};
  }
  return {std::nullopt, "radical not determined: P is not a normal subgroup"};
}

IdempotentCheck symmetric_idempotents_central(const ContextPtr& ctx, long long bound) {
  const auto basis = symmetric_basis(ctx);
  const auto& f = ctx->field();
  const int n = ctx->dimension();
  long long total = 1;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    total *= ctx->p();
    if (total > bound)
      throw Error(ErrorKind::BoundExceeded, "symmetric subspace too large for idempotent sweep");
  }
  IdempotentCheck out;
  std::vector<Residue> digits(basis.size(), 0);
  Vec a(n), sq(n), left(n), right(n), gvec(n);
  for (long long idx = 0; idx < total; ++idx) {
    std::fill(a.begin(), a.end(), 0);
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (digits[i] != 0)
        for (int g = 0; g < n; ++g) a[g] = f.add(a[g], f.mul(digits[i], basis[i][g]));
    convolve(*ctx->group(), f, a, a, sq);
    if (sq == a) {
      ++out.idempotents;
      bool central = true;
      for (int g = 0; g < n && central; ++g) {
        std::fill(gvec.begin(), gvec.end(), 0);
        gvec[g] = 1;
        convolve(*ctx->group(), f, a, gvec, left);
        convolve(*ctx->group(), f, gvec, a, right);
        central = left == right;
      }
      if (!central && out.all_central) {
        out.all_central = false;
        out.witness = AlgebraElement::from_residues(ctx, a);
      }
    }
    for (std::size_t i = 0; i < digits.size(); ++i) {
      if (++digits[i] < ctx->p()) break;
      digits[i] = 0;
    }
  }
  return out;
}

}  // namespace grouplab
