#include "grouplab/identity.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "grouplab/error.hpp"

namespace grouplab {

using Letter = WordIdentity::Letter;

namespace {

std::vector<Letter> inverse_word(const std::vector<Letter>& w) {
  std::vector<Letter> out(w.rbegin(), w.rend());
  for (auto& l : out) l.exponent = -l.exponent;
  return out;
}

std::vector<Letter> concat(std::vector<Letter> a, const std::vector<Letter>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::vector<Letter> commutator_of(const std::vector<Letter>& a, const std::vector<Letter>& b) {
  return concat(concat(concat(inverse_word(a), inverse_word(b)), a), b);
}

class WordParser {
 public:
  explicit WordParser(std::string_view text) : s_(text) {}

  std::vector<Letter> parse() {
    auto w = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::ParseError, msg + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  long long integer() {
    skip();
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) neg = s_[pos_++] == '-';
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected integer");
    long long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_++] - '0');
      if (v > 1'000'000) fail("integer too large");
    }
    return neg ? -v : v;
  }

  std::vector<Letter> expr() {
    std::vector<Letter> w;
    bool any = false;
    while (true) {
      skip();
      if (pos_ >= s_.size() || s_[pos_] == ')' || s_[pos_] == ',') break;
      if (s_[pos_] == '*') {
        if (!any) fail("dangling '*'");
        ++pos_;
        continue;
      }
      w = concat(std::move(w), term());
      any = true;
    }
    if (!any) fail("empty word");
    return w;
  }

  std::vector<Letter> term() {
    auto base = atom();
    while (peek('^')) {
      ++pos_;
      const long long k = integer();
      const auto unit = k < 0 ? inverse_word(base) : base;
      std::vector<Letter> out;
      for (long long i = 0; i < (k < 0 ? -k : k); ++i) out = concat(std::move(out), unit);
      base = std::move(out);
    }
    return base;
  }

  std::vector<Letter> atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    if (s_[pos_] == 'x') {
      ++pos_;
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected variable index");
      const long long i = integer();
      if (i < 1) fail("variable index must be >= 1");
      return {{static_cast<int>(i), 1}};
    }
    if (s_[pos_] == '(') {
      ++pos_;
      std::vector<std::vector<Letter>> parts{expr()};
      while (peek(',')) {
        ++pos_;
        parts.push_back(expr());
      }
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      auto acc = std::move(parts.front());
      for (std::size_t i = 1; i < parts.size(); ++i) acc = commutator_of(acc, parts[i]);
      return acc;
    }
    fail("unexpected '" + std::string(1, s_[pos_]) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<Letter> reduce_word(std::vector<Letter> letters) {
  std::vector<Letter> stack;
  for (const auto& l : letters) {
    if (l.exponent == 0) continue;
    if (!stack.empty() && stack.back().variable == l.variable) {
      stack.back().exponent += l.exponent;
      if (stack.back().exponent == 0) stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return stack;
}

WordIdentity::WordIdentity(std::vector<Letter> letters) {
  for (const auto& l : letters)
    if (l.variable < 1) throw Error(ErrorKind::InvalidArgument, "variable index must be >= 1");
  letters_ = reduce_word(std::move(letters));
  if (letters_.empty()) throw Error(ErrorKind::InvalidArgument, "word reduces to the trivial word");
  for (const auto& l : letters_) arity_ = std::max(arity_, l.variable);
}

WordIdentity WordIdentity::parse(std::string_view text) { return WordIdentity(WordParser(text).parse()); }

WordIdentity WordIdentity::commutator() { return WordIdentity({{1, -1}, {2, -1}, {1, 1}, {2, 1}}); }

std::string WordIdentity::to_string() const {
  std::string out;
  for (const auto& l : letters_) {
    if (!out.empty()) out += ' ';
    out += "x" + std::to_string(l.variable);
    if (l.exponent != 1) out += "^" + std::to_string(l.exponent);
  }
  return out;
}

kernels::RawWord WordIdentity::raw() const {
  kernels::RawWord w;
  w.arity = arity_;
  for (const auto& l : letters_) w.letters.emplace_back(l.variable - 1, l.exponent);
  return w;
}

AlgebraElement UnitSet::unit(std::size_t i) const {
  const auto v = data_.units[i];
  return AlgebraElement::from_residues(ctx_, Vec(v.begin(), v.end()));
}

AlgebraElement UnitSet::inverse_of(std::size_t i) const {
  const auto v = data_.inverses[i];
  return AlgebraElement::from_residues(ctx_, Vec(v.begin(), v.end()));
}

UnitSet enumerate_units(const ContextPtr& ctx, bool symmetric_only, const SearchOptions& opts) {
  std::vector<Vec> basis;
  if (symmetric_only) {
    for (const auto& b : symmetric_basis(ctx)) basis.push_back(b.coeffs());
  } else {
    for (int g = 0; g < ctx->dimension(); ++g) basis.push_back(AlgebraElement::basis(ctx, g).coeffs());
  }
  const auto space = kernels::make_space(*ctx, std::move(basis), opts.space_bound);
  auto data = opts.parallel ? kernels::parallel::enumerate_units(*ctx, space)
                            : kernels::serial::enumerate_units(*ctx, space);
  return UnitSet(ctx, symmetric_only, std::move(data));
}

AlgebraElement evaluate_word(const WordIdentity& w, std::span<const AlgebraElement> args) {
  if (static_cast<int>(args.size()) != w.arity())
    throw Error(ErrorKind::InvalidArgument, "word has arity " + std::to_string(w.arity()) + " but got " +
                                                std::to_string(args.size()) + " arguments");
  const auto& ctx = args.front().context();
  for (const auto& a : args)
    if (a.context() != ctx) throw Error(ErrorKind::ContextMismatch, "arguments belong to different algebras");
  std::map<int, AlgebraElement> inverses;
  for (int v = 1; v <= w.arity(); ++v) {
    auto inv = inverse(args[v - 1]);
    if (!inv) throw Error(ErrorKind::NotAUnit, "argument x" + std::to_string(v) + " is not a unit");
    inverses.emplace(v, std::move(*inv));
  }
  auto acc = AlgebraElement::one(ctx);
  for (const auto& l : w.letters()) {
    const auto& factor = l.exponent > 0 ? args[l.variable - 1] : inverses.at(l.variable);
    for (int k = 0; k < std::abs(l.exponent); ++k) acc = acc * factor;
  }
  return acc;
}

IdentityCheck satisfies_identity(const UnitSet& set, const WordIdentity& w, const SearchOptions& opts) {
  long long total = 1;
  for (int i = 0; i < w.arity(); ++i) {
    total *= static_cast<long long>(set.size());
    if (total > opts.tuple_bound)
      throw Error(ErrorKind::BoundExceeded, std::to_string(set.size()) + "^" + std::to_string(w.arity()) +
                                                " tuples exceed bound " + std::to_string(opts.tuple_bound));
  }
  const auto raw = w.raw();
  const auto& ctx = *set.context();
  auto failing = opts.parallel ? kernels::parallel::first_failing_tuple(ctx, set.raw(), raw)
                               : kernels::serial::first_failing_tuple(ctx, set.raw(), raw);
  IdentityCheck out;
  if (!failing) return out;
  out.holds = false;
  for (int idx : *failing) out.witness.push_back(set.unit(static_cast<std::size_t>(idx)));
  out.witness_value = evaluate_word(w, out.witness);
  out.witness_indices = std::move(failing);
  return out;
}

std::optional<int> commutator_p_power(const UnitSet& symmetric_units, int n_max, const SearchOptions& opts) {
  const long long m = static_cast<long long>(symmetric_units.size());
  if (m > 0 && m > opts.tuple_bound / m)
    throw Error(ErrorKind::BoundExceeded,
                std::to_string(m) + "^2 unit pairs exceed bound " + std::to_string(opts.tuple_bound));
  const auto& ctx = *symmetric_units.context();
  return opts.parallel ? kernels::parallel::commutator_exponent(ctx, symmetric_units.raw(), n_max)
                       : kernels::serial::commutator_exponent(ctx, symmetric_units.raw(), n_max);
}

std::optional<int> commutator_p_power(const ContextPtr& ctx, int n_max, const SearchOptions& opts) {
  return commutator_p_power(enumerate_units(ctx, true, opts), n_max, opts);
}

}  // namespace grouplab
