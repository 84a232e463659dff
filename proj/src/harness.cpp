#include "grouplab/harness.hpp"

#include <chrono>
#include <ctime>

#include "grouplab/algebra.hpp"
#include "grouplab/error.hpp"
#include "grouplab/group_spec.hpp"

namespace grouplab {

std::vector<CorpusEntry> default_corpus() {
  std::vector<CorpusEntry> out;
  auto add = [&](const std::string& spec, const std::string& why) {
    out.push_back({spec, build_group(spec), why});
  };
  for (int n = 1; n <= 16; ++n) add("C" + std::to_string(n), "cyclic");
  add("C2xC2", "abelian, Klein four");
  add("C2xC4", "abelian");
  add("C2xC2xC2", "abelian, elementary");
  add("C3xC3", "abelian");
  add("C2xC6", "abelian");
  add("C4xC4", "abelian");
  add("C2xC8", "abelian");
  add("C2xC2xC4", "abelian");
  add("C2xC2xC2xC2", "abelian, elementary");
  add("D6", "non-abelian, no unique commutator");
  add("D8", "LC with unique commutator");
  add("D10", "non-abelian, not LC");
  add("D12", "LC fails");
  add("D14", "non-abelian, not LC");
  add("D16", "LC fails, commutator subgroup of order 4");
  add("Q8", "Hamiltonian 2-group");
  add("Q12", "dicyclic, not LC");
  add("Q16", "generalized quaternion, not LC");
  add("Q8xC2", "Hamiltonian 2-group");
  add("D8xC2", "LC with non-abelian index-2 subgroups");
  add("Q8xC3", "mixed order, modular pipeline");
  return out;
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

namespace {

struct GroupWork {
  const CorpusEntry* entry;
  std::vector<AntiAutomorphism> involutions;
  std::vector<Orientation> orientations;  // non-trivial only
  std::string skip_reason;
};

struct Task {
  std::size_t group;
  int involution;
  int orientation;  // -1 = trivial
};

void summarize(VerificationRun& run) {
  RunSummary s;
  for (const auto& r : run.records) {
    ++s.triples;
    if (r.status == "processed") ++s.processed;
    else if (r.status == "out-of-statement") ++s.out_of_statement;
    else if (r.status == "skipped") ++s.skipped;
    else ++s.errors;
    if (r.agreement) (*r.agreement ? s.agreements : s.disagreements)++;
  }
  run.summary = s;
}

void fill_oracle(TripleRecord& rec, const AntiAutomorphism& star, const Orientation& sigma,
                 const std::vector<int>& primes) {
  for (int p : primes) {
    auto ctx = AlgebraContext::make(static_cast<Residue>(p), make_pair(star, sigma));
    rec.oracle_commutative[p] = symmetric_is_commutative(ctx).holds;
    rec.oracle_central[p] = symmetric_is_central(ctx).holds;
  }
}

void evaluate(TripleRecord& rec, const std::string& kind, const GroupWork& w, const Task& t,
              const std::vector<int>& primes) {
  const auto& g = w.entry->group;
  const auto& star = w.involutions[t.involution];
  const auto sigma = t.orientation < 0 ? Orientation::trivial(g) : w.orientations[t.orientation];
  const auto pair = make_pair(star, sigma);
  rec.compatible = pair.compatible;
  rec.abelian = is_abelian(*g);
  rec.slc_canonical = is_slc_canonical(g, star);

  if (kind == "lemma5") {
    rec.predicate = rec.abelian || rec.slc_canonical;
  } else {
    if (!pair.compatible) {
      rec.status = "out-of-statement";
      rec.reason = "incompatible pair: g g* not in ker(sigma)";
      return;
    }
    if (rec.abelian) {
      rec.status = "out-of-statement";
      rec.reason = "abelian group";
      return;
    }
    const auto report = check_theorem1(g, pair);
    rec.cond1 = report.thm1_cond1;
    rec.cond2 = report.thm1_cond2;
    rec.predicate = report.lemma8_verdict;
  }
  fill_oracle(rec, star, sigma, primes);
  bool agree = true;
  for (const auto& [p, v] : rec.oracle_commutative) agree = agree && v == *rec.predicate;
  rec.agreement = agree;
  rec.status = "processed";
}

VerificationRun sweep(const std::string& kind, const SweepOptions& opts) {
  for (int p : opts.primes)
    if (p == 2 || !is_prime(p)) throw Error(ErrorKind::InvalidArgument, "primes must be odd primes");
  const auto corpus = opts.corpus ? *opts.corpus : default_corpus();

  std::vector<GroupWork> groups;
  for (const auto& entry : corpus) {
    if (entry.group->order() > opts.max_order) continue;
    GroupWork w{&entry, {}, {}, {}};
    try {
      w.involutions = enumerate_involutions(entry.group, {opts.max_order, opts.max_involutions});
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::BoundExceeded) throw;
      w.skip_reason = e.what();
    }
    if (kind == "lemma8") w.orientations = enumerate_orientations(entry.group, false);
    groups.push_back(std::move(w));
  }

  std::vector<Task> tasks;
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    const auto& w = groups[gi];
    if (!w.skip_reason.empty()) {
      tasks.push_back({gi, -1, -1});
      continue;
    }
    for (int i = 0; i < static_cast<int>(w.involutions.size()); ++i) {
      if (kind == "lemma5") {
        tasks.push_back({gi, i, -1});
      } else {
        for (int o = 0; o < static_cast<int>(w.orientations.size()); ++o) tasks.push_back({gi, i, o});
      }
    }
  }
  std::vector<TripleRecord> records(tasks.size());

  const long long count = static_cast<long long>(tasks.size());
#pragma omp parallel for schedule(dynamic, 1) if (opts.parallel)
  for (long long k = 0; k < count; ++k) {
    const auto& t = tasks[k];
    const auto& w = groups[t.group];
    auto& rec = records[k];
    rec.group = w.entry->spec;
    rec.order = w.entry->group->order();
    if (t.involution < 0) {
      rec.status = "skipped";
      rec.reason = w.skip_reason;
      continue;
    }
    rec.involution = t.involution;
    rec.orientation = t.orientation;
    try {
      evaluate(rec, kind, w, t, opts.primes);
    } catch (const std::exception& e) {
      rec.status = "error";
      rec.reason = e.what();
    }
  }

  VerificationRun run;
  run.kind = kind;
  run.timestamp = opts.timestamp.empty() ? utc_timestamp() : opts.timestamp;
  run.primes = opts.primes;
  run.max_order = opts.max_order;
  run.max_involutions = opts.max_involutions;
  run.records = std::move(records);
  summarize(run);
  return run;
}

}  // namespace

VerificationRun run_lemma8_verification(const SweepOptions& opts) { return sweep("lemma8", opts); }
VerificationRun run_lemma5_verification(const SweepOptions& opts) { return sweep("lemma5", opts); }

PipelineResult run_modular_pipeline(const GroupPtr& g, int p, const OrientedPair& pair, const PipelineOptions& opts) {
  if (p == 2 || !is_prime(p))
    throw Error(ErrorKind::InvalidArgument, "p must be an odd prime (characteristic 2 is excluded)");
  PipelineResult out;
  out.group = g->name();
  out.p = p;
  out.p_set = p_elements(*g, p);
  if (!out.p_set.is_subgroup) {
    out.finding = "PNotSubgroup: the p-elements are not closed under multiplication";
    out.lemma12 = {"skipped", std::nullopt, "P is not a subgroup", std::nullopt};
    return out;
  }
  const SubgroupSet psub(g, out.p_set.elements);
  out.p_normal = is_normal(psub);
  if (!out.p_normal) {
    out.finding = "NotNormal: P is a subgroup but not normal";
    out.lemma12 = {"skipped", std::nullopt, "P is not normal", std::nullopt};
    return out;
  }
  if (psub.size() == 1) out.notes.push_back("p does not divide |G|: P trivial, classification is that of G itself");

  const auto ctx = AlgebraContext::make(static_cast<Residue>(p), pair);
  const auto delta = delta_ideal(ctx, psub);
  out.delta_dimension = delta.dimension();
  out.delta_nilpotency = nilpotency_index(delta, opts.nilpotency_bound);
  out.radical_note = known_radical(ctx).note;

  try {
    out.theorem2 = check_theorem2(g, pair, p);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::TrivialOrientation) throw;
    out.notes.push_back("trivial orientation: quotient classification not applicable");
  }
  if (out.theorem2) {
    const auto qctx = AlgebraContext::make(static_cast<Residue>(p), out.theorem2->induced.pair);
    out.quotient_symmetric_commutative = symmetric_is_commutative(qctx).holds;
    if (out.theorem2->conditions_hold() && out.delta_nilpotency) {
      int n = 0;
      long long pw = 1;
      while (pw < *out.delta_nilpotency) {
        pw *= p;
        ++n;
      }
      out.lemma12.radical_bound = n;
    }
  }

  // c + j with c != 0 and j symmetric in J is a symmetric unit.
  if (const auto rad = known_radical(ctx); rad.radical) {
    const auto sym = symmetric_basis(ctx);
    const auto& jb = rad.radical->basis();
    std::vector<AlgebraElement> both(sym);
    both.insert(both.end(), jb.begin(), jb.end());
    const int d = static_cast<int>(sym.size()) + rad.radical->dimension() - span_rank(both);
    long double lower = p - 1;
    for (int i = 0; i < d; ++i) lower *= p;
    if (lower * lower > static_cast<long double>(opts.search.tuple_bound)) {
      out.lemma12.status = "skipped";
      out.lemma12.reason = "at least " + std::to_string(static_cast<long long>(lower)) +
                           " symmetric units (c + J^+, dim J^+ = " + std::to_string(d) +
                           "), unit pairs exceed the tuple bound";
      return out;
    }
  }

  try {
    const auto units = enumerate_units(ctx, true, opts.search);
    const auto n = commutator_p_power(units, opts.n_max, opts.search);
    out.lemma12.n = n;
    out.lemma12.status = n ? "computed" : "absent";
    if (!n) out.lemma12.reason = "no n <= " + std::to_string(opts.n_max) + " kills all symmetric commutators";
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::BoundExceeded) throw;
    out.lemma12.status = "skipped";
    out.lemma12.reason = e.what();
  }
  return out;
}

}  // namespace grouplab
