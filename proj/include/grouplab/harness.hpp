#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "grouplab/group.hpp"
#include "grouplab/identity.hpp"
#include "grouplab/involution.hpp"
#include "grouplab/predicates.hpp"

namespace grouplab {

struct CorpusEntry {
  std::string spec;
  GroupPtr group;
  std::string provenance;
};

/// Hand-built covering set: every abelian group of order <= 16 by products,
/// D6..D16, Q8, Q16, Q8xC2, D8xC2, and Q8xC3 for the modular pipeline.
std::vector<CorpusEntry> default_corpus();

struct TripleRecord {
  std::string group;
  int order = 0;
  int involution = -1;   // index into enumerate_involutions
  int orientation = -1;  // index into the non-trivial orientations; -1 = trivial
  std::string status;    // processed | out-of-statement | skipped
  std::string reason;
  bool compatible = false;
  bool abelian = false;
  bool slc_canonical = false;
  bool cond1 = false;
  bool cond2 = false;
  std::optional<bool> predicate;
  std::map<int, bool> oracle_commutative;  // p -> F_p G+ commutative
  std::map<int, bool> oracle_central;      // p -> F_p G+ central
  std::optional<bool> agreement;

  friend bool operator==(const TripleRecord&, const TripleRecord&) = default;
};

struct RunSummary {
  long long triples = 0;
  long long processed = 0;
  long long out_of_statement = 0;
  long long skipped = 0;
  long long agreements = 0;
  long long disagreements = 0;
  long long errors = 0;

  friend bool operator==(const RunSummary&, const RunSummary&) = default;
};

struct VerificationRun {
  int schema = 1;
  std::string kind;  // lemma5 | lemma8
  std::string timestamp;
  std::vector<int> primes;
  int max_order = 16;
  int max_involutions = 512;
  std::vector<TripleRecord> records;  // sorted by (corpus position, involution, orientation)
  RunSummary summary;

  bool passed() const { return summary.disagreements == 0 && summary.errors == 0; }
  friend bool operator==(const VerificationRun&, const VerificationRun&) = default;
};

struct SweepOptions {
  std::vector<int> primes{3, 5};
  int max_order = 16;
  int max_involutions = 512;
  bool parallel = true;
  std::optional<std::vector<CorpusEntry>> corpus;  // default_corpus() when empty
  std::string timestamp;                           // current UTC time when empty
};

/// Non-trivial orientations: commutativity of F_p G+ against cond1 or cond2
/// conditions, for every compatible pair of every non-abelian corpus group.
VerificationRun run_lemma8_verification(const SweepOptions& opts = {});
/// Trivial orientation: commutativity of F_p G+ against (abelian or SLC).
VerificationRun run_lemma5_verification(const SweepOptions& opts = {});

struct Lemma12Result {
  std::string status;  // computed | absent | skipped
  std::optional<int> n;
  std::string reason;
  /// Least n with p^n >= nilpotency index of Delta(G,P); an upper bound for
  /// the exhaustive n whenever the quotient conditions hold.
  std::optional<int> radical_bound;
};

struct PipelineResult {
  std::string group;
  int p = 0;
  PElements p_set;
  bool p_normal = false;
  std::string finding;  // non-empty when the pipeline stopped early (e.g. PNotSubgroup)
  int delta_dimension = 0;
  std::optional<int> delta_nilpotency;
  std::string radical_note;
  std::optional<Theorem2Report> theorem2;
  std::optional<bool> quotient_symmetric_commutative;
  Lemma12Result lemma12;
  std::vector<std::string> notes;
};

struct PipelineOptions {
  int n_max = 4;
  int nilpotency_bound = 64;
  SearchOptions search;
};

/// P, Delta(G,P) nilpotency, induced pair on G/P, quotient classification
/// and, within bounds, the exhaustive symmetric-commutator p-power check.
/// Throws Error{InvalidArgument} for p = 2 or composite p.
PipelineResult run_modular_pipeline(const GroupPtr& g, int p, const OrientedPair& pair,
                                    const PipelineOptions& opts = {});

std::string utc_timestamp();

}  // namespace grouplab
