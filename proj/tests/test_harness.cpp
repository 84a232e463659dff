#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>

#include <gtest/gtest.h>

#include "grouplab/error.hpp"
#include "grouplab/group_spec.hpp"
#include "grouplab/harness.hpp"
#include "grouplab/report.hpp"

using namespace grouplab;

namespace {

SubgroupSet gen(const GroupPtr& g, std::vector<Element> xs) { return subgroup_generated(g, xs); }

std::vector<CorpusEntry> slice(std::initializer_list<const char*> specs) {
  std::vector<CorpusEntry> out;
  for (const char* s : specs) out.push_back({s, build_group(s), "test"});
  return out;
}

const TripleRecord* find(const VerificationRun& run, const std::string& group, auto&& pred) {
  for (const auto& r : run.records)
    if (r.group == group && pred(r)) return &r;
  return nullptr;
}

SweepOptions small(std::initializer_list<const char*> specs) {
  SweepOptions o;
  o.corpus = slice(specs);
  o.timestamp = "2000-01-01T00:00:00Z";
  return o;
}

}  // namespace

TEST(Sweep, Lemma5SmallCorpusAgrees) {
  SweepOptions o;
  o.max_order = 8;
  o.timestamp = "fixed";
  const auto run = run_lemma5_verification(o);
  EXPECT_TRUE(run.passed());
  EXPECT_EQ(run.summary.disagreements, 0);
  EXPECT_GT(run.summary.processed, 20);
  EXPECT_EQ(run.summary.agreements, run.summary.processed);
}

TEST(Sweep, Lemma8SmallCorpusAgrees) {
  SweepOptions o;
  o.max_order = 8;
  o.timestamp = "fixed";
  const auto run = run_lemma8_verification(o);
  EXPECT_TRUE(run.passed());
  EXPECT_GT(run.summary.processed, 10);
  EXPECT_EQ(run.summary.agreements, run.summary.processed);
}

TEST(Sweep, CompletenessAccounting) {
  const auto opts = small({"C4", "D8", "Q8", "C2xC2xC2", "D6"});
  const auto run = run_lemma8_verification(opts);
  const auto& s = run.summary;
  EXPECT_EQ(s.triples, static_cast<long long>(run.records.size()));
  EXPECT_EQ(s.processed + s.out_of_statement + s.skipped + s.errors, s.triples);
  EXPECT_EQ(s.errors, 0);

  std::set<std::tuple<std::string, int, int>> keys;
  long long expected = 0;
  for (const auto& e : *opts.corpus)
    expected += static_cast<long long>(enumerate_involutions(e.group).size() *
                                       enumerate_orientations(e.group, false).size());
  for (const auto& r : run.records) {
    EXPECT_TRUE(keys.insert({r.group, r.involution, r.orientation}).second);
    EXPECT_TRUE(r.status == "processed" || r.status == "out-of-statement" || (r.status == "skipped" && !r.reason.empty()));
    if (r.status == "out-of-statement") EXPECT_FALSE(r.reason.empty());
  }
  EXPECT_EQ(s.triples, expected);
  // Abelian entries are out of statement.
  for (const auto& r : run.records)
    if (r.group == "C4" || r.group == "C2xC2xC2") EXPECT_EQ(r.status, "out-of-statement");
}

TEST(Sweep, OversizeGroupIsSkippedWithReason) {
  auto opts = small({"Q8", "Q8xC3"});
  opts.max_order = 24;
  opts.max_involutions = 16;
  const auto run = run_lemma5_verification(opts);
  const auto* r = find(run, "Q8xC3", [](const auto&) { return true; });
  ASSERT_NE(r, nullptr);
  EXPECT_EQ(r->status, "skipped");
  EXPECT_FALSE(r->reason.empty());
  EXPECT_EQ(run.summary.skipped, 1);
  EXPECT_TRUE(run.passed());
}

TEST(Sweep, RejectsEvenPrime) {
  auto opts = small({"C2"});
  opts.primes = {2};
  EXPECT_THROW(run_lemma5_verification(opts), Error);
  opts.primes = {9};
  EXPECT_THROW(run_lemma8_verification(opts), Error);
}

TEST(Sweep, Lemma5Examples) {
  auto opts = small({"Q8", "D8", "C8"});
  opts.primes = {3, 5};
  const auto run = run_lemma5_verification(opts);
  const auto& q8 = (*opts.corpus)[0].group;
  const auto all_q8 = enumerate_involutions(q8);
  const int qi = static_cast<int>(std::find(all_q8.begin(), all_q8.end(), classical_involution(q8)) - all_q8.begin());
  const auto* q = find(run, "Q8", [&](const auto& r) { return r.involution == qi; });
  ASSERT_NE(q, nullptr);
  EXPECT_TRUE(*q->predicate);
  EXPECT_TRUE(q->oracle_commutative.at(3));

  const auto& d8 = (*opts.corpus)[1].group;
  const auto all_d8 = enumerate_involutions(d8);
  const int di = static_cast<int>(std::find(all_d8.begin(), all_d8.end(), classical_involution(d8)) - all_d8.begin());
  const auto* d = find(run, "D8", [&](const auto& r) { return r.involution == di; });
  ASSERT_NE(d, nullptr);
  EXPECT_FALSE(*d->predicate);
  EXPECT_FALSE(d->oracle_commutative.at(3));

  for (const auto& r : run.records)
    if (r.group == "C8") {
      EXPECT_TRUE(*r.predicate);
      EXPECT_TRUE(r.oracle_commutative.at(5));
    }
  EXPECT_TRUE(run.passed());
}

TEST(Sweep, Lemma8Examples) {
  const auto run = run_lemma8_verification(small({"Q8", "D8"}));
  EXPECT_TRUE(run.passed());
  // Some Q8 pair satisfies cond1, and there the oracle agrees.
  const auto* c1 = find(run, "Q8", [](const auto& r) { return r.cond1; });
  ASSERT_NE(c1, nullptr);
  EXPECT_TRUE(*c1->predicate);
  EXPECT_TRUE(c1->oracle_commutative.at(3));
  int d8 = 0;
  for (const auto& r : run.records)
    if (r.group == "D8" && r.status == "processed") {
      EXPECT_EQ(*r.predicate, r.oracle_commutative.at(3));
      ++d8;
    }
  EXPECT_GT(d8, 0);
}

TEST(Sweep, SerialMatchesParallel) {
  auto a = small({"D8", "Q8", "C2xC4", "D6"});
  auto b = a;
  b.parallel = false;
  EXPECT_EQ(run_lemma8_verification(a), run_lemma8_verification(b));
}

TEST(Report, DeterministicJson) {
  const auto opts = small({"D8", "Q8", "C6"});
  EXPECT_EQ(emit_report(run_lemma8_verification(opts), ReportFormat::Json),
            emit_report(run_lemma8_verification(opts), ReportFormat::Json));
  EXPECT_EQ(emit_report(run_lemma5_verification(opts), ReportFormat::Markdown),
            emit_report(run_lemma5_verification(opts), ReportFormat::Markdown));
}

TEST(Report, JsonRoundTrip) {
  const auto run = run_lemma8_verification(small({"D8", "Q8", "C4"}));
  const auto text = emit_report(run, ReportFormat::Json);
  EXPECT_EQ(parse_report(text), run);
  EXPECT_EQ(emit_report(parse_report(text), ReportFormat::Json), text);
  EXPECT_EQ(json::parse(text).at("schema"), 1);
}

TEST(Report, EmptyRun) {
  VerificationRun run;
  run.kind = "lemma8";
  run.timestamp = "t";
  const auto text = emit_report(run, ReportFormat::Json);
  EXPECT_EQ(parse_report(text), run);
  EXPECT_TRUE(json::parse(text).at("records").empty());
  const auto md = emit_report(run, ReportFormat::Markdown);
  EXPECT_NE(md.find("| group | p |"), std::string::npos);
  EXPECT_EQ(md.substr(md.find("| group | p |")).find("\n|---|---|---|---|---|---|---|\n"),
            md.substr(md.find("| group | p |")).find('\n'));
  EXPECT_TRUE(run.passed());
}

TEST(Report, MarkdownTable) {
  const auto run = run_lemma8_verification(small({"D8", "Q8"}));
  const auto md = emit_report(run, ReportFormat::Markdown);
  for (const char* row : {"| D8 | 3 |", "| D8 | 5 |", "| Q8 | 3 |", "| Q8 | 5 |"})
    EXPECT_NE(md.find(row), std::string::npos) << row;
  // The disagreement column is all zero.
  std::istringstream in(md.substr(md.find("| group | p |")));
  std::string line;
  std::getline(in, line);
  std::getline(in, line);
  int rows = 0;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, '|')) cells.push_back(cell);
    ASSERT_GE(cells.size(), 6u);
    EXPECT_EQ(cells[5], " 0 ") << line;
    ++rows;
  }
  EXPECT_EQ(rows, 4);
}

TEST(Report, RejectsOtherSchemas) {
  auto j = json::parse(emit_report(run_lemma5_verification(small({"C2"})), ReportFormat::Json));
  j["schema"] = 2;
  try {
    parse_report(j.dump());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ParseError);
  }
  EXPECT_THROW(parse_report("{"), Error);
}

TEST(Pipeline, Q8xC3) {
  const auto g = build_group("Q8xC3");
  const auto pair = make_pair(classical_involution(g), Orientation::from_kernel(gen(g, {3, 1})));
  const auto r = run_modular_pipeline(g, 3, pair);
  EXPECT_TRUE(r.finding.empty());
  EXPECT_TRUE(r.p_set.is_subgroup);
  EXPECT_EQ(r.p_set.elements.size(), 3u);
  EXPECT_TRUE(r.p_normal);
  EXPECT_EQ(r.delta_dimension, 16);
  ASSERT_TRUE(r.delta_nilpotency);
  EXPECT_EQ(*r.delta_nilpotency, 3);
  ASSERT_TRUE(r.theorem2);
  EXPECT_EQ(r.theorem2->induced.quotient.quotient->order(), 8);
  EXPECT_TRUE(r.theorem2->quotient_report.lc_G);
  ASSERT_TRUE(r.quotient_symmetric_commutative);
  EXPECT_FALSE(*r.quotient_symmetric_commutative);
  EXPECT_EQ(r.theorem2->theorem2_case, 0);
  EXPECT_EQ(r.lemma12.status, "skipped");
  EXPECT_FALSE(r.lemma12.reason.empty());
  const auto j = to_json(r);
  EXPECT_EQ(j.at("schema"), 1);
}

TEST(Pipeline, RejectsEvenAndComposite) {
  const auto d6 = build_group("D6");
  const auto pair = make_pair(classical_involution(d6), Orientation::trivial(d6));
  for (int p : {2, 4, 9}) {
    try {
      run_modular_pipeline(d6, p, pair);
      FAIL() << p;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::InvalidArgument);
    }
  }
}

TEST(Pipeline, C6CaseOne) {
  const auto c6 = build_group("C6");
  const auto pair = make_pair(classical_involution(c6), Orientation::from_kernel(gen(c6, {2})));
  const auto r = run_modular_pipeline(c6, 3, pair);
  ASSERT_TRUE(r.theorem2);
  EXPECT_EQ(r.theorem2->theorem2_case, 1);
  EXPECT_EQ(r.theorem2->induced.quotient.quotient->order(), 2);
  EXPECT_EQ(r.lemma12.status, "computed");
  EXPECT_EQ(r.lemma12.n, 0);
  EXPECT_EQ(r.lemma12.radical_bound, 1);
}

TEST(Pipeline, TwistedD6NeedsOnePower) {
  const auto d6 = build_group("D6");
  std::vector<Element> image(6);
  for (int x = 0; x < 6; ++x) image[x] = d6->mul(d6->mul(3, d6->inv(x)), 3);
  const auto pair = make_pair(AntiAutomorphism(d6, image), Orientation::from_kernel(gen(d6, {1})));
  ASSERT_TRUE(pair.compatible);
  const auto r = run_modular_pipeline(d6, 3, pair);
  ASSERT_TRUE(r.theorem2);
  EXPECT_NE(r.theorem2->theorem2_case, 0);
  EXPECT_EQ(r.lemma12.status, "computed");
  EXPECT_EQ(r.lemma12.n, 1);
  ASSERT_TRUE(r.lemma12.radical_bound);
  EXPECT_LE(*r.lemma12.n, *r.lemma12.radical_bound);
}

TEST(Pipeline, NonSubgroupFinding) {
  const auto q12 = build_group("Q12");
  const auto pair = make_pair(classical_involution(q12), Orientation::trivial(q12));
  const auto r = run_modular_pipeline(q12, 3, pair);
  EXPECT_TRUE(r.finding.empty());
  EXPECT_TRUE(r.p_normal);
  const auto d8 = build_group("D8");
  const auto r2 = run_modular_pipeline(d8, 3, make_pair(classical_involution(d8), Orientation::trivial(d8)));
  EXPECT_EQ(r2.p_set.elements, (std::vector<Element>{0}));
  EXPECT_EQ(r2.delta_dimension, 0);
}
