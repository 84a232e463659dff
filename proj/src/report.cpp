#include "grouplab/report.hpp"

#include <map>
#include <sstream>

#include "grouplab/error.hpp"

namespace grouplab {

namespace {

json bool_map(const std::map<int, bool>& m) {
  json j = json::object();
  for (const auto& [k, v] : m) j[std::to_string(k)] = v;
  return j;
}

std::map<int, bool> parse_bool_map(const json& j) {
  std::map<int, bool> m;
  for (const auto& [k, v] : j.items()) m[std::stoi(k)] = v.get<bool>();
  return m;
}

template <class T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <class T>
std::optional<T> parse_optional(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<T>();
}

}  // namespace

void to_json(json& j, const TripleRecord& r) {
  j = json{{"group", r.group},
           {"order", r.order},
           {"involution", r.involution},
           {"orientation", r.orientation},
           {"status", r.status},
           {"reason", r.reason},
           {"compatible", r.compatible},
           {"abelian", r.abelian},
           {"slc_canonical", r.slc_canonical},
           {"cond1", r.cond1},
           {"cond2", r.cond2},
           {"predicate", optional_json(r.predicate)},
           {"oracle_commutative", bool_map(r.oracle_commutative)},
           {"oracle_central", bool_map(r.oracle_central)},
           {"agreement", optional_json(r.agreement)}};
}

void from_json(const json& j, TripleRecord& r) {
  r.group = j.at("group").get<std::string>();
  r.order = j.at("order").get<int>();
  r.involution = j.at("involution").get<int>();
  r.orientation = j.at("orientation").get<int>();
  r.status = j.at("status").get<std::string>();
  r.reason = j.at("reason").get<std::string>();
  r.compatible = j.at("compatible").get<bool>();
  r.abelian = j.at("abelian").get<bool>();
  r.slc_canonical = j.at("slc_canonical").get<bool>();
  r.cond1 = j.at("cond1").get<bool>();
  r.cond2 = j.at("cond2").get<bool>();
  r.predicate = parse_optional<bool>(j.at("predicate"));
  r.oracle_commutative = parse_bool_map(j.at("oracle_commutative"));
  r.oracle_central = parse_bool_map(j.at("oracle_central"));
  r.agreement = parse_optional<bool>(j.at("agreement"));
}

void to_json(json& j, const RunSummary& s) {
  j = json{{"triples", s.triples},       {"processed", s.processed}, {"out_of_statement", s.out_of_statement},
           {"skipped", s.skipped},       {"agreements", s.agreements}, {"disagreements", s.disagreements},
           {"errors", s.errors}};
}

void from_json(const json& j, RunSummary& s) {
  s.triples = j.at("triples").get<long long>();
  s.processed = j.at("processed").get<long long>();
  s.out_of_statement = j.at("out_of_statement").get<long long>();
  s.skipped = j.at("skipped").get<long long>();
  s.agreements = j.at("agreements").get<long long>();
  s.disagreements = j.at("disagreements").get<long long>();
  s.errors = j.at("errors").get<long long>();
}

void to_json(json& j, const VerificationRun& run) {
  j = json{{"schema", run.schema},
           {"kind", run.kind},
           {"timestamp", run.timestamp},
           {"primes", run.primes},
           {"max_order", run.max_order},
           {"max_involutions", run.max_involutions},
           {"summary", run.summary},
           {"records", run.records}};
}

void from_json(const json& j, VerificationRun& run) {
  run.schema = j.at("schema").get<int>();
  if (run.schema != 1) throw Error(ErrorKind::ParseError, "unsupported report schema " + std::to_string(run.schema));
  run.kind = j.at("kind").get<std::string>();
  run.timestamp = j.at("timestamp").get<std::string>();
  run.primes = j.at("primes").get<std::vector<int>>();
  run.max_order = j.at("max_order").get<int>();
  run.max_involutions = j.at("max_involutions").get<int>();
  run.summary = j.at("summary").get<RunSummary>();
  run.records = j.at("records").get<std::vector<TripleRecord>>();
}

json to_json(const ClassificationReport& r) {
  return json{{"group", r.group},
              {"is_abelian", r.is_abelian},
              {"lc_G", r.lc_G},
              {"lc_N", r.lc_N},
              {"unique_commutator", optional_json(r.unique_commutator)},
              {"slc_canonical", r.slc_canonical},
              {"thm1_cond1", r.thm1_cond1},
              {"thm1_cond2", r.thm1_cond2},
              {"lemma8_verdict", r.lemma8_verdict},
              {"center_N_matches", r.center_N_matches},
              {"notes", r.notes}};
}

json to_json(const Theorem2Report& r) {
  return json{{"p", r.p},
              {"p_elements", r.p_set.elements},
              {"p_is_subgroup", r.p_set.is_subgroup},
              {"quotient_order", r.induced.quotient.quotient->order()},
              {"projection", r.induced.quotient.projection},
              {"quotient_involution", r.induced.pair.star.image()},
              {"quotient_orientation", r.induced.pair.sigma.sign()},
              {"theorem2_case", r.theorem2_case},
              {"quotient_report", to_json(r.quotient_report)}};
}

json to_json(const PipelineResult& r) {
  json j{{"schema", 1},
         {"group", r.group},
         {"p", r.p},
         {"p_elements", r.p_set.elements},
         {"p_is_subgroup", r.p_set.is_subgroup},
         {"p_normal", r.p_normal},
         {"finding", r.finding},
         {"delta_dimension", r.delta_dimension},
         {"delta_nilpotency", optional_json(r.delta_nilpotency)},
         {"radical_note", r.radical_note},
         {"quotient_symmetric_commutative", optional_json(r.quotient_symmetric_commutative)},
         {"lemma12",
          {{"status", r.lemma12.status},
           {"n", optional_json(r.lemma12.n)},
           {"reason", r.lemma12.reason},
           {"radical_bound", optional_json(r.lemma12.radical_bound)}}},
         {"notes", r.notes}};
  j["theorem2"] = r.theorem2 ? to_json(*r.theorem2) : json(nullptr);
  return j;
}

std::string emit_report(const VerificationRun& run, ReportFormat format) {
  if (format == ReportFormat::Json) return json(run).dump(2) + "\n";

  std::ostringstream md;
  md << "# Verification run: " << run.kind << "\n\n";
  md << "- schema: " << run.schema << "\n- timestamp: " << run.timestamp << "\n- primes:";
  for (int p : run.primes) md << ' ' << p;
  md << "\n- max order: " << run.max_order << "\n- involution cap: " << run.max_involutions << "\n\n";
  const auto& s = run.summary;
  md << "| triples | processed | out-of-statement | skipped | agreements | disagreements | errors |\n";
  md << "|---|---|---|---|---|---|---|\n";
  md << "| " << s.triples << " | " << s.processed << " | " << s.out_of_statement << " | " << s.skipped << " | "
     << s.agreements << " | " << s.disagreements << " | " << s.errors << " |\n\n";

  struct Row {
    long long processed = 0, agree = 0, disagree = 0, out = 0, skipped = 0;
  };
  std::vector<std::string> order;
  std::map<std::pair<std::string, int>, Row> rows;
  for (const auto& r : run.records) {
    if (order.empty() || order.back() != r.group) order.push_back(r.group);
    for (int p : run.primes) {
      auto& row = rows[{r.group, p}];
      if (r.status == "processed") {
        ++row.processed;
        const auto it = r.oracle_commutative.find(p);
        const bool ok = it != r.oracle_commutative.end() && r.predicate && it->second == *r.predicate;
        (ok ? row.agree : row.disagree)++;
      } else if (r.status == "out-of-statement") {
        ++row.out;
      } else {
        ++row.skipped;
      }
    }
  }
  md << "| group | p | processed | agree | disagree | out-of-statement | skipped |\n";
  md << "|---|---|---|---|---|---|---|\n";
  for (const auto& g : order)
    for (int p : run.primes) {
      const auto& row = rows[{g, p}];
      md << "| " << g << " | " << p << " | " << row.processed << " | " << row.agree << " | " << row.disagree
         << " | " << row.out << " | " << row.skipped << " |\n";
    }
  return md.str();
}

VerificationRun parse_report(const std::string& json_text) {
  try {
    return json::parse(json_text).get<VerificationRun>();
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

}  // namespace grouplab
