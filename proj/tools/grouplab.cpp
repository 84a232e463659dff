#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "grouplab/algebra.hpp"
#include "grouplab/error.hpp"
#include "grouplab/group_spec.hpp"
#include "grouplab/harness.hpp"
#include "grouplab/identity.hpp"
#include "grouplab/report.hpp"

using namespace grouplab;
using nlohmann::json;

namespace {

struct Globals {
  std::string format = "json";
  std::string out;
  std::vector<int> primes;
  int max_order = 16;
  bool serial = false;
};

struct ContextArgs {
  std::string group;
  std::string involution = "classical";
  std::string orientation = "trivial";
};

void add_context_flags(CLI::App* cmd, ContextArgs& a) {
  cmd->add_option("group", a.group, "group spec: C<n>, D<2n>, Q<4m>, AxB, or a JSON table")->required();
  cmd->add_option("--involution", a.involution, "classical, an index into `involutions`, or a JSON image array")
      ->capture_default_str();
  cmd->add_option("--orientation", a.orientation,
                  "trivial, an index into `orientations`, kernel generators <a,b,...>, or a JSON sign array")
      ->capture_default_str();
}

std::vector<int> parse_element_list(const std::string& text) {
  // "<a,b,c>" or "a,b,c"
  std::string body = text;
  if (!body.empty() && body.front() == '<') {
    if (body.back() != '>') throw Error(ErrorKind::ParseError, "unterminated generator list: " + text);
    body = body.substr(1, body.size() - 2);
  }
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < body.size()) {
    const auto comma = body.find(',', pos);
    const auto tok = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      out.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, "bad element index '" + tok + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

int parse_index(const std::string& text, std::size_t count, const char* what) {
  int i = -1;
  try {
    std::size_t used = 0;
    i = std::stoi(text, &used);
    if (used != text.size()) i = -1;
  } catch (const std::exception&) {
  }
  if (i < 0) throw Error(ErrorKind::ParseError, std::string("bad ") + what + " '" + text + "'");
  if (static_cast<std::size_t>(i) >= count)
    throw Error(ErrorKind::InvalidArgument, std::string(what) + " index " + text + " out of range (" +
                                                std::to_string(count) + " available)");
  return i;
}

AntiAutomorphism parse_involution(const GroupPtr& g, const std::string& text) {
  if (text == "classical") return classical_involution(g);
  if (!text.empty() && text.front() == '[') {
    try {
      return AntiAutomorphism(g, json::parse(text).get<std::vector<Element>>());
    } catch (const json::exception& e) {
      throw Error(ErrorKind::ParseError, e.what());
    }
  }
  const auto all = enumerate_involutions(g, {std::max(16, g->order()), 512});
  return all[parse_index(text, all.size(), "involution")];
}

Orientation parse_orientation(const GroupPtr& g, const std::string& text) {
  if (text == "trivial") return Orientation::trivial(g);
  if (!text.empty() && text.front() == '[') {
    try {
      return Orientation(g, json::parse(text).get<std::vector<int>>());
    } catch (const json::exception& e) {
      throw Error(ErrorKind::ParseError, e.what());
    }
  }
  if (!text.empty() && text.front() == '<') {
    const auto gens = parse_element_list(text);
    for (int x : gens)
      if (x < 0 || x >= g->order()) throw Error(ErrorKind::InvalidArgument, "generator out of range");
    return Orientation::from_kernel(subgroup_generated(g, gens));
  }
  const auto all = enumerate_orientations(g, false);
  return all[parse_index(text, all.size(), "orientation")];
}

SubgroupSet parse_subgroup(const GroupPtr& g, const std::string& text, int p) {
  if (text == "center") return center(g);
  if (text == "whole") {
    std::vector<Element> all(g->order());
    for (int i = 0; i < g->order(); ++i) all[i] = i;
    return SubgroupSet(g, all);
  }
  if (text == "trivial") return SubgroupSet(g, {0});
  if (text == "p-part") {
    const auto ps = p_elements(*g, p);
    if (!ps.is_subgroup) throw Error(ErrorKind::InvalidArgument, "the p-elements do not form a subgroup");
    return SubgroupSet(g, ps.elements);
  }
  const auto gens = parse_element_list(text);
  for (int x : gens)
    if (x < 0 || x >= g->order()) throw Error(ErrorKind::InvalidArgument, "generator out of range");
  return subgroup_generated(g, gens);
}

OrientedPair build_pair(const GroupPtr& g, const ContextArgs& a) {
  return make_pair(parse_involution(g, a.involution), parse_orientation(g, a.orientation));
}

int single_prime(const Globals& gl, int fallback) {
  if (gl.primes.empty()) return fallback;
  if (gl.primes.size() > 1) throw Error(ErrorKind::InvalidArgument, "this command takes a single prime");
  return gl.primes.front();
}

json vec_json(const AlgebraElement& a) { return a.coeffs(); }

json witness_json(const CommutationCheck& c) {
  if (!c.witness) return json::array();
  return json::array({vec_json(c.witness->first), vec_json(c.witness->second)});
}

std::string header_and(json body, const std::string& command) {
  json j{{"schema", 1}, {"command", command}};
  j.update(body);
  return j.dump(2) + "\n";
}

void write_out(const Globals& gl, const std::string& text) {
  if (gl.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(gl.out);
  if (!f) throw Error(ErrorKind::InvalidArgument, "cannot open " + gl.out);
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"grouplab: involutions, symmetric elements and identities in F_p G"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals gl;
  app.add_option("--format", gl.format, "json or markdown (markdown applies to verify)")
      ->check(CLI::IsMember({"json", "markdown"}))
      ->capture_default_str();
  app.add_option("--out", gl.out, "write the document here instead of stdout");
  std::string primes_text;
  app.add_option("-p,--primes", primes_text, "comma-separated odd primes; commands other than verify take one");
  app.add_option("--max-order", gl.max_order, "largest corpus group order swept")->capture_default_str();
  app.add_flag("--serial", gl.serial, "use the serial kernels");

  // verify
  auto* verify = app.add_subcommand("verify", "oracle sweep over the corpus");
  verify->require_subcommand(1);
  int max_involutions = 512;
  verify->add_option("--max-involutions", max_involutions)->capture_default_str();
  auto* v5 = verify->add_subcommand("lemma5", "trivial orientation: commutativity vs abelian or SLC");
  auto* v8 = verify->add_subcommand("lemma8", "non-trivial orientations: commutativity vs the two conditions");

  // pipeline
  ContextArgs pipe_ctx;
  int n_max = 4;
  auto* pipeline = app.add_subcommand("pipeline", "P, Delta(G,P), quotient classification, commutator p-powers");
  add_context_flags(pipeline, pipe_ctx);
  pipeline->add_option("--n-max", n_max)->capture_default_str();

  // classify
  ContextArgs cls_ctx;
  std::optional<int> cls_prime;
  auto* classify = app.add_subcommand("classify", "structure predicates for a pair");
  add_context_flags(classify, cls_ctx);
  classify->add_option("--prime", cls_prime, "also reduce modulo the p-elements");

  // units
  ContextArgs unit_ctx;
  bool unit_symmetric = false, unit_list = false;
  auto* units = app.add_subcommand("units", "enumerate units of F_p G");
  add_context_flags(units, unit_ctx);
  units->add_flag("--symmetric", unit_symmetric, "only symmetric units");
  units->add_flag("--list", unit_list, "print every unit as a coefficient vector");

  // identity
  ContextArgs id_ctx;
  std::string word = "(x1,x2)";
  bool id_symmetric = false;
  auto* identity = app.add_subcommand("identity", "check a group identity on units");
  add_context_flags(identity, id_ctx);
  identity->add_option("--word", word)->capture_default_str();
  identity->add_flag("--symmetric", id_symmetric, "only symmetric units");

  // involutions / orientations
  std::string inv_group, ori_group;
  bool include_trivial = false;
  auto* involutions = app.add_subcommand("involutions", "list involutions as image arrays");
  involutions->add_option("group", inv_group)->required();
  auto* orientations = app.add_subcommand("orientations", "list orientations as sign arrays");
  orientations->add_option("group", ori_group)->required();
  orientations->add_flag("--include-trivial", include_trivial);

  // algebra
  ContextArgs alg_ctx;
  auto* algebra = app.add_subcommand("algebra", "symmetric subspace and ideal facts");
  add_context_flags(algebra, alg_ctx);
  algebra->require_subcommand(1);
  auto* a_dim = algebra->add_subcommand("symmetric-dim", "dimension of F_p G+");
  auto* a_comm = algebra->add_subcommand("symmetric-commutes", "is F_p G+ commutative");
  auto* a_cent = algebra->add_subcommand("symmetric-central", "is F_p G+ central");
  std::string delta_sub;
  bool delta_nil = false;
  auto* a_delta = algebra->add_subcommand("delta", "augmentation ideal Delta(G,H)");
  a_delta->add_option("subgroup", delta_sub, "center, p-part, whole, trivial, or <a,b,...>")->required();
  a_delta->add_flag("--nilpotency", delta_nil, "also compute the nilpotency index");

  CLI11_PARSE(app, argc, argv);

  try {
    if (!primes_text.empty()) gl.primes = parse_element_list(primes_text);
    SearchOptions search;
    search.parallel = !gl.serial;

    if (verify->parsed()) {
      SweepOptions opts;
      if (!gl.primes.empty()) opts.primes = gl.primes;
      opts.max_order = gl.max_order;
      opts.max_involutions = max_involutions;
      opts.parallel = !gl.serial;
      const auto run = v5->parsed() ? run_lemma5_verification(opts) : run_lemma8_verification(opts);
      (void)v8;
      write_out(gl, emit_report(run, gl.format == "markdown" ? ReportFormat::Markdown : ReportFormat::Json));
      return run.passed() ? 0 : 1;
    }
    if (pipeline->parsed()) {
      const auto g = build_group(pipe_ctx.group);
      PipelineOptions opts;
      opts.n_max = n_max;
      opts.search = search;
      const auto r = run_modular_pipeline(g, single_prime(gl, 3), build_pair(g, pipe_ctx), opts);
      write_out(gl, to_json(r).dump(2) + "\n");
      return 0;
    }
    if (classify->parsed()) {
      const auto g = build_group(cls_ctx.group);
      const auto pair = build_pair(g, cls_ctx);
      json j{{"classification", to_json(check_theorem1(g, pair))}};
      if (cls_prime) j["reduction"] = to_json(check_theorem2(g, pair, *cls_prime));
      write_out(gl, header_and(j, "classify"));
      return 0;
    }
    if (units->parsed()) {
      const auto g = build_group(unit_ctx.group);
      const auto ctx = AlgebraContext::make(single_prime(gl, 3), build_pair(g, unit_ctx));
      const auto set = enumerate_units(ctx, unit_symmetric, search);
      json j{{"group", g->name()}, {"p", ctx->p()}, {"symmetric", unit_symmetric}, {"count", set.size()}};
      if (unit_list) {
        json list = json::array();
        for (std::size_t i = 0; i < set.size(); ++i) list.push_back(vec_json(set.unit(i)));
        j["units"] = list;
      }
      write_out(gl, header_and(j, "units"));
      return 0;
    }
    if (identity->parsed()) {
      const auto g = build_group(id_ctx.group);
      const auto ctx = AlgebraContext::make(single_prime(gl, 3), build_pair(g, id_ctx));
      const auto w = WordIdentity::parse(word);
      const auto set = enumerate_units(ctx, id_symmetric, search);
      const auto r = satisfies_identity(set, w, search);
      json j{{"group", g->name()},     {"p", ctx->p()},          {"word", w.to_string()},
             {"symmetric", id_symmetric}, {"units", set.size()}, {"holds", r.holds}};
      json wit = json::array();
      for (const auto& a : r.witness) wit.push_back(vec_json(a));
      j["witnesses"] = wit;
      j["witness_indices"] = r.witness_indices ? json(*r.witness_indices) : json(nullptr);
      j["witness_value"] = r.witness_value ? vec_json(*r.witness_value) : json(nullptr);
      write_out(gl, header_and(j, "identity"));
      return 0;
    }
    if (involutions->parsed()) {
      const auto g = build_group(inv_group);
      json list = json::array();
      for (const auto& a : enumerate_involutions(g, {std::max(gl.max_order, g->order()), 512}))
        list.push_back(a.image());
      write_out(gl, list.dump() + "\n");
      return 0;
    }
    if (orientations->parsed()) {
      const auto g = build_group(ori_group);
      json list = json::array();
      for (const auto& s : enumerate_orientations(g, include_trivial)) list.push_back(s.sign());
      write_out(gl, list.dump() + "\n");
      return 0;
    }
    if (algebra->parsed()) {
      const auto g = build_group(alg_ctx.group);
      const int p = single_prime(gl, 3);
      const auto ctx = AlgebraContext::make(p, build_pair(g, alg_ctx));
      json j{{"group", g->name()}, {"p", p}};
      if (a_dim->parsed()) {
        j["dim"] = symmetric_basis(ctx).size();
        j["flags"] = {{"dim_by_rank", symmetric_dimension_by_rank(ctx)}, {"skew_dim", skew_basis(ctx).size()}};
        j["witnesses"] = json::array();
      } else if (a_comm->parsed() || a_cent->parsed()) {
        const auto c = a_comm->parsed() ? symmetric_is_commutative(ctx) : symmetric_is_central(ctx);
        j["dim"] = symmetric_basis(ctx).size();
        j["flags"] = {{a_comm->parsed() ? "commutative" : "central", c.holds}};
        j["witnesses"] = witness_json(c);
      } else if (a_delta->parsed()) {
        const auto h = parse_subgroup(g, delta_sub, p);
        const auto ideal = delta_ideal(ctx, h);
        j["dim"] = ideal.dimension();
        json flags{{"subgroup_order", h.size()}};
        if (delta_nil) {
          const auto n = nilpotency_index(ideal, 64);
          flags["nilpotency"] = n ? json(*n) : json(nullptr);
        }
        j["flags"] = flags;
        j["witnesses"] = json::array();
      }
      write_out(gl, header_and(j, "algebra"));
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "grouplab: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "grouplab: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
