#include "sdst/verify.hpp"

#include <random>
#include <sstream>

#include "sdst/compressed_store.hpp"
#include "sdst/graph_builder.hpp"
#include "sdst/lcp_index.hpp"
#include "sdst/oracle.hpp"

namespace sdst {

namespace {

std::string describe(const Answer& a) {
  if (!a.value) return "NONE";
  return std::to_string(*a.value);
}

std::optional<std::string> compare_queries(const SetFamily& family, const CompressedStore& store, bool inject_fault,
                                           std::uint64_t& queries) {
  auto run = [&](SetIndex set, QueryKind kind, std::uint64_t arg) -> std::optional<std::string> {
    ++queries;
    const auto expected = oracle::query(family, set, kind, arg);
    Answer got{kind, std::nullopt};
    try {
      if (inject_fault && kind == QueryKind::access && store.indel())
        got.value = store.indel()->access(set, arg, nullptr, UnivCorrection::whole_interval);
      else
        got = store.query(set, kind, arg);
    } catch (const std::exception& e) {
      return std::string(to_string(store.kind())) + " store threw '" + e.what() + "'";
    }
    if (got == expected) return std::nullopt;
    std::ostringstream msg;
    msg << to_string(store.kind()) << " " << to_string(kind) << "(S" << set + 1 << ", " << arg << ") = " << describe(got)
        << ", oracle says " << describe(expected);
    return msg.str();
  };

  for (SetIndex set = 0; set < family.size(); ++set) {
    for (Element x = 1; x <= family.u; ++x)
      for (auto kind : {QueryKind::member, QueryKind::pred, QueryKind::succ})
        if (auto m = run(set, kind, x)) return m;
    for (Element x = 0; x <= family.u; ++x)
      if (auto m = run(set, QueryKind::rank, x)) return m;
    for (std::uint64_t i = 1; i <= family.sets[set].size(); ++i)
      if (auto m = run(set, QueryKind::access, i)) return m;
  }
  return std::nullopt;
}

}  // namespace

FamilyCheck check_family(const SetFamily& family, bool inject_fault) {
  FamilyCheck result;
  auto fail = [&](std::string what) {
    result.mismatch = std::move(what);
    return result;
  };

  const LcpIndex index(build_concat_text(family));
  auto symdiff = build_symdiff_graph(family, index);
  auto insertion = build_insertion_graph(family, index);

  const auto mst = oracle::mst(family);
  if (symdiff.total_weight != mst.total_weight)
    return fail("prim weight " + std::to_string(symdiff.total_weight) + " != kruskal weight " +
                std::to_string(mst.total_weight));
  for (SetIndex i = 0; i < family.size(); ++i) {
    const auto p = oracle::insertion_parent(family, i);
    const auto got = insertion.edges[i].parent;
    const auto size_of = [&](GraphNode g) { return g.is_set() ? family.sets[g.set()].size() : 0; };
    if (size_of(p) != size_of(got))
      return fail("insertion parent of S" + std::to_string(i + 1) + " is " + got.to_string() + ", oracle picks " +
                  p.to_string());
  }
  if (!(symdiff.total_weight <= insertion.total_weight && insertion.total_weight <= family.n))
    return fail("compressibility ordering violated");
  if (replay(symdiff.edges, family.u) != family.sets) return fail("symdiff graph does not replay the family");
  if (replay(insertion.edges, family.u) != family.sets) return fail("insertion graph does not replay the family");

  const CompressedStore indel(std::move(symdiff), family.tokens);
  const CompressedStore ins(std::move(insertion), family.tokens);
  if (indel.node_count() != indel.weight() + 2) return fail("indel trees do not have delta+2 nodes");
  if (ins.node_count() != ins.weight() + 1) return fail("insertion tree does not have I+1 nodes");
  if (!indel.indel()->well_formed()) return fail("indel trees are not well formed");

  for (const auto* store : {&indel, &ins})
    if (auto m = compare_queries(family, *store, inject_fault, result.queries)) return fail(*m);
  return result;
}

GeneratorParams verify_params(const VerifyConfig& config, std::uint32_t trial) {
  std::mt19937_64 rng(config.seed * 0x9e3779b97f4a7c15ULL + trial);
  GeneratorParams p;
  p.shape = static_cast<FamilyShape>(trial % 4);
  p.sets = std::uniform_int_distribution<std::uint32_t>(1, std::max<std::uint32_t>(1, config.max_sets))(rng);
  p.universe = std::uniform_int_distribution<std::uint64_t>(1, std::max<std::uint32_t>(1, config.max_universe))(rng);
  p.seed = config.seed + trial;
  return p;
}

VerifyReport run_verify(const VerifyConfig& config) {
  VerifyReport report;
  for (std::uint32_t t = 0; t < config.trials; ++t) {
    const auto params = verify_params(config, t);
    auto sets = generate_sets(params);
    const auto family = SetFamily::from_values(sets);
    auto check = check_family(family, config.inject_fault);
    ++report.trials;
    report.queries += check.queries;
    if (check.mismatch) {
      report.failure = VerifyFailure{t, params, *check.mismatch, std::move(sets)};
      break;
    }
  }
  return report;
}

}  // namespace sdst
