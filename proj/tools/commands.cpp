#include "commands.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "sdst/compressed_store.hpp"
#include "sdst/generators.hpp"
#include "sdst/lcp_index.hpp"
#include "sdst/verify.hpp"

namespace sdst::cli {

namespace {

struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

CompressedStore load_store(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open store file '" + path + "'");
  return CompressedStore::deserialize(in);
}

std::string show(const TokenMap& tokens, std::optional<Element> x) { return x ? tokens.token(*x) : "none"; }

int cmd_build(const std::string& input, const std::string& mode, const std::string& output, std::ostream& out) {
  std::ifstream in(input);
  if (!in) throw DataError("cannot open input file '" + input + "'");
  const auto family = parse_family(in);
  const auto kind = mode == "insertion" ? StoreKind::insertion : StoreKind::symdiff;
  BuildReport report;
  const auto store = CompressedStore::build(family, kind, &report);

  std::ofstream file(output, std::ios::binary);
  if (!file) throw DataError("cannot write store file '" + output + "'");
  store.serialize(file);
  if (!file) throw DataError("failed writing store file '" + output + "'");

  out << "s=" << family.size() << " n=" << family.n << " u=" << family.u << ' '
      << (kind == StoreKind::symdiff ? "delta=" : "I=") << store.weight() << " ell=" << store.max_edge_weight()
      << " advances=" << report.advances << " build_ms=" << std::fixed << std::setprecision(3)
      << report.seconds * 1e3 << '\n';
  return kOk;
}

int cmd_query(const std::string& path, std::uint64_t set_id, const std::string& op, const std::string& arg,
              std::ostream& out) {
  const auto store = load_store(path);
  if (set_id < 1 || set_id > store.size())
    throw DataError("unknown set " + std::to_string(set_id) + " (store has " + std::to_string(store.size()) + ")");
  const auto set = static_cast<SetIndex>(set_id - 1);
  const auto& tokens = store.tokens();

  if (op == "access") {
    std::uint64_t i = 0;
    auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), i);
    if (ec != std::errc() || ptr != arg.data() + arg.size()) throw DataError("access needs an integer rank");
    out << tokens.token(store.access(set, i)) << '\n';
  } else if (op == "member") {
    const auto x = tokens.find(arg);
    out << (x && store.member(set, *x) ? "true" : "false") << '\n';
  } else if (op == "rank") {
    out << store.rank(set, tokens.floor_rank(arg)) << '\n';
  } else if (op == "pred") {
    const auto floor = tokens.floor_rank(arg);
    out << show(tokens, floor ? store.pred_succ(set, floor).pred : std::nullopt) << '\n';
  } else {  // succ
    const auto exact = tokens.find(arg);
    const Element ceil = exact ? *exact : tokens.floor_rank(arg) + 1;
    out << show(tokens, ceil <= store.universe() ? store.pred_succ(set, ceil).succ : std::nullopt) << '\n';
  }
  return kOk;
}

unsigned tree_height(const LabeledTree& t) {
  unsigned h = 0;
  for (TreeNode v = 0; v < t.size(); ++v) h = std::max(h, t.depth(v));
  return h;
}

int cmd_stats(const std::string& path, std::ostream& out) {
  const auto store = load_store(path);
  const bool symdiff = store.kind() == StoreKind::symdiff;
  out << "kind=" << to_string(store.kind()) << '\n';
  out << "s=" << store.size() << " n=" << store.total_elements() << " u=" << store.universe() << '\n';
  out << (symdiff ? "delta=" : "I=") << store.weight() << " ell=" << store.max_edge_weight() << '\n';
  out << "nodes=" << store.node_count() << '\n';

  const auto expected = store.weight() + (symdiff ? 2 : 1);
  if (symdiff) {
    const auto split = split_two_trees(store.edges());
    for (auto side : {RootSide::empty, RootSide::univ}) {
      const auto& t = store.indel()->tree(side);
      const auto sets = (side == RootSide::empty ? split.empty_tree.size() : split.univ_tree.size()) - 1;
      out << (side == RootSide::empty ? "empty" : "univ") << "_tree nodes=" << t.size() << " height=" << tree_height(t)
          << " sets=" << sets << '\n';
    }
  } else {
    const auto& t = store.insertion()->tree();
    out << "insertion_tree nodes=" << t.size() << " height=" << tree_height(t) << " sets=" << store.size() << '\n';
  }
  const bool identity = store.node_count() == expected;
  out << "node_identity=" << (identity ? "ok" : "VIOLATED") << " (expected " << expected << ")\n";
  return identity ? kOk : kDataError;
}

int cmd_verify(const VerifyConfig& config, std::ostream& out) {
  const auto report = run_verify(config);
  if (report.passed()) {
    out << "PASS trials=" << report.trials << " queries=" << report.queries << '\n';
    return kOk;
  }
  const auto& f = *report.failure;
  out << "FAIL trial=" << f.trial << " shape=" << to_string(f.params.shape) << " seed=" << f.params.seed
      << " sets=" << f.params.sets << " universe=" << f.params.universe << '\n';
  out << "  " << f.what << '\n';
  out << "  family (one set per line):\n";
  for (const auto& set : f.sets) {
    out << "   ";
    for (auto x : set) out << ' ' << x;
    out << '\n';
  }
  return kVerifyFailed;
}

struct BenchConfig {
  std::string gen = "clustered";
  std::uint32_t sets = 1000;
  std::uint64_t universe = 1 << 14;
  unsigned threads = 1;
  std::uint64_t seed = 1;
  std::uint64_t queries = 200000;
  std::string mode = "symdiff";
};

// Σ over all edges of min(ℓ+1, w+1), with w counted by capped iterators.
std::uint64_t advance_bound(const SetFamily& family, std::uint64_t ell) {
  const LcpIndex index(build_concat_text(family));
  const std::uint64_t cap = ell + 1;
  std::uint64_t total = 0;
  for (SetIndex a = 0; a < family.size(); ++a) {
    const std::uint64_t size = family.sets[a].size();
    total += std::min(cap, size + 1) + std::min(cap, family.u - size + 1);
    for (SetIndex b = a + 1; b < family.size(); ++b) {
      DiffIterator it(index, a, b);
      std::uint64_t steps = 0;
      while (steps < cap) {
        ++steps;
        if (!it.advance(index)) break;
      }
      total += steps;
    }
  }
  return total;
}

template <typename Fn>
double per_query_ns(unsigned threads, std::uint64_t queries, Fn&& work) {
  std::vector<double> spent(threads, 0);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      const auto start = std::chrono::steady_clock::now();
      work(t, queries / threads);
      spent[t] = std::chrono::duration<double, std::nano>(std::chrono::steady_clock::now() - start).count();
    });
  for (auto& th : pool) th.join();
  double total = 0;
  for (auto s : spent) total += s;
  return total / double(std::max<std::uint64_t>(1, queries / threads * threads));
}

int cmd_bench(const BenchConfig& config, std::ostream& out) {
  GeneratorParams params;
  params.shape = *parse_shape(config.gen);
  params.sets = config.sets;
  params.universe = config.universe;
  params.seed = config.seed;
  if (params.shape == FamilyShape::clustered) {
    params.centroid_size = static_cast<std::uint32_t>(std::min<std::uint64_t>(32, config.universe));
    params.max_flips = 3;
  }
  const auto family = generate_family(params);
  if (family.n == 0) {
    out << "empty family, nothing to measure\n";
    return kOk;
  }
  out << "family gen=" << config.gen << " s=" << family.size() << " n=" << family.n << " u=" << family.u << '\n';

  const auto kind = config.mode == "insertion" ? StoreKind::insertion : StoreKind::symdiff;
  BuildReport report;
  const auto store = CompressedStore::build(family, kind, &report);
  out << std::fixed << std::setprecision(3);
  out << "build mode=" << to_string(kind) << " time_ms=" << report.seconds * 1e3 << ' '
      << (kind == StoreKind::symdiff ? "delta=" : "I=") << store.weight() << " ell=" << store.max_edge_weight()
      << " ratio=" << double(store.weight()) / double(family.n) << '\n';
  if (kind == StoreKind::symdiff)
    out << "advances measured=" << report.advances << " bound=" << advance_bound(family, store.max_edge_weight())
        << '\n';
  else
    out << "advances measured=" << report.advances << '\n';

  const unsigned threads = std::max(1u, config.threads);
  auto make_rng = [&](unsigned t) { return std::mt19937_64(config.seed * 1000003 + t); };
  auto pick = [&](std::mt19937_64& rng) {
    const auto set = static_cast<SetIndex>(rng() % family.size());
    return std::pair{set, static_cast<Element>(1 + rng() % family.u)};
  };
  std::uint64_t sink = 0;
  for (auto kindq : {QueryKind::member, QueryKind::rank, QueryKind::access}) {
    std::vector<std::uint64_t> sinks(threads, 0);
    const double compressed = per_query_ns(threads, config.queries, [&](unsigned t, std::uint64_t count) {
      auto rng = make_rng(t);
      for (std::uint64_t q = 0; q < count; ++q) {
        auto [set, x] = pick(rng);
        if (kindq == QueryKind::member)
          sinks[t] += store.member(set, x);
        else if (kindq == QueryKind::rank)
          sinks[t] += store.rank(set, x);
        else
          sinks[t] += store.access(set, 1 + x % store.cardinality(set));
      }
    });
    const double baseline = per_query_ns(threads, config.queries, [&](unsigned t, std::uint64_t count) {
      auto rng = make_rng(t);
      for (std::uint64_t q = 0; q < count; ++q) {
        auto [set, x] = pick(rng);
        const auto& s = family.sets[set];
        if (kindq == QueryKind::member)
          sinks[t] += std::binary_search(s.begin(), s.end(), x);
        else if (kindq == QueryKind::rank)
          sinks[t] += std::upper_bound(s.begin(), s.end(), x) - s.begin();
        else
          sinks[t] += s[x % s.size()];
      }
    });
    for (auto v : sinks) sink += v;
    out << "query " << to_string(kindq) << " threads=" << threads << " compressed_ns=" << compressed
        << " baseline_ns=" << baseline << '\n';
  }
  out << "checksum=" << sink << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Compressed set-family store: build, query and inspect"};
  app.require_subcommand(1);

  std::string input, output, store_path, mode = "symdiff", op, arg;
  std::uint64_t set_id = 0;
  auto* build = app.add_subcommand("build", "Build a store from a text file of sets");
  build->add_option("--input", input, "One set per line")->required();
  build->add_option("--mode", mode, "symdiff or insertion")->check(CLI::IsMember({"symdiff", "insertion"}));
  build->add_option("--output", output, "Store file to write")->required();

  auto* query = app.add_subcommand("query", "Answer one query on a stored set");
  query->add_option("--store", store_path)->required();
  query->add_option("--set", set_id, "1-based set number")->required();
  query->add_option("--op", op)->required()->check(CLI::IsMember({"member", "access", "rank", "pred", "succ"}));
  query->add_option("--arg", arg, "Element token, or the rank for access")->required();

  auto* stats = app.add_subcommand("stats", "Print compressibility and tree statistics");
  stats->add_option("--store", store_path)->required();

  VerifyConfig vc;
  auto* verify = app.add_subcommand("verify", "Compare both store kinds with the brute-force oracle");
  verify->add_option("--seed", vc.seed);
  verify->add_option("--trials", vc.trials);
  verify->add_option("--smax", vc.max_sets)->check(CLI::PositiveNumber);
  verify->add_option("--umax", vc.max_universe)->check(CLI::PositiveNumber);
  verify->add_flag("--inject-fault", vc.inject_fault)->group("");

  BenchConfig bc;
  auto* bench = app.add_subcommand("bench", "Time construction and queries on a generated family");
  bench->add_option("--gen", bc.gen)->check(CLI::IsMember({"nested", "clustered", "random"}));
  bench->add_option("--s", bc.sets);
  bench->add_option("--u", bc.universe);
  bench->add_option("--threads", bc.threads);
  bench->add_option("--seed", bc.seed);
  bench->add_option("--queries", bc.queries);
  bench->add_option("--mode", bc.mode)->check(CLI::IsMember({"symdiff", "insertion"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kUsage;
  }

  try {
    if (*build) return cmd_build(input, mode, output, out);
    if (*query) return cmd_query(store_path, set_id, op, arg, out);
    if (*stats) return cmd_stats(store_path, out);
    if (*verify) return cmd_verify(vc, out);
    return cmd_bench(bc, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const DataError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  }
  return kDataError;
}

}  // namespace sdst::cli
