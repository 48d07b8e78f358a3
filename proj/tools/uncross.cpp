// uncross: generate uncrossing posets, run the verification suites, export.
//
// Exit status: 0 all checks pass, 1 some check failed, 2 usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "uncrossing/uncrossing.hpp"

namespace {

using namespace uncrossing;
using nlohmann::json;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Options {
  int n = 0;
  std::string dot_path;
  std::string json_path;
  unsigned workers = 1;
  std::size_t limit = 1'000'000;
  std::size_t element_limit = UncrossingPoset::kDefaultLimit;
  bool dual = false;
  bool all = false;
  bool criterion = false;
  double sample = 1.0;
  std::uint64_t seed = 0;
  std::string lower;
  std::string upper;
  int max_m = 4;
  bool maps = false;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

// Reports go to --json when given, otherwise to stdout.
int emit(const Options& o, const json& report, bool passed) {
  const std::string text = report.dump(2) + "\n";
  if (o.json_path.empty()) std::cout << text;
  else write_text(o.json_path, text);
  return passed ? kPass : kFail;
}

json summary(const UncrossingPoset& p) {
  json profile = p.rank_profile();
  return {{"n", p.n()},
          {"elements", p.size()},
          {"atoms", p.atoms().size()},
          {"covers", p.covers().size()},
          {"rank_profile", std::move(profile)}};
}

void require_n(int n, int lo, int hi, const std::string& verb) {
  if (n < lo || n > hi)
    throw UsageError(verb + " needs " + std::to_string(lo) + " <= n <= " + std::to_string(hi) + ", got " + std::to_string(n));
}

template <class L>
void export_dot(const std::string& path, const FinitePoset<L>& poset, const std::string& name) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  write_dot(out, poset, name);
}

int run_gen(const Options& o) {
  require_n(o.n, 2, 7, "gen");
  const auto p = UncrossingPoset::generate(o.n, o.element_limit);
  if (!o.dot_path.empty())
    export_dot(o.dot_path, p.as_finite_poset(o.dual), o.dual ? "P" + std::to_string(o.n) + "*" : "P" + std::to_string(o.n));
  if (!o.json_path.empty()) write_text(o.json_path, p.to_json(o.dual).dump(2) + "\n");
  std::cout << summary(p).dump(2) << "\n";
  return kPass;
}

int run_verify(const Options& o) {
  require_n(o.n, 2, 5, "verify");
  const auto up = UncrossingPoset::generate(o.n);
  const auto poset = up.as_finite_poset(false);
  const auto dual = up.as_finite_poset(true);
  const auto mask = sample_mask(dual.size(), Sample{o.sample, o.seed});

  Report r;
  r.poset = "P_" + std::to_string(o.n);

  Check counts("counts");
  counts.expect(up.size() == uncrossing_poset_size(o.n), {{"elements", up.size()}});
  std::uint64_t catalan = 1;
  for (int k = 0; k < o.n; ++k) catalan = catalan * 2 * (2 * k + 1) / (k + 2);
  counts.expect(up.atoms().size() == catalan, {{"atoms", up.atoms().size()}, {"catalan", catalan}});
  counts.info = summary(up);
  r.add(counts);

  EcOptions ec_opts;
  ec_opts.workers = o.workers;
  if (o.sample < 1.0) ec_opts.include_source = [&mask](std::size_t u) { return mask[u] != 0; };
  Report ec = verify_ec(dual, LabelOrder{}, ec_opts);
  r.append(ec);
  r.add(is_eulerian(poset, o.workers));
  Check cw("cw-poset");
  cw.expect(cw_poset_report(poset, LabelOrder{}, LabelSide::Dual, ec_opts).passed(), {{"poset", r.poset}});
  r.add(cw);
  r.add(is_thin(poset));

  if (o.all) {
    r.append(lemma_suite(up, Sample{o.sample, o.seed}));
    r.add(find_ec_not_el_witness(dual));
    try {
      Report shelling = verify_shelling_order(dual, LabelOrder{}, o.limit);
      r.append(shelling);
    } catch (const Error& e) {
      if (e.code() != Errc::TooManyChains) throw;
      Check skipped("shelling");
      skipped.pass();
      skipped.info["skipped"] = e.what();
      r.add(skipped);
    }
    r.append(verify_all_bruhat_maps(up));
  }
  if (o.criterion) {
    r.add(cover_criterion_agreement(up, CoverCriterion::ExactlyOne));
    r.add(cover_criterion_agreement(up, CoverCriterion::NotBothCrossing));
  }
  return emit(o, r.to_json(), r.passed());
}

int run_mobius(const Options& o) {
  require_n(o.n, 2, 6, "mobius");
  const auto up = UncrossingPoset::generate(o.n);
  const auto p = up.as_finite_poset(o.dual);
  auto resolve = [&](const std::string& text, std::size_t fallback) -> std::size_t {
    if (text.empty()) return fallback;
    if (text == "bottom" || text == "⊥") return up.bottom();
    const auto x = up.index_of(WireWord::parse(text));
    if (!x) throw UsageError("not a word of P_" + std::to_string(o.n) + ": " + text);
    return *x;
  };
  const std::size_t lo = resolve(o.lower, *p.bottom());
  const std::size_t hi = resolve(o.upper, *p.top());
  const std::int64_t mu = mobius(p, lo, hi);
  const int r = p.rank(hi) - p.rank(lo);
  json out{{"poset", o.dual ? "P_" + std::to_string(o.n) + "*" : "P_" + std::to_string(o.n)},
           {"lower", p.name(lo)},
           {"upper", p.name(hi)},
           {"rank", r},
           {"mobius", mu}};
  return emit(o, out, mu == sign_of_rank(r));
}

int run_bruhat(const Options& o) {
  require_n(o.n, 2, 6, "bruhat");
  Report r;
  r.poset = "S_" + std::to_string(o.n);
  r.add(bruhat_cover_oracle_check(o.n));
  r.append(verify_dyer_el(o.n));
  if (!o.lower.empty() || !o.upper.empty()) {
    if (o.lower.empty() || o.upper.empty()) throw UsageError("--lower and --upper go together");
    const auto up = UncrossingPoset::generate(o.n);
    r.append(verify_bruhat_map(up, up.as_finite_poset(true), BruhatOrder::generate(o.n), WireWord::parse(o.lower),
                               WireWord::parse(o.upper)));
  } else if (o.maps) {
    r.append(verify_all_bruhat_maps(UncrossingPoset::generate(o.n)));
  }
  return emit(o, r.to_json(), r.passed());
}

int run_tuffley(const Options& o) {
  require_n(o.n, 2, 5, "tuffley");
  if (o.max_m < 2 || o.max_m > 5) throw UsageError("--max-m must be in 2..5");
  if (!o.dot_path.empty()) {
    const auto t = generate_tuffley(o.n);
    export_dot(o.dot_path, o.dual ? t.poset().dual() : t.poset(), "T" + std::to_string(o.n));
  }
  const Report r = verify_tuffley(o.n, o.max_m, o.workers);
  return emit(o, r.to_json(), r.passed());
}

int run_export(const Options& o) {
  require_n(o.n, 2, 7, "export");
  const auto p = UncrossingPoset::generate(o.n);
  if (o.dot_path.empty() && o.json_path.empty()) {
    std::cout << p.to_json(o.dual).dump(2) << "\n";
    return kPass;
  }
  if (!o.dot_path.empty())
    export_dot(o.dot_path, p.as_finite_poset(o.dual), o.dual ? "P" + std::to_string(o.n) + "*" : "P" + std::to_string(o.n));
  if (!o.json_path.empty()) write_text(o.json_path, p.to_json(o.dual).dump(2) + "\n");
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Uncrossing posets: generation, verification and export"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("n", o.n, "wire count (permutation size for bruhat, leaf count for tuffley)")->required();
    sub->add_option("--json", o.json_path, "write the JSON report or export to PATH");
    sub->add_option("--workers", o.workers, "worker threads")->check(CLI::Range(1U, 256U));
  };

  auto* gen = app.add_subcommand("gen", "generate P_n and print a summary");
  common(gen);
  gen->add_option("--dot", o.dot_path, "write the Hasse diagram to PATH");
  gen->add_flag("--dual", o.dual, "export P_n* instead of P_n");
  gen->add_option("--limit", o.element_limit, "element limit");

  auto* verify = app.add_subcommand("verify", "EC, Eulerian, thin and CW checks on P_n");
  common(verify);
  verify->add_flag("--all", o.all, "also lemma suites, EC-not-EL witness, shelling and Bruhat maps");
  verify->add_flag("--criterion", o.criterion, "compare the noncrossing-pair cover criteria with the direct covers");
  verify->add_option("--limit", o.limit, "maximal-chain limit for the shelling check");
  verify->add_option("--sample", o.sample, "fraction of interval sources to check")->check(CLI::Range(0.0, 1.0));
  verify->add_option("--seed", o.seed, "seed for --sample");

  auto* mob = app.add_subcommand("mobius", "Möbius function of an interval (default: whole poset)");
  common(mob);
  mob->add_flag("--dual", o.dual, "work in P_n*");
  mob->add_option("--lower", o.lower, "lower word, or 'bottom'");
  mob->add_option("--upper", o.upper, "upper word, or 'bottom'");

  auto* bru = app.add_subcommand("bruhat", "Bruhat order of S_n: cover oracle, Dyer EL, interval maps");
  common(bru);
  bru->add_flag("--maps", o.maps, "check every start-set-preserving interval of P_n*");
  bru->add_option("--lower", o.lower, "lower word of a P_n* interval");
  bru->add_option("--upper", o.upper, "upper word of a P_n* interval");

  auto* tuf = app.add_subcommand("tuffley", "match every interval of T(n) into some P_m and check EC");
  common(tuf);
  tuf->add_option("--max-m", o.max_m, "largest uncrossing poset searched");
  tuf->add_option("--dot", o.dot_path, "write the Hasse diagram of T(n) to PATH");
  tuf->add_flag("--dual", o.dual, "export T(n)* instead of T(n)");

  auto* exp = app.add_subcommand("export", "write P_n as JSON (stdout by default) or DOT");
  common(exp);
  exp->add_option("--dot", o.dot_path, "write the Hasse diagram to PATH");
  exp->add_flag("--dual", o.dual, "export P_n*");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*gen) return run_gen(o);
    if (*verify) return run_verify(o);
    if (*mob) return run_mobius(o);
    if (*bru) return run_bruhat(o);
    if (*tuf) return run_tuffley(o);
    if (*exp) return run_export(o);
  } catch (const UsageError& e) {
    std::cerr << "uncross: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "uncross: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
