#include "mm/cli.hpp"

#include <functional>

#include "CLI11.hpp"
#include "json.hpp"
#include "mm/capopt.hpp"
#include "mm/chapop.hpp"
#include "mm/io.hpp"
#include "mm/pareto.hpp"
#include "mm/popverify.hpp"
#include "mm/reductions.hpp"
#include "mm/votes.hpp"

namespace mm::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitUnsupported = 3;
constexpr int kExitTooLarge = 4;

int exitCodeFor(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Infeasible:
      return kExitInfeasible;
    case ErrorKind::Unsupported:
      return kExitUnsupported;
    case ErrorKind::TooLarge:
      return kExitTooLarge;
    default:
      return kExitError;
  }
}

Json matchingJson(const Instance& I, const Matching& M) {
  validateMatching(I, M);  // nothing unvalidated is ever printed
  Json edges = Json::array();
  for (const auto& [a, h] : M.edges)
    edges.push_back(Json::array({I.applicant(a).id, I.house(h).id}));
  return Json{{"edges", std::move(edges)}};
}

Json changeJson(const Instance& I, const CapacityChange& change) {
  applyChange(I, change);  // re-validate before printing
  Json delta = Json::object();
  for (int h = 0; h < I.numHouses(); ++h)
    if (change.delta[h] != 0) delta[I.house(h).id] = change.delta[h];
  return delta;
}

Json optimizationJson(const Instance& I, const OptimizationResult& r) {
  Json out = Json::object();
  out["cost"] = r.cost;
  out["change"] = changeJson(I, r.change);
  out["matching"] = matchingJson(applyChange(I, r.change), r.matching);
  out["certificate"] = r.certificate == OptimizationResult::Certificate::PolyOptimal
                           ? "poly-optimal"
                           : "exhaustive-optimal";
  return out;
}

PopularityNotion parseNotion(const std::string& s) {
  if (s == "traditional") return PopularityNotion::Traditional;
  if (s == "lex") return PopularityNotion::Lexicographic;
  fail(ErrorKind::Contract, "unknown notion '" + s + "' (use traditional|lex)");
}

struct Shared {
  std::string instancePath;
  std::string matchingPath;
  std::string notion = "traditional";
  long long limit = 1'000'000;
  long long budget = -1;  // default: number of applicants
  int kbound = -1;        // default: number of applicants
  bool allowDecrease = false;
  bool exact = false;
  bool forceBruteforce = false;
  bool paperLiteralMod = false;
  int workers = 1;
  long long seed = 0;
  std::string construction;
  std::string inPath;
  std::string outPath;
  long long nscale = -1;
};

Instance loadInstance(const Shared& p) {
  if (p.instancePath.empty()) fail(ErrorKind::Contract, "--instance is required");
  return parseInstance(readFile(p.instancePath));
}

Matching loadMatching(const Shared& p, const Instance& I) {
  if (p.matchingPath.empty()) fail(ErrorKind::Contract, "--matching is required");
  return parseMatching(I, readFile(p.matchingPath));
}

Json cmdVerifyPopular(const Shared& p) {
  const Instance I = loadInstance(p);
  const Matching M = loadMatching(p, I);
  const PopularityNotion notion = parseNotion(p.notion);

  Json out = Json::object();
  if (!p.forceBruteforce && notion == PopularityNotion::Traditional && I.housesUnit()) {
    VerifyOptions opts;
    opts.paperLiteralMod = p.paperLiteralMod;
    const VerifyResult res = verifyPopularPoly(I, M, opts);
    out["popular"] = res.popular;
    if (res.witness) out["witness"] = matchingJson(I, res.witness->inducedMatching);
    return out;
  }
  if (!p.forceBruteforce && I.applicantsUnit()) {
    // With unit applicant capacities both notions coincide and the
    // four-condition characterization applies.
    const CHACheck res = isPopularCHA(I, M);
    out["popular"] = res.popular;
    if (res.failedCondition) out["failedCondition"] = *res.failedCondition;
    return out;
  }
  const PopularityCheck res = isPopularBruteForce(I, M, notion, p.limit);
  out["popular"] = res.popular;
  if (res.witness) out["witness"] = matchingJson(I, *res.witness);
  return out;
}

Json cmdVerifyPareto(const Shared& p) {
  const Instance I = loadInstance(p);
  const Matching M = loadMatching(p, I);
  const PopularityCheck res = isParetoOptimalBruteForce(I, M, p.limit);
  Json out = Json::object();
  out["paretoOptimal"] = res.popular;
  if (res.witness) out["witness"] = matchingJson(I, *res.witness);
  return out;
}

Json cmdFindPopular(const Shared& p) {
  const Instance I = loadInstance(p);
  const auto M = findPopularCHA(I);
  Json out = Json::object();
  out["found"] = M.has_value();
  if (M) out["matching"] = matchingJson(I, *M);
  return out;
}

Json cmdExistsPerfectPopular(const Shared& p) {
  const Instance I = loadInstance(p);
  const auto res = existsPerfectPopular(I);
  Json out = Json::object();
  out["exists"] = res.exists;
  if (res.matching) out["matching"] = matchingJson(I, *res.matching);
  return out;
}

Json cmdFindPareto(const Shared& p) {
  const Instance I = loadInstance(p);
  Json out = Json::object();
  out["matching"] = matchingJson(I, findParetoMax(I));
  return out;
}

Json cmdMinSumPopPerfect(const Shared& p, CommandResult& result) {
  const Instance I = loadInstance(p);
  if (p.allowDecrease && !p.exact)
    fail(ErrorKind::Contract, "--allow-decrease requires --exact");
  if (!p.exact) return optimizationJson(I, minSumPopPerfectIncrease(I));
  const long long budget = p.budget >= 0 ? p.budget : I.numApplicants();
  const auto res = minSumPopPerfectExact(I, budget, p.allowDecrease);
  if (!res) {
    result.exitCode = kExitInfeasible;
    return Json{{"feasible", false}, {"budget", budget}};
  }
  return optimizationJson(I, *res);
}

Json cmdMinMaxPopPerfect(const Shared& p, CommandResult& result) {
  const Instance I = loadInstance(p);
  const int kBound = p.kbound >= 0 ? p.kbound : I.numApplicants();
  const auto res = minMaxPopPerfectExact(I, kBound, p.allowDecrease);
  if (!res) {
    result.exitCode = kExitInfeasible;
    return Json{{"feasible", false}, {"kBound", kBound}};
  }
  return optimizationJson(I, *res);
}

Json cmdEnumerate(const Shared& p) {
  const Instance I = loadInstance(p);
  Json matchings = Json::array();
  long long count = forEachMatching(I, p.limit, [&](const Matching& M) {
    matchings.push_back(matchingJson(I, M)["edges"]);
    return true;
  });
  return Json{{"count", count}, {"matchings", std::move(matchings)}};
}

Json cmdReduce(const Shared& p) {
  if (p.inPath.empty() || p.outPath.empty())
    fail(ErrorKind::Contract, "--in and --out are required");
  Json out = Json::object();
  out["construction"] = p.construction;

  std::optional<Instance> instance;
  if (p.construction == "setcover-minmax") {
    const SetCoverInstance s = parseSetCover(readFile(p.inPath));
    std::optional<long long> nScale;
    if (p.nscale >= 0) nScale = p.nscale;
    instance = reduceSetCoverToMinMax(s, nScale);
  } else {
    const ThreeDMInstance t = parseThreeDM(readFile(p.inPath));
    if (p.construction == "pmcap-trad") {
      instance = reduce3dmToPmcapTraditional(t);
    } else if (p.construction == "pmcap-lex") {
      instance = reduce3dmToPmcapLex(t);
    } else if (p.construction == "minsum-dec") {
      auto red = reduce3dmToMinSumDec(t);
      instance = std::move(red.instance);
      out["budget"] = red.budget;
    } else if (p.construction == "minmax-dec1" || p.construction == "minmax-inc2") {
      auto red = reduce3dmToMinMax(t, p.construction == "minmax-dec1"
                                          ? MinMaxVariant::DecreaseK1
                                          : MinMaxVariant::IncreaseK2);
      instance = std::move(red.instance);
      out["kTarget"] = red.kTarget;
    } else {
      fail(ErrorKind::Contract, "unknown construction '" + p.construction + "'");
    }
  }
  writeFile(p.outPath, serializeInstance(*instance) + "\n");
  out["applicants"] = instance->numApplicants();
  out["houses"] = instance->numHouses();
  out["out"] = p.outPath;
  return out;
}

Json cmdOracle3dm(const Shared& p) {
  if (p.inPath.empty()) fail(ErrorKind::Contract, "--in is required");
  const ThreeDMInstance t = parseThreeDM(readFile(p.inPath));
  const auto cover = oracleExactCover(t);
  Json out = Json::object();
  if (cover) {
    Json arr = Json::array();
    for (int j : *cover) arr.push_back(j + 1);
    out["cover"] = std::move(arr);
  } else {
    out["cover"] = nullptr;
  }
  return out;
}

Json cmdOracleSetCover(const Shared& p) {
  if (p.inPath.empty()) fail(ErrorKind::Contract, "--in is required");
  const SetCoverInstance s = parseSetCover(readFile(p.inPath));
  const SetCoverSolution sol = oracleSetCover(s, p.limit > 0 ? p.limit : 10'000'000);
  Json cover = Json::array();
  for (int j : sol.cover) cover.push_back(j + 1);
  return Json{{"optCost", sol.optCost}, {"cover", std::move(cover)}};
}

void addSharedFlags(CLI::App* cmd, Shared& p) {
  cmd->add_option("--limit", p.limit, "enumeration / search guard");
  cmd->add_option("--workers", p.workers, "max parallel workers (results are independent of it)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", p.seed, "seed for randomized features");
}

}  // namespace

CommandResult runCommand(const std::vector<std::string>& args) {
  CommandResult result;
  Shared p;
  std::function<Json()> action;

  CLI::App app{"popular and Pareto-optimal matchings in capacitated house allocation"};
  app.require_subcommand(1);

  auto addInstanceCmd = [&](const std::string& name, const std::string& desc,
                            std::function<Json()> fn, bool withMatching, bool withNotion) {
    CLI::App* cmd = app.add_subcommand(name, desc);
    cmd->add_option("--instance", p.instancePath, "instance file (JSON)");
    if (withMatching) cmd->add_option("--matching", p.matchingPath, "matching file (JSON)");
    if (withNotion)
      cmd->add_option("--notion", p.notion, "popularity notion: traditional|lex");
    addSharedFlags(cmd, p);
    cmd->callback([&action, fn]() { action = fn; });
    return cmd;
  };

  CLI::App* verifyPopular = addInstanceCmd(
      "verify-popular", "check whether a matching is popular",
      [&]() { return cmdVerifyPopular(p); }, true, true);
  verifyPopular->add_flag("--force-bruteforce", p.forceBruteforce,
                          "skip the polynomial verifiers");
  verifyPopular->add_flag("--paper-literal-mod", p.paperLiteralMod,
                          "diagnostic: uncorrected path endpoint scoring");

  addInstanceCmd("verify-pareto", "check whether a matching is Pareto-optimal",
                 [&]() { return cmdVerifyPareto(p); }, true, false);
  addInstanceCmd("find-popular", "construct a popular matching if one exists",
                 [&]() { return cmdFindPopular(p); }, false, false);
  addInstanceCmd("exists-perfect-popular", "decide perfect popular existence",
                 [&]() { return cmdExistsPerfectPopular(p); }, false, false);
  addInstanceCmd("find-pareto", "maximum-size Pareto-optimal matching",
                 [&]() { return cmdFindPareto(p); }, false, false);

  CLI::App* minsumPop = addInstanceCmd(
      "minsum-pop-perfect", "minimum-L1 capacity change for a perfect popular matching",
      [&]() { return cmdMinSumPopPerfect(p, result); }, false, false);
  minsumPop->add_flag("--exact", p.exact, "exhaustive search instead of the increase-only algorithm");
  minsumPop->add_flag("--allow-decrease", p.allowDecrease, "permit capacity decreases");
  minsumPop->add_option("--budget", p.budget, "L1 budget (default: number of applicants)");

  CLI::App* minmaxPop = addInstanceCmd(
      "minmax-pop-perfect", "minimum-Linf capacity change for a perfect popular matching",
      [&]() { return cmdMinMaxPopPerfect(p, result); }, false, false);
  minmaxPop->add_flag("--allow-decrease", p.allowDecrease, "permit capacity decreases");
  minmaxPop->add_option("--kbound", p.kbound, "Linf bound (default: number of applicants)");

  addInstanceCmd("minsum-pareto-perfect",
                 "minimum-L1 capacity increase for a perfect Pareto-optimal matching",
                 [&]() {
                   const Instance I = loadInstance(p);
                   return optimizationJson(I, minSumParetoPerfect(I));
                 },
                 false, false);
  addInstanceCmd("minmax-pareto-perfect",
                 "minimum-Linf capacity increase for a perfect Pareto-optimal matching",
                 [&]() {
                   const Instance I = loadInstance(p);
                   return optimizationJson(I, minMaxParetoPerfect(I));
                 },
                 false, false);
  addInstanceCmd("enumerate", "list all feasible matchings",
                 [&]() { return cmdEnumerate(p); }, false, false);

  CLI::App* reduce = app.add_subcommand("reduce", "generate a hardness-reduction instance");
  reduce->add_option("--construction", p.construction,
                     "pmcap-trad|pmcap-lex|minsum-dec|minmax-dec1|minmax-inc2|setcover-minmax")
      ->required();
  reduce->add_option("--in", p.inPath, "source problem file (3dm.json or sc.json)")->required();
  reduce->add_option("--out", p.outPath, "output instance file")->required();
  reduce->add_option("--nscale", p.nscale, "replication override for setcover-minmax");
  addSharedFlags(reduce, p);
  reduce->callback([&]() { action = [&]() { return cmdReduce(p); }; });

  CLI::App* oracle3dm = app.add_subcommand("oracle-3dm", "exact 3-cover by brute force");
  oracle3dm->add_option("--in", p.inPath, "3dm file")->required();
  addSharedFlags(oracle3dm, p);
  oracle3dm->callback([&]() { action = [&]() { return cmdOracle3dm(p); }; });

  CLI::App* oracleSc = app.add_subcommand("oracle-setcover", "minimum set cover by brute force");
  oracleSc->add_option("--in", p.inPath, "set cover file")->required();
  addSharedFlags(oracleSc, p);
  oracleSc->callback([&]() { action = [&]() { return cmdOracleSetCover(p); }; });

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    result.out = app.help();
    result.exitCode = kExitOk;
    return result;
  } catch (const CLI::ParseError& e) {
    result.err = std::string("error: ") + e.what() + "\n";
    result.exitCode = kExitError;
    return result;
  }

  try {
    const Json payload = action();
    result.out = payload.dump() + "\n";
  } catch (const Error& e) {
    result.exitCode = exitCodeFor(e.kind());
    result.err = std::string("error: ") + e.what() + "\n";
  } catch (const std::exception& e) {
    result.exitCode = kExitError;
    result.err = std::string("error: ") + e.what() + "\n";
  }
  return result;
}

}  // namespace mm::cli
