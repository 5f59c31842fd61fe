#include "mm/capopt.hpp"

#include <algorithm>

#include "mm/chapop.hpp"
#include "mm/pareto.hpp"

namespace mm {

namespace {

// Demand from applicants whose only acceptable house is h; a perfect matching
// needs capacity for all of them. Cheap necessary-condition filter for the
// exhaustive sweeps.
std::vector<int> singleOptionDemand(const Instance& I) {
  std::vector<int> demand(I.numHouses(), 0);
  for (int a = 0; a < I.numApplicants(); ++a)
    if (I.applicant(a).prefs.size() == 1) ++demand[I.applicant(a).prefs[0]];
  return demand;
}

struct SweepContext {
  const Instance& I;
  std::vector<int> demand;
  long long totalApplicants;

  explicit SweepContext(const Instance& inst) : I(inst), demand(singleOptionDemand(inst)) {
    totalApplicants = inst.numApplicants();
  }

  // Returns the witness matching when the changed instance admits a perfect
  // popular matching.
  std::optional<Matching> test(const std::vector<int>& delta) const {
    long long totalCap = 0;
    for (int h = 0; h < I.numHouses(); ++h) {
      const int cap = I.houseCapacity(h) + delta[h];
      if (cap < demand[h]) return std::nullopt;
      totalCap += cap;
    }
    if (totalCap < totalApplicants) return std::nullopt;
    std::vector<int> caps(I.numHouses());
    for (int h = 0; h < I.numHouses(); ++h) caps[h] = I.houseCapacity(h) + delta[h];
    auto res = existsPerfectPopular(I.withHouseCapacities(caps));
    if (!res.exists) return std::nullopt;
    return std::move(res.matching);
  }
};

void checkPopPerfectResult(const Instance& I, const OptimizationResult& r) {
  const Instance changed = applyChange(I, r.change);
  validateMatching(changed, r.matching);
  if (!isPerfect(changed, r.matching))
    fail(ErrorKind::Internal, "optimizer emitted a non-perfect matching");
  if (!isPopularCHA(changed, r.matching).popular)
    fail(ErrorKind::Internal, "optimizer emitted a non-popular matching");
}

}  // namespace

OptimizationResult minSumPopPerfectIncrease(const Instance& I) {
  if (!I.applicantsUnit())
    fail(ErrorKind::Unsupported, "capacity optimization requires unit applicant capacities");
  const ReducedGraph rg = buildReducedGraph(I);
  const Matching phase1 = detail::conditionedMaxMatching(I, rg);

  std::vector<int> assigned(I.numApplicants(), -1);
  for (const auto& [a, h] : phase1.edges) assigned[a] = h;

  OptimizationResult out;
  out.change = zeroChange(I);
  std::vector<std::pair<int, int>> edges = phase1.edges;
  for (int a = 0; a < I.numApplicants(); ++a) {
    if (assigned[a] != -1) continue;
    const int f = rg.firstChoice[a];
    if (f < 0)
      fail(ErrorKind::Infeasible,
           "applicant '" + I.applicant(a).id + "' has no acceptable house");
    ++out.change.delta[f];
    edges.emplace_back(a, f);
  }
  out.cost = out.change.l1();
  out.matching = makeMatching(applyChange(I, out.change), std::move(edges));
  out.certificate = OptimizationResult::Certificate::PolyOptimal;
  checkPopPerfectResult(I, out);
  return out;
}

std::optional<OptimizationResult> minSumPopPerfectExact(const Instance& I, long long budget,
                                                        bool allowDecrease, long long guard) {
  if (!I.applicantsUnit())
    fail(ErrorKind::Unsupported, "capacity optimization requires unit applicant capacities");
  if (budget < 0) fail(ErrorKind::Contract, "budget must be nonnegative");
  const SweepContext ctx(I);
  const int m = I.numHouses();

  long long candidates = 0;
  std::vector<int> delta(m, 0);
  std::optional<OptimizationResult> found;

  // Vectors of exact L1 cost `c`, houses in declaration order, values
  // ascending: overall (cost, lexicographic) candidate order.
  auto rec = [&](auto&& self, int h, long long remaining) -> bool {
    if (h == m) {
      if (remaining != 0) return false;
      if (++candidates > guard)
        fail(ErrorKind::TooLarge, "instance too large for exact search");
      if (auto matching = ctx.test(delta)) {
        OptimizationResult r;
        r.change = CapacityChange{delta};
        r.matching = std::move(*matching);
        r.cost = r.change.l1();
        r.certificate = OptimizationResult::Certificate::ExhaustiveOptimal;
        found = std::move(r);
        return true;
      }
      return false;
    }
    const int lo = allowDecrease ? -std::min<long long>(I.houseCapacity(h), remaining) : 0;
    for (int d = lo; d <= remaining; ++d) {
      delta[h] = d;
      if (self(self, h + 1, remaining - std::abs(d))) return true;
    }
    delta[h] = 0;
    return false;
  };

  for (long long c = 0; c <= budget && !found; ++c) rec(rec, 0, c);
  if (found) checkPopPerfectResult(I, *found);
  return found;
}

std::optional<OptimizationResult> minMaxPopPerfectExact(const Instance& I, int kBound,
                                                        bool allowDecrease, long long guard) {
  if (!I.applicantsUnit())
    fail(ErrorKind::Unsupported, "capacity optimization requires unit applicant capacities");
  if (kBound < 0) fail(ErrorKind::Contract, "kBound must be nonnegative");
  const SweepContext ctx(I);
  const int m = I.numHouses();

  long long candidates = 0;
  std::vector<int> delta(m, 0);
  std::optional<OptimizationResult> found;

  // Box [-min(q,k), k]^m (or [0,k]^m), lexicographic; entries already covered
  // at smaller k are skipped by requiring the max magnitude to equal k.
  auto rec = [&](auto&& self, int h, int k, bool sawMax) -> bool {
    if (h == m) {
      if (!sawMax) return false;
      if (++candidates > guard)
        fail(ErrorKind::TooLarge, "instance too large for exact search");
      if (auto matching = ctx.test(delta)) {
        OptimizationResult r;
        r.change = CapacityChange{delta};
        r.matching = std::move(*matching);
        r.cost = r.change.linf();
        r.certificate = OptimizationResult::Certificate::ExhaustiveOptimal;
        found = std::move(r);
        return true;
      }
      return false;
    }
    const int lo = allowDecrease ? -std::min(I.houseCapacity(h), k) : 0;
    for (int d = lo; d <= k; ++d) {
      delta[h] = d;
      if (self(self, h + 1, k, sawMax || std::abs(d) == k)) return true;
    }
    delta[h] = 0;
    return false;
  };

  for (int k = 0; k <= kBound && !found; ++k) {
    if (k == 0) {
      std::fill(delta.begin(), delta.end(), 0);
      if (++candidates > guard) fail(ErrorKind::TooLarge, "instance too large for exact search");
      if (auto matching = ctx.test(delta)) {
        OptimizationResult r;
        r.change = zeroChange(I);
        r.matching = std::move(*matching);
        r.cost = 0;
        r.certificate = OptimizationResult::Certificate::ExhaustiveOptimal;
        found = std::move(r);
      }
    } else {
      rec(rec, 0, k, false);
    }
  }
  if (found) checkPopPerfectResult(I, *found);
  return found;
}

OptimizationResult minSumParetoPerfect(const Instance& I) {
  if (!I.applicantsUnit())
    fail(ErrorKind::Unsupported, "capacity optimization requires unit applicant capacities");
  const Matching M0 = findParetoMax(I);
  std::vector<int> assigned(I.numApplicants(), -1);
  for (const auto& [a, h] : M0.edges) assigned[a] = h;

  OptimizationResult out;
  out.change = zeroChange(I);
  for (int a = 0; a < I.numApplicants(); ++a) {
    if (assigned[a] != -1) continue;
    if (I.applicant(a).prefs.empty())
      fail(ErrorKind::Infeasible,
           "applicant '" + I.applicant(a).id + "' has no acceptable house");
    ++out.change.delta[I.applicant(a).prefs[0]];
  }
  out.cost = out.change.l1();
  const Instance changed = applyChange(I, out.change);
  out.matching = findParetoMax(changed);
  out.certificate = OptimizationResult::Certificate::PolyOptimal;
  if (!isPerfect(changed, out.matching))
    fail(ErrorKind::Internal, "increased instance lost its perfect matching");
  return out;
}

OptimizationResult minMaxParetoPerfect(const Instance& I) {
  if (!I.applicantsUnit())
    fail(ErrorKind::Unsupported, "capacity optimization requires unit applicant capacities");
  for (int a = 0; a < I.numApplicants(); ++a)
    if (I.applicant(a).prefs.empty())
      fail(ErrorKind::Infeasible,
           "applicant '" + I.applicant(a).id + "' has no acceptable house");

  const int n = I.numApplicants();
  for (int k = 0; k <= n; ++k) {
    std::vector<int> caps(I.numHouses());
    for (int h = 0; h < I.numHouses(); ++h) caps[h] = I.houseCapacity(h) + k;
    const Instance raised = I.withHouseCapacities(caps);
    if (maxMatchingSize(raised) != n) continue;

    const Matching M = findParetoMax(raised);
    OptimizationResult out;
    out.change = zeroChange(I);
    const std::vector<int> load = houseLoad(raised, M);
    for (int h = 0; h < I.numHouses(); ++h)
      out.change.delta[h] = std::max(0, load[h] - I.houseCapacity(h));
    out.cost = k;
    out.matching = M;
    out.certificate = OptimizationResult::Certificate::PolyOptimal;
    if (out.change.linf() != k)
      fail(ErrorKind::Internal, "trimmed change vector lost the optimal norm");
    const Instance trimmed = applyChange(I, out.change);
    validateMatching(trimmed, out.matching);
    if (!isPerfect(trimmed, out.matching))
      fail(ErrorKind::Internal, "raised instance lost its perfect matching");
    return out;
  }
  fail(ErrorKind::Infeasible, "no perfect matching exists at any uniform raise");
}

}  // namespace mm
