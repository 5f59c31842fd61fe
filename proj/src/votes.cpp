#include "mm/votes.hpp"

#include <algorithm>
#include <numeric>

#include "mm/engine.hpp"

namespace mm {

namespace {

// Sorted set difference over house-index vectors.
std::vector<int> setMinus(std::vector<int> s, std::vector<int> t) {
  std::sort(s.begin(), s.end());
  std::sort(t.begin(), t.end());
  std::vector<int> out;
  std::set_difference(s.begin(), s.end(), t.begin(), t.end(), std::back_inserter(out));
  return out;
}

constexpr int kPairingEnumerationMax = 5;  // larger difference sides go to the assignment solve

}  // namespace

int pairingVote(const Instance& I, int a, const std::vector<int>& S, const std::vector<int>& T,
                const FeasiblePairing& N) {
  const std::vector<int> X = setMinus(S, T);
  const std::vector<int> Y = setMinus(T, S);
  const size_t want = std::min(X.size(), Y.size());
  if (N.size() != want)
    fail(ErrorKind::Contract, "pairing must cover min(|S\\T|, |T\\S|) pairs");
  std::vector<char> usedX(X.size(), 0), usedY(Y.size(), 0);
  int plus = 0, minus = 0;
  for (const auto& [x, y] : N) {
    const auto xi = std::find(X.begin(), X.end(), x);
    const auto yi = std::find(Y.begin(), Y.end(), y);
    if (xi == X.end() || yi == Y.end())
      fail(ErrorKind::Contract, "pairing element outside S\\T or T\\S");
    if (usedX[xi - X.begin()]++ || usedY[yi - Y.begin()]++)
      fail(ErrorKind::Contract, "pairing reuses an element");
    if (I.prefers(a, x, y))
      ++plus;
    else
      ++minus;
  }
  return plus - minus + static_cast<int>(X.size()) - static_cast<int>(Y.size());
}

namespace detail {

int worstPairingByEnumeration(const Instance& I, int a, const std::vector<int>& X,
                              const std::vector<int>& Y) {
  const bool xSmall = X.size() <= Y.size();
  const std::vector<int>& small = xSmall ? X : Y;
  const std::vector<int>& large = xSmall ? Y : X;
  int best = static_cast<int>(small.size()) + 1;  // above any achievable pair sum

  std::vector<char> used(large.size(), 0);
  // Injection small -> large, built position by position.
  auto rec = [&](auto&& self, size_t pos, int acc) -> void {
    if (pos == small.size()) {
      best = std::min(best, acc);
      return;
    }
    for (size_t j = 0; j < large.size(); ++j) {
      if (used[j]) continue;
      used[j] = 1;
      const int x = xSmall ? small[pos] : large[j];
      const int y = xSmall ? large[j] : small[pos];
      self(self, pos + 1, acc + (I.prefers(a, x, y) ? 1 : -1));
      used[j] = 0;
    }
  };
  if (small.empty()) best = 0;
  else rec(rec, 0, 0);
  return best + static_cast<int>(X.size()) - static_cast<int>(Y.size());
}

int worstPairingByAssignment(const Instance& I, int a, const std::vector<int>& X,
                             const std::vector<int>& Y) {
  const bool xSmall = X.size() <= Y.size();
  const std::vector<int>& small = xSmall ? X : Y;
  const std::vector<int>& large = xSmall ? Y : X;
  engine::WeightedBipartiteProblem p;
  p.numLeft = static_cast<int>(small.size());
  p.rightCapacity.assign(large.size(), 1);
  for (int i = 0; i < p.numLeft; ++i) {
    for (size_t j = 0; j < large.size(); ++j) {
      const int x = xSmall ? small[i] : large[j];
      const int y = xSmall ? large[j] : small[i];
      const int contrib = I.prefers(a, x, y) ? 1 : -1;
      p.edges.push_back({i, static_cast<int>(j), -contrib});
    }
  }
  auto outcome = engine::maxSizeMaxWeightMatching(p);
  const auto& sol = std::get<engine::MatchingSolution>(outcome);
  if (sol.size != p.numLeft) fail(ErrorKind::Internal, "pairing assignment not full");
  return static_cast<int>(-sol.weight) + static_cast<int>(X.size()) -
         static_cast<int>(Y.size());
}

int voteTraditionalOnSets(const Instance& I, int a, const std::vector<int>& S,
                          const std::vector<int>& T) {
  const std::vector<int> X = setMinus(S, T);
  const std::vector<int> Y = setMinus(T, S);
  if (std::min(X.size(), Y.size()) <= kPairingEnumerationMax)
    return worstPairingByEnumeration(I, a, X, Y);
  return worstPairingByAssignment(I, a, X, Y);
}

}  // namespace detail

int voteTraditional(const Instance& I, int a, const Matching& M, const Matching& M2) {
  std::vector<int> S, T;
  for (const auto& [x, h] : M.edges)
    if (x == a) S.push_back(h);
  for (const auto& [x, h] : M2.edges)
    if (x == a) T.push_back(h);
  return detail::voteTraditionalOnSets(I, a, S, T);
}

int voteLex(const Instance& I, int a, const Matching& M, const Matching& M2) {
  std::vector<int> S, T;
  for (const auto& [x, h] : M.edges)
    if (x == a) S.push_back(h);
  for (const auto& [x, h] : M2.edges)
    if (x == a) T.push_back(h);
  const std::vector<int> onlyS = setMinus(S, T);
  const std::vector<int> onlyT = setMinus(T, S);
  if (onlyS.empty() && onlyT.empty()) return 0;
  int best = -1;
  int sign = 0;
  for (int h : onlyS) {
    const int r = *I.rankOf(a, h);
    if (best < 0 || r < best) {
      best = r;
      sign = 1;
    }
  }
  for (int h : onlyT) {
    const int r = *I.rankOf(a, h);
    if (best < 0 || r < best) {
      best = r;
      sign = -1;
    }
  }
  return sign;
}

VoteOutcome totalVote(const Instance& I, const Matching& M, const Matching& M2,
                      PopularityNotion notion) {
  const auto housesM = housesByApplicant(I, M);
  const auto housesM2 = housesByApplicant(I, M2);
  VoteOutcome out;
  out.perApplicant.resize(I.numApplicants());
  for (int a = 0; a < I.numApplicants(); ++a) {
    int v;
    if (notion == PopularityNotion::Traditional) {
      v = detail::voteTraditionalOnSets(I, a, housesM[a], housesM2[a]);
    } else {
      v = voteLex(I, a, M, M2);
    }
    out.perApplicant[a] = v;
    out.total += v;
  }
  return out;
}

PopularityCheck isPopularBruteForce(const Instance& I, const Matching& M,
                                    PopularityNotion notion, long long limit) {
  validateMatching(I, M);
  PopularityCheck result;
  result.popular = true;
  forEachMatching(I, limit, [&](const Matching& M2) {
    if (M2 == M) return true;
    if (totalVote(I, M, M2, notion).total < 0) {
      result.popular = false;
      result.witness = M2;
      return false;
    }
    return true;
  });
  return result;
}

PopularityCheck isParetoOptimalBruteForce(const Instance& I, const Matching& M,
                                          long long limit) {
  if (!I.applicantsUnit())
    fail(ErrorKind::Unsupported,
         "Pareto-domination is defined for unit applicant capacities only");
  validateMatching(I, M);
  std::vector<int> mine(I.numApplicants(), -1);
  for (const auto& [a, h] : M.edges) mine[a] = h;

  PopularityCheck result;
  result.popular = true;
  forEachMatching(I, limit, [&](const Matching& M2) {
    std::vector<int> other(I.numApplicants(), -1);
    for (const auto& [a, h] : M2.edges) other[a] = h;
    bool weakAll = true, strictSome = false;
    for (int a = 0; a < I.numApplicants() && weakAll; ++a) {
      if (other[a] == mine[a]) continue;
      if (other[a] == -1) {
        weakAll = false;  // losing the assigned house is a strict worsening
      } else if (mine[a] == -1 || I.prefers(a, other[a], mine[a])) {
        strictSome = true;
      } else {
        weakAll = false;
      }
    }
    if (weakAll && strictSome) {
      result.popular = false;
      result.witness = M2;
      return false;
    }
    return true;
  });
  return result;
}

std::optional<Matching> findLexDominator(const Instance& I, const Matching& M,
                                         long long nodeGuard) {
  validateMatching(I, M);
  const auto housesM = housesByApplicant(I, M);
  const int n = I.numApplicants();

  // Per-applicant options: every subset of the acceptable houses within
  // capacity, with its lex vote against M(a) precomputed.
  struct Option {
    std::vector<int> houses;
    int vote;
  };
  std::vector<std::vector<Option>> options(n);
  std::vector<int> minVote(n, 0);
  for (int a = 0; a < n; ++a) {
    const auto& prefs = I.applicant(a).prefs;
    if (prefs.size() > 20) fail(ErrorKind::TooLarge, "preference list too long for subset scan");
    const int q = I.applicantCapacity(a);
    std::vector<int> sortedM = housesM[a];
    std::sort(sortedM.begin(), sortedM.end());
    for (unsigned mask = 0; mask < (1u << prefs.size()); ++mask) {
      if (static_cast<int>(__builtin_popcount(mask)) > q) continue;
      Option opt;
      for (size_t k = 0; k < prefs.size(); ++k)
        if (mask & (1u << k)) opt.houses.push_back(prefs[k]);
      std::vector<int> sortedOpt = opt.houses;
      std::sort(sortedOpt.begin(), sortedOpt.end());
      if (sortedOpt == sortedM) {
        opt.vote = 0;
      } else {
        // best element of the symmetric difference
        int best = -1, sign = 0;
        for (int h : sortedM)
          if (!std::binary_search(sortedOpt.begin(), sortedOpt.end(), h)) {
            const int r = *I.rankOf(a, h);
            if (best < 0 || r < best) { best = r; sign = 1; }
          }
        for (int h : sortedOpt)
          if (!std::binary_search(sortedM.begin(), sortedM.end(), h)) {
            const int r = *I.rankOf(a, h);
            if (best < 0 || r < best) { best = r; sign = -1; }
          }
        opt.vote = sign;
      }
      options[a].push_back(std::move(opt));
      minVote[a] = std::min(minVote[a], options[a].back().vote);
    }
    std::stable_sort(options[a].begin(), options[a].end(),
                     [](const Option& l, const Option& r) { return l.vote < r.vote; });
  }

  // Applicants that can improve first; suffix bounds prune the rest fast.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int l, int r) { return minVote[l] < minVote[r]; });
  std::vector<int> suffixMin(n + 1, 0);
  for (int i = n - 1; i >= 0; --i) suffixMin[i] = suffixMin[i + 1] + minVote[order[i]];

  std::vector<int> load(I.numHouses(), 0);
  std::vector<std::pair<int, int>> chosen;
  long long nodes = 0;
  std::optional<Matching> found;

  auto rec = [&](auto&& self, int pos, int voteSum) -> bool {
    if (++nodes > nodeGuard)
      fail(ErrorKind::TooLarge, "lex domination search exceeded its node guard");
    if (voteSum + suffixMin[pos] >= 0) return false;
    if (pos == n) {
      found = makeMatching(I, chosen);
      return true;
    }
    const int a = order[pos];
    for (const Option& opt : options[a]) {
      bool fits = true;
      for (int h : opt.houses)
        if (load[h] >= I.houseCapacity(h)) {
          fits = false;
          break;
        }
      if (!fits) continue;
      for (int h : opt.houses) {
        ++load[h];
        chosen.emplace_back(a, h);
      }
      if (self(self, pos + 1, voteSum + opt.vote)) return true;
      for (int h : opt.houses) {
        --load[h];
        chosen.pop_back();
      }
    }
    return false;
  };
  rec(rec, 0, 0);
  return found;
}

}  // namespace mm
