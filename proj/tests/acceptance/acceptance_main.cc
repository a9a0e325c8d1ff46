// Copyright 2026 The Optimin Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance suite. Prints one PASS/FAIL line per criterion followed by
// indented detail lines. `--criterion N` runs a single criterion; the exit
// status is non-zero if any selected criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "optimin/cli.h"
#include "optimin/deviation.h"
#include "optimin/generators.h"
#include "optimin/io.h"
#include "optimin/mixed2p.h"
#include "optimin/solvers.h"
#include "oracle.h"

namespace optimin {
namespace {

class Criterion {
 public:
  // Records a sub-check; the criterion passes only if all of them pass.
  void Expect(bool ok, const std::string& what) {
    ok_ = ok_ && ok;
    details_.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
  }
  void Note(const std::string& what) { details_.push_back("     " + what); }
  bool ok() const { return ok_; }
  const std::vector<std::string>& details() const { return details_; }

 private:
  bool ok_ = true;
  std::vector<std::string> details_;
};

std::vector<PureProfile> ProfilesOf(const std::vector<GuaranteeVector>& v) {
  std::vector<PureProfile> out;
  for (const auto& g : v) out.push_back(g.profile);
  return out;
}

std::string ProfileList(const Game& g, const std::vector<PureProfile>& ps) {
  std::string out = "{";
  for (std::size_t k = 0; k < ps.size(); ++k) {
    if (k > 0) out += ", ";
    out += ProfileToString(g, ps[k]);
  }
  return out + "}";
}

std::string Vec(const std::vector<Rational>& v) { return VectorToString(v); }

// 1. Illustrative game golden values.
void FigureOne(Criterion& c) {
  const Game g = Figure1Game();
  const std::vector<std::vector<Rational>> panel = {
      {100, 100}, {100, 0}, {0, 0},
      {0, 100},   {0, 0},   {0, 5},
      {0, 0},     {5, 0},   {5, 5}};
  const auto table = GuaranteeTable(g);
  int matching = 0;
  for (std::size_t k = 0; k < panel.size(); ++k) {
    matching += table[k].values == panel[k];
  }
  c.Expect(matching == 9,
           "minimal-payoff table matches on " + std::to_string(matching) + "/9 cells");
  const PureProfile top_left = g.ProfileFromLabels({"Top", "Left"});
  for (auto mode : {OptiminMode::kPareto, OptiminMode::kSimultaneous}) {
    const auto opt = OptiminPure(g, mode);
    c.Expect(ProfilesOf(opt) == std::vector<PureProfile>{top_left},
             std::string("optimin (") + std::string(ModeName(mode)) + ") = " +
                 ProfileList(g, ProfilesOf(opt)));
  }
  const auto nash = PureNash(g);
  c.Expect(nash == std::vector<PureProfile>{g.ProfileFromLabels({"Bottom", "Right"})},
           "pure Nash = " + ProfileList(g, nash));
  for (int p = 0; p < 2; ++p) {
    const auto m = MaximinPure(g, p);
    c.Expect(m.value == Rational(0) && m.strategies == std::vector<int>{0, 1, 2},
             "maximin of player " + std::to_string(p + 1) + " = " +
                 m.value.ToString() + " with " +
                 std::to_string(m.strategies.size()) + " witnesses");
  }
}

// Independent traveler oracle on machine integers: payoffs from the rule
// itself, guarantees and the Pareto set by naive loops.
struct TravelerOracle {
  std::vector<std::pair<int, int>> optimin;  // claims
  std::vector<std::pair<int, int>> nash;
  std::pair<std::int64_t, std::int64_t> top_guarantee;
};

TravelerOracle NaiveTraveler(int low, int high, int r) {
  auto pay = [&](int a, int b) -> std::pair<std::int64_t, std::int64_t> {
    if (a == b) return {a, a};
    if (a < b) return {a + r, a - r};
    return {b - r, b + r};
  };
  const int n = high - low + 1;
  std::vector<std::int64_t> g1(n * n), g2(n * n);
  TravelerOracle out;
  for (int a = low; a <= high; ++a) {
    for (int b = low; b <= high; ++b) {
      const auto [u1, u2] = pay(a, b);
      std::int64_t m1 = u1, m2 = u2;
      bool stable = true;
      for (int d = low; d <= high; ++d) {
        if (pay(a, d).second > u2) {  // player 2 profitably moves to d
          m1 = std::min(m1, pay(a, d).first);
          stable = false;
        }
        if (pay(d, b).first > u1) {
          m2 = std::min(m2, pay(d, b).second);
          stable = false;
        }
      }
      g1[(a - low) * n + (b - low)] = m1;
      g2[(a - low) * n + (b - low)] = m2;
      if (stable) out.nash.emplace_back(a, b);
    }
  }
  for (int x = 0; x < n * n; ++x) {
    bool dominated = false;
    for (int y = 0; y < n * n && !dominated; ++y) {
      dominated = g1[y] >= g1[x] && g2[y] >= g2[x] &&
                  (g1[y] > g1[x] || g2[y] > g2[x]);
    }
    if (!dominated) out.optimin.emplace_back(x / n + low, x % n + low);
  }
  out.top_guarantee = {g1[n * n - 1], g2[n * n - 1]};
  std::sort(out.optimin.begin(), out.optimin.end());
  std::sort(out.nash.begin(), out.nash.end());
  return out;
}

std::vector<std::pair<int, int>> Claims(const Game& g,
                                        const std::vector<PureProfile>& ps) {
  std::vector<std::pair<int, int>> out;
  for (const auto& p : ps) {
    out.emplace_back(std::stoi(g.StrategyLabel(0, p[0])),
                     std::stoi(g.StrategyLabel(1, p[1])));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// 2. Traveler's dilemma: r = 2 and the reward sweep.
void Traveler(Criterion& c) {
  const Game g = TravelersDilemma({2, 100, 2});
  const auto nash = PureNash(g);
  const auto opt = OptiminPure(g, OptiminMode::kPareto);
  const TravelerOracle naive = NaiveTraveler(2, 100, 2);
  const std::vector<std::pair<int, int>> top{{100, 100}};
  c.Expect(Claims(g, nash) == std::vector<std::pair<int, int>>{{2, 2}} &&
               naive.nash == Claims(g, nash),
           "r=2: pure Nash = " + ProfileList(g, nash) + " (naive loop agrees)");
  c.Expect(Claims(g, ProfilesOf(opt)) == top && naive.optimin == top &&
               opt.size() == 1 && opt[0].values == std::vector<Rational>{97, 97} &&
               naive.top_guarantee == std::pair<std::int64_t, std::int64_t>{97, 97},
           "r=2: pareto optimin = " + ProfileList(g, ProfilesOf(opt)) +
               " guaranteeing " + (opt.empty() ? "-" : Vec(opt[0].values)) +
               " (naive loop over 9801 profiles agrees)");

  std::vector<int> wrong;
  bool closed_form = true;
  bool oracle_agrees = true;
  for (int r = 2; r <= 60; ++r) {
    const Game t = TravelersDilemma({2, 100, r});
    const auto table = GuaranteeTable(t);
    const auto pareto = SelectOptimin(table, OptiminMode::kPareto);
    const auto got = Claims(t, ProfilesOf(pareto));
    const std::vector<std::pair<int, int>> expected{
        r <= 49 ? std::pair<int, int>{100, 100} : std::pair<int, int>{2, 2}};
    if (got != expected) {
      wrong.push_back(r);
      if (r == 3 || r == 49 || r == 50 || r == 60) {
        const auto simultaneous = SelectOptimin(table, OptiminMode::kSimultaneous);
        std::string vectors;
        for (const auto& p : pareto) {
          vectors += " " + ProfileToString(t, p.profile) + "->" + Vec(p.values);
        }
        c.Note("r=" + std::to_string(r) + ": pareto optimin" + vectors +
               "; simultaneous = " + ProfileList(t, ProfilesOf(simultaneous)));
      }
    }
    // Diagonal closed form: (100,100) guarantees 101 - 2r, (2,2) guarantees 2.
    const auto& hi = table[t.ProfileIndex(t.ProfileFromLabels({"100", "100"}))];
    const auto& lo = table[t.ProfileIndex(t.ProfileFromLabels({"2", "2"}))];
    closed_form = closed_form && hi.values[0] == Rational(101 - 2 * r) &&
                  lo.values[0] == Rational(2) &&
                  ((hi.values[0] > lo.values[0]) == (r <= 49));
    if (r % 10 == 0 || r == 49) {
      oracle_agrees = oracle_agrees && NaiveTraveler(2, 100, r).optimin == got;
    }
  }
  c.Expect(closed_form,
           "diagonal guarantees follow 101-2r at (100,100) and 2 at (2,2); "
           "(100,100) beats (2,2) exactly for r <= 49");
  c.Expect(oracle_agrees, "library optimin sets agree with the naive loop "
                          "at r = 10,20,...,60 and 49");
  std::string list;
  for (int r : wrong) list += (list.empty() ? "" : ",") + std::to_string(r);
  c.Expect(wrong.empty(),
           "sweep r=2..60: optimin is exactly {(100,100)} for r<=49 and "
           "{(2,2)} for r>=50" +
               (wrong.empty() ? std::string()
                              : " -- differs at r=" + list));
}

// 3. Repeated prisoner's dilemma meta-game.
void RepeatedDilemma(Criterion& c) {
  const Game pd = PrisonersDilemmaStage();
  const auto strategies = DefaultMetaStrategies();
  const Game meta = RepeatedMetaGame(pd, strategies, 100);
  const PureProfile tft = meta.ProfileFromLabels({"TFT", "TFT"});
  const PureProfile alld = meta.ProfileFromLabels({"AllD", "AllD"});
  const auto g = ComputeGuaranteeVector(meta, tft);
  c.Expect(g.values == std::vector<Rational>{297, 297},
           "T=100: guarantee at (TFT,TFT) = " + Vec(g.values));
  const auto nash = PureNash(meta);
  c.Expect(std::find(nash.begin(), nash.end(), alld) != nash.end() &&
               Payoff(meta, alld) == std::vector<Rational>{100, 100},
           "(AllD,AllD) is a pure Nash with payoffs " + Vec(Payoff(meta, alld)) +
               "; all pure Nash: " + ProfileList(meta, nash));
  const auto report = CheckSuperNash(meta, OptiminMode::kPareto);
  bool strict = !report.optimin->empty();
  for (const auto& o : *report.optimin) {
    strict = strict && o.values[0] > Rational(100) && o.values[1] > Rational(100);
  }
  const SuperNashVerdict* alld_verdict = nullptr;
  for (const auto& v : report.super_nash->verdicts) {
    if (v.nash == alld) alld_verdict = &v;
  }
  c.Expect(strict && alld_verdict && alld_verdict->strict_for_all,
           "every optimin guarantee strictly exceeds the (AllD,AllD) payoffs; "
           "optimin = " + ProfileList(meta, ProfilesOf(*report.optimin)));
  for (const auto& v : report.super_nash->verdicts) {
    c.Note("Nash " + ProfileToString(meta, v.nash) + " payoffs " +
           Vec(v.nash_payoffs) + ": " +
           (v.strict_for_all ? "strict" : "weak (equality case)"));
  }
  bool monotone = true;
  std::string values;
  for (int rounds : {2, 5, 10, 50, 100}) {
    const Game m = RepeatedMetaGame(pd, strategies, rounds);
    const auto v = ComputeGuaranteeVector(m, m.ProfileFromLabels({"TFT", "TFT"}));
    monotone = monotone && v.values == std::vector<Rational>{3 * (rounds - 1),
                                                             3 * (rounds - 1)};
    values += " T=" + std::to_string(rounds) + ":" + v.values[0].ToString();
  }
  c.Expect(monotone, "guarantee at (TFT,TFT) equals 3(T-1):" + values);
}

// 4. Super-Nash properties on 1000 random games.
void RandomSuperNash(Criterion& c) {
  std::mt19937_64 rng(20260101);
  int violations_a = 0, violations_b = 0, violations_c = 0, violations_d = 0;
  int with_nash = 0;
  const int kGames = 1000;
  for (int t = 0; t < kGames; ++t) {
    const Game g = oracle::RandomGame(rng, oracle::RandomShape(rng), -9, 9);
    const auto table = GuaranteeTable(g);
    const auto optimin = SelectOptimin(table, OptiminMode::kPareto);
    const auto nash = PureNash(g);
    with_nash += !nash.empty();
    for (const auto& q : nash) {
      const auto u = Payoff(g, q);
      const bool witnessed =
          std::any_of(optimin.begin(), optimin.end(), [&](const auto& p) {
            for (std::size_t i = 0; i < u.size(); ++i) {
              if (p.values[i] < u[i]) return false;
            }
            return true;
          });
      violations_a += !witnessed;
      for (const auto& p : optimin) {
        violations_b += ParetoDominates(u, Payoff(g, p.profile));
      }
      violations_c += table[g.ProfileIndex(q)].values != u;
    }
    for (const auto& row : table) {
      const auto u = Payoff(g, row.profile);
      for (std::size_t i = 0; i < u.size(); ++i) violations_d += row.values[i] > u[i];
    }
  }
  c.Note(std::to_string(kGames) + " games, " + std::to_string(with_nash) +
         " with at least one pure Nash");
  c.Expect(violations_a == 0, "(a) an optimin guarantees every Nash payoff: " +
                                  std::to_string(violations_a) + " violations");
  c.Expect(violations_b == 0, "(b) no Nash payoff Pareto-dominates an optimin: " +
                                  std::to_string(violations_b) + " violations");
  c.Expect(violations_c == 0, "(c) guarantee equals payoff at pure Nash: " +
                                  std::to_string(violations_c) + " violations");
  c.Expect(violations_d == 0, "(d) guarantee never exceeds payoff: " +
                                  std::to_string(violations_d) + " violations");
}

// 5. Mixed 2-player analyses.
void Mixed(Criterion& c) {
  const Rational half(1, 2);
  const auto mp = SupportEnumerationNash(MatchingPennies());
  c.Expect(mp.equilibria ==
               std::vector<MixedProfile>{MixedProfile({{half, half}, {half, half}})},
           "matching pennies: exactly ((1/2,1/2),(1/2,1/2))");
  const auto bos = SupportEnumerationNash(BattleOfTheSexes());
  const std::vector<MixedProfile> bos_expected{
      MixedProfile({{1, 0}, {1, 0}}), MixedProfile({{0, 1}, {0, 1}}),
      MixedProfile({{Rational(2, 3), Rational(1, 3)}, {Rational(1, 3), Rational(2, 3)}})};
  c.Expect(bos.equilibria == bos_expected,
           "battle of the sexes: (A,A), (B,B), ((2/3,1/3),(1/3,2/3))");

  const std::vector<Game> fixtures{MatchingPennies(), BattleOfTheSexes(),
                                   PrisonersDilemmaStage(), Figure1Game()};
  int equilibria = 0;
  bool equal_at_nash = true;
  int cells = 0;
  std::vector<std::string> mismatches;
  for (const Game& g : fixtures) {
    for (const auto& e : SupportEnumerationNash(g).equilibria) {
      ++equilibria;
      for (int i = 0; i < 2; ++i) {
        equal_at_nash = equal_at_nash &&
                        MixedGuarantee2p(g, e, i) == ExpectedPayoff(g, e, i);
      }
    }
    for (const auto& p : EnumerateProfiles(g)) {
      ++cells;
      const auto degenerate = MixedProfile::Degenerate(g, p);
      for (int i = 0; i < 2; ++i) {
        const Rational mixed = MixedGuarantee2p(g, degenerate, i);
        const Rational pure = Guarantee(g, p, i);
        if (mixed != pure) {
          mismatches.push_back(g.title() + " " + ProfileToString(g, p) +
                               " player " + std::to_string(i + 1) + ": mixed " +
                               mixed.ToString() + " vs pure " + pure.ToString());
        }
      }
    }
  }
  c.Expect(equal_at_nash, "mixed guarantee equals the equilibrium payoff at all " +
                              std::to_string(equilibria) + " fixture equilibria");
  c.Expect(mismatches.empty(),
           "mixed guarantee on degenerate profiles equals the pure guarantee on "
           "all " + std::to_string(cells) + " fixture cells (" +
               std::to_string(mismatches.size()) + " mismatches)");
  for (const auto& m : mismatches) c.Note(m);
}

// 6. Optimized guarantees against the brute-force oracle.
void OracleEquivalence(Criterion& c) {
  std::mt19937_64 rng(606);
  int games = 0;
  int mismatched = 0;
  std::size_t profiles = 0;
  for (; games < 200; ++games) {
    const Game g = oracle::RandomGame(rng, oracle::RandomShape(rng, 3, 4));
    for (const auto& row : GuaranteeTable(g, 2)) {
      ++profiles;
      mismatched += row.values != oracle::GuaranteeVector(g, row.profile.indices());
    }
  }
  c.Expect(mismatched == 0, std::to_string(games) + " games, " +
                                std::to_string(profiles) + " profiles, " +
                                std::to_string(mismatched) + " mismatches");
}

std::string RunOnce(const std::vector<std::string>& args) {
  std::istringstream in;
  std::ostringstream out, err;
  RunCli(args, in, out, err);
  return out.str();
}

// 7. Byte-identical JSON across job counts.
void Determinism(Criterion& c) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry :
       std::filesystem::directory_iterator(OPTIMIN_FIXTURE_DIR)) {
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  c.Expect(!files.empty(), std::to_string(files.size()) + " fixture files");
  for (const auto& file : files) {
    const std::string path = file.string();
    bool same = true;
    for (const std::vector<std::string>& command :
         {std::vector<std::string>{"solve", path, "--optimin", "--nash",
                                   "--maximin", "--guarantees", "--format", "json"},
          std::vector<std::string>{"check", "super-nash", path, "--format", "json"},
          std::vector<std::string>{"check", "super-nash", path, "--mode",
                                   "simultaneous", "--format", "json"}}) {
      auto with_jobs = [&](const char* jobs) {
        std::vector<std::string> args{"optimin", "--jobs", jobs};
        args.insert(args.end(), command.begin(), command.end());
        return RunOnce(args);
      };
      const std::string one = with_jobs("1");
      const std::string eight = with_jobs("8");
      same = same && !one.empty() && one == eight && one == with_jobs("1");
    }
    c.Expect(same, file.filename().string() +
                       ": --jobs 1 and --jobs 8 reports are byte-identical");
  }
}

struct Entry {
  int id;
  const char* title;
  double budget_seconds;
  std::function<void(Criterion&)> run;
};

}  // namespace
}  // namespace optimin

int main(int argc, char** argv) {
  using namespace optimin;
  int only = 0;
  for (int k = 1; k < argc; ++k) {
    if (std::strcmp(argv[k], "--criterion") == 0 && k + 1 < argc) {
      only = std::atoi(argv[++k]);
    }
  }
  const std::vector<Entry> entries{
      {1, "illustrative game golden values", 1.0, FigureOne},
      {2, "traveler's dilemma and reward sweep", 10.0, Traveler},
      {3, "repeated prisoner's dilemma meta-game", 5.0, RepeatedDilemma},
      {4, "super-Nash properties on random games", 60.0, RandomSuperNash},
      {5, "mixed 2-player equilibria and guarantees", 10.0, Mixed},
      {6, "guarantee oracle equivalence", 1e9, OracleEquivalence},
      {7, "determinism across job counts", 1e9, Determinism},
  };
  bool all_ok = true;
  for (const auto& e : entries) {
    if (only != 0 && e.id != only) continue;
    Criterion c;
    const auto start = std::chrono::steady_clock::now();
    try {
      e.run(c);
    } catch (const std::exception& ex) {
      c.Expect(false, std::string("exception: ") + ex.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (e.budget_seconds < 1e9) {
      std::ostringstream what;
      what << "runtime " << seconds << " s within " << e.budget_seconds << " s";
      c.Expect(seconds < e.budget_seconds, what.str());
    }
    all_ok = all_ok && c.ok();
    std::cout << (c.ok() ? "[PASS] " : "[FAIL] ") << "criterion " << e.id
              << ": " << e.title << " (" << seconds << " s)\n";
    for (const auto& line : c.details()) std::cout << "         " << line << "\n";
  }
  return all_ok ? 0 : 1;
}
