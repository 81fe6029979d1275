#include "commsemi/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>

#include "commsemi/commgraph.hpp"
#include "commsemi/constructions.hpp"
#include "commsemi/lpaths.hpp"
#include "json.hpp"

namespace commsemi {

namespace {

constexpr char kPaper[] = "paper";
constexpr char kDerived[] = "derived";

void run_check(Report& report, std::string id, std::string claim,
               std::string expected, std::string provenance,
               std::function<std::string()> const& compute) {
  CheckResult c;
  c.id = std::move(id);
  c.claim = std::move(claim);
  c.expected = std::move(expected);
  c.provenance = std::move(provenance);
  auto t0 = std::chrono::steady_clock::now();
  try {
    c.computed = compute();
    c.status = c.computed == c.expected ? "pass" : "fail";
  } catch (std::exception const& e) {
    c.computed = std::string("error: ") + e.what();
    c.status = "fail";
  }
  c.ms = std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
             .count();
  report.checks.push_back(std::move(c));
}

void skip_check(Report& report, std::string id, std::string claim,
                std::string expected, std::string provenance,
                std::string established) {
  CheckResult c;
  c.id = std::move(id);
  c.claim = std::move(claim);
  c.expected = std::move(expected);
  c.provenance = std::move(provenance);
  c.computed = std::move(established);
  c.status = "skipped";
  report.checks.push_back(std::move(c));
}

GraphBudget budget_of(VerifyConfig const& cfg) {
  GraphBudget b;
  b.max_materialized_vertices = cfg.budget;
  b.threads = cfg.threads;
  return b;
}

uint64_t ideal_size(int n, int r) {
  uint64_t total = 0;
  for (int k = 1; k <= r; ++k) {
    total += count_rank_k(n, k);
  }
  return total;
}

// An explicit <= 5 path between non-idempotent witnesses in G(J_r):
// hop to an idempotent power on each side and bridge the idempotents.
std::vector<Transformation> bridged_path(Transformation const& a,
                                         Transformation const& b, int r) {
  Transformation ea = a.idempotent_power();
  Transformation fb = b.idempotent_power();
  std::vector<Transformation> path = {a};
  if (!(ea == a)) {
    path.push_back(ea);
  }
  if (ea == fb) {
    if (!(fb == b)) {
      path.push_back(b);
    }
    return path;
  }
  auto bridge = connect_idempotents(ea, fb, r);
  path.insert(path.end(), bridge.begin() + 1, bridge.end());
  if (!(fb == b)) {
    path.push_back(b);
  }
  // Cut out any loop created by an incidental collision.
  for (size_t i = 0; i < path.size(); ++i) {
    for (size_t j = path.size(); j-- > i + 1;) {
      if (path[i] == path[j]) {
        path.erase(path.begin() + i + 1, path.begin() + j + 1);
        break;
      }
    }
  }
  for (size_t i = 0; i + 1 < path.size(); ++i) {
    if (!path[i].commutes(path[i + 1])) {
      throw std::logic_error("bridged path does not commute");
    }
  }
  return path;
}

// Certifies that G(T(p)) is disconnected for prime p: every non-trivial
// element commuting with a p-cycle is one of its powers, and a constant
// is a vertex outside that component. Streams over all of T(p).
bool prime_disconnection_certificate(int p) {
  std::vector<int> cyc(p);
  for (int i = 0; i < p; ++i) {
    cyc[i] = (i + 1) % p + 1;
  }
  Transformation a = Transformation::from_one_based(cyc);
  std::vector<Transformation> powers;
  Transformation q = a;
  for (int i = 1; i <= p; ++i) {
    powers.push_back(q);
    q = q * a;
  }
  uint64_t total = 1;
  for (int i = 0; i < p; ++i) {
    total *= p;
  }
  std::vector<Point> img(p);
  for (uint64_t v = 0; v < total; ++v) {
    uint64_t x = v;
    for (int i = p - 1; i >= 0; --i) {
      img[i] = static_cast<Point>(x % p);
      x /= p;
    }
    if (!commutes_raw(img.data(), a.data(), p)) {
      continue;
    }
    Transformation t{img};
    if (std::find(powers.begin(), powers.end(), t) == powers.end()) {
      return false;
    }
  }
  // The component of the p-cycle misses, e.g., the constants.
  return p >= 2;
}

bool is_prime(int n) {
  if (n < 2) {
    return false;
  }
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      return false;
    }
  }
  return true;
}

}  // namespace

bool Report::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](CheckResult const& c) { return c.status != "fail"; });
}

void Report::append(Report const& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

std::string Report::to_json() const {
  nlohmann::json j;
  j["version"] = version;
  j["config"] = {{"max_n", config.max_n},
                 {"max_k", config.max_k},
                 {"budget", config.budget},
                 {"threads", config.threads}};
  j["checks"] = nlohmann::json::array();
  for (auto const& c : checks) {
    j["checks"].push_back({{"id", c.id},
                           {"claim", c.claim},
                           {"computed", c.computed},
                           {"expected", c.expected},
                           {"provenance", c.provenance},
                           {"status", c.status},
                           {"ms", c.ms}});
  }
  return j.dump(2);
}

std::string Report::to_text() const {
  std::string out;
  size_t passed = 0, failed = 0, skipped = 0;
  for (auto const& c : checks) {
    out += "[" + c.status + "] " + c.id + ": " + c.claim +
           " (computed=" + c.computed + ", expected=" + c.expected + ", " +
           c.provenance + ")\n";
    if (c.status == "pass") {
      ++passed;
    } else if (c.status == "fail") {
      ++failed;
    } else {
      ++skipped;
    }
  }
  out += std::to_string(passed) + " passed, " + std::to_string(failed) +
         " failed, " + std::to_string(skipped) + " skipped\n";
  return out;
}

Report verify_tdia(VerifyConfig const& cfg) {
  Report rep;
  rep.config = cfg;
  for (int n = 3; n <= cfg.max_n && n <= 7; ++n) {
    for (int r = 2; r < n; ++r) {
      bool exceptional = (n == 3) || (n == 5 && r == 4);
      run_check(
          rep, "tdia:" + std::to_string(n) + ":" + std::to_string(r),
          "diameter of the idempotent graph of J_" + std::to_string(r) +
              " in T(" + std::to_string(n) + ")",
          exceptional ? "2" : "3", kPaper, [&] {
            auto s = std::make_shared<FiniteSemigroup>(
                FiniteSemigroup::ideal(n, r));
            auto g = CommutingGraph::idempotent(s);
            return g.diameter(budget_of(cfg)).to_string();
          });
    }
  }
  return rep;
}

Report verify_tdia2(VerifyConfig const& cfg) {
  Report rep;
  rep.config = cfg;
  for (int n = 3; n <= cfg.max_n && n <= 7; ++n) {
    for (int r = 2; r < n; ++r) {
      bool exceptional = (n == 3) || (n >= 5 && n <= 7 && r == 4);
      std::string expected = exceptional ? "4" : "5";
      std::string id =
          "tdia2:" + std::to_string(n) + ":" + std::to_string(r);
      std::string claim = "diameter of the commuting graph of J_" +
                          std::to_string(r) + " in T(" + std::to_string(n) +
                          ")";
      if (ideal_size(n, r) <= cfg.budget) {
        run_check(rep, id, claim, expected, kPaper, [&] {
          auto s =
              std::make_shared<FiniteSemigroup>(FiniteSemigroup::ideal(n, r));
          auto g = CommutingGraph::of(s);
          return g.diameter(budget_of(cfg)).to_string();
        });
      } else if (r == 4) {
        // Beyond the budget the exceptional diameter 4 is pinned by the
        // witness pair at distance exactly 4.
        run_check(rep, id + ":witness", claim + " via witness distance",
                  "4", kPaper, [&] {
                    auto s = std::make_shared<FiniteSemigroup>(
                        FiniteSemigroup::ideal(n, r));
                    auto g = CommutingGraph::of(s);
                    auto [a, b] = distance4_witnesses(n);
                    auto d = g.distance(*s->index_of(a), *s->index_of(b),
                                        budget_of(cfg));
                    return d.to_string();
                  });
      } else {
        // Split check: no path of length <= 4 between the witnesses,
        // and an explicit bridged path of length <= 5.
        run_check(rep, id + ":lower", claim + ": witness distance >= 5",
                  "true", kPaper, [&] {
                    auto s = std::make_shared<FiniteSemigroup>(
                        FiniteSemigroup::ideal(n, r));
                    auto g = CommutingGraph::of(s);
                    auto [a, b] = tdia2_witnesses(n, r);
                    GraphBudget gb = budget_of(cfg);
                    gb.max_search_depth = 4;
                    auto d = g.distance(*s->index_of(a), *s->index_of(b), gb);
                    return d.infinite ? "true" : "false";
                  });
        run_check(rep, id + ":upper", claim + ": bridged path of length <= 5",
                  "true", kDerived, [&] {
                    auto [a, b] = tdia2_witnesses(n, r);
                    auto path = bridged_path(a, b, r);
                    return path.size() >= 2 && path.size() <= 6 ? "true"
                                                                : "false";
                  });
      }
    }
    // The exact witness distance for the large r = 4 ideals.
    if (n >= 6 && n <= 7) {
      run_check(rep, "tdia2:witness4:" + std::to_string(n),
                "distance between the rank-4 witnesses in G(J_4), n = " +
                    std::to_string(n),
                "4", kDerived, [&] {
                  auto s = std::make_shared<FiniteSemigroup>(
                      FiniteSemigroup::ideal(n, 4));
                  auto g = CommutingGraph::of(s);
                  auto [a, b] = distance4_witnesses(n);
                  auto d =
                      g.distance(*s->index_of(a), *s->index_of(b),
                                 budget_of(cfg));
                  return d.to_string();
                });
    }
  }
  return rep;
}

Report verify_tdia3(VerifyConfig const& cfg, std::vector<int> const& cases) {
  Report rep;
  rep.config = cfg;
  for (int n : cases) {
    if (n < 2 || n > 8) {
      continue;
    }
    std::string ns = std::to_string(n);
    if (is_prime(n)) {
      run_check(rep, "tdia3:disconnected:" + ns,
                "G(T(" + ns + ")) is disconnected (prime degree)", "true",
                kPaper, [&]() -> std::string {
                  // The cycle-component certificate always applies; for
                  // the small primes cross-check with a full sweep.
                  bool ok = prime_disconnection_certificate(n);
                  if (ok && n <= 5) {
                    auto s = std::make_shared<FiniteSemigroup>(
                        FiniteSemigroup::full(n));
                    auto g = CommutingGraph::of(s);
                    ok = !g.is_connected(budget_of(cfg));
                  }
                  return ok ? "true" : "false";
                });
      continue;
    }
    if (n == 4 || n == 6) {
      run_check(rep, "tdia3:diameter:" + ns,
                "diameter of G(T(" + ns + "))", n == 4 ? "4" : "5", kPaper,
                [&] {
                  auto s = std::make_shared<FiniteSemigroup>(
                      FiniteSemigroup::full(n));
                  auto g = CommutingGraph::of(s);
                  return g.diameter(budget_of(cfg)).to_string();
                });
    }
    if (n == 6 || n == 8) {
      run_check(rep, "tdia3:certificate:" + ns,
                "distance >= 5 certificate for the witness pair in T(" + ns +
                    ")",
                "true", kPaper, [&] {
                  auto [a, b] = tdia3_witnesses(n);
                  return lower_bound_certificate(n, a, b) ? "true" : "false";
                });
    }
    if (n == 8) {
      skip_check(rep, "tdia3:upper:8",
                 "diameter of G(T(8)) upper bound", "5", kPaper,
                 "skipped(budget): lower bound 5 certified; upper bound not "
                 "searched");
    }
  }
  return rep;
}

Report verify_bands(VerifyConfig const& cfg) {
  Report rep;
  rep.config = cfg;
  for (int k = 2; k <= cfg.max_k && k <= 6; ++k) {
    std::string ks = std::to_string(k);
    auto s0 = std::make_shared<FiniteSemigroup>(s0_band(k));
    auto s1 = std::make_shared<FiniteSemigroup>(s1_band(k));
    run_check(rep, "bands:kd:s0:" + ks,
              "knit degree of S0(" + ks + ")", std::to_string(2 * k), kPaper,
              [&] {
                auto kd = knit_degree(*s0);
                return kd ? std::to_string(kd->degree) : "absent";
              });
    run_check(rep, "bands:kd:s1:" + ks,
              "knit degree of S1(" + ks + ")", std::to_string(2 * k + 1),
              kPaper, [&] {
                auto kd = knit_degree(*s1);
                return kd ? std::to_string(kd->degree) : "absent";
              });
    run_check(rep, "bands:diam:s0:" + ks,
              "diameter of G(S0(" + ks + "))", std::to_string(2 * k + 2),
              kPaper, [&] {
                return CommutingGraph::of(s0).diameter(budget_of(cfg))
                    .to_string();
              });
    run_check(rep, "bands:diam:s1:" + ks,
              "diameter of G(S1(" + ks + "))", std::to_string(2 * k + 1),
              kPaper, [&] {
                return CommutingGraph::of(s1).diameter(budget_of(cfg))
                    .to_string();
              });
  }
  run_check(rep, "bands:kd:teve4", "knit degree of the 4-element band", "2",
            kPaper, [&] {
              auto s = std::make_shared<FiniteSemigroup>(
                  small_semigroup("teve4"));
              auto kd = knit_degree(*s);
              return kd ? std::to_string(kd->degree) : "absent";
            });
  run_check(rep, "bands:diam:teve4",
            "diameter of the 4-element band's graph (the 4-cycle)", "2",
            kDerived, [&] {
              auto s = std::make_shared<FiniteSemigroup>(
                  small_semigroup("teve4"));
              return CommutingGraph::of(s).diameter(budget_of(cfg))
                  .to_string();
            });
  run_check(rep, "bands:diam:tald4",
            "diameter of the 4-element chain-graph semigroup", "3", kPaper,
            [&] {
              auto s = std::make_shared<FiniteSemigroup>(
                  small_semigroup("tald4"));
              return CommutingGraph::of(s).diameter(budget_of(cfg))
                  .to_string();
            });
  return rep;
}

Report verify_schein(VerifyConfig const& cfg) {
  Report rep;
  rep.config = cfg;
  auto holds = [](QuasiIdentityReport const& q) {
    return q.holds ? std::string("holds") : std::string("fails");
  };
  auto s02 = std::make_shared<FiniteSemigroup>(s0_band(2));
  run_check(rep, "schein:s0:2:q1", "S0(2) satisfies zx=zy => xy=yx", "holds",
            kPaper, [&] { return holds(check_quasi_identity_1(*s02)); });
  run_check(rep, "schein:s0:2:A4", "S0(2) satisfies (A_4)", "holds", kPaper,
            [&] { return holds(check_An(*s02, 4)); });
  run_check(rep, "schein:s0:2:A5", "S0(2) fails (A_5)", "fails", kPaper,
            [&] { return holds(check_An(*s02, 5)); });
  auto zb = std::make_shared<FiniteSemigroup>(small_semigroup("zeroband3"));
  run_check(rep, "schein:zeroband3:A2", "{e,f,0} satisfies (A_2)", "holds",
            kPaper, [&] { return holds(check_An(*zb, 2)); });
  run_check(rep, "schein:zeroband3:A3", "{e,f,0} fails (A_3)", "fails",
            kPaper, [&] { return holds(check_An(*zb, 3)); });
  run_check(rep, "schein:zeroband3:q1", "{e,f,0} fails zx=zy => xy=yx",
            "fails", kDerived,
            [&] { return holds(check_quasi_identity_1(*zb)); });
  for (int k = 2; k <= std::min(cfg.max_k, 4); ++k) {
    for (int parity = 0; parity <= 1; ++parity) {
      int kd = 2 * k + parity;
      auto band = std::make_shared<FiniteSemigroup>(parity == 0 ? s0_band(k)
                                                                : s1_band(k));
      std::string name =
          (parity == 0 ? "S0(" : "S1(") + std::to_string(k) + ")";
      run_check(rep,
                "schein:sep:" + std::to_string(kd) + ":holds",
                name + " satisfies (A_" + std::to_string(kd) + ")", "holds",
                kPaper, [&] { return holds(check_An(*band, kd)); });
      run_check(rep,
                "schein:sep:" + std::to_string(kd) + ":fails",
                name + " fails (A_" + std::to_string(kd + 1) + ")", "fails",
                kPaper, [&] { return holds(check_An(*band, kd + 1)); });
    }
  }
  run_check(
      rep, "schein:A3-implies-A4",
      "(A_3) implies (A_4) over a corpus of small generated bands",
      "0 violations", kPaper, [&] {
        std::mt19937 rng(12345);
        int violations = 0, tested = 0;
        for (int trial = 0; trial < 200; ++trial) {
          int n = 3 + static_cast<int>(rng() % 4);
          int count = 3 + static_cast<int>(rng() % 2);
          std::vector<Transformation> gens;
          auto idems = all_idempotents(n);
          for (int i = 0; i < count; ++i) {
            gens.push_back(idems[rng() % idems.size()]);
          }
          FiniteSemigroup s = [&]() -> FiniteSemigroup {
            return FiniteSemigroup::closure(n, gens, 3000);
          }();
          if (s.size() > 60 || !s.is_band()) {
            continue;
          }
          ++tested;
          if (check_An(s, 3).holds && !check_An(s, 4).holds) {
            ++violations;
          }
        }
        if (tested < 20) {
          throw std::runtime_error("corpus too small: " +
                                   std::to_string(tested));
        }
        return std::to_string(violations) + " violations";
      });
  return rep;
}

Report verify_all(VerifyConfig const& cfg) {
  Report rep;
  rep.config = cfg;
  rep.append(verify_tdia(cfg));
  rep.append(verify_tdia2(cfg));
  std::vector<int> cases;
  for (int n = 2; n <= cfg.max_n && n <= 8; ++n) {
    cases.push_back(n);
  }
  rep.append(verify_tdia3(cfg, cases));
  rep.append(verify_bands(cfg));
  rep.append(verify_schein(cfg));
  return rep;
}

}  // namespace commsemi
