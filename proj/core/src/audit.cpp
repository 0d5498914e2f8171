#include "matchlab/audit.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <tuple>

#include "matchlab/error.hpp"
#include "matchlab/extremal.hpp"

namespace matchlab {

std::string to_string(Expectation e) {
  switch (e) {
    case Expectation::Holds: return "holds";
    case Expectation::HoldsStrict: return "holds_strict";
    case Expectation::HoldsWithEquality: return "equality";
    case Expectation::Fails: return "fails";
    case Expectation::Unclaimed: return "unclaimed";
  }
  return "?";
}

std::string to_string(PivotMode m) { return m == PivotMode::N0 ? "n0" : "n0_minus_1"; }

bool InequalityRecord::agrees() const {
  switch (expected) {
    case Expectation::Holds: return margin >= 0;
    case Expectation::HoldsStrict: return margin > 0;
    case Expectation::HoldsWithEquality: return margin == 0;
    case Expectation::Fails: return margin < 0;
    case Expectation::Unclaimed: return true;
  }
  return false;
}

InequalityRecord make_record(std::string id, std::string anchor, int s, int n, int k, std::optional<int> g2,
                             Rational lhs, Rational rhs, Expectation expected, bool monotone) {
  InequalityRecord r;
  r.id = std::move(id);
  r.anchor = std::move(anchor);
  r.s = s;
  r.n = n;
  r.k = k;
  r.g2 = g2;
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.margin = r.rhs - r.lhs;
  r.holds = r.margin >= 0;
  r.expected = expected;
  r.monotone = monotone;
  return r;
}

bool check_dominance(int k, int s, int n) {
  std::int64_t cap = std::max(size_A({n, k, s, 1}), size_A({n, k, s, k}));
  for (int ell = 1; ell <= k; ++ell) {
    if (size_A({n, k, s, ell}) > cap) return false;
  }
  return true;
}

InequalityRecord check_fort(int n, int k, int s) {
  if (s < 1 || n < k * s + k - 1) throw Error("parameters out of range");
  Rational rhs = std::max(binomial(k * s + k - 1, k), binomial(n, k) - binomial(n - s, k));
  Rational lhs = std::max(binomial(k * s - 1, k), binomial(n - 1, k) - binomial(n - s, k)) + binomial(n - 1, k - 1);
  return make_record("fort", "removing vertex 1 cannot beat the conjectured maximum", s, n, k, std::nullopt, lhs,
                     rhs, Expectation::Holds);
}

std::vector<InequalityRecord> fort_details(int k, int s) {
  std::vector<InequalityRecord> out;
  const int n = (k + 1) * s;
  Rational base = binomial(k * s - 1, k);
  Rational power = 1;
  for (int i = 0; i < k; ++i) power *= Rational(k + 1, k);
  if (base > 0) {
    out.push_back(make_record("fort.ratio", "clique ratio at n=(k+1)s exceeds ((k+1)/k)^k", s, n, k, std::nullopt,
                              power, Rational(binomial(n - 1, k)) / base, Expectation::HoldsStrict));
  }
  out.push_back(make_record("fort.ratio_two", "((k+1)/k)^k exceeds 2", s, n, k, std::nullopt, 2, power,
                            Expectation::HoldsStrict));
  out.push_back(make_record("fort.clique_excess", "C(n-1,k)-C(ks-1,k) > C(ks-1,k) at n=(k+1)s", s, n, k,
                            std::nullopt, base, binomial(n - 1, k) - binomial(k * s - 1, k),
                            Expectation::HoldsStrict));
  out.push_back(make_record("fort.final", "C(ks-1,k)+C((k+1)s-2,k-1) < C((k+1)s-1,k)", s, n, k, std::nullopt,
                            base + binomial(n - 2, k - 1), binomial(n - 1, k), Expectation::HoldsStrict));
  // m = floor((k+1/2)s + k) = floor(((2k+1)s + 2k)/2)
  int m = ((2 * k + 1) * s + 2 * k) / 2;
  out.push_back(make_record("pivot.convexity", "C(m,k)-C(m-s,k) >= C(k(s+1)-1,k) at m=floor((k+1/2)s+k)", s, m, k,
                            std::nullopt, binomial(k * (s + 1) - 1, k), binomial(m, k) - binomial(m - s, k),
                            Expectation::Holds));
  out.push_back(make_record("pivot.identity", "C(k(s+1)-1,k) = s C(k(s+1)-1,k-1)", s, m, k, std::nullopt,
                            binomial(k * (s + 1) - 1, k), Rational(s) * binomial(k * (s + 1) - 1, k - 1),
                            Expectation::HoldsWithEquality));
  return out;
}

namespace {

struct Ctx {
  int s;
  int n;
  PivotMode mode;
  Rational a;    // s - 2
  Rational b;    // C(s-1, 2)
  Rational ab;   // (s-1)(s-2)
  Rational fl1;  // floor((s+2)/2)
  Rational fl0;  // floor(s/2)
  Rational ex;   // n - 3s - 2
};

using Side = std::pair<Rational, Rational>;
using Rule = std::function<std::optional<Expectation>(const Ctx&, int g2)>;

struct Entry {
  std::string id;
  std::string anchor;
  std::function<Side(const Ctx&, int g2)> sides;
  Rule expect;
  std::vector<int> g2_values;  // empty: no g2 parameter
  bool monotone = false;

  Entry(std::string i, std::string a, std::function<Side(const Ctx&, int)> sd, Rule ex, std::vector<int> g = {},
        bool mono = false)
      : id(std::move(i)), anchor(std::move(a)), sides(std::move(sd)), expect(std::move(ex)), g2_values(std::move(g)),
        monotone(mono) {}
};

constexpr auto E_H = Expectation::Holds;
constexpr auto E_S = Expectation::HoldsStrict;
constexpr auto E_Q = Expectation::HoldsWithEquality;
constexpr auto E_F = Expectation::Fails;
constexpr auto E_U = Expectation::Unclaimed;

std::vector<int> range(int lo, int hi) {
  std::vector<int> v;
  for (int i = lo; i <= hi; ++i) v.push_back(i);
  return v;
}

Rule from(int s_min, Expectation e) {
  return [=](const Ctx& c, int) -> std::optional<Expectation> {
    if (c.s < s_min) return std::nullopt;
    return e;
  };
}

Rule at(int s, PivotMode mode, Expectation e) {
  return [=](const Ctx& c, int) -> std::optional<Expectation> {
    if (c.s != s || c.mode != mode) return std::nullopt;
    return e;
  };
}

std::vector<Entry> entries() {
  std::vector<Entry> v;
  // Fat triples.
  v.push_back({"fat.surplus", "three width-1 losses against nine width-2 gains",
               [](const Ctx& c, int) -> Side { return {3 * (c.ex - 1) / c.b, 9 / c.a}; }, from(3, E_S)});
  v.push_back({"fat.surplus.cleared", "same, denominators cleared",
               [](const Ctx& c, int) -> Side { return {2 * (c.ex - 1), 3 * Rational(c.s) - 3}; }, from(3, E_S)});
  v.push_back({"fat.surplus.relaxed", "same, with n-3s-3 <= s/2",
               [](const Ctx& c, int) -> Side { return {Rational(c.s), 3 * Rational(c.s) - 3}; }, from(3, E_S)});
  v.push_back({"fat.excess_half", "n-3s-3 <= s/2",
               [](const Ctx& c, int) -> Side { return {c.ex - 1, Rational(c.s, 2)}; }, from(3, E_H)});
  v.push_back({"excess.bound", "n-3s-2 <= (s-2)/2 + 2",
               [](const Ctx& c, int) -> Side { return {c.ex, c.a / 2 + 2}; }, from(3, E_H)});

  // Not fat, (1,a_k) absent.
  v.push_back({"lowa.loss_identity", "loss bound expanded",
               [](const Ctx& c, int) -> Side {
                 return {2 * (c.a / 2 + 2) / c.a + 6 * (Rational(c.s - 1, 2) + Rational(1, 2)) / c.b,
                         1 + 10 / c.a + 6 / c.ab};
               },
               from(3, E_Q)});
  auto lowa_g2_le2 = [](const Ctx& c, int) -> std::optional<Expectation> {
    if (c.s == 3) return E_U;
    return c.s == 4 ? E_Q : E_S;
  };
  v.push_back({"lowa.g2_le2", "loss against basic gain 4 + 6/(s-2), g2 <= 2",
               [](const Ctx& c, int) -> Side { return {1 + 10 / c.a + 6 / c.ab, 4 + 6 / c.a}; }, lowa_g2_le2});
  v.push_back({"lowa.g2_le2.collected", "4/(s-2) + 6/((s-1)(s-2)) <= 3",
               [](const Ctx& c, int) -> Side { return {4 / c.a + 6 / c.ab, Rational(3)}; }, lowa_g2_le2, {}, true});
  v.push_back({"lowa.g2_le2.direct", "direct check at s=3, n=13",
               [](const Ctx& c, int) -> Side { return {2 * c.ex / c.a + 6 * (c.ex - 1) / c.b, 4 + 6 / c.a}; },
               at(3, PivotMode::N0, E_H)});
  auto s4_up = [](const Ctx& c, int) -> std::optional<Expectation> { return c.s >= 4 ? E_H : E_U; };
  v.push_back({"lowa.g2_3", "g2 = 3 with five extra missing sets",
               [](const Ctx& c, int) -> Side { return {Rational(3, 2) + 12 / c.a + 6 / c.ab, 4 + 11 / c.a}; }, s4_up});
  v.push_back({"lowa.g2_3.collected", "1/(s-2) + 6/((s-1)(s-2)) <= 5/2",
               [](const Ctx& c, int) -> Side { return {1 / c.a + 6 / c.ab, Rational(5, 2)}; }, s4_up, {}, true});
  v.push_back({"lowa.g2_4", "g2 = 4 with four more missing sets",
               [](const Ctx& c, int) -> Side { return {2 + 14 / c.a + 6 / c.ab, 5 + 14 / c.a}; }, from(3, E_H)});
  v.push_back({"lowa.g2_4.collected", "6/((s-1)(s-2)) <= 3",
               [](const Ctx& c, int) -> Side { return {6 / c.ab, Rational(3)}; }, from(3, E_H), {}, true});
  v.push_back({"lowa.g2_3.direct", "direct check at s=3, n=13, g2 = 3",
               [](const Ctx&, int) -> Side { return {3 * Rational(2) + 6 * Rational(1, 2), Rational(4 + 11)}; },
               at(3, PivotMode::N0, E_S)});

  // Sufficiently fat.
  v.push_back({"sfat.q3", "|Q| = 3: 9 floor(s/2)/C(s-1,2) <= 4 + 6/(s-2)",
               [](const Ctx& c, int) -> Side { return {9 * c.fl0 / c.b, 4 + 6 / c.a}; }, from(3, E_H)});
  v.push_back({"sfat.q3.relaxed", "3/(s-2) + 9/((s-1)(s-2)) <= 4",
               [](const Ctx& c, int) -> Side { return {3 / c.a + 9 / c.ab, Rational(4)}; },
               [](const Ctx& c, int) -> std::optional<Expectation> { return c.s >= 4 ? E_S : E_U; }, {}, true});
  v.push_back({"sfat.q2.low.identity", "|Q| = 2, g2 <= 2 loss expanded",
               [](const Ctx& c, int) -> Side {
                 return {2 * (c.a / 2 + 2) / c.a + 9 / c.a + 9 / c.ab, 1 + 13 / c.a + 9 / c.ab};
               },
               from(3, E_Q)});
  v.push_back({"sfat.q2.low.relaxed", "7/(s-2) + 9/((s-1)(s-2)) <= 3",
               [](const Ctx& c, int) -> Side { return {7 / c.a + 9 / c.ab, Rational(3)}; },
               [](const Ctx& c, int) -> std::optional<Expectation> { return c.s >= 6 ? E_S : E_U; }, {}, true});
  v.push_back({"sfat.q2.low.floor", "|Q| = 2, g2 <= 2 with exact floors",
               [](const Ctx& c, int) -> Side { return {2 * c.fl1 / c.a + 9 * c.fl0 / c.b, 4 + 6 / c.a}; },
               [](const Ctx& c, int) -> std::optional<Expectation> {
                 if (c.s == 5) return E_S;
                 return c.s >= 6 ? E_H : E_U;
               }});
  v.push_back({"sfat.q2.low.below_pivot", "|Q| = 2, g2 <= 2 at n = n0 - 1",
               [](const Ctx& c, int) -> Side { return {2 * c.ex / c.a + 9 * (c.ex - 1) / c.b, 4 + 6 / c.a}; },
               [](const Ctx& c, int) -> std::optional<Expectation> {
                 if (c.mode != PivotMode::N0Minus1 || c.s > 4) return std::nullopt;
                 return E_S;
               }});
  v.push_back({"sfat.q2.low.s4_allowance", "s=4, n=17 with the f(1) - f(3) = 15/2 allowance",
               [](const Ctx& c, int) -> Side {
                 return {2 * c.fl1 / c.a + 9 * c.fl0 / c.b, 4 + 6 / c.a + Rational(15, 2)};
               },
               at(4, PivotMode::N0, E_S)});
  v.push_back({"sfat.q2.low.s3_pivot", "s=3, n=13 as displayed: 2*3 + 9 against 4 + 6",
               [](const Ctx&, int) -> Side { return {Rational(2 * 3 + 9), Rational(4 + 6)}; },
               at(3, PivotMode::N0, E_F)});
  v.push_back({"sfat.q2.low.s3_pivot.exact", "s=3, n=13 with exact floors",
               [](const Ctx& c, int) -> Side { return {2 * c.fl1 / c.a + 9 * c.fl0 / c.b, 4 + 6 / c.a}; },
               at(3, PivotMode::N0, E_F)});
  auto first_sides = [](const Ctx& c, int) -> Side {
    return {3 * (Rational(c.s + 2, 2)) / c.a + 9 * Rational(c.s, 2) / c.b, 4 + 11 / c.a};
  };
  auto s4_fails = [](const Ctx& c, int) -> std::optional<Expectation> {
    if (c.s < 4) return std::nullopt;
    return c.s == 4 ? E_F : E_S;
  };
  v.push_back({"sfat.q2.high.first", "|Q| = 2, g2 = 3", first_sides, s4_fails});
  v.push_back({"sfat.q2.high.first.s4_gap", "at s=4 the left side exceeds the right by exactly 1",
               [=](const Ctx& c, int g) -> Side {
                 auto [l, r] = first_sides(c, g);
                 return {l, r + 1};
               },
               at(4, PivotMode::N0, E_Q)});
  v.push_back({"sfat.q2.high.second", "|Q| = 2, g2 = 4",
               [](const Ctx& c, int) -> Side {
                 return {4 * Rational(c.s + 2, 2) / c.a + 9 * Rational(c.s, 2) / c.b, 5 + 14 / c.a};
               },
               [](const Ctx& c, int) -> std::optional<Expectation> {
                 if (c.s < 4) return std::nullopt;
                 return c.s == 4 ? E_Q : E_S;
               }});
  v.push_back({"sfat.q2.high.first.collected", "4/(s-2) + 9/((s-1)(s-2)) <= 5/2",
               [](const Ctx& c, int) -> Side { return {4 / c.a + 9 / c.ab, Rational(5, 2)}; }, s4_fails, {}, true});
  v.push_back({"sfat.q2.high.second.collected", "3/(s-2) + 9/((s-1)(s-2)) <= 3",
               [](const Ctx& c, int) -> Side { return {3 / c.a + 9 / c.ab, Rational(3)}; },
               [](const Ctx& c, int) -> std::optional<Expectation> {
                 if (c.s < 4) return std::nullopt;
                 return c.s == 4 ? E_Q : E_S;
               },
               {}, true});
  v.push_back({"sfat.q2.high.s4_allowance", "s=4, n=17, g2 = 3 with the 15/2 allowance",
               [=](const Ctx& c, int g) -> Side {
                 auto [l, r] = first_sides(c, g);
                 return {l, r + Rational(15, 2)};
               },
               at(4, PivotMode::N0, E_S)});
  v.push_back({"sfat.q2.high.below_pivot", "s=4, n=16, g2 = 3",
               [](const Ctx& c, int) -> Side { return {3 * c.ex / c.a + 9 * (c.ex - 1) / c.b, 4 + 11 / c.a}; },
               at(4, PivotMode::N0Minus1, E_S)});
  auto q1 = [](int g2, int gain) {
    return [=](const Ctx& c, int) -> Side { return {g2 * c.fl1 / c.a + 9 * c.fl0 / c.b, 6 + gain / c.a}; };
  };
  auto s4_fails_s5_holds = [](const Ctx& c, int) -> std::optional<Expectation> {
    if (c.s < 4) return std::nullopt;
    return c.s == 4 ? E_F : E_H;
  };
  v.push_back({"sfat.q1.basic", "|Q| = 1: 5 floor((s+2)/2)/(s-2) + ... <= 6 + 10/(s-2)", q1(5, 10), s4_fails_s5_holds});
  v.push_back({"sfat.q1.s4_left", "s=4 left side is 27/2",
               [=](const Ctx& c, int g) -> Side { return {q1(5, 10)(c, g).first, Rational(27, 2)}; },
               at(4, PivotMode::N0, E_Q)});
  v.push_back({"sfat.q1.s4_right_as_printed", "s=4 right side, exact value against the printed 10",
               [=](const Ctx& c, int g) -> Side { return {q1(5, 10)(c, g).second, Rational(10)}; },
               at(4, PivotMode::N0, E_U)});
  v.push_back({"sfat.q1.s4_allowance", "s=4 gap below the 15/2 allowance",
               [=](const Ctx& c, int g) -> Side {
                 auto [l, r] = q1(5, 10)(c, g);
                 return {l, r + Rational(15, 2)};
               },
               at(4, PivotMode::N0, E_S)});
  v.push_back({"sfat.q1.below_pivot_g2_8", "s=4, n=16 in the stronger form for g2 = 8",
               [](const Ctx& c, int) -> Side { return {8 * c.ex / c.a + 9 * (c.ex - 1) / c.b, 6 + 10 / c.a}; },
               at(4, PivotMode::N0Minus1, E_H)});
  v.push_back({"sfat.q1.g2_6", "|Q| = 1, g2 = 6", q1(6, 15), s4_fails_s5_holds});
  v.push_back({"sfat.q1.g2_6.s4_allowance", "s=4, g2 = 6 with the 15/2 allowance",
               [=](const Ctx& c, int g) -> Side {
                 auto [l, r] = q1(6, 15)(c, g);
                 return {l, r + Rational(15, 2)};
               },
               at(4, PivotMode::N0, E_S)});
  v.push_back({"sfat.q1.gain_identity", "6 + 10/(s-2) + 2*5/(s-2) + 4/(s-2) = 6 + 24/(s-2)",
               [](const Ctx& c, int) -> Side { return {6 + 10 / c.a + 10 / c.a + 4 / c.a, 6 + 24 / c.a}; },
               from(3, E_Q)});
  v.push_back({"sfat.q1.g2_8", "|Q| = 1, g2 = 8 against 6 + 24/(s-2)", q1(8, 24),
               [](const Ctx& c, int) -> std::optional<Expectation> {
                 if (c.s < 4) return std::nullopt;
                 return c.s == 4 ? E_Q : E_H;
               }});

  // Not sufficiently fat.
  auto nsf = [](const Ctx& c, int g2) -> Side {
    return {g2 * c.fl1 / c.a + 9 * c.fl0 / c.b, 7 + 12 / c.a};
  };
  v.push_back({"nsf.basic", "loss against the initial gain 7 + 12/(s-2)", nsf,
               [](const Ctx& c, int g2) -> std::optional<Expectation> {
                 if (c.s == 5 && g2 <= 8) return E_H;
                 return E_U;
               },
               range(0, 9)});
  v.push_back({"nsf.s5_g2_9", "s=5, g2 = 9 with the extra 5/(s-2)",
               [=](const Ctx& c, int g2) -> Side {
                 auto [l, r] = nsf(c, g2);
                 return {l, r + 5 / c.a};
               },
               [](const Ctx& c, int g2) -> std::optional<Expectation> {
                 if (c.s != 5 || g2 != 9) return std::nullopt;
                 return E_H;
               },
               range(9, 9)});
  auto relaxed_left = [](const Ctx& c, int g2) {
    return Rational(g2, 2) + 2 * g2 / c.a + 9 / c.a + 9 / c.ab;
  };
  v.push_back({"nsf.relaxation", "floors bounded by (s-2)/2 + 2 and (s-1)/2 + 1/2",
               [=](const Ctx& c, int g2) -> Side { return {nsf(c, g2).first, relaxed_left(c, g2)}; },
               from(6, E_H), range(0, 9)});
  v.push_back({"nsf.rewrite_identity", "relaxed margin equals the rewritten margin",
               [=](const Ctx& c, int g2) -> Side {
                 Rational m1 = 7 + 12 / c.a - relaxed_left(c, g2);
                 Rational m2 = 7 - Rational(g2, 2) - ((2 * g2 - 3) / c.a + 9 / c.ab);
                 return {m1, m2};
               },
               from(6, E_Q), range(0, 9)});
  auto rewritten = [](int shift) {
    return [=](const Ctx& c, int g2) -> Side {
      return {(2 * g2 - shift) / c.a + 9 / c.ab, 7 - Rational(g2, 2)};
    };
  };
  v.push_back({"nsf.rewritten", "(2 g2 - 3)/(s-2) + 9/((s-1)(s-2)) <= 7 - g2/2", rewritten(3), from(6, E_H),
               range(0, 6), true});
  v.push_back({"nsf.adjusted", "(2 g2 - 8)/(s-2) + ... for g2 = 7, 8", rewritten(8), from(6, E_H), range(7, 8), true});
  v.push_back({"nsf.adjusted_twice", "(2 g2 - 13)/(s-2) + ... for g2 = 9", rewritten(13), from(6, E_H), range(9, 9),
               true});
  v.push_back({"nsf.s4_below_pivot", "s=4, n=16 as displayed: g2 + 9/6 < 13",
               [](const Ctx&, int g2) -> Side { return {g2 + Rational(9, 6), Rational(7 + 12 / 2)}; },
               at(4, PivotMode::N0Minus1, E_S), range(0, 9)});
  v.push_back({"nsf.s4_below_pivot.exact", "s=4, n=16 with n-3s-2 and n-3s-3 in place of the floors",
               [](const Ctx& c, int g2) -> Side { return {g2 * c.ex / c.a + 9 * (c.ex - 1) / c.b, 7 + 12 / c.a}; },
               at(4, PivotMode::N0Minus1, E_S), range(0, 9)});
  v.push_back({"nsf.s4_pivot_excess", "s=4, n=17: n-3s-2 = (s+2)/2",
               [](const Ctx& c, int) -> Side { return {c.ex, Rational(c.s + 2, 2)}; }, at(4, PivotMode::N0, E_Q)});
  v.push_back({"nsf.s4_pivot", "s=4, n=17: 3 g2/2 + 6 < 41/2",
               [](const Ctx&, int g2) -> Side { return {Rational(3 * g2, 2) + 6, Rational(41, 2)}; },
               at(4, PivotMode::N0, E_S), range(0, 9)});
  v.push_back({"induction.pivot_gap", "n0(s,3) - 1 >= n0(s-1,3) + 2",
               [](const Ctx& c, int) -> Side {
                 return {Rational(pivotal(c.s - 1, 3) + 2), Rational(pivotal(c.s, 3) - 1)};
               },
               from(3, E_H)});
  v.push_back({"induction.a1_15", "C(15,3) - C(12,3) = 235",
               [](const Ctx&, int) -> Side { return {Rational(binomial(15, 3) - binomial(12, 3)), Rational(235)}; },
               at(4, PivotMode::N0, E_Q)});
  v.push_back({"induction.a1_15.split", "235 = C(11,3) + 70",
               [](const Ctx&, int) -> Side { return {Rational(235), Rational(binomial(11, 3) + 70)}; },
               at(4, PivotMode::N0, E_Q)});
  return v;
}

}  // namespace

std::vector<InequalityRecord> audit_catalog(int s_min, int s_max, PivotMode mode) {
  if (s_min < 3 || s_max > 10000 || s_min > s_max) throw Error("parameters out of range");
  static const std::vector<Entry> table = entries();
  std::vector<InequalityRecord> out;
  for (int s = s_min; s <= s_max; ++s) {
    int n = pivotal(s, 3) - (mode == PivotMode::N0Minus1 ? 1 : 0);
    Ctx c{s,
          n,
          mode,
          Rational(s - 2),
          Rational(binomial(s - 1, 2)),
          Rational((s - 1) * static_cast<std::int64_t>(s - 2)),
          Rational((s + 2) / 2),
          Rational(s / 2),
          Rational(n - 3 * s - 2)};
    for (const Entry& e : table) {
      std::vector<int> gs = e.g2_values.empty() ? std::vector<int>{-1} : e.g2_values;
      for (int g : gs) {
        auto expected = e.expect(c, g);
        if (!expected) continue;
        auto [lhs, rhs] = e.sides(c, g);
        out.push_back(make_record(e.id, e.anchor, s, n, 3, g < 0 ? std::nullopt : std::optional<int>(g), lhs, rhs,
                                  *expected, e.monotone));
      }
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const InequalityRecord& x, const InequalityRecord& y) {
    return std::tie(x.id, x.s, x.g2) < std::tie(y.id, y.s, y.g2);
  });
  return out;
}

std::vector<MonotonicityViolation> check_monotonicity(const std::vector<InequalityRecord>& records) {
  std::map<std::tuple<std::string, int, int>, const InequalityRecord*> index;
  for (const auto& r : records) {
    if (r.monotone) index[{r.id, r.g2.value_or(-1), r.s}] = &r;
  }
  std::vector<MonotonicityViolation> out;
  for (const auto& [key, rec] : index) {
    auto next = index.find({std::get<0>(key), std::get<1>(key), std::get<2>(key) + 1});
    if (next == index.end()) continue;
    // Only compare inside the claimed region.
    if (rec->expected == Expectation::Unclaimed || next->second->expected == Expectation::Unclaimed) continue;
    if (next->second->margin < rec->margin) {
      out.push_back({rec->id, rec->g2, rec->s, rec->margin, next->second->margin});
    }
  }
  return out;
}

PivotalBoundsReport check_pivotal_bounds(int s_max, int k) {
  if (k < 2 || k > 5 || s_max < 1) throw Error("parameters out of range");
  PivotalBoundsReport rep;
  for (int s = 1; s <= s_max; ++s) {
    int n0 = pivotal(s, k);
    if (n0 >= (k + 1) * s) rep.strict_failures.push_back(s);
    if (2 * n0 > (2 * k + 1) * s + 2 * k) rep.bound_failures.push_back(s);
  }
  rep.holds = rep.strict_failures.empty() && rep.bound_failures.empty();
  return rep;
}

}  // namespace matchlab
