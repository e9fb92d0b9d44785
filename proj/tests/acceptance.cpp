// Acceptance run: one PASS/FAIL line per criterion. Expected values are
// transcribed from the printed formulas; everything else is checked against
// an independent computation (closed form, brute force or identity).

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "whittaker/affine_whittaker.hpp"
#include "whittaker/errors.hpp"
#include "whittaker/finite_whittaker.hpp"
#include "whittaker/path_model.hpp"
#include "whittaker/q_whittaker.hpp"
#include "whittaker/ratfunc.hpp"
#include "whittaker/verify.hpp"

using namespace whittaker;

namespace {

struct Count {
  long total = 0;
  long passed = 0;
  long skipped = 0;
  std::vector<std::string> failures;

  void add(bool ok, const std::string& what) {
    ++total;
    if (ok)
      ++passed;
    else
      failures.push_back(what);
  }
  // Singular specializations (a vanishing vertex or edge weight) have no value to compare.
  void guarded(const std::function<bool()>& body, const std::string& what) {
    try {
      add(body(), what);
    } catch (const SingularWeight&) {
      ++total;
      ++skipped;
    }
  }
  bool ok() const { return failures.empty(); }
  std::string summary() const {
    std::string s = std::to_string(passed) + "/" + std::to_string(total);
    if (skipped) s += ", " + std::to_string(skipped) + " skipped at poles";
    if (!failures.empty()) {
      s += "; failing:";
      for (std::size_t k = 0; k < failures.size() && k < 6; ++k) s += " " + failures[k];
      if (failures.size() > 6) s += " ...";
    }
    return s;
  }
};

Path steps(std::initializer_list<int> one_based) {
  Path p;
  for (int i : one_based) p.push_back(i - 1);
  return p;
}

// Paths are listed in the order the steps are taken: f2 f1 is (alpha_1, alpha_2).
struct CoefficientFixture {
  const char* word;
  Path path;
  const char* expected;
};

void rank2_coefficients(Count& c, const char* type, const std::vector<CoefficientFixture>& fx) {
  const CartanData cd = build_cartan(LieType::parse(type));
  const WeightParam w = WeightParam::symbolic(2);
  for (const auto& f : fx) c.add(path_weight(cd, w, f.path) == parse_ratfunc(f.expected), std::string(type) + ":" + f.word);
}

Count criterion1() {
  Count c;
  {
    const CartanData cd = build_cartan(LieType::parse("A2"));
    const WeightParam w = WeightParam::symbolic(2);
    const std::vector<std::pair<RootVec, const char*>> weights{
        {{1, 0}, "l1"}, {{2, 0}, "2*(l1-1)"}, {{0, 1}, "l2"}, {{1, 1}, "l1+l2+1"}, {{2, 1}, "2*l1+l2"}};
    for (const auto& [b, e] : weights)
      c.add(RatFunc(vertex_weight(cd, w, b)) == parse_ratfunc(e), "A2:v" + format_coords(b));
  }
  rank2_coefficients(c, "A2",
                     {{"f1", steps({1}), "1/l1"},
                      {"f2", steps({2}), "1/l2"},
                      {"f2f1", steps({1, 2}), "1/(l1*(l1+l2+1))"},
                      {"f1f2", steps({2, 1}), "1/(l2*(l1+l2+1))"},
                      {"f1f2f1", steps({1, 2, 1}), "1/(l1*(l1+l2+1)*(2*l1+l2))"},
                      {"f1f1f2", steps({2, 1, 1}), "1/(l2*(l1+l2+1)*(2*l1+l2))"},
                      {"f2f1f1", steps({1, 1, 2}), "1/(l1*2*(l1-1)*(2*l1+l2))"}});
  // Coefficients of (2 mu_1)^n mu_2^k.
  rank2_coefficients(c, "B2",
                     {{"f1", steps({1}), "1/(2*l1)"},
                      {"f2", steps({2}), "1/l2"},
                      {"f2f1", steps({1, 2}), "1/((2*l1)*(2*l1+l2+2))"},
                      {"f1f2", steps({2, 1}), "1/(l2*(2*l1+l2+2))"},
                      {"f1f2f1", steps({1, 2, 1}), "1/((2*l1)*(2*l1+l2+2)*(4*l1+l2))"},
                      {"f1f1f2", steps({2, 1, 1}), "1/(l2*(2*l1+l2+2)*(4*l1+l2))"},
                      {"f2f1f1", steps({1, 1, 2}), "1/(2^2*l1*2*(l1-1)*(4*l1+l2))"}});
  // Coefficients of mu_1^n (3 mu_2)^k.
  rank2_coefficients(c, "G2",
                     {{"f1", steps({1}), "1/l1"},
                      {"f2", steps({2}), "1/(3*l2)"},
                      {"f2f1", steps({1, 2}), "1/(l1*(l1+3*l2+3))"},
                      {"f1f2", steps({2, 1}), "1/((3*l2)*(l1+3*l2+3))"},
                      {"f1f2f1", steps({1, 2, 1}), "1/(l1*(l1+3*l2+3)*(2*l1+3*l2+4))"},
                      {"f1f1f2", steps({2, 1, 1}), "1/((3*l2)*(l1+3*l2+3)*(2*l1+3*l2+4))"},
                      {"f2f1f1", steps({1, 1, 2}), "1/(l1*2*(l1-1)*(2*l1+3*l2+4))"}});
  return c;
}

Count criterion2() {
  Count c;
  const CartanData cd = build_cartan(LieType::parse("A2"));
  const WeightParam w = WeightParam::symbolic(2);
  PartitionTable t(cd, w, false, 10);
  for (int b1 = 0; b1 <= 5; ++b1)
    for (int b2 = 0; b2 <= 5; ++b2) c.add(t({b1, b2}) == bump_closed_form(b1, b2, w), format_coords({b1, b2}));
  return c;
}

Count criterion3() {
  Count c;
  for (const char* type : {"A1", "A2", "A3", "B2", "C2", "G2", "A1~", "A2~"}) {
    const CartanData cd = build_cartan(LieType::parse(type));
    const bool affine = cd.type.affine;
    const int size = affine ? cd.rank + 1 : cd.rank;
    const int n = affine ? 5 : 6;
    const WeightParam w = WeightParam::symbolic(cd.rank);
    PartitionTable t(cd, w, affine, n);
    for (const auto& b : lattice_points_upto(size, n))
      c.add(t(b) == partition_bruteforce(cd, w, b, affine), std::string(type) + format_coords(b));
  }
  return c;
}

Count criterion4() {
  Count c;
  for (const char* type : {"A1", "A2", "A3", "B2", "C2", "G2"}) {
    const CartanData cd = build_cartan(LieType::parse(type));
    const WeightParam w = WeightParam::symbolic(cd.rank);
    for (const auto& b : lattice_points_upto(cd.rank, 6))
      c.add(toda_eigen_identity(cd, w, b), std::string(type) + format_coords(b));
  }
  for (const char* type : {"A1~", "A2~", "B2~", "G2~"}) {
    const CartanData cd = build_cartan(LieType::parse(type));
    const WeightParam w = WeightParam::symbolic(cd.rank);
    for (const auto& b : lattice_points_upto(cd.rank + 1, 5))
      c.add(deformed_toda_identity(cd, w, b), std::string(type) + format_coords(b));
  }
  const CartanData a2 = build_cartan(LieType::parse("A2"));
  c.add(RatFunc(toda_eigenvalue(a2, WeightParam::symbolic(2))) ==
            parse_ratfunc("(l1^2+l1*l2+l2^2)/3+l1+l2+1"),
        "A2 eigenvalue");
  return c;
}

struct Critical {
  Count fixtures;
  Count residual;
  long consistent_nonzero = 0;
};

Critical criterion5() {
  Critical r;
  const CartanData cd = build_cartan(LieType::parse("A1~"));
  WeightParam wl = WeightParam::symbolic(1);
  wl.eps = MultiPoly(0);
  const CriticalExpansion e = critical_solve(cd, wl, 6, 2);
  const std::vector<std::pair<RootVec, const char*>> printed{
      {{1, 0}, "-1/(l1+2)"},
      {{0, 1}, "1/l1"},
      {{2, 0}, "1/(2*(l1+1)*(l1+2))"},
      {{1, 1}, "0"},
      {{0, 2}, "1/(2*(l1-1)*(l1-2))"},
      {{3, 0}, "-1/(6*(l1+1)*(l1+2)*(l1+3))"},
      {{2, 1}, "-(12+6*l1+l1^2)/(2*l1*(l1+2)^3*(l1+3))"},
      {{1, 2}, "-(4-2*l1+l1^2)/(2*(l1-1)*l1^3*(l1+2))"},
      {{0, 3}, "1/(6*(l1-1)*(l1-2)*(l1-3))"}};
  for (const auto& [b, s] : printed) r.fixtures.add(e.coefficient(0, b) == parse_ratfunc(s), "w0" + format_coords(b));
  const std::vector<std::pair<int, const char*>> a{
      {1, "2/(l1*(l1+2))"},
      {2, "(12+10*l1+5*l1^2)/(l1^3*(l1-1)*(l1+2)^3*(l1+3))"},
      {3, "16*(96+152*l1+112*l1^2+36*l1^3+9*l1^4)/(3*l1^5*(l1-1)*(l1-2)*(l1+2)^5*(l1+3)*(l1+4))"}};
  for (const auto& [m, s] : a) r.fixtures.add(e.a.at(m) == parse_ratfunc(s), "a" + std::to_string(m));

  for (int j = 0; j <= 2; ++j)
    for (const auto& b : lattice_points_upto(2, 6))
      r.residual.add(critical_residual(cd, wl, e, j, b).is_zero(), "j=" + std::to_string(j) + format_coords(b));

  const CriticalExpansion ec = critical_solve(cd, wl, 6, 2, CriticalGauge::Consistent);
  for (int j = 0; j <= 2; ++j)
    for (const auto& b : lattice_points_upto(2, 6))
      if (!critical_residual(cd, wl, ec, j, b).is_zero()) ++r.consistent_nonzero;
  return r;
}

struct Quantum {
  Count sl2, bump, bar, cancellation, eigen;
  Count cancellation_inverse;  // ratio == q^{(j-i) C_{j,i}}, for information
  bool ok() const { return sl2.ok() && bump.ok() && bar.ok() && cancellation.ok() && eigen.ok(); }
};

Quantum criterion6() {
  Quantum q;
  const std::vector<std::vector<Rational>> lambdas{{Rational(7)}, {Rational(3), Rational(4)}, {ratio(5, 3), ratio(11, 2)}};
  for (const auto& l : lambdas) {
    const QContext ctx = QContext::make(l);
    QPartitionTable t(ctx, 8);
    std::string tag = "l=(";
    for (std::size_t k = 0; k < l.size(); ++k) tag += (k ? "," : "") + l[k].get_str();
    tag += ")";
    if (ctx.r == 1)
      for (int b = 0; b <= 6; ++b)
        q.sl2.guarded([&] { return t({b}) == q_sl2_closed_form(ctx, b); }, tag + format_coords({b}));
    if (ctx.r == 2)
      for (int b1 = 0; b1 <= 4; ++b1)
        for (int b2 = 0; b2 <= 4; ++b2)
          q.bump.guarded([&] { return t({b1, b2}) == q_bump_sl3(ctx, b1, b2); }, tag + format_coords({b1, b2}));
    for (const auto& b : lattice_points_upto(ctx.r, 5))
      q.bar.guarded([&] { return bar_invariance_check(t, b); }, tag + format_coords(b));
    for (const auto& b : lattice_points_upto(ctx.r, 3)) {
      if (height(b) == 0) continue;  // v^{(i)}(0) = 0
      for (int i = 1; i <= ctx.r; ++i)
        for (int j = 1; j <= ctx.r; ++j) {
          const std::string where = tag + format_coords(b) + "i" + std::to_string(i) + "j" + std::to_string(j);
          q.cancellation.guarded([&] { return cancellation_check(ctx, b, i, j); }, where);
          q.cancellation_inverse.guarded(
              [&] { return cancellation_ratio(ctx, b, i, j) == q_power((j - i) * ctx.cartan.cartan[j - 1][i - 1]); },
              where);
        }
    }
    for (const auto& b : lattice_points_upto(ctx.r, 4))
      for (const auto& p : enumerate_paths(b))
        for (int i = 1; i <= ctx.r; ++i)
          q.eigen.guarded([&] { return q_eigencondition_check(ctx, p, i); }, tag + format_coords(b));
  }
  return q;
}

Count criterion7() {
  Count c;
  for (const auto& l : std::vector<std::vector<Rational>>{{Rational(7)}, {Rational(3), Rational(4)}, {ratio(5, 3), ratio(11, 2)}}) {
    const QContext ctx = QContext::make(l);
    const CartanData cd = build_cartan(LieType{Family::A, ctx.r, false});
    PartitionTable classical(cd, WeightParam::special(l), false, 4);
    QPartitionTable t(ctx, 4);
    for (const auto& b : lattice_points_upto(ctx.r, 4))
      c.guarded([&] { return classical_limit(t(b)) == constant_value(classical(b)); }, format_coords(b));
  }
  return c;
}

Count criterion8() {
  Count c;
  const CartanData cd = build_cartan(LieType::parse("A2"));
  PartitionTable t(cd, WeightParam::symbolic(2), false, 8);
  for (int b1 = 0; b1 <= 4; ++b1)
    for (int b2 = 0; b2 <= 4; ++b2) {
      if (b1 + b2 == 0) continue;
      const A2RecursionCheck r = a2_higher_recursion_check(t, b1, b2);
      c.add(r.first, "first" + format_coords({b1, b2}));
      c.add(r.second, "second" + format_coords({b1, b2}));
      c.add(r.combined, "combined" + format_coords({b1, b2}));
    }
  c.add(a2_sum_identity(), "sum");
  return c;
}

Count criterion9() {
  Count c;
  for (const auto& r : run_property_suites(20240601u, 1000)) {
    c.total += r.instances;
    c.passed += r.passed;
    c.skipped += r.skipped;
    if (!r.ok()) c.failures.push_back(r.name + " at " + r.first_failure);
  }
  return c;
}

template <class F>
auto timed(double& seconds, F f) {
  const auto t0 = std::chrono::steady_clock::now();
  auto r = f();
  seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

int failures = 0;

void line(int id, const char* title, bool ok, const std::string& detail, double seconds) {
  if (!ok) ++failures;
  std::printf("[%s] %d %s: %s (%.2f s)\n", ok ? "PASS" : "FAIL", id, title, detail.c_str(), seconds);
  std::fflush(stdout);
}

}  // namespace

int main() {
  double s = 0;
  {
    const Count c = timed(s, criterion1);
    line(1, "rank-2 vertex weights and Whittaker coefficients", c.ok(), c.summary(), s);
  }
  {
    const Count c = timed(s, criterion2);
    line(2, "A2 factorized formula vs DP, beta <= (5,5)", c.ok(), c.summary(), s);
  }
  {
    const Count c = timed(s, criterion3);
    line(3, "DP vs brute-force path sums", c.ok(), c.summary(), s);
  }
  {
    const Count c = timed(s, criterion4);
    line(4, "Toda and deformed Toda identities, A2 eigenvalue", c.ok(), c.summary(), s);
  }
  {
    const Critical r = timed(s, criterion5);
    const std::string detail = "printed values " + r.fixtures.summary() + " | residual j<=2 " + r.residual.summary() +
                               " | consistent-gauge nonzero residuals: " + std::to_string(r.consistent_nonzero);
    line(5, "critical A1~ expansion", r.fixtures.ok() && r.residual.ok(), detail, s);
  }
  {
    const Quantum q = timed(s, criterion6);
    const std::string detail = "sl2 " + q.sl2.summary() + " | q-Bump " + q.bump.summary() + " | bar " + q.bar.summary() +
                               " | cancellation " + q.cancellation.summary() + " | eigencondition " + q.eigen.summary() +
                               " | cancellation with exponent (j-i)C_ji: " + q.cancellation_inverse.summary();
    line(6, "quantum suite", q.ok(), detail, s);
  }
  {
    const Count c = timed(s, criterion7);
    line(7, "q -> 1 limit equals classical Z", c.ok(), c.summary(), s);
  }
  {
    const Count c = timed(s, criterion8);
    line(8, "A2 higher recursions and their sum", c.ok(), c.summary(), s);
  }
  {
    const Count c = timed(s, criterion9);
    line(9, "randomized algebra properties", c.ok(), c.summary(), s);
  }
  std::printf("%d of 9 criteria failing\n", failures);
  return failures == 0 ? 0 : 1;
}
