#include "whittaker/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>

#include "whittaker/affine_whittaker.hpp"
#include "whittaker/errors.hpp"
#include "whittaker/finite_whittaker.hpp"
#include "whittaker/path_model.hpp"
#include "whittaker/q_whittaker.hpp"
#include "whittaker/random.hpp"

namespace whittaker {

namespace {

class Tally {
 public:
  explicit Tally(SuiteResult& r) : r_(r) {}

  // Runs one instance; singular specializations are counted as skipped.
  void check(const std::function<bool()>& body, const std::function<std::string()>& where) {
    ++r_.instances;
    try {
      if (body()) {
        ++r_.passed;
      } else if (r_.first_failure.empty()) {
        r_.first_failure = where();
      }
    } catch (const SingularWeight&) {
      ++r_.skipped;
    } catch (const CriticalSingularity&) {
      ++r_.skipped;
    } catch (const DivisionByZero&) {
      ++r_.skipped;
    }
  }

 private:
  SuiteResult& r_;
};

std::string at(const RootVec& beta) { return "beta=" + format_coords(beta); }
std::string at(const RootVec& beta, int i) { return at(beta) + " i=" + std::to_string(i); }

std::string path_text(const Path& p) {
  std::string s = "path=(";
  for (std::size_t k = 0; k < p.size(); ++k) s += (k ? "," : "") + std::to_string(p[k] + 1);
  return s + ")";
}

std::vector<RootVec> points(int size, int degree, bool skip_zero) {
  std::vector<RootVec> out;
  for (const auto& b : lattice_points_upto(size, degree))
    if (!skip_zero || height(b) > 0) out.push_back(b);
  return out;
}

std::vector<Path> paths_upto(int size, int degree) {
  std::vector<Path> out;
  for (const auto& b : lattice_points_upto(size, degree))
    for (auto& p : enumerate_paths(b, std::max(degree, 1))) out.push_back(std::move(p));
  return out;
}

WeightParam weight_for(const CartanData& cd, const VerifyOptions& opt) {
  if (opt.lambda.empty()) return WeightParam::symbolic(cd.rank);
  if (static_cast<int>(opt.lambda.size()) != cd.rank)
    throw ConfigError("--lambda needs " + std::to_string(cd.rank) + " entries");
  return WeightParam::special(opt.lambda);
}

bool is_a2(const LieType& t) { return t.family == Family::A && t.rank == 2 && !t.affine; }

void classical_suite(const TypeSpec& spec, const VerifyOptions& opt, const std::string& name, Tally& t) {
  const CartanData cd = build_cartan(spec.type);
  const WeightParam w = weight_for(cd, opt);
  const bool affine = spec.type.affine;
  const int size = affine ? cd.rank + 1 : cd.rank;
  const int n = opt.degree;
  PartitionTable table(cd, w, affine, std::max(2 * n, 1));

  if (name == "dp") {
    for (const auto& b : points(size, n, true))
      t.check([&] { return table(b) == partition_bruteforce(cd, w, b, affine, std::max(n, 1)); },
              [&] { return at(b); });
  } else if (name == "difference") {
    for (const auto& b : points(size, n, false))
      for (int i = 0; i < size; ++i)
        t.check([&] { return verify_weight_difference(cd, w, b, i, affine); }, [&] { return at(b, i); });
  } else if (name == "eigen") {
    for (const auto& p : paths_upto(size, n))
      for (int i = 0; i < size; ++i)
        t.check([&] { return verify_eigencondition(cd, w, p, i); },
                [&] { return path_text(p) + " i=" + std::to_string(i + 1); });
  } else if (name == "toda") {
    for (const auto& b : points(size, n, true))
      t.check([&] { return affine ? deformed_toda_identity(cd, w, b) : toda_eigen_identity(cd, w, b); },
              [&] { return at(b); });
  } else if (name == "exponent") {
    for (const auto& b : points(size, n, false))
      t.check([&] { return renormalized_exponent(cd, w, b).equal(); }, [&] { return at(b); });
  } else if (name == "bump") {
    for (int b1 = 0; b1 <= n; ++b1)
      for (int b2 = 0; b2 <= n; ++b2)
        t.check([&] { return table({b1, b2}) == bump_closed_form(b1, b2, w); },
                [&] { return at({b1, b2}); });
  } else if (name == "recursions") {
    PartitionTable box(cd, w, false, 2 * n);
    for (int b1 = 0; b1 <= n; ++b1)
      for (int b2 = 0; b2 <= n; ++b2)
        t.check([&] { return a2_higher_recursion_check(box, b1, b2).all(); }, [&] { return at({b1, b2}); });
    t.check([] { return a2_sum_identity(); }, [] { return std::string("sum identity"); });
  } else if (name == "critical") {
    const WeightParam wc = opt.lambda.empty() ? w : WeightParam::special(opt.lambda, 0);
    const CriticalExpansion e = critical_solve(cd, wc, n, opt.j_max);
    for (int j = 0; j <= opt.j_max; ++j)
      for (const auto& b : points(size, n, false))
        t.check([&] { return critical_residual(cd, wc, e, j, b).is_zero(); },
                [&] { return "j=" + std::to_string(j) + " " + at(b); });
  } else {
    throw ConfigError("unknown suite '" + name + "' for " + spec.name());
  }
}

void quantum_suite(const TypeSpec& spec, const VerifyOptions& opt, const std::string& name, Tally& t) {
  if (opt.lambda.empty()) throw ConfigError("quantum mode requires --lambda");
  if (static_cast<int>(opt.lambda.size()) != spec.type.rank)
    throw ConfigError("--lambda needs " + std::to_string(spec.type.rank) + " entries");
  const QContext ctx = QContext::make(opt.lambda);
  const int r = ctx.r;
  const int n = opt.degree;
  QPartitionTable table(ctx, std::max(2 * n, 1));

  if (name == "dp") {
    for (const auto& b : points(r, n, true))
      t.check([&] { return table(b) == q_partition_bruteforce(ctx, b, std::max(n, 1)); }, [&] { return at(b); });
  } else if (name == "difference") {
    for (const auto& b : points(r, n, false))
      for (int i = 1; i <= r; ++i)
        t.check([&] { return edge_difference_check(ctx, b, i); }, [&] { return at(b, i); });
  } else if (name == "tau") {
    for (const auto& b : points(r, n, false))
      for (int i = 1; i <= r; ++i)
        t.check([&] { return tau_independence_check(ctx, b, i); }, [&] { return at(b, i); });
  } else if (name == "cancellation") {
    for (const auto& b : points(r, n, true))
      for (int i = 1; i <= r; ++i)
        for (int j = 1; j <= r; ++j)
          t.check([&] { return cancellation_check(ctx, b, i, j); },
                  [&] { return at(b, i) + " j=" + std::to_string(j); });
  } else if (name == "eigen") {
    for (const auto& p : paths_upto(r, n))
      for (int i = 1; i <= r; ++i)
        t.check([&] { return q_eigencondition_check(ctx, p, i); },
                [&] { return path_text(p) + " i=" + std::to_string(i); });
  } else if (name == "toda") {
    for (const auto& b : points(r, n, false))
      t.check([&] { return q_toda_check(table, b).all(); }, [&] { return at(b); });
  } else if (name == "bar") {
    for (const auto& b : points(r, n, false))
      t.check([&] { return bar_invariance_check(table, b); }, [&] { return at(b); });
  } else if (name == "bump") {
    if (r != 2) throw ConfigError("suite 'bump' needs A2q");
    for (int b1 = 0; b1 <= n; ++b1)
      for (int b2 = 0; b2 <= n; ++b2)
        t.check([&] { return table({b1, b2}) == q_bump_sl3(ctx, b1, b2); }, [&] { return at({b1, b2}); });
  } else if (name == "sl2") {
    if (r != 1) throw ConfigError("suite 'sl2' needs A1q");
    for (int b = 0; b <= n; ++b)
      t.check([&] { return table({b}) == q_sl2_closed_form(ctx, b); }, [&] { return at({b}); });
  } else if (name == "limit") {
    const CartanData cd = build_cartan(spec.type);
    PartitionTable classical(cd, WeightParam::special(opt.lambda), false, std::max(n, 1));
    for (const auto& b : points(r, n, false))
      t.check([&] { return classical_limit(table(b)) == constant_value(classical(b)); }, [&] { return at(b); });
  } else {
    throw ConfigError("unknown suite '" + name + "' for " + spec.name());
  }
}

template <class F>
SuiteResult timed(const std::string& name, F body) {
  SuiteResult r;
  r.name = name;
  const auto t0 = std::chrono::steady_clock::now();
  Tally t(r);
  body(t);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace

TypeSpec TypeSpec::parse(const std::string& text) {
  TypeSpec s;
  std::string body = text;
  if (!body.empty() && (body.back() == 'q' || body.back() == 'Q')) {
    s.quantum = true;
    body.pop_back();
  }
  s.type = LieType::parse(body);
  if (s.quantum && (s.type.family != Family::A || s.type.affine))
    throw UnsupportedType("quantum mode supports A_r only, got '" + text + "'");
  return s;
}

std::vector<std::string> available_suites(const TypeSpec& spec) {
  if (spec.quantum) {
    std::vector<std::string> s{"dp", "difference", "tau", "cancellation", "eigen", "toda", "bar"};
    if (spec.type.rank == 1) s.push_back("sl2");
    if (spec.type.rank == 2) s.push_back("bump");
    s.push_back("limit");
    s.push_back("properties");
    return s;
  }
  if (spec.type.affine) return {"dp", "difference", "toda", "exponent", "critical", "properties"};
  std::vector<std::string> s{"dp", "difference", "eigen", "toda"};
  if (is_a2(spec.type)) {
    s.push_back("bump");
    s.push_back("recursions");
  }
  s.push_back("properties");
  return s;
}

SuiteResult run_suite(const TypeSpec& spec, const VerifyOptions& opt, const std::string& name) {
  if (opt.degree < 0) throw ConfigError("--degree must be non-negative");
  if (name == "properties") {
    SuiteResult all;
    all.name = name;
    for (const auto& r : run_property_suites(opt.seed, opt.property_count)) {
      all.instances += r.instances;
      all.passed += r.passed;
      all.skipped += r.skipped;
      all.seconds += r.seconds;
      if (all.first_failure.empty() && !r.first_failure.empty()) all.first_failure = r.name + ": " + r.first_failure;
    }
    return all;
  }
  const auto avail = available_suites(spec);
  if (std::find(avail.begin(), avail.end(), name) == avail.end())
    throw ConfigError("suite '" + name + "' is not available for " + spec.name());
  return timed(name, [&](Tally& t) {
    if (spec.quantum)
      quantum_suite(spec, opt, name, t);
    else
      classical_suite(spec, opt, name, t);
  });
}

std::vector<SuiteResult> run_verify(const TypeSpec& spec, const VerifyOptions& opt, const std::string& name) {
  std::vector<SuiteResult> out;
  if (name != "all") {
    out.push_back(run_suite(spec, opt, name));
    return out;
  }
  for (const auto& s : available_suites(spec)) out.push_back(run_suite(spec, opt, s));
  return out;
}

std::vector<SuiteResult> run_property_suites(unsigned seed, int count) {
  std::mt19937 rng(seed);
  std::vector<SuiteResult> out;

  out.push_back(timed("ratfunc field axioms", [&](Tally& t) {
    for (int k = 0; k < count; ++k) {
      const RatFunc a = random_ratfunc(rng), b = random_ratfunc(rng), c = random_ratfunc(rng);
      t.check([&] {
        return (a + b) + c == a + (b + c) && a * (b * c) == (a * b) * c && a * (b + c) == a * b + a * c &&
               a + b == b + a && a * b == b * a && a - a == RatFunc() && (b.is_zero() || (a / b) * b == a);
      }, [&] { return to_string(a) + " ; " + to_string(b) + " ; " + to_string(c); });
    }
  }));

  out.push_back(timed("q-ratfunc field axioms", [&](Tally& t) {
    for (int k = 0; k < count; ++k) {
      const QRatFunc a = random_qratfunc(rng), b = random_qratfunc(rng), c = random_qratfunc(rng);
      t.check([&] {
        return (a + b) + c == a + (b + c) && a * (b * c) == (a * b) * c && a * (b + c) == a * b + a * c &&
               a - a == QRatFunc() && (b.is_zero() || (a / b) * b == a);
      }, [&] { return to_string(a) + " ; " + to_string(b) + " ; " + to_string(c); });
    }
  }));

  out.push_back(timed("specialization homomorphism", [&](Tally& t) {
    for (int k = 0; k < count; ++k) {
      const RatFunc a = random_ratfunc(rng), b = random_ratfunc(rng);
      const std::map<int, Rational> pt{{0, ratio(static_cast<int>(rng() % 41) - 20, 7)},
                                       {1, ratio(static_cast<int>(rng() % 41) - 20, 5)},
                                       {kEpsSlot, ratio(static_cast<int>(rng() % 41) - 20, 3)}};
      t.check([&] {
        const Rational ea = evaluate(a, pt), eb = evaluate(b, pt);
        return evaluate(a + b, pt) == ea + eb && evaluate(a * b, pt) == ea * eb;
      }, [&] { return to_string(a) + " ; " + to_string(b); });
    }
  }));

  out.push_back(timed("normalization idempotence", [&](Tally& t) {
    for (int k = 0; k < count; ++k) {
      const RatFunc a = random_ratfunc(rng);
      MultiPoly g;
      while (g.is_zero()) g = random_poly(rng, 3, 2, 2);
      const QRatFunc qa = random_qratfunc(rng);
      t.check([&] {
        return RatFunc(a.num(), a.den()) == a && RatFunc(a.num() * g, a.den() * g) == a &&
               QRatFunc(qa.num(), qa.den()) == qa;
      }, [&] { return to_string(a); });
    }
  }));

  out.push_back(timed("bar involution", [&](Tally& t) {
    for (int k = 0; k < count; ++k) {
      const QRatFunc a = random_qratfunc(rng), b = random_qratfunc(rng);
      t.check([&] {
        return bar(bar(a)) == a && bar(a * b) == bar(a) * bar(b) && bar(a + b) == bar(a) + bar(b);
      }, [&] { return to_string(a) + " ; " + to_string(b); });
    }
  }));
  return out;
}

}  // namespace whittaker
