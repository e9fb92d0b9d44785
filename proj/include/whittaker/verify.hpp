#pragma once

#include <string>
#include <vector>

#include "whittaker/cartan.hpp"

namespace whittaker {

// "A2", "A1~", "A2q".
struct TypeSpec {
  LieType type;
  bool quantum = false;

  static TypeSpec parse(const std::string& text);
  std::string name() const { return type.name() + (quantum ? "q" : ""); }
};

struct VerifyOptions {
  int degree = 4;
  int j_max = 2;
  std::vector<Rational> lambda;  // empty: symbolic (finite and affine only)
  unsigned seed = 1;
  int property_count = 1000;
};

struct SuiteResult {
  std::string name;
  long instances = 0;
  long passed = 0;
  long skipped = 0;  // singular specializations
  std::string first_failure;
  double seconds = 0;
  bool ok() const { return passed + skipped == instances; }
};

std::vector<std::string> available_suites(const TypeSpec& spec);
SuiteResult run_suite(const TypeSpec& spec, const VerifyOptions& opt, const std::string& name);
// name == "all" runs every available suite.
std::vector<SuiteResult> run_verify(const TypeSpec& spec, const VerifyOptions& opt, const std::string& name);

// Randomized algebra checks; independent of the Lie type.
std::vector<SuiteResult> run_property_suites(unsigned seed, int count);

}  // namespace whittaker
