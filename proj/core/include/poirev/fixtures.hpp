#pragma once

#include <string>
#include <vector>

#include "poirev/io.hpp"

namespace poirev {

enum class ExpectKind {
  posterior,   // op(state, input) == posterior
  belief,      // min(op(state, input), W) == worlds
  verdict,     // verify_all(postulate) holds == expected
  instance,    // check_instance(postulate, bindings) == expected
  nonflush,    // non_flush(state) == expected
};

struct Expectation {
  std::string description;
  ExpectKind kind;
  RevisionOperator op;
  std::string postulate{};
  bool expected = true;
  WorldSet input{};
  Tpo posterior{};
  WorldSet worlds{};
  Bindings bindings{};
};

struct Fixture {
  std::string name;
  std::string summary;
  WorldSpace space;
  State state;
  std::vector<Expectation> expectations;
};

struct ExpectationResult {
  std::string description;
  bool passed;
  std::string detail;
};

struct FixtureReport {
  std::string name;
  std::vector<ExpectationResult> results;
  double seconds = 0;

  bool passed() const;
};

/// The six countermodel and figure fixtures: FX-FIG, FX-S6, FX-P5a, FX-P5b, FX-P15, FX-NF.
const std::vector<Fixture>& builtin_fixtures();

/// Evaluates every expectation; errors (including fixture lookup misses) become failures.
FixtureReport run_fixture(const Fixture& f);

Json fixture_report_to_json(const FixtureReport& r);

}  // namespace poirev
