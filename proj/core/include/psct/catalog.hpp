#pragma once

#include <string>
#include <variant>
#include <vector>

#include "psct/hermitian.hpp"

namespace psct {

struct Assertion {
  std::string name;
  std::string expected;
  std::string actual;
  bool passed() const { return expected == actual; }
};

using FixturePayload = std::variant<TorsionDatum, MetricLieAlgebra, AlmostHermitian, KForm>;

struct Fixture {
  std::string name;
  std::string description;
  FixturePayload payload;
  std::vector<Assertion> assertions;  // evaluated on load

  bool passed() const;
};

std::vector<std::string> fixture_names();
// Builds the payload and evaluates every assertion. Throws DomainError for unknown names.
Fixture fixture(const std::string& name);

// Model expressions of the metric Lie algebras used throughout the catalog.
std::vector<std::string> catalog_algebras();

// phi = e123 + e145 + e167 + e246 - e257 - e347 - e356.
KForm g2_form();

}  // namespace psct
