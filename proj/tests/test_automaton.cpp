#include "tmhankel/automaton.hpp"
#include "tmhankel/closed_form.hpp"
#include "tmhankel/errors.hpp"

#include <doctest.h>

using namespace tmhankel;

TEST_CASE("selector parsing") {
  CHECK(parse_column_selector("h0") == ColumnSelector::H0);
  CHECK(parse_column_selector("S1") == ColumnSelector::Sigma1);
  CHECK_FALSE(parse_column_selector("h2").has_value());
  CHECK(column_value(ColumnSelector::H1, 10) == h_col1(10));
}

TEST_CASE("kernel automata replay their columns") {
  for (const auto selector :
       {ColumnSelector::H0, ColumnSelector::H1, ColumnSelector::Sigma0, ColumnSelector::Sigma1}) {
    const Dfao dfao = kernel_dfao(selector, 729);
    CHECK(dfao.state_count() <= kMaxKernelStates);
    for (unsigned long n = 0; n < 729; ++n) REQUIRE(dfao.run(n) == column_value(selector, n));
    // Beyond the replay window as well.
    for (unsigned long n = 100000; n < 101000; ++n) CHECK(dfao.run(n) == column_value(selector, n));
    for (const auto& t : dfao.transitions) {
      for (const std::size_t s : t) CHECK(s < dfao.state_count());
    }
  }
  CHECK(kernel_dfao(ColumnSelector::H1, 729).state_count() <= 12);
}

TEST_CASE("dfao json schema") {
  const Dfao dfao = kernel_dfao(ColumnSelector::Sigma1, 729);
  const auto j = dfao.to_json();
  CHECK(j.at("digit_order") == "lsd");
  CHECK(j.at("initial") == 0);
  CHECK(j.at("states").size() == dfao.state_count());
  CHECK(j.at("transitions").size() == dfao.state_count());
  CHECK(j.at("states")[0].at("output") == "1");
  for (const auto& row : j.at("transitions")) CHECK(row.size() == 3);
}

TEST_CASE("prefix too short") {
  CHECK_THROWS_AS(kernel_dfao(ColumnSelector::H0, 80), InvalidSize);
  // 81 terms may or may not suffice; the outcome is an automaton or a typed error.
  try {
    const Dfao dfao = kernel_dfao(ColumnSelector::H0, 81);
    CHECK(dfao.state_count() <= kMaxKernelStates);
  } catch (const NonConvergence&) {
  } catch (const ReplayFailure&) {
  }
}
