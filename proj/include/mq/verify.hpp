#pragma once

// Named verification suites: each check pins one exact value.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mq {

struct Check {
  std::string suite;
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct VerificationReport {
  std::vector<Check> checks;

  std::size_t passed() const;
  std::size_t failed() const { return checks.size() - passed(); }
  bool pass() const { return failed() == 0; }
};

enum class Suite : std::uint8_t { Relations, Ranks, Pairings, Gv, Quotient, Cone, All };

std::string_view to_string(Suite s);
std::optional<Suite> parse_suite(std::string_view text);

/// Runs one suite, or every suite in declaration order for Suite::All.
VerificationReport run_suite(Suite s);

}  // namespace mq
