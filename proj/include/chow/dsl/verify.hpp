#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "chow/dsl/report.hpp"
#include "chow/errors.hpp"

namespace chow::dsl {

struct VerifyOptions {
  long qmax = 50;
  long xmax = 10000;
  unsigned workers = 1;
};

/// all, case-a, case-b, case-c, thm5, thm6, ring-identities
const std::vector<std::string>& verification_selectors();
bool is_verification_selector(std::string_view s);

/// Throws chow::Error for an unknown selector. Check order is fixed.
Report run_verification_suite(std::string_view selector, const VerifyOptions& options = {});

}  // namespace chow::dsl
