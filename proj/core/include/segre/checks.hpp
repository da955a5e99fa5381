#pragma once

#include <vector>

#include "segre/report.hpp"

namespace segre::checks {

/// Named verification suites shared by the command-line driver. Each check
/// carries the identity it verifies in its anchor string.
std::vector<Check> algebra_suite();
std::vector<Check> epsilon_suite(const std::vector<int>& ns);
std::vector<Check> decomp_suite(const std::vector<int>& ns);
std::vector<Check> parabolic_suite(const std::vector<int>& ns);
std::vector<Check> kostant_suite(const std::vector<int>& ns);
std::vector<Check> field_suite();

}  // namespace segre::checks
