#pragma once

#include "permfp/group.hpp"

#include <string>
#include <vector>

namespace permfp {

struct CheckResult {
    std::string name;
    bool ok;
    std::string detail;  // empty on success
};

// Cross-module consistency battery for one group at one prime: lattice and
// coset bookkeeping, double-coset counts against hom dimensions, the
// projection ideal, Brauer production vs oracle, generator marks, homology
// and duality identities, and the class-function lattice.  Exceptions from
// any check are caught and reported as failures.
std::vector<CheckResult> run_selfcheck(const GroupPtr& g, int p);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace permfp
