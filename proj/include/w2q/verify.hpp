#pragma once

#include <string>
#include <vector>

namespace w2q {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/* Cross-module invariant suites for one prime; every block, pair, and quiver
 * of that prime within the hook family is exercised. Quiver suites need
 * prime >= 5; for prime 3 the fixture suites run instead.
 */
std::vector<CheckResult> verify_suites(int prime);

}  // namespace w2q
