#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace overq {

/* Exit codes: 0 success / all identities pass, 1 identity failure,
 * 2 usage error, 3 enumeration budget exceeded. */
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

} // namespace overq
