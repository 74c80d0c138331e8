// Command-line surface: catalog, pointvariety, twist, classify, curve,
// verify.  Deterministic JSON on stdout; exit 0 on success, 1 on domain
// errors (with a machine-readable {error, detail} object), 2 on usage errors.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace geotwist::cli {

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace geotwist::cli
