#pragma once

#include <iosfwd>

namespace sdb::cli {

/// Runs one sdbialg invocation. Returns 0 when every requested check passed,
/// 1 when a check failed and 2 on usage or input errors.
int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sdb::cli
