#pragma once

#include <ostream>

namespace skewcat {

/// Runs the classic separation, no-map and coherence examples end to end and
/// prints one verdict line per check. Returns false if any expected verdict
/// fails. Output is deterministic across runs.
bool run_demo(std::ostream& out);

}  // namespace skewcat
