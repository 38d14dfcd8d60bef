#pragma once

#include <functional>
#include <string>

namespace gforge {

// Global verbosity: 0 is silent.  Progress lines go to a sink (default:
// stderr); each emission is a single atomic line on the diagnostic stream,
// never mixed into results.
void SetVerbosityLevel(int level);
int VerbosityLevel();

using VerboseSink = std::function<void(const std::string& line)>;

// Replace the sink (pass nullptr to restore the stderr default).
void SetVerboseSink(VerboseSink sink);

// Emit `line` if the current level is >= level.
void Verbose(int level, const std::string& line);

} // namespace gforge
