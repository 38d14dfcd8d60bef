#pragma once

namespace gforge {

// Cooperative cancellation.  Long-running engines call CheckInterrupt() at
// safe points (e.g. between S-polynomial reductions); a pending request makes
// it throw Cancelled, unwinding without touching any cache.  The flag is
// process-global, mirroring a Ctrl-C.
void RequestCancel();
void ClearCancelRequest();
bool CancelRequested();
void CheckInterrupt();

// Test hook: request cancellation automatically after `count` more progress
// emissions (0 disables).  Gives deterministic interruption points.
void CancelAfterProgress(int count);

} // namespace gforge
