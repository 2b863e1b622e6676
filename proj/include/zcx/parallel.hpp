#pragma once

namespace zcx {

/// Worker count used when a caller passes threads <= 0: ZCX_THREADS if set
/// to a positive integer, otherwise the OpenMP default.
int default_threads();

/// Resolves a requested worker count (<= 0 means default_threads()).
int resolve_threads(int requested);

}  // namespace zcx
