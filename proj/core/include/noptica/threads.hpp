// Copyright (c) 2026 The noptica developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>

namespace noptica {

/// Worker count for internal parallelism: NOPTICA_THREADS when set (clamped
/// to >= 1), otherwise the hardware concurrency.
int thread_count();

/// Run f(i) for i in [0, n) on up to thread_count() workers. Every index is
/// processed exactly once and writes only its own slot, so results are
/// bitwise independent of the schedule.
void parallel_for(int n, const std::function<void(int)>& f);

}  // namespace noptica
