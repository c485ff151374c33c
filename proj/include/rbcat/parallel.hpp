#pragma once

#include <cstddef>
#include <functional>
#include <optional>

namespace rbcat {

// Worker count used by the scan helpers below. Results never depend on it;
// it only controls how index ranges are partitioned across threads.
void set_jobs(int jobs);
int jobs();

// Smallest index i in [0, n) with pred(i) true, or nullopt. With jobs() > 1
// the range is split into chunks scanned concurrently; the global minimum is
// selected, so the answer matches a sequential ascending scan.
std::optional<std::size_t> find_first(std::size_t n,
                                      const std::function<bool(std::size_t)>& pred);

// Runs fn(i) for all i in [0, n), partitioned across workers.
void for_each_index(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace rbcat
