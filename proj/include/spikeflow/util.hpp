#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace spikeflow {

// Worker count: min(hardware_concurrency, SPIKEFLOW_THREADS if set), at least 1.
int worker_count();

// Runs fn(i) for i in [0, n) on worker_count() threads. Exceptions from any
// task are rethrown (first in index order). Callers are responsible for making
// the result independent of scheduling (disjoint output slots per index).
void parallel_for_index(std::size_t n, const std::function<void(std::size_t)>& fn);

// FNV-1a 64-bit, for manifest content hashes.
std::uint64_t fnv1a64(const void* data, std::size_t len, std::uint64_t h = 0xcbf29ce484222325ULL);
std::string to_hex(std::uint64_t v);

// Shortest round-trip decimal formatting (std::to_chars) and strict parsing.
std::string format_double(double v);
double parse_double(const std::string& s);
long long parse_int(const std::string& s);

std::vector<std::string> split_ws(const std::string& s);
std::string join(const std::vector<std::string>& parts, const std::string& sep);

} // namespace spikeflow
