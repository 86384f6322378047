#pragma once

// Seeded verification suites producing a JSON report with one certificate
// per property: how many instances were checked, a witness from the first
// instance and the full instance of every failure.

#include <string>
#include <vector>

#include "json.hpp"

#include "monocat/rng.hpp"

namespace monocat {

struct VerifyOptions {
    std::string suite = "all";
    unsigned n_max = 4;
    std::vector<std::uint32_t> primes{2, 5};
    std::uint64_t seed = 42;
    unsigned samples = 20;
    unsigned threads = 0; // 0: hardware concurrency
};

const std::vector<std::string>& suite_names();

/// Throws InvalidArgument for an unknown suite or bad options.
/// The returned report has "command", "ok", "options", "results",
/// "certificates" and "timing_ms"; everything except "timing_ms" is a
/// function of the options.
nlohmann::json verify(const VerifyOptions& opts);

/// Independent stream for instance `index` of the sweep labelled `label`.
SplitMix64 instance_rng(std::uint64_t seed, const std::string& label, std::uint64_t index);

} // namespace monocat
