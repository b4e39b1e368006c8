#pragma once

#include <cstdint>
#include <string>

#include "gptb/scalar.hpp"

namespace gptb {

/* Run-wide knobs. Every field can be overridden by a GPTB_-prefixed
 * environment variable (GPTB_MODE, GPTB_EPS, GPTB_PARALLELISM, GPTB_SEED,
 * GPTB_FORMAT); command-line flags win over the environment. */
struct Config {
    enum class Format { json, csv, table };

    Scalar::Mode mode = Scalar::Mode::exact;
    double eps = 1e-9;          // ignored in exact mode
    unsigned parallelism = 0;   // 0 = hardware concurrency
    std::uint64_t seed = 20240915;
    Format format = Format::json;

    static Config from_env();

    static Scalar::Mode parse_mode(const std::string& s);
    static Format parse_format(const std::string& s);
};

}  // namespace gptb
