#include "gptb/config.hpp"

#include <cstdlib>

#include "gptb/errors.hpp"

namespace gptb {

Scalar::Mode Config::parse_mode(const std::string& s) {
    if (s == "exact") return Scalar::Mode::exact;
    if (s == "float" || s == "real") return Scalar::Mode::real;
    throw ParseError("unknown arithmetic mode '" + s + "' (expected exact|float)");
}

Config::Format Config::parse_format(const std::string& s) {
    if (s == "json") return Format::json;
    if (s == "csv") return Format::csv;
    if (s == "table") return Format::table;
    throw ParseError("unknown output format '" + s + "' (expected json|csv|table)");
}

Config Config::from_env() {
    Config c;
    if (const char* v = std::getenv("GPTB_MODE")) c.mode = parse_mode(v);
    if (const char* v = std::getenv("GPTB_EPS")) {
        c.eps = std::strtod(v, nullptr);
        if (!(c.eps > 0)) throw ParseError("GPTB_EPS must be positive");
    }
    if (const char* v = std::getenv("GPTB_PARALLELISM"))
        c.parallelism = static_cast<unsigned>(std::strtoul(v, nullptr, 10));
    if (const char* v = std::getenv("GPTB_SEED"))
        c.seed = static_cast<std::uint64_t>(std::strtoull(v, nullptr, 10));
    if (const char* v = std::getenv("GPTB_FORMAT")) c.format = parse_format(v);
    return c;
}

}  // namespace gptb
