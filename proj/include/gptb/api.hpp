#pragma once

#include <string>

#include "gptb/json_io.hpp"
#include "gptb/verify.hpp"

namespace gptb::api {

/* Subcommand-shaped entry points returning the documented JSON payloads.
 * The CLI prints them; the Python bindings convert them to dicts. Model and
 * channel arguments take the same JSON forms the CLI accepts on stdin or in
 * flags (descriptors, "[g1+,g2-]" names, raw matrices). */

Json model_info(const Json& model_desc, const Config& cfg);
Json channels_enumerate(const Json& model_desc, const Config& cfg, bool allow_large = false);
Json channel_check(const Json& channel, const Json& model_desc, const Config& cfg);
Json birkhoff_gap_report(const Json& model_desc, const Config& cfg);
Json birkhoff_certificate(const Json& channel, const Json& model_desc, const Config& cfg);
Json rac_eval(const std::string& p, const std::string& q, const std::string& set,
              const Config& cfg);
std::string rac_sweep_csv(int steps, const Config& cfg);
Json convert_check(const std::string& from_p, const std::string& from_q,
                   const std::string& to_p, const std::string& to_q, const std::string& set,
                   const Config& cfg);
Json reachable(const std::string& p, const std::string& q, const std::string& set,
               const Config& cfg);
Json entropy_report(const std::string& p, const std::string& q, const Config& cfg);
Json tensor_act(const std::vector<Json>& channels, const Json& state, const Config& cfg);
Json verify_report(const Config& cfg);

}  // namespace gptb::api
