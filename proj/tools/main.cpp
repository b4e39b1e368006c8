#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <string>

#include "gptb/api.hpp"
#include "gptb/errors.hpp"

namespace {

using gptb::Config;
using gptb::Json;

struct GlobalFlags {
    std::string mode;
    std::string format;
    double eps = 0.0;
    unsigned threads = 0;
    std::uint64_t seed = 0;
    bool mode_set = false, format_set = false, eps_set = false, threads_set = false,
         seed_set = false;
};

Config build_config(const GlobalFlags& g) {
    Config cfg = Config::from_env();
    if (g.mode_set) cfg.mode = Config::parse_mode(g.mode);
    if (g.eps_set) {
        if (!(g.eps > 0)) throw gptb::ParseError("--eps must be positive");
        cfg.eps = g.eps;
    }
    if (g.threads_set) cfg.parallelism = g.threads;
    if (g.seed_set) cfg.seed = g.seed;
    if (g.format_set) cfg.format = Config::parse_format(g.format);
    return cfg;
}

Json parse_json_arg(const std::string& text, const char* what) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        // Bare channel names ("[g1+,g2-]", "id") and model names are
        // accepted without JSON quoting; anything shaped like an object
        // must parse.
        if (!text.empty() && text.front() == '{')
            throw gptb::ParseError(std::string(what) + ": malformed JSON at byte " +
                                   std::to_string(e.byte) + ": " + e.what());
        return Json(text);
    }
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"gptb — square-bit / even-gon model toolkit: channel polytopes, "
                 "Birkhoff-gap certificates, random access codes, convertibility, entropy"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags are accepted after subcommands too

    GlobalFlags g;
    app.add_option("--mode", g.mode, "Arithmetic mode: exact|float")
        ->each([&](const std::string&) { g.mode_set = true; });
    app.add_option("--eps", g.eps, "Float-mode tolerance")
        ->each([&](const std::string&) { g.eps_set = true; });
    app.add_option("--threads", g.threads, "Worker threads (0 = all cores)")
        ->each([&](const std::string&) { g.threads_set = true; });
    app.add_option("--seed", g.seed, "Seed for randomized suites")
        ->each([&](const std::string&) { g.seed_set = true; });
    app.add_option("--format", g.format, "Output format: json|csv|table")
        ->each([&](const std::string&) { g.format_set = true; });

    std::string model_arg = "square";
    std::string channel_arg, state_arg, set_arg = "rare";
    std::string p_arg = "1", q_arg = "1";
    std::string from_p, from_q, to_p, to_q;
    std::vector<std::string> channel_list;
    bool allow_large = false;
    int sweep_steps = 20;

    auto* model_cmd = app.add_subcommand("model", "Model inspection");
    auto* model_info = model_cmd->add_subcommand("info", "Describe a model");
    model_info->add_option("--model", model_arg, "Model name or JSON descriptor");

    auto* channels_cmd = app.add_subcommand("channels", "Channel polytope operations");
    auto* chan_enum = channels_cmd->add_subcommand("enumerate", "Enumerate extreme channels");
    chan_enum->add_option("--model", model_arg, "Model name or JSON descriptor");
    chan_enum->add_flag("--allow-large", allow_large, "Lift the k <= 4 enumeration cap");
    auto* chan_check = channels_cmd->add_subcommand("check", "Classify a channel");
    chan_check->add_option("--channel", channel_arg, "Channel name or JSON")->required();
    chan_check->add_option("--model", model_arg, "Model name or JSON descriptor");

    auto* birkhoff_cmd = app.add_subcommand("birkhoff", "Birkhoff-violation reports");
    auto* gap_cmd = birkhoff_cmd->add_subcommand("gap", "Bistochastic vertices outside RaRe");
    gap_cmd->add_option("--model", model_arg, "Model name or JSON descriptor");
    auto* cert_cmd = birkhoff_cmd->add_subcommand("certificate",
                                                  "Collision certificate for a channel");
    cert_cmd->add_option("--channel", channel_arg, "Channel name or JSON")->required();
    cert_cmd->add_option("--model", model_arg, "Model name or JSON descriptor");

    auto* rac_cmd = app.add_subcommand("rac", "Restricted random access code");
    auto* rac_eval = rac_cmd->add_subcommand("eval", "Optimal and canonical payoffs");
    rac_eval->add_option("--p", p_arg, "First fiducial probability")->required();
    rac_eval->add_option("--q", q_arg, "Second fiducial probability")->required();
    rac_eval->add_option("--set", set_arg, "Channel set: rare|bisto|full");
    auto* rac_sweep = rac_cmd->add_subcommand("sweep", "CSV sweep of both optimal biases");
    rac_sweep->add_option("--steps", sweep_steps, "Grid subdivisions per axis");

    auto* convert_cmd = app.add_subcommand("convert", "State convertibility");
    auto* convert_check = convert_cmd->add_subcommand("check", "Criterion + LP oracle");
    convert_check->add_option("--from-p", from_p)->required();
    convert_check->add_option("--from-q", from_q)->required();
    convert_check->add_option("--to-p", to_p)->required();
    convert_check->add_option("--to-q", to_q)->required();
    convert_check->add_option("--set", set_arg, "Channel set: bisto|rare");

    auto* reachable_cmd = app.add_subcommand("reachable", "Reachable-set vertices");
    reachable_cmd->add_option("--p", p_arg)->required();
    reachable_cmd->add_option("--q", q_arg)->required();
    reachable_cmd->add_option("--set", set_arg, "Channel set: bisto|rare");

    auto* entropy_cmd = app.add_subcommand("entropy", "Entropic monotones of a state");
    entropy_cmd->add_option("--p", p_arg)->required();
    entropy_cmd->add_option("--q", q_arg)->required();

    auto* tensor_cmd = app.add_subcommand("tensor", "Composite-system operations");
    auto* tensor_act = tensor_cmd->add_subcommand("act", "Apply a tensor channel to a state");
    tensor_act->add_option("--channel", channel_list, "One channel per factor (repeatable)")
        ->required()
        ->allow_extra_args(false);  // keep "[g1+,g1+]" intact; repeat the flag per factor
    tensor_act->add_option("--state", state_arg,
                           "Composite state: 'entangled', a JSON vector, or {\"product\":[...]}")
        ->required();

    auto* verify_cmd = app.add_subcommand("verify-paper", "Run the full verification suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        Config cfg = build_config(g);
        if (*model_info) {
            emit(gptb::api::model_info(parse_json_arg(model_arg, "--model"), cfg));
        } else if (*chan_enum) {
            emit(gptb::api::channels_enumerate(parse_json_arg(model_arg, "--model"), cfg,
                                               allow_large));
        } else if (*chan_check) {
            emit(gptb::api::channel_check(parse_json_arg(channel_arg, "--channel"),
                                          parse_json_arg(model_arg, "--model"), cfg));
        } else if (*gap_cmd) {
            emit(gptb::api::birkhoff_gap_report(parse_json_arg(model_arg, "--model"), cfg));
        } else if (*cert_cmd) {
            emit(gptb::api::birkhoff_certificate(parse_json_arg(channel_arg, "--channel"),
                                                 parse_json_arg(model_arg, "--model"), cfg));
        } else if (*rac_eval) {
            emit(gptb::api::rac_eval(p_arg, q_arg, set_arg, cfg));
        } else if (*rac_sweep) {
            std::cout << gptb::api::rac_sweep_csv(sweep_steps, cfg);
        } else if (*convert_check) {
            emit(gptb::api::convert_check(from_p, from_q, to_p, to_q, set_arg, cfg));
        } else if (*reachable_cmd) {
            emit(gptb::api::reachable(p_arg, q_arg, set_arg, cfg));
        } else if (*entropy_cmd) {
            emit(gptb::api::entropy_report(p_arg, q_arg, cfg));
        } else if (*tensor_act) {
            std::vector<Json> parts;
            for (const std::string& c : channel_list)
                parts.push_back(parse_json_arg(c, "--channel"));
            emit(gptb::api::tensor_act(parts, parse_json_arg(state_arg, "--state"), cfg));
        } else if (*verify_cmd) {
            Json report = gptb::api::verify_report(cfg);
            if (cfg.format == Config::Format::json) {
                emit(report);
            } else {
                for (const auto& c : report["criteria"])
                    std::printf("%-4s %-40s %-4s %8.2fs  %s\n",
                                c["id"].get<std::string>().c_str(),
                                c["name"].get<std::string>().c_str(),
                                c["passed"].get<bool>() ? "PASS" : "FAIL",
                                c["seconds"].get<double>(),
                                c["details"].get<std::string>().c_str());
                std::printf("overall: %s\n",
                            report["all_passed"].get<bool>() ? "PASS" : "FAIL");
            }
            return report["all_passed"].get<bool>() ? 0 : 1;
        }
        return 0;
    } catch (const gptb::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
