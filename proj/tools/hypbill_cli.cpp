// Command-line front end. Talks to the library only through hypbill.h.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "hypbill/hypbill.h"

namespace {

constexpr int kExitInput = 3;

struct Args {
    std::string config;
    std::string out;
    std::string format;
    std::optional<std::uint64_t> seed;
    std::optional<int> depth;
    std::optional<std::uint64_t> budget;
    std::optional<double> theta;
    std::optional<double> phi;
    std::optional<int> future;
    std::optional<int> past;
    std::optional<std::string> word;
};

std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

bool write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
    return static_cast<bool>(out);
}

std::string json_escape(const std::string& s) {
    std::string r;
    for (char c : s) {
        if (c == '"' || c == '\\') {
            r += '\\';
            r += c;
        } else if (static_cast<unsigned char>(c) < 0x20) {
            char buf[8];
            std::snprintf(buf, sizeof buf, "\\u%04x", c);
            r += buf;
        } else {
            r += c;
        }
    }
    return r;
}

int report_error(int code, const std::string& name, const std::string& message) {
    std::cerr << "{\"error\": \"" << json_escape(name) << "\", \"message\": \"" << json_escape(message)
              << "\", \"exit_code\": " << code << "}\n";
    return code;
}

hb_format to_format(const std::string& name) {
    if (name == "json") return HB_FORMAT_JSON;
    if (name == "csv") return HB_FORMAT_CSV;
    if (name == "text") return HB_FORMAT_TEXT;
    if (name == "svg") return HB_FORMAT_SVG;
    return HB_FORMAT_DEFAULT;
}

using Command = hb_status (*)(const char*, const hb_options*, hb_result**);

int run(Command command, const Args& args) {
    const auto config = read_file(args.config);
    if (!config) return report_error(kExitInput, "IoError", "cannot read config " + args.config);
    spdlog::debug("config {} ({} bytes)", args.config, config->size());

    hb_options opts;
    hb_options_init(&opts);
    opts.format = to_format(args.format);
    if (args.seed) {
        opts.has_seed = 1;
        opts.seed = *args.seed;
    }
    if (args.depth) {
        opts.has_depth = 1;
        opts.depth = *args.depth;
    }
    if (args.budget) {
        opts.has_budget = 1;
        opts.budget = *args.budget;
    }
    if (args.theta && args.phi) {
        opts.has_start = 1;
        opts.theta_rad = *args.theta;
        opts.phi_rad = *args.phi;
    } else if (args.theta || args.phi) {
        return report_error(2, "InvalidArgument", "--theta and --phi must be given together");
    }
    if (args.future) {
        opts.has_n_future = 1;
        opts.n_future = *args.future;
    }
    if (args.past) {
        opts.has_n_past = 1;
        opts.n_past = *args.past;
    }
    if (args.word) opts.word = args.word->c_str();

    hb_result* result = nullptr;
    const hb_status status = command(config->c_str(), &opts, &result);
    if (status != HB_OK) return report_error(static_cast<int>(status), hb_last_error_name(), hb_last_error());

    for (std::size_t i = 0; i < hb_result_warning_count(result); ++i) spdlog::warn("{}", hb_result_warning(result, i));
    int exit_code = 0;
    if (args.out.empty()) {
        std::cout << hb_result_body(result);
        if (hb_result_attachment_count(result) > 0) spdlog::info("side outputs are written only with --out");
    } else {
        if (!write_file(args.out, hb_result_body(result))) {
            exit_code = report_error(kExitInput, "IoError", "cannot write " + args.out);
        }
        for (std::size_t i = 0; exit_code == 0 && i < hb_result_attachment_count(result); ++i) {
            const std::string path = args.out + hb_result_attachment_suffix(result, i);
            if (!write_file(path, hb_result_attachment_body(result, i))) {
                exit_code = report_error(kExitInput, "IoError", "cannot write " + path);
            }
        }
    }
    hb_result_free(result);
    return exit_code;
}

void configure_logging() {
    auto logger = spdlog::stderr_color_mt("hypbill");
    spdlog::set_default_logger(logger);
    spdlog::set_pattern("[%l] %v");
    spdlog::set_level(spdlog::level::warn);
    if (const char* env = std::getenv("HB_LOG")) spdlog::set_level(spdlog::level::from_str(env));
}

}  // namespace

int main(int argc, char** argv) {
    configure_logging();
    CLI::App app{"Billiards in hyperbolic polygons and their shift spaces"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(hb_version()));

    Args args;
    struct Entry {
        const char* name;
        const char* help;
        Command command;
    };
    const Entry entries[] = {
        {"validate", "Check a polygon spec and report class, angles and area", hb_cmd_validate},
        {"simulate", "Run the bounce map and dump the trajectory and its code", hb_cmd_simulate},
        {"decode", "Closed orbit of a periodic side-label word", hb_cmd_decode},
        {"analyze", "Forbidden set, entropy, transitivity and mixing of the coding", hb_cmd_analyze},
        {"distance", "Dyadic Hausdorff distance between subshifts", hb_cmd_distance},
        {"converge", "Distance table along a sequence of subshifts", hb_cmd_converge},
        {"render", "SVG of the polygon, its unfolding along a word, and the orbit", hb_cmd_render},
    };
    const std::map<std::string, std::string> formats{
        {"json", "json"}, {"csv", "csv"}, {"text", "text"}, {"svg", "svg"}};
    Command selected = nullptr;
    for (const auto& e : entries) {
        CLI::App* sub = app.add_subcommand(e.name, e.help);
        sub->add_option("--config", args.config, "Config file (JSON)")->required();
        sub->add_option("--out", args.out, "Output path (stdout when absent)");
        sub->add_option("--format", args.format, "Output format")->transform(CLI::IsMember(formats));
        sub->add_option("--seed", args.seed, "Seed for sampled output");
        sub->add_option("--depth", args.depth, "Word-length depth for property checks, distances or unfolding");
        sub->add_option("--budget", args.budget, "Word-count budget for enumerations");
        const std::string name = e.name;
        if (name == "simulate") {
            sub->add_option("--theta", args.theta, "Start source angle (radians)");
            sub->add_option("--phi", args.phi, "Start target angle (radians)");
            sub->add_option("--future", args.future, "Number of forward bounces");
            sub->add_option("--past", args.past, "Number of backward bounces");
        }
        if (name == "simulate" || name == "decode" || name == "render") {
            sub->add_option("--word", args.word, "Periodic side-label word, e.g. 123");
        }
        const Command command = e.command;
        sub->callback([&selected, command] { selected = command; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }
    return run(selected, args);
}
