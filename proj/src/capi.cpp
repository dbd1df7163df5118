#include "hypbill/hypbill.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>

#include "hypbill/billiard.hpp"
#include "hypbill/commands.hpp"
#include "hypbill/error.hpp"
#include "hypbill/polygon.hpp"
#include "hypbill/shiftspace.hpp"
#include "hypbill/subshift.hpp"
#include "hypbill/symdyn.hpp"

struct hb_polygon {
    hypbill::CheckedPolygon polygon;
};

struct hb_subshift {
    hypbill::SubshiftHandle handle;
};

struct hb_result {
    hypbill::CommandOutput output;
};

namespace {

thread_local std::string last_message;
thread_local std::string last_name;

void clear_error() {
    last_message.clear();
    last_name.clear();
}

hb_status fail(hb_status status, const char* name, const std::string& message) {
    last_name = name;
    last_message = message;
    return status;
}

// Runs f, mapping exceptions to status codes; nothing escapes the C boundary.
template <class F>
hb_status guarded(F&& f) {
    clear_error();
    try {
        f();
        return HB_OK;
    } catch (const hypbill::Error& e) {
        const auto status = hypbill::is_input_error(e.code()) ? HB_INPUT_ERROR : HB_DOMAIN_ERROR;
        return fail(status, hypbill::error_code_name(e.code()), e.what());
    } catch (const std::bad_alloc&) {
        return fail(HB_INTERNAL_ERROR, "OutOfMemory", "allocation failed");
    } catch (const std::exception& e) {
        return fail(HB_INTERNAL_ERROR, "Internal", e.what());
    } catch (...) {
        return fail(HB_INTERNAL_ERROR, "Internal", "unknown exception");
    }
}

hb_status null_argument() { return fail(HB_INPUT_ERROR, "InvalidArgument", "null argument"); }

char* duplicate(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.data(), s.size() + 1);
    return out;
}

hypbill::RunOptions to_options(const hb_options* o) {
    hypbill::RunOptions r;
    if (!o) return r;
    switch (o->format) {
        case HB_FORMAT_JSON: r.format = hypbill::OutputFormat::Json; break;
        case HB_FORMAT_CSV: r.format = hypbill::OutputFormat::Csv; break;
        case HB_FORMAT_TEXT: r.format = hypbill::OutputFormat::Text; break;
        case HB_FORMAT_SVG: r.format = hypbill::OutputFormat::Svg; break;
        default: break;
    }
    if (o->has_seed) r.seed = o->seed;
    if (o->has_depth) r.depth = o->depth;
    if (o->has_budget) r.budget = static_cast<std::size_t>(o->budget);
    if (o->has_start) {
        r.theta = o->theta_rad;
        r.phi = o->phi_rad;
    }
    if (o->has_n_future) r.n_future = o->n_future;
    if (o->has_n_past) r.n_past = o->n_past;
    if (o->word) r.word = std::string(o->word);
    return r;
}

using Command = hypbill::CommandOutput (*)(const std::string&, const hypbill::RunOptions&);

hb_status run_command(Command cmd, const char* config_text, const hb_options* opts, hb_result** out) {
    if (!config_text || !out) return null_argument();
    *out = nullptr;
    return guarded([&] { *out = new hb_result{cmd(config_text, to_options(opts))}; });
}

}  // namespace

extern "C" {

void hb_options_init(hb_options* opts) {
    if (opts) *opts = hb_options{};
}

const char* hb_last_error(void) { return last_message.c_str(); }
const char* hb_last_error_name(void) { return last_name.c_str(); }
const char* hb_version(void) { return "0.1.0"; }

void hb_string_free(char* s) { std::free(s); }

hb_status hb_polygon_from_json(const char* spec_json, hb_polygon** out) {
    if (!spec_json || !out) return null_argument();
    *out = nullptr;
    return guarded([&] { *out = new hb_polygon{hypbill::validate(hypbill::parse_polygon_spec(spec_json))}; });
}

void hb_polygon_free(hb_polygon* p) { delete p; }

int hb_polygon_sides(const hb_polygon* p) { return p ? p->polygon.k() : 0; }

double hb_polygon_area(const hb_polygon* p) { return p ? p->polygon.area() : 0.0; }

hb_status hb_polygon_forbidden_json(const hb_polygon* p, char** out) {
    if (!p || !out) return null_argument();
    return guarded([&] {
        *out = duplicate(hypbill::subshift_spec_to_json(hypbill::forbidden_set(p->polygon.spec())));
    });
}

hb_status hb_polygon_decode(const hb_polygon* p, const char* word, double* theta_rad, double* phi_rad) {
    if (!p || !word || !theta_rad || !phi_rad) return null_argument();
    return guarded([&] {
        const auto orbit = hypbill::decode_periodic(p->polygon, word);
        *theta_rad = orbit.at(0).geodesic.theta().radians();
        *phi_rad = orbit.at(0).geodesic.phi().radians();
    });
}

hb_status hb_polygon_code(const hb_polygon* p, double theta_rad, double phi_rad, int n_future, char** out,
                          int* terminated) {
    if (!p || !out) return null_argument();
    return guarded([&] {
        using namespace hypbill;
        const auto g = DirectedGeodesic::from_endpoints(BoundaryAngle(theta_rad), BoundaryAngle(phi_rad));
        std::optional<BaseArc> start;
        try {
            start = make_arc(p->polygon, g);
        } catch (const Error& e) {
            // A start arc ending in a vertex is a trajectory of length zero.
            if (!classify_termination(e, 0) || e.code() == ErrorCode::NoIntersection) throw;
            if (terminated) *terminated = 1;
            *out = duplicate("");
            return;
        }
        const auto result = simulate(p->polygon, *start, n_future, 0);
        if (terminated) *terminated = result.termination.has_value() ? 1 : 0;
        *out = duplicate(code(result.window).letters);
    });
}

hb_status hb_subshift_from_json(const char* forbidden_json, hb_subshift** out) {
    if (!forbidden_json || !out) return null_argument();
    *out = nullptr;
    return guarded([&] {
        *out = new hb_subshift{hypbill::SubshiftHandle::sft(hypbill::parse_subshift_spec(forbidden_json))};
    });
}

hb_status hb_subshift_builtin(const char* name, hb_subshift** out) {
    if (!name || !out) return null_argument();
    *out = nullptr;
    return guarded([&] {
        using hypbill::SubshiftHandle;
        const std::string n = name;
        if (n == "even_shift") {
            *out = new hb_subshift{SubshiftHandle::even_shift()};
        } else if (n == "single_defect") {
            *out = new hb_subshift{SubshiftHandle::single_defect()};
        } else if (n == "golden_mean") {
            hypbill::SubshiftSpec s;
            s.closure = {2, {"22"}};
            *out = new hb_subshift{SubshiftHandle::sft(s, "golden_mean")};
        } else {
            throw hypbill::Error(hypbill::ErrorCode::ParseError, "unknown builtin shift " + n);
        }
    });
}

void hb_subshift_free(hb_subshift* s) { delete s; }

int hb_subshift_contains(const hb_subshift* s, const char* word) {
    if (!s || !word) return 0;
    try {
        return s->handle.contains(word) ? 1 : 0;
    } catch (...) {
        return 0;
    }
}

hb_status hb_subshift_distance(const hb_subshift* x, const hb_subshift* y, int max_m, int* exponent) {
    if (!x || !y || !exponent) return null_argument();
    return guarded([&] {
        const auto d = hypbill::subshift_hausdorff(x->handle, y->handle, max_m);
        *exponent = d.exponent.value_or(-1);
    });
}

hb_status hb_cmd_validate(const char* c, const hb_options* o, hb_result** out) {
    return run_command(hypbill::cmd_validate, c, o, out);
}
hb_status hb_cmd_simulate(const char* c, const hb_options* o, hb_result** out) {
    return run_command(hypbill::cmd_simulate, c, o, out);
}
hb_status hb_cmd_decode(const char* c, const hb_options* o, hb_result** out) {
    return run_command(hypbill::cmd_decode, c, o, out);
}
hb_status hb_cmd_analyze(const char* c, const hb_options* o, hb_result** out) {
    return run_command(hypbill::cmd_analyze, c, o, out);
}
hb_status hb_cmd_distance(const char* c, const hb_options* o, hb_result** out) {
    return run_command(hypbill::cmd_distance, c, o, out);
}
hb_status hb_cmd_converge(const char* c, const hb_options* o, hb_result** out) {
    return run_command(hypbill::cmd_converge, c, o, out);
}
hb_status hb_cmd_render(const char* c, const hb_options* o, hb_result** out) {
    return run_command(hypbill::cmd_render, c, o, out);
}

const char* hb_result_body(const hb_result* r) { return r ? r->output.body.c_str() : ""; }

size_t hb_result_attachment_count(const hb_result* r) { return r ? r->output.attachments.size() : 0; }

const char* hb_result_attachment_suffix(const hb_result* r, size_t i) {
    return r && i < r->output.attachments.size() ? r->output.attachments[i].first.c_str() : "";
}

const char* hb_result_attachment_body(const hb_result* r, size_t i) {
    return r && i < r->output.attachments.size() ? r->output.attachments[i].second.c_str() : "";
}

size_t hb_result_warning_count(const hb_result* r) { return r ? r->output.warnings.size() : 0; }

const char* hb_result_warning(const hb_result* r, size_t i) {
    return r && i < r->output.warnings.size() ? r->output.warnings[i].c_str() : "";
}

void hb_result_free(hb_result* r) { delete r; }

}  // extern "C"
