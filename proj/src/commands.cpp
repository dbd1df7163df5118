#include "hypbill/commands.hpp"

#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "hypbill/billiard.hpp"
#include "hypbill/error.hpp"
#include "hypbill/polygon.hpp"
#include "hypbill/render.hpp"
#include "hypbill/sftlab.hpp"
#include "hypbill/shiftspace.hpp"
#include "hypbill/subshift.hpp"
#include "hypbill/symdyn.hpp"

namespace hypbill {

using nlohmann::json;

std::optional<OutputFormat> parse_format(const std::string& name) {
    if (name == "json") return OutputFormat::Json;
    if (name == "csv") return OutputFormat::Csv;
    if (name == "text") return OutputFormat::Text;
    if (name == "svg") return OutputFormat::Svg;
    return std::nullopt;
}

namespace {

const char* format_name(OutputFormat f) {
    switch (f) {
        case OutputFormat::Json: return "json";
        case OutputFormat::Csv: return "csv";
        case OutputFormat::Text: return "text";
        case OutputFormat::Svg: return "svg";
    }
    return "?";
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("malformed JSON: ") + e.what());
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::IoError, "cannot read " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

// Runs a config accessor, turning JSON type errors into ParseError.
template <class F>
auto guarded(F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("bad config value: ") + e.what());
    }
}

void reject_unknown(const json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
    if (!obj.is_object()) throw Error(ErrorCode::ParseError, where + " must be a JSON object");
    for (const auto& item : obj.items()) {
        bool known = false;
        for (const char* a : allowed) known = known || item.key() == a;
        if (!known) throw Error(ErrorCode::ParseError, "unknown field '" + item.key() + "' in " + where);
    }
}

template <class T>
T get_or(const json& obj, const char* key, T fallback) {
    return guarded([&] { return obj.contains(key) ? obj.at(key).get<T>() : fallback; });
}

PolygonSpec polygon_from(const json& j) {
    if (j.is_string()) return parse_polygon_spec(read_file(j.get<std::string>()));
    return parse_polygon_spec(j.dump());
}

struct Settings {
    Tolerances tol = kDefaultTolerances;
    Budgets budgets = kDefaultBudgets;
    std::uint64_t seed = 1;
    std::optional<int> depth;
};

Settings settings_from(const json& cfg, const RunOptions& opts) {
    Settings s;
    if (cfg.contains("tolerances")) {
        const json& t = cfg.at("tolerances");
        reject_unknown(t, {"geo", "sep", "ang", "vert"}, "tolerances");
        s.tol.geo = get_or(t, "geo", s.tol.geo);
        s.tol.sep = get_or(t, "sep", s.tol.sep);
        s.tol.ang = get_or(t, "ang", s.tol.ang);
        s.tol.vert = get_or(t, "vert", s.tol.vert);
        if (!(s.tol.geo > 0 && s.tol.sep > 0 && s.tol.ang > 0 && s.tol.vert >= 0)) {
            throw Error(ErrorCode::InvalidArgument, "tolerances must be positive");
        }
    }
    if (cfg.contains("budgets")) {
        const json& b = cfg.at("budgets");
        reject_unknown(b, {"max_word_length", "max_words"}, "budgets");
        s.budgets.max_word_length = get_or(b, "max_word_length", s.budgets.max_word_length);
        s.budgets.max_words = get_or(b, "max_words", s.budgets.max_words);
    }
    s.seed = get_or<std::uint64_t>(cfg, "seed", s.seed);
    if (cfg.contains("depth")) s.depth = get_or(cfg, "depth", 0);
    if (opts.seed) s.seed = *opts.seed;
    if (opts.depth) s.depth = *opts.depth;
    if (opts.budget) s.budgets.max_words = *opts.budget;
    if (s.budgets.max_words == 0 || s.budgets.max_word_length == 0) {
        throw Error(ErrorCode::InvalidArgument, "budgets must be positive");
    }
    if (s.depth && *s.depth < 1) throw Error(ErrorCode::InvalidArgument, "depth must be positive");
    return s;
}

// A polygon command config is either a bare polygon spec or a run config
// {"polygon": ..., "tolerances", "budgets", "seed", "depth", "start", "word",
// "n_future", "n_past"}.
struct PolygonRun {
    PolygonSpec spec;
    Settings settings;
    json extra = json::object();
};

PolygonRun polygon_run(const std::string& text, const RunOptions& opts) {
    const json cfg = parse_json(text);
    PolygonRun run;
    if (cfg.is_object() && cfg.contains("polygon")) {
        reject_unknown(cfg, {"polygon", "tolerances", "budgets", "seed", "depth", "start", "word", "n_future", "n_past"},
                       "run config");
        run.spec = polygon_from(cfg.at("polygon"));
        run.settings = settings_from(cfg, opts);
        run.extra = cfg;
    } else {
        run.spec = parse_polygon_spec(text);
        run.settings = settings_from(json::object(), opts);
    }
    return run;
}

OutputFormat pick_format(const RunOptions& opts, OutputFormat fallback, std::initializer_list<OutputFormat> allowed,
                         const char* command) {
    const OutputFormat f = opts.format.value_or(fallback);
    for (OutputFormat a : allowed) {
        if (a == f) return f;
    }
    throw Error(ErrorCode::InvalidArgument,
                std::string(command) + " does not support --format " + format_name(f));
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json point_json(Complex z) { return json::array({z.real(), z.imag()}); }

json arc_json(int index, const BaseArc& a) {
    return {{"index", index},
            {"theta_rad", a.geodesic.theta().radians()},
            {"phi_rad", a.geodesic.phi().radians()},
            {"side", a.hit_side},
            {"hit", point_json(a.hit_point.z())}};
}

json truth_json(Truth t) {
    if (t == Truth::Unknown) return nullptr;
    return t == Truth::True;
}

json distance_json(const DyadicDistance& d) {
    json j = {{"distance_exponent", d.exponent ? json(*d.exponent) : json(nullptr)},
              {"distance", d.value()},
              {"text", d.text()},
              {"max_m", d.max_m},
              {"proven_equal", d.proven_equal}};
    if (d.witness) {
        j["witness"] = *d.witness;
        j["witness_in"] = d.witness_in_first ? "x" : "y";
    }
    return j;
}

// ---------------------------------------------------------------- subshifts

SubshiftHandle full_shift(int k) {
    SubshiftSpec s;
    s.closure.k = k;
    return SubshiftHandle::sft(s, "full_shift_" + std::to_string(k));
}

SubshiftHandle source_handle(const json& src, const std::string& where) {
    if (!src.is_object() || src.size() < 1) throw Error(ErrorCode::ParseError, where + " must be an object");
    if (src.contains("sft")) {
        reject_unknown(src, {"sft", "name"}, where);
        return SubshiftHandle::sft(parse_subshift_spec(src.at("sft").dump()), get_or<std::string>(src, "name", "sft"));
    }
    if (src.contains("polygon")) {
        reject_unknown(src, {"polygon", "name"}, where);
        const PolygonSpec p = polygon_from(src.at("polygon"));
        validate(p);
        return SubshiftHandle::sft(forbidden_set(p), get_or<std::string>(src, "name", "polygon"));
    }
    if (src.contains("periodic_orbit")) {
        reject_unknown(src, {"periodic_orbit", "k"}, where);
        return SubshiftHandle::periodic_orbit(get_or<std::string>(src, "periodic_orbit", ""), get_or(src, "k", 2));
    }
    if (src.contains("builtin")) {
        reject_unknown(src, {"builtin", "k"}, where);
        const auto name = get_or<std::string>(src, "builtin", "");
        if (name == "even_shift") return SubshiftHandle::even_shift();
        if (name == "single_defect" || name == "ttoct_limit") return SubshiftHandle::single_defect();
        if (name == "full_shift") return full_shift(get_or(src, "k", 2));
        if (name == "golden_mean") {
            SubshiftSpec s;
            s.closure = {2, {"22"}};
            return SubshiftHandle::sft(s, "golden_mean");
        }
        throw Error(ErrorCode::ParseError, "unknown builtin shift '" + name + "'");
    }
    throw Error(ErrorCode::ParseError, where + " needs one of sft, polygon, periodic_orbit, builtin");
}

}  // namespace

// ---------------------------------------------------------------- validate

CommandOutput cmd_validate(const std::string& config, const RunOptions& opts) {
    const PolygonRun run = polygon_run(config, opts);
    const OutputFormat fmt = pick_format(opts, OutputFormat::Json, {OutputFormat::Json, OutputFormat::Text}, "validate");
    const CheckedPolygon p = validate(run.spec, run.settings.tol);
    json vertices = json::array();
    json angles = json::array();
    for (int i = 1; i <= p.k(); ++i) {
        const auto& v = p.vertex(i);
        json jv = {{"kind", v.ideal ? "ideal" : "rational"}, {"point", point_json(v.point)}};
        if (!v.ideal) jv["lambda"] = v.lambda;
        vertices.push_back(jv);
        angles.push_back(p.interior_angle(i));
    }
    const json report = {{"valid", true},
                         {"class", polygon_class_name(p.polygon_class())},
                         {"k", p.k()},
                         {"vertices", vertices},
                         {"angles", angles},
                         {"area", p.area()},
                         {"area_over_pi", p.area() / kPi}};
    CommandOutput out;
    if (fmt == OutputFormat::Json) {
        out.body = dump(report);
    } else {
        std::ostringstream t;
        t.precision(17);
        t << "class " << polygon_class_name(p.polygon_class()) << "\nk " << p.k() << "\narea " << p.area() << "\n";
        for (int i = 1; i <= p.k(); ++i) t << "angle v" << i << ' ' << p.interior_angle(i) << '\n';
        out.body = t.str();
    }
    return out;
}

// ---------------------------------------------------------------- simulate

namespace {

BaseArc random_start(const CheckedPolygon& p, std::uint64_t seed, const Tolerances& tol) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(0.0, kTwoPi);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        const double a = angle(rng);
        const double b = angle(rng);
        try {
            return make_arc(p, DirectedGeodesic::from_endpoints(BoundaryAngle(a), BoundaryAngle(b), tol), tol);
        } catch (const Error&) {
            // Chords missing the polygon are resampled.
        }
    }
    throw Error(ErrorCode::NoIntersection, "no sampled geodesic crosses the polygon");
}

}  // namespace

CommandOutput cmd_simulate(const std::string& config, const RunOptions& opts) {
    const PolygonRun run = polygon_run(config, opts);
    const OutputFormat fmt =
        pick_format(opts, OutputFormat::Json, {OutputFormat::Json, OutputFormat::Csv, OutputFormat::Text}, "simulate");
    const Tolerances& tol = run.settings.tol;
    const CheckedPolygon p = validate(run.spec, tol);

    std::optional<double> theta = opts.theta;
    std::optional<double> phi = opts.phi;
    std::optional<std::string> word = opts.word;
    if (run.extra.contains("start")) {
        const json& st = run.extra.at("start");
        reject_unknown(st, {"theta_rad", "phi_rad"}, "start");
        if (!theta && st.contains("theta_rad")) theta = get_or(st, "theta_rad", 0.0);
        if (!phi && st.contains("phi_rad")) phi = get_or(st, "phi_rad", 0.0);
    }
    if (!word && !theta && run.extra.contains("word")) word = get_or<std::string>(run.extra, "word", "");
    const int n_future = opts.n_future.value_or(get_or(run.extra, "n_future", 10));
    const int n_past = opts.n_past.value_or(get_or(run.extra, "n_past", 0));
    if (n_future < 0 || n_past < 0) throw Error(ErrorCode::InvalidArgument, "window lengths must be non-negative");
    if (theta.has_value() != phi.has_value()) throw Error(ErrorCode::InvalidArgument, "give both theta and phi");

    json start_json;
    SimulationResult result;
    try {
        const BaseArc start = [&] {
            if (theta) {
                start_json = {{"source", "angles"}, {"theta_rad", BoundaryAngle(*theta).radians()},
                              {"phi_rad", BoundaryAngle(*phi).radians()}};
                return make_arc(p, DirectedGeodesic::from_endpoints(BoundaryAngle(*theta), BoundaryAngle(*phi), tol),
                                tol);
            }
            if (word) {
                start_json = {{"source", "periodic_word"}, {"word", *word}};
                return decode_periodic(p, *word, tol).at(0);
            }
            start_json = {{"source", "seed"}, {"seed", run.settings.seed}};
            return random_start(p, run.settings.seed, tol);
        }();
        start_json["theta_rad"] = start.geodesic.theta().radians();
        start_json["phi_rad"] = start.geodesic.phi().radians();
        result = simulate(p, start, n_future, n_past, tol);
    } catch (const Error& e) {
        // A start aimed at a vertex terminates at index 0 with an empty window.
        const bool vertex_start = theta && (e.code() == ErrorCode::VertexHit || e.code() == ErrorCode::AsymptoticToIdealVertex);
        if (!vertex_start) throw;
        result.termination = classify_termination(e, 0);
    }

    CommandOutput out;
    json termination = nullptr;
    if (result.termination) {
        const auto& t = *result.termination;
        termination = {{"kind", termination_name(t.kind)}, {"reason", error_code_name(t.cause)}, {"index", t.index},
                       {"detail", t.detail}};
        out.warnings.push_back(std::string(error_code_name(t.cause)) + " at index " + std::to_string(t.index));
    }
    const std::string code = code_text(result.window);
    switch (fmt) {
        case OutputFormat::Csv:
            out.body = trajectory_csv(result.window);
            out.attachments.emplace_back(".code.txt", code);
            break;
        case OutputFormat::Text: out.body = code; break;
        default: {
            json arcs = json::array();
            for (int i = result.window.first_index(); i <= result.window.last_index(); ++i) {
                arcs.push_back(arc_json(i, result.window.at(i)));
            }
            const json report = {{"start", start_json},
                                 {"first_index", result.window.first_index()},
                                 {"last_index", result.window.last_index()},
                                 {"code", code.substr(0, code.size() - 1)},
                                 {"arcs", arcs},
                                 {"termination", termination},
                                 {"warnings", out.warnings}};
            out.body = dump(report);
        }
    }
    return out;
}

// ---------------------------------------------------------------- decode

CommandOutput cmd_decode(const std::string& config, const RunOptions& opts) {
    const PolygonRun run = polygon_run(config, opts);
    const OutputFormat fmt =
        pick_format(opts, OutputFormat::Json, {OutputFormat::Json, OutputFormat::Csv, OutputFormat::Text}, "decode");
    std::optional<std::string> word = opts.word;
    if (!word && run.extra.contains("word")) word = get_or<std::string>(run.extra, "word", "");
    if (!word || word->empty()) throw Error(ErrorCode::InvalidArgument, "decode needs a periodic word (--word)");
    const CheckedPolygon p = validate(run.spec, run.settings.tol);
    const TrajectoryWindow orbit = decode_periodic(p, *word, run.settings.tol);
    CommandOutput out;
    if (fmt == OutputFormat::Csv) {
        out.body = trajectory_csv(orbit);
    } else if (fmt == OutputFormat::Text) {
        out.body = code_text(orbit);
    } else {
        json arcs = json::array();
        for (int i = orbit.first_index(); i <= orbit.last_index(); ++i) arcs.push_back(arc_json(i, orbit.at(i)));
        const std::string code = code_text(orbit);
        out.body = dump({{"word", *word},
                         {"theta_rad", orbit.at(0).geodesic.theta().radians()},
                         {"phi_rad", orbit.at(0).geodesic.phi().radians()},
                         {"code", code.substr(0, code.size() - 1)},
                         {"arcs", arcs}});
    }
    return out;
}

// ---------------------------------------------------------------- analyze

CommandOutput cmd_analyze(const std::string& config, const RunOptions& opts) {
    const PolygonRun run = polygon_run(config, opts);
    pick_format(opts, OutputFormat::Json, {OutputFormat::Json}, "analyze");
    const Settings& st = run.settings;
    const CheckedPolygon p = validate(run.spec, st.tol);
    const SubshiftSpec spec = forbidden_set(run.spec);
    const SubshiftHandle closure = SubshiftHandle::sft(spec, "closure");
    const SftLanguage& lang = *closure.language();
    const int depth = st.depth.value_or(8);

    json pairs = json::array();
    for (const auto& [a, b] : spec.exclusion_pairs) pairs.push_back({a, b});
    json counts = json::array();
    const int count_max = static_cast<int>(std::min<std::size_t>(10, st.budgets.max_word_length));
    for (int n = 1; n <= count_max; ++n) counts.push_back(lang.count(n));

    const EntropyReport e = entropy(spec, st.budgets);
    const auto transitive = check_property(closure, Property::Transitive, depth, CheckMode::Auto, st.budgets);
    const auto mixing = check_property(closure, Property::Mixing, depth, CheckMode::Auto, st.budgets);

    // Connector construction on seeded random pairs of 3-letter words.
    json sample = nullptr;
    if (mixing.value == Truth::True) {
        const auto words = lang.enumerate(3, st.budgets.max_words);
        std::mt19937_64 rng(st.seed);
        std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
        int succeeded = 0;
        constexpr int kPairs = 10;
        json failures = json::array();
        for (int i = 0; i < kPairs; ++i) {
            const Word& u = words[pick(rng)];
            const Word& v = words[pick(rng)];
            if (find_connector_family(lang, u, v, 10, 60)) {
                ++succeeded;
            } else {
                failures.push_back({u, v});
            }
        }
        sample = {{"seed", st.seed}, {"pairs", kPairs}, {"consecutive_lengths", 10}, {"succeeded", succeeded},
                  {"failures", failures}};
    }

    json report = {{"k", spec.k()},
                   {"class", polygon_class_name(p.polygon_class())},
                   {"area", p.area()},
                   {"forbidden", spec.closure.words},
                   {"exclusion_pairs", pairs},
                   {"block_length", lang.block_length()},
                   {"essential_vertices", lang.graph().size()},
                   {"perron", e.perron ? json(*e.perron) : json(nullptr)},
                   {"entropy", e.log_perron},
                   {"slope_estimate", e.slope_estimate ? json(*e.slope_estimate) : json(nullptr)},
                   {"slope_max_n", e.slope_max_n},
                   {"word_counts", counts},
                   {"transitive", truth_json(transitive.value)},
                   {"mixing", truth_json(mixing.value)},
                   {"period", mixing.period},
                   {"witnesses", {{"transitive", transitive.witnesses}, {"mixing", mixing.witnesses}}},
                   {"connector_sample", sample}};
    CommandOutput out;
    out.body = dump(report);
    return out;
}

// ---------------------------------------------------------------- distance

CommandOutput cmd_distance(const std::string& config, const RunOptions& opts) {
    const json cfg = parse_json(config);
    reject_unknown(cfg, {"x", "y", "pairs", "max_m", "minimize_alphabet", "budgets", "seed", "depth", "tolerances"},
                   "distance config");
    const OutputFormat fmt = pick_format(opts, OutputFormat::Json,
                                         {OutputFormat::Json, OutputFormat::Csv, OutputFormat::Text}, "distance");
    const Settings st = settings_from(cfg, opts);
    const int max_m = get_or(cfg, "max_m", st.depth.value_or(10));
    const bool minimize = get_or(cfg, "minimize_alphabet", false);

    std::vector<std::pair<json, json>> sources;
    if (cfg.contains("pairs")) {
        for (const auto& pr : cfg.at("pairs")) {
            reject_unknown(pr, {"x", "y"}, "pair");
            sources.emplace_back(pr.at("x"), pr.at("y"));
        }
    }
    if (cfg.contains("x") || cfg.contains("y")) {
        if (!cfg.contains("x") || !cfg.contains("y")) throw Error(ErrorCode::ParseError, "give both x and y");
        sources.emplace_back(cfg.at("x"), cfg.at("y"));
    }
    if (sources.empty()) throw Error(ErrorCode::ParseError, "distance config names no pair");

    json rows = json::array();
    std::ostringstream csv;
    std::ostringstream text;
    csv << "x,y,distance_exponent,distance,witness\n";
    for (const auto& [jx, jy] : sources) {
        const SubshiftHandle x = source_handle(jx, "x");
        const SubshiftHandle y = source_handle(jy, "y");
        const DyadicDistance d = minimize ? alphabet_minimized_distance(x, y, max_m, st.budgets)
                                          : subshift_hausdorff(x, y, max_m, st.budgets);
        json row = distance_json(d);
        row["x"] = x.name();
        row["y"] = y.name();
        rows.push_back(row);
        csv << x.name() << ',' << y.name() << ',' << (d.exponent ? std::to_string(*d.exponent) : "inf") << ','
            << d.text() << ',' << d.witness.value_or("") << '\n';
        text << "d_H(" << x.name() << ", " << y.name() << ") = " << d.text();
        if (!d.exponent) text << (d.proven_equal ? " (identical)" : " (equal through max_m)");
        text << '\n';
    }
    CommandOutput out;
    if (fmt == OutputFormat::Csv) {
        out.body = csv.str();
    } else if (fmt == OutputFormat::Text) {
        out.body = text.str();
    } else {
        out.body = dump({{"minimize_alphabet", minimize}, {"rows", rows}});
    }
    return out;
}

// ---------------------------------------------------------------- converge

namespace {

json verdict_json(const PropertyVerdict& v) {
    return {{"property", property_name(v.property)},
            {"value", truth_json(v.value)},
            {"depth", v.depth},
            {"witnesses", v.witnesses},
            {"note", v.note}};
}

json limit_row_json(const LimitRow& r) {
    json j = distance_json(r.distance);
    j["n"] = r.index;
    j["name"] = r.name;
    j["transitive"] = truth_json(r.transitive);
    j["mixing"] = truth_json(r.mixing);
    j["chain_transitive"] = truth_json(r.chain_transitive);
    j["entropy"] = r.entropy ? json(*r.entropy) : json(nullptr);
    return j;
}

}  // namespace

CommandOutput cmd_converge(const std::string& config, const RunOptions& opts) {
    const json cfg = parse_json(config);
    if (!cfg.is_object() || !cfg.contains("family")) throw Error(ErrorCode::ParseError, "converge config needs a family");
    const auto family = get_or<std::string>(cfg, "family", "");
    const OutputFormat fmt =
        pick_format(opts, OutputFormat::Csv, {OutputFormat::Csv, OutputFormat::Json}, "converge");
    const Settings st = settings_from(cfg, opts);

    std::vector<SubshiftHandle> sequence;
    std::optional<SubshiftHandle> limit;
    std::vector<PolygonSpec> polygons;
    std::optional<PolygonSpec> polygon_limit;
    int n_max = 0;
    int max_m = 0;
    const std::initializer_list<const char*> common = {"family", "n_max", "max_m", "depth", "budgets", "seed", "tolerances"};
    auto allow = [&](std::initializer_list<const char*> extra) {
        std::vector<const char*> all(common);
        all.insert(all.end(), extra);
        for (const auto& item : cfg.items()) {
            bool known = false;
            for (const char* a : all) known = known || item.key() == a;
            if (!known) throw Error(ErrorCode::ParseError, "unknown field '" + item.key() + "' for family " + family);
        }
    };

    if (family == "even_shift") {
        allow({});
        n_max = get_or(cfg, "n_max", 12);
        max_m = get_or(cfg, "max_m", 14);
        const auto fam = even_shift_family();
        for (int j = 1; j <= n_max; ++j) sequence.push_back(sft_approximation(fam, j));
        limit = SubshiftHandle::even_shift();
    } else if (family == "ttoct") {
        allow({});
        n_max = get_or(cfg, "n_max", 8);
        max_m = get_or(cfg, "max_m", 10);
        for (int n = 1; n <= n_max; ++n) {
            sequence.push_back(SubshiftHandle::sft(single_defect_approximant(n), "ttoct[" + std::to_string(n) + "]"));
        }
        limit = SubshiftHandle::single_defect();
    } else if (family == "padding") {
        allow({"k", "base", "a", "b", "n0"});
        n_max = get_or(cfg, "n_max", 8);
        max_m = get_or(cfg, "max_m", 10);
        const auto fam = padding_family(get_or(cfg, "k", 2), get_or(cfg, "base", std::vector<Word>{}),
                                        get_or(cfg, "a", 1), get_or(cfg, "b", 2), get_or(cfg, "n0", 0));
        for (int j = 1; j <= n_max; ++j) sequence.push_back(sft_approximation(fam, j));
        SubshiftSpec base;
        base.closure = {fam.k, fam.base};
        limit = SubshiftHandle::sft(base, "padding_limit");
    } else if (family == "polygon_sequence") {
        allow({"construction", "sequence", "limit"});
        max_m = get_or(cfg, "max_m", 10);
        const auto construction = get_or<std::string>(cfg, "construction", "");
        if (construction == "cusp_opening") {
            n_max = get_or(cfg, "n_max", 6);
            for (int n = 1; n <= n_max; ++n) polygons.push_back(cusp_opening_triangle(n));
            PolygonSpec lim = cusp_opening_triangle(1);
            lim.polygon_class = PolygonClass::Ideal;
            lim.vertices[2] = VertexSpec::ideal();
            polygon_limit = lim;
        } else if (construction.empty()) {
            if (!cfg.contains("sequence") || !cfg.contains("limit")) {
                throw Error(ErrorCode::ParseError, "polygon_sequence needs a construction or sequence and limit");
            }
            for (const auto& j : cfg.at("sequence")) polygons.push_back(polygon_from(j));
            polygon_limit = polygon_from(cfg.at("limit"));
            n_max = static_cast<int>(polygons.size());
        } else {
            throw Error(ErrorCode::ParseError, "unknown construction '" + construction + "'");
        }
        validate(*polygon_limit, st.tol);
        limit = SubshiftHandle::sft(forbidden_set(*polygon_limit), "limit");
        for (std::size_t i = 0; i < polygons.size(); ++i) {
            validate(polygons[i], st.tol);
            sequence.push_back(SubshiftHandle::sft(forbidden_set(polygons[i]), "polygon[" + std::to_string(i + 1) + "]"));
        }
    } else if (family == "custom") {
        allow({"sequence", "limit"});
        max_m = get_or(cfg, "max_m", 10);
        if (!cfg.contains("sequence") || !cfg.contains("limit")) throw Error(ErrorCode::ParseError, "custom needs sequence and limit");
        for (const auto& j : cfg.at("sequence")) sequence.push_back(source_handle(j, "sequence element"));
        limit = source_handle(cfg.at("limit"), "limit");
        n_max = static_cast<int>(sequence.size());
    } else {
        throw Error(ErrorCode::ParseError, "unknown family '" + family + "'");
    }
    if (n_max < 1 || max_m < 1) throw Error(ErrorCode::InvalidArgument, "n_max and max_m must be positive");

    const int depth = st.depth.value_or(8);
    const LimitReport report = limit_experiment(sequence, *limit, depth, max_m, st.budgets);
    CommandOutput out;
    if (fmt == OutputFormat::Csv) {
        out.body = convergence_csv(report);
        if (!polygons.empty()) {
            out.attachments.emplace_back(".polygons.csv",
                                         polygon_convergence_csv(polygon_convergence(polygons, *polygon_limit, max_m, st.budgets)));
        }
        return out;
    }
    json rows = json::array();
    for (const auto& r : report.rows) rows.push_back(limit_row_json(r));
    json verdicts = json::array();
    for (const auto& v : report.limit_verdicts) verdicts.push_back(verdict_json(v));
    json doc = {{"family", family}, {"depth", depth}, {"max_m", max_m}, {"rows", rows},
                {"limit", limit_row_json(report.limit)}, {"limit_verdicts", verdicts}};
    if (!polygons.empty()) {
        json prow = json::array();
        for (const auto& r : polygon_convergence(polygons, *polygon_limit, max_m, st.budgets)) {
            json j = distance_json(r.distance);
            j["n"] = r.index;
            j["vertices"] = r.vertex_summary;
            j["forbidden_added"] = r.forbidden_added;
            j["forbidden_removed"] = r.forbidden_removed;
            prow.push_back(j);
        }
        doc["polygons"] = prow;
    }
    out.body = dump(doc);
    return out;
}

// ---------------------------------------------------------------- render

CommandOutput cmd_render(const std::string& config, const RunOptions& opts) {
    const PolygonRun run = polygon_run(config, opts);
    pick_format(opts, OutputFormat::Svg, {OutputFormat::Svg}, "render");
    const CheckedPolygon p = validate(run.spec, run.settings.tol);
    std::optional<std::string> word = opts.word;
    if (!word && run.extra.contains("word")) word = get_or<std::string>(run.extra, "word", "");
    std::vector<int> labels;
    if (word && !word->empty()) {
        check_alphabet(*word, p.k());
        const auto base = labels_of(*word);
        const std::size_t length = run.settings.depth ? static_cast<std::size_t>(*run.settings.depth) : base.size();
        for (std::size_t i = 0; i < length; ++i) labels.push_back(base[i % base.size()]);
    }
    CommandOutput out;
    out.body = render_svg(p, unfolding_scene(p, labels, word.value_or("")));
    return out;
}

}  // namespace hypbill
