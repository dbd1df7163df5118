// Acceptance harness: one PASS/FAIL line per criterion, tolerances fixed here.
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "hypbill/shiftspace.hpp"
#include "support.hpp"

using namespace hypbill;
using hbtest::Rng;
namespace fs = std::filesystem;

namespace {

constexpr double kPerronTol = 1e-9;
constexpr double kAreaTol = 1e-12;
constexpr double kIdentityTol = 1e-9;
constexpr double kEndpointTol = 1e-8;
constexpr double kBounceTol = 1e-9;
constexpr double kSpecularTol = 1e-9;
constexpr double kMetricSlack = 1e-12;
constexpr double kC1Seconds = 5.0;
constexpr double kC4Seconds = 60.0;

struct Outcome {
    bool pass = true;
    std::string detail;
    std::vector<std::string> notes;

    void fail(const std::string& why) {
        if (pass || notes.size() < 8) notes.push_back(why);
        pass = false;
    }
};

struct Options {
    std::string cli;
    std::string configs;
    std::string workdir = ".";
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(3);
    os << x;
    return os.str();
}

SubshiftSpec sft(int k, std::vector<Word> forbidden) {
    SubshiftSpec s;
    s.closure = ForbiddenSet{k, std::move(forbidden)};
    return s;
}

std::set<Word> as_set(const std::vector<Word>& v) { return {v.begin(), v.end()}; }

Word alternation(int a, int b, int length) {
    Word w;
    for (int i = 0; i < length; ++i) w.push_back(letter_char(i % 2 == 0 ? a : b));
    return w;
}

Outcome ideal_spectrum() {
    Outcome o;
    const auto t0 = Clock::now();
    double worst = 0.0;
    for (int k = 3; k <= 8; ++k) {
        const auto s = forbidden_set(hbtest::ideal_spec(k));
        const auto e = entropy(s);
        if (!e.perron) {
            o.fail("k=" + std::to_string(k) + ": no Perron value");
            continue;
        }
        worst = std::max(worst, std::abs(*e.perron - (k - 1)));
        if (std::abs(*e.perron - (k - 1)) > kPerronTol) o.fail("k=" + std::to_string(k) + ": perron " + fmt(*e.perron));
        if (std::abs(e.log_perron - std::log(k - 1.0)) > kPerronTol) o.fail("k=" + std::to_string(k) + ": entropy");
        const SftLanguage lang(s.closure);
        for (int n = 2; n <= 10; ++n) {
            if (lang.count(n + 1) != (k - 1) * lang.count(n)) {
                o.fail("k=" + std::to_string(k) + ": B_" + std::to_string(n + 1) + "/B_" + std::to_string(n));
            }
        }
    }
    const double t = seconds_since(t0);
    if (t >= kC1Seconds) o.fail("runtime " + fmt(t) + " s");
    o.detail = "k=3..8, max |perron-(k-1)| = " + fmt(worst) + ", " + fmt(t) + " s";
    return o;
}

Outcome forbidden_lists() {
    Outcome o;
    for (int k = 3; k <= 8; ++k) {
        std::set<Word> repeats;
        for (int i = 1; i <= k; ++i) repeats.insert(Word(2, letter_char(i)));
        if (as_set(forbidden_set(hbtest::ideal_spec(k)).closure.words) != repeats) o.fail("ideal k=" + std::to_string(k));
    }
    const std::set<Word> expected{"11", "22", "33", "12121", "21212", "23232", "32323", "13131", "31313"};
    if (as_set(forbidden_set(hbtest::compact_spec({4, 4, 4})).closure.words) != expected) o.fail("lambda=4 triangle");
    o.detail = "ideal k=3..8 and the (4,4,4) triangle";
    return o;
}

Outcome mixing() {
    Outcome o;
    std::vector<std::pair<std::string, PolygonSpec>> cases;
    for (int k = 3; k <= 8; ++k) cases.emplace_back("ideal k=" + std::to_string(k), hbtest::ideal_spec(k));
    cases.emplace_back("compact (4,4,4)", hbtest::compact_spec({4, 4, 4}));
    for (int l = 2; l <= 4; ++l) cases.emplace_back("semi-ideal lambda=" + std::to_string(l), hbtest::semi_ideal_spec(l));
    Rng r(9001);
    int pairs = 0;
    for (const auto& [name, spec] : cases) {
        const auto s = forbidden_set(spec);
        if (check_property(SubshiftHandle::sft(s), Property::Mixing, 8).value != Truth::True) o.fail(name + ": not mixing");
        const auto block = static_cast<int>(std::max<std::size_t>(2, s.closure.max_length()));
        const auto g = essentialize(higher_block(s, block));
        if (is_irreducible(g).value != Truth::True || is_aperiodic(g).value != Truth::True) {
            o.fail(name + ": essential graph not aperiodic-irreducible");
        }
        const SftLanguage lang(s.closure);
        for (int trial = 0; trial < 50; ++trial) {
            auto pick = [&] {
                const auto words = lang.enumerate(r.integer(1, 5), 100000);
                return words[static_cast<std::size_t>(r.integer(0, static_cast<int>(words.size()) - 1))];
            };
            const Word u = pick();
            const Word v = pick();
            ++pairs;
            const auto fam = find_connector_family(lang, u, v, 10, 80);
            if (!fam || fam->connectors.size() != 10u) {
                o.fail(name + ": no connector family for " + u + " / " + v);
                continue;
            }
            for (std::size_t i = 0; i < fam->connectors.size(); ++i) {
                const Word& w = fam->connectors[i];
                const bool lengths = static_cast<int>(w.size()) == fam->n_min + static_cast<int>(i);
                if (!lengths || !is_admissible(u + w + v, s, false).admissible || !lang.contains(u + w + v)) {
                    o.fail(name + ": connector " + w + " fails for " + u + " / " + v);
                }
            }
        }
    }
    o.detail = std::to_string(cases.size()) + " closures, " + std::to_string(pairs) + " word pairs x 10 lengths";
    return o;
}

Outcome conjugacy() {
    Outcome o;
    const auto t0 = Clock::now();
    Rng r(9002);
    std::string summary;
    for (const auto& [name, spec] : hbtest::class_representatives()) {
        const auto p = validate(spec);
        const auto rules = forbidden_set(spec);
        const SftLanguage lang(rules.closure);
        int ok = 0;
        int total = 0;
        std::map<std::string, int> reasons;
        Word example;
        while (total < 100) {
            const Word w = hbtest::random_periodic_word(rules, 12, r);
            if (!lang.contains_periodic(w)) continue;
            ++total;
            try {
                const auto orbit = decode_periodic(p, w);
                const auto run = simulate(p, orbit.at(0), static_cast<int>(w.size()) - 1, 0);
                if (run.termination) {
                    ++reasons["terminated"];
                    continue;
                }
                const Word coded = code(run.window).letters;
                if (!is_cyclic_rotation(coded, w)) {
                    ++reasons["code mismatch"];
                    continue;
                }
                const auto again = decode_periodic(p, coded);
                const auto& a = again.at(0).geodesic;
                const auto& b = orbit.at(0).geodesic;
                if (boundary_distance(a.theta(), b.theta()) > kEndpointTol ||
                    boundary_distance(a.phi(), b.phi()) > kEndpointTol) {
                    ++reasons["endpoint drift"];
                    continue;
                }
                ++ok;
            } catch (const Error& e) {
                ++reasons[error_code_name(e.code())];
                if (example.empty()) example = w;
            }
        }
        summary += (summary.empty() ? "" : ", ") + name + " " + std::to_string(ok) + "/" + std::to_string(total);
        if (ok < total) {
            std::string why;
            for (const auto& [reason, n] : reasons) why += " " + reason + " x" + std::to_string(n);
            o.fail(name + ": " + std::to_string(total - ok) + " words fail:" + why + (example.empty() ? "" : " (e.g. " + example + ")"));
        }
    }
    const double t = seconds_since(t0);
    if (t >= kC4Seconds) o.fail("runtime " + fmt(t) + " s");
    o.detail = summary + ", " + fmt(t) + " s";
    return o;
}

Outcome bounce_validation() {
    Outcome o;
    Rng r(9003);
    const auto reps = hbtest::class_representatives();
    std::vector<CheckedPolygon> polys;
    for (const auto& [name, spec] : reps) polys.push_back(validate(spec));
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const auto& p = polys[static_cast<std::size_t>(trial % 3)];
        const auto a = hbtest::random_arc(p, r);
        const auto& side = p.side(a.hit_side);
        const auto [tf, pf] = frame_bounce(side, a.geodesic);
        const auto [tm, pm] = mobius_bounce(side, a.geodesic);
        const double d = std::max(boundary_distance(tf, tm), boundary_distance(pf, pm));
        worst = std::max(worst, d);
        if (d > kBounceTol) o.fail("frame vs reflection differ by " + fmt(d));
    }
    double specular = 0.0;
    int bounces = 0;
    for (const auto& p : polys) {
        for (int trial = 0; trial < 100; ++trial) {
            const auto run = simulate(p, hbtest::random_arc(p, r), 20, 0);
            const auto& w = run.window;
            for (int i = w.first_index(); i < w.last_index(); ++i) {
                const auto& in = w.at(i);
                const auto& side = p.side(in.hit_side);
                const double d = std::abs(angle_at(in.geodesic, side, in.hit_point) -
                                          angle_at(w.at(i + 1).geodesic, side, in.hit_point));
                specular = std::max(specular, d);
                ++bounces;
                if (d > kSpecularTol) o.fail("specular defect " + fmt(d));
            }
        }
    }
    o.detail = "1000 arcs, max endpoint gap " + fmt(worst) + "; " + std::to_string(bounces) + " bounces, max angle gap " +
               fmt(specular);
    return o;
}

Outcome geometry_constants() {
    Outcome o;
    if (std::abs(area(validate(hbtest::ideal_spec(3))) - kPi) > kAreaTol) o.fail("ideal triangle area");
    for (int k = 1; k <= 6; ++k) {
        if (std::abs(area(validate(hbtest::ideal_spec(k + 2))) - k * kPi) > kAreaTol) {
            o.fail("ideal " + std::to_string(k + 2) + "-gon area");
        }
    }
    try {
        validate(hbtest::compact_spec({3, 3, 3}));
        o.fail("(3,3,3) accepted");
    } catch (const Error& e) {
        if (e.code() != ErrorCode::DegenerateArea) o.fail("(3,3,3) rejected with " + std::string(error_code_name(e.code())));
    }
    double worst = 0.0;
    for (int lambda = 2; lambda <= 5; ++lambda) {
        const auto p = validate(hbtest::semi_ideal_spec(lambda));
        const auto copies = unfold(p, labels_of(alternation(1, 2, 2 * lambda)));
        const double d = copies.back().placement.distance_to(DiskIsometry::identity());
        worst = std::max(worst, d);
        if (d > kIdentityTol) o.fail("lambda=" + std::to_string(lambda) + ": composite off identity by " + fmt(d));
    }
    o.detail = "areas, (3,3,3) rejection, 2 lambda reflections max defect " + fmt(worst);
    return o;
}

Outcome shift_equivariance() {
    Outcome o;
    Rng r(9007);
    int runs = 0;
    for (const auto& [name, spec] : hbtest::class_representatives()) {
        const auto p = validate(spec);
        for (int done = 0; done < 100;) {
            const auto run = simulate(p, hbtest::random_arc(p, r), 20, 0);
            if (run.termination) continue;
            ++done;
            ++runs;
            const auto advanced = simulate(p, run.window.at(1), 19, 0);
            if (advanced.termination || code(advanced.window).letters != code(run.window).letters.substr(1)) {
                o.fail(name + ": advanced window codes " + code(advanced.window).letters);
            }
        }
    }
    o.detail = std::to_string(runs) + " trajectories of length 20";
    return o;
}

Outcome subshift_suite() {
    Outcome o;
    const auto full = SubshiftHandle::sft(sft(2, {}));
    const auto golden = SubshiftHandle::sft(sft(2, {"11"}));
    const double fg = subshift_hausdorff(full, golden, 8).value();
    if (fg != 0.5) o.fail("(a) full vs golden = " + fmt(fg));

    const auto fam = even_shift_family();
    std::vector<SubshiftHandle> seq;
    for (int n = 1; n <= 12; ++n) seq.push_back(sft_approximation(fam, n));
    const auto even = limit_experiment(seq, SubshiftHandle::even_shift(), 8, 14);
    double previous = 2.0;
    for (const auto& row : even.rows) {
        const double d = row.distance.value();
        if (!(d < previous)) o.fail("(b) distance not strictly decreasing at n=" + std::to_string(row.index));
        previous = d;
        if (row.transitive != Truth::True) o.fail("(b) X_" + std::to_string(row.index) + " not transitive");
    }
    const auto& last = even.rows.back().distance;
    if (!last.exponent || *last.exponent < 6) o.fail("(b) exponent at n=12 below 6");

    std::vector<SubshiftHandle> tt;
    for (int n = 1; n <= 8; ++n) tt.push_back(SubshiftHandle::sft(single_defect_approximant(n)));
    const auto three = limit_experiment(tt, SubshiftHandle::single_defect(), 8, 8);
    for (const auto& row : three.rows) {
        if (row.transitive != Truth::True) o.fail("(c) approximant " + std::to_string(row.index) + " not transitive");
    }
    if (three.limit.transitive != Truth::False) o.fail("(c) limit transitive is not false");
    if (three.limit.chain_transitive != Truth::True) o.fail("(c) limit chain transitive is not true");

    const std::vector<std::tuple<int, std::vector<Word>, std::vector<Word>>> pairs{
        {2, {}, {"11"}},
        {3, {"11", "22", "33"}, {"11", "22", "33", "12121", "21212", "23232", "32323", "13131", "31313"}},
        {2, {"11"}, {"11", "222"}},
        {2, {"11"}, {"11", "2222"}},
        {3, {"11", "22", "33"}, {"11", "22", "33", "123"}},
    };
    std::string cloud_text;
    for (const auto& [k, fx, fy] : pairs) {
        const int cloud = hbtest::cloud_hausdorff_exponent(hbtest::periodic_cloud(k, fx, 6), hbtest::periodic_cloud(k, fy, 6), 10);
        const auto d = subshift_hausdorff(SubshiftHandle::sft(sft(k, fx)), SubshiftHandle::sft(sft(k, fy)), 8);
        cloud_text += (cloud_text.empty() ? "" : ",") + std::to_string(cloud);
        if (!d.exponent || *d.exponent != cloud) o.fail("(d) cloud exponent " + std::to_string(cloud) + " vs dyadic");
    }
    o.detail = "full/golden " + fmt(fg) + "; even exponent at n=12 " + (last.exponent ? std::to_string(*last.exponent) : "-") +
               "; three-symbol limit transitive " + truth_name(three.limit.transitive) + ", chain " +
               truth_name(three.limit.chain_transitive) + "; cloud exponents " + cloud_text;
    return o;
}

// First index from which every spec equals the limit's vertex data.
std::size_t stabilization_index(const std::vector<PolygonSpec>& seq, const PolygonSpec& limit) {
    std::size_t i = seq.size();
    while (i > 0 && polygon_spec_to_json(seq[i - 1]) == polygon_spec_to_json(limit)) --i;
    return i;
}

Outcome polygon_limits() {
    Outcome o;
    std::vector<PolygonSpec> seq;
    for (int n = 1; n <= 6; ++n) seq.push_back(cusp_opening_triangle(n));
    const auto rows = polygon_convergence(seq, hbtest::ideal_spec(3), 8);
    std::string got;
    std::string want;
    double previous = 2.0;
    for (int n = 1; n <= 6; ++n) {
        const auto& d = rows[static_cast<std::size_t>(n - 1)].distance;
        const int expected = (n + 4) / 2;  // ceil((n + 3) / 2)
        got += (got.empty() ? "" : ",") + (d.exponent ? std::to_string(*d.exponent) : "-");
        want += (want.empty() ? "" : ",") + std::to_string(expected);
        if (d.value() != std::ldexp(1.0, -expected)) o.fail("n=" + std::to_string(n) + ": distance " + d.text() + ", expected 2^-" + std::to_string(expected));
        if (d.value() > previous) o.fail("n=" + std::to_string(n) + ": distance increased");
        previous = d.value();
    }

    const std::vector<std::pair<std::vector<PolygonSpec>, PolygonSpec>> stabilizing{
        {{hbtest::compact_spec({4, 4, 3}), hbtest::compact_spec({4, 4, 5}), hbtest::compact_spec({4, 4, 6}),
          hbtest::compact_spec({4, 4, 6}), hbtest::compact_spec({4, 4, 6})},
         hbtest::compact_spec({4, 4, 6})},
        {{hbtest::compact_spec({5, 2, 4}), hbtest::compact_spec({5, 3, 4}), hbtest::compact_spec({5, 4, 4}),
          hbtest::compact_spec({5, 4, 4})},
         hbtest::compact_spec({5, 4, 4})},
    };
    for (const auto& [sequence, limit] : stabilizing) {
        const auto at = stabilization_index(sequence, limit);
        const auto srows = polygon_convergence(sequence, limit, 8);
        for (std::size_t i = 0; i < srows.size(); ++i) {
            const bool zero = srows[i].distance.value() == 0.0;
            if (zero != (i >= at)) o.fail("stabilizing sequence row " + std::to_string(i + 1) + ": distance " + srows[i].distance.text());
        }
    }
    o.detail = "cusp-opening exponents " + got + " (criterion expects " + want + "); stabilizing sequences checked";
    return o;
}

std::vector<SubshiftSpec> language_corpus(const Options& opt) {
    std::vector<SubshiftSpec> out;
    if (!opt.configs.empty()) {
        for (const auto& entry : fs::directory_iterator(fs::path(opt.configs) / "polygons")) {
            std::ifstream in(entry.path());
            std::stringstream text;
            text << in.rdbuf();
            try {
                const auto spec = parse_polygon_spec(text.str());
                validate(spec);
                out.push_back(forbidden_set(spec));
            } catch (const Error&) {
            }
        }
    }
    for (const auto& [name, spec] : hbtest::class_representatives()) out.push_back(forbidden_set(spec));
    const auto fam = even_shift_family();
    for (int j = 1; j <= 6; ++j) out.push_back(*sft_approximation(fam, j).spec());
    for (int n = 1; n <= 6; ++n) out.push_back(single_defect_approximant(n));
    return out;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream text;
    text << in.rdbuf();
    return text.str();
}

// Runs every CLI command twice per config and compares every output file.
void cli_determinism(const Options& opt, Outcome& o, int& compared) {
    struct Job {
        std::string command;
        fs::path config;
        std::string extra;
    };
    std::vector<Job> jobs;
    const fs::path root(opt.configs);
    for (const auto& entry : fs::directory_iterator(root / "polygons")) {
        for (const std::string cmd : {"validate", "analyze", "render"}) jobs.push_back({cmd, entry.path(), ""});
        jobs.push_back({"simulate", entry.path(), "--seed 7 --future 12 --past 3"});
        jobs.push_back({"simulate", entry.path(), "--seed 7 --future 12 --format csv"});
    }
    for (const auto& entry : fs::directory_iterator(root / "runs")) {
        const std::string stem = entry.path().stem().string();
        const std::string cmd = stem.substr(0, stem.find('_'));
        jobs.push_back({cmd, entry.path(), "--seed 7"});
        if (cmd == "simulate") jobs.push_back({cmd, entry.path(), "--seed 7 --format csv"});
    }
    for (const auto& entry : fs::directory_iterator(root / "experiments")) {
        const std::string text = slurp(entry.path());
        const std::string cmd = text.find("\"family\"") != std::string::npos ? "converge" : "distance";
        jobs.push_back({cmd, entry.path(), "--seed 7"});
    }
    const fs::path work = fs::path(opt.workdir) / "acceptance_cli";
    fs::create_directories(work);
    int serial = 0;
    for (const auto& job : jobs) {
        std::vector<std::pair<int, std::vector<std::string>>> results;
        for (int round = 0; round < 2; ++round) {
            const fs::path out = work / ("run" + std::to_string(serial) + "_" + std::to_string(round) + ".out");
            for (const auto& stale : fs::directory_iterator(work)) {
                if (stale.path().string().rfind(out.string(), 0) == 0) fs::remove(stale.path());
            }
            const std::string line = "\"" + opt.cli + "\" " + job.command + " --config \"" + job.config.string() + "\" --out \"" +
                                     out.string() + "\" " + job.extra + " >/dev/null 2>&1";
            const int status = std::system(line.c_str());
            std::vector<std::string> files;
            for (const auto& f : fs::directory_iterator(work)) {
                if (f.path().string().rfind(out.string(), 0) == 0) {
                    files.push_back(f.path().string().substr(out.string().size()) + "\n" + slurp(f.path()));
                }
            }
            std::sort(files.begin(), files.end());
            results.emplace_back(status, files);
        }
        ++serial;
        ++compared;
        if (results[0] != results[1]) {
            o.fail("CLI " + job.command + " " + job.config.filename().string() + " " + job.extra + " differs between runs");
        }
    }
}

Outcome property_floor(const Options& opt) {
    Outcome o;
    Rng r(9010);
    const auto reps = hbtest::class_representatives();
    std::vector<CheckedPolygon> polys;
    for (const auto& [name, spec] : reps) polys.push_back(validate(spec));
    auto axioms = [&](const std::string& name, double xy, double yx, double xz, double yz, double xx, bool distinct) {
        if (xx != 0.0) o.fail(name + ": d(x,x) != 0");
        if (xy != yx) o.fail(name + ": asymmetric");
        if (xy < 0.0 || (distinct && xy <= 0.0)) o.fail(name + ": not positive");
        if (xz > xy + yz + kMetricSlack * (1.0 + xz)) o.fail(name + ": triangle inequality");
    };
    for (int t = 0; t < 1000; ++t) {
        const auto& p = polys[static_cast<std::size_t>(t % 3)];
        const auto a = hbtest::random_arc(p, r);
        const auto b = hbtest::random_arc(p, r);
        const auto c = hbtest::random_arc(p, r);
        axioms("dG", dG(a, b), dG(b, a), dG(a, c), dG(b, c), dG(a, a), a.geodesic.theta().radians() != b.geodesic.theta().radians());
        const auto x = hbtest::random_angle(r);
        const auto y = hbtest::random_angle(r);
        const auto z = hbtest::random_angle(r);
        axioms("boundary_distance", boundary_distance(x, y), boundary_distance(y, x), boundary_distance(x, z),
               boundary_distance(y, z), boundary_distance(x, x), x.radians() != y.radians());
        const auto u = hbtest::random_point(r);
        const auto v = hbtest::random_point(r);
        const auto w = hbtest::random_point(r);
        axioms("hyp_distance", hyp_distance(u, v), hyp_distance(v, u), hyp_distance(u, w), hyp_distance(v, w),
               hyp_distance(u, u), u.z() != v.z());
    }

    const auto corpus = language_corpus(opt);
    long checked = 0;
    for (const auto& s : corpus) {
        std::vector<std::set<Word>> by_length{{}};
        for (int n = 1; n <= 9; ++n) {
            if (SftLanguage(s.closure).count(n) > 200000) break;
            by_length.push_back(as_set(enumerate_words(s, n).words));
        }
        for (std::size_t n = 2; n + 1 < by_length.size(); ++n) {
            std::set<Word> prefixes;
            std::set<Word> suffixes;
            for (const auto& w : by_length[n + 1]) {
                prefixes.insert(w.substr(0, n));
                suffixes.insert(w.substr(1));
            }
            for (const auto& w : by_length[n]) {
                ++checked;
                if (!by_length[n - 1].count(w.substr(1)) || !by_length[n - 1].count(w.substr(0, n - 1))) {
                    o.fail("not factor-closed at " + w);
                }
                if (!prefixes.count(w) || !suffixes.count(w)) o.fail("not extendable at " + w);
            }
        }
    }

    int compared = 0;
    if (opt.cli.empty() || opt.configs.empty()) {
        o.fail("CLI determinism needs --cli and --configs");
    } else {
        cli_determinism(opt, o, compared);
    }
    o.detail = "3000 metric triples, " + std::to_string(corpus.size()) + " languages / " + std::to_string(checked) +
               " words, " + std::to_string(compared) + " CLI commands run twice";
    return o;
}

const std::vector<std::pair<std::string, std::function<Outcome(const Options&)>>>& criteria() {
    static const std::vector<std::pair<std::string, std::function<Outcome(const Options&)>>> list{
        {"ideal-polygon spectrum and entropy", [](const Options&) { return ideal_spectrum(); }},
        {"forbidden sets", [](const Options&) { return forbidden_lists(); }},
        {"mixing and connectors", [](const Options&) { return mixing(); }},
        {"conjugacy round trip", [](const Options&) { return conjugacy(); }},
        {"bounce-map cross-validation", [](const Options&) { return bounce_validation(); }},
        {"geometry constants", [](const Options&) { return geometry_constants(); }},
        {"shift equivariance", [](const Options&) { return shift_equivariance(); }},
        {"subshift-space suite", [](const Options&) { return subshift_suite(); }},
        {"polygon convergence", [](const Options&) { return polygon_limits(); }},
        {"property-based floor", property_floor},
    };
    return list;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Acceptance criteria"};
    int only = 0;
    Options opt;
    app.add_option("--criterion", only, "Run a single criterion (1-10)")->check(CLI::Range(1, 10));
    app.add_option("--cli", opt.cli, "Path to the hypbill executable");
    app.add_option("--configs", opt.configs, "Config directory");
    app.add_option("--workdir", opt.workdir, "Scratch directory for CLI outputs");
    CLI11_PARSE(app, argc, argv);

    bool all_pass = true;
    const auto& list = criteria();
    for (std::size_t i = 0; i < list.size(); ++i) {
        if (only != 0 && static_cast<int>(i) + 1 != only) continue;
        Outcome o;
        try {
            o = list[i].second(opt);
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        all_pass = all_pass && o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << " " << list[i].first << ": " << o.detail << "\n";
        for (const auto& note : o.notes) std::cout << "    " << note << "\n";
    }
    return all_pass ? 0 : 1;
}
