// Shared fixtures, seeded generators and brute-force oracles for the tests.
#pragma once

#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hypbill/billiard.hpp"
#include "hypbill/error.hpp"
#include "hypbill/hypgeo.hpp"
#include "hypbill/polygon.hpp"
#include "hypbill/symdyn.hpp"

namespace hbtest {

using namespace hypbill;

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(eng_); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng_); }
    std::mt19937_64& engine() { return eng_; }

private:
    std::mt19937_64 eng_;
};

inline BoundaryAngle random_angle(Rng& r) { return BoundaryAngle(r.uniform(0.0, kTwoPi)); }

inline DiskPoint random_point(Rng& r, double max_radius = 0.95) {
    // Area-uniform in the Euclidean disk of the given radius.
    const double rad = max_radius * std::sqrt(r.uniform(0.0, 1.0));
    return DiskPoint(std::polar(rad, r.uniform(0.0, kTwoPi)));
}

inline DiskIsometry random_isometry(Rng& r) {
    DiskIsometry g = DiskIsometry::rotation(r.uniform(0.0, kTwoPi)).compose(DiskIsometry::recentering(random_point(r, 0.8).z()));
    if (r.integer(0, 1) == 1) g = g.compose(DiskIsometry::conjugation());
    return g;
}

/// Interior point of p: a weighted Klein-model average of the vertices.
inline DiskPoint random_interior(const CheckedPolygon& p, Rng& r) {
    Complex sum = 0.0;
    double total = 0.0;
    for (int i = 1; i <= p.k(); ++i) {
        const double w = r.uniform(0.05, 1.0);
        sum += w * p.klein_vertex(i);
        total += w;
    }
    return DiskPoint(from_klein(0.999 * sum / total));
}

/// Geodesic through x with unit initial direction u (in the frame where x is 0).
inline DirectedGeodesic geodesic_through(DiskPoint x, Complex u) {
    const auto back = DiskIsometry::recentering(x.z()).inverse();
    return DirectedGeodesic::from_endpoints(BoundaryAngle::of(back.apply(-u)), BoundaryAngle::of(back.apply(u)));
}

/// Point at hyperbolic distance s from x along geodesic_through(x, u).
inline DiskPoint walk(DiskPoint x, Complex u, double s) {
    return DiskPoint(DiskIsometry::recentering(x.z()).inverse().apply(std::tanh(s / 2.0) * u));
}

inline PolygonSpec spec_of(const std::string& json) { return parse_polygon_spec(json); }

inline PolygonSpec ideal_spec(int k, double rotation = 0.0) {
    PolygonSpec s;
    s.polygon_class = PolygonClass::Ideal;
    s.vertices.assign(static_cast<std::size_t>(k), VertexSpec::ideal());
    s.rotation_rad = rotation;
    return s;
}

inline PolygonSpec compact_spec(std::vector<int> lambdas) {
    PolygonSpec s;
    s.polygon_class = PolygonClass::CompactRational;
    for (int l : lambdas) s.vertices.push_back(VertexSpec::rational(l));
    return s;
}

/// Triangle with v_1 rational of angle pi/lambda and v_2, v_3 ideal, or more
/// generally k vertices with the first rational.
inline PolygonSpec semi_ideal_spec(int lambda, int k = 3) {
    PolygonSpec s;
    s.polygon_class = PolygonClass::SemiIdealRational;
    s.vertices.push_back(VertexSpec::rational(lambda));
    for (int i = 1; i < k; ++i) s.vertices.push_back(VertexSpec::ideal());
    return s;
}

inline CheckedPolygon ideal_triangle() { return validate(ideal_spec(3, kPi / 2)); }
inline CheckedPolygon triangle_444() { return validate(compact_spec({4, 4, 4})); }

/// One polygon per class, used by class-quantified properties.
inline std::vector<std::pair<std::string, PolygonSpec>> class_representatives() {
    return {{"ideal", ideal_spec(3, kPi / 2)}, {"compact", compact_spec({4, 4, 4})}, {"semi_ideal", semi_ideal_spec(3)}};
}

/// Random start arc crossing the polygon interior.
inline BaseArc random_arc(const CheckedPolygon& p, Rng& r) {
    for (;;) {
        try {
            return make_arc(p, DirectedGeodesic::from_endpoints(random_angle(r), random_angle(r)));
        } catch (const Error&) {
        }
    }
}

/// Random periodic word of period 2..max_period admissible for s.
inline Word random_periodic_word(const SubshiftSpec& s, int max_period, Rng& r) {
    for (;;) {
        const int q = r.integer(2, max_period);
        Word w;
        for (int i = 0; i < q; ++i) {
            char c;
            do {
                c = letter_char(r.integer(1, s.k()));
            } while (!w.empty() && c == w.back());
            w.push_back(c);
        }
        if (w.front() == w.back()) continue;
        if (is_admissible(w, s, true).admissible) return w;
    }
}

inline bool has_factor(const Word& w, const std::vector<Word>& forbidden) {
    for (const auto& f : forbidden) {
        if (w.find(f) != Word::npos) return true;
    }
    return false;
}

/// Independent language oracle for X_F: w avoids F and extends by
/// k^M + M + 1 letters on both sides, which forces a repeated M-block
/// context that can be pumped into a bi-infinite extension.
class LanguageOracle {
public:
    LanguageOracle(int k, std::vector<Word> forbidden) : k_(k), forbidden_(std::move(forbidden)) {
        std::size_t longest = 1;
        for (const auto& f : forbidden_) longest = std::max(longest, f.size());
        memory_ = static_cast<int>(longest) - 1;
        reach_ = 1;
        for (int i = 0; i < std::max(memory_, 1); ++i) reach_ *= k_;
        reach_ += memory_ + 1;
    }

    bool contains(const Word& w) const {
        if (has_factor(w, forbidden_)) return false;
        return extends(w, reach_, true) && extends(w, reach_, false);
    }

    /// All words of length n, by brute force over k^n strings.
    std::vector<Word> words(int n) const {
        std::vector<Word> out;
        Word w(static_cast<std::size_t>(n), '1');
        for (;;) {
            if (contains(w)) out.push_back(w);
            int i = n - 1;
            while (i >= 0 && w[static_cast<std::size_t>(i)] == letter_char(k_)) {
                w[static_cast<std::size_t>(i)] = '1';
                --i;
            }
            if (i < 0) break;
            ++w[static_cast<std::size_t>(i)];
        }
        return out;
    }

    /// Is p^infinity a point of X_F (cyclic scan over enough periods).
    bool contains_periodic(const Word& p) const {
        Word s;
        while (s.size() < p.size() + static_cast<std::size_t>(memory_) + 1) s += p;
        s += p;
        return !has_factor(s, forbidden_);
    }

private:
    bool extends(const Word& w, int steps, bool right) const {
        if (steps == 0) return true;
        const std::size_t keep = static_cast<std::size_t>(std::max(memory_, 0));
        const Word context = right ? w.substr(w.size() > keep ? w.size() - keep : 0) : w.substr(0, std::min(keep, w.size()));
        const auto key = std::make_tuple(context, steps, right);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        bool ok = false;
        for (int a = 1; a <= k_ && !ok; ++a) {
            const Word next = right ? context + letter_char(a) : Word(1, letter_char(a)) + context;
            if (has_factor(next, forbidden_)) continue;
            ok = extends(next, steps - 1, right);
        }
        memo_[key] = ok;
        return ok;
    }

    int k_;
    std::vector<Word> forbidden_;
    int memory_ = 0;
    int reach_ = 1;
    mutable std::map<std::tuple<Word, int, bool>, bool> memo_;
};

/// Sequence-metric agreement between two periodic points given by
/// their periods and base offsets: 2^-m with m the largest agreement radius.
inline int agreement_radius(const Word& p, std::size_t off_p, const Word& q, std::size_t off_q, int cap) {
    auto at = [](const Word& w, std::size_t off, long i) {
        const long n = static_cast<long>(w.size());
        return w[static_cast<std::size_t>(((static_cast<long>(off) + i) % n + n) % n)];
    };
    int m = 0;
    while (m < cap && at(p, off_p, m) == at(q, off_q, m) && at(p, off_p, -m) == at(q, off_q, -m)) ++m;
    return m;
}

using PeriodicPoint = std::pair<Word, std::size_t>;

/// Periodic points of X_F with least period <= max_period, as (period, offset).
inline std::vector<PeriodicPoint> periodic_cloud(int k, const std::vector<Word>& forbidden, int max_period) {
    const LanguageOracle oracle(k, forbidden);
    std::vector<PeriodicPoint> out;
    for (int q = 1; q <= max_period; ++q) {
        Word w(static_cast<std::size_t>(q), '1');
        for (;;) {
            if (primitive_root(w) == w && oracle.contains_periodic(w)) {
                for (std::size_t o = 0; o < w.size(); ++o) out.emplace_back(w, o);
            }
            int i = q - 1;
            while (i >= 0 && w[static_cast<std::size_t>(i)] == letter_char(k)) {
                w[static_cast<std::size_t>(i)] = '1';
                --i;
            }
            if (i < 0) break;
            ++w[static_cast<std::size_t>(i)];
        }
    }
    return out;
}

/// Hausdorff distance exponent between point clouds under the 2^-m metric.
inline int cloud_hausdorff_exponent(const std::vector<PeriodicPoint>& a, const std::vector<PeriodicPoint>& b, int cap) {
    auto directed = [cap](const std::vector<PeriodicPoint>& from, const std::vector<PeriodicPoint>& to) {
        int worst = cap;
        for (const auto& [p, op] : from) {
            int best = 0;
            for (const auto& [q, oq] : to) best = std::max(best, agreement_radius(p, op, q, oq, cap));
            worst = std::min(worst, best);
        }
        return worst;
    };
    return std::min(directed(a, b), directed(b, a));
}

}  // namespace hbtest
