#include "hypbill/sftlab.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <queue>

#include "hypbill/error.hpp"

namespace hypbill {

const char* truth_name(Truth t) {
    switch (t) {
        case Truth::True: return "true";
        case Truth::False: return "false";
        case Truth::Unknown: return "unknown";
    }
    return "unknown";
}

const char* property_name(Property p) {
    switch (p) {
        case Property::Transitive: return "transitive";
        case Property::Mixing: return "mixing";
        case Property::Nonwandering: return "nonwandering";
        case Property::ChainRecurrent: return "chain_recurrent";
        case Property::ChainTransitive: return "chain_transitive";
        case Property::ChainMixing: return "chain_mixing";
        case Property::Minimal: return "minimal";
    }
    return "unknown";
}

std::optional<Property> parse_property(const std::string& name) {
    for (auto p : {Property::Transitive, Property::Mixing, Property::Nonwandering, Property::ChainRecurrent,
                   Property::ChainTransitive, Property::ChainMixing, Property::Minimal}) {
        if (name == property_name(p)) return p;
    }
    return std::nullopt;
}

SftGraph essentialize(const SftGraph& g) {
    const int n = g.size();
    std::vector<int> indeg(n, 0), outdeg(n, 0);
    std::vector<std::vector<int>> in(n);
    for (int i = 0; i < n; ++i) {
        for (int j : g.out[i]) {
            ++indeg[j];
            ++outdeg[i];
            in[j].push_back(i);
        }
    }
    std::vector<bool> alive(n, true);
    std::vector<int> queue;
    for (int i = 0; i < n; ++i) {
        if (indeg[i] == 0 || outdeg[i] == 0) {
            alive[i] = false;
            queue.push_back(i);
        }
    }
    while (!queue.empty()) {
        const int v = queue.back();
        queue.pop_back();
        for (int j : g.out[v]) {
            if (alive[j] && --indeg[j] == 0) {
                alive[j] = false;
                queue.push_back(j);
            }
        }
        for (int j : in[v]) {
            if (alive[j] && --outdeg[j] == 0) {
                alive[j] = false;
                queue.push_back(j);
            }
        }
    }
    std::vector<int> renum(n, -1);
    SftGraph out;
    for (int i = 0; i < n; ++i) {
        if (!alive[i]) continue;
        renum[i] = out.size();
        out.labels.push_back(i < static_cast<int>(g.labels.size()) ? g.labels[i] : std::to_string(i));
        out.out.emplace_back();
    }
    if (out.size() == 0) throw Error(ErrorCode::EmptyShift, "graph has no bi-infinite walk");
    for (int i = 0; i < n; ++i) {
        if (!alive[i]) continue;
        for (int j : g.out[i]) {
            if (alive[j]) out.out[renum[i]].push_back(renum[j]);
        }
    }
    return out;
}

namespace {

std::vector<bool> reachable(const SftGraph& g, int root, bool reverse) {
    std::vector<std::vector<int>> adj = g.out;
    if (reverse) {
        adj.assign(g.out.size(), {});
        for (int i = 0; i < g.size(); ++i) {
            for (int j : g.out[i]) adj[j].push_back(i);
        }
    }
    std::vector<bool> seen(g.out.size(), false);
    std::vector<int> stack{root};
    seen[root] = true;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w : adj[v]) {
            if (!seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
        }
    }
    return seen;
}

const std::string& label(const SftGraph& g, int i) { return g.labels[static_cast<std::size_t>(i)]; }

int graph_period(const SftGraph& g) {
    std::vector<int> level(g.out.size(), -1);
    std::queue<int> q;
    level[0] = 0;
    q.push(0);
    int period = 0;
    while (!q.empty()) {
        const int v = q.front();
        q.pop();
        for (int w : g.out[v]) {
            if (level[w] < 0) {
                level[w] = level[v] + 1;
                q.push(w);
            } else {
                period = std::gcd(period, std::abs(level[v] + 1 - level[w]));
            }
        }
    }
    return period;
}

}  // namespace

PropertyVerdict is_irreducible(const SftGraph& g) {
    PropertyVerdict v;
    v.property = Property::Transitive;
    if (g.size() == 0) {
        v.value = Truth::False;
        v.note = "empty graph";
        return v;
    }
    const auto fwd = reachable(g, 0, false);
    for (int j = 0; j < g.size(); ++j) {
        if (!fwd[j]) {
            v.value = Truth::False;
            v.witnesses = {label(g, 0), label(g, j)};
            v.note = "no path from the first witness to the second";
            return v;
        }
    }
    const auto bwd = reachable(g, 0, true);
    for (int j = 0; j < g.size(); ++j) {
        if (!bwd[j]) {
            v.value = Truth::False;
            v.witnesses = {label(g, j), label(g, 0)};
            v.note = "no path from the first witness to the second";
            return v;
        }
    }
    v.value = Truth::True;
    return v;
}

PropertyVerdict is_aperiodic(const SftGraph& g) {
    if (is_irreducible(g).value != Truth::True) {
        throw Error(ErrorCode::NotIrreducible, "period is defined for irreducible graphs");
    }
    PropertyVerdict v;
    v.property = Property::Mixing;
    v.period = graph_period(g);
    v.value = v.period == 1 ? Truth::True : Truth::False;
    if (v.period != 1) {
        v.witnesses = {label(g, 0)};
        v.note = "cycle lengths through the witness share period " + std::to_string(v.period);
    }
    return v;
}

double perron_eigenvalue(const SftGraph& g, double tol) {
    const auto per = is_aperiodic(g);
    const double shift = per.period > 1 ? 1.0 : 0.0;
    const std::size_t n = g.out.size();
    std::vector<double> x(n, 1.0), y(n);
    constexpr int kMaxIter = 200000;
    for (int it = 0; it < kMaxIter; ++it) {
        for (std::size_t i = 0; i < n; ++i) {
            double s = shift * x[i];
            for (int j : g.out[i]) s += x[static_cast<std::size_t>(j)];
            y[i] = s;
        }
        double lo = std::numeric_limits<double>::infinity();
        double hi = 0.0;
        double top = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double r = y[i] / x[i];
            lo = std::min(lo, r);
            hi = std::max(hi, r);
            top = std::max(top, y[i]);
        }
        if (hi - lo <= tol * std::max(1.0, hi)) return 0.5 * (lo + hi) - shift;
        for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / top;
    }
    throw Error(ErrorCode::NonConvergence, "power iteration did not converge");
}

double spectral_radius(const SftGraph& g, double tol) {
    int count = 0;
    const auto comp = strongly_connected_components(g, &count);
    double best = 0.0;
    for (int c = 0; c < count; ++c) {
        std::vector<int> members;
        for (int i = 0; i < g.size(); ++i) {
            if (comp[i] == c) members.push_back(i);
        }
        std::vector<int> local(g.out.size(), -1);
        for (std::size_t m = 0; m < members.size(); ++m) local[members[m]] = static_cast<int>(m);
        SftGraph sub;
        sub.out.resize(members.size());
        for (std::size_t m = 0; m < members.size(); ++m) {
            sub.labels.push_back(label(g, members[m]));
            for (int j : g.out[members[m]]) {
                if (local[j] >= 0) sub.out[m].push_back(local[j]);
            }
        }
        if (sub.edge_count() == 0) continue;
        best = std::max(best, perron_eigenvalue(sub, tol));
    }
    return best;
}

EntropyReport entropy(const SubshiftSpec& s, const Budgets& budgets) {
    const SftLanguage lang(s.closure);
    if (lang.empty()) throw Error(ErrorCode::EmptyShift, "the closure SFT is empty");
    EntropyReport r;
    r.perron = spectral_radius(lang.graph());
    r.log_perron = std::log(*r.perron);
    const int n_max = static_cast<int>(budgets.max_word_length);
    if (n_max >= 5) {
        double sum = 0.0;
        for (int n = n_max - 4; n < n_max; ++n) sum += std::log(lang.count(n + 1)) - std::log(lang.count(n));
        r.slope_estimate = sum / 4.0;
        r.slope_max_n = n_max;
    }
    return r;
}

namespace {

/// Which connector lengths 0..max_len join v to w; nullopt when the search
/// frontier outgrows the budget.
std::optional<std::vector<bool>> connector_lengths(const SubshiftHandle& h, const Word& v, const Word& w, int max_len,
                                                   std::size_t budget) {
    std::vector<bool> ok(static_cast<std::size_t>(max_len) + 1, false);
    std::vector<Word> frontier{v};
    for (int n = 0; n <= max_len; ++n) {
        for (const auto& x : frontier) {
            Word y = x;
            bool good = true;
            for (char c : w) {
                if (!h.extends(y, c)) {
                    good = false;
                    break;
                }
                y.push_back(c);
            }
            if (good) {
                ok[static_cast<std::size_t>(n)] = true;
                break;
            }
        }
        if (n == max_len) break;
        std::vector<Word> next;
        for (const auto& x : frontier) {
            for (int a = 1; a <= h.k(); ++a) {
                const char c = letter_char(a);
                if (h.extends(x, c)) next.push_back(x + c);
            }
        }
        if (next.size() > budget) return std::nullopt;
        frontier.swap(next);
        if (frontier.empty()) break;
    }
    return ok;
}

PropertyVerdict sft_verdict(const SubshiftHandle& h, Property property) {
    const SftGraph& g = h.language()->graph();
    if (g.size() == 0) throw Error(ErrorCode::EmptyShift, "the SFT is empty");
    PropertyVerdict v;
    v.property = property;
    v.note = "exact on the essential block graph";
    switch (property) {
        case Property::Transitive:
        case Property::ChainTransitive: {
            auto irr = is_irreducible(g);
            v.value = irr.value;
            v.witnesses = irr.witnesses;
            break;
        }
        case Property::Mixing:
        case Property::ChainMixing: {
            auto irr = is_irreducible(g);
            if (irr.value != Truth::True) {
                v.value = Truth::False;
                v.witnesses = irr.witnesses;
                v.note = "not irreducible";
                break;
            }
            auto ap = is_aperiodic(g);
            v.value = ap.value;
            v.period = ap.period;
            v.witnesses = ap.witnesses;
            break;
        }
        case Property::Nonwandering:
        case Property::ChainRecurrent: {
            const auto comp = strongly_connected_components(g);
            v.value = Truth::True;
            for (int i = 0; i < g.size() && v.value == Truth::True; ++i) {
                for (int j : g.out[i]) {
                    if (comp[i] != comp[j]) {
                        v.value = Truth::False;
                        v.witnesses = {label(g, i), label(g, j)};
                        v.note = "edge between distinct components never recurs";
                        break;
                    }
                }
            }
            break;
        }
        case Property::Minimal: {
            const bool single_cycle = is_irreducible(g).value == Truth::True &&
                                      std::all_of(g.out.begin(), g.out.end(), [](const auto& r) { return r.size() == 1; });
            v.value = single_cycle ? Truth::True : Truth::False;
            if (!single_cycle) v.note = "more than one periodic orbit";
            break;
        }
    }
    return v;
}

PropertyVerdict chain_verdict(const SubshiftHandle& h, Property property, int depth, std::size_t budget) {
    PropertyVerdict v;
    v.property = property;
    v.depth = depth;
    v.value = Truth::True;
    const int max_len = std::max(1, depth / 2);
    for (int len = 1; len <= max_len; ++len) {
        const auto nodes = h.words(len, budget);
        SftGraph cg;
        cg.labels = nodes;
        cg.out.resize(nodes.size());
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            for (std::size_t j = 0; j < nodes.size(); ++j) {
                for (int a = 1; a <= h.k(); ++a) {
                    if (h.contains(nodes[i] + letter_char(a) + nodes[j])) {
                        cg.out[i].push_back(static_cast<int>(j));
                        break;
                    }
                }
            }
        }
        int count = 0;
        const auto comp = strongly_connected_components(cg, &count);
        if (property == Property::ChainRecurrent) {
            std::vector<bool> cyclic(static_cast<std::size_t>(count), false);
            for (int i = 0; i < cg.size(); ++i) {
                for (int j : cg.out[i]) {
                    if (comp[i] == comp[j]) cyclic[static_cast<std::size_t>(comp[i])] = true;
                }
            }
            for (int i = 0; i < cg.size(); ++i) {
                if (!cyclic[static_cast<std::size_t>(comp[i])]) {
                    v.value = Truth::False;
                    v.witnesses = {nodes[static_cast<std::size_t>(i)]};
                    v.note = "no chain returns to the witness at window length " + std::to_string(len);
                    return v;
                }
            }
            continue;
        }
        const auto irr = is_irreducible(cg);
        if (irr.value != Truth::True) {
            v.value = Truth::False;
            v.witnesses = irr.witnesses;
            v.note = "no chain between the witnesses at window length " + std::to_string(len);
            return v;
        }
        if (property == Property::ChainMixing) {
            const auto ap = is_aperiodic(cg);
            if (ap.value != Truth::True) {
                v.value = Truth::False;
                v.period = ap.period;
                v.witnesses = ap.witnesses;
                v.note = "chain lengths are periodic at window length " + std::to_string(len);
                return v;
            }
        }
    }
    v.note = "holds for chain windows up to length " + std::to_string(max_len);
    return v;
}

PropertyVerdict connect_verdict(const SubshiftHandle& h, Property property, int depth, std::size_t budget) {
    PropertyVerdict v;
    v.property = property;
    v.depth = depth;
    const int len = std::max(1, depth / 4);
    const auto words = h.words(len, budget);
    bool unresolved = false;
    for (const auto& a : words) {
        for (const auto& b : words) {
            if (property == Property::Nonwandering && a != b) continue;
            if (h.never_connects(a, b)) {
                v.value = Truth::False;
                v.witnesses = {a, b};
                v.note = "no word of the language contains the first witness followed by the second";
                return v;
            }
            const auto lengths = connector_lengths(h, a, b, depth, budget);
            bool ok = false;
            if (lengths) {
                if (property == Property::Mixing) {
                    // Every connector length from some N <= depth/2 through depth.
                    int n = depth;
                    while (n >= 0 && (*lengths)[static_cast<std::size_t>(n)]) --n;
                    ok = n + 1 <= depth / 2;
                } else {
                    ok = std::find(lengths->begin(), lengths->end(), true) != lengths->end();
                }
            }
            if (!ok && !unresolved) {
                unresolved = true;
                v.witnesses = {a, b};
            }
        }
    }
    v.value = unresolved ? Truth::Unknown : Truth::True;
    v.note = unresolved ? "no connector found within the depth budget"
                        : "holds for words of length " + std::to_string(len) + " with connectors up to the depth";
    return v;
}

PropertyVerdict minimal_verdict(const SubshiftHandle& h, int depth, std::size_t budget) {
    PropertyVerdict v;
    v.property = Property::Minimal;
    v.depth = depth;
    const int len = std::max(1, depth / 4);
    const auto words = h.words(len, budget);
    for (int period = 1; period <= std::max(1, depth / 2); ++period) {
        for (const auto& p : h.words(period, budget)) {
            if (!h.contains_periodic(p)) continue;
            Word text = p;
            while (text.size() < p.size() + static_cast<std::size_t>(len)) text += p;
            for (const auto& w : words) {
                if (text.find(w) == Word::npos) {
                    v.value = Truth::False;
                    v.witnesses = {w, p};
                    v.note = "the periodic point of the second witness avoids the first";
                    return v;
                }
            }
        }
    }
    for (const auto& u : h.words(depth, budget)) {
        for (const auto& w : words) {
            if (u.find(w) == Word::npos) {
                v.value = Truth::Unknown;
                v.witnesses = {w, u};
                v.note = "a long word avoids the first witness";
                return v;
            }
        }
    }
    v.value = Truth::True;
    return v;
}

}  // namespace

PropertyVerdict check_property(const SubshiftHandle& s, Property property, int depth, CheckMode mode,
                               const Budgets& budgets) {
    if (s.is_sft() && mode == CheckMode::Auto) {
        auto v = sft_verdict(s, property);
        v.depth = depth;
        return v;
    }
    if (depth < 1) throw Error(ErrorCode::InvalidArgument, "depth must be positive");
    switch (property) {
        case Property::ChainRecurrent:
        case Property::ChainTransitive:
        case Property::ChainMixing:
            return chain_verdict(s, property, depth, budgets.max_words);
        case Property::Minimal:
            return minimal_verdict(s, depth, budgets.max_words);
        default:
            return connect_verdict(s, property, depth, budgets.max_words);
    }
}

namespace {

/// Connector pattern: alternating {p, q} blocks separated by single s
/// letters, starting with p or q. s = 0 admits every letter.
struct Pattern {
    int p;
    int q;
    int s;

    bool allows(char prev, char next, bool first) const {
        if (s == 0) return true;
        const int a = letter_value(next);
        if (a == s) return !first && letter_value(prev) != s;
        return a == p || a == q;
    }
};

/// Connector of length n for u _ v in the pattern, by dynamic programming
/// over SFT contexts; nullopt when none exists.
std::optional<Word> pattern_connector(const SftLanguage& lang, const Pattern& pat, const Word& u, const Word& v, int n) {
    const std::size_t ctx = static_cast<std::size_t>(std::max(lang.memory(), 1));
    auto tail = [ctx](const Word& w) { return w.size() > ctx ? w.substr(w.size() - ctx) : w; };
    // layers[t]: context after t connector letters -> (previous context, letter).
    std::vector<std::map<Word, std::pair<Word, char>>> layers(static_cast<std::size_t>(n) + 1);
    layers[0][tail(u)] = {Word(), '\0'};
    for (int t = 0; t < n; ++t) {
        for (const auto& [context, from] : layers[static_cast<std::size_t>(t)]) {
            for (int a = 1; a <= lang.k(); ++a) {
                const char c = letter_char(a);
                if (!pat.allows(context.back(), c, t == 0)) continue;
                const Word grown = context + c;
                if (!lang.contains(grown)) continue;
                layers[static_cast<std::size_t>(t) + 1].try_emplace(tail(grown), context, c);
            }
        }
    }
    for (const auto& [context, from] : layers[static_cast<std::size_t>(n)]) {
        if (!lang.contains(context + v)) continue;
        Word w;
        Word at = context;
        for (int t = n; t > 0; --t) {
            const auto& [prev, c] = layers[static_cast<std::size_t>(t)].at(at);
            w.push_back(c);
            at = prev;
        }
        std::reverse(w.begin(), w.end());
        if (lang.contains(u + w + v)) return w;
    }
    return std::nullopt;
}

int longest_alternation(const Word& w, int p, int q) {
    int best = 0;
    int run = 0;
    for (char c : w) {
        const int a = letter_value(c);
        run = (a == p || a == q) ? run + 1 : 0;
        best = std::max(best, run);
    }
    return best;
}

}  // namespace

std::optional<ConnectorFamily> find_connector_family(const SftLanguage& lang, const Word& u, const Word& v, int count,
                                                     int max_len) {
    if (!lang.contains(u) || !lang.contains(v)) return std::nullopt;
    const int k = lang.k();
    std::vector<Pattern> patterns;
    for (int p = 1; p <= k; ++p) {
        for (int q = p + 1; q <= k; ++q) {
            for (int s = 1; s <= k; ++s) {
                if (s != p && s != q) patterns.push_back({p, q, s});
            }
        }
    }
    patterns.push_back({0, 0, 0});
    for (const auto& pat : patterns) {
        ConnectorFamily fam{pat.p, pat.q, pat.s, 0, 0, {}};
        for (int n = 1; n <= max_len; ++n) {
            auto w = pattern_connector(lang, pat, u, v, n);
            if (!w) {
                fam.connectors.clear();
                if (max_len - n < count) break;
                continue;
            }
            if (fam.connectors.empty()) fam.n_min = n;
            fam.d = std::max(fam.d, (longest_alternation(*w, pat.p, pat.q) + 1) / 2);
            fam.connectors.push_back(std::move(*w));
            if (static_cast<int>(fam.connectors.size()) == count) return fam;
        }
    }
    return std::nullopt;
}

}  // namespace hypbill
