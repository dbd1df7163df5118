#include "hypbill/shiftspace.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <set>
#include <sstream>

#include "hypbill/error.hpp"
#include "hypbill/symdyn.hpp"

namespace hypbill {

double DyadicDistance::value() const { return exponent ? std::ldexp(1.0, -*exponent) : 0.0; }

std::string DyadicDistance::text() const {
    if (!exponent) return "0";
    return "2^-" + std::to_string(*exponent);
}

DyadicDistance subshift_hausdorff(const SubshiftHandle& x, const SubshiftHandle& y, int max_m, const Budgets& budgets) {
    if (max_m < 1) throw Error(ErrorCode::InvalidArgument, "max_m must be positive");
    const int k = std::max(x.k(), y.k());
    DyadicDistance d;
    d.max_m = max_m;
    // Breadth-first over words common to both languages; factor-closedness
    // means every word of the next length extends a common word.
    std::vector<Word> common{Word()};
    const int longest = central_window(max_m);
    // An M-step SFT is determined by its (M+1)-blocks.
    const int decisive = x.is_sft() && y.is_sft()
                             ? std::max(x.language()->memory(), y.language()->memory()) + 1
                             : -1;
    for (int n = 1; n <= longest; ++n) {
        std::vector<Word> next;
        for (const auto& w : common) {
            for (int a = 1; a <= k; ++a) {
                const char c = letter_char(a);
                const bool in_x = x.extends(w, c);
                const bool in_y = y.extends(w, c);
                if (in_x && in_y) {
                    next.push_back(w + c);
                    if (next.size() > budgets.max_words) {
                        throw Error(ErrorCode::BudgetExceeded, "common language outgrew the word budget");
                    }
                } else if (in_x != in_y) {
                    d.first_difference = n;
                    d.witness = w + c;
                    d.witness_in_first = in_x;
                    d.exponent = n / 2;  // largest m with 2m - 1 < n
                    return d;
                }
            }
        }
        common.swap(next);
        if (n == decisive) {
            d.proven_equal = true;
            return d;
        }
    }
    return d;
}

namespace {

bool closer(const DyadicDistance& a, const DyadicDistance& b) {
    if (!a.exponent) return b.exponent.has_value();
    return b.exponent && *a.exponent > *b.exponent;
}

}  // namespace

DyadicDistance alphabet_minimized_distance(const SubshiftHandle& x, const SubshiftHandle& y, int max_m,
                                           const Budgets& budgets) {
    if (x.k() != y.k()) throw Error(ErrorCode::AlphabetMismatch, "alphabet sizes differ");
    if (x.k() > 8) throw Error(ErrorCode::AlphabetTooLarge, "bijection search is limited to 8 letters");
    std::vector<int> perm(static_cast<std::size_t>(y.k()));
    for (int i = 0; i < y.k(); ++i) perm[static_cast<std::size_t>(i)] = i + 1;
    std::optional<DyadicDistance> best;
    do {
        const auto d = subshift_hausdorff(x, y.relabeled(perm), max_m, budgets);
        if (!best || closer(d, *best)) best = d;
        if (best->equal_within_budget()) break;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return *best;
}

ForbiddenFamily even_shift_family() {
    ForbiddenFamily f;
    f.name = "even_shift";
    f.k = 2;
    f.generate = [](int i) { return "2" + Word(static_cast<std::size_t>(2 * i - 1), '1') + "2"; };
    return f;
}

ForbiddenFamily padding_family(int k, std::vector<Word> base, int a, int b, int n0) {
    ForbiddenFamily f;
    f.name = "padding";
    f.k = k;
    f.base = std::move(base);
    f.cumulative = false;
    f.generate = [a, b, n0](int i) {
        return Word(1, letter_char(a)) + Word(static_cast<std::size_t>(n0 + i), letter_char(b));
    };
    return f;
}

SubshiftHandle sft_approximation(const ForbiddenFamily& family, int j) {
    SubshiftSpec s;
    s.closure.k = family.k;
    s.closure.words = family.base;
    for (int i = family.cumulative ? 1 : j; i <= j; ++i) {
        if (i >= 1) s.closure.words.push_back(family.generate(i));
    }
    return SubshiftHandle::sft(s, family.name + "[" + std::to_string(j) + "]");
}

SubshiftSpec single_defect_approximant(int n) {
    SubshiftSpec s;
    s.closure.k = 3;
    s.closure.words = {"22", "23", "32", "33"};
    for (int len = 1; len <= n; ++len) {
        const Word ones(static_cast<std::size_t>(len), '1');
        for (char a : {'2', '3'}) {
            for (char b : {'2', '3'}) s.closure.words.push_back(Word(1, a) + ones + b);
        }
    }
    return s;
}

LimitReport limit_experiment(const std::vector<SubshiftHandle>& sequence, const SubshiftHandle& limit, int depth,
                             int max_m, const Budgets& budgets) {
    LimitReport report;
    auto fill = [&](const SubshiftHandle& h, int index) {
        LimitRow row;
        row.index = index;
        row.name = h.name();
        row.distance = subshift_hausdorff(h, limit, max_m, budgets);
        row.transitive = check_property(h, Property::Transitive, depth, CheckMode::Auto, budgets).value;
        row.mixing = check_property(h, Property::Mixing, depth, CheckMode::Auto, budgets).value;
        row.chain_transitive = check_property(h, Property::ChainTransitive, depth, CheckMode::Auto, budgets).value;
        if (h.is_sft()) row.entropy = entropy(*h.spec(), budgets).log_perron;
        return row;
    };
    for (std::size_t i = 0; i < sequence.size(); ++i) {
        if (sequence[i].k() != limit.k()) throw Error(ErrorCode::AlphabetMismatch, "sequence and limit alphabets differ");
        report.rows.push_back(fill(sequence[i], static_cast<int>(i) + 1));
    }
    report.limit = fill(limit, 0);
    for (auto p : {Property::Transitive, Property::Mixing, Property::Nonwandering, Property::ChainRecurrent,
                   Property::ChainTransitive, Property::ChainMixing, Property::Minimal}) {
        report.limit_verdicts.push_back(check_property(limit, p, depth, CheckMode::Auto, budgets));
    }
    report.limit_chain_recurrent = report.limit_verdicts[3].value;
    report.limit_chain_mixing = report.limit_verdicts[5].value;
    return report;
}

PolygonSpec cusp_opening_triangle(int n) {
    PolygonSpec s;
    s.polygon_class = PolygonClass::SemiIdealRational;
    s.vertices = {VertexSpec::ideal(), VertexSpec::ideal(), VertexSpec::rational(n + 2)};
    return s;
}

namespace {

std::string vertex_summary(const PolygonSpec& s) {
    std::string out;
    for (const auto& v : s.vertices) {
        if (!out.empty()) out += ' ';
        out += v.kind == VertexKind::Ideal ? std::string("ideal") : "pi/" + std::to_string(*v.lambda);
    }
    return out;
}

}  // namespace

std::vector<PolygonRow> polygon_convergence(const std::vector<PolygonSpec>& sequence, const PolygonSpec& limit,
                                            int max_m, const Budgets& budgets) {
    validate(limit);
    const auto limit_spec = forbidden_set(limit);
    const auto limit_handle = SubshiftHandle::sft(limit_spec, "limit");
    const std::set<Word> limit_words(limit_spec.closure.words.begin(), limit_spec.closure.words.end());
    std::vector<PolygonRow> rows;
    for (std::size_t i = 0; i < sequence.size(); ++i) {
        if (sequence[i].k() != limit.k()) throw Error(ErrorCode::InvalidArgument, "polygons must share k");
        validate(sequence[i]);
        const auto spec = forbidden_set(sequence[i]);
        const std::set<Word> words(spec.closure.words.begin(), spec.closure.words.end());
        PolygonRow row;
        row.index = static_cast<int>(i) + 1;
        row.vertex_summary = vertex_summary(sequence[i]);
        std::set_difference(words.begin(), words.end(), limit_words.begin(), limit_words.end(),
                            std::back_inserter(row.forbidden_added));
        std::set_difference(limit_words.begin(), limit_words.end(), words.begin(), words.end(),
                            std::back_inserter(row.forbidden_removed));
        row.distance = subshift_hausdorff(SubshiftHandle::sft(spec), limit_handle, max_m, budgets);
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

std::string exponent_cell(const DyadicDistance& d) { return d.exponent ? std::to_string(*d.exponent) : "inf"; }

std::string value_cell(const DyadicDistance& d) {
    std::ostringstream out;
    out << std::setprecision(17) << d.value();
    return out.str();
}

}  // namespace

std::string convergence_csv(const LimitReport& report) {
    std::ostringstream out;
    out << "n,distance_exponent,distance,transitive,mixing,chain_transitive,entropy\n";
    auto line = [&](const std::string& n, const LimitRow& r) {
        out << n << ',' << exponent_cell(r.distance) << ',' << value_cell(r.distance) << ',' << truth_name(r.transitive)
            << ',' << truth_name(r.mixing) << ',' << truth_name(r.chain_transitive) << ',';
        if (r.entropy) out << std::setprecision(12) << *r.entropy;
        out << '\n';
    };
    for (const auto& r : report.rows) line(std::to_string(r.index), r);
    line("limit", report.limit);
    return out.str();
}

std::string polygon_convergence_csv(const std::vector<PolygonRow>& rows) {
    std::ostringstream out;
    out << "n,vertices,forbidden_added,forbidden_removed,distance_exponent,distance\n";
    auto join = [](const std::vector<Word>& ws) {
        std::string s;
        for (const auto& w : ws) s += (s.empty() ? "" : " ") + w;
        return s;
    };
    for (const auto& r : rows) {
        out << r.index << ',' << r.vertex_summary << ',' << join(r.forbidden_added) << ','
            << join(r.forbidden_removed) << ',' << exponent_cell(r.distance) << ',' << value_cell(r.distance) << '\n';
    }
    return out.str();
}

}  // namespace hypbill
