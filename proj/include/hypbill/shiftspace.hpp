#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hypbill/config.hpp"
#include "hypbill/polygon.hpp"
#include "hypbill/sftlab.hpp"
#include "hypbill/subshift.hpp"

namespace hypbill {

/// Central windows of length 2m-1 realize the distance 2^-m for
/// sequences agreeing on |n| < m.
inline constexpr int central_window(int m) { return 2 * m - 1; }

/// d_H = 2^-exponent, or "equal within budget" when exponent is absent.
struct DyadicDistance {
    std::optional<int> exponent;
    int max_m = 0;
    /// Length of the first disagreeing central language, when found.
    std::optional<int> first_difference;
    /// A word in exactly one of the two languages.
    std::optional<Word> witness;
    bool witness_in_first = false;
    /// Both shifts are SFTs whose languages agree past their memory, so they
    /// coincide and the distance is exactly 0.
    bool proven_equal = false;

    bool equal_within_budget() const { return !exponent.has_value(); }
    double value() const;
    std::string text() const;
};

/// Both shifts live on the larger of the two alphabets.
DyadicDistance subshift_hausdorff(const SubshiftHandle& x, const SubshiftHandle& y, int max_m,
                                  const Budgets& budgets = kDefaultBudgets);

/// Minimum over relabelings of y's alphabet (k <= 8).
DyadicDistance alphabet_minimized_distance(const SubshiftHandle& x, const SubshiftHandle& y, int max_m,
                                           const Budgets& budgets = kDefaultBudgets);

/// Forbidden family: fixed base words plus an ordered generator.
struct ForbiddenFamily {
    std::string name;
    int k = 2;
    std::vector<Word> base;
    /// i-th generated word, i >= 1.
    std::function<Word(int)> generate;
    /// Approximant j forbids the first j generated words when true, only
    /// the j-th otherwise.
    bool cumulative = true;
};

/// 2 1^(2i-1) 2: approximants of the even shift.
ForbiddenFamily even_shift_family();
/// base plus a b^(n0 + i): shrinking SFTs converging to X_base.
ForbiddenFamily padding_family(int k, std::vector<Word> base, int a, int b, int n0);

/// SFT forbidding the family's base plus generated words up to index j.
SubshiftHandle sft_approximation(const ForbiddenFamily& family, int j);

/// Forbids 22, 23, 32, 33 and a 1^k b for a, b in {2,3}, 1 <= k <= n.
SubshiftSpec single_defect_approximant(int n);

struct LimitRow {
    int index = 0;
    std::string name;
    DyadicDistance distance;
    Truth transitive = Truth::Unknown;
    Truth mixing = Truth::Unknown;
    Truth chain_transitive = Truth::Unknown;
    std::optional<double> entropy;
};

struct LimitReport {
    std::vector<LimitRow> rows;
    LimitRow limit;
    Truth limit_chain_recurrent = Truth::Unknown;
    Truth limit_chain_mixing = Truth::Unknown;
    std::vector<PropertyVerdict> limit_verdicts;
};

LimitReport limit_experiment(const std::vector<SubshiftHandle>& sequence, const SubshiftHandle& limit, int depth,
                             int max_m, const Budgets& budgets = kDefaultBudgets);

struct PolygonRow {
    int index = 0;
    std::string vertex_summary;
    std::vector<Word> forbidden_added;    // in the element, not in the limit
    std::vector<Word> forbidden_removed;  // in the limit, not in the element
    DyadicDistance distance;
};

std::vector<PolygonRow> polygon_convergence(const std::vector<PolygonSpec>& sequence, const PolygonSpec& limit,
                                            int max_m, const Budgets& budgets = kDefaultBudgets);

/// Triangle with ideal v_1, v_2 and v_3 of angle pi/(n+2).
PolygonSpec cusp_opening_triangle(int n);

std::string convergence_csv(const LimitReport& report);
std::string polygon_convergence_csv(const std::vector<PolygonRow>& rows);

}  // namespace hypbill
