#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypbill/config.hpp"
#include "hypbill/sft_graph.hpp"
#include "hypbill/subshift.hpp"
#include "hypbill/symdyn.hpp"

namespace hypbill {

enum class Truth { True, False, Unknown };
const char* truth_name(Truth t);

enum class Property { Transitive, Mixing, Nonwandering, ChainRecurrent, ChainTransitive, ChainMixing, Minimal };
const char* property_name(Property p);
std::optional<Property> parse_property(const std::string& name);

struct PropertyVerdict {
    Property property = Property::Transitive;
    Truth value = Truth::Unknown;
    std::vector<Word> witnesses;
    int depth = 0;
    std::string note;
    /// Set for aperiodicity queries.
    int period = 0;
};

SftGraph essentialize(const SftGraph& g);

PropertyVerdict is_irreducible(const SftGraph& g);

/// Requires an irreducible graph; period is the gcd of cycle lengths.
PropertyVerdict is_aperiodic(const SftGraph& g);

/// Dominant eigenvalue of an irreducible graph by power iteration from the
/// all-ones vector, bracketed by Collatz-Wielandt bounds. Periodic graphs are
/// iterated as A + I.
double perron_eigenvalue(const SftGraph& g, double tol = 1e-10);

/// Largest Perron eigenvalue over the strongly connected components.
double spectral_radius(const SftGraph& g, double tol = 1e-10);

struct EntropyReport {
    std::optional<double> perron;
    double log_perron = 0.0;
    std::optional<double> slope_estimate;
    int slope_max_n = 0;
};

EntropyReport entropy(const SubshiftSpec& s, const Budgets& budgets = kDefaultBudgets);

enum class CheckMode { Auto, Language };

/// SFT handles are decided on the essential block graph unless mode is
/// Language; other handles are tested through bounded language searches.
PropertyVerdict check_property(const SubshiftHandle& s, Property property, int depth, CheckMode mode = CheckMode::Auto,
                               const Budgets& budgets = kDefaultBudgets);

/// Connectors built from alternating {p, q} blocks of at most 2d letters
/// separated by single s letters. p = q = s = 0 marks the unrestricted
/// fallback over the whole alphabet.
struct ConnectorFamily {
    int p = 0;
    int q = 0;
    int s = 0;
    int d = 0;
    int n_min = 0;
    std::vector<Word> connectors;  // lengths n_min .. n_min + count - 1
};

/// First pattern (p < q, then s, lexicographic) whose connectors w give
/// u w v in the language for `count` consecutive lengths up to max_len.
std::optional<ConnectorFamily> find_connector_family(const SftLanguage& lang, const Word& u, const Word& v,
                                                     int count, int max_len);

}  // namespace hypbill
