#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "hypbill/config.hpp"
#include "hypbill/polygon.hpp"
#include "hypbill/sft_graph.hpp"

namespace hypbill {

/// Letters are the digits '1'..'9'; alphabets have at most 9 symbols.
using Word = std::string;

inline constexpr int kMaxAlphabet = 9;

inline int letter_value(char c) { return c - '0'; }
inline char letter_char(int v) { return static_cast<char>('0' + v); }

Word word_from_labels(const std::vector<int>& labels);
std::vector<int> labels_of(const Word& w);
/// Throws AlphabetMismatch when a letter lies outside 1..k.
void check_alphabet(const Word& w, int k);

bool is_cyclic_rotation(const Word& a, const Word& b);
/// Shortest p with w = p^n.
Word primitive_root(const Word& w);

struct PointedWord {
    Word letters;
    std::size_t origin = 0;

    /// Past letters, '.', then index 0 onward.
    std::string text() const;
};

struct ForbiddenSet {
    int k = 0;
    std::vector<Word> words;

    std::size_t max_length() const;
};

/// Drops words that contain another retained word; result sorted by (length, lex).
ForbiddenSet reduce(const ForbiddenSet& f);

struct SubshiftSpec {
    ForbiddenSet closure;
    /// Adjacent side pairs whose eventually-alternating points are removed.
    std::vector<std::pair<int, int>> exclusion_pairs;

    int k() const { return closure.k; }
};

SubshiftSpec forbidden_set(const PolygonSpec& p);

SubshiftSpec parse_subshift_spec(const std::string& json_text);
std::string subshift_spec_to_json(const SubshiftSpec& s);

struct AdmissibilityVerdict {
    bool admissible = true;
    std::optional<std::size_t> position;
    Word factor;
    std::string reason;
};

AdmissibilityVerdict is_admissible(const Word& w, const SubshiftSpec& s, bool periodic);

/// Language of the closure SFT, presented on blocks of length
/// max(M, 1) for an M-step forbidden set.
class SftLanguage {
public:
    explicit SftLanguage(const ForbiddenSet& f);

    int k() const { return k_; }
    int block_length() const { return block_; }
    int memory() const { return memory_; }
    bool empty() const { return vertices_.empty(); }

    bool contains(const Word& w) const;
    /// For w in the language: is w + a in the language.
    bool extends(const Word& w, char a) const;

    /// |B_n| as a floating count (exact below 2^53).
    double count(int n) const;
    std::vector<Word> enumerate(int n, std::size_t max_words) const;

    /// Essential graph on blocks of length block_length().
    const SftGraph& graph() const { return graph_; }
    /// Is the periodic point p^infinity in the shift.
    bool contains_periodic(const Word& p) const;

private:
    int k_ = 0;
    int memory_ = 0;
    int block_ = 1;
    std::unordered_set<Word> forbidden_;
    std::size_t max_forbidden_ = 0;
    SftGraph graph_;
    std::unordered_map<Word, int> vertex_id_;
    std::vector<Word> vertices_;
    std::unordered_set<Word> short_words_;
};

struct WordList {
    std::vector<Word> words;
    double count = 0.0;
};

WordList enumerate_words(const SubshiftSpec& s, int n, const Budgets& budgets = kDefaultBudgets);

/// Vertex shift on the (M+1)-blocks of the closure.
SftGraph higher_block(const SubshiftSpec& s, int block_length, const Budgets& budgets = kDefaultBudgets);

}  // namespace hypbill
