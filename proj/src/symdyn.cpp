#include "hypbill/symdyn.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>
#include <set>

#include "hypbill/error.hpp"

namespace hypbill {

Word word_from_labels(const std::vector<int>& labels) {
    Word w;
    for (int l : labels) {
        if (l < 1 || l > kMaxAlphabet) throw Error(ErrorCode::AlphabetMismatch, "label outside 1..9");
        w.push_back(letter_char(l));
    }
    return w;
}

std::vector<int> labels_of(const Word& w) {
    std::vector<int> out;
    out.reserve(w.size());
    for (char c : w) out.push_back(letter_value(c));
    return out;
}

void check_alphabet(const Word& w, int k) {
    for (char c : w) {
        const int v = letter_value(c);
        if (v < 1 || v > k) {
            throw Error(ErrorCode::AlphabetMismatch, "letter '" + std::string(1, c) + "' outside alphabet 1.." +
                                                         std::to_string(k));
        }
    }
}

bool is_cyclic_rotation(const Word& a, const Word& b) {
    return a.size() == b.size() && (a + a).find(b) != Word::npos;
}

Word primitive_root(const Word& w) {
    const std::size_t n = w.size();
    for (std::size_t p = 1; p <= n; ++p) {
        if (n % p != 0) continue;
        bool ok = true;
        for (std::size_t i = p; i < n && ok; ++i) ok = w[i] == w[i - p];
        if (ok) return w.substr(0, p);
    }
    return w;
}

std::string PointedWord::text() const { return letters.substr(0, origin) + "." + letters.substr(origin); }

std::size_t ForbiddenSet::max_length() const {
    std::size_t m = 0;
    for (const auto& w : words) m = std::max(m, w.size());
    return m;
}

ForbiddenSet reduce(const ForbiddenSet& f) {
    std::vector<Word> sorted = f.words;
    std::sort(sorted.begin(), sorted.end(), [](const Word& a, const Word& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    ForbiddenSet out{f.k, {}};
    for (const auto& w : sorted) {
        const bool covered = std::any_of(out.words.begin(), out.words.end(),
                                         [&](const Word& kept) { return w.find(kept) != Word::npos; });
        if (!covered) out.words.push_back(w);
    }
    return out;
}

namespace {

Word alternation(int a, int b, int length) {
    Word w;
    for (int i = 0; i < length; ++i) w.push_back(letter_char(i % 2 == 0 ? a : b));
    return w;
}

}  // namespace

SubshiftSpec forbidden_set(const PolygonSpec& p) {
    const int k = p.k();
    if (k > kMaxAlphabet) throw Error(ErrorCode::AlphabetTooLarge, "at most 9 sides are supported");
    SubshiftSpec s;
    s.closure.k = k;
    for (int i = 1; i <= k; ++i) s.closure.words.push_back(Word(2, letter_char(i)));
    for (int i = 1; i <= k; ++i) {
        const auto& v = p.vertices[static_cast<std::size_t>(i - 1)];
        const int next = i % k + 1;
        if (v.kind == VertexKind::Rational) {
            // More than lambda alternating hits at a pi/lambda corner cannot occur.
            const int len = *v.lambda + 1;
            s.closure.words.push_back(alternation(i, next, len));
            s.closure.words.push_back(alternation(next, i, len));
        } else {
            s.exclusion_pairs.emplace_back(i, next);
        }
    }
    s.closure = reduce(s.closure);
    return s;
}

SubshiftSpec parse_subshift_spec(const std::string& json_text) {
    using nlohmann::json;
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw Error(ErrorCode::ParseError, "subshift spec must be an object");
    for (const auto& item : doc.items()) {
        if (item.key() != "k" && item.key() != "forbidden" && item.key() != "exclusion_pairs") {
            throw Error(ErrorCode::ParseError, "unknown field '" + item.key() + "' in subshift spec");
        }
    }
    if (!doc.contains("k") || !doc["k"].is_number_integer()) throw Error(ErrorCode::ParseError, "'k' must be an integer");
    SubshiftSpec s;
    s.closure.k = doc["k"].get<int>();
    if (s.closure.k < 1) throw Error(ErrorCode::InvalidArgument, "alphabet size must be positive");
    if (s.closure.k > kMaxAlphabet) throw Error(ErrorCode::AlphabetTooLarge, "at most 9 letters are supported");
    if (doc.contains("forbidden")) {
        if (!doc["forbidden"].is_array()) throw Error(ErrorCode::ParseError, "'forbidden' must be an array");
        for (const auto& w : doc["forbidden"]) {
            if (!w.is_string() || w.get<std::string>().empty()) {
                throw Error(ErrorCode::ParseError, "forbidden words must be nonempty strings");
            }
            const Word word = w.get<std::string>();
            check_alphabet(word, s.closure.k);
            s.closure.words.push_back(word);
        }
    }
    if (doc.contains("exclusion_pairs")) {
        if (!doc["exclusion_pairs"].is_array()) throw Error(ErrorCode::ParseError, "'exclusion_pairs' must be an array");
        for (const auto& pr : doc["exclusion_pairs"]) {
            if (!pr.is_array() || pr.size() != 2 || !pr[0].is_number_integer() || !pr[1].is_number_integer()) {
                throw Error(ErrorCode::ParseError, "exclusion pairs must be [i, j]");
            }
            s.exclusion_pairs.emplace_back(pr[0].get<int>(), pr[1].get<int>());
        }
    }
    return s;
}

std::string subshift_spec_to_json(const SubshiftSpec& s) {
    nlohmann::json doc;
    doc["k"] = s.closure.k;
    doc["forbidden"] = s.closure.words;
    auto pairs = nlohmann::json::array();
    for (const auto& [a, b] : s.exclusion_pairs) pairs.push_back({a, b});
    doc["exclusion_pairs"] = pairs;
    return doc.dump();
}

AdmissibilityVerdict is_admissible(const Word& w, const SubshiftSpec& s, bool periodic) {
    check_alphabet(w, s.k());
    AdmissibilityVerdict v;
    if (w.empty()) return v;
    std::set<std::size_t> lengths;
    for (const auto& f : s.closure.words) lengths.insert(f.size());
    const std::unordered_set<Word> forbidden(s.closure.words.begin(), s.closure.words.end());
    const std::size_t longest = s.closure.max_length();

    Word text = w;
    if (periodic) {
        while (text.size() < w.size() + longest) text += w;
    }
    const std::size_t starts = periodic ? w.size() : w.size();
    for (std::size_t i = 0; i < starts; ++i) {
        for (std::size_t len : lengths) {
            if (i + len > text.size()) break;
            const Word factor = text.substr(i, len);
            if (forbidden.count(factor)) {
                v.admissible = false;
                v.position = i;
                v.factor = factor;
                v.reason = "forbidden factor " + factor;
                return v;
            }
        }
    }
    if (periodic) {
        const std::set<char> letters(w.begin(), w.end());
        for (const auto& [a, b] : s.exclusion_pairs) {
            const std::set<char> pair{letter_char(a), letter_char(b)};
            if (std::includes(pair.begin(), pair.end(), letters.begin(), letters.end())) {
                v.admissible = false;
                v.reason = "period alternates only sides " + std::to_string(a) + "," + std::to_string(b) +
                           " of an ideal vertex";
                return v;
            }
        }
    }
    return v;
}

SftLanguage::SftLanguage(const ForbiddenSet& f) : k_(f.k) {
    if (k_ > kMaxAlphabet) throw Error(ErrorCode::AlphabetTooLarge, "at most 9 letters are supported");
    if (k_ < 1) throw Error(ErrorCode::InvalidArgument, "alphabet size must be positive");
    for (const auto& w : f.words) {
        check_alphabet(w, k_);
        forbidden_.insert(w);
        max_forbidden_ = std::max(max_forbidden_, w.size());
    }
    memory_ = max_forbidden_ > 0 ? static_cast<int>(max_forbidden_) - 1 : 0;
    block_ = std::max(memory_, 1);

    std::set<std::size_t> lengths;
    for (const auto& w : forbidden_) lengths.insert(w.size());
    auto has_forbidden_suffix = [&](const Word& w) {
        for (std::size_t len : lengths) {
            if (len > w.size()) break;
            if (forbidden_.count(w.substr(w.size() - len))) return true;
        }
        return false;
    };

    // All allowed blocks, lexicographic by DFS.
    std::vector<Word> blocks;
    constexpr std::size_t kBlockBudget = 8'000'000;
    Word cur;
    std::vector<int> next_letter{1};
    while (!next_letter.empty()) {
        int& a = next_letter.back();
        if (a > k_) {
            next_letter.pop_back();
            if (!cur.empty()) cur.pop_back();
            continue;
        }
        cur.push_back(letter_char(a++));
        if (has_forbidden_suffix(cur)) {
            cur.pop_back();
            continue;
        }
        if (static_cast<int>(cur.size()) == block_) {
            blocks.push_back(cur);
            if (blocks.size() > kBlockBudget) throw Error(ErrorCode::BudgetExceeded, "too many allowed blocks");
            cur.pop_back();
            continue;
        }
        next_letter.push_back(1);
    }

    std::unordered_map<Word, int> id;
    for (std::size_t i = 0; i < blocks.size(); ++i) id.emplace(blocks[i], static_cast<int>(i));
    const int n = static_cast<int>(blocks.size());
    std::vector<std::vector<int>> out(n);
    std::vector<int> indeg(n, 0);
    for (int i = 0; i < n; ++i) {
        const Word& u = blocks[static_cast<std::size_t>(i)];
        for (int a = 1; a <= k_; ++a) {
            const Word window = u + letter_char(a);
            if (forbidden_.count(window)) continue;
            auto it = id.find(window.substr(1));
            if (it == id.end()) continue;
            out[i].push_back(it->second);
            ++indeg[it->second];
        }
    }
    // Essentialize by peeling sources and sinks.
    std::vector<bool> alive(n, true);
    std::vector<int> outdeg(n);
    std::vector<std::vector<int>> in(n);
    for (int i = 0; i < n; ++i) {
        outdeg[i] = static_cast<int>(out[i].size());
        for (int j : out[i]) in[j].push_back(i);
    }
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
        for (int j : out[v]) {
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
    for (int i = 0; i < n; ++i) {
        if (!alive[i]) continue;
        renum[i] = static_cast<int>(vertices_.size());
        vertices_.push_back(blocks[static_cast<std::size_t>(i)]);
    }
    graph_.labels = vertices_;
    graph_.out.resize(vertices_.size());
    for (int i = 0; i < n; ++i) {
        if (!alive[i]) continue;
        for (int j : out[i]) {
            if (alive[j]) graph_.out[static_cast<std::size_t>(renum[i])].push_back(renum[j]);
        }
    }
    for (std::size_t i = 0; i < vertices_.size(); ++i) vertex_id_.emplace(vertices_[i], static_cast<int>(i));
    for (const auto& v : vertices_) {
        for (int len = 1; len < block_; ++len) short_words_.insert(v.substr(0, static_cast<std::size_t>(len)));
    }
}

bool SftLanguage::contains(const Word& w) const {
    if (w.empty()) return !vertices_.empty();
    for (char c : w) {
        const int v = letter_value(c);
        if (v < 1 || v > k_) return false;
    }
    const std::size_t b = static_cast<std::size_t>(block_);
    if (w.size() < b) return short_words_.count(w) > 0;
    for (std::size_t i = 0; i + b <= w.size(); ++i) {
        if (!vertex_id_.count(w.substr(i, b))) return false;
        if (i + b < w.size() && forbidden_.count(w.substr(i, b + 1))) return false;
    }
    return true;
}

bool SftLanguage::extends(const Word& w, char a) const {
    const int v = letter_value(a);
    if (v < 1 || v > k_) return false;
    const std::size_t b = static_cast<std::size_t>(block_);
    const std::size_t n = w.size() + 1;
    if (n < b) return short_words_.count(w + a) > 0;
    Word tail = n == b ? w : w.substr(w.size() + 1 - b);
    tail.push_back(a);
    if (!vertex_id_.count(tail)) return false;
    if (n == b) return true;
    Word window = w.substr(w.size() - b);
    window.push_back(a);
    return forbidden_.count(window) == 0;
}

double SftLanguage::count(int n) const {
    if (n <= 0) return 1.0;
    if (n < block_) {
        double c = 0.0;
        for (const auto& w : short_words_) c += static_cast<int>(w.size()) == n ? 1.0 : 0.0;
        return c;
    }
    std::vector<long double> v(vertices_.size(), 1.0L);
    for (int step = block_; step < n; ++step) {
        std::vector<long double> nv(vertices_.size(), 0.0L);
        for (std::size_t i = 0; i < vertices_.size(); ++i) {
            for (int j : graph_.out[i]) nv[static_cast<std::size_t>(j)] += v[i];
        }
        v.swap(nv);
    }
    long double total = 0.0L;
    for (auto x : v) total += x;
    return static_cast<double>(total);
}

std::vector<Word> SftLanguage::enumerate(int n, std::size_t max_words) const {
    std::vector<Word> out;
    if (n <= 0) return out;
    Word cur;
    std::vector<int> next_letter{1};
    std::size_t visited = 0;
    while (!next_letter.empty()) {
        int& a = next_letter.back();
        if (a > k_) {
            next_letter.pop_back();
            if (!cur.empty()) cur.pop_back();
            continue;
        }
        const char c = letter_char(a++);
        if (!extends(cur, c)) continue;
        if (++visited > 4 * max_words + 64) throw Error(ErrorCode::BudgetExceeded, "word enumeration budget exhausted");
        cur.push_back(c);
        if (static_cast<int>(cur.size()) == n) {
            out.push_back(cur);
            if (out.size() > max_words) throw Error(ErrorCode::BudgetExceeded, "too many words");
            cur.pop_back();
            continue;
        }
        next_letter.push_back(1);
    }
    return out;
}

bool SftLanguage::contains_periodic(const Word& p) const {
    if (p.empty() || vertices_.empty()) return false;
    Word text = p;
    while (text.size() < p.size() + max_forbidden_ + 1) text += p;
    for (char c : p) {
        const int v = letter_value(c);
        if (v < 1 || v > k_) return false;
    }
    for (std::size_t i = 0; i < text.size(); ++i) {
        for (std::size_t len = 1; len <= max_forbidden_ && i + len <= text.size(); ++len) {
            if (forbidden_.count(text.substr(i, len))) return false;
        }
    }
    return true;
}

WordList enumerate_words(const SubshiftSpec& s, int n, const Budgets& budgets) {
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "word length must be positive");
    if (static_cast<std::size_t>(n) > budgets.max_word_length) {
        throw Error(ErrorCode::BudgetExceeded, "word length above the configured budget");
    }
    const SftLanguage lang(s.closure);
    WordList out;
    out.count = lang.count(n);
    if (out.count > static_cast<double>(budgets.max_words)) {
        throw Error(ErrorCode::BudgetExceeded, "B_n exceeds the word budget");
    }
    out.words = lang.enumerate(n, budgets.max_words);
    return out;
}

SftGraph higher_block(const SubshiftSpec& s, int block_length, const Budgets& budgets) {
    const int m = s.closure.max_length() > 0 ? static_cast<int>(s.closure.max_length()) - 1 : 0;
    if (block_length <= m || block_length < 1) {
        throw Error(ErrorCode::BlockTooShort, "block length must exceed the memory of the SFT");
    }
    const SftLanguage lang(s.closure);
    if (lang.count(block_length) > static_cast<double>(budgets.max_words)) {
        throw Error(ErrorCode::BudgetExceeded, "too many blocks for the higher-block graph");
    }
    SftGraph g;
    g.labels = lang.enumerate(block_length, budgets.max_words);
    std::unordered_map<Word, int> id;
    for (std::size_t i = 0; i < g.labels.size(); ++i) id.emplace(g.labels[i], static_cast<int>(i));
    g.out.resize(g.labels.size());
    for (std::size_t i = 0; i < g.labels.size(); ++i) {
        const Word& u = g.labels[i];
        for (int a = 1; a <= s.k(); ++a) {
            const char c = letter_char(a);
            auto it = id.find(u.substr(1) + c);
            if (it != id.end() && lang.extends(u, c)) g.out[i].push_back(it->second);
        }
    }
    return g;
}

}  // namespace hypbill
