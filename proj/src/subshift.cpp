#include "hypbill/subshift.hpp"

#include <algorithm>

#include "hypbill/error.hpp"

namespace hypbill {

namespace {

bool letters_within(const Word& w, int k) {
    return std::all_of(w.begin(), w.end(), [k](char c) { return letter_value(c) >= 1 && letter_value(c) <= k; });
}

class EvenShiftRule final : public ShiftRule {
public:
    std::string name() const override { return "even_shift"; }
    int k() const override { return 2; }

    bool contains(const Word& w) const override {
        if (!letters_within(w, 2)) return false;
        std::size_t last_two = Word::npos;
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (w[i] != '2') continue;
            if (last_two != Word::npos && (i - last_two - 1) % 2 == 1) return false;
            last_two = i;
        }
        return true;
    }

    bool extends(const Word& w, char a) const override {
        if (a == '1') return true;
        if (a != '2') return false;
        const auto pos = w.rfind('2');
        return pos == Word::npos || (w.size() - pos - 1) % 2 == 0;
    }

    bool contains_periodic(const Word& p) const override {
        if (p.empty() || !letters_within(p, 2)) return false;
        if (p.find('2') == Word::npos) return true;
        return contains(p + p + p);
    }
};

/// At most one letter differs from 1.
class SingleDefectRule final : public ShiftRule {
public:
    std::string name() const override { return "single_defect"; }
    int k() const override { return 3; }

    bool contains(const Word& w) const override {
        return letters_within(w, 3) && std::count_if(w.begin(), w.end(), [](char c) { return c != '1'; }) <= 1;
    }

    bool extends(const Word& w, char a) const override {
        if (letter_value(a) < 1 || letter_value(a) > 3) return false;
        return a == '1' || w.find_first_not_of('1') == Word::npos;
    }

    bool contains_periodic(const Word& p) const override {
        return !p.empty() && p.find_first_not_of('1') == Word::npos;
    }

    bool never_connects(const Word& u, const Word& v) const override {
        return u.find_first_not_of('1') != Word::npos && v.find_first_not_of('1') != Word::npos;
    }
};

class PeriodicOrbitRule final : public ShiftRule {
public:
    PeriodicOrbitRule(const Word& p, int k) : root_(primitive_root(p)), k_(k) {}

    std::string name() const override { return "orbit(" + root_ + ")"; }
    int k() const override { return k_; }

    bool contains(const Word& w) const override {
        Word text = root_;
        while (text.size() < w.size() + root_.size()) text += root_;
        return text.find(w) != Word::npos;
    }

    bool contains_periodic(const Word& p) const override {
        return !p.empty() && is_cyclic_rotation(primitive_root(p), root_);
    }

private:
    Word root_;
    int k_;
};

class RelabeledRule final : public ShiftRule {
public:
    RelabeledRule(std::shared_ptr<const ShiftRule> inner, std::vector<int> perm)
        : inner_(std::move(inner)), inverse_(perm.size() + 1, 0) {
        for (std::size_t i = 0; i < perm.size(); ++i) inverse_[static_cast<std::size_t>(perm[i])] = static_cast<int>(i) + 1;
    }

    std::string name() const override { return inner_->name() + "'"; }
    int k() const override { return inner_->k(); }
    bool contains(const Word& w) const override { return letters_within(w, k()) && inner_->contains(back(w)); }
    bool extends(const Word& w, char a) const override {
        return letters_within(Word(1, a), k()) && inner_->extends(back(w), back(Word(1, a))[0]);
    }
    bool contains_periodic(const Word& p) const override {
        return letters_within(p, k()) && inner_->contains_periodic(back(p));
    }
    bool never_connects(const Word& u, const Word& v) const override { return inner_->never_connects(back(u), back(v)); }

private:
    Word back(const Word& w) const {
        Word out = w;
        for (char& c : out) c = letter_char(inverse_[static_cast<std::size_t>(letter_value(c))]);
        return out;
    }

    std::shared_ptr<const ShiftRule> inner_;
    std::vector<int> inverse_;
};

}  // namespace

SubshiftHandle SubshiftHandle::sft(const SubshiftSpec& spec, std::string name) {
    SubshiftHandle h;
    h.name_ = std::move(name);
    h.k_ = spec.k();
    h.spec_ = std::make_shared<const SubshiftSpec>(spec);
    h.language_ = std::make_shared<const SftLanguage>(spec.closure);
    return h;
}

SubshiftHandle SubshiftHandle::rule(std::shared_ptr<const ShiftRule> rule) {
    SubshiftHandle h;
    h.name_ = rule->name();
    h.k_ = rule->k();
    h.rule_ = std::move(rule);
    return h;
}

SubshiftHandle SubshiftHandle::even_shift() { return rule(std::make_shared<EvenShiftRule>()); }

SubshiftHandle SubshiftHandle::single_defect() { return rule(std::make_shared<SingleDefectRule>()); }

SubshiftHandle SubshiftHandle::periodic_orbit(const Word& p, int k) {
    check_alphabet(p, k);
    return rule(std::make_shared<PeriodicOrbitRule>(p, k));
}

bool SubshiftHandle::contains(const Word& w) const {
    return language_ ? language_->contains(w) : rule_->contains(w);
}

bool SubshiftHandle::extends(const Word& w, char a) const {
    return language_ ? language_->extends(w, a) : rule_->extends(w, a);
}

bool SubshiftHandle::contains_periodic(const Word& p) const {
    return language_ ? language_->contains_periodic(p) : rule_->contains_periodic(p);
}

bool SubshiftHandle::never_connects(const Word& u, const Word& v) const {
    return rule_ ? rule_->never_connects(u, v) : false;
}

SubshiftHandle SubshiftHandle::relabeled(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != k_) throw Error(ErrorCode::AlphabetMismatch, "permutation size differs from alphabet");
    if (rule_) {
        SubshiftHandle h = rule(std::make_shared<RelabeledRule>(rule_, perm));
        return h;
    }
    SubshiftSpec s = *spec_;
    auto map = [&](Word w) {
        for (char& c : w) c = letter_char(perm[static_cast<std::size_t>(letter_value(c) - 1)]);
        return w;
    };
    for (auto& w : s.closure.words) w = map(w);
    for (auto& [a, b] : s.exclusion_pairs) {
        a = perm[static_cast<std::size_t>(a - 1)];
        b = perm[static_cast<std::size_t>(b - 1)];
    }
    return sft(s, name_ + "'");
}

std::vector<Word> SubshiftHandle::words(int n, std::size_t max_words) const {
    if (language_) return language_->enumerate(n, max_words);
    std::vector<Word> out;
    if (n <= 0) return out;
    std::vector<Word> level{Word()};
    for (int len = 1; len <= n; ++len) {
        std::vector<Word> next;
        for (const auto& w : level) {
            for (int a = 1; a <= k_; ++a) {
                const char c = letter_char(a);
                if (!rule_->extends(w, c)) continue;
                next.push_back(w + c);
                if (next.size() > max_words) throw Error(ErrorCode::BudgetExceeded, "too many words");
            }
        }
        level.swap(next);
    }
    return level;
}

}  // namespace hypbill
