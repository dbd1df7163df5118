#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hypbill/symdyn.hpp"

namespace hypbill {

/// Membership oracle for a shift space defined by a rule rather than a
/// finite forbidden list. Languages must be factor-closed and extendable.
class ShiftRule {
public:
    virtual ~ShiftRule() = default;

    virtual std::string name() const = 0;
    virtual int k() const = 0;
    virtual bool contains(const Word& w) const = 0;
    /// For w in the language: is w + a in the language.
    virtual bool extends(const Word& w, char a) const { return contains(w + a); }
    /// Is the periodic point p^infinity in the shift.
    virtual bool contains_periodic(const Word& p) const = 0;
    /// Certificate that no word of the language contains u followed later by v.
    virtual bool never_connects(const Word& /*u*/, const Word& /*v*/) const { return false; }
};

/// Immutable handle to a subshift, SFT-backed or rule-backed.
class SubshiftHandle {
public:
    static SubshiftHandle sft(const SubshiftSpec& spec, std::string name = "sft");
    static SubshiftHandle rule(std::shared_ptr<const ShiftRule> rule);

    /// Forbids 2 1^k 2 for every odd k, over {1,2}.
    static SubshiftHandle even_shift();
    /// Points with at most one letter other than 1, over {1,2,3}.
    static SubshiftHandle single_defect();
    /// The single periodic orbit of p^infinity.
    static SubshiftHandle periodic_orbit(const Word& p, int k);

    const std::string& name() const { return name_; }
    int k() const { return k_; }
    bool is_sft() const { return static_cast<bool>(language_); }
    /// Null for rule-backed handles.
    const SubshiftSpec* spec() const { return spec_.get(); }
    const SftLanguage* language() const { return language_.get(); }

    bool contains(const Word& w) const;
    bool extends(const Word& w, char a) const;
    bool contains_periodic(const Word& p) const;
    bool never_connects(const Word& u, const Word& v) const;

    /// Image under the letter bijection a -> perm[a-1].
    SubshiftHandle relabeled(const std::vector<int>& perm) const;

    /// Words of length n, lexicographic.
    std::vector<Word> words(int n, std::size_t max_words) const;

private:
    SubshiftHandle() = default;

    std::string name_;
    int k_ = 0;
    std::shared_ptr<const SubshiftSpec> spec_;
    std::shared_ptr<const SftLanguage> language_;
    std::shared_ptr<const ShiftRule> rule_;
};

}  // namespace hypbill
