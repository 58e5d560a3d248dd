// The language Lambda*: the factor language of a subshift of finite type,
// given by finitely many forbidden positive words.  Membership, length-lex
// enumeration, the exit sets L_mu^k, the uniqueness lemma for exit-set
// extensions, and the Markov (transition matrix) specialization.

#ifndef SHIFTREP_LANGUAGE_HPP
#define SHIFTREP_LANGUAGE_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "shiftrep/verdict.hpp"
#include "shiftrep/word.hpp"

namespace shiftrep {

inline constexpr int kMaxAlphabet = 64;

// A 0/1 transition matrix.  Entry (i,j) = 1 allows g_i g_j as a factor.
class MarkovSpec {
public:
    explicit MarkovSpec(std::vector<std::vector<int>> a) : a_(std::move(a)) {
        if (a_.empty()) throw std::invalid_argument("markov matrix must be nonempty");
        for (const auto& row : a_) {
            if (row.size() != a_.size()) throw std::invalid_argument("markov matrix must be square");
            for (int v : row)
                if (v != 0 && v != 1) throw std::invalid_argument("markov matrix entries must be 0/1");
        }
    }

    int size() const { return static_cast<int>(a_.size()); }
    int at(int i, int j) const { return a_.at(i - 1).at(j - 1); }  // 1-based
    const std::vector<std::vector<int>>& rows() const { return a_; }

    friend bool operator==(const MarkovSpec&, const MarkovSpec&) = default;

private:
    std::vector<std::vector<int>> a_;
};

class SftLanguage {
public:
    // Forbidden words must have length >= 2, which keeps e and every
    // generator inside the language.  The set is normalized: duplicates and
    // words containing another forbidden word as a factor are dropped.
    SftLanguage(int n, std::vector<PositiveWord> forbidden) : n_(n) {
        if (n < 1 || n > kMaxAlphabet)
            throw std::invalid_argument("alphabet size must be between 1 and " + std::to_string(kMaxAlphabet));
        for (const auto& w : forbidden) {
            if (w.size() < 2) throw std::invalid_argument("forbidden words must have length >= 2");
            for (int g : w.gens())
                if (g > n) throw std::invalid_argument("forbidden word uses generator beyond alphabet");
        }
        std::sort(forbidden.begin(), forbidden.end());
        forbidden.erase(std::unique(forbidden.begin(), forbidden.end()), forbidden.end());
        for (const auto& w : forbidden) {
            bool redundant = false;
            for (const auto& f : forbidden_)
                if (contains_factor(w, f)) { redundant = true; break; }
            if (!redundant) forbidden_.push_back(w);
        }
        memory_ = 1;
        for (const auto& w : forbidden_) memory_ = std::max(memory_, static_cast<int>(w.size()));
    }

    static SftLanguage from_markov(const MarkovSpec& spec) {
        std::vector<PositiveWord> forbidden;
        int n = spec.size();
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                if (spec.at(i, j) == 0) forbidden.push_back(PositiveWord({i, j}));
        SftLanguage lang(n, std::move(forbidden));
        lang.from_markov_ = true;
        return lang;
    }

    int alphabet_size() const { return n_; }
    int memory() const { return memory_; }
    const std::vector<PositiveWord>& forbidden() const { return forbidden_; }
    bool built_from_markov() const { return from_markov_; }

    // The transition matrix, when the language is a Markov shift (all
    // forbidden words have length 2).
    std::optional<MarkovSpec> markov() const {
        if (memory_ > 2) return std::nullopt;
        std::vector<std::vector<int>> a(n_, std::vector<int>(n_, 1));
        for (const auto& w : forbidden_) a[w.at(0) - 1][w.at(1) - 1] = 0;
        return MarkovSpec(std::move(a));
    }

    void check_word(const PositiveWord& mu) const {
        for (int g : mu.gens())
            if (g > n_) throw std::invalid_argument("word uses generator beyond alphabet: " + render(mu));
    }

    // True iff no forbidden word occurs as a contiguous factor of mu.
    bool member(const PositiveWord& mu) const {
        check_word(mu);
        return scan_ok(mu.gens().data(), mu.size());
    }

    // Membership test for appending one letter to an already-admissible
    // word: only factors ending at the new letter need scanning.
    bool extend_ok(const std::vector<int>& gens) const {
        std::size_t len = gens.size();
        for (const auto& f : forbidden_) {
            std::size_t fl = f.size();
            if (fl > len) continue;
            if (std::equal(f.gens().begin(), f.gens().end(), gens.begin() + (len - fl))) return false;
        }
        return true;
    }

    // All members of Lambda* with length <= maxlen, in length-lex order,
    // beginning with e.
    std::vector<PositiveWord> enumerate(int maxlen) const {
        std::vector<PositiveWord> out;
        out.emplace_back();
        std::vector<std::vector<int>> layer{{}};
        for (int len = 1; len <= maxlen; ++len) {
            std::vector<std::vector<int>> next;
            for (const auto& w : layer) {
                for (int g = 1; g <= n_; ++g) {
                    std::vector<int> ext = w;
                    ext.push_back(g);
                    if (extend_ok(ext)) next.push_back(std::move(ext));
                }
            }
            for (const auto& w : next) out.push_back(PositiveWord(w));
            layer = std::move(next);
        }
        return out;
    }

    // The exit set L_mu^k: words nu in Lambda* of length k such that
    // mu nu_1...nu_{k-1} stays in Lambda* while mu nu leaves it.  For k = 1
    // this is { g_j : mu g_j not in Lambda* }.
    std::vector<PositiveWord> l_set(const PositiveWord& mu, int k) const {
        if (!member(mu)) throw std::invalid_argument("l_set: mu not in the language: " + render(mu));
        if (k < 1) throw std::invalid_argument("l_set: k must be >= 1");
        std::vector<PositiveWord> out;
        for (const auto& nu : enumerate(k)) {
            if (static_cast<int>(nu.size()) != k) continue;
            PositiveWord head = concat(mu, nu.factor(0, nu.size() - 1));
            if (!member(head)) continue;
            if (!member(concat(mu, nu))) out.push_back(nu);
        }
        return out;
    }

    // Every nonempty exit set, k = 1..memory-1.  A forbidden factor
    // witnessing mu nu leaving Lambda* must end at the last letter of nu and
    // start inside mu, so its length is at least k+1; hence L_mu^k is empty
    // for every k >= memory and the map below certifies the whole family.
    std::map<int, std::vector<PositiveWord>> l_sets_all(const PositiveWord& mu) const {
        if (!member(mu)) throw std::invalid_argument("l_sets_all: mu not in the language: " + render(mu));
        std::map<int, std::vector<PositiveWord>> out;
        for (int k = 1; k <= memory_ - 1; ++k) out[k] = l_set(mu, k);
        return out;
    }

    friend bool operator==(const SftLanguage& a, const SftLanguage& b) {
        return a.n_ == b.n_ && a.forbidden_ == b.forbidden_;
    }

private:
    static bool contains_factor(const PositiveWord& w, const PositiveWord& f) {
        if (f.size() > w.size()) return false;
        for (std::size_t i = 0; i + f.size() <= w.size(); ++i)
            if (std::equal(f.gens().begin(), f.gens().end(), w.gens().begin() + i)) return true;
        return false;
    }

    bool scan_ok(const int* data, std::size_t len) const {
        for (const auto& f : forbidden_) {
            std::size_t fl = f.size();
            if (fl > len) continue;
            for (std::size_t i = 0; i + fl <= len; ++i)
                if (std::equal(f.gens().begin(), f.gens().end(), data + i)) return false;
        }
        return true;
    }

    int n_;
    std::vector<PositiveWord> forbidden_;  // normalized, sorted
    int memory_;
    bool from_markov_ = false;
};

// All positive words over the alphabet with length <= maxlen, length-lex.
inline std::vector<PositiveWord> enumerate_positive(int n, int maxlen) {
    std::vector<PositiveWord> out;
    out.emplace_back();
    std::size_t start = 0;
    for (int len = 1; len <= maxlen; ++len) {
        std::size_t end = out.size();
        for (std::size_t i = start; i < end; ++i)
            for (int g = 1; g <= n; ++g) {
                std::vector<int> ext = out[i].gens();
                ext.push_back(g);
                out.push_back(PositiveWord(std::move(ext)));
            }
        start = end;
    }
    return out;
}

// Checks the three language axioms (e and every generator belong, closure
// under factors) on the enumeration up to memory + 2.  Factor closure holds
// by construction for factor languages but is asserted anyway.
inline Verdict validate(const SftLanguage& lang) {
    std::int64_t checked = 0;
    auto failure = [&](const std::string& what, const PositiveWord& w) {
        Witness wit;
        wit.entries["axiom"] = what;
        wit.entries["word"] = render(w);
        return Verdict::fail(checked, wit);
    };
    ++checked;
    if (!lang.member(PositiveWord{})) return failure("e in language", PositiveWord{});
    for (int g = 1; g <= lang.alphabet_size(); ++g) {
        ++checked;
        if (!lang.member(PositiveWord({g}))) return failure("generators in language", PositiveWord({g}));
    }
    for (const auto& w : lang.enumerate(lang.memory() + 2))
        for (const auto& f : factors(w)) {
            ++checked;
            if (!lang.member(f)) return failure("factor closure", f);
        }
    return Verdict::pass(checked);
}

namespace detail {

// Exit-set family battery for one mu: over all v in L_mu^k, v' in L_mu^l and
// positive completions r, s within the length bound, whenever vr = v's as
// words then v = v'.  Returns the first violating tuple in enumeration
// order, if any.
struct Lemma1FamilyResult {
    std::optional<Witness> violation;
};

inline Lemma1FamilyResult lemma1_check_family(const std::map<int, std::vector<PositiveWord>>& fam,
                                              int n, int max_word_len) {
    Lemma1FamilyResult res;
    std::vector<PositiveWord> all;
    for (const auto& [k, set] : fam) {
        (void)k;
        for (const auto& v : set) all.push_back(v);
    }
    auto completions = enumerate_positive(n, max_word_len);
    for (const auto& v : all) {
        if (static_cast<int>(v.size()) > max_word_len) continue;
        for (const auto& vp : all) {
            if (static_cast<int>(vp.size()) > max_word_len) continue;
            for (const auto& r : completions) {
                if (v.size() + r.size() > static_cast<std::size_t>(max_word_len)) continue;
                PositiveWord vr = concat(v, r);
                for (const auto& s : completions) {
                    if (vp.size() + s.size() != vr.size()) continue;
                    if (vr == concat(vp, s) && !(v == vp)) {
                        Witness w;
                        w.entries["v"] = render(v);
                        w.entries["v_prime"] = render(vp);
                        w.entries["r"] = render(r);
                        w.entries["s"] = render(s);
                        w.entries["vr"] = render(vr);
                        res.violation = w;
                        return res;
                    }
                }
            }
        }
    }
    return res;
}

}  // namespace detail

// Exhaustive check of exit-set uniqueness: for every mu in Lambda* up to the
// bound, distinct members of the exit-set family never extend to the same
// positive word.  The family battery depends only on the exit sets
// themselves, so results are memoized per family.
inline Verdict verify_lemma1(const SftLanguage& lang, int max_word_len) {
    std::map<std::map<int, std::vector<PositiveWord>>, detail::Lemma1FamilyResult> cache;
    std::int64_t checked = 0;
    for (const auto& mu : lang.enumerate(max_word_len)) {
        auto fam = lang.l_sets_all(mu);
        auto it = cache.find(fam);
        if (it == cache.end())
            it = cache.emplace(fam, detail::lemma1_check_family(fam, lang.alphabet_size(), max_word_len)).first;
        ++checked;
        if (it->second.violation) {
            Witness w = *it->second.violation;
            w.entries["mu"] = render(mu);
            return Verdict::fail(checked, w);
        }
    }
    return Verdict::pass(checked);
}

}  // namespace shiftrep

#endif  // SHIFTREP_LANGUAGE_HPP
