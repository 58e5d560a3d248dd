// The concrete substrate the operators act on: canonical eventually-periodic
// right-infinite admissible sequences label the orthonormal basis, and
// prepend/shift realize the generator actions.  Everything is exact; formal
// vectors carry integer coefficients.

#ifndef SHIFTREP_SEQSPACE_HPP
#define SHIFTREP_SEQSPACE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "shiftrep/language.hpp"
#include "shiftrep/word.hpp"

namespace shiftrep {

// prefix . cycle . cycle . ...  Canonical form: the cycle is primitive (not
// a proper power) and no further letter of the prefix can be absorbed into
// the period, i.e. the prefix is empty or ends in a letter different from
// the cycle's last.  Canonical records are equal iff they denote the same
// infinite sequence; rotations of a pure cycle are distinct sequences and
// are not identified.
class EvpSeq {
public:
    // Builds the canonical record: reduce the cycle to its primitive root,
    // then roll the prefix back into the period while its last letter
    // matches the cycle's last (rotating the cycle right each time).
    static EvpSeq canonical(PositiveWord prefix, PositiveWord cycle) {
        if (cycle.empty()) throw std::invalid_argument("cycle must be nonempty");
        std::vector<int> c = cycle.gens();
        for (std::size_t d = 1; d < c.size(); ++d) {
            if (c.size() % d != 0) continue;
            bool periodic = true;
            for (std::size_t i = d; i < c.size() && periodic; ++i)
                if (c[i] != c[i - d]) periodic = false;
            if (periodic) {
                c.resize(d);
                break;
            }
        }
        std::vector<int> p = prefix.gens();
        while (!p.empty() && p.back() == c.back()) {
            p.pop_back();
            c.insert(c.begin(), c.back());
            c.pop_back();
        }
        return EvpSeq(PositiveWord(std::move(p)), PositiveWord(std::move(c)));
    }

    const PositiveWord& prefix() const { return prefix_; }
    const PositiveWord& cycle() const { return cycle_; }

    // First letter of the unfolding.
    int first() const { return prefix_.empty() ? cycle_.front() : prefix_.front(); }

    // The first len letters of the infinite sequence.
    std::vector<int> unfold(std::size_t len) const {
        std::vector<int> out;
        out.reserve(len);
        for (std::size_t i = 0; i < len; ++i) {
            if (i < prefix_.size())
                out.push_back(prefix_.at(i));
            else
                out.push_back(cycle_.at((i - prefix_.size()) % cycle_.size()));
        }
        return out;
    }

    friend bool operator==(const EvpSeq&, const EvpSeq&) = default;
    // Canonical vector order: length-lex on the prefix, then on the cycle.
    friend auto operator<=>(const EvpSeq& a, const EvpSeq& b) {
        if (auto c = a.prefix_ <=> b.prefix_; c != 0) return c;
        return a.cycle_ <=> b.cycle_;
    }

private:
    EvpSeq(PositiveWord p, PositiveWord c) : prefix_(std::move(p)), cycle_(std::move(c)) {}
    PositiveWord prefix_;
    PositiveWord cycle_;
};

// Every factor of length <= memory of the infinite unfolding occurs within
// this finite window; scanning it decides admissibility.
inline std::size_t admissibility_window(const EvpSeq& x, const SftLanguage& lang) {
    return x.prefix().size() + 2 * x.cycle().size() + static_cast<std::size_t>(lang.memory());
}

inline bool is_admissible(const EvpSeq& x, const SftLanguage& lang) {
    return lang.member(PositiveWord(x.unfold(admissibility_window(x, lang))));
}

// Drop the first letter of the unfolding and re-canonicalize.
inline EvpSeq shift(const EvpSeq& x) {
    if (!x.prefix().empty()) {
        std::vector<int> p(x.prefix().gens().begin() + 1, x.prefix().gens().end());
        return EvpSeq::canonical(PositiveWord(std::move(p)), x.cycle());
    }
    std::vector<int> c = x.cycle().gens();
    c.push_back(c.front());
    c.erase(c.begin());
    return EvpSeq::canonical(PositiveWord{}, PositiveWord(std::move(c)));
}

// g_i . x when that sequence is admissible, absent otherwise.  Since x is
// admissible, only forbidden factors covering the new first position can
// appear, so the check scans the first memory-1 junction factors.
//
// SHIFTREP_MUTATION_NO_JUNCTION_CHECK disables the junction check; the
// resulting (wrong) model is used by the verifier's mutation-control tests.
inline std::optional<EvpSeq> prepend(int i, const EvpSeq& x, const SftLanguage& lang) {
    if (i < 1 || i > lang.alphabet_size())
        throw std::invalid_argument("prepend: generator index out of range");
#if !defined(SHIFTREP_MUTATION_NO_JUNCTION_CHECK)
    std::vector<int> head = x.unfold(static_cast<std::size_t>(lang.memory()) - 1);
    head.insert(head.begin(), i);
    for (const auto& f : lang.forbidden()) {
        if (f.size() > head.size()) continue;
        if (std::equal(f.gens().begin(), f.gens().end(), head.begin())) return std::nullopt;
    }
#endif
    std::vector<int> p = x.prefix().gens();
    p.insert(p.begin(), i);
    return EvpSeq::canonical(PositiveWord(std::move(p)), x.cycle());
}

// All canonical admissible sequences reachable from candidate pairs with
// |prefix| <= max_prefix and 1 <= |cycle| <= max_cycle.  An empty result is
// the empty-space signal: no admissible sequence exists within the bounds.
inline std::vector<EvpSeq> enumerate_vectors(const SftLanguage& lang, int max_prefix, int max_cycle) {
    if (max_prefix < 0 || max_cycle < 1)
        throw std::invalid_argument("enumerate_vectors: need max_prefix >= 0 and max_cycle >= 1");
    std::set<EvpSeq> out;
    auto prefixes = enumerate_positive(lang.alphabet_size(), max_prefix);
    auto cycles = enumerate_positive(lang.alphabet_size(), max_cycle);
    for (const auto& c : cycles) {
        if (c.empty()) continue;
        for (const auto& p : prefixes) {
            EvpSeq x = EvpSeq::canonical(p, c);
            if (is_admissible(x, lang)) out.insert(x);
        }
    }
    return std::vector<EvpSeq>(out.begin(), out.end());
}

// Finitely supported integer combination of basis sequences.  No zero
// coefficients are stored; the empty map is the zero vector.
class FormalVector {
public:
    FormalVector() = default;

    static FormalVector basis(const EvpSeq& x) {
        FormalVector v;
        v.terms_[x] = 1;
        return v;
    }

    void add(const EvpSeq& x, std::int64_t coef) {
        if (coef == 0) return;
        auto [it, inserted] = terms_.emplace(x, coef);
        if (!inserted) {
            it->second += coef;
            if (it->second == 0) terms_.erase(it);
        }
    }

    const std::map<EvpSeq, std::int64_t>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    friend bool operator==(const FormalVector&, const FormalVector&) = default;

private:
    std::map<EvpSeq, std::int64_t> terms_;
};

// --- rendering and parsing -------------------------------------------------
//
// Sequences render as `prefix|cycle`, e.g. `g1|g1 g2` and `e|g2 g1`.

inline std::string render(const EvpSeq& x) {
    return render(x.prefix()) + "|" + render(x.cycle());
}

inline EvpSeq parse_seq(const std::string& text) {
    auto bar = text.find('|');
    if (bar == std::string::npos || text.find('|', bar + 1) != std::string::npos)
        throw std::invalid_argument("sequence must be 'prefix|cycle': '" + text + "'");
    PositiveWord prefix = parse_positive(text.substr(0, bar));
    PositiveWord cycle = parse_positive(text.substr(bar + 1));
    if (cycle.empty()) throw std::invalid_argument("sequence cycle must be nonempty");
    return EvpSeq::canonical(prefix, cycle);
}

inline std::string render(const FormalVector& v) {
    if (v.is_zero()) return "0";
    if (v.terms().size() == 1 && v.terms().begin()->second == 1)
        return render(v.terms().begin()->first);
    std::string out;
    bool first = true;
    for (const auto& [x, c] : v.terms()) {
        std::int64_t mag = c < 0 ? -c : c;
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (mag != 1) out += std::to_string(mag) + " ";
        out += "(" + render(x) + ")";
        first = false;
    }
    return out;
}

}  // namespace shiftrep

#endif  // SHIFTREP_SEQSPACE_HPP
