// Exact arithmetic in the free group F_n: letters, reduced words, positive
// words, concatenation, inversion and factor extraction.  Words are pure
// data; they carry no alphabet size and validate lazily against a language.

#ifndef SHIFTREP_WORD_HPP
#define SHIFTREP_WORD_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace shiftrep {

// One letter of F_n: a generator index (1-based, matching g_1..g_n) and a
// sign.  inv=false means g_i, inv=true means g_i^{-1}.
struct Letter {
    int gen = 1;
    bool inv = false;

    friend bool operator==(const Letter&, const Letter&) = default;
    friend auto operator<=>(const Letter& a, const Letter& b) {
        if (auto c = a.gen <=> b.gen; c != 0) return c;
        return (a.inv ? 1 : 0) <=> (b.inv ? 1 : 0);
    }
};

inline Letter inverse(Letter l) { return Letter{l.gen, !l.inv}; }

inline void check_gen_index(int gen) {
    if (gen < 1) throw std::invalid_argument("generator index must be >= 1");
}

class FreeWord;

// A positive word: a (possibly empty) sequence of generator indices.  Always
// reduced, since no inverses occur.  The empty word is the monoid unit e.
class PositiveWord {
public:
    PositiveWord() = default;
    explicit PositiveWord(std::vector<int> gens) : gens_(std::move(gens)) {
        for (int g : gens_) check_gen_index(g);
    }

    const std::vector<int>& gens() const { return gens_; }
    std::size_t size() const { return gens_.size(); }
    bool empty() const { return gens_.empty(); }
    int at(std::size_t i) const { return gens_.at(i); }
    int front() const { return gens_.front(); }
    int back() const { return gens_.back(); }

    // Contiguous factor gens_[pos .. pos+len).
    PositiveWord factor(std::size_t pos, std::size_t len) const {
        if (pos + len > gens_.size()) throw std::out_of_range("factor out of range");
        return PositiveWord(std::vector<int>(gens_.begin() + pos, gens_.begin() + pos + len));
    }

    friend bool operator==(const PositiveWord&, const PositiveWord&) = default;
    // Length-lexicographic order; the enumeration order used everywhere.
    friend auto operator<=>(const PositiveWord& a, const PositiveWord& b) {
        if (auto c = a.gens_.size() <=> b.gens_.size(); c != 0) return c;
        return a.gens_ <=> b.gens_;
    }

private:
    std::vector<int> gens_;
};

inline PositiveWord concat(const PositiveWord& a, const PositiveWord& b) {
    std::vector<int> out = a.gens();
    out.insert(out.end(), b.gens().begin(), b.gens().end());
    return PositiveWord(std::move(out));
}

// All contiguous factors of mu, including e and mu itself.
inline std::set<PositiveWord> factors(const PositiveWord& mu) {
    std::set<PositiveWord> out;
    out.insert(PositiveWord{});
    for (std::size_t i = 0; i < mu.size(); ++i)
        for (std::size_t len = 1; i + len <= mu.size(); ++len)
            out.insert(mu.factor(i, len));
    return out;
}

// An element of F_n in reduced form: no letter is followed by its inverse.
// The empty word is the neutral element e.  Construction goes through
// reduce(), which cancels adjacent inverse pairs until none remain.
class FreeWord {
public:
    FreeWord() = default;

    static FreeWord reduce(const std::vector<Letter>& raw) {
        std::vector<Letter> out;
        out.reserve(raw.size());
        for (const Letter& l : raw) {
            check_gen_index(l.gen);
            if (!out.empty() && out.back() == inverse(l))
                out.pop_back();
            else
                out.push_back(l);
        }
        return FreeWord(std::move(out));
    }

    static FreeWord from_positive(const PositiveWord& p) {
        std::vector<Letter> ls;
        ls.reserve(p.size());
        for (int g : p.gens()) ls.push_back(Letter{g, false});
        return FreeWord(std::move(ls));
    }

    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    const Letter& at(std::size_t i) const { return letters_.at(i); }

    friend bool operator==(const FreeWord&, const FreeWord&) = default;
    friend auto operator<=>(const FreeWord& a, const FreeWord& b) {
        if (auto c = a.letters_.size() <=> b.letters_.size(); c != 0) return c;
        return a.letters_ <=> b.letters_;
    }

private:
    explicit FreeWord(std::vector<Letter> reduced) : letters_(std::move(reduced)) {}
    std::vector<Letter> letters_;
};

// Reduced product ab.  |ab| = |a|+|b| exactly when no cancellation occurs at
// the junction; otherwise cancellation cascades inward.
inline FreeWord concat(const FreeWord& a, const FreeWord& b) {
    std::vector<Letter> raw = a.letters();
    raw.insert(raw.end(), b.letters().begin(), b.letters().end());
    return FreeWord::reduce(raw);
}

// Reversed sequence with all signs flipped; concat(a, inverse(a)) = e.
inline FreeWord inverse(const FreeWord& a) {
    std::vector<Letter> out(a.letters().rbegin(), a.letters().rend());
    for (Letter& l : out) l = inverse(l);
    return FreeWord::reduce(out);  // already reduced; reduce() is a no-op here
}

inline FreeWord concat(const FreeWord& a, const FreeWord& b, const FreeWord& c) {
    return concat(concat(a, b), c);
}

// Splits a reduced word as alpha * beta^{-1} with alpha, beta positive.
// Returns nullopt (the "mixed zero" case) when the word contains an inverse
// letter immediately followed by a plain one, i.e. cannot be so written.
inline std::optional<std::pair<PositiveWord, PositiveWord>> decompose(const FreeWord& a) {
    std::size_t split = 0;
    while (split < a.size() && !a.at(split).inv) ++split;
    for (std::size_t i = split; i < a.size(); ++i)
        if (!a.at(i).inv) return std::nullopt;
    std::vector<int> alpha, beta;
    for (std::size_t i = 0; i < split; ++i) alpha.push_back(a.at(i).gen);
    for (std::size_t i = a.size(); i > split; --i) beta.push_back(a.at(i - 1).gen);
    return std::make_pair(PositiveWord(std::move(alpha)), PositiveWord(std::move(beta)));
}

// --- rendering and parsing -------------------------------------------------
//
// Words serialize as space-separated tokens `g3` / `g3^-1`; the empty word
// renders as `e`.  parse(render(w)) == w on all words.

inline std::string render(const Letter& l) {
    std::string s = "g" + std::to_string(l.gen);
    if (l.inv) s += "^-1";
    return s;
}

inline std::string render(const FreeWord& w) {
    if (w.empty()) return "e";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ' ';
        out += render(w.at(i));
    }
    return out;
}

inline std::string render(const PositiveWord& w) {
    return render(FreeWord::from_positive(w));
}

inline Letter parse_letter(const std::string& tok) {
    if (tok.size() < 2 || tok[0] != 'g')
        throw std::invalid_argument("bad letter token: '" + tok + "'");
    std::size_t i = 1;
    while (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i]))) ++i;
    if (i == 1) throw std::invalid_argument("bad letter token: '" + tok + "'");
    int gen = std::stoi(tok.substr(1, i - 1));
    bool inv = false;
    if (i < tok.size()) {
        if (tok.substr(i) != "^-1")
            throw std::invalid_argument("bad letter token: '" + tok + "'");
        inv = true;
    }
    check_gen_index(gen);
    return Letter{gen, inv};
}

inline std::vector<std::string> split_tokens(const std::string& text) {
    std::vector<std::string> toks;
    std::istringstream in(text);
    std::string t;
    while (in >> t) toks.push_back(t);
    return toks;
}

// Parses a word in the token syntax above.  The input need not be reduced;
// the result always is.
inline FreeWord parse_word(const std::string& text) {
    auto toks = split_tokens(text);
    if (toks.empty()) throw std::invalid_argument("empty word text (use 'e')");
    if (toks.size() == 1 && toks[0] == "e") return FreeWord{};
    std::vector<Letter> ls;
    for (const auto& t : toks) ls.push_back(parse_letter(t));
    return FreeWord::reduce(ls);
}

inline PositiveWord parse_positive(const std::string& text) {
    FreeWord w = parse_word(text);
    std::vector<int> gens;
    for (const Letter& l : w.letters()) {
        if (l.inv) throw std::invalid_argument("inverse letter in positive word: '" + text + "'");
        gens.push_back(l.gen);
    }
    return PositiveWord(std::move(gens));
}

}  // namespace shiftrep

#endif  // SHIFTREP_WORD_HPP
