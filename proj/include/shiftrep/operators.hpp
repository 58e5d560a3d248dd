// Formal operator expressions over the generators S_i and their adjoints,
// with exact pointwise evaluation on basis sequences.  A monomial acts as a
// partial injection on the basis; expressions are integer combinations of
// monomials.  No symbolic normalization happens here: equality of
// expressions is always semantic, tested pointwise on vector sets.

#ifndef SHIFTREP_OPERATORS_HPP
#define SHIFTREP_OPERATORS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "shiftrep/seqspace.hpp"
#include "shiftrep/verdict.hpp"
#include "shiftrep/word.hpp"

namespace shiftrep {

// S_gen (star=false) or S_gen^* (star=true).
struct Atom {
    int gen = 1;
    bool star = false;

    friend bool operator==(const Atom&, const Atom&) = default;
    friend auto operator<=>(const Atom& a, const Atom& b) {
        if (auto c = a.gen <=> b.gen; c != 0) return c;
        return (a.star ? 1 : 0) <=> (b.star ? 1 : 0);
    }
};

// A product of atoms, written left to right in composition order: the last
// atom acts first.  The empty product is the identity I.
class MonomialOp {
public:
    MonomialOp() = default;
    explicit MonomialOp(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
        for (const Atom& a : atoms_) check_gen_index(a.gen);
    }

    const std::vector<Atom>& atoms() const { return atoms_; }
    bool is_identity() const { return atoms_.empty(); }

    friend bool operator==(const MonomialOp&, const MonomialOp&) = default;
    friend auto operator<=>(const MonomialOp& a, const MonomialOp& b) {
        if (auto c = a.atoms_.size() <=> b.atoms_.size(); c != 0) return c;
        return a.atoms_ <=> b.atoms_;
    }

private:
    std::vector<Atom> atoms_;
};

inline MonomialOp mono_concat(const MonomialOp& a, const MonomialOp& b) {
    std::vector<Atom> atoms = a.atoms();
    atoms.insert(atoms.end(), b.atoms().begin(), b.atoms().end());
    return MonomialOp(std::move(atoms));
}

inline MonomialOp mono_adjoint(const MonomialOp& m) {
    std::vector<Atom> atoms(m.atoms().rbegin(), m.atoms().rend());
    for (Atom& a : atoms) a.star = !a.star;
    return MonomialOp(std::move(atoms));
}

// The representation map on words: g_j -> S_j, g_j^{-1} -> S_j^*, letter by
// letter; the empty word maps to I.
inline MonomialOp s_map(const FreeWord& r) {
    std::vector<Atom> atoms;
    atoms.reserve(r.size());
    for (const Letter& l : r.letters()) atoms.push_back(Atom{l.gen, l.inv});
    return MonomialOp(std::move(atoms));
}

inline MonomialOp s_map(const PositiveWord& mu) { return s_map(FreeWord::from_positive(mu)); }

// Finitely supported integer combination of monomials.  The empty map is
// the zero operator.
class OpExpr {
public:
    OpExpr() = default;

    static OpExpr zero() { return OpExpr{}; }
    static OpExpr identity() { return from_monomial(MonomialOp{}); }
    static OpExpr from_monomial(const MonomialOp& m, std::int64_t coef = 1) {
        OpExpr e;
        e.add(m, coef);
        return e;
    }

    void add(const MonomialOp& m, std::int64_t coef) {
        if (coef == 0) return;
        auto [it, inserted] = terms_.emplace(m, coef);
        if (!inserted) {
            it->second += coef;
            if (it->second == 0) terms_.erase(it);
        }
    }

    const std::map<MonomialOp, std::int64_t>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    friend bool operator==(const OpExpr&, const OpExpr&) = default;

    friend OpExpr operator+(const OpExpr& a, const OpExpr& b) {
        OpExpr out = a;
        for (const auto& [m, c] : b.terms_) out.add(m, c);
        return out;
    }
    friend OpExpr operator-(const OpExpr& a, const OpExpr& b) {
        OpExpr out = a;
        for (const auto& [m, c] : b.terms_) out.add(m, -c);
        return out;
    }

private:
    std::map<MonomialOp, std::int64_t> terms_;
};

// Bilinear composition, E1 after E2.
inline OpExpr compose(const OpExpr& a, const OpExpr& b) {
    OpExpr out;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) out.add(mono_concat(ma, mb), ca * cb);
    return out;
}

// Structural adjoint: reverse each monomial, toggle stars, keep integer
// coefficients.  An involution; semantic correctness (the inner-product
// identity) is a tested property, not an assumption.
inline OpExpr adjoint(const OpExpr& e) {
    OpExpr out;
    for (const auto& [m, c] : e.terms()) out.add(mono_adjoint(m), c);
    return out;
}

// Range projection S(r) S(r)^* as a formal expression.
inline OpExpr e_proj(const FreeWord& r) {
    MonomialOp m = s_map(r);
    return OpExpr::from_monomial(mono_concat(m, mono_adjoint(m)));
}

// Sum_i S_i S_i^* - I.
inline OpExpr m1_defect(const SftLanguage& lang) {
    OpExpr out;
    for (int i = 1; i <= lang.alphabet_size(); ++i)
        out.add(MonomialOp({Atom{i, false}, Atom{i, true}}), 1);
    out.add(MonomialOp{}, -1);
    return out;
}

// I - S_i^* S_i - sum over the exit-set family of S_nu S_nu^*.  The family
// is finite because exit sets vanish from k = memory on.
inline OpExpr m3_defect(const SftLanguage& lang, int i) {
    if (i < 1 || i > lang.alphabet_size())
        throw std::invalid_argument("m3_defect: generator index out of range");
    OpExpr out = OpExpr::identity();
    out.add(MonomialOp({Atom{i, true}, Atom{i, false}}), -1);
    for (const auto& [k, set] : lang.l_sets_all(PositiveWord({i}))) {
        (void)k;
        for (const auto& nu : set) {
            MonomialOp m = s_map(nu);
            out.add(mono_concat(m, mono_adjoint(m)), -1);
        }
    }
    return out;
}

// --- direct pointwise evaluation --------------------------------------------

// S_i prepends; S_i^* removes a matching first letter and is otherwise
// undefined.
inline std::optional<EvpSeq> apply_atom(const Atom& a, const EvpSeq& x, const SftLanguage& lang) {
    if (a.star) {
        if (x.first() != a.gen) return std::nullopt;
        return shift(x);
    }
    return prepend(a.gen, x, lang);
}

// Atoms act right to left; an undefined step annihilates the vector.
inline std::optional<EvpSeq> apply_monomial(const MonomialOp& m, const EvpSeq& x, const SftLanguage& lang) {
    std::optional<EvpSeq> cur = x;
    for (auto it = m.atoms().rbegin(); it != m.atoms().rend(); ++it) {
        cur = apply_atom(*it, *cur, lang);
        if (!cur) return std::nullopt;
    }
    return cur;
}

// Linear extension over formal vectors; exact integer coefficients.
inline FormalVector apply_expr(const OpExpr& e, const FormalVector& v, const SftLanguage& lang) {
    FormalVector out;
    for (const auto& [x, cx] : v.terms())
        for (const auto& [m, cm] : e.terms())
            if (auto y = apply_monomial(m, x, lang)) out.add(*y, cx * cm);
    return out;
}

// --- rendering and parsing ---------------------------------------------------
//
// Token grammar: `S<k>`, `S<k>*`, `I`, integer coefficients, `+`, `-`, and
// juxtaposition for composition; whitespace is insignificant.  The leftmost
// atom of a monomial is the last to act.

inline std::string render(const Atom& a) {
    return "S" + std::to_string(a.gen) + (a.star ? "*" : "");
}

inline std::string render(const MonomialOp& m) {
    if (m.is_identity()) return "I";
    std::string out;
    for (std::size_t i = 0; i < m.atoms().size(); ++i) {
        if (i) out += ' ';
        out += render(m.atoms()[i]);
    }
    return out;
}

inline std::string render(const OpExpr& e) {
    if (e.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : e.terms()) {
        std::int64_t mag = c < 0 ? -c : c;
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (mag != 1) out += std::to_string(mag) + " ";
        out += render(m);
        first = false;
    }
    return out;
}

namespace detail {

struct ExprToken {
    enum Kind { atom, integer, identity, plus, minus } kind;
    Atom a;
    std::int64_t value = 0;
};

inline std::vector<ExprToken> lex_expr(const std::string& text) {
    std::vector<ExprToken> out;
    std::size_t i = 0;
    while (i < text.size()) {
        char ch = text[i];
        if (std::isspace(static_cast<unsigned char>(ch))) { ++i; continue; }
        if (ch == '+') { out.push_back({ExprToken::plus, {}, 0}); ++i; continue; }
        if (ch == '-') { out.push_back({ExprToken::minus, {}, 0}); ++i; continue; }
        if (ch == 'I') { out.push_back({ExprToken::identity, {}, 0}); ++i; continue; }
        if (ch == 'S') {
            std::size_t j = i + 1;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            if (j == i + 1) throw std::invalid_argument("expression: 'S' needs a generator index");
            Atom a{std::stoi(text.substr(i + 1, j - i - 1)), false};
            if (j < text.size() && text[j] == '*') { a.star = true; ++j; }
            check_gen_index(a.gen);
            out.push_back({ExprToken::atom, a, 0});
            i = j;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            out.push_back({ExprToken::integer, {}, std::stoll(text.substr(i, j - i))});
            i = j;
            continue;
        }
        throw std::invalid_argument(std::string("expression: unexpected character '") + ch + "'");
    }
    return out;
}

}  // namespace detail

inline OpExpr parse_expr(const std::string& text) {
    auto toks = detail::lex_expr(text);
    if (toks.empty()) throw std::invalid_argument("empty expression (use '0' or 'I')");
    if (toks.size() == 1 && toks[0].kind == detail::ExprToken::integer && toks[0].value == 0)
        return OpExpr::zero();
    OpExpr out;
    std::size_t i = 0;
    bool first_term = true;
    while (i < toks.size()) {
        std::int64_t sign = 1;
        if (toks[i].kind == detail::ExprToken::plus || toks[i].kind == detail::ExprToken::minus) {
            if (toks[i].kind == detail::ExprToken::minus) sign = -1;
            ++i;
        } else if (!first_term) {
            throw std::invalid_argument("expression: terms must be separated by '+' or '-'");
        }
        std::int64_t coef = 1;
        bool saw_factor = false;
        if (i < toks.size() && toks[i].kind == detail::ExprToken::integer) {
            coef = toks[i].value;
            ++i;
        }
        std::vector<Atom> atoms;
        while (i < toks.size() &&
               (toks[i].kind == detail::ExprToken::atom || toks[i].kind == detail::ExprToken::identity)) {
            if (toks[i].kind == detail::ExprToken::atom) atoms.push_back(toks[i].a);
            saw_factor = true;
            ++i;
        }
        if (i < toks.size() && toks[i].kind == detail::ExprToken::integer)
            throw std::invalid_argument("expression: unexpected integer inside a term");
        if (!saw_factor && coef == 1)
            throw std::invalid_argument("expression: empty term");
        out.add(MonomialOp(std::move(atoms)), sign * coef);
        first_term = false;
    }
    return out;
}

// Pointwise equality of two expressions on a basis set, in the given order
// (callers pass vectors in canonical order).  Every vector is examined; the
// witness is the first disagreement.
inline Verdict ops_equal_on(const OpExpr& e1, const OpExpr& e2, const std::vector<EvpSeq>& vectors,
                            const SftLanguage& lang) {
    if (vectors.empty()) return Verdict::vacuous("no basis vectors");
    std::optional<Witness> witness;
    for (const EvpSeq& x : vectors) {
        FormalVector lhs = apply_expr(e1, FormalVector::basis(x), lang);
        FormalVector rhs = apply_expr(e2, FormalVector::basis(x), lang);
        if (!(lhs == rhs) && !witness) {
            Witness w;
            w.entries["lhs_expr"] = render(e1);
            w.entries["rhs_expr"] = render(e2);
            w.entries["vector"] = render(x);
            w.entries["lhs_value"] = render(lhs);
            w.entries["rhs_value"] = render(rhs);
            witness = w;
        }
    }
    if (witness) return Verdict::fail(static_cast<std::int64_t>(vectors.size()), *witness);
    return Verdict::pass(static_cast<std::int64_t>(vectors.size()));
}

}  // namespace shiftrep

#endif  // SHIFTREP_OPERATORS_HPP
