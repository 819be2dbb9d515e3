#include "csw/hecke.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

namespace csw {

ParamPoly ParamPoly::v_power(long k, const Rational& c) {
    ParamPoly p;
    if (c != 0) {
        ParamMonomial m;
        m.v_exp = k;
        p.terms_[m] = c;
    }
    return p;
}

ParamPoly ParamPoly::q(std::size_t s) {
    ParamPoly p;
    ParamMonomial m;
    m.syms[{s, -1}] = 1;
    p.terms_[m] = 1;
    return p;
}

ParamPoly ParamPoly::qj(std::size_t s, int j) {
    ParamPoly p;
    ParamMonomial m;
    m.syms[{s, j}] = 1;
    p.terms_[m] = 1;
    return p;
}

void ParamPoly::add_term(const ParamMonomial& m, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

ParamPoly operator-(const ParamPoly& a) {
    ParamPoly r;
    for (const auto& [m, c] : a.terms_) r.terms_[m] = -c;
    return r;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
    ParamPoly r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            ParamMonomial m = ma;
            m.v_exp += mb.v_exp;
            for (const auto& [k, p] : mb.syms) {
                m.syms[k] += p;
                if (m.syms[k] == 0) m.syms.erase(k);
            }
            r.add_term(m, ca * cb);
        }
    return r;
}

ParamPoly ParamPoly::split_specialized() const {
    // Split case: all parameters coincide, so every q(s) collapses to one
    // symbol q and every q_j(s) to q - 1. (With distinct q(s) on conjugate
    // reflections the presentation is not an admissible parameter system
    // and the rewriting would not even be associative.)
    ParamPoly q_global = ParamPoly::q(kSplitSymbol);
    ParamPoly out;
    for (const auto& [m, c] : terms_) {
        ParamMonomial base;
        base.v_exp = m.v_exp;
        ParamPoly piece;
        piece.terms_[base] = c;
        for (const auto& [key, p] : m.syms) {
            ParamPoly factor = key.second < 0
                                   ? q_global
                                   : q_global - ParamPoly(Rational(1));
            for (long i = 0; i < p; ++i) piece = piece * factor;
        }
        out += piece;
    }
    return out;
}

LaurentScalar ParamPoly::to_laurent() const {
    LaurentScalar out;
    for (const auto& [m, c] : terms_) {
        long e = m.v_exp;
        for (const auto& [key, p] : m.syms) {
            if (key.second >= 0)
                throw std::invalid_argument(
                    "q_j symbols do not specialize to Laurent scalars");
            e += 2 * p;
        }
        out += LaurentScalar::v_power(e, c);
    }
    return out;
}

std::string ParamPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        std::vector<std::string> factors;
        Rational ac = abs(c);
        bool bare = m.v_exp == 0 && m.syms.empty();
        if (ac != 1 || bare) factors.push_back(rational_to_string(ac));
        if (m.v_exp != 0) {
            std::string f = "v";
            if (m.v_exp != 1) f += "^" + std::to_string(m.v_exp);
            factors.push_back(f);
        }
        for (const auto& [key, p] : m.syms) {
            std::string f = "q";
            if (key.second >= 0) f += std::to_string(key.second);
            if (key.first != kSplitSymbol)
                f += "(s" + std::to_string(key.first + 1) + ")";
            if (p != 1) f += "^" + std::to_string(p);
            factors.push_back(f);
        }
        std::string mono;
        for (std::size_t i = 0; i < factors.size(); ++i)
            mono += (i ? "*" : "") + factors[i];
        if (out.empty())
            out = (c < 0 ? "-" : "") + mono;
        else
            out += (c < 0 ? "-" : "+") + mono;
    }
    return out;
}

void BernsteinElement::add(std::size_t w, const LatticePoint& lam,
                           const ParamPoly& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(w, lam);
    auto it = terms.find(key);
    if (it == terms.end()) {
        terms.emplace(key, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

BernsteinElement& BernsteinElement::operator+=(const BernsteinElement& o) {
    for (const auto& [k, c] : o.terms) add(k.first, k.second, c);
    return *this;
}

BernsteinElement& BernsteinElement::operator-=(const BernsteinElement& o) {
    for (const auto& [k, c] : o.terms) add(k.first, k.second, -c);
    return *this;
}

HeckeAlgebra::HeckeAlgebra(const RootDatum& datum) : datum_(datum) {
    const auto& els = datum_.weyl().elements();
    std::map<std::vector<CoordVec>, std::size_t> index;
    for (std::size_t i = 0; i < els.size(); ++i) index[els[i].matrix] = i;
    std::size_t n = datum_.semisimple_rank(), m = datum_.rank();
    left_mul_.assign(n, std::vector<std::size_t>(els.size()));
    simple_w_.resize(n);
    for (std::size_t s = 0; s < n; ++s) {
        std::vector<CoordVec> gen(m, CoordVec(m, 0));
        for (std::size_t k = 0; k < m; ++k) {
            gen[k][k] = 1;
            for (std::size_t r = 0; r < m; ++r)
                gen[r][k] -=
                    datum_.simple_root(s)[k] * datum_.simple_coroot(s)[r];
        }
        simple_w_[s] = index.at(gen);
        for (std::size_t w = 0; w < els.size(); ++w) {
            std::vector<CoordVec> prod(m, CoordVec(m, 0));
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t k = 0; k < m; ++k)
                    for (std::size_t j = 0; j < m; ++j)
                        prod[i][j] += gen[i][k] * els[w].matrix[k][j];
            left_mul_[s][w] = index.at(prod);
        }
    }
}

BernsteinElement HeckeAlgebra::one() const {
    BernsteinElement e;
    e.add(0, LatticePoint(datum_.rank(), 0), ParamPoly::one());
    return e;
}

BernsteinElement HeckeAlgebra::theta(const LatticePoint& lam,
                                     ParamPoly c) const {
    BernsteinElement e;
    e.add(0, lam, c);
    return e;
}

BernsteinElement HeckeAlgebra::t_simple(std::size_t s) const {
    BernsteinElement e;
    e.add(simple_w_[s], LatticePoint(datum_.rank(), 0), ParamPoly::one());
    return e;
}

BernsteinElement HeckeAlgebra::t_word(
    const std::vector<std::size_t>& word) const {
    BernsteinElement acc = one();
    for (auto s : word) acc = mul(acc, t_simple(s));
    return acc;
}

BernsteinElement HeckeAlgebra::one_K() const {
    BernsteinElement e;
    LatticePoint zero(datum_.rank(), 0);
    for (std::size_t w = 0; w < datum_.weyl().size(); ++w)
        e.add(w, zero, ParamPoly::one());
    return e;
}

BernsteinElement HeckeAlgebra::theta_mul(const LatticePoint& lam,
                                         const LatticePoint& mu) const {
    return theta(lattice_add(lam, mu));
}

BernsteinElement HeckeAlgebra::ts_theta(std::size_t s,
                                        const LatticePoint& lam) const {
    if (s >= datum_.semisimple_rank())
        throw std::invalid_argument("ts_theta: not a simple reflection");
    BernsteinElement out;
    out.add(simple_w_[s], datum_.reflect(s, lam), ParamPoly::one());
    out += ts_correction(s, lam);
    return out;
}

BernsteinElement HeckeAlgebra::ts_correction(std::size_t s,
                                             const LatticePoint& lam) const {
    BernsteinElement out;
    Coord c = RootDatum::pairing(datum_.simple_root(s), lam);
    const auto& avee = datum_.simple_coroot(s);
    if (c > 0) {
        LatticePoint cur = lam;
        for (Coord j = 0; j < c; ++j) {
            out.add(0, cur, ParamPoly::qj(s, static_cast<int>(j)));
            for (std::size_t i = 0; i < cur.size(); ++i) cur[i] -= avee[i];
        }
    } else if (c < 0) {
        LatticePoint cur = datum_.reflect(s, lam);
        for (Coord j = 0; j < -c; ++j) {
            ParamPoly p = ParamPoly::qj(s, static_cast<int>(j));
            out.add(0, cur, -p);
            for (std::size_t i = 0; i < cur.size(); ++i) cur[i] -= avee[i];
        }
    }
    return out;
}

void HeckeAlgebra::left_mul_basis(std::size_t s, std::size_t w,
                                  BernsteinElement& out,
                                  const LatticePoint& lam,
                                  const ParamPoly& c) const {
    std::size_t sw = left_mul_[s][w];
    const auto& els = datum_.weyl().elements();
    if (els[sw].length > els[w].length) {
        out.add(sw, lam, c);
    } else {
        ParamPoly q = ParamPoly::q(s);
        out.add(w, lam, c * (q - ParamPoly(Rational(1))));
        out.add(sw, lam, c * q);
    }
}

BernsteinElement HeckeAlgebra::theta_past_word(
    const LatticePoint& lam, const std::vector<std::size_t>& word) const {
    if (word.empty()) return theta(lam);
    std::size_t s = word.front();
    std::vector<std::size_t> rest(word.begin() + 1, word.end());
    LatticePoint slam = datum_.reflect(s, lam);
    BernsteinElement out;
    // theta_lam T_s = T_s theta_{s lam} - C(s lam)
    BernsteinElement inner = theta_past_word(slam, rest);
    for (const auto& [key, c] : inner.terms)
        left_mul_basis(s, key.first, out, key.second, c);
    BernsteinElement corr = ts_correction(s, slam);
    for (const auto& [key, c] : corr.terms) {
        BernsteinElement sub = theta_past_word(key.second, rest);
        for (const auto& [k2, c2] : sub.terms)
            out.add(k2.first, k2.second, -(c * c2));
    }
    return out;
}

BernsteinElement HeckeAlgebra::mul(const BernsteinElement& a,
                                   const BernsteinElement& b) const {
    const auto& els = datum_.weyl().elements();
    BernsteinElement out;
    for (const auto& [ka, ca] : a.terms)
        for (const auto& [kb, cb] : b.terms) {
            BernsteinElement mid = theta_past_word(ka.second, els[kb.first].word);
            ParamPoly c = ca * cb;
            const auto& word1 = els[ka.first].word;
            // accumulate T_{w1} * (T_u theta_nu) theta_{lam2}
            BernsteinElement acc;
            for (const auto& [km, cm] : mid.terms)
                acc.add(km.first, lattice_add(km.second, kb.second), cm * c);
            for (auto it = word1.rbegin(); it != word1.rend(); ++it) {
                BernsteinElement next;
                for (const auto& [kk, cc] : acc.terms)
                    left_mul_basis(*it, kk.first, next, kk.second, cc);
                acc = std::move(next);
            }
            out += acc;
        }
    return out;
}

BernsteinElement HeckeAlgebra::split_specialize(
    const BernsteinElement& a) const {
    BernsteinElement out;
    for (const auto& [k, c] : a.terms)
        out.add(k.first, k.second, c.split_specialized());
    return out;
}

std::string HeckeAlgebra::to_string(const BernsteinElement& a) const {
    if (a.is_zero()) return "0";
    const auto& els = datum_.weyl().elements();
    std::string out;
    for (auto it = a.terms.rbegin(); it != a.terms.rend(); ++it) {
        const auto& [key, coeff] = *it;
        std::vector<std::string> parts;
        if (key.first != 0) {
            std::string t = "T[";
            const auto& word = els[key.first].word;
            for (std::size_t i = 0; i < word.size(); ++i)
                t += (i ? "*s" : "s") + std::to_string(word[i] + 1);
            t += "]";
            parts.push_back(t);
        }
        bool lam_zero = true;
        for (auto x : key.second) lam_zero = lam_zero && x == 0;
        if (!lam_zero) {
            std::string th = "th[";
            for (std::size_t i = 0; i < key.second.size(); ++i)
                th += (i ? "," : "") + std::to_string(key.second[i]);
            th += "]";
            parts.push_back(th);
        }
        std::string cs = coeff.to_string();
        std::string term;
        if (parts.empty()) {
            term = cs;
        } else {
            std::string basis;
            for (std::size_t i = 0; i < parts.size(); ++i)
                basis += (i ? "*" : "") + parts[i];
            if (cs == "1") {
                term = basis;
            } else if (cs == "-1") {
                term = "-" + basis;
            } else if (coeff.terms().size() == 1) {
                term = cs + "*" + basis;
            } else {
                term = "(" + cs + ")*" + basis;
            }
        }
        if (out.empty()) {
            out = term;
        } else if (!term.empty() && term[0] == '-') {
            out += " - " + term.substr(1);
        } else {
            out += " + " + term;
        }
    }
    return out;
}

namespace {

struct Lexer {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
            ++pos;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c))
            throw HeckeParseError(std::string("expected '") + c +
                                  "' at position " + std::to_string(pos));
    }
    long integer() {
        skip_ws();
        std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            ++pos;
        if (start == pos ||
            (pos - start == 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
            throw HeckeParseError("expected integer at position " +
                                  std::to_string(start));
        return std::stol(s.substr(start, pos - start));
    }
};

}  // namespace

BernsteinElement HeckeAlgebra::parse(const std::string& input) const {
    Lexer lex{input};
    std::size_t n = datum_.semisimple_rank();

    auto simple_index = [&](const std::string& where) -> std::size_t {
        lex.expect('s');
        long k = lex.integer();
        if (k < 1 || static_cast<std::size_t>(k) > n)
            throw HeckeParseError("bad simple reflection index in " + where);
        return static_cast<std::size_t>(k - 1);
    };

    std::function<BernsteinElement()> expr;

    auto factor = [&]() -> BernsteinElement {
        char c = lex.peek();
        if (c == '(') {
            lex.expect('(');
            BernsteinElement e = expr();
            lex.expect(')');
            return e;
        }
        if (c == 'T') {
            ++lex.pos;
            lex.expect('[');
            std::vector<std::size_t> word;
            if (lex.peek() != ']') {
                word.push_back(simple_index("T[..]"));
                while (lex.eat('*')) word.push_back(simple_index("T[..]"));
            }
            lex.expect(']');
            return t_word(word);
        }
        if (c == 't') {
            ++lex.pos;
            if (!lex.eat('h')) throw HeckeParseError("expected 'th'");
            lex.expect('[');
            LatticePoint lam;
            lam.push_back(lex.integer());
            while (lex.eat(',')) lam.push_back(lex.integer());
            lex.expect(']');
            if (lam.size() != datum_.rank())
                throw HeckeParseError("th[..] arity does not match the datum");
            return theta(lam);
        }
        if (c == 'q') {
            ++lex.pos;
            bool has_j = lex.pos < input.size() &&
                         std::isdigit(static_cast<unsigned char>(input[lex.pos]));
            long j = has_j ? lex.integer() : -1;
            lex.expect('(');
            std::size_t s = simple_index("q(..)");
            lex.expect(')');
            ParamPoly p = has_j ? ParamPoly::qj(s, static_cast<int>(j))
                                : ParamPoly::q(s);
            return theta(LatticePoint(datum_.rank(), 0), p);
        }
        if (c == 'v') {
            ++lex.pos;
            long k = 1;
            if (lex.eat('^')) k = lex.integer();
            return theta(LatticePoint(datum_.rank(), 0), ParamPoly::v_power(k));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long num = lex.integer();
            Rational r(num);
            if (lex.eat('/')) {
                long den = lex.integer();
                if (den == 0) throw HeckeParseError("zero denominator");
                r = make_rational(Integer(num), Integer(den));
            }
            return theta(LatticePoint(datum_.rank(), 0), ParamPoly(r));
        }
        throw HeckeParseError("unexpected character at position " +
                              std::to_string(lex.pos));
    };

    auto term = [&]() -> BernsteinElement {
        BernsteinElement acc = factor();
        while (lex.eat('*')) acc = mul(acc, factor());
        return acc;
    };

    expr = [&]() -> BernsteinElement {
        bool neg = false;
        if (lex.eat('-'))
            neg = true;
        else
            lex.eat('+');
        BernsteinElement acc = term();
        if (neg) acc = zero() - acc;
        while (true) {
            char c = lex.peek();
            if (c == '+') {
                lex.expect('+');
                acc += term();
            } else if (c == '-') {
                lex.expect('-');
                acc -= term();
            } else {
                break;
            }
        }
        return acc;
    };

    BernsteinElement result = expr();
    if (lex.peek() != '\0')
        throw HeckeParseError("trailing input at position " +
                              std::to_string(lex.pos));
    return result;
}

GroupAlgebraElement savin_transform(const SavinModule& h) { return h; }

GroupAlgebraElement WhittakerModuleModel::j(const RootDatum& datum) const {
    GroupAlgebraElement out(datum.tag());
    for (const auto& [mu, c] : coords)
        out += datum.alt(datum.monomial(mu)).scaled(c);
    return out;
}

WhittakerModuleModel project_to_whittaker(const RootDatum& datum,
                                          const SavinModule& h) {
    WhittakerModuleModel out;
    GroupAlgebraElement transformed = savin_transform(h);
    for (const auto& [lam, c] : transformed.terms()) {
        auto st = datum.straighten(lam);
        if (!st) continue;
        LaurentScalar add = st->first > 0 ? c : -c;
        auto it = out.coords.find(st->second);
        if (it == out.coords.end()) {
            out.coords.emplace(st->second, add);
        } else {
            it->second += add;
            if (it->second.is_zero()) out.coords.erase(it);
        }
    }
    return out;
}

WhittakerModuleModel phi_action(const RootDatum& datum, const LatticePoint& mu,
                                const LatticePoint& lam) {
    if (!datum.strictly_dominant(mu))
        throw NonStrictlyDominant("phi_action: mu is not strictly dominant");
    if (!datum.dominant(lam))
        throw NonDominant("phi_action: lambda is not dominant");
    const auto& dual = datum.dual_datum();
    auto tc = tensor_coeffs(dual, lam, dual.inc.apply(mu));
    // Invert inc on eta's that come from the base lattice.
    std::size_t m = datum.rank();
    RatMat incq(m, RatVec(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            incq[i][j] = Rational(static_cast<long>(dual.inc.matrix[i][j]));
    auto inv = rat_inverse(incq);
    if (!inv) throw std::logic_error("inc is not invertible over Q");
    WhittakerModuleModel out;
    for (const auto& [eta, c] : tc.coeffs) {
        RatVec sol = rat_apply(*inv, to_rat_vec(eta));
        LatticePoint base(m);
        bool integral = true;
        for (std::size_t i = 0; i < m; ++i) {
            if (!is_integral(sol[i])) {
                integral = false;
                break;
            }
            base[i] = sol[i].get_num().get_si();
        }
        if (!integral) continue;
        out.coords.emplace(base, LaurentScalar(Rational(c)));
    }
    return out;
}

}  // namespace csw
