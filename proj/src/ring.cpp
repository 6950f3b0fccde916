#include "madlie/ring.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

#include "madlie/groebner.hpp"

namespace madlie {

std::string to_string(RingKind k) {
    switch (k) {
        case RingKind::laurent: return "laurent";
        case RingKind::polynomial: return "polynomial";
        case RingKind::quotient: return "quotient";
        case RingKind::truncated: return "truncated";
    }
    return "?";
}

namespace {

bool valid_var_name(const std::string& s) {
    if (s.empty()) return false;
    if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    return true;
}

// Sort descending in the spec order, combine equal monomials, drop zeros.
void normalize_terms(std::vector<Term>& t, MonomialOrder ord, int nvars) {
    std::sort(t.begin(), t.end(), [&](const Term& a, const Term& b) {
        return mono_greater(a.m, b.m, ord, nvars);
    });
    std::size_t w = 0;
    for (std::size_t i = 0; i < t.size();) {
        std::size_t j = i + 1;
        Rational c = t[i].c;
        while (j < t.size() && t[j].m == t[i].m) c += t[j++].c;
        if (c != 0) {
            t[w].m = t[i].m;
            t[w].c = c;
            ++w;
        }
        i = j;
    }
    t.resize(w);
}

}  // namespace

RingSpec::Ptr RingSpec::rationals() {
    static Ptr q = make(RingKind::polynomial, {});
    return q;
}

RingSpec::Ptr RingSpec::make(RingKind kind, std::vector<std::string> vars,
                             std::vector<std::string> relations, MonomialOrder order,
                             Limits limits, std::optional<std::map<std::string, Rational>> point,
                             bool connected_reduced) {
    auto spec = std::shared_ptr<RingSpec>(new RingSpec());
    spec->kind_ = kind;
    spec->vars_ = std::move(vars);
    spec->order_ = order;
    spec->limits_ = limits;
    spec->relation_strings_ = std::move(relations);
    spec->point_ = std::move(point);
    spec->connected_reduced_declared_ = connected_reduced;

    const int n = spec->nvars();
    if (n > kMaxVars) throw InputError("at most 8 variables are supported");
    if (kind == RingKind::quotient && n > kMaxVars - 1)
        throw InputError("quotient rings support at most 7 variables");
    if (n == 0 && kind != RingKind::polynomial)
        throw InputError(to_string(kind) + " ring needs at least one variable");
    for (int i = 0; i < n; ++i) {
        if (!valid_var_name(spec->vars_[i])) throw InputError("bad variable name '" + spec->vars_[i] + "'");
        for (int j = i + 1; j < n; ++j)
            if (spec->vars_[i] == spec->vars_[j])
                throw InputError("duplicate variable '" + spec->vars_[i] + "'");
    }
    if (kind == RingKind::laurent || kind == RingKind::polynomial) {
        if (!spec->relation_strings_.empty())
            throw InputError(to_string(kind) + " ring takes no relations");
        if (spec->point_) validate_point(*spec, *spec->point_);
        return spec;
    }

    // quotient / truncated: parse relations over the polynomial twin.
    auto twin = make(RingKind::polynomial, spec->vars_, {}, order, limits);
    spec->poly_twin_ = twin;
    std::vector<RingElement> rels;
    for (const auto& s : spec->relation_strings_) {
        RingElement r = RingElement::parse(twin, s);
        if (r.is_zero()) throw InputError("zero relation '" + s + "'");
        rels.push_back(std::move(r));
    }
    if (rels.empty()) throw InputError(to_string(kind) + " ring needs at least one relation");

    if (kind == RingKind::truncated) {
        // Pure monomials; every variable must be nilpotent.
        std::vector<bool> has_pure(n, false);
        for (auto& r : rels) {
            if (r.terms().size() != 1)
                throw InputError("truncated relation must be a single monomial: '" + r.to_string() + "'");
            if (r.terms()[0].m.is_one(n)) throw InputError("constant truncated relation");
            r = r.scaled(Rational(1) / r.terms()[0].c);
            int support = 0, var = -1;
            for (int i = 0; i < n; ++i)
                if (r.terms()[0].m.e[i] > 0) { ++support; var = i; }
            if (support == 1) has_pure[var] = true;
        }
        for (int i = 0; i < n; ++i)
            if (!has_pure[i])
                throw InputError("variable '" + spec->vars_[i] +
                                 "' is not nilpotent (no pure power among the relations)");
        spec->relation_basis_ = std::move(rels);

        // Smallest m with every degree-m monomial reducible.
        int bound = 1;
        std::vector<int> cap(n, 1);
        for (const auto& r : spec->relation_basis_) {
            int support = 0, var = -1;
            for (int i = 0; i < n; ++i)
                if (r.terms()[0].m.e[i] > 0) { ++support; var = i; }
            if (support == 1) cap[var] = std::max(cap[var], int(r.terms()[0].m.e[var]));
        }
        for (int i = 0; i < n; ++i) bound += cap[i] - 1;
        auto reducible = [&](const Mono& m) {
            for (const auto& r : spec->relation_basis_)
                if (mono_divides(r.terms()[0].m, m, n)) return true;
            return false;
        };
        int deg = 1;
        for (; deg <= bound; ++deg) {
            // Is there an irreducible monomial of total degree deg?
            bool found = false;
            Mono m;
            // DFS over exponent vectors summing to deg.
            std::function<bool(int, int, Mono&)> dfs = [&](int var, int left, Mono& cur) -> bool {
                if (var == n) return left == 0 && !reducible(cur);
                for (int e = 0; e <= left; ++e) {
                    cur.e[var] = static_cast<int16_t>(e);
                    if (dfs(var + 1, left - e, cur)) return true;
                }
                cur.e[var] = 0;
                return false;
            };
            found = dfs(0, deg, m);
            if (!found) break;
        }
        spec->nilpotency_degree_ = deg;
        if (spec->point_) validate_point(*spec, *spec->point_);
        return spec;
    }

    // quotient
    auto gb = groebner_basis(rels);
    if (gb.size() == 1 && gb[0].is_constant())
        throw InputError("relations generate the unit ideal");
    spec->relation_basis_ = std::move(gb);
    if (spec->point_) validate_point(*spec, *spec->point_);
    return spec;
}

bool RingSpec::connected_reduced() const {
    if (kind_ == RingKind::laurent || kind_ == RingKind::polynomial) return true;
    if (kind_ == RingKind::quotient) return connected_reduced_declared_;
    return false;
}

int RingSpec::var_index(const std::string& name) const {
    for (int i = 0; i < nvars(); ++i)
        if (vars_[i] == name) return i;
    return -1;
}

bool RingSpec::same_ring(const RingSpec& o) const {
    return kind_ == o.kind_ && vars_ == o.vars_ && order_ == o.order_ &&
           relation_strings_ == o.relation_strings_;
}

std::string RingSpec::describe() const {
    std::ostringstream os;
    os << to_string(kind_) << "[";
    for (int i = 0; i < nvars(); ++i) os << (i ? "," : "") << vars_[i];
    os << "]";
    if (!relation_strings_.empty()) {
        os << "/(";
        for (std::size_t i = 0; i < relation_strings_.size(); ++i)
            os << (i ? ", " : "") << relation_strings_[i];
        os << ")";
    }
    return os.str();
}

// ---------------------------------------------------------------------
// RingElement

namespace {

// Reduce a sorted term vector modulo the spec's relations.
std::vector<Term> reduce_mod_spec(const RingSpec::Ptr& spec, std::vector<Term> t) {
    const int n = spec->nvars();
    if (spec->kind() == RingKind::truncated) {
        std::size_t w = 0;
        for (auto& term : t) {
            bool dead = false;
            for (const auto& r : spec->relation_basis()) {
                if (mono_divides(r.terms()[0].m, term.m, n)) { dead = true; break; }
            }
            if (!dead) t[w++] = std::move(term);
        }
        t.resize(w);
        return t;
    }
    if (spec->kind() == RingKind::quotient) {
        RingElement lifted = RingElement::from_terms(spec->polynomial_twin(), std::move(t));
        RingElement r = reduce(lifted, spec->relation_basis());
        return r.terms();
    }
    return t;
}

}  // namespace

RingElement RingElement::constant(RingSpec::Ptr s, const Rational& c) {
    if (c == 0) return zero(std::move(s));
    return RingElement(std::move(s), {Term{Mono{}, c}});
}

RingElement RingElement::variable(RingSpec::Ptr s, int var, int exp) {
    if (var < 0 || var >= s->nvars()) throw InputError("variable index out of range");
    Mono m;
    m.e[var] = static_cast<int16_t>(exp);
    return monomial(std::move(s), m, Rational(1));
}

RingElement RingElement::monomial(RingSpec::Ptr s, const Mono& m, const Rational& c) {
    return from_terms(std::move(s), {Term{m, c}});
}

RingElement RingElement::from_terms(RingSpec::Ptr s, std::vector<Term> terms) {
    const int n = s->nvars();
    for (const auto& t : terms) {
        for (int i = n; i < kMaxVars; ++i)
            if (t.m.e[i] != 0) throw InputError("exponent on nonexistent variable");
        if (s->kind() != RingKind::laurent)
            for (int i = 0; i < n; ++i)
                if (t.m.e[i] < 0)
                    throw InputError("negative exponent in a " + madlie::to_string(s->kind()) + " ring");
    }
    normalize_terms(terms, s->order(), n);
    terms = reduce_mod_spec(s, std::move(terms));
    if (terms.size() > s->limits().max_terms)
        throw ResourceLimitError("term count limit exceeded");
    return RingElement(std::move(s), std::move(terms));
}

RingElement RingElement::cast_to(RingSpec::Ptr other) const {
    return from_terms(std::move(other), t_);
}

Rational RingElement::constant_value() const {
    if (!is_constant()) throw InternalError("constant_value of nonconstant " + to_string());
    return t_.empty() ? Rational(0) : t_[0].c;
}

Rational RingElement::constant_coefficient() const {
    const int n = spec_->nvars();
    for (const auto& t : t_)
        if (t.m.is_one(n)) return t.c;
    return Rational(0);
}

const Term& RingElement::leading() const {
    if (t_.empty()) throw InternalError("leading term of zero");
    return t_[0];
}

RingElement RingElement::operator-() const {
    std::vector<Term> t = t_;
    for (auto& x : t) x.c = -x.c;
    return RingElement(spec_, std::move(t));
}

RingElement RingElement::operator+(const RingElement& o) const {
    if (!spec_ || !o.spec_) throw InternalError("arithmetic on default-constructed element");
    if (!spec_->same_ring(*o.spec_)) throw InputError("ring mismatch in +");
    const int n = spec_->nvars();
    const MonomialOrder ord = spec_->order();
    std::vector<Term> out;
    out.reserve(t_.size() + o.t_.size());
    std::size_t i = 0, j = 0;
    while (i < t_.size() && j < o.t_.size()) {
        if (t_[i].m == o.t_[j].m) {
            Rational c = t_[i].c + o.t_[j].c;
            if (c != 0) out.push_back(Term{t_[i].m, std::move(c)});
            ++i, ++j;
        } else if (mono_greater(t_[i].m, o.t_[j].m, ord, n)) {
            out.push_back(t_[i++]);
        } else {
            out.push_back(o.t_[j++]);
        }
    }
    for (; i < t_.size(); ++i) out.push_back(t_[i]);
    for (; j < o.t_.size(); ++j) out.push_back(o.t_[j]);
    if (out.size() > spec_->limits().max_terms) throw ResourceLimitError("term count limit exceeded");
    return RingElement(spec_, std::move(out));
}

RingElement RingElement::operator-(const RingElement& o) const { return *this + (-o); }

RingElement RingElement::operator*(const RingElement& o) const {
    if (!spec_ || !o.spec_) throw InternalError("arithmetic on default-constructed element");
    if (!spec_->same_ring(*o.spec_)) throw InputError("ring mismatch in *");
    if (t_.empty() || o.t_.empty()) return zero(spec_);
    const int n = spec_->nvars();
    std::vector<Term> prod;
    prod.reserve(t_.size() * o.t_.size());
    for (const auto& a : t_)
        for (const auto& b : o.t_) prod.push_back(Term{mono_mul(a.m, b.m, n), a.c * b.c});
    normalize_terms(prod, spec_->order(), n);
    prod = reduce_mod_spec(spec_, std::move(prod));
    if (prod.size() > spec_->limits().max_terms) throw ResourceLimitError("term count limit exceeded");
    return RingElement(spec_, std::move(prod));
}

RingElement RingElement::scaled(const Rational& c) const {
    if (c == 0) return zero(spec_);
    std::vector<Term> t = t_;
    for (auto& x : t) x.c *= c;
    return RingElement(spec_, std::move(t));
}

RingElement RingElement::pow(int k) const {
    if (k < 0) throw InputError("negative power of a ring element");
    RingElement r = one(spec_), base = *this;
    while (k) {
        if (k & 1) r = r * base;
        base = k > 1 ? base * base : base;
        k >>= 1;
    }
    return r;
}

bool RingElement::operator==(const RingElement& o) const {
    if (!spec_ || !o.spec_) return t_.empty() && o.t_.empty() && (spec_ == o.spec_);
    if (!spec_->same_ring(*o.spec_)) return false;
    if (t_.size() != o.t_.size()) return false;
    for (std::size_t i = 0; i < t_.size(); ++i)
        if (!(t_[i].m == o.t_[i].m) || t_[i].c != o.t_[i].c) return false;
    return true;
}

int RingElement::degree_span() const {
    int best = 0;
    const int n = spec_->nvars();
    for (const auto& t : t_) {
        int d = 0;
        for (int i = 0; i < n; ++i) d += std::abs(int(t.m.e[i]));
        best = std::max(best, d);
    }
    return best;
}

RingElement normal_form(const RingElement& e) {
    return RingElement::from_terms(e.spec(), e.terms());
}

// ---------------------------------------------------------------------
// Printing

std::string RingElement::to_string() const {
    if (t_.empty()) return "0";
    const int n = spec_->nvars();
    std::ostringstream os;
    bool first = true;
    for (const auto& t : t_) {
        Rational c = t.c;
        if (first) {
            if (c < 0) { os << "-"; c = -c; }
        } else {
            if (c < 0) { os << " - "; c = -c; }
            else os << " + ";
        }
        first = false;
        bool has_mono = !t.m.is_one(n);
        if (!has_mono) {
            os << c.get_str();
            continue;
        }
        bool printed = false;
        if (c != 1) {
            os << c.get_str();
            printed = true;
        }
        for (int i = 0; i < n; ++i) {
            if (t.m.e[i] == 0) continue;
            if (printed) os << "*";
            os << spec_->vars()[i];
            if (t.m.e[i] != 1) os << "^" << int(t.m.e[i]);
            printed = true;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------
// Parsing

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;
    const RingSpec::Ptr& spec;

    [[noreturn]] void fail(const std::string& msg) const {
        throw InputError("parse error at position " + std::to_string(pos) + " in '" + s +
                         "': " + msg);
    }
    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool peek(char c) {
        skip_ws();
        return pos < s.size() && s[pos] == c;
    }
    bool eat(char c) {
        if (peek(c)) { ++pos; return true; }
        return false;
    }
    bool at_end() {
        skip_ws();
        return pos == s.size();
    }

    long parse_int() {
        skip_ws();
        bool neg = false;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) neg = (s[pos++] == '-');
        if (pos == s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) fail("expected integer");
        long v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos++] - '0');
            if (v > 1000000) fail("exponent too large");
        }
        return neg ? -v : v;
    }

    Rational parse_number() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected number");
        std::string num = s.substr(start, pos - start);
        if (eat('/')) {
            skip_ws();
            std::size_t dstart = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (pos == dstart) fail("expected denominator");
            num += "/" + s.substr(dstart, pos - dstart);
        }
        return parse_rational(num);
    }

    std::string parse_name() {
        skip_ws();
        std::size_t start = pos;
        if (pos < s.size() &&
            (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) {
            ++pos;
            while (pos < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
                ++pos;
        }
        if (pos == start) fail("expected variable name");
        return s.substr(start, pos - start);
    }

    // factor := number | name ['^' int]
    void parse_factor(Rational& coeff, Mono& m) {
        skip_ws();
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            coeff *= parse_number();
            return;
        }
        std::string name = parse_name();
        int idx = spec->var_index(name);
        if (idx < 0) fail("unknown variable '" + name + "'");
        long e = 1;
        if (eat('^')) e = parse_int();
        long v = m.e[idx] + e;
        if (v > INT16_MAX || v < INT16_MIN) fail("exponent overflow");
        m.e[idx] = static_cast<int16_t>(v);
    }

    Term parse_term() {
        Term t{Mono{}, Rational(1)};
        parse_factor(t.c, t.m);
        while (eat('*')) parse_factor(t.c, t.m);
        return t;
    }

    std::vector<Term> parse_expr() {
        std::vector<Term> out;
        bool neg = false;
        skip_ws();
        if (eat('-')) neg = true;
        else eat('+');
        while (true) {
            Term t = parse_term();
            if (neg) t.c = -t.c;
            out.push_back(std::move(t));
            skip_ws();
            if (at_end()) break;
            if (eat('-')) neg = true;
            else if (eat('+')) neg = false;
            else fail("expected '+', '-' or end of input");
        }
        return out;
    }
};

}  // namespace

RingElement RingElement::parse(RingSpec::Ptr s, const std::string& text) {
    Parser p{text, 0, s};
    p.skip_ws();
    if (p.at_end()) throw InputError("empty ring element");
    auto terms = p.parse_expr();
    return from_terms(std::move(s), std::move(terms));
}

// ---------------------------------------------------------------------
// Units

namespace {

RingElement truncated_inverse(const RingElement& e) {
    Rational c = e.constant_coefficient();
    auto spec = e.spec();
    RingElement nil = e - RingElement::constant(spec, c);  // nilpotent part
    RingElement acc = RingElement::one(spec);
    RingElement pw = RingElement::one(spec);
    Rational sign(1);
    const Rational cinv = Rational(1) / c;
    for (int k = 1; k <= spec->nilpotency_degree() + 1; ++k) {
        pw = pw * nil;
        if (pw.is_zero()) break;
        sign = -sign;
        acc += pw.scaled(sign * [&] {
            Rational r(1);
            for (int i = 0; i < k; ++i) r *= cinv;
            return r;
        }());
    }
    return acc.scaled(cinv);
}

// Fresh variable name not colliding with the spec's.
std::string fresh_var(const RingSpec& spec) {
    std::string base = "z";
    int k = 0;
    std::string cand = base;
    while (spec.var_index(cand) >= 0) cand = base + std::to_string(k++);
    return cand;
}

// Shift every exponent vector one slot right (new variable in slot 0).
Mono shift_right(const Mono& m, int nvars) {
    Mono r;
    for (int i = 0; i < nvars; ++i) r.e[i + 1] = m.e[i];
    return r;
}

Mono shift_left(const Mono& m, int nvars) {
    Mono r;
    for (int i = 1; i <= nvars; ++i) r.e[i - 1] = m.e[i];
    return r;
}

UnitResult quotient_unit(const RingElement& e) {
    const auto& spec = e.spec();
    auto twin = spec->polynomial_twin();
    RingElement lifted = e.cast_to(twin);

    // Membership 1 in (relations, e).
    std::vector<RingElement> gens = spec->relation_basis();
    gens.push_back(lifted);
    auto gb = groebner_basis(gens);
    bool unit = gb.size() == 1 && gb[0].is_constant();
    if (!unit) return {false, std::nullopt};

    // Cofactor through elimination: lex basis of (relations, z*e - 1) with z
    // first; the normal form of z is the inverse.
    const int n = spec->nvars();
    std::vector<std::string> ext_vars;
    ext_vars.push_back(fresh_var(*spec));
    for (const auto& v : spec->vars()) ext_vars.push_back(v);
    auto ext = RingSpec::make(RingKind::polynomial, ext_vars, {}, MonomialOrder::lex, spec->limits());

    auto lift_ext = [&](const RingElement& f) {
        std::vector<Term> t;
        for (const auto& term : f.terms()) t.push_back(Term{shift_right(term.m, n), term.c});
        return RingElement::from_terms(ext, std::move(t));
    };
    std::vector<RingElement> ext_gens;
    for (const auto& r : spec->relation_basis()) ext_gens.push_back(lift_ext(r));
    RingElement z = RingElement::variable(ext, 0);
    ext_gens.push_back(z * lift_ext(lifted) - RingElement::one(ext));
    auto ext_gb = groebner_basis(ext_gens);
    RingElement nf = reduce(z, ext_gb);
    for (const auto& t : nf.terms())
        if (t.m.e[0] != 0) throw InternalError("inverse extraction left the z variable behind");
    std::vector<Term> back;
    for (const auto& t : nf.terms()) back.push_back(Term{shift_left(t.m, n), t.c});
    RingElement inv = RingElement::from_terms(spec, std::move(back));
    if (!(e * inv == RingElement::one(spec)))
        throw InternalError("unit cofactor verification failed");
    return {true, inv};
}

}  // namespace

UnitResult is_unit(const RingElement& e) {
    if (e.is_zero()) return {false, std::nullopt};
    const auto& spec = e.spec();
    switch (spec->kind()) {
        case RingKind::laurent: {
            if (e.terms().size() != 1) return {false, std::nullopt};
            Mono inv;
            for (int i = 0; i < spec->nvars(); ++i)
                inv.e[i] = static_cast<int16_t>(-e.terms()[0].m.e[i]);
            return {true, RingElement::monomial(spec, inv, Rational(1) / e.terms()[0].c)};
        }
        case RingKind::polynomial: {
            if (!e.is_constant()) return {false, std::nullopt};
            return {true, RingElement::constant(spec, Rational(1) / e.constant_value())};
        }
        case RingKind::truncated: {
            if (e.constant_coefficient() == 0) return {false, std::nullopt};
            RingElement inv = truncated_inverse(e);
            if (!(e * inv == RingElement::one(spec)))
                throw InternalError("truncated inverse verification failed");
            return {true, inv};
        }
        case RingKind::quotient:
            return quotient_unit(e);
    }
    throw InternalError("unreachable");
}

// ---------------------------------------------------------------------
// Evaluation

void validate_point(const RingSpec& spec, const std::map<std::string, Rational>& point) {
    for (const auto& v : spec.vars())
        if (!point.count(v)) throw InputError("point misses variable '" + v + "'");
    for (const auto& [k, v] : point)
        if (spec.var_index(k) < 0) throw InputError("point assigns unknown variable '" + k + "'");
    if (spec.kind() == RingKind::laurent) {
        for (const auto& [k, v] : point)
            if (v == 0) throw InputError("laurent variable '" + k + "' assigned 0");
    }
    if (spec.kind() == RingKind::truncated) {
        for (const auto& [k, v] : point)
            if (v != 0) throw InputError("nilpotent variable '" + k + "' must be assigned 0");
    }
    if (spec.kind() == RingKind::quotient) {
        auto twin = spec.polynomial_twin();
        for (const auto& rs : spec.relation_strings()) {
            RingElement r = RingElement::parse(twin, rs);
            if (r.eval(point) != 0)
                throw InputError("point does not satisfy relation '" + rs + "'");
        }
    }
}

Rational RingElement::eval(const std::map<std::string, Rational>& point) const {
    validate_point(*spec_, point);
    const int n = spec_->nvars();
    std::vector<Rational> vals(n);
    for (int i = 0; i < n; ++i) vals[i] = point.at(spec_->vars()[i]);
    Rational acc(0);
    for (const auto& t : t_) {
        Rational term = t.c;
        for (int i = 0; i < n; ++i) {
            int e = t.m.e[i];
            if (e == 0) continue;
            if (vals[i] == 0 && e < 0) throw InputError("division by zero in evaluation");
            Rational p(1);
            Rational base = e > 0 ? vals[i] : Rational(1) / vals[i];
            for (int k = 0; k < std::abs(e); ++k) p *= base;
            term *= p;
        }
        acc += term;
    }
    return acc;
}

std::map<std::string, Rational> designated_point(const RingSpec& spec) {
    if (spec.designated_point()) return *spec.designated_point();
    std::map<std::string, Rational> p;
    for (const auto& v : spec.vars())
        p[v] = spec.kind() == RingKind::laurent ? Rational(1) : Rational(0);
    return p;
}

}  // namespace madlie
