#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "madlie/errors.hpp"
#include "madlie/rational.hpp"

namespace madlie {

constexpr int kMaxVars = 8;

// Exponent vector.  Entries beyond the spec's variable count stay zero, so
// monomials of the same ring compare and hash uniformly.
struct Mono {
    std::array<int16_t, kMaxVars> e{};

    int total_degree(int nvars) const {
        int d = 0;
        for (int i = 0; i < nvars; ++i) d += e[i];
        return d;
    }
    bool operator==(const Mono&) const = default;
    bool is_one(int nvars) const {
        for (int i = 0; i < nvars; ++i)
            if (e[i] != 0) return false;
        return true;
    }
};

enum class MonomialOrder { degrevlex, lex };

// Strict "greater" in the given order.  Total on all of Z^n, admissible on
// the nonnegative orthant (all Groebner computation stays there).
inline bool mono_greater(const Mono& a, const Mono& b, MonomialOrder ord, int nvars) {
    if (ord == MonomialOrder::lex) {
        for (int i = 0; i < nvars; ++i)
            if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
        return false;
    }
    int da = a.total_degree(nvars), db = b.total_degree(nvars);
    if (da != db) return da > db;
    for (int i = nvars - 1; i >= 0; --i)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
    return false;
}

// b | a in the monoid sense (componentwise <=; only meaningful for
// nonnegative exponents).
inline bool mono_divides(const Mono& b, const Mono& a, int nvars) {
    for (int i = 0; i < nvars; ++i)
        if (b.e[i] > a.e[i]) return false;
    return true;
}

inline Mono mono_mul(const Mono& a, const Mono& b, int nvars) {
    Mono r;
    for (int i = 0; i < nvars; ++i) {
        int v = a.e[i] + b.e[i];
        if (v > INT16_MAX || v < INT16_MIN) throw ResourceLimitError("monomial exponent overflow");
        r.e[i] = static_cast<int16_t>(v);
    }
    return r;
}

inline Mono mono_div(const Mono& a, const Mono& b, int nvars) {
    Mono r;
    for (int i = 0; i < nvars; ++i) r.e[i] = static_cast<int16_t>(a.e[i] - b.e[i]);
    return r;
}

inline Mono mono_lcm(const Mono& a, const Mono& b, int nvars) {
    Mono r;
    for (int i = 0; i < nvars; ++i) r.e[i] = std::max(a.e[i], b.e[i]);
    return r;
}

struct Term {
    Mono m;
    Rational c;
};

enum class RingKind { laurent, polynomial, quotient, truncated };

std::string to_string(RingKind k);

class RingElement;

// Immutable description of a coefficient ring over Q.  Shared by all
// elements of that ring; construct through RingSpec::make.
class RingSpec : public std::enable_shared_from_this<RingSpec> {
  public:
    using Ptr = std::shared_ptr<const RingSpec>;

    static Ptr make(RingKind kind, std::vector<std::string> vars,
                    std::vector<std::string> relations = {},
                    MonomialOrder order = MonomialOrder::degrevlex, Limits limits = {},
                    std::optional<std::map<std::string, Rational>> point = std::nullopt,
                    bool connected_reduced = false);

    // Q itself: polynomial ring in no variables.
    static Ptr rationals();

    RingKind kind() const { return kind_; }
    int nvars() const { return static_cast<int>(vars_.size()); }
    const std::vector<std::string>& vars() const { return vars_; }
    MonomialOrder order() const { return order_; }
    const Limits& limits() const { return limits_; }
    const std::vector<std::string>& relation_strings() const { return relation_strings_; }

    // Reduced Groebner basis of the relation ideal, over the polynomial
    // twin.  Empty for laurent/polynomial.  For truncated rings these are
    // the (monic) relation monomials.
    const std::vector<RingElement>& relation_basis() const { return relation_basis_; }

    // Polynomial ring on the same variables and order; used internally for
    // all Groebner computation.  Null when kind is already polynomial.
    Ptr polynomial_twin() const { return poly_twin_; }

    // Smallest m with J^m = 0 where J = (all variables); truncated only.
    int nilpotency_degree() const { return nilpotency_degree_; }

    // Whether Spec(R) was declared connected and reduced by the caller.
    // Laurent and polynomial rings over Q always qualify.
    bool connected_reduced() const;

    const std::optional<std::map<std::string, Rational>>& designated_point() const { return point_; }

    int var_index(const std::string& name) const;  // -1 if absent

    bool same_ring(const RingSpec& o) const;

    std::string describe() const;

  private:
    RingSpec() = default;

    RingKind kind_ = RingKind::polynomial;
    std::vector<std::string> vars_;
    MonomialOrder order_ = MonomialOrder::degrevlex;
    Limits limits_;
    std::vector<std::string> relation_strings_;
    std::vector<RingElement> relation_basis_;
    Ptr poly_twin_;
    int nilpotency_degree_ = 0;
    std::optional<std::map<std::string, Rational>> point_;
    bool connected_reduced_declared_ = false;
};

// Element of a RingSpec ring.  Terms are kept sorted (leading first, in the
// spec's monomial order) with nonzero coefficients, already reduced modulo
// the relations: a canonical normal form, so operator== is representational.
class RingElement {
  public:
    RingElement() = default;

    static RingElement zero(RingSpec::Ptr s) { return RingElement(std::move(s), {}); }
    static RingElement one(RingSpec::Ptr s) { return constant(std::move(s), Rational(1)); }
    static RingElement constant(RingSpec::Ptr s, const Rational& c);
    static RingElement variable(RingSpec::Ptr s, int var, int exp = 1);
    static RingElement monomial(RingSpec::Ptr s, const Mono& m, const Rational& c);

    // Parses the textual grammar: signed Q coefficients, '*', '^' with
    // integer exponents, e.g. "3/2*t^-2 + 1".
    static RingElement parse(RingSpec::Ptr s, const std::string& text);

    const RingSpec::Ptr& spec() const { return spec_; }
    const std::vector<Term>& terms() const { return t_; }

    bool is_zero() const { return t_.empty(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].m.is_one(spec_->nvars())); }
    Rational constant_value() const;  // requires is_constant()

    // Coefficient of the constant monomial.
    Rational constant_coefficient() const;

    const Term& leading() const;

    RingElement operator-() const;
    RingElement operator+(const RingElement& o) const;
    RingElement operator-(const RingElement& o) const;
    RingElement operator*(const RingElement& o) const;
    RingElement& operator+=(const RingElement& o) { return *this = *this + o; }
    RingElement& operator-=(const RingElement& o) { return *this = *this - o; }
    RingElement& operator*=(const RingElement& o) { return *this = *this * o; }

    RingElement scaled(const Rational& c) const;
    RingElement pow(int k) const;  // k >= 0

    bool operator==(const RingElement& o) const;
    bool operator!=(const RingElement& o) const { return !(*this == o); }

    std::string to_string() const;

    // Total degree in the variables, ignoring signs: max over terms of
    // sum(|e_i|).  0 for constants/zero.
    int degree_span() const;

    // Re-imposes the canonical form (sort, combine, reduce modulo
    // relations).  Elements built through the public API are already
    // canonical; exposed so tests can feed raw term data.
    static RingElement from_terms(RingSpec::Ptr s, std::vector<Term> terms);

    // Same data, reinterpreted in another spec with identical variables
    // (used to move between a quotient ring and its polynomial twin; the
    // move into the quotient reduces).
    RingElement cast_to(RingSpec::Ptr other) const;

    // Evaluation at a rational point; validates the assignment against the
    // ring (nonzero at laurent variables, relations vanish, nilpotents 0).
    Rational eval(const std::map<std::string, Rational>& point) const;

  private:
    RingElement(RingSpec::Ptr s, std::vector<Term> t) : spec_(std::move(s)), t_(std::move(t)) {}

    friend RingElement normal_form(const RingElement&);

    RingSpec::Ptr spec_;
    std::vector<Term> t_;
};

// Canonical normal form (idempotent; equals the input for elements built
// through the API).
RingElement normal_form(const RingElement& e);

struct UnitResult {
    bool is_unit = false;
    std::optional<RingElement> inverse;  // set when is_unit
};

// Decides invertibility and produces the inverse.
//  laurent:    single-term elements c*t^m
//  polynomial: nonzero constants
//  quotient:   1 in (relations, e), cofactor through an elimination basis
//  truncated:  nonzero constant part, geometric series
UnitResult is_unit(const RingElement& e);

// Validates a point assignment against the spec (see RingElement::eval).
void validate_point(const RingSpec& spec, const std::map<std::string, Rational>& point);

// The designated rational point of the spec: explicit "point" field if
// present, else all-1 for laurent and all-0 otherwise.
std::map<std::string, Rational> designated_point(const RingSpec& spec);

}  // namespace madlie
