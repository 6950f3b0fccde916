#include "madlie/groebner.hpp"

#include <algorithm>
#include <set>

namespace madlie {

namespace {

void require_polynomial(const RingElement& f) {
    if (f.spec()->kind() != RingKind::polynomial)
        throw InternalError("Groebner layer expects polynomial-kind elements");
}

}  // namespace

DivisionResult divide(const RingElement& f, const std::vector<RingElement>& divisors) {
    require_polynomial(f);
    const auto& spec = f.spec();
    const int n = spec->nvars();
    DivisionResult res{RingElement::zero(spec), std::vector<RingElement>(divisors.size(), RingElement::zero(spec))};
    RingElement work = f;
    std::vector<Term> rem;
    while (!work.is_zero()) {
        const Term& lt = work.leading();
        bool divided = false;
        for (std::size_t i = 0; i < divisors.size(); ++i) {
            const auto& d = divisors[i];
            if (d.is_zero()) continue;
            if (mono_divides(d.leading().m, lt.m, n)) {
                Mono qm = mono_div(lt.m, d.leading().m, n);
                Rational qc = lt.c / d.leading().c;
                RingElement q = RingElement::monomial(spec, qm, qc);
                res.quotients[i] += q;
                work -= q * d;
                divided = true;
                break;
            }
        }
        if (!divided) {
            rem.push_back(lt);
            work -= RingElement::monomial(spec, lt.m, lt.c);
        }
    }
    res.remainder = RingElement::from_terms(spec, std::move(rem));
    return res;
}

RingElement reduce(const RingElement& f, const std::vector<RingElement>& divisors) {
    require_polynomial(f);
    const auto& spec = f.spec();
    const int n = spec->nvars();
    RingElement work = f;
    std::vector<Term> rem;
    while (!work.is_zero()) {
        const Term& lt = work.leading();
        bool divided = false;
        for (const auto& d : divisors) {
            if (d.is_zero()) continue;
            if (mono_divides(d.leading().m, lt.m, n)) {
                Rational qc = lt.c / d.leading().c;
                Mono qm = mono_div(lt.m, d.leading().m, n);
                work -= d.scaled(qc) * RingElement::monomial(spec, qm, Rational(1));
                divided = true;
                break;
            }
        }
        if (!divided) {
            rem.push_back(lt);
            work -= RingElement::monomial(spec, lt.m, lt.c);
        }
    }
    return RingElement::from_terms(spec, std::move(rem));
}

std::vector<RingElement> groebner_basis(const std::vector<RingElement>& gens) {
    std::vector<RingElement> g;
    for (const auto& f : gens) {
        require_polynomial(f);
        if (!f.is_zero()) g.push_back(f);
    }
    if (g.empty()) return g;
    const RingSpec::Ptr spec = g[0].spec();  // by value: g reallocates below
    const int n = spec->nvars();
    const MonomialOrder ord = spec->order();
    const std::size_t max_basis = spec->limits().max_basis;

    struct Pair {
        Mono lcm;
        int i, j;
    };
    auto pair_less = [&](const Pair& a, const Pair& b) {
        if (!(a.lcm == b.lcm)) return !mono_greater(a.lcm, b.lcm, ord, n);  // smaller lcm first
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };
    std::vector<Pair> queue;
    auto push_pairs = [&](int jnew) {
        for (int i = 0; i < jnew; ++i) {
            const Mono &a = g[i].leading().m, &b = g[jnew].leading().m;
            Mono l = mono_lcm(a, b, n);
            if (l == mono_mul(a, b, n)) continue;  // coprime leading monomials
            queue.push_back(Pair{l, i, jnew});
        }
        std::sort(queue.begin(), queue.end(), pair_less);
    };
    for (int j = 1; j < int(g.size()); ++j) push_pairs(j);

    while (!queue.empty()) {
        Pair p = queue.front();
        queue.erase(queue.begin());
        const RingElement &fi = g[p.i], &fj = g[p.j];
        Mono mi = mono_div(p.lcm, fi.leading().m, n);
        Mono mj = mono_div(p.lcm, fj.leading().m, n);
        RingElement s = fi * RingElement::monomial(spec, mi, Rational(1) / fi.leading().c) -
                        fj * RingElement::monomial(spec, mj, Rational(1) / fj.leading().c);
        RingElement r = reduce(s, g);
        if (r.is_zero()) continue;
        g.push_back(r);
        if (g.size() > max_basis) throw ResourceLimitError("Groebner basis size limit exceeded");
        push_pairs(int(g.size()) - 1);
    }

    // Minimalize: drop elements whose leading monomial is divisible by
    // another's (keeping the first among equal leads).
    std::vector<RingElement> minimal;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const Mono& mi = g[i].leading().m;
        bool redundant = false;
        for (std::size_t j = 0; j < g.size(); ++j) {
            if (i == j) continue;
            const Mono& mj = g[j].leading().m;
            if (!mono_divides(mj, mi, n)) continue;
            if (!(mi == mj) || j < i) { redundant = true; break; }
        }
        if (!redundant) minimal.push_back(g[i]);
    }
    // Inter-reduce tails and make monic.
    std::vector<RingElement> out;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<RingElement> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        RingElement r = reduce(minimal[i], others);
        if (r.is_zero()) continue;
        out.push_back(r.scaled(Rational(1) / r.leading().c));
    }
    std::sort(out.begin(), out.end(), [&](const RingElement& a, const RingElement& b) {
        return mono_greater(b.leading().m, a.leading().m, ord, n);
    });
    return out;
}

// ---------------------------------------------------------------------
// Module layer

ModuleLead module_lead(const VecPoly& v) {
    for (int p = 0; p < int(v.size()); ++p)
        if (!v[p].is_zero()) return ModuleLead{p, v[p].leading().m, v[p].leading().c};
    return ModuleLead{};
}

bool vec_is_zero(const VecPoly& v) {
    for (const auto& e : v)
        if (!e.is_zero()) return false;
    return true;
}

VecPoly vec_add(const VecPoly& a, const VecPoly& b) {
    VecPoly r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

VecPoly vec_scale(const VecPoly& a, const Rational& c) {
    VecPoly r = a;
    for (auto& e : r) e = e.scaled(c);
    return r;
}

VecPoly vec_sub_mul(const VecPoly& a, const Rational& c, const Mono& m, const VecPoly& b) {
    VecPoly r = a;
    if (b.empty()) return r;
    const auto& spec = b[0].spec();
    RingElement f = RingElement::monomial(spec, m, c);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= f * b[i];
    return r;
}

namespace {

// Position-over-term, position 0 dominant.
bool lead_greater(const ModuleLead& a, const ModuleLead& b, MonomialOrder ord, int n) {
    if (a.pos != b.pos) return a.pos < b.pos;
    return mono_greater(a.m, b.m, ord, n);
}

}  // namespace

VecPoly module_reduce(const VecPoly& v, const std::vector<VecPoly>& basis) {
    if (v.empty()) return v;
    const auto& spec = v[0].spec();
    const int n = spec->nvars();
    VecPoly work = v;
    VecPoly out(v.size(), RingElement::zero(spec));
    while (!vec_is_zero(work)) {
        ModuleLead lt = module_lead(work);
        bool divided = false;
        for (const auto& b : basis) {
            ModuleLead bl = module_lead(b);
            if (bl.pos != lt.pos) continue;
            if (!mono_divides(bl.m, lt.m, n)) continue;
            work = vec_sub_mul(work, lt.c / bl.c, mono_div(lt.m, bl.m, n), b);
            divided = true;
            break;
        }
        if (!divided) {
            RingElement mono = RingElement::monomial(spec, lt.m, lt.c);
            out[lt.pos] += mono;
            work[lt.pos] -= mono;
        }
    }
    return out;
}

std::vector<VecPoly> module_groebner(const std::vector<VecPoly>& gens, const Limits& limits) {
    std::vector<VecPoly> g;
    for (const auto& v : gens)
        if (!vec_is_zero(v)) g.push_back(v);
    if (g.empty()) return g;
    const RingSpec::Ptr spec = g[0][0].spec();  // by value: g reallocates below
    const int n = spec->nvars();
    const MonomialOrder ord = spec->order();

    struct Pair {
        int pos;
        Mono lcm;
        int i, j;
    };
    auto pair_less = [&](const Pair& a, const Pair& b) {
        if (a.pos != b.pos) return a.pos < b.pos;
        if (!(a.lcm == b.lcm)) return !mono_greater(a.lcm, b.lcm, ord, n);
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };
    std::vector<Pair> queue;
    auto push_pairs = [&](int jnew) {
        ModuleLead lj = module_lead(g[jnew]);
        for (int i = 0; i < jnew; ++i) {
            ModuleLead li = module_lead(g[i]);
            if (li.pos != lj.pos) continue;
            queue.push_back(Pair{li.pos, mono_lcm(li.m, lj.m, n), i, jnew});
        }
        std::sort(queue.begin(), queue.end(), pair_less);
    };
    for (int j = 1; j < int(g.size()); ++j) push_pairs(j);

    while (!queue.empty()) {
        Pair p = queue.front();
        queue.erase(queue.begin());
        ModuleLead li = module_lead(g[p.i]), lj = module_lead(g[p.j]);
        VecPoly s = vec_sub_mul(
            vec_sub_mul(VecPoly(g[p.i].size(), RingElement::zero(spec)), -Rational(1) / li.c,
                        mono_div(p.lcm, li.m, n), g[p.i]),
            Rational(1) / lj.c, mono_div(p.lcm, lj.m, n), g[p.j]);
        VecPoly r = module_reduce(s, g);
        if (vec_is_zero(r)) continue;
        g.push_back(r);
        if (g.size() > limits.max_basis)
            throw ResourceLimitError("module Groebner basis size limit exceeded");
        push_pairs(int(g.size()) - 1);
    }

    // Minimalize and inter-reduce.
    std::vector<VecPoly> minimal;
    for (std::size_t i = 0; i < g.size(); ++i) {
        ModuleLead li = module_lead(g[i]);
        bool redundant = false;
        for (std::size_t j = 0; j < g.size(); ++j) {
            if (i == j) continue;
            ModuleLead lj = module_lead(g[j]);
            if (lj.pos != li.pos || !mono_divides(lj.m, li.m, n)) continue;
            if (!(li.m == lj.m) || j < i) { redundant = true; break; }
        }
        if (!redundant) minimal.push_back(g[i]);
    }
    std::vector<VecPoly> out;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<VecPoly> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        VecPoly r = module_reduce(minimal[i], others);
        if (vec_is_zero(r)) continue;
        out.push_back(vec_scale(r, Rational(1) / module_lead(r).c));
    }
    std::sort(out.begin(), out.end(), [&](const VecPoly& a, const VecPoly& b) {
        return lead_greater(module_lead(b), module_lead(a), ord, n);
    });
    return out;
}

// ---------------------------------------------------------------------
// Syzygy workspace

ModuleWorkspace::ModuleWorkspace(std::vector<VecPoly> gens, std::vector<VecPoly> extras,
                                 int ambient_rank, const Limits& limits)
    : rank_(ambient_rank), ngens_(int(gens.size())) {
    if (gens.empty() && extras.empty()) return;
    const auto& spec = !gens.empty() ? gens[0][0].spec() : extras[0][0].spec();
    std::vector<VecPoly> aug;
    for (int i = 0; i < ngens_; ++i) {
        VecPoly v(rank_ + ngens_, RingElement::zero(spec));
        for (int p = 0; p < rank_; ++p) v[p] = gens[i][p];
        v[rank_ + i] = RingElement::one(spec);
        aug.push_back(std::move(v));
    }
    for (const auto& x : extras) {
        VecPoly v(rank_ + ngens_, RingElement::zero(spec));
        for (int p = 0; p < rank_; ++p) v[p] = x[p];
        aug.push_back(std::move(v));
    }
    basis_ = module_groebner(aug, limits);
}

MembershipResult ModuleWorkspace::member(const VecPoly& v) const {
    MembershipResult res;
    if (basis_.empty()) {
        res.inside = vec_is_zero(v);
        if (res.inside && !v.empty())
            res.coeffs.assign(ngens_, RingElement::zero(v[0].spec()));
        return res;
    }
    const auto& spec = basis_[0][0].spec();
    VecPoly aug(rank_ + ngens_, RingElement::zero(spec));
    for (int p = 0; p < rank_; ++p) aug[p] = v[p];
    VecPoly nf = module_reduce(aug, basis_);
    for (int p = 0; p < rank_; ++p)
        if (!nf[p].is_zero()) return res;  // not inside
    res.inside = true;
    res.coeffs.reserve(ngens_);
    for (int i = 0; i < ngens_; ++i) res.coeffs.push_back(-nf[rank_ + i]);
    return res;
}

std::vector<VecPoly> ModuleWorkspace::syzygies() const {
    std::vector<VecPoly> out;
    for (const auto& b : basis_) {
        bool first_block_zero = true;
        for (int p = 0; p < rank_; ++p)
            if (!b[p].is_zero()) { first_block_zero = false; break; }
        if (!first_block_zero) continue;
        VecPoly s(b.begin() + rank_, b.end());
        if (!vec_is_zero(s)) out.push_back(std::move(s));
    }
    return out;
}

}  // namespace madlie
