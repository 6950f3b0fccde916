#include "madlie/submodule.hpp"

#include <algorithm>

#include "madlie/groebner.hpp"
#include "madlie/qlinalg.hpp"
#include "madlie/smith.hpp"

namespace madlie {

namespace {

// Groebner work happens over a polynomial ring.  Laurent rings are encoded
// first as quotients Q[t, t_inv]/(t*t_inv - 1); that map is an isomorphism,
// so membership and syzygies transfer exactly in both directions.
struct WorkContext {
    RingSpec::Ptr original;
    RingSpec::Ptr quotient;  // carries the relations; null for polynomial rings
    RingSpec::Ptr twin;      // polynomial ring the Groebner layer runs on
    bool laurentized = false;
    int n = 0;               // original variable count

    static WorkContext make(const RingSpec::Ptr& spec);
    RingElement lift(const RingElement& e) const;
    RingElement lower(const RingElement& e) const;
    std::vector<VecPoly> relation_extras(int ambient) const;
};

WorkContext WorkContext::make(const RingSpec::Ptr& spec) {
    WorkContext ctx;
    ctx.original = spec;
    ctx.n = spec->nvars();
    switch (spec->kind()) {
        case RingKind::polynomial:
            ctx.twin = spec;
            return ctx;
        case RingKind::quotient:
        case RingKind::truncated:
            ctx.quotient = spec;
            ctx.twin = spec->polynomial_twin();
            return ctx;
        case RingKind::laurent: {
            if (2 * ctx.n > kMaxVars - 1)
                throw InputError("module computations over laurent rings support at most " +
                                 std::to_string((kMaxVars - 1) / 2) + " variables");
            std::vector<std::string> vars = spec->vars();
            std::vector<std::string> rels;
            for (const auto& v : spec->vars()) {
                vars.push_back(v + "_inv");
                rels.push_back(v + "*" + v + "_inv - 1");
            }
            ctx.quotient = RingSpec::make(RingKind::quotient, std::move(vars), std::move(rels),
                                          MonomialOrder::degrevlex, spec->limits(), std::nullopt,
                                          true);
            ctx.twin = ctx.quotient->polynomial_twin();
            ctx.laurentized = true;
            return ctx;
        }
    }
    throw InternalError("unhandled ring kind");
}

RingElement WorkContext::lift(const RingElement& e) const {
    if (!laurentized) return original->kind() == RingKind::polynomial ? e : e.cast_to(twin);
    std::vector<Term> out;
    for (const auto& t : e.terms()) {
        Mono m;
        for (int i = 0; i < n; ++i) {
            if (t.m.e[i] >= 0)
                m.e[i] = t.m.e[i];
            else
                m.e[n + i] = static_cast<int16_t>(-t.m.e[i]);
        }
        out.push_back(Term{m, t.c});
    }
    return RingElement::from_terms(twin, std::move(out));
}

RingElement WorkContext::lower(const RingElement& e) const {
    if (!laurentized) return original->kind() == RingKind::polynomial ? e : e.cast_to(original);
    // Reduce modulo t*t_inv - 1 so each term touches only one of the pair.
    RingElement q = e.cast_to(quotient);
    std::vector<Term> out;
    for (const auto& t : q.terms()) {
        Mono m;
        for (int i = 0; i < n; ++i) m.e[i] = static_cast<int16_t>(t.m.e[i] - t.m.e[n + i]);
        out.push_back(Term{m, t.c});
    }
    return RingElement::from_terms(original, std::move(out));
}

std::vector<VecPoly> WorkContext::relation_extras(int ambient) const {
    std::vector<VecPoly> extras;
    if (!quotient) return extras;
    for (const auto& rel : quotient->relation_basis())
        for (int r = 0; r < ambient; ++r) {
            VecPoly v(ambient, RingElement::zero(twin));
            v[r] = rel;
            extras.push_back(std::move(v));
        }
    return extras;
}

// Membership oracle for a fixed generating set (one Groebner basis, many
// queries).
class SpanOracle {
  public:
    SpanOracle(const std::vector<std::vector<RingElement>>& gens, const RingSpec::Ptr& spec,
               int ambient_rank)
        : ctx_(WorkContext::make(spec)),
          ws_(lift_all(ctx_, gens, ambient_rank), ctx_.relation_extras(ambient_rank), ambient_rank,
              spec->limits()) {}

    SpanMembership test(const std::vector<RingElement>& v) const {
        if (int(v.size()) != ws_.ambient_rank())
            throw InternalError("span membership dimension mismatch");
        VecPoly target;
        for (const auto& e : v) target.push_back(ctx_.lift(e));
        MembershipResult mr = ws_.member(target);
        SpanMembership res;
        res.inside = mr.inside;
        if (mr.inside)
            for (const auto& c : mr.coeffs) res.combination.push_back(ctx_.lower(c));
        return res;
    }

  private:
    static std::vector<VecPoly> lift_all(const WorkContext& ctx,
                                         const std::vector<std::vector<RingElement>>& gens,
                                         int ambient_rank) {
        std::vector<VecPoly> out;
        for (const auto& g : gens) {
            if (int(g.size()) != ambient_rank)
                throw InternalError("span generator dimension mismatch");
            VecPoly w;
            for (const auto& e : g) w.push_back(ctx.lift(e));
            out.push_back(std::move(w));
        }
        return out;
    }

    WorkContext ctx_;
    ModuleWorkspace ws_;
};

}  // namespace

SpanMembership in_span(const std::vector<std::vector<RingElement>>& gens,
                       const std::vector<RingElement>& v, const RingSpec::Ptr& spec,
                       int ambient_rank) {
    return SpanOracle(gens, spec, ambient_rank).test(v);
}

KernelResult module_kernel(const RingMatrix& m) {
    const auto& spec = m.spec();
    KernelResult res;
    res.module.spec = spec;
    res.module.ambient_rank = m.cols();

    if (spec->kind() == RingKind::laurent && spec->nvars() == 1) {
        SmithResult snf = smith_normal_form(m);
        const int nmin = std::min(m.rows(), m.cols());
        for (int j = 0; j < m.cols(); ++j) {
            if (j < nmin && !snf.D.at(j, j).is_zero()) continue;
            std::vector<RingElement> col;
            col.reserve(m.cols());
            for (int i = 0; i < m.cols(); ++i) col.push_back(snf.V.at(i, j));
            for (const auto& e : m.apply(col))
                if (!e.is_zero()) throw InternalError("Smith kernel column fails m*v = 0");
            res.module.generators.push_back(std::move(col));
        }
        // Columns of an invertible matrix: a free basis.
        res.free_basis = true;
        return res;
    }

    WorkContext ctx = WorkContext::make(spec);
    std::vector<VecPoly> cols;
    for (int j = 0; j < m.cols(); ++j) {
        VecPoly c;
        for (int i = 0; i < m.rows(); ++i) c.push_back(ctx.lift(m.at(i, j)));
        cols.push_back(std::move(c));
    }
    ModuleWorkspace ws(std::move(cols), ctx.relation_extras(m.rows()), m.rows(), spec->limits());
    std::vector<std::vector<RingElement>> gens;
    for (const auto& s : ws.syzygies()) {
        std::vector<RingElement> g;
        bool nonzero = false;
        for (const auto& e : s) {
            RingElement low = ctx.lower(e);
            nonzero = nonzero || !low.is_zero();
            g.push_back(std::move(low));
        }
        if (!nonzero) continue;
        for (const auto& e : m.apply(g))
            if (!e.is_zero()) throw InternalError("syzygy fails m*v = 0");
        gens.push_back(std::move(g));
    }
    // Drop generators inside the span of the others until none is.
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            std::vector<std::vector<RingElement>> others;
            for (std::size_t j = 0; j < gens.size(); ++j)
                if (j != i) others.push_back(gens[j]);
            if (in_span(others, gens[i], spec, res.module.ambient_rank).inside) {
                gens.erase(gens.begin() + long(i));
                changed = true;
                break;
            }
        }
    }
    res.module.generators = std::move(gens);
    return res;
}

MinGenCertificate min_generators(const Submodule& s) {
    const int n = int(s.generators.size());
    MinGenCertificate cert;
    if (n == 0) return cert;
    if (n > 12) throw ResourceLimitError("min_generators subset search capped at 12 generators");
    // Increasing subset size, combinations in lexicographic order; the first
    // spanning subset wins.  Size-minimality makes the kept set irredundant:
    // a kept generator inside the span of the other kept ones would yield a
    // smaller spanning subset.
    for (int k = 1; k <= n; ++k) {
        std::vector<int> idx(k);
        for (int i = 0; i < k; ++i) idx[i] = i;
        while (true) {
            std::vector<std::vector<RingElement>> kept;
            kept.reserve(k);
            for (int i : idx) kept.push_back(s.generators[i]);
            SpanOracle oracle(kept, s.spec, s.ambient_rank);
            std::vector<MinGenCertificate::Discarded> disc;
            bool spans = true;
            for (int j = 0; j < n && spans; ++j) {
                if (std::find(idx.begin(), idx.end(), j) != idx.end()) continue;
                SpanMembership sm = oracle.test(s.generators[j]);
                if (!sm.inside)
                    spans = false;
                else
                    disc.push_back({j, sm.combination});
            }
            if (spans) {
                cert.min_count = k;
                cert.kept = idx;
                cert.discarded = std::move(disc);
                return cert;
            }
            int i = k - 1;
            while (i >= 0 && idx[i] == n - k + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    throw InternalError("no spanning subset found, including the full set");
}

int fibre_rank(const Submodule& s, const std::map<std::string, Rational>& point) {
    QMat rows;
    for (const auto& g : s.generators) {
        QVec r;
        r.reserve(g.size());
        for (const auto& e : g) r.push_back(e.eval(point));
        rows.push_back(std::move(r));
    }
    return q_rank(std::move(rows));
}

}  // namespace madlie
