#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <map>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "madlie/conjugacy.hpp"
#include "madlie/errors.hpp"

using namespace madlie;

namespace {

RingElement el(const RingSpec::Ptr& s, const std::string& text) {
  return RingElement::parse(s, text);
}

struct A1Kit {
  ChevalleyBasis::Ptr basis;
  RingSpec::Ptr spec;
  LieElement h, e, f;
  A1Kit(RingSpec::Ptr s)
      : basis(ChevalleyBasis::build(CartanMatrix::of_type('A', 1))), spec(s),
        h(basis, s), e(basis, s), f(basis, s) {
    h.set_coeff(0, RingElement::one(s));
    e.set_coeff(1, RingElement::one(s));
    f.set_coeff(2, RingElement::one(s));
  }
};

RingSpec::Ptr quadric_ring() {
  return RingSpec::make(RingKind::quotient, {"a", "b", "c"}, {"a^2+b*c-1"},
                        MonomialOrder::degrevlex, {},
                        std::map<std::string, Rational>{{"a", 1}, {"b", 0}, {"c", 0}},
                        true);
}

LieElement quadric_element(const ChevalleyBasis::Ptr& basis, const RingSpec::Ptr& q) {
  LieElement p(basis, q);
  p.set_coeff(0, el(q, "a"));
  p.set_coeff(1, el(q, "b"));
  p.set_coeff(2, el(q, "c"));
  return p;
}

// Every generator g of an eigenmodule must satisfy (ad p) g = lambda g
// exactly; this verifies module_kernel output against the defining equation.
void check_eigen_equation(const LieElement& p, const Rational& lambda,
                          const std::vector<std::vector<RingElement>>& gens) {
  RingMatrix ad = ad_matrix(p);
  RingElement lc = RingElement::constant(p.spec(), lambda);
  for (const auto& g : gens) {
    REQUIRE(static_cast<int>(g.size()) == p.dim());
    std::vector<RingElement> img = ad.apply(g);
    for (int i = 0; i < p.dim(); ++i) CHECK(img[i] == g[i] * lc);
  }
}

bool mats_equal(const RingMatrix& a, const RingMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (!(a.at(i, j) == b.at(i, j))) return false;
  return true;
}

bool in_split_cartan(const LieElement& x) {
  for (int a = 0; a < x.basis()->roots().num_roots(); ++a)
    if (!x.root_coeff(a).is_zero()) return false;
  for (int i = 0; i < x.basis()->rank(); ++i)
    if (!x.coeff(i).is_constant()) return false;
  return true;
}

LieElement constant_cartan(const ChevalleyBasis::Ptr& basis, const RingSpec::Ptr& spec,
                           const std::vector<Rational>& coords) {
  LieElement x(basis, spec);
  for (std::size_t i = 0; i < coords.size(); ++i)
    x.set_coeff(static_cast<int>(i), RingElement::constant(spec, coords[i]));
  return x;
}

GroupElement random_word(std::mt19937& rng, const ChevalleyBasis::Ptr& basis,
                         const RingSpec::Ptr& spec, int steps) {
  std::uniform_int_distribution<int> root_pick(0, basis->roots().num_roots() - 1);
  std::uniform_int_distribution<int> coeff(-2, 2);
  std::uniform_int_distribution<int> expo(-1, 1);
  GroupElement g = identity_element(basis, spec);
  for (int s = 0; s < steps; ++s) {
    Mono m;
    m.e[0] = static_cast<int16_t>(expo(rng));
    int c = coeff(rng);
    g = mul(g, root_elt(basis, root_pick(rng),
                        RingElement::monomial(spec, m, Rational(c == 0 ? 1 : c))));
  }
  return g;
}

}  // namespace

TEST_CASE("eigenmodules split the algebra for a split Cartan element") {
  auto spec = RingSpec::make(RingKind::laurent, {"t"});
  A1Kit k(spec);

  auto ems = eigenmodules(k.h);
  REQUIRE(ems.size() == 3);
  CHECK(ems[0].eigenvalue == Rational(-2));
  CHECK(ems[1].eigenvalue == Rational(0));
  CHECK(ems[2].eigenvalue == Rational(2));
  // slot order: h, e (root 0), f (root 1)
  std::vector<int> expected_slot = {2, 0, 1};
  for (int i = 0; i < 3; ++i) {
    CHECK(ems[i].free_basis);
    REQUIRE(ems[i].module.generators.size() == 1);
    check_eigen_equation(k.h, ems[i].eigenvalue, ems[i].module.generators);
    const auto& g = ems[i].module.generators[0];
    for (int j = 0; j < 3; ++j)
      CHECK(g[j].is_zero() == (j != expected_slot[i]));
  }

  CHECK_THROWS_WITH_AS(eigenmodules(k.e),
                       "eigenmodules need a k-diagonalizable element", InputError);
}

TEST_CASE("eigenmodules of a conjugated element stay free of rank one") {
  auto spec = RingSpec::make(RingKind::laurent, {"t"});
  A1Kit k(spec);
  GroupElement g = root_elt(k.basis, 0, el(spec, "t"));
  LieElement p = group_act(g, k.h);  // h - 2t e

  auto ems = eigenmodules(p);
  REQUIRE(ems.size() == 3);
  for (const auto& em : ems) {
    CHECK(em.free_basis);
    REQUIRE(em.module.generators.size() == 1);
    check_eigen_equation(p, em.eigenvalue, em.module.generators);
  }
  // [p, e] = 2e still, so e spans the eigenvalue-2 line.
  std::vector<RingElement> evec = {RingElement::zero(spec), RingElement::one(spec),
                                   RingElement::zero(spec)};
  CHECK(in_span(ems[2].module.generators, evec, spec, 3).inside);
}

TEST_CASE("quadric eigenmodule at 2 is rank one but not free") {
  auto q = quadric_ring();
  auto basis = ChevalleyBasis::build(CartanMatrix::of_type('A', 1));
  LieElement p = quadric_element(basis, q);

  for (const Rational& lam : {Rational(2), Rational(-2)}) {
    FreenessCertificate cert = freeness_certificate(p, lam);
    CHECK(cert.verdict == FreenessVerdict::nonfree_rank1);
    CHECK(cert.eigenvalue == lam);
    CHECK(cert.rank == 1);
    CHECK(cert.min_gens == 2);
    REQUIRE(cert.rank_point.has_value());
    check_eigen_equation(p, lam, cert.module.generators);
  }

  // The zero eigenmodule is spanned by p itself.
  FreenessCertificate zero = freeness_certificate(p, Rational(0));
  CHECK(zero.verdict == FreenessVerdict::free_basis_found);
  CHECK(zero.rank == 1);
  CHECK(zero.min_gens == 1);
  check_eigen_equation(p, Rational(0), zero.module.generators);
  std::vector<RingElement> pv = {el(q, "a"), el(q, "b"), el(q, "c")};
  CHECK(in_span(zero.module.generators, pv, q, 3).inside);
}

TEST_CASE("freeness certificate on the PID path returns an eigenbasis") {
  auto spec = RingSpec::make(RingKind::laurent, {"t"});
  A1Kit k(spec);
  GroupElement g = root_elt(k.basis, 0, el(spec, "t"));
  LieElement p = group_act(g, k.h);

  FreenessCertificate cert = freeness_certificate(p, Rational(2));
  CHECK(cert.verdict == FreenessVerdict::free_basis_found);
  CHECK(cert.rank == 1);
  CHECK(cert.min_gens == 1);
  CHECK(!cert.rank_point.has_value());
  check_eigen_equation(p, Rational(2), cert.module.generators);

  // 7 is not an eigenvalue: the kernel is the zero module.
  FreenessCertificate none = freeness_certificate(p, Rational(7));
  CHECK(none.verdict == FreenessVerdict::free_basis_found);
  CHECK(none.rank == 0);
  CHECK(none.module.generators.empty());

  CHECK_THROWS_WITH_AS(freeness_certificate(k.e, Rational(0)),
                       "freeness certificate needs a k-diagonalizable element",
                       InputError);
}

TEST_CASE("conjugate_regular returns an exact witness on the PID path") {
  auto spec = RingSpec::make(RingKind::laurent, {"t"});
  A1Kit k(spec);
  GroupElement g = root_elt(k.basis, 0, el(spec, "t"));
  LieElement p = group_act(g, k.h);  // h - 2t e

  ConjugationResult res = conjugate_regular(p, k.h);
  REQUIRE(res.status == ConjugationStatus::solved);
  REQUIRE(res.witness.has_value());
  CHECK(group_act(*res.witness, p) == k.h);
  REQUIRE(res.witness->defining.has_value());
  CHECK(res.witness->defining->det() == RingElement::one(spec));

  // Same call with the target expressed over Q.
  LieElement h_q(k.basis, RingSpec::rationals());
  h_q.set_coeff(0, RingElement::one(RingSpec::rationals()));
  ConjugationResult res_q = conjugate_regular(p, h_q);
  REQUIRE(res_q.status == ConjugationStatus::solved);
  CHECK(group_act(*res_q.witness, p) == k.h);

  // A constant element needs no motion: the witness collapses to the identity.
  ConjugationResult triv = conjugate_regular(k.h, k.h);
  REQUIRE(triv.status == ConjugationStatus::solved);
  REQUIRE(triv.witness->defining.has_value());
  CHECK(mats_equal(*triv.witness->defining,
                   RingMatrix::identity(spec, k.basis->defining_dim())));

  LieElement twice = k.h;
  twice.set_coeff(0, el(spec, "2"));
  CHECK_THROWS_WITH_AS(conjugate_regular(p, twice),
                       "target element is not pointwise conjugate to p", InputError);
  CHECK_THROWS_WITH_AS(conjugate_regular(p.scaled(Rational(0)), k.h),
                       "conjugate_regular needs a regular element", InputError);
  CHECK_THROWS_WITH_AS(conjugate_regular(k.e, k.h),
                       "conjugate_regular needs a k-diagonalizable element",
                       InputError);
  LieElement moving_target = k.h;
  moving_target.set_coeff(0, el(spec, "t"));
  CHECK_THROWS_WITH_AS(conjugate_regular(p, moving_target),
                       "target element must have constant coefficients", InputError);
}

TEST_CASE("conjugate_regular reports unsupported ring and type combinations") {
  auto poly = RingSpec::make(RingKind::polynomial, {"t"});
  A1Kit kp(poly);
  ConjugationResult r1 = conjugate_regular(kp.h, kp.h);
  CHECK(r1.status == ConjugationStatus::unsupported);
  CHECK(r1.detail.find("laurent") != std::string::npos);

  auto l2 = RingSpec::make(RingKind::laurent, {"t", "u"});
  A1Kit k2(l2);
  CHECK(conjugate_regular(k2.h, k2.h).status == ConjugationStatus::unsupported);

  auto lb = RingSpec::make(RingKind::laurent, {"t"});
  auto b2 = ChevalleyBasis::build(CartanMatrix::of_type('B', 2));
  LieElement hb(b2, lb);
  hb.set_coeff(0, RingElement::one(lb));
  hb.set_coeff(1, el(lb, "3"));
  ConjugationResult r3 = conjugate_regular(hb, hb);
  CHECK(r3.status == ConjugationStatus::unsupported);
  CHECK(r3.detail.find("defining") != std::string::npos);
}

TEST_CASE("conjugate_regular solves random regular round trips") {
  auto spec = RingSpec::make(RingKind::laurent, {"t"});
  std::mt19937 rng(9100);

  auto run = [&](char type, int rank, const std::vector<Rational>& coords, int trials) {
    auto basis = ChevalleyBasis::build(CartanMatrix::of_type(type, rank));
    LieElement p0 = constant_cartan(basis, spec, coords);
    for (int trial = 0; trial < trials; ++trial) {
      GroupElement g = random_word(rng, basis, spec, 3);
      LieElement p = group_act(g, p0);
      ConjugationResult res = conjugate_regular(p, p0);
      REQUIRE(res.status == ConjugationStatus::solved);
      CHECK(group_act(*res.witness, p) == p0);
    }
  };
  run('A', 1, {Rational(1)}, 4);
  run('A', 2, {Rational(1), Rational(3)}, 4);
  run('A', 3, {Rational(1), Rational(3), Rational(1)}, 2);

  // Target produced by evaluation at a point, as in the torsor question.
  auto basis = ChevalleyBasis::build(CartanMatrix::of_type('A', 2));
  LieElement p0 = constant_cartan(basis, spec, {Rational(1), Rational(3)});
  GroupElement g = random_word(rng, basis, spec, 3);
  LieElement p = group_act(g, p0);
  LieElement ev = evaluate_element(p, {{"t", Rational(1)}});
  ConjugationResult res = conjugate_regular(p, ev);
  REQUIRE(res.status == ConjugationStatus::solved);
  LieElement img = group_act(*res.witness, p);
  for (int i = 0; i < p.dim(); ++i)
    CHECK(img.coeff(i) == RingElement::constant(spec, ev.coeff(i).constant_value()));
}

TEST_CASE("quadric conjugation is obstructed with the tangent certificate") {
  auto q = quadric_ring();
  auto basis = ChevalleyBasis::build(CartanMatrix::of_type('A', 1));
  LieElement p = quadric_element(basis, q);
  LieElement target = evaluate_element(p, {{"a", 1}, {"b", 0}, {"c", 0}});

  ConjugationResult res = conjugate_regular(p, target);
  REQUIRE(res.status == ConjugationStatus::obstructed);
  CHECK(!res.witness.has_value());
  REQUIRE(res.obstruction.has_value());
  CHECK(res.obstruction->eigenvalue == Rational(2));
  CHECK(res.obstruction->verdict == FreenessVerdict::nonfree_rank1);
  CHECK(res.obstruction->rank == 1);
  CHECK(res.obstruction->min_gens == 2);
  CHECK(!res.detail.empty());

  // The certificate must agree with the direct freeness computation.
  FreenessCertificate direct = freeness_certificate(p, res.obstruction->eigenvalue);
  CHECK(direct.verdict == FreenessVerdict::nonfree_rank1);
  CHECK(direct.rank == res.obstruction->rank);
  CHECK(direct.min_gens == res.obstruction->min_gens);
}

TEST_CASE("mad_conjugate drives a single regular element into the Cartan") {
  auto spec = RingSpec::make(RingKind::laurent, {"t"});
  A1Kit k(spec);
  GroupElement g = root_elt(k.basis, 0, el(spec, "t"));
  LieElement p = group_act(g, k.h);

  ConjugationResult res = mad_conjugate({{p}});
  REQUIRE(res.status == ConjugationStatus::solved);
  REQUIRE(res.witness.has_value());
  LieElement img = group_act(*res.witness, p);
  CHECK(in_split_cartan(img));
  // Eigenvalues land in ascending order on the diagonal.
  RingMatrix d = defining_matrix_of(img);
  CHECK(d.at(0, 0) == el(spec, "-1"));
  CHECK(d.at(1, 1) == el(spec, "1"));
  CHECK(d.at(0, 1).is_zero());
  CHECK(d.at(1, 0).is_zero());
}

TEST_CASE("mad_conjugate returns the identity witness on Cartan candidates") {
  auto spec = RingSpec::make(RingKind::laurent, {"t"});
  auto basis = ChevalleyBasis::build(CartanMatrix::of_type('A', 2));
  LieElement w1 = constant_cartan(basis, spec, {Rational(2, 3), Rational(1, 3)});
  LieElement w2 = constant_cartan(basis, spec, {Rational(1, 3), Rational(2, 3)});

  ConjugationResult res = mad_conjugate({{w1, w2}});
  REQUIRE(res.status == ConjugationStatus::solved);
  REQUIRE(res.witness->defining.has_value());
  CHECK(mats_equal(*res.witness->defining, RingMatrix::identity(spec, 3)));
  CHECK(res.notes.empty());
}

TEST_CASE("mad_conjugate recurses through the Levi block") {
  auto spec = RingSpec::make(RingKind::laurent, {"t"});
  auto basis = ChevalleyBasis::build(CartanMatrix::of_type('A', 2));
  // omega_1-dual centralizes alpha_2, so its zero set is a proper Levi.
  LieElement om1 = constant_cartan(basis, spec, {Rational(2, 3), Rational(1, 3)});
  // Companion with a nontrivial alpha_2 block: h2 + e_{a2} + 3 f_{a2}.
  LieElement comp(basis, spec);
  comp.set_coeff(1, RingElement::one(spec));
  comp.set_coeff(basis->v_index(1), RingElement::one(spec));
  comp.set_coeff(basis->v_index(basis->roots().num_positive() + 1), el(spec, "3"));

  GroupElement g = mul(root_elt(basis, 0, el(spec, "t")),
                       root_elt(basis, 2, el(spec, "t^-1")));
  MadCandidate c{{group_act(g, om1), group_act(g, comp)}};

  ConjugationResult res = mad_conjugate(c);
  REQUIRE(res.status == ConjugationStatus::solved);
  LieElement img1 = group_act(*res.witness, c.elements[0]);
  LieElement img2 = group_act(*res.witness, c.elements[1]);
  CHECK(in_split_cartan(img1));
  CHECK(in_split_cartan(img2));
  // Hand-computed targets: spectra sorted ascending, block-wise.
  CHECK(img1 == constant_cartan(basis, spec, {Rational(-1, 3), Rational(-2, 3)}));
  CHECK(img2 == constant_cartan(basis, spec, {Rational(-2), Rational(0)}));

  bool saw_level1 = false;
  for (const auto& n : res.notes) saw_level1 = saw_level1 || n.find("level 1") == 0;
  CHECK(saw_level1);
}

TEST_CASE("mad_conjugate handles two Levi blocks at once") {
  auto spec = RingSpec::make(RingKind::laurent, {"t"});
  auto basis = ChevalleyBasis::build(CartanMatrix::of_type('A', 3));
  LieElement om2 = constant_cartan(
      basis, spec, {Rational(1, 2), Rational(1), Rational(1, 2)});
  LieElement h1(basis, spec);
  h1.set_coeff(0, RingElement::one(spec));

  // alpha_2 and the highest root both pair nontrivially with omega_2-dual.
  int highest = basis->roots().num_positive() - 1;
  GroupElement g = mul(root_elt(basis, 1, el(spec, "t")),
                       root_elt(basis, highest, el(spec, "t^-1")));
  MadCandidate c{{group_act(g, om2), group_act(g, h1)}};

  ConjugationResult res = mad_conjugate(c);
  REQUIRE(res.status == ConjugationStatus::solved);
  for (const auto& x : c.elements) CHECK(in_split_cartan(group_act(*res.witness, x)));
  REQUIRE(!res.notes.empty());
  CHECK(res.notes[0].find("level 0") == 0);
}

TEST_CASE("mad_conjugate round trips random split tori") {
  auto spec = RingSpec::make(RingKind::laurent, {"t"});
  std::mt19937 rng(777);
  std::uniform_int_distribution<int> coeff(-2, 2);

  for (int rank : {2, 3}) {
    auto basis = ChevalleyBasis::build(CartanMatrix::of_type('A', rank));
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<Rational> c1, c2;
      for (int i = 0; i < rank; ++i) {
        c1.push_back(Rational(coeff(rng)));
        c2.push_back(Rational(coeff(rng)));
      }
      GroupElement g = random_word(rng, basis, spec, 3);
      MadCandidate cand{{group_act(g, constant_cartan(basis, spec, c1)),
                         group_act(g, constant_cartan(basis, spec, c2))}};
      ConjugationResult res = mad_conjugate(cand);
      REQUIRE(res.status == ConjugationStatus::solved);
      for (const auto& x : cand.elements)
        CHECK(in_split_cartan(group_act(*res.witness, x)));
    }
  }
}

TEST_CASE("mad_conjugate reports unsupported rings and types") {
  auto poly = RingSpec::make(RingKind::polynomial, {"t"});
  A1Kit kp(poly);
  CHECK(mad_conjugate({{kp.h}}).status == ConjugationStatus::unsupported);

  auto lb = RingSpec::make(RingKind::laurent, {"t"});
  auto b2 = ChevalleyBasis::build(CartanMatrix::of_type('B', 2));
  LieElement hb(b2, lb);
  hb.set_coeff(0, RingElement::one(lb));
  ConjugationResult res = mad_conjugate({{hb}});
  CHECK(res.status == ConjugationStatus::unsupported);
  CHECK(res.detail.find("defining") != std::string::npos);

  A1Kit k(lb);
  CHECK_THROWS_WITH_AS(mad_conjugate({{k.h, k.e}}),
                       "candidate elements 1 and 2 do not commute", InputError);
}

TEST_CASE("nilpotent_lift recovers the square-zero witness") {
  auto spec = RingSpec::make(RingKind::truncated, {"eps"}, {"eps^2"});
  A1Kit k(spec);
  RingElement eps = el(spec, "eps");
  LieElement p = k.h;
  p.set_coeff(1, eps);
  p.set_coeff(2, eps);  // h + (e+f) eps, a conjugate of h

  LieElement p0 = k.h;
  GroupElement pbar = identity_element(k.basis, RingSpec::rationals());
  int rounds = -1;
  GroupElement w = nilpotent_lift(p, p0, pbar, &rounds);
  CHECK(rounds == 1);
  CHECK(group_act(w, p) == p0);

  // One theta factor per root, in root order: exp(e eps/2) then exp(-f eps/2).
  GroupElement hand = mul(root_elt(k.basis, 1, eps.scaled(Rational(-1, 2))),
                          root_elt(k.basis, 0, eps.scaled(Rational(1, 2))));
  CHECK(mats_equal(w.adjoint, hand.adjoint));
}

TEST_CASE("nilpotent_lift doubles precision each round") {
  for (auto [rel, expect] : std::vector<std::pair<const char*, int>>{
           {"eps^2", 1}, {"eps^4", 2}, {"eps^8", 3}}) {
    auto spec = RingSpec::make(RingKind::truncated, {"eps"}, {rel});
    A1Kit k(spec);
    RingElement eps = el(spec, "eps");
    GroupElement g = mul(root_elt(k.basis, 0, eps),
                         root_elt(k.basis, 1, eps * eps * eps));
    LieElement p = group_act(g, k.h);
    int rounds = -1;
    GroupElement w = nilpotent_lift(p, k.h, identity_element(k.basis, RingSpec::rationals()),
                                    &rounds);
    CHECK(rounds == expect);
    CHECK(group_act(w, p) == k.h);
  }
}

TEST_CASE("nilpotent_lift handles several nilpotent variables") {
  auto spec = RingSpec::make(RingKind::truncated, {"x", "y"}, {"x^2", "y^3"});
  A1Kit k(spec);
  GroupElement g = mul(root_elt(k.basis, 0, el(spec, "x")),
                       root_elt(k.basis, 1, el(spec, "y")));
  LieElement p = group_act(g, k.h);
  int rounds = -1;
  GroupElement w = nilpotent_lift(p, k.h, identity_element(k.basis, RingSpec::rationals()),
                                  &rounds);
  CHECK(rounds == 2);  // x y^2 survives, so J^4 = 0 and N = 4
  CHECK(group_act(w, p) == k.h);
}

TEST_CASE("nilpotent_lift starts from a nontrivial reduced witness") {
  auto spec = RingSpec::make(RingKind::truncated, {"eps"}, {"eps^3"});
  A1Kit k(spec);
  // p reduces to h + e - f + ... : conjugate of h by a constant word times
  // a nilpotent correction.
  auto rq = RingSpec::rationals();
  GroupElement base = root_elt(k.basis, 0, RingElement::one(rq));
  GroupElement base_t = root_elt(k.basis, 0, RingElement::one(spec));
  GroupElement g = mul(root_elt(k.basis, 1, el(spec, "eps")), base_t);
  LieElement p = group_act(g, k.h);

  // The reduction of p is conjugate to h by base^{-1}; hand it over as pbar.
  LieElement pred(k.basis, rq), hq(k.basis, rq);
  hq.set_coeff(0, RingElement::one(rq));
  for (int i = 0; i < p.dim(); ++i)
    pred.set_coeff(i, RingElement::constant(rq, p.coeff(i).constant_coefficient()));
  REQUIRE(group_act(base, hq) == pred);  // sanity: reduction is the constant conjugate
  GroupElement pbar = from_defining(
      k.basis, base.defining->adjugate());  // inverse of a det-1 matrix
  int rounds = -1;
  GroupElement w = nilpotent_lift(p, k.h, pbar, &rounds);
  CHECK(rounds == 2);
  CHECK(group_act(w, p) == k.h);
}

TEST_CASE("nilpotent_lift rejects bad inputs") {
  auto spec = RingSpec::make(RingKind::truncated, {"eps"}, {"eps^2"});
  A1Kit k(spec);
  auto rq = RingSpec::rationals();
  GroupElement id_q = identity_element(k.basis, rq);

  auto laurent = RingSpec::make(RingKind::laurent, {"t"});
  A1Kit kl(laurent);
  CHECK_THROWS_WITH_AS(nilpotent_lift(kl.h, kl.h, identity_element(kl.basis, rq)),
                       "nilpotent lift expects a truncated coordinate ring",
                       InputError);

  CHECK_THROWS_WITH_AS(nilpotent_lift(k.e, k.h, id_q),
                       "nilpotent lift needs a k-diagonalizable element", InputError);

  LieElement bad_target = k.h;
  bad_target.set_coeff(1, RingElement::one(spec));
  CHECK_THROWS_WITH_AS(nilpotent_lift(k.h, bad_target, id_q),
                       "target element must lie in the split Cartan", InputError);

  LieElement moving = k.h;
  moving.set_coeff(0, el(spec, "1+eps"));
  CHECK_THROWS_WITH_AS(nilpotent_lift(k.h, moving, id_q),
                       "target element must have constant coefficients", InputError);

  CHECK_THROWS_WITH_AS(nilpotent_lift(k.h, k.h, identity_element(k.basis, spec)),
                       "reduced witness must live over Q", InputError);

  GroupElement shove = root_elt(k.basis, 0, RingElement::one(rq));
  CHECK_THROWS_WITH_AS(
      nilpotent_lift(k.h, k.h, shove),
      "reduced witness does not conjugate the reduction of p onto the target",
      InputError);

  auto b2 = ChevalleyBasis::build(CartanMatrix::of_type('B', 2));
  LieElement hb(b2, spec);
  hb.set_coeff(0, RingElement::one(spec));
  CHECK_THROWS_WITH_AS(nilpotent_lift(hb, hb, identity_element(b2, rq)),
                       "nilpotent lift needs the defining representation (type A)",
                       InputError);
}
