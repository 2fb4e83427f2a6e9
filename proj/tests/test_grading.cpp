#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "lndlab/catalog.hpp"
#include "lndlab/linalg.hpp"
#include "test_support.hpp"

using namespace lndlab;
using lndtest::Rng;

namespace {

// The kr(2,2,3) grading over k[x, x^-1, z, w, t].
KorasRussell kr223() { return koras_russell({2, 2, 3}); }

}  // namespace

TEST_CASE("degrees under the kr(2,2,3) grading") {
    KorasRussell kr = kr223();
    const Grading& G = kr.grading;
    const RingPtr& B = G.ring();

    REQUIRE(*deg_g(Polynomial::variable(B, "x"), G) == DegVec{-1, 0, 0});
    REQUIRE(*deg_g(Polynomial::variable(B, "z"), G) == DegVec{0, -3, 0});
    REQUIRE(*deg_g(Polynomial::variable(B, "w"), G) == DegVec{0, -2, 0});
    REQUIRE(*deg_g(Polynomial::variable(B, "t"), G) == DegVec{0, 0, -1});

    REQUIRE(kr.y_lift == parse_poly("-x^-1 - x^-2*z^2 - x^-2*w^3", B));
    REQUIRE(*deg_g(kr.y_lift, G) == DegVec{2, -6, 0});
    REQUIRE_FALSE(deg_g(Polynomial::zero(B), G).has_value());
}

TEST_CASE("homogeneity and top summands") {
    KorasRussell kr = kr223();
    const Grading& G = kr.grading;
    const RingPtr& B = G.ring();

    REQUIRE(is_homogeneous(parse_poly("z^2 + w^3", B), G));
    REQUIRE_FALSE(is_homogeneous(parse_poly("x + z^2", B), G));
    REQUIRE(is_homogeneous(parse_poly("x^-2*z^2", B), G));

    Polynomial top = top_summand(kr.y_lift, G);
    REQUIRE(top == parse_poly("-x^-2*z^2 - x^-2*w^3", B));
    REQUIRE(top_summand(Polynomial::zero(B), G).is_zero());
    REQUIRE(top_summand(top, G) == top);

    // x^d * ybar + z^u + w^v vanishes identically in the Laurent ring
    Polynomial identity =
        Polynomial::variable(B, "x").pow(2) * top + parse_poly("z^2 + w^3", B);
    REQUIRE(identity.is_zero());
}

TEST_CASE("top summand calculus on random polynomials") {
    auto ring = make_ring({"x", "y"}, MonomialOrder::lex);
    Grading G(ring, 2, {{1, 0}, {0, 1}});
    Rng rng(501);
    for (int i = 0; i < 200; ++i) {
        Polynomial f = rng.nonzero_poly(ring, 4, 4), g = rng.nonzero_poly(ring, 4, 4);
        // degree is additive, top summand multiplicative, in a domain
        DegVec df = *deg_g(f, G), dg = *deg_g(g, G);
        DegVec sum = df;
        for (std::size_t j = 0; j < sum.size(); ++j) sum[j] += dg[j];
        REQUIRE(*deg_g(f * g, G) == sum);
        REQUIRE(top_summand(f * g, G) == top_summand(f, G) * top_summand(g, G));
        REQUIRE(*deg_g(top_summand(f, G), G) == df);
        REQUIRE(top_summand(top_summand(f, G), G) == top_summand(f, G));
        if (!(f + g).is_zero()) {
            DegVec dfg = *deg_g(f + g, G);
            REQUIRE(degvec_compare(dfg, std::max(df, dg, [](const DegVec& a, const DegVec& b) {
                        return degvec_compare(a, b) < 0;
                    })) <= 0);
        }
    }
}

TEST_CASE("derivation degree under a grading") {
    auto free2 = Algebra::present(make_ring({"x", "y"}, MonomialOrder::lex), {});
    const RingPtr& r = free2->ring();
    Derivation ddx = define_derivation(free2, {{"x", Polynomial::constant(r, 1)}});
    Grading std1(r, 1, {{1}, {1}});
    REQUIRE(deg_g_derivation(ddx, std1) == DegVec{-1});

    auto ring3 = make_ring({"x", "y", "z"}, MonomialOrder::lex);
    AlgebraPtr A = Algebra::present(ring3, {parse_poly("x*z - y^2 - 1", ring3)});
    Derivation D1 = define_derivation(
        A, {{"y", parse_poly("x", ring3)}, {"z", parse_poly("2*y", ring3)}});
    Grading std3(ring3, 1, {{1}, {1}, {1}});
    REQUIRE(deg_g_derivation(D1, std3) == DegVec{0});

    Grading doubled(ring3, 1, {{2}, {2}, {2}});
    REQUIRE(deg_g_derivation(D1, doubled) == DegVec{0});
    Grading weighted(ring3, 1, {{3}, {2}, {1}});
    // gaps: deg(x)-deg(y) = 1, deg(2y)-deg(z) = 1
    REQUIRE(deg_g_derivation(D1, weighted) == DegVec{1});
    // scaling every degree doubles the result
    Grading weighted2(ring3, 1, {{6}, {4}, {2}});
    REQUIRE(deg_g_derivation(D1, weighted2) == DegVec{2});

    Derivation zero = define_derivation(A, {});
    REQUIRE_THROWS_AS(deg_g_derivation(zero, std3), ZeroDerivation);
}

TEST_CASE("induced derivation tables") {
    auto free2 = Algebra::present(make_ring({"x", "y"}, MonomialOrder::lex), {});
    const RingPtr& r = free2->ring();
    Grading std1(r, 1, {{1}, {1}});

    SECTION("homogeneous derivations reproduce their own table") {
        auto ring3 = make_ring({"x", "y", "z"}, MonomialOrder::lex);
        AlgebraPtr A = Algebra::present(ring3, {parse_poly("x*z - y^2 - 1", ring3)});
        Derivation D1 = define_derivation(
            A, {{"y", parse_poly("x", ring3)}, {"z", parse_poly("2*y", ring3)}});
        Grading std3(ring3, 1, {{1}, {1}, {1}});
        InducedDerivation dbar = induced_derivation(D1, std3);
        REQUIRE(dbar.degree == DegVec{0});
        REQUIRE(dbar.images[0].is_zero());
        REQUIRE(dbar.images[1] == parse_poly("x", ring3));
        REQUIRE(dbar.images[2] == parse_poly("2*y", ring3));
    }
    SECTION("generators below the top gap are zeroed") {
        Derivation D = define_derivation(
            free2, {{"x", parse_poly("x^2", r)}, {"y", Polynomial::constant(r, 1)}});
        InducedDerivation dbar = induced_derivation(D, std1);
        REQUIRE(dbar.degree == DegVec{1});
        REQUIRE(dbar.images[0] == parse_poly("x^2", r));
        REQUIRE(dbar.images[1].is_zero());
    }
    SECTION("degree of the induced table equals the derivation degree") {
        Rng rng(502);
        for (int i = 0; i < 50; ++i) {
            std::map<std::string, Polynomial> images{{"x", rng.poly(r, 3, 3)},
                                                     {"y", rng.poly(r, 3, 3)}};
            Derivation D = define_derivation(free2, images);
            if (D.is_zero()) continue;
            InducedDerivation dbar = induced_derivation(D, std1);
            DegVec expect = deg_g_derivation(D, std1);
            REQUIRE(dbar.degree == expect);
            // the gap bound holds for random elements too
            for (int k = 0; k < 4; ++k) {
                Polynomial f = rng.nonzero_poly(r, 3, 3);
                Polynomial df = D.apply_to_lift(f);
                if (df.is_zero()) continue;
                DegVec gap = *deg_g(df, std1);
                DegVec base = *deg_g(f, std1);
                for (std::size_t j = 0; j < gap.size(); ++j) gap[j] -= base[j];
                REQUIRE(degvec_compare(gap, expect) <= 0);
            }
        }
    }
}

TEST_CASE("kernel inclusion under the induced table") {
    // Sampled kernel elements: their top summands are killed modulo the
    // top-summand relation ideal.
    auto ring3 = make_ring({"x", "y", "z"}, MonomialOrder::lex);
    AlgebraPtr A = Algebra::present(ring3, {parse_poly("x*z - y^2 - 1", ring3)});
    Derivation D1 = define_derivation(
        A, {{"y", parse_poly("x", ring3)}, {"z", parse_poly("2*y", ring3)}});
    Grading std3(ring3, 1, {{1}, {1}, {1}});
    InducedDerivation dbar = induced_derivation(D1, std3);
    GroebnerBasis top_gb = top_relations_gb(A, std3);
    REQUIRE(top_gb.gens.size() == 1);
    REQUIRE(top_gb.gens[0] == parse_poly("x*z - y^2", ring3));

    Rng rng(503);
    int sampled = 0;
    for (int i = 0; i < 400 && sampled < 200; ++i) {
        // random kernel element: polynomial in x plus a random ideal multiple
        Polynomial f = Polynomial::zero(ring3);
        for (int d = 0; d <= 3; ++d)
            f = f + Polynomial::variable(ring3, "x").pow(d).scaled(rng.coeff());
        f = f + A->relations()[0] * rng.poly(ring3, 2, 3);
        if (f.is_zero()) continue;
        REQUIRE(D1.apply(elem(A, f)).is_zero());
        ++sampled;
        Polynomial killed = evaluate_table(dbar, top_summand(f, std3));
        REQUIRE(in_ideal(killed, top_gb));
    }
    REQUIRE(sampled >= 200);
}

TEST_CASE("hermite normal form spans") {
    SECTION("worked lattices") {
        Lattice h1 = lattice_span({{2, -6, 0}, {0, -3, 0}, {0, -2, 0}, {0, 0, -1}});
        REQUIRE(h1.rows() == std::vector<DegVec>{{2, 0, 0}, {0, 1, 0}, {0, 0, 1}});
        REQUIRE(h1.to_string() == "(2,0,0);(0,1,0);(0,0,1)");

        REQUIRE(Lattice::span({}, 3).rank() == 0);
        REQUIRE(lattice_span({{0, 0, 0}}).rank() == 0);
        REQUIRE(Lattice::standard(3).rows() ==
                std::vector<DegVec>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    }
    SECTION("containment") {
        Lattice h1 = lattice_span({{2, -6, 0}, {0, -3, 0}, {0, -2, 0}, {0, 0, -1}});
        Lattice z3 = Lattice::standard(3);
        REQUIRE(lattice_proper_in(h1, z3));
        REQUIRE_FALSE(lattice_proper_in(z3, z3));
        Lattice u_row = lattice_span({{1, 0, 0}, {0, 2, 0}, {0, 0, 1}});
        REQUIRE(lattice_proper_in(u_row, z3));
    }
    SECTION("span is invariant under shuffles and integer combinations") {
        Rng rng(504);
        for (int i = 0; i < 200; ++i) {
            std::size_t dim = static_cast<std::size_t>(rng.irange(1, 4));
            std::vector<DegVec> vecs;
            std::size_t count = static_cast<std::size_t>(rng.irange(1, 5));
            for (std::size_t k = 0; k < count; ++k) {
                DegVec v(dim);
                for (auto& x : v) x = rng.irange(-9, 9);
                vecs.push_back(std::move(v));
            }
            Lattice base = Lattice::span(vecs, dim);
            std::vector<DegVec> shuffled = vecs;
            std::shuffle(shuffled.begin(), shuffled.end(), rng.gen);
            // append an integer combination of existing rows
            DegVec combo(dim, 0);
            for (const auto& v : vecs) {
                long c = rng.irange(-3, 3);
                for (std::size_t j = 0; j < dim; ++j) combo[j] += c * v[j];
            }
            shuffled.push_back(combo);
            Lattice again = Lattice::span(shuffled, dim);
            REQUIRE(base == again);
            // every generator is a member
            for (const auto& v : vecs) REQUIRE(base.contains(v));
        }
    }
}

TEST_CASE("kr structural checks") {
    KorasRussell kr = kr223();
    const Grading& G = kr.grading;
    const RingPtr& B = G.ring();

    // the three proof lattices are proper subgroups of Z^3
    DegVec ybar_deg = *deg_g(top_summand(kr.y_lift, G), G);
    REQUIRE(ybar_deg == DegVec{2, -6, 0});
    DegVec dz = G.degree_of_var(B->require_index("z"));
    DegVec dw = G.degree_of_var(B->require_index("w"));
    DegVec dt = G.degree_of_var(B->require_index("t"));
    DegVec dx = G.degree_of_var(B->require_index("x"));

    Lattice h1 = lattice_span({ybar_deg, dz, dw, dt});
    Lattice h2 = lattice_span({dx, ybar_deg, dw, dt});
    Lattice h3 = lattice_span({dx, ybar_deg, dz, dt});
    Lattice z3 = Lattice::standard(3);
    REQUIRE(h1.rows() == std::vector<DegVec>{{2, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    REQUIRE(lattice_proper_in(h1, z3));
    REQUIRE(lattice_proper_in(h2, z3));
    REQUIRE(lattice_proper_in(h3, z3));
    REQUIRE(h2.rows() == std::vector<DegVec>{{1, 0, 0}, {0, 2, 0}, {0, 0, 1}});
    REQUIRE(h3.rows() == std::vector<DegVec>{{1, 0, 0}, {0, 3, 0}, {0, 0, 1}});

    // Bounded instance of the graded-generator statement: top summands of
    // ring elements lie in the span of monomials in {x, z, w, t, ybar}; the
    // new generator ybar is genuinely needed.
    Polynomial ybar = top_summand(kr.y_lift, G);
    std::vector<Polynomial> span_basis;
    std::vector<Monomial> support;
    Rng rng(505);
    auto build_support = [&](const std::vector<Polynomial>& polys) {
        support.clear();
        for (const auto& f : polys)
            for (const auto& t : f.terms())
                if (std::find(support.begin(), support.end(), t.mono) == support.end())
                    support.push_back(t.mono);
    };
    auto coords = [&](const Polynomial& f) {
        QVector v(support.size(), Rational(0));
        for (const auto& t : f.terms()) {
            auto it = std::find(support.begin(), support.end(), t.mono);
            REQUIRE(it != support.end());
            v[static_cast<std::size_t>(it - support.begin())] = t.coeff;
        }
        return v;
    };
    // monomials x^a z^b w^c ybar^e with small exponents
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b)
            for (int c = 0; c <= 2; ++c)
                for (int e = 0; e <= 2; ++e) {
                    Polynomial m = Polynomial::variable(B, "x").pow(a) *
                                   Polynomial::variable(B, "z").pow(b) *
                                   Polynomial::variable(B, "w").pow(c) * ybar.pow(e);
                    span_basis.push_back(m);
                }

    int checked = 0;
    for (int i = 0; i < 60 && checked < 30; ++i) {
        // random product of two generic subring elements in x, z, w, y
        Polynomial f = Polynomial::constant(B, rng.coeff());
        for (int steps = 0; steps < 2; ++steps) {
            Polynomial g = Polynomial::constant(B, rng.coeff());
            for (const char* var : {"x", "z", "w"})
                g = g + Polynomial::variable(B, var).scaled(rng.coeff());
            g = g + kr.y_lift.scaled(rng.coeff());
            if (g.is_zero()) g = Polynomial::constant(B, 1);
            f = f * g;
        }
        if (f.is_zero()) continue;
        Polynomial top = top_summand(f, G);
        std::vector<Polynomial> all = span_basis;
        all.push_back(top);
        build_support(all);
        std::vector<QVector> basis_coords;
        for (const auto& m : span_basis) basis_coords.push_back(coords(m));
        REQUIRE(solve_in_span(basis_coords, coords(top)).has_value());
        ++checked;
    }
    REQUIRE(checked >= 30);

    // without ybar the lift's top summand is not representable
    std::vector<Polynomial> no_ybar;
    for (const auto& m : span_basis)
        if (!m.is_zero() && !m.leading_monomial().has_negative()) no_ybar.push_back(m);
    std::vector<Polynomial> all = no_ybar;
    Polynomial target = top_summand(kr.y_lift, G);
    all.push_back(target);
    build_support(all);
    std::vector<QVector> basis_coords;
    for (const auto& m : no_ybar) basis_coords.push_back(coords(m));
    REQUIRE_FALSE(solve_in_span(basis_coords, coords(target)).has_value());
}
