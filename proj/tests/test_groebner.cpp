#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "lndlab/groebner.hpp"
#include "lndlab/irreducible.hpp"
#include "test_support.hpp"

using namespace lndlab;
using lndtest::Rng;

namespace {

bool is_reduced_basis(const GroebnerBasis& gb) {
    for (std::size_t i = 0; i < gb.gens.size(); ++i) {
        if (!gb.gens[i].leading_coeff().is_one()) return false;
        for (std::size_t j = 0; j < gb.gens.size(); ++j) {
            if (i == j) continue;
            for (const auto& t : gb.gens[i].terms())
                if (gb.gens[j].leading_monomial().divides(t.mono)) return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("single-generator ideals are their own reduced basis") {
    auto ring = make_ring({"x", "y"}, MonomialOrder::lex);
    GroebnerBasis gb = groebner({parse_poly("x^2 + y^2 - 1", ring)});
    REQUIRE(gb.gens.size() == 1);
    REQUIRE(gb.gens[0] == parse_poly("x^2 + y^2 - 1", ring));

    auto r4 = make_ring({"x", "y", "z", "w"}, MonomialOrder::lex);
    GroebnerBasis gb2 = groebner({parse_poly("x*z - y*w - 1", r4)});
    REQUIRE(gb2.gens.size() == 1);
    REQUIRE(gb2.gens[0] == parse_poly("x*z - y*w - 1", r4));
}

TEST_CASE("textbook elimination example") {
    auto ring = make_ring({"x", "y"}, MonomialOrder::lex);
    // Worked by hand: y^2 - x rewrites x = y^2, so the reduced lex basis is
    // {y^4 - y, x - y^2}. Both S-polynomial reductions end at zero.
    GroebnerBasis gb = groebner({parse_poly("x^2 - y", ring), parse_poly("y^2 - x", ring)});
    REQUIRE(gb.gens.size() == 2);
    REQUIRE(gb.gens[0] == parse_poly("y^4 - y", ring));
    REQUIRE(gb.gens[1] == parse_poly("x - y^2", ring));
    REQUIRE(is_reduced_basis(gb));
    bool has_univariate_in_y = false;
    for (const auto& g : gb.gens) {
        std::size_t x_idx = 0;
        if (!g.uses_variable(x_idx)) has_univariate_in_y = true;
    }
    REQUIRE(has_univariate_in_y);
}

TEST_CASE("groebner output is reduced and input-order independent") {
    auto ring = make_ring({"x", "y", "z"}, MonomialOrder::grevlex);
    Rng rng(201);
    for (int i = 0; i < 40; ++i) {
        std::vector<Polynomial> gens;
        for (int k = 0; k < 2; ++k) gens.push_back(rng.nonzero_poly(ring, 3, 4));
        GroebnerBasis gb = groebner(gens);
        REQUIRE(is_reduced_basis(gb));
        // every generator reduces to zero
        for (const auto& g : gens) REQUIRE(in_ideal(g, gb));
        // every S-polynomial reduces to zero
        for (std::size_t a = 0; a < gb.gens.size(); ++a)
            for (std::size_t b = a + 1; b < gb.gens.size(); ++b)
                REQUIRE(normal_form(detail::s_polynomial(gb.gens[a], gb.gens[b]), gb).is_zero());
        // permutation invariance
        std::vector<Polynomial> shuffled = gens;
        std::reverse(shuffled.begin(), shuffled.end());
        shuffled.push_back(gens[0] + gens[1]);  // redundant combination
        GroebnerBasis gb2 = groebner(shuffled);
        REQUIRE(gb.gens == gb2.gens);
    }
}

TEST_CASE("laurent rings are rejected for ideal computation") {
    auto laurent = make_ring({"x", "z"}, MonomialOrder::lex, {"x"});
    REQUIRE_THROWS_AS(groebner({parse_poly("x*z - 1", laurent)}), LaurentUnsupported);
}

TEST_CASE("normal form is canonical, idempotent and linear") {
    auto ring = make_ring({"x", "y", "z"}, MonomialOrder::lex);
    GroebnerBasis gb = groebner({parse_poly("x*z - y^2 - 1", ring)});
    REQUIRE(normal_form(parse_poly("x*z", ring), gb) == parse_poly("y^2 + 1", ring));
    for (const auto& g : gb.gens) REQUIRE(normal_form(g, gb).is_zero());

    Rng rng(202);
    for (int i = 0; i < 200; ++i) {
        Polynomial f = rng.poly(ring, 5, 5), g = rng.poly(ring, 5, 5);
        Polynomial nf = normal_form(f, gb);
        REQUIRE(normal_form(nf, gb) == nf);
        REQUIRE(normal_form(f - nf, gb).is_zero());
        REQUIRE(normal_form(f + g, gb) == normal_form(nf + normal_form(g, gb), gb));
        // multiplicativity up to reduction
        REQUIRE(normal_form(f * g, gb) ==
                normal_form(nf * normal_form(g, gb), gb));
    }
}

TEST_CASE("ideal membership") {
    auto ring = make_ring({"x", "y", "z", "w"}, MonomialOrder::lex);
    GroebnerBasis gb = groebner({parse_poly("x*z - y*w - 1", ring)});
    REQUIRE(in_ideal(parse_poly("x*z - y*w - 1", ring), gb));
    REQUIRE_FALSE(in_ideal(parse_poly("x*y + z*w", ring), gb));
    REQUIRE(in_ideal(Polynomial::zero(ring), gb));
}

TEST_CASE("irreducibility heuristics over the rationals") {
    auto ring = make_ring({"y"}, MonomialOrder::lex);
    SECTION("degree <= 3 decided by rational roots") {
        REQUIRE(irreducible_q(parse_poly("y^2 + 1", ring)).is_irreducible());
        IrreducibilityVerdict v = irreducible_q(parse_poly("y^2 - 1", ring));
        REQUIRE(v.is_reducible());
        REQUIRE(v.witness->to_string() == "y - 1");
        REQUIRE(irreducible_q(parse_poly("y^3 - 2", ring)).is_irreducible());
        REQUIRE(irreducible_q(parse_poly("6*y^2 - 5*y + 1", ring)).is_reducible());
        REQUIRE(irreducible_q(parse_poly("y", ring)).is_irreducible());
        REQUIRE(irreducible_q(parse_poly("y^3 + y", ring)).is_reducible());
    }
    SECTION("modular certificates in degree >= 4") {
        // y^4 + y + 1 is irreducible mod 2, hence over Q.
        IrreducibilityVerdict v = irreducible_q(parse_poly("y^4 + y + 1", ring));
        REQUIRE(v.is_irreducible());
        REQUIRE(v.certificate_prime == 2);
    }
    SECTION("y^4 + 1 stays indeterminate under the default prime list") {
        // Oracle: brute-force factor search over F_p for every prime < 50.
        // A monic quartic is reducible iff it has a root or splits into two
        // monic quadratics (y^2+b*y+c)(y^2+d*y+e); matching the y^3
        // coefficient forces d = -b, leaving an O(p^3) scan.
        auto reducible_mod_p = [](unsigned long p) {
            for (unsigned long r = 0; r < p; ++r)
                if ((((r * r % p) * r % p) * r + 1) % p == 0) return true;
            for (unsigned long b = 0; b < p; ++b)
                for (unsigned long c = 0; c < p; ++c)
                    for (unsigned long e = 0; e < p; ++e) {
                        // (y^2+by+c)(y^2-by+e) = y^4 + (c+e-b^2)y^2 + b(e-c)y + ce
                        unsigned long y2 = (c + e + p - b * b % p) % p;
                        unsigned long y1 = (b * e % p + (p - b) * c % p) % p;
                        unsigned long y0 = c * e % p;
                        if (y2 == 0 && y1 == 0 && y0 == 1 % p) return true;
                    }
            return false;
        };
        for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul,
                                37ul, 41ul, 43ul, 47ul})
            REQUIRE(reducible_mod_p(p));

        IrreducibilityVerdict v = irreducible_q(parse_poly("y^4 + 1", ring));
        REQUIRE(v.is_indeterminate());
        REQUIRE(v.primes_tried.size() == 15);
    }
    SECTION("input validation") {
        auto r2 = make_ring({"x", "y"}, MonomialOrder::lex);
        REQUIRE_THROWS_AS(irreducible_q(parse_poly("5", r2)), ConstantInput);
        REQUIRE_THROWS_AS(irreducible_q(parse_poly("x*y - 1", r2)), NotUnivariate);
    }
    SECTION("never irreducible in the presence of a rational root") {
        Rng rng(203);
        auto xring = make_ring({"x"}, MonomialOrder::lex);
        for (int i = 0; i < 200; ++i) {
            // Plant a root r, multiply by a random nonzero polynomial.
            Rational root(rng.irange(-6, 6), rng.irange(1, 3));
            Polynomial factor =
                Polynomial::variable(xring, std::size_t{0}) -
                Polynomial::constant(xring, root);
            Polynomial rest = rng.nonzero_poly(xring, 3, 3);
            Polynomial product = factor * rest;
            if (product.degree_in(0) < 2) continue;
            IrreducibilityVerdict v = irreducible_q(product);
            REQUIRE_FALSE(v.is_irreducible());
            if (v.is_reducible()) {
                // the witness divides exactly: gcd(product, witness) == monic witness
                ExtendedGcd g = univariate_ext_gcd(product, *v.witness);
                REQUIRE(g.g == *v.witness);
            }
        }
    }
}
