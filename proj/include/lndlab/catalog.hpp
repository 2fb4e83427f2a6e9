#pragma once

#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "lndlab/grading.hpp"
#include "lndlab/parse.hpp"
#include "lndlab/univariate.hpp"

namespace lndlab {

// ---------------------------------------------------------------------------
// Danielewski domains k[x,y,z]/(x^n z - p(x,y)) with deg_y p = deg_y p(0,y).
// ---------------------------------------------------------------------------

struct DanielewskiSpec {
    unsigned n;    // >= 1
    Polynomial p;  // over ring(x, y)

    static RingPtr xy_ring() {
        static RingPtr ring = make_ring({"x", "y"}, MonomialOrder::lex);
        return ring;
    }
};

inline void validate_danielewski(const DanielewskiSpec& spec) {
    if (spec.n < 1) throw InvalidSpec("danielewski requires n >= 1");
    const RingPtr& ring = spec.p.ring();
    std::size_t yi = ring->require_index("y");
    std::size_t xi = ring->require_index("x");
    for (std::size_t v = 0; v < ring->size(); ++v)
        if (v != xi && v != yi && spec.p.uses_variable(v))
            throw InvalidSpec("danielewski p must live in x and y");
    long deg_p = static_cast<long>(spec.p.degree_in(yi));
    Polynomial p0 = spec.p.substitute(
        std::map<std::size_t, Polynomial>{{xi, Polynomial::zero(ring)}});
    long deg_p0 = static_cast<long>(p0.degree_in(yi));
    if (deg_p < 1 || deg_p != deg_p0) throw NotInS(deg_p, deg_p0);
}

inline AlgebraPtr danielewski(const DanielewskiSpec& spec) {
    validate_danielewski(spec);
    RingPtr ring = make_ring({"x", "y", "z"}, MonomialOrder::lex);
    Polynomial x = Polynomial::variable(ring, "x");
    Polynomial z = Polynomial::variable(ring, "z");
    Polynomial relation = x.pow(spec.n) * z - transported(spec.p, ring);
    return Algebra::present(ring, {relation},
                            "danielewski(n=" + std::to_string(spec.n) + ")");
}

// One elimination step z |-> z - shift per deleted monomial x^s y^t (s >= n);
// replaying z |-> z + shift on the pre-step relation yields the post-step one.
struct DanielewskiNormalizeStep {
    Polynomial shift;  // c * x^(s-n) * y^t over ring(x, y)
};

struct DanielewskiNormalizeResult {
    DanielewskiSpec normalized;
    std::vector<DanielewskiNormalizeStep> record;
};

inline DanielewskiNormalizeResult danielewski_normalize(const DanielewskiSpec& spec) {
    validate_danielewski(spec);
    const RingPtr& ring = spec.p.ring();
    std::size_t xi = ring->require_index("x");
    DanielewskiNormalizeResult out{{spec.n, spec.p}, {}};
    // Terms are scanned in canonical (descending) order, one step per
    // monomial with x-exponent >= n.
    for (const auto& t : spec.p.terms()) {
        if (t.mono.exp(xi) < static_cast<std::int64_t>(spec.n)) continue;
        Monomial reduced = t.mono;
        reduced.set(xi, t.mono.exp(xi) - static_cast<std::int64_t>(spec.n));
        Polynomial shift = Polynomial::from_term(ring, std::move(reduced), t.coeff);
        Polynomial removed = Polynomial::from_term(ring, t.mono, t.coeff);
        out.normalized.p = out.normalized.p - removed;
        out.record.push_back({std::move(shift)});
    }
    validate_danielewski(out.normalized);
    return out;
}

// The standard pair of locally nilpotent derivations on k[x,y,z]/(xz - p(y)):
// D1 = (0, x, p'(y)) and D2 = (p'(y), z, 0). Requires n = 1 and univariate p,
// which any n = 1 spec reaches after normalization.
inline std::pair<Derivation, Derivation> danielewski_std_lnds(const DanielewskiSpec& spec) {
    if (spec.n != 1) throw InvalidSpec("standard derivation pair requires n = 1");
    const RingPtr& pring = spec.p.ring();
    if (spec.p.uses_variable(pring->require_index("x")))
        throw NotUnivariate("p must be univariate in y (normalize first)");
    AlgebraPtr A = danielewski(spec);
    const RingPtr& ring = A->ring();
    Polynomial dp = transported(spec.p, ring).derivative("y");
    Polynomial zero = Polynomial::zero(ring);
    Derivation d1 = define_derivation(
        A, {{"x", zero}, {"y", Polynomial::variable(ring, "x")}, {"z", dp}}, "D1");
    Derivation d2 = define_derivation(
        A, {{"x", dp}, {"y", Polynomial::variable(ring, "z")}, {"z", zero}}, "D2");
    unsigned bound = 2 * static_cast<unsigned>(spec.p.degree_in(pring->require_index("y"))) + 2;
    if (!certify_lnd(d1, bound)) throw UncertifiedDerivation("D1");
    if (!certify_lnd(d2, bound)) throw UncertifiedDerivation("D2");
    return {std::move(d1), std::move(d2)};
}

// ---------------------------------------------------------------------------
// Koras-Russell threefolds k[x,y,z,w]/(x + x^d y + z^u + w^v).
// ---------------------------------------------------------------------------

struct KorasRussellSpec {
    unsigned d, u, v;  // all >= 2, gcd(u, v) = 1
};

struct KorasRussell {
    AlgebraPtr algebra;
    Grading grading;    // over the Laurent ring k[x, x^-1, z, w, t]
    Polynomial y_lift;  // -x^-d (x + z^u + w^v), the image of y in that ring
};

inline KorasRussell koras_russell(const KorasRussellSpec& spec) {
    if (spec.d < 2 || spec.u < 2 || spec.v < 2)
        throw ExponentTooSmall("koras-russell requires d, u, v >= 2");
    if (std::gcd(spec.u, spec.v) != 1) throw GcdViolation(spec.u, spec.v);

    RingPtr ring = make_ring({"x", "y", "z", "w"}, MonomialOrder::lex);
    Polynomial x = Polynomial::variable(ring, "x");
    Polynomial relation = x + x.pow(spec.d) * Polynomial::variable(ring, "y") +
                          Polynomial::variable(ring, "z").pow(spec.u) +
                          Polynomial::variable(ring, "w").pow(spec.v);
    AlgebraPtr algebra = Algebra::present(
        ring, {relation},
        "kr(" + std::to_string(spec.d) + "," + std::to_string(spec.u) + "," +
            std::to_string(spec.v) + ")");

    RingPtr laurent = make_ring({"x", "z", "w", "t"}, MonomialOrder::lex, {"x"});
    Grading grading(laurent, 3,
                    {{-1, 0, 0},
                     {0, -static_cast<long long>(spec.v), 0},
                     {0, -static_cast<long long>(spec.u), 0},
                     {0, 0, -1}});
    Monomial xinv(laurent->size());
    xinv.set(laurent->require_index("x"), -static_cast<std::int64_t>(spec.d));
    Polynomial y_lift =
        Polynomial::from_term(laurent, std::move(xinv), -1) *
        (Polynomial::variable(laurent, "x") + Polynomial::variable(laurent, "z").pow(spec.u) +
         Polynomial::variable(laurent, "w").pow(spec.v));
    return {std::move(algebra), std::move(grading), std::move(y_lift)};
}

// ---------------------------------------------------------------------------
// Finston-Maubach domains: quotient by
//   F = sum x_i^{d_i} + sum (x_j y_1 - x_1 y_j)^{e_j}
// under the exact reciprocal constraint sum 1/d_i + sum 1/e_j <= 1/(2n-3).
// ---------------------------------------------------------------------------

struct FinstonMaubachSpec {
    unsigned n;                   // >= 3
    std::vector<unsigned> d;      // d_1 .. d_n
    std::vector<unsigned> e;      // e_2 .. e_n
};

struct FinstonMaubach {
    AlgebraPtr algebra;
    Derivation d0;  // x_i -> 0, y_i -> x_i
};

inline FinstonMaubach finston_maubach(const FinstonMaubachSpec& spec) {
    if (spec.n < 3) throw InvalidSpec("finston-maubach requires n >= 3");
    if (spec.d.size() != spec.n || spec.e.size() != spec.n - 1)
        throw InvalidSpec("finston-maubach needs n exponents d and n-1 exponents e");
    Rational sum(0);
    for (unsigned di : spec.d) {
        if (di == 0) throw InvalidSpec("exponents must be positive");
        sum += Rational(1, static_cast<long>(di));
    }
    for (unsigned ej : spec.e) {
        if (ej == 0) throw InvalidSpec("exponents must be positive");
        sum += Rational(1, static_cast<long>(ej));
    }
    Rational bound(1, 2 * static_cast<long>(spec.n) - 3);
    if (sum > bound) throw ConstraintViolation(sum.to_string(), bound.to_string());

    std::vector<std::string> names;
    for (unsigned i = 1; i <= spec.n; ++i) names.push_back("x" + std::to_string(i));
    for (unsigned i = 1; i <= spec.n; ++i) names.push_back("y" + std::to_string(i));
    RingPtr ring = make_ring(std::move(names), MonomialOrder::lex);

    auto xv = [&](unsigned i) { return Polynomial::variable(ring, "x" + std::to_string(i)); };
    auto yv = [&](unsigned i) { return Polynomial::variable(ring, "y" + std::to_string(i)); };

    Polynomial F = Polynomial::zero(ring);
    for (unsigned i = 1; i <= spec.n; ++i) F = F + xv(i).pow(spec.d[i - 1]);
    for (unsigned j = 2; j <= spec.n; ++j) {
        Polynomial lj = xv(j) * yv(1) - xv(1) * yv(j);
        F = F + lj.pow(spec.e[j - 2]);
    }
    AlgebraPtr algebra = Algebra::present(ring, {F}, "fm(n=" + std::to_string(spec.n) + ")");

    std::map<std::string, Polynomial> images;
    for (unsigned i = 1; i <= spec.n; ++i)
        images.emplace("y" + std::to_string(i), xv(i));
    Derivation d0 = define_derivation(algebra, images, "D0");
    if (!certify_lnd(d0, 4)) throw UncertifiedDerivation("D0");
    return {std::move(algebra), std::move(d0)};
}

// ---------------------------------------------------------------------------
// Quadric hypersurfaces x_1^2 + ... + x_n^2 = 1 and the SL2 quadric
// xz - yw = 1.
// ---------------------------------------------------------------------------

inline AlgebraPtr quadric(unsigned n) {
    if (n < 2) throw InvalidSpec("quadric requires n >= 2");
    RingPtr ring;
    if (n == 2) {
        ring = make_ring({"x", "y"}, MonomialOrder::lex);
    } else {
        std::vector<std::string> names;
        for (unsigned i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
        ring = make_ring(std::move(names), MonomialOrder::lex);
    }
    Polynomial rel = Polynomial::constant(ring, -1);
    for (std::size_t v = 0; v < ring->size(); ++v)
        rel = rel + Polynomial::variable(ring, v).pow(2);
    return Algebra::present(ring, {rel}, "quadric(" + std::to_string(n) + ")");
}

struct Sl2Quadric {
    AlgebraPtr algebra;
    // Tables D1..D4 do not stabilize the relation ideal; they are kept for
    // the negative checks. C1..C4 are the validated corrected family.
    std::vector<std::pair<std::string, std::map<std::string, Polynomial>>> printed_tables;
    std::vector<Derivation> corrected;
};

inline Sl2Quadric sl2_quadric() {
    RingPtr ring = make_ring({"x", "y", "z", "w"}, MonomialOrder::lex);
    Polynomial relation = parse_poly("x*z - y*w - 1", ring);
    AlgebraPtr algebra = Algebra::present(ring, {relation}, "sl2");

    auto v = [&](const char* name) { return Polynomial::variable(ring, name); };
    Sl2Quadric out;
    out.algebra = algebra;
    out.printed_tables = {
        {"D1", {{"y", v("z")}, {"w", v("x")}}},
        {"D2", {{"y", v("w")}, {"z", v("x")}}},
        {"D3", {{"x", v("z")}, {"w", v("y")}}},
        {"D4", {{"x", v("w")}, {"z", v("y")}}},
    };
    out.corrected.push_back(define_derivation(algebra, {{"y", v("x")}, {"z", v("w")}}, "C1"));
    out.corrected.push_back(define_derivation(algebra, {{"x", v("y")}, {"w", v("z")}}, "C2"));
    out.corrected.push_back(define_derivation(algebra, {{"x", v("w")}, {"y", v("z")}}, "C3"));
    out.corrected.push_back(define_derivation(algebra, {{"z", v("y")}, {"w", v("x")}}, "C4"));
    return out;
}

// ---------------------------------------------------------------------------
// Extension A -> A[t]: the same relations over a ring with fresh variables.
// Derivation tables extend by t -> 0 simply by omitting the new generator.
// ---------------------------------------------------------------------------

inline AlgebraPtr adjoin_variables(const AlgebraPtr& algebra,
                                   const std::vector<std::string>& fresh) {
    std::vector<std::string> names = algebra->ring()->vars();
    for (const auto& f : fresh) names.push_back(f);
    RingPtr ring = make_ring(std::move(names), algebra->ring()->order());
    std::vector<Polynomial> relations;
    relations.reserve(algebra->relations().size());
    for (const auto& r : algebra->relations()) relations.push_back(transported(r, ring));
    std::string name = algebra->name();
    if (!name.empty()) {
        for (const auto& f : fresh) name += "[" + f + "]";
    }
    return Algebra::present(ring, std::move(relations), name);
}

// Same images over the extended algebra; fresh generators map to zero.
inline Derivation extend_by_zero(const Derivation& D, const AlgebraPtr& extended) {
    std::map<std::string, Polynomial> images;
    const RingPtr& src = D.algebra()->ring();
    for (std::size_t v = 0; v < src->size(); ++v)
        images.emplace(src->var_name(v), transported(D.image(v).rep(), extended->ring()));
    return define_derivation(extended, images, D.label());
}

// ---------------------------------------------------------------------------
// Name-based resolution: "danielewski(n=1,p=y^2+1)", "kr(2,2,3)",
// "fm(n=3,d=15,e=15)", "quadric(2)", "sl2".
// ---------------------------------------------------------------------------

struct ResolvedCatalog {
    AlgebraPtr algebra;
    // Raw generator-image tables by name; invalid ones stay representable so
    // the negative well-definedness checks can run.
    std::map<std::string, std::map<std::string, Polynomial>> tables;
    std::map<std::string, Grading> gradings;
    std::map<std::string, Polynomial> named_polys;
};

namespace detail {

struct CatalogArgs {
    std::vector<std::string> positional;
    std::map<std::string, std::string> named;
};

inline CatalogArgs parse_catalog_args(const std::string& inside) {
    CatalogArgs args;
    std::size_t start = 0;
    while (start <= inside.size()) {
        std::size_t comma = inside.find(',', start);
        std::string piece = inside.substr(
            start, comma == std::string::npos ? std::string::npos : comma - start);
        // trim
        while (!piece.empty() && std::isspace(static_cast<unsigned char>(piece.front())))
            piece.erase(piece.begin());
        while (!piece.empty() && std::isspace(static_cast<unsigned char>(piece.back())))
            piece.pop_back();
        if (!piece.empty()) {
            std::size_t eq = piece.find('=');
            if (eq == std::string::npos) {
                args.positional.push_back(piece);
            } else {
                std::string key = piece.substr(0, eq);
                while (!key.empty() && std::isspace(static_cast<unsigned char>(key.back())))
                    key.pop_back();
                args.named[key] = piece.substr(eq + 1);
            }
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return args;
}

inline unsigned parse_catalog_uint(const std::string& s, const std::string& what) {
    try {
        return static_cast<unsigned>(std::stoul(s));
    } catch (...) {
        throw InvalidSpec("expected a natural number for " + what + ", got '" + s + "'");
    }
}

// "15" replicates; "15:20:30" lists.
inline std::vector<unsigned> parse_uint_list(const std::string& s, std::size_t count,
                                             const std::string& what) {
    std::vector<unsigned> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t colon = s.find(':', start);
        out.push_back(parse_catalog_uint(
            s.substr(start, colon == std::string::npos ? std::string::npos : colon - start),
            what));
        if (colon == std::string::npos) break;
        start = colon + 1;
    }
    if (out.size() == 1) out.assign(count, out.front());
    if (out.size() != count)
        throw InvalidSpec(what + " needs 1 or " + std::to_string(count) + " values");
    return out;
}

}  // namespace detail

inline ResolvedCatalog resolve_catalog(const std::string& expr) {
    std::string name = expr;
    std::string inside;
    std::size_t open = expr.find('(');
    if (open != std::string::npos) {
        if (expr.back() != ')') throw InvalidSpec("unbalanced catalog expression '" + expr + "'");
        name = expr.substr(0, open);
        inside = expr.substr(open + 1, expr.size() - open - 2);
    }
    while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back())))
        name.pop_back();
    detail::CatalogArgs args = detail::parse_catalog_args(inside);

    ResolvedCatalog out;
    if (name == "danielewski") {
        auto n_it = args.named.find("n");
        auto p_it = args.named.find("p");
        if (n_it == args.named.end() || p_it == args.named.end())
            throw InvalidSpec("danielewski needs n=<nat> and p=<poly in x,y>");
        DanielewskiSpec spec{detail::parse_catalog_uint(n_it->second, "n"),
                             parse_poly(p_it->second, DanielewskiSpec::xy_ring())};
        out.algebra = danielewski(spec);
        if (spec.n == 1 && !spec.p.uses_variable(spec.p.ring()->require_index("x"))) {
            auto [d1, d2] = danielewski_std_lnds(spec);
            const RingPtr& ring = out.algebra->ring();
            out.tables["D1"] = {{"x", d1.image(0).rep()},
                                {"y", d1.image(1).rep()},
                                {"z", d1.image(2).rep()}};
            out.tables["D2"] = {{"x", d2.image(0).rep()},
                                {"y", d2.image(1).rep()},
                                {"z", d2.image(2).rep()}};
            (void)ring;
        }
    } else if (name == "kr") {
        if (args.positional.size() != 3)
            throw InvalidSpec("kr needs three naturals, e.g. kr(2,2,3)");
        KorasRussell kr = koras_russell({detail::parse_catalog_uint(args.positional[0], "d"),
                                         detail::parse_catalog_uint(args.positional[1], "u"),
                                         detail::parse_catalog_uint(args.positional[2], "v")});
        out.algebra = kr.algebra;
        out.gradings.emplace("G", kr.grading);
        out.named_polys.emplace("y_lift", kr.y_lift);
    } else if (name == "fm") {
        auto n_it = args.named.find("n");
        if (n_it == args.named.end()) throw InvalidSpec("fm needs n=<nat>");
        unsigned n = detail::parse_catalog_uint(n_it->second, "n");
        auto d_it = args.named.find("d");
        auto e_it = args.named.find("e");
        if (d_it == args.named.end() || e_it == args.named.end())
            throw InvalidSpec("fm needs d=<nat[:nat...]> and e=<nat[:nat...]>");
        FinstonMaubachSpec spec{n, detail::parse_uint_list(d_it->second, n, "d"),
                                detail::parse_uint_list(e_it->second, n - 1, "e")};
        FinstonMaubach fm = finston_maubach(spec);
        out.algebra = fm.algebra;
        const RingPtr& ring = out.algebra->ring();
        std::map<std::string, Polynomial> d0;
        for (std::size_t v = 0; v < ring->size(); ++v)
            d0.emplace(ring->var_name(v), fm.d0.image(v).rep());
        out.tables.emplace("D0", std::move(d0));
    } else if (name == "quadric") {
        if (args.positional.size() != 1) throw InvalidSpec("quadric needs one natural");
        out.algebra = quadric(detail::parse_catalog_uint(args.positional[0], "n"));
    } else if (name == "sl2") {
        Sl2Quadric sl2 = sl2_quadric();
        out.algebra = sl2.algebra;
        for (auto& [label, table] : sl2.printed_tables) out.tables.emplace(label, table);
        const RingPtr& ring = out.algebra->ring();
        for (const auto& d : sl2.corrected) {
            std::map<std::string, Polynomial> table;
            for (std::size_t v = 0; v < ring->size(); ++v)
                table.emplace(ring->var_name(v), d.image(v).rep());
            out.tables.emplace(d.label(), std::move(table));
        }
    } else {
        throw InvalidSpec("unknown catalog entry '" + name + "'");
    }
    return out;
}

}  // namespace lndlab
