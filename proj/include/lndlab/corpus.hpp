#pragma once

#include <chrono>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "lndlab/catalog.hpp"
#include "lndlab/invariant.hpp"
#include "lndlab/irreducible.hpp"

namespace lndlab {

// One check line: raw text for reporting, tokens (quote-aware) for dispatch,
// and the expected-outcome text after the `expect` keyword.
struct CorpusCheck {
    std::size_t line = 0;
    std::string raw;
    std::vector<std::string> tokens;
    std::string expected;
};

struct CorpusDoc {
    std::string path;
    std::string name;
    std::optional<std::string> catalog_expr;
    AlgebraPtr algebra;
    std::map<std::string, std::map<std::string, Polynomial>> tables;
    std::map<std::string, Grading> gradings;
    std::vector<std::string> notes;
    std::vector<CorpusCheck> checks;
};

struct CheckResult {
    std::size_t index = 0;
    std::size_t line = 0;
    std::string check;
    std::string expected;
    std::string actual;
    std::string status;  // pass | fail | error
};

struct CheckReport {
    std::string file;
    std::vector<CheckResult> results;
    std::size_t passed = 0, failed = 0, errored = 0;
    double wall_ms = 0;

    bool all_pass() const { return failed == 0 && errored == 0; }
};

namespace detail {

inline std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t pos = s.find(sep, start);
        out.push_back(trim(s.substr(
            start, pos == std::string::npos ? std::string::npos : pos - start)));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    while (!out.empty() && out.back().empty()) out.pop_back();
    return out;
}

// Splits a check line into tokens; a double-quoted span is one token with the
// quotes stripped.
inline std::vector<std::string> tokenize_check(const std::string& file, std::size_t line,
                                               const std::string& text) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        if (text[i] == '"') {
            std::size_t close = text.find('"', i + 1);
            if (close == std::string::npos)
                throw SchemaError(file, line, "unterminated quote");
            tokens.push_back(text.substr(i + 1, close - i - 1));
            i = close + 1;
            continue;
        }
        std::size_t j = i;
        while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])) &&
               text[j] != '"')
            ++j;
        tokens.push_back(text.substr(i, j - i));
        i = j;
    }
    return tokens;
}

// "x -> 0, y -> x" over the given ring; missing generators default to zero.
inline std::map<std::string, Polynomial> parse_table(const std::string& file, std::size_t line,
                                                     const std::string& text,
                                                     const RingPtr& ring) {
    std::map<std::string, Polynomial> images;
    for (const std::string& piece : split(text, ',')) {
        std::size_t arrow = piece.find("->");
        if (arrow == std::string::npos)
            throw SchemaError(file, line, "expected 'generator -> polynomial': " + piece);
        std::string var = trim(piece.substr(0, arrow));
        std::string poly = trim(piece.substr(arrow + 2));
        if (!ring->index_of(var)) throw SchemaError(file, line, "unknown generator " + var);
        try {
            images.emplace(var, parse_poly(poly, ring));
        } catch (const Error& e) {
            throw SchemaError(file, line, e.what());
        }
    }
    return images;
}

inline DegVec parse_degvec(const std::string& file, std::size_t line, const std::string& text) {
    std::string t = trim(text);
    if (t.size() < 2 || t.front() != '(' || t.back() != ')')
        throw SchemaError(file, line, "expected vector like (1,-2,0): " + text);
    DegVec v;
    for (const std::string& piece : split(t.substr(1, t.size() - 2), ',')) {
        try {
            v.push_back(std::stoll(piece));
        } catch (...) {
            throw SchemaError(file, line, "bad integer in vector: " + piece);
        }
    }
    return v;
}

inline std::vector<DegVec> parse_degvec_list(const std::string& file, std::size_t line,
                                             const std::string& text) {
    std::vector<DegVec> vs;
    for (const std::string& piece : split(text, ';')) vs.push_back(parse_degvec(file, line, piece));
    if (vs.empty()) throw SchemaError(file, line, "empty vector list");
    return vs;
}

// "x -> (1,0), y -> (0,1)" over the given ring; every generator required.
// Vectors contain commas, so pairs are found by scanning for arrows.
inline Grading parse_grading_table(const std::string& file, std::size_t line,
                                   const std::string& body, const RingPtr& ring) {
    std::vector<DegVec> degrees(ring->size());
    std::vector<bool> seen(ring->size(), false);
    std::size_t i = 0;
    while (i < body.size()) {
        std::size_t arrow = body.find("->", i);
        if (arrow == std::string::npos) break;
        std::string var = trim(body.substr(i, arrow - i));
        if (!var.empty() && var.front() == ',') var = trim(var.substr(1));
        std::size_t open = body.find('(', arrow);
        std::size_t close = body.find(')', arrow);
        if (open == std::string::npos || close == std::string::npos)
            throw SchemaError(file, line, "grading vector needs parentheses");
        auto idx = ring->index_of(var);
        if (!idx) throw SchemaError(file, line, "unknown generator " + var);
        degrees[*idx] = parse_degvec(file, line, body.substr(open, close - open + 1));
        seen[*idx] = true;
        i = close + 1;
    }
    for (std::size_t v = 0; v < ring->size(); ++v)
        if (!seen[v]) throw SchemaError(file, line, "grading misses generator " + ring->var_name(v));
    std::size_t dim = degrees.empty() ? 0 : degrees[0].size();
    try {
        return Grading(ring, dim, degrees);
    } catch (const Error& e) {
        throw SchemaError(file, line, e.what());
    }
}

}  // namespace detail

inline CorpusDoc parse_corpus(std::istream& in, const std::string& path) {
    CorpusDoc doc;
    doc.path = path;
    std::string line;
    std::size_t line_no = 0;

    auto require_algebra = [&](std::size_t at) -> const AlgebraPtr& {
        if (!doc.algebra)
            throw SchemaError(path, at, "declare 'catalog:' or 'vars:' before this line");
        return doc.algebra;
    };

    // Deferred explicit presentation.
    std::vector<std::string> vars;
    MonomialOrder order = MonomialOrder::grevlex;
    std::vector<std::string> relation_texts;
    bool have_vars = false;

    auto materialize = [&](std::size_t at) {
        if (doc.algebra || !have_vars) return;
        try {
            RingPtr ring = make_ring(vars, order);
            std::vector<Polynomial> relations;
            for (const auto& text : relation_texts)
                relations.push_back(parse_poly(text, ring));
            doc.algebra = Algebra::present(ring, std::move(relations),
                                           doc.name.empty() ? path : doc.name);
        } catch (const Error& e) {
            throw SchemaError(path, at, e.what());
        }
    };

    while (std::getline(in, line)) {
        ++line_no;
        std::string text = detail::trim(line);
        if (text.empty() || text[0] == '#') continue;

        if (text.rfind("check ", 0) == 0) {
            materialize(line_no);
            require_algebra(line_no);
            std::string body = text.substr(6);
            std::size_t exp = body.rfind(" expect ");
            if (exp == std::string::npos)
                throw SchemaError(path, line_no, "check line without 'expect'");
            CorpusCheck check;
            check.line = line_no;
            check.raw = detail::trim(body.substr(0, exp));
            check.tokens = detail::tokenize_check(path, line_no, check.raw);
            check.expected = detail::trim(body.substr(exp + 8));
            if (check.tokens.empty()) throw SchemaError(path, line_no, "empty check");
            doc.checks.push_back(std::move(check));
            continue;
        }
        if (text.rfind("derivation ", 0) == 0) {
            materialize(line_no);
            std::size_t colon = text.find(':');
            if (colon == std::string::npos)
                throw SchemaError(path, line_no, "derivation line without ':'");
            std::string dname = detail::trim(text.substr(11, colon - 11));
            doc.tables[dname] = detail::parse_table(path, line_no, text.substr(colon + 1),
                                                    require_algebra(line_no)->ring());
            continue;
        }
        if (text.rfind("grading ", 0) == 0) {
            materialize(line_no);
            std::size_t colon = text.find(':');
            if (colon == std::string::npos)
                throw SchemaError(path, line_no, "grading line without ':'");
            std::string gname = detail::trim(text.substr(8, colon - 8));
            std::string body = detail::trim(text.substr(colon + 1));
            if (body.rfind("kr(", 0) == 0) {
                ResolvedCatalog kr = resolve_catalog(body);
                doc.gradings.insert_or_assign(gname, kr.gradings.at("G"));
                continue;
            }
            doc.gradings.insert_or_assign(
                gname, detail::parse_grading_table(path, line_no, body,
                                                   require_algebra(line_no)->ring()));
            continue;
        }

        std::size_t colon = text.find(':');
        if (colon == std::string::npos)
            throw SchemaError(path, line_no, "expected 'key: value'");
        std::string key = detail::trim(text.substr(0, colon));
        std::string value = detail::trim(text.substr(colon + 1));

        if (key == "name") {
            doc.name = value;
        } else if (key == "note") {
            doc.notes.push_back(value);
        } else if (key == "catalog") {
            if (doc.algebra) throw SchemaError(path, line_no, "algebra already declared");
            try {
                ResolvedCatalog cat = resolve_catalog(value);
                doc.algebra = cat.algebra;
                doc.tables = std::move(cat.tables);
                doc.gradings = std::move(cat.gradings);
                doc.catalog_expr = value;
            } catch (const Error& e) {
                throw SchemaError(path, line_no, e.what());
            }
        } else if (key == "vars") {
            if (doc.algebra || have_vars)
                throw SchemaError(path, line_no, "algebra already declared");
            vars = detail::split(value, ',');
            have_vars = true;
        } else if (key == "order") {
            if (value == "lex")
                order = MonomialOrder::lex;
            else if (value == "grevlex")
                order = MonomialOrder::grevlex;
            else
                throw SchemaError(path, line_no, "order must be lex or grevlex");
        } else if (key == "relations") {
            relation_texts = detail::split(value, ';');
        } else if (key == "adjoin") {
            materialize(line_no);
            require_algebra(line_no);
            try {
                doc.algebra = adjoin_variables(doc.algebra, detail::split(value, ','));
                for (auto& [dname, table] : doc.tables)
                    for (auto& [var, poly] : table)
                        poly = transported(poly, doc.algebra->ring());
            } catch (const Error& e) {
                throw SchemaError(path, line_no, e.what());
            }
        } else {
            throw SchemaError(path, line_no, "unknown directive '" + key + "'");
        }
    }
    materialize(line_no + 1);
    if (!doc.algebra) throw SchemaError(path, line_no, "file declares no algebra");
    return doc;
}

inline CorpusDoc parse_corpus_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError(path, 0, "cannot open file");
    return parse_corpus(in, path);
}

// ---------------------------------------------------------------------------
// Check execution
// ---------------------------------------------------------------------------

namespace detail {

struct CheckContext {
    const CorpusDoc& doc;

    Derivation resolve_derivation(const std::string& name) const {
        auto it = doc.tables.find(name);
        if (it == doc.tables.end()) throw InvalidSpec("unknown derivation '" + name + "'");
        return define_derivation(doc.algebra, it->second, name);
    }

    std::vector<Derivation> resolve_derivations(const std::string& list) const {
        std::vector<Derivation> out;
        for (const std::string& name : split(list, ',')) out.push_back(resolve_derivation(name));
        return out;
    }

    const Grading& resolve_grading(const std::string& name) const {
        auto it = doc.gradings.find(name);
        if (it == doc.gradings.end()) throw InvalidSpec("unknown grading '" + name + "'");
        return it->second;
    }

    Polynomial poly_in_algebra(const std::string& text) const {
        return parse_poly(text, doc.algebra->ring());
    }
};

inline std::string basis_string(const KernelSlice& slice) {
    std::string out;
    for (std::size_t i = 0; i < slice.basis.size(); ++i) {
        if (i) out += "; ";
        out += slice.basis[i].to_string();
    }
    return out;
}

inline std::string quoted_equals(const std::string& s) { return "equals:\"" + s + "\""; }

// Keyword arguments of the form `<key> <value>` anywhere in the token list.
inline std::optional<std::string> keyword_arg(const std::vector<std::string>& tokens,
                                              const std::string& key) {
    for (std::size_t i = 0; i + 1 < tokens.size(); ++i)
        if (tokens[i] == key) return tokens[i + 1];
    return std::nullopt;
}

inline unsigned uint_arg(const std::vector<std::string>& tokens, const std::string& key,
                         unsigned fallback) {
    auto v = keyword_arg(tokens, key);
    if (!v) return fallback;
    return static_cast<unsigned>(std::stoul(*v));
}

inline SearchGrid search_grid_from_tokens(const std::vector<std::string>& tokens) {
    SearchGrid grid;
    grid.image_degree = uint_arg(tokens, "image-degree", grid.image_degree);
    grid.bound = uint_arg(tokens, "bound", grid.bound);
    if (auto range = keyword_arg(tokens, "coeffs")) {
        std::size_t dots = range->find("..");
        if (dots == std::string::npos)
            throw InvalidSpec("coeffs expects a range like -2..2");
        long lo = std::stol(range->substr(0, dots));
        long hi = std::stol(range->substr(dots + 2));
        grid.coeffs.clear();
        for (long c = lo; c <= hi; ++c) grid.coeffs.push_back(Rational(c));
    }
    return grid;
}

// Executes one check; returns the rendered actual outcome.
inline std::string execute_check(const CheckContext& ctx, const CorpusCheck& check) {
    const std::vector<std::string>& t = check.tokens;
    const std::string& kind = t[0];
    const CorpusDoc& doc = ctx.doc;

    if (kind == "lnd") {
        unsigned bound = uint_arg(t, "bound", 64);
        try {
            Derivation d = ctx.resolve_derivation(t.at(1));
            return certify_lnd(d, bound) ? "certified" : "indeterminate";
        } catch (const WellDefinednessError&) {
            return "well-definedness-error";
        }
    }
    if (kind == "apply") {
        Derivation d = ctx.resolve_derivation(t.at(1));
        Element a = elem(doc.algebra, ctx.poly_in_algebra(t.at(2)));
        return quoted_equals(d.apply(a).to_string());
    }
    if (kind == "deg") {
        Derivation d = ctx.resolve_derivation(t.at(1));
        Element a = elem(doc.algebra, ctx.poly_in_algebra(t.at(2)));
        DegResult r = deg_d(d, a, uint_arg(t, "bound", 64));
        if (r.kind == DegResult::Kind::finite) return "nat:" + std::to_string(r.value);
        return r.to_string();
    }
    if (kind == "in-kernel") {
        Derivation d = ctx.resolve_derivation(t.at(1));
        Element a = elem(doc.algebra, ctx.poly_in_algebra(t.at(2)));
        return in_kernel(d, a) ? "true" : "false";
    }
    if (kind == "nf")
        return quoted_equals(doc.algebra->reduce(ctx.poly_in_algebra(t.at(1))).to_string());
    if (kind == "in-ideal")
        return in_ideal(ctx.poly_in_algebra(t.at(1)), doc.algebra->gb()) ? "true" : "false";
    if (kind == "kernel" || kind == "kernel-dim") {
        Derivation d = ctx.resolve_derivation(t.at(1));
        KernelSlice slice = kernel_basis_bounded(d, uint_arg(t, "degree", 0));
        if (kind == "kernel-dim") return "nat:" + std::to_string(slice.basis.size());
        return "basis:\"" + basis_string(slice) + "\"";
    }
    if (kind == "ml" || kind == "ml-dim" || kind == "ml-contains") {
        std::vector<Derivation> ds = ctx.resolve_derivations(t.at(1));
        KernelSlice slice = ml_bounded(ds, uint_arg(t, "degree", 0));
        if (kind == "ml") return "basis:\"" + basis_string(slice) + "\"";
        if (kind == "ml-dim") return "nat:" + std::to_string(slice.basis.size());
        // span membership of the quoted polynomial's class
        Element target = elem(doc.algebra, ctx.poly_in_algebra(t.back()));
        std::vector<Element> domain = std_monomials(doc.algebra, uint_arg(t, "degree", 0));
        std::map<Monomial, std::size_t, MonomialDescending> index{
            MonomialDescending{doc.algebra->ring()->order()}};
        for (std::size_t i = 0; i < domain.size(); ++i)
            index.emplace(domain[i].rep().leading_monomial(), i);
        auto coords = [&](const Element& e) {
            QVector v(domain.size(), Rational(0));
            for (const auto& term : e.rep().terms()) {
                auto it = index.find(term.mono);
                if (it == index.end()) throw InvalidSpec("element outside the slice");
                v[it->second] = term.coeff;
            }
            return v;
        };
        std::vector<QVector> basis;
        for (const auto& b : slice.basis) basis.push_back(coords(b));
        return solve_in_span(basis, coords(target)) ? "true" : "false";
    }
    if (kind == "irreducible") {
        IrreducibilityVerdict v = irreducible_q(ctx.poly_in_algebra(t.at(1)));
        if (v.is_indeterminate()) return "indeterminate";
        return quoted_equals(v.to_string());
    }
    if (kind == "ext-gcd") {
        ExtendedGcd g = univariate_ext_gcd(ctx.poly_in_algebra(t.at(1)),
                                           ctx.poly_in_algebra(t.at(2)));
        return quoted_equals(g.g.to_string());
    }
    if (kind == "grade-deg" || kind == "grade-top" || kind == "grade-homogeneous") {
        const Grading& gr = ctx.resolve_grading(t.at(1));
        Polynomial f = parse_poly(t.at(2), gr.ring());
        if (kind == "grade-top") return quoted_equals(top_summand(f, gr).to_string());
        if (kind == "grade-homogeneous") return is_homogeneous(f, gr) ? "true" : "false";
        auto d = deg_g(f, gr);
        return d ? quoted_equals(degvec_string(*d)) : "neg-infinity";
    }
    if (kind == "grade-deg-derivation" || kind == "grade-induced") {
        Derivation d = ctx.resolve_derivation(t.at(1));
        const Grading& gr = ctx.resolve_grading(t.at(2));
        if (kind == "grade-deg-derivation")
            return quoted_equals(degvec_string(deg_g_derivation(d, gr)));
        return quoted_equals(induced_derivation(d, gr).table_string());
    }
    if (kind == "lattice-span") {
        Lattice l = lattice_span(parse_degvec_list(doc.path, check.line, t.at(1)));
        return quoted_equals(l.to_string());
    }
    if (kind == "lattice-proper") {
        std::vector<DegVec> sub_vectors = parse_degvec_list(doc.path, check.line, t.at(1));
        Lattice sub = lattice_span(sub_vectors);
        Lattice amb = [&] {
            const std::string& spec = t.at(3);
            if (spec.size() > 1 && spec[0] == 'Z')
                return Lattice::standard(std::stoul(spec.substr(1)));
            return lattice_span(parse_degvec_list(doc.path, check.line, spec));
        }();
        return lattice_proper_in(sub, amb) ? "true" : "false";
    }
    if (kind == "normalize") {
        if (!doc.catalog_expr || doc.catalog_expr->rfind("danielewski", 0) != 0)
            throw InvalidSpec("normalize applies to danielewski catalog files");
        std::size_t open = doc.catalog_expr->find('(');
        auto args = parse_catalog_args(
            doc.catalog_expr->substr(open + 1, doc.catalog_expr->size() - open - 2));
        DanielewskiSpec spec{parse_catalog_uint(args.named.at("n"), "n"),
                             parse_poly(args.named.at("p"), DanielewskiSpec::xy_ring())};
        DanielewskiNormalizeResult r = danielewski_normalize(spec);
        std::string steps;
        for (std::size_t i = 0; i < r.record.size(); ++i) {
            if (i) steps += "; ";
            steps += "z -> z - " + r.record[i].shift.to_string();
        }
        if (steps.empty()) steps = "identity";
        return quoted_equals(r.normalized.p.to_string() + " | " + steps);
    }
    if (kind == "search" || kind == "search-kills") {
        SearchGrid grid = search_grid_from_tokens(t);
        std::vector<Derivation> hits = lnd_search(doc.algebra, grid);
        if (kind == "search") return "nat:" + std::to_string(hits.size());
        Element target = elem(doc.algebra, ctx.poly_in_algebra(t.at(1)));
        for (const auto& d : hits)
            if (!in_kernel(d, target)) return "false";
        return "true";
    }
    throw InvalidSpec("unknown check kind '" + kind + "'");
}

}  // namespace detail

inline CheckReport run_corpus(const CorpusDoc& doc) {
    auto start = std::chrono::steady_clock::now();
    CheckReport report;
    report.file = doc.name.empty() ? doc.path : doc.name;
    detail::CheckContext ctx{doc};
    for (std::size_t i = 0; i < doc.checks.size(); ++i) {
        const CorpusCheck& check = doc.checks[i];
        CheckResult result;
        result.index = i + 1;
        result.line = check.line;
        result.check = check.raw;
        result.expected = check.expected;
        try {
            result.actual = detail::execute_check(ctx, check);
            result.status = result.actual == check.expected ? "pass" : "fail";
        } catch (const std::exception& e) {
            result.actual = std::string("error: ") + e.what();
            result.status = "error";
        }
        if (result.status == "pass")
            ++report.passed;
        else if (result.status == "fail")
            ++report.failed;
        else
            ++report.errored;
        report.results.push_back(std::move(result));
    }
    report.wall_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return report;
}

// JSON omits wall time so that reruns are byte-identical.
inline nlohmann::ordered_json report_json(const CheckReport& report) {
    nlohmann::ordered_json j;
    j["file"] = report.file;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& r : report.results) {
        nlohmann::ordered_json c;
        c["index"] = r.index;
        c["line"] = r.line;
        c["check"] = r.check;
        c["expected"] = r.expected;
        c["actual"] = r.actual;
        c["status"] = r.status;
        j["checks"].push_back(std::move(c));
    }
    j["summary"] = {{"total", report.results.size()},
                    {"pass", report.passed},
                    {"fail", report.failed},
                    {"error", report.errored}};
    return j;
}

inline std::string report_text(const CheckReport& report) {
    std::ostringstream out;
    out << "== " << report.file << " ==\n";
    for (const auto& r : report.results) {
        out << "[" << r.status << "] line " << r.line << ": " << r.check;
        if (r.status != "pass")
            out << "\n        expected " << r.expected << "\n        actual   " << r.actual;
        out << "\n";
    }
    out << report.results.size() << " checks: " << report.passed << " passed, "
        << report.failed << " failed, " << report.errored << " errors ("
        << static_cast<long>(report.wall_ms) << " ms)\n";
    return out.str();
}

}  // namespace lndlab
