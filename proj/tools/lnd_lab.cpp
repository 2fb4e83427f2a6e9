// Command-line front end: ad-hoc exact computations (Groebner bases, normal
// forms, derivations, bounded kernels, gradings, lattices) and the corpus
// runner. All numeric output is exact; --json emits one machine-readable
// document on stdout.

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "lndlab/corpus.hpp"

namespace {

using namespace lndlab;
using nlohmann::ordered_json;

struct CommonArgs {
    std::string vars;
    std::string order = "grevlex";
    std::string ideal;
    std::string catalog;
    std::string derivation;
    std::string grading;
    std::string elem;
    std::string poly;
    unsigned bound = 64;
    unsigned degree = 0;
    bool json = false;
};

// Algebra plus the named tables/gradings that came with it.
struct Env {
    AlgebraPtr algebra;
    std::map<std::string, std::map<std::string, Polynomial>> tables;
    std::map<std::string, Grading> gradings;
};

Env build_env(const CommonArgs& args) {
    Env env;
    if (!args.catalog.empty()) {
        ResolvedCatalog cat = resolve_catalog(args.catalog);
        env.algebra = cat.algebra;
        env.tables = std::move(cat.tables);
        env.gradings = std::move(cat.gradings);
        return env;
    }
    if (args.vars.empty())
        throw InvalidSpec("give either --catalog or --vars (with optional --ideal)");
    MonomialOrder order;
    if (args.order == "lex")
        order = MonomialOrder::lex;
    else if (args.order == "grevlex")
        order = MonomialOrder::grevlex;
    else
        throw InvalidSpec("--order must be lex or grevlex");
    RingPtr ring = make_ring(detail::split(args.vars, ','), order);
    std::vector<Polynomial> relations;
    for (const std::string& text : detail::split(args.ideal, ';'))
        relations.push_back(parse_poly(text, ring));
    env.algebra = Algebra::present(ring, std::move(relations));
    return env;
}

Derivation resolve_derivation(const Env& env, const std::string& spec) {
    auto it = env.tables.find(spec);
    if (it != env.tables.end()) return define_derivation(env.algebra, it->second, spec);
    if (spec.find("->") == std::string::npos)
        throw InvalidSpec("unknown derivation '" + spec + "'");
    return define_derivation(
        env.algebra, detail::parse_table("<cli>", 0, spec, env.algebra->ring()), "cli");
}

std::vector<Derivation> resolve_derivations(const Env& env, const std::string& list) {
    std::vector<Derivation> out;
    for (const std::string& name : detail::split(list, ','))
        out.push_back(resolve_derivation(env, name));
    if (out.empty()) throw InvalidSpec("--derivation is required");
    return out;
}

Grading resolve_grading(const Env& env, const std::string& spec) {
    auto it = env.gradings.find(spec);
    if (it != env.gradings.end()) return it->second;
    if (spec.rfind("kr(", 0) == 0) return resolve_catalog(spec).gradings.at("G");
    if (spec.find("->") != std::string::npos)
        return detail::parse_grading_table("<cli>", 0, spec, env.algebra->ring());
    throw InvalidSpec("unknown grading '" + spec + "'");
}

void emit(const CommonArgs& args, const ordered_json& doc, const std::string& text) {
    if (args.json)
        std::cout << doc.dump(2) << "\n";
    else
        std::cout << text << "\n";
}

int cmd_gb(const CommonArgs& args) {
    Env env = build_env(args);
    ordered_json j;
    j["command"] = "gb";
    j["basis"] = ordered_json::array();
    std::string text;
    for (const auto& g : env.algebra->gb().gens) {
        j["basis"].push_back(g.to_string());
        if (!text.empty()) text += "\n";
        text += g.to_string();
    }
    if (env.algebra->gb().gens.empty()) text = "(zero ideal)";
    emit(args, j, text);
    return 0;
}

int cmd_nf(const CommonArgs& args) {
    Env env = build_env(args);
    Polynomial f = parse_poly(args.poly, env.algebra->ring());
    std::string nf = env.algebra->reduce(f).to_string();
    emit(args, {{"command", "nf"}, {"result", nf}}, nf);
    return 0;
}

int cmd_derive_check(const CommonArgs& args) {
    Env env = build_env(args);
    ordered_json j;
    j["command"] = "derive-check";
    try {
        Derivation d = resolve_derivation(env, args.derivation);
        j["result"] = "ok";
        j["table"] = d.table_string();
        emit(args, j, "ok: " + d.table_string());
    } catch (const WellDefinednessError& e) {
        j["result"] = "well-definedness-error";
        j["relation"] = e.relation;
        j["residue"] = e.residue;
        emit(args, j,
             "well-definedness-error: relation " + e.relation + " has residue " + e.residue);
    }
    return 0;
}

int cmd_derive_apply(const CommonArgs& args) {
    Env env = build_env(args);
    Derivation d = resolve_derivation(env, args.derivation);
    Element a = elem(env.algebra, parse_poly(args.elem, env.algebra->ring()));
    std::string result = d.apply(a).to_string();
    emit(args, {{"command", "derive-apply"}, {"result", result}}, result);
    return 0;
}

int cmd_derive_deg(const CommonArgs& args) {
    Env env = build_env(args);
    Derivation d = resolve_derivation(env, args.derivation);
    Element a = elem(env.algebra, parse_poly(args.elem, env.algebra->ring()));
    DegResult r = deg_d(d, a, args.bound);
    emit(args, {{"command", "derive-deg"}, {"result", r.to_string()}}, r.to_string());
    return 0;
}

int cmd_derive_lnd(const CommonArgs& args) {
    Env env = build_env(args);
    ordered_json j;
    j["command"] = "derive-lnd";
    try {
        Derivation d = resolve_derivation(env, args.derivation);
        auto cert = certify_lnd(d, args.bound);
        if (!cert) {
            j["result"] = "indeterminate";
            emit(args, j, "indeterminate (bound " + std::to_string(args.bound) + ")");
            return 0;
        }
        j["result"] = "certified";
        j["chains"] = ordered_json::object();
        std::string text = "certified";
        for (const auto& [var, chain] : cert->chains) {
            ordered_json arr = ordered_json::array();
            std::string line;
            for (const auto& e : chain) {
                arr.push_back(e.to_string());
                if (!line.empty()) line += " -> ";
                line += e.to_string();
            }
            j["chains"][var] = std::move(arr);
            text += "\n  " + var + ": " + line;
        }
        emit(args, j, text);
    } catch (const WellDefinednessError& e) {
        j["result"] = "well-definedness-error";
        j["relation"] = e.relation;
        j["residue"] = e.residue;
        emit(args, j,
             "well-definedness-error: relation " + e.relation + " has residue " + e.residue);
    }
    return 0;
}

ordered_json slice_json(const char* command, const KernelSlice& slice) {
    ordered_json j;
    j["command"] = command;
    j["degree"] = slice.N;
    j["basis"] = ordered_json::array();
    for (const auto& b : slice.basis) j["basis"].push_back(b.to_string());
    return j;
}

std::string slice_text(const KernelSlice& slice) {
    std::string text;
    for (const auto& b : slice.basis) {
        if (!text.empty()) text += "\n";
        text += b.to_string();
    }
    return text.empty() ? "(empty)" : text;
}

int cmd_kernel(const CommonArgs& args) {
    Env env = build_env(args);
    Derivation d = resolve_derivation(env, args.derivation);
    KernelSlice slice = kernel_basis_bounded(d, args.degree);
    emit(args, slice_json("kernel", slice), slice_text(slice));
    return 0;
}

int cmd_ml(const CommonArgs& args) {
    Env env = build_env(args);
    KernelSlice slice = ml_bounded(resolve_derivations(env, args.derivation), args.degree);
    emit(args, slice_json("ml", slice), slice_text(slice));
    return 0;
}

int cmd_grade_deg(const CommonArgs& args) {
    Env env = build_env(args);
    Grading gr = resolve_grading(env, args.grading);
    Polynomial f = parse_poly(args.poly, gr.ring());
    auto d = deg_g(f, gr);
    std::string result = d ? degvec_string(*d) : "neg-infinity";
    emit(args, {{"command", "grade-deg"}, {"result", result}}, result);
    return 0;
}

int cmd_grade_top(const CommonArgs& args) {
    Env env = build_env(args);
    Grading gr = resolve_grading(env, args.grading);
    Polynomial f = parse_poly(args.poly, gr.ring());
    std::string result = top_summand(f, gr).to_string();
    emit(args, {{"command", "grade-top"}, {"result", result}}, result);
    return 0;
}

int cmd_grade_dbar(const CommonArgs& args) {
    Env env = build_env(args);
    Derivation d = resolve_derivation(env, args.derivation);
    Grading gr = resolve_grading(env, args.grading);
    InducedDerivation dbar = induced_derivation(d, gr);
    ordered_json j;
    j["command"] = "grade-dbar";
    j["degree"] = degvec_string(dbar.degree);
    j["table"] = dbar.table_string();
    emit(args, j, "deg " + degvec_string(dbar.degree) + ": " + dbar.table_string());
    return 0;
}

int cmd_grade_lattice(const CommonArgs& args, const std::string& vectors,
                      const std::string& proper_in) {
    Lattice sub = lattice_span(detail::parse_degvec_list("<cli>", 0, vectors));
    ordered_json j;
    j["command"] = "grade-lattice";
    j["hnf"] = sub.to_string();
    if (proper_in.empty()) {
        emit(args, j, sub.to_string());
        return 0;
    }
    Lattice amb = (proper_in.size() > 1 && proper_in[0] == 'Z')
                      ? Lattice::standard(std::stoul(proper_in.substr(1)))
                      : lattice_span(detail::parse_degvec_list("<cli>", 0, proper_in));
    bool proper = lattice_proper_in(sub, amb);
    j["proper"] = proper;
    emit(args, j, proper ? "true" : "false");
    return 0;
}

int cmd_catalog(const CommonArgs& args) {
    Env env = build_env(args);
    ordered_json j;
    j["command"] = "catalog";
    j["name"] = env.algebra->name();
    j["vars"] = env.algebra->ring()->vars();
    j["relations"] = ordered_json::array();
    for (const auto& r : env.algebra->relations()) j["relations"].push_back(r.to_string());
    j["groebner"] = ordered_json::array();
    for (const auto& g : env.algebra->gb().gens) j["groebner"].push_back(g.to_string());
    j["derivations"] = ordered_json::array();
    for (const auto& [name, table] : env.tables) j["derivations"].push_back(name);
    j["gradings"] = ordered_json::array();
    for (const auto& [name, gr] : env.gradings) j["gradings"].push_back(name);

    std::string text = "algebra " + env.algebra->name() + "\n  vars:";
    for (const auto& v : env.algebra->ring()->vars()) text += " " + v;
    for (const auto& r : env.algebra->relations()) text += "\n  relation: " + r.to_string();
    for (const auto& [name, table] : env.tables) text += "\n  derivation " + name;
    for (const auto& [name, gr] : env.gradings) text += "\n  grading " + name;
    emit(args, j, text);
    return 0;
}

int cmd_corpus(const CommonArgs& args, const std::string& path) {
    namespace fs = std::filesystem;
    std::vector<std::string> files;
    if (fs::is_directory(path)) {
        for (const auto& entry : fs::directory_iterator(path))
            if (entry.path().extension() == ".corpus") files.push_back(entry.path().string());
        std::sort(files.begin(), files.end());
    } else {
        files.push_back(path);
    }
    if (files.empty()) throw InvalidSpec("no .corpus files under " + path);

    ordered_json all = ordered_json::array();
    bool ok = true;
    std::string text;
    for (const auto& file : files) {
        CheckReport report = run_corpus(parse_corpus_file(file));
        ok = ok && report.all_pass();
        all.push_back(report_json(report));
        text += report_text(report);
    }
    if (args.json)
        std::cout << all.dump(2) << "\n";
    else
        std::cout << text;
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computer algebra for locally nilpotent derivations"};
    app.require_subcommand(1);
    CommonArgs args;
    std::string corpus_path, vectors, proper_in;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--vars", args.vars, "comma-separated ring variables");
        cmd->add_option("--order", args.order, "monomial order: lex or grevlex");
        cmd->add_option("--ideal", args.ideal, "relation polynomials, ';'-separated");
        cmd->add_option("--catalog", args.catalog, "catalog entry, e.g. danielewski(n=1,p=y^2+1)");
        cmd->add_option("--derivation", args.derivation,
                        "derivation name(s) or inline table 'x -> 0, y -> x'");
        cmd->add_option("--grading", args.grading,
                        "grading name, kr(d,u,v), or inline table 'x -> (1), ...'");
        cmd->add_option("--elem", args.elem, "element (polynomial lift)");
        cmd->add_option("--poly", args.poly, "polynomial argument");
        cmd->add_option("--bound", args.bound, "iteration bound");
        cmd->add_option("--degree", args.degree, "slice degree N");
        cmd->add_flag("--json", args.json, "machine-readable output");
    };

    std::vector<std::pair<CLI::App*, std::function<int()>>> actions;
    auto reg = [&](CLI::App* cmd, std::function<int()> fn) {
        add_common(cmd);
        actions.emplace_back(cmd, std::move(fn));
    };

    reg(app.add_subcommand("gb", "reduced Groebner basis of --ideal"),
        [&] { return cmd_gb(args); });
    reg(app.add_subcommand("nf", "normal form of --poly modulo --ideal"),
        [&] { return cmd_nf(args); });

    CLI::App* derive = app.add_subcommand("derive", "derivation commands");
    derive->require_subcommand(1);
    reg(derive->add_subcommand("check", "well-definedness of --derivation"),
        [&] { return cmd_derive_check(args); });
    reg(derive->add_subcommand("apply", "apply --derivation to --elem"),
        [&] { return cmd_derive_apply(args); });
    reg(derive->add_subcommand("deg", "degree of --elem under --derivation"),
        [&] { return cmd_derive_deg(args); });
    reg(derive->add_subcommand("lnd", "nilpotency certificate for --derivation"),
        [&] { return cmd_derive_lnd(args); });

    reg(app.add_subcommand("kernel", "bounded kernel slice of --derivation"),
        [&] { return cmd_kernel(args); });
    reg(app.add_subcommand("ml", "bounded kernel intersection of --derivation list"),
        [&] { return cmd_ml(args); });

    CLI::App* grade = app.add_subcommand("grade", "grading commands");
    grade->require_subcommand(1);
    reg(grade->add_subcommand("deg", "degree of --poly under --grading"),
        [&] { return cmd_grade_deg(args); });
    reg(grade->add_subcommand("top", "top summand of --poly under --grading"),
        [&] { return cmd_grade_top(args); });
    reg(grade->add_subcommand("dbar", "induced derivation table under --grading"),
        [&] { return cmd_grade_dbar(args); });
    CLI::App* lattice = grade->add_subcommand("lattice", "integer lattice span / containment");
    lattice->add_option("--vectors", vectors, "vector list \"(2,-6,0);(0,-3,0)\"")->required();
    lattice->add_option("--proper-in", proper_in, "ambient: Z<d> or a vector list");
    reg(lattice, [&] { return cmd_grade_lattice(args, vectors, proper_in); });

    reg(app.add_subcommand("catalog", "describe a catalog algebra"),
        [&] { return cmd_catalog(args); });

    CLI::App* corpus = app.add_subcommand("corpus", "run corpus file(s)");
    corpus->add_option("--corpus,corpus", corpus_path, "corpus file or directory")->required();
    reg(corpus, [&] { return cmd_corpus(args, corpus_path); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        for (auto& [cmd, fn] : actions)
            if (cmd->parsed()) return fn();
        std::cerr << "no subcommand\n";
        return 2;
    } catch (const SchemaError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
}
