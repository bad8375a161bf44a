#include "wl/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <set>
#include <sstream>

#include "wl/generators.hpp"
#include "wl/oracle.hpp"
#include "wl/stabcol.hpp"
#include "wl/stabil.hpp"

namespace wl {

ColorMatrix parse_input(std::istream& in, std::ostream* warnings) {
    std::string line;
    int lineno = 0;
    long long declared = -1, n = -1;
    std::vector<std::vector<long long>> rows;
    auto need = [](bool cond, int ln, const std::string& msg) {
        if (!cond) throw parse_error(msg, ln);
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::vector<long long> toks;
        std::string tok;
        while (ls >> tok) {
            std::size_t used = 0;
            long long val = 0;
            try {
                val = std::stoll(tok, &used);
            } catch (...) {
                used = 0;
            }
            need(used == tok.size(), lineno, "'" + tok + "' is not an integer");
            toks.push_back(val);
        }
        if (toks.empty()) continue;
        if (declared < 0) {
            need(toks.size() == 1, lineno, "expected a single integer (color count)");
            declared = toks[0];
            need(declared >= 1, lineno, "color count must be positive");
        } else if (n < 0) {
            need(toks.size() == 1, lineno, "expected a single integer (vertex count)");
            n = toks[0];
            need(n >= 1, lineno, "vertex count must be positive");
        } else if (static_cast<long long>(rows.size()) < n) {
            need(static_cast<long long>(toks.size()) == n, lineno,
                 "expected " + std::to_string(n) + " entries, got " + std::to_string(toks.size()));
            for (long long v : toks) need(v >= 0, lineno, "colors must be non-negative");
            rows.push_back(std::move(toks));
        } else {
            throw parse_error("unexpected content after the matrix", lineno);
        }
    }
    need(declared >= 1, lineno + 1, "missing color count");
    need(n >= 1, lineno + 1, "missing vertex count");
    need(static_cast<long long>(rows.size()) == n,
         lineno + 1, "matrix ended after " + std::to_string(rows.size()) + " of " +
                         std::to_string(n) + " rows");
    if (warnings) {
        std::set<long long> distinct;
        for (const auto& row : rows) distinct.insert(row.begin(), row.end());
        if (static_cast<long long>(distinct.size()) != declared)
            *warnings << "warning: input declares " << declared << " colors but uses "
                      << distinct.size() << "; the observed count wins\n";
    }
    return normalize(rows);
}

std::string emit_result(const StableResult& res, const EmitOptions& opt) {
    std::ostringstream out;
    out << "rank=" << res.rank << "\n";
    out << "cells=" << res.cells << "\n";
    out << "iterations=" << res.iterations << "\n";
    const ColorMatrix& m = res.stable;
    std::vector<color_t> map = canonical_renumbering(m);
    for (int u = 0; u < m.n; ++u) {
        for (int v = 0; v < m.n; ++v) {
            if (v) out << ' ';
            out << map[m.at(u, v)];
        }
        out << "\n";
    }
    if (opt.constants && res.constants) {
        std::vector<StructureConstants::Entry> es = res.constants->entries;
        for (auto& e : es) {
            e.i = map[e.i];
            e.j = map[e.j];
            e.k = map[e.k];
        }
        std::sort(es.begin(), es.end(), [](const auto& a, const auto& b) {
            return std::tie(a.k, a.i, a.j) < std::tie(b.k, b.i, b.j);
        });
        for (const auto& e : es)
            out << "p " << e.i << " " << e.j << " " << e.k << " " << e.p << "\n";
    }
    return out.str();
}

namespace {

ColorMatrix read_matrix(const std::string& path, std::istream& in, std::ostream& err) {
    if (path == "-") return parse_input(in, &err);
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    return parse_input(f, &err);
}

StableResult run_engine(const std::string& engine, const ColorMatrix& m, bool with_constants) {
    if (engine == "stabil") return stabil_closure(m, with_constants);
    if (engine == "stabcol") return stabcol_closure(m, with_constants);
    return symbolic_closure(m, with_constants);
}

ColorMatrix make_family(const std::string& family, int param) {
    if (family == "benzene") return benzene_stack(param);
    if (family == "moebius") return moebius_ladder(param);
    return dynkin(param);
}

void print_input_format(std::ostream& out, const ColorMatrix& m) {
    out << m.r << "\n" << m.n << "\n";
    for (int u = 0; u < m.n; ++u) {
        for (int v = 0; v < m.n; ++v) {
            if (v) out << ' ';
            out << m.at(u, v);
        }
        out << "\n";
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"coherent closure of colored complete directed graphs"};
    app.require_subcommand(1);
    const std::vector<std::string> engines{"stabil", "stabcol", "symbolic"};
    const std::vector<std::string> families{"benzene", "moebius", "dynkin"};

    std::string engine = "stabil", input_path = "-";
    bool constants = false;
    auto* close = app.add_subcommand("close", "refine a coloring to the coherent closure");
    close->add_option("-e,--engine", engine, "refinement engine")
        ->check(CLI::IsMember(engines));
    close->add_flag("-p,--constants", constants, "also print the structure constants");
    close->add_option("input", input_path, "input file, - for stdin");

    std::string family;
    int param = 0;
    auto* gen = app.add_subcommand("gen", "print a family instance in the input format");
    gen->add_option("family", family, "graph family")->required()->check(CLI::IsMember(families));
    gen->add_option("param", param, "family parameter")->required();

    std::string vpath = "-";
    bool vconstants = false;
    auto* verify = app.add_subcommand("verify", "check that a coloring is coherent");
    verify->add_flag("-p,--constants", vconstants,
                     "also check the structure constants by multiplication");
    verify->add_option("input", vpath, "input file, - for stdin");

    std::string bfamily, bengine = "stabcol";
    int bmin = 0, bmax = 0;
    auto* bench = app.add_subcommand("bench", "time closures over a family range (CSV)");
    bench->add_option("family", bfamily, "graph family")
        ->required()
        ->check(CLI::IsMember(families));
    bench->add_option("min", bmin, "first parameter value")->required();
    bench->add_option("max", bmax, "last parameter value")->required();
    bench->add_option("-e,--engine", bengine, "refinement engine")->check(CLI::IsMember(engines));

    std::vector<std::string> argv_store;
    argv_store.reserve(args.size() + 1);
    argv_store.push_back("wlclose");
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    argv.reserve(argv_store.size());
    for (auto& s : argv_store) argv.push_back(s.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (close->parsed()) {
            ColorMatrix m = read_matrix(input_path, in, err);
            StableResult res = run_engine(engine, m, constants);
            EmitOptions opt;
            opt.constants = constants;
            out << emit_result(res, opt);
            return 0;
        }
        if (gen->parsed()) {
            print_input_format(out, make_family(family, param));
            return 0;
        }
        if (verify->parsed()) {
            ColorMatrix m = read_matrix(vpath, in, err);
            CoherenceReport rep = verify_coherent(m);
            if (!rep.ok) {
                out << "not coherent\n";
                for (const auto& v : rep.violations) out << v << "\n";
                return 1;
            }
            out << "coherent\n";
            if (vconstants) {
                ConstantsCheck chk =
                    check_constants_by_multiplication(m, structure_constants(m));
                out << chk.detail << "\n";
                if (chk.status == ConstantsCheck::Status::mismatch) return 1;
            }
            return 0;
        }
        out << "family,param,n,colors,cells,ms\n";
        for (int k = bmin; k <= bmax; ++k) {
            ColorMatrix m = make_family(bfamily, k);
            auto t0 = std::chrono::steady_clock::now();
            StableResult res = run_engine(bengine, m, false);
            double ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
            out << bfamily << "," << k << "," << m.n << "," << res.rank << "," << res.cells
                << "," << std::fixed << std::setprecision(2) << ms << "\n";
            out.unsetf(std::ios::floatfield);
        }
        return 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace wl
