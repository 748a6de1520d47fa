// spa: command-line front end for the semi-Peano algebra toolkit.
//
// Exit codes: 0 success / positive decision, 1 negative decision,
// 2 no semi-Peano quotient exists, 64 usage error, 65 parse error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "spa/cyclic.hpp"
#include "spa/normalizer.hpp"
#include "spa/oracle.hpp"
#include "spa/pairing.hpp"
#include "spa/presentation.hpp"

namespace {

constexpr int kExitNegative = 1;
constexpr int kExitNotSemiPeano = 2;
constexpr int kExitUsage = 64;
constexpr int kExitParse = 65;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

spa::Presentation load_presentation(const std::string& path) {
    return spa::parse_presentation(read_file(path));
}

spa::Decomposition normalize_or_exit(const spa::Presentation& p, const std::string& path) {
    auto result = spa::normalize(p);
    if (auto* violation = std::get_if<spa::Violation>(&result)) {
        std::cout << "not semi-Peano: " << path << '\n' << violation->to_text();
        std::exit(kExitNotSemiPeano);
    }
    return std::move(std::get<spa::Decomposition>(result));
}

std::string indexed_path(const std::string& path, std::size_t index) {
    const auto dot = path.rfind('.');
    const auto slash = path.rfind('/');
    const bool has_ext = dot != std::string::npos && (slash == std::string::npos || dot > slash);
    if (has_ext) {
        return path.substr(0, dot) + "." + std::to_string(index) + path.substr(dot);
    }
    return path + "." + std::to_string(index);
}

int run_normalize(const std::string& file) {
    auto p = load_presentation(file);
    auto dec = normalize_or_exit(p, file);
    for (const spa::Word& w : dec.form.factors()) std::cout << w.str() << '\n';
    std::cout << "rank " << spa::rank(dec.form) << '\n';
    return 0;
}

int run_iso(const std::string& file_a, const std::string& file_b) {
    auto pa = load_presentation(file_a);
    auto pb = load_presentation(file_b);
    if (pa.signature() != pb.signature()) {
        std::cout << "not isomorphic\n";
        return kExitNegative;
    }
    auto da = normalize_or_exit(pa, file_a);
    auto db = normalize_or_exit(pb, file_b);
    if (spa::is_isomorphic(da.form, db.form)) {
        std::cout << "isomorphic\n";
        return 0;
    }
    std::cout << "not isomorphic\n";
    return kExitNegative;
}

struct CanonicalTerm {
    std::size_t factor;
    spa::Word word;
};

CanonicalTerm canonical_image(const spa::Decomposition& dec, const spa::Presentation& p,
                              const spa::Term& t) {
    const spa::GeneratorImage& img = dec.assignment.images.at(t.generator().name());
    spa::CyclicAlgebra anchor(p.signature(), dec.assignment.factors[img.factor].cycle);
    return {img.factor, spa::canonicalize(anchor, spa::concat(t.word(), img.word))};
}

int run_eq(const std::string& file, const std::string& lhs, const std::string& rhs) {
    auto p = load_presentation(file);
    auto dec = normalize_or_exit(p, file);
    CanonicalTerm a = canonical_image(dec, p, spa::parse_term(lhs, p));
    CanonicalTerm b = canonical_image(dec, p, spa::parse_term(rhs, p));
    if (a.factor == b.factor && a.word == b.word) {
        std::cout << "equal\n";
        return 0;
    }
    std::cout << "not equal\n";
    return kExitNegative;
}

int run_canon(const std::string& file, const std::string& term) {
    auto p = load_presentation(file);
    auto dec = normalize_or_exit(p, file);
    CanonicalTerm c = canonical_image(dec, p, spa::parse_term(term, p));
    std::cout << "factor " << (c.factor + 1) << ": " << c.word.str() << '\n';
    return 0;
}

int run_graph(const std::string& file, std::size_t depth, const std::string& out_path) {
    auto p = load_presentation(file);
    auto dec = normalize_or_exit(p, file);
    const auto& factors = dec.form.factors();
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (depth < factors[i].size()) {
            throw UsageError("--depth must be at least the longest cycle length (" +
                             std::to_string(factors[i].size()) + ")");
        }
    }
    for (std::size_t i = 0; i < factors.size(); ++i) {
        spa::CyclicAlgebra algebra(p.signature(), factors[i]);
        const std::string path =
            factors.size() == 1 ? out_path : indexed_path(out_path, i + 1);
        std::ofstream out(path, std::ios::binary);
        if (!out) throw UsageError("cannot write file: " + path);
        out << spa::graph_dot(algebra, depth);
    }
    return 0;
}

int run_oracle(const std::string& file, unsigned bound, bool bound_set, bool do_cross_check) {
    auto p = load_presentation(file);
    if (!bound_set) bound = spa::default_cross_check_bound(p);
    if (do_cross_check) {
        std::cout << spa::cross_check(p, bound).to_text();
    } else {
        std::cout << spa::ball_closure(p, bound).report_text();
    }
    return 0;
}

int run_orbits(const std::string& variant, std::int64_t max_value) {
    const spa::Unarisation u =
        variant == "u1" ? spa::Unarisation::U1 : spa::Unarisation::U2;
    std::cout << spa::decompose_pairing(u, max_value).to_text();
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"decision procedures for finitely presented unary semi-Peano algebras"};
    app.require_subcommand(1);

    std::string file, file_b, term_a, term_b, out_path, variant;
    std::size_t depth = 0;
    unsigned bound = 0;
    bool do_cross_check = false;
    std::int64_t max_value = 0;

    auto* cmd_normalize = app.add_subcommand("normalize", "print the free-product normal form");
    cmd_normalize->add_option("file", file, "presentation file")->required();

    auto* cmd_iso = app.add_subcommand("iso", "decide isomorphism of two presented algebras");
    cmd_iso->add_option("file1", file, "first presentation")->required();
    cmd_iso->add_option("file2", file_b, "second presentation")->required();

    auto* cmd_eq = app.add_subcommand("eq", "decide the word problem for two terms");
    cmd_eq->add_option("file", file, "presentation file")->required();
    cmd_eq->add_option("lhs", term_a, "first term, quoted")->required();
    cmd_eq->add_option("rhs", term_b, "second term, quoted")->required();

    auto* cmd_canon = app.add_subcommand("canon", "print the canonical representative of a term");
    cmd_canon->add_option("file", file, "presentation file")->required();
    cmd_canon->add_option("term", term_a, "term, quoted")->required();

    auto* cmd_graph = app.add_subcommand("graph", "export the algebra graph as DOT, one file per factor");
    cmd_graph->add_option("file", file, "presentation file")->required();
    cmd_graph->add_option("--depth", depth, "representative length cutoff")->required();
    cmd_graph->add_option("--out", out_path, "output path")->required();

    auto* cmd_oracle = app.add_subcommand("oracle", "bounded congruence-closure report");
    cmd_oracle->add_option("file", file, "presentation file")->required();
    auto* bound_opt = cmd_oracle->add_option("--bound", bound, "ball bound (default 2*maxlen+4)");
    cmd_oracle->add_flag("--cross-check", do_cross_check, "also run the normalizer and compare");

    auto* cmd_orbits = app.add_subcommand("orbits", "pairing-groupoid orbit partition");
    cmd_orbits->add_option("--variant", variant, "u1 or u2")
        ->required()
        ->check(CLI::IsMember({"u1", "u2"}));
    cmd_orbits->add_option("--max", max_value, "largest value to include")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (cmd_normalize->parsed()) return run_normalize(file);
        if (cmd_iso->parsed()) return run_iso(file, file_b);
        if (cmd_eq->parsed()) return run_eq(file, term_a, term_b);
        if (cmd_canon->parsed()) return run_canon(file, term_a);
        if (cmd_graph->parsed()) return run_graph(file, depth, out_path);
        if (cmd_oracle->parsed()) return run_oracle(file, bound, bound_opt->count() > 0, do_cross_check);
        if (cmd_orbits->parsed()) return run_orbits(variant, max_value);
    } catch (const spa::ParseError& e) {
        std::cerr << e.what() << '\n';
        return kExitParse;
    } catch (const UsageError& e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
