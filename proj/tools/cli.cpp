#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <variant>

#include <CLI11.hpp>

#include "nonreg/builtin.hpp"
#include "nonreg/dnreg.hpp"
#include "nonreg/efa.hpp"
#include "nonreg/error.hpp"
#include "nonreg/fatl.hpp"
#include "nonreg/grammar.hpp"
#include "nonreg/oracle.hpp"
#include "nonreg/pda.hpp"

namespace nonreg::cli {

namespace {

using Device = std::variant<cfg::Grammar, pda::Pda, efa::Efa, fatl::Fatl>;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Failure to read or understand the device.
struct DeviceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Source {
    std::string grammar, pda, efa, fatl, example;

    void attach(CLI::App* app) {
        app->add_option("--grammar", grammar, "context-free grammar file (.cfg)");
        app->add_option("--pda", pda, "pushdown automaton file (.pda)");
        app->add_option("--efa", efa, "group automaton file (.efa)");
        app->add_option("--fatl", fatl, "translucent-letter automaton file (.fatl)");
        app->add_option("--example", example, "builtin example name");
    }

    Device load() const {
        int given = !grammar.empty() + !pda.empty() + !efa.empty() + !fatl.empty() + !example.empty();
        if (given != 1) throw UsageError("give exactly one of --grammar, --pda, --efa, --fatl, --example");
        std::string kind, text;
        if (!example.empty()) {
            auto t = builtin_example(example);
            if (!t) throw UsageError("unknown example '" + example + "'");
            kind = std::string(*builtin_kind(example));
            text = std::string(*t);
        } else {
            std::string path;
            if (!grammar.empty()) kind = "cfg", path = grammar;
            if (!pda.empty()) kind = "pda", path = pda;
            if (!efa.empty()) kind = "efa", path = efa;
            if (!fatl.empty()) kind = "fatl", path = fatl;
            std::ifstream in(path, std::ios::binary);
            if (!in) throw DeviceError("cannot open " + path);
            std::ostringstream buf;
            buf << in.rdbuf();
            text = buf.str();
        }
        try {
            if (kind == "cfg") return cfg::parse_grammar(text);
            if (kind == "pda") return pda::parse_pda(text);
            if (kind == "efa") return efa::parse_efa(text);
            return fatl::parse_fatl(text);
        } catch (const ParseError& e) {
            throw DeviceError(e.what());
        }
    }
};

std::string_view kind_of(const Device& d) {
    static constexpr std::string_view names[] = {"cfg", "pda", "efa", "fatl"};
    return names[d.index()];
}

// The measure each device kind carries.
std::string_view measure_of(const Device& d) {
    static constexpr std::string_view names[] = {"dnreg", "push", "gmc", "jc"};
    return names[d.index()];
}

void check_measure(const std::string& measure, const Device& d) {
    if (measure != measure_of(d)) {
        throw UsageError("measure " + measure + " does not apply to a " + std::string(kind_of(d)) +
                         " device (expected " + std::string(measure_of(d)) + ")");
    }
}

// Grammar the dnreg commands work on: quasi Chomsky normal form unless
// --exact asks for the original rules (only made proper).
cfg::Grammar working_grammar(const cfg::Grammar& g, bool exact) {
    return exact ? cfg::normalize(g) : dnreg::canonical_form(g);
}

std::string word_arg(const std::string& w) { return w == "_" ? std::string() : w; }

void write_out(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f || !(f << text)) throw DeviceError("cannot write " + path);
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Measure how far languages of grammars and automata are from regular", "nonreg"};
    app.require_subcommand(1);

    Source src;
    std::string measure, word, out_path, fit, decision, target, example_name;
    std::size_t max_n = 0, budget = 0, bound = 16, beam = 0;
    bool verbose = false, exact = false;

    auto* m = app.add_subcommand("measure", "measure of one word (dnreg, push, gmc or jc)");
    m->add_option("measure", measure)->required()->check(CLI::IsMember({"dnreg", "push", "gmc", "jc"}));
    src.attach(m);
    m->add_option("--word", word, "the word; '_' for the empty word")->required();
    m->add_flag("-v", verbose, "also report membership");
    m->add_flag("--exact", exact, "dnreg of the grammar as written instead of its normal form");

    auto* p = app.add_subcommand("profile", "per-length maxima as CSV");
    p->add_option("measure", measure)->required()->check(CLI::IsMember({"dnreg", "push", "gmc", "jc"}));
    src.attach(p);
    p->add_option("--max-n", max_n)->required()->check(CLI::PositiveNumber);
    p->add_option("--out", out_path, "CSV file (default stdout)");
    p->add_option("--fit", fit, "growth family to fit: constant, log, sqrt, linear");
    p->add_option("--beam", beam, "gmc only: keep this many maps per length (lower bounds)");
    p->add_flag("--exact", exact, "dnreg of the grammar as written instead of its normal form");

    auto* d = app.add_subcommand("decide", "is the measure bounded by a constant");
    d->add_option("decision", decision)
        ->required()
        ->check(CLI::IsMember({"dnreg-bounded", "gmc-bounded", "jc-bounded"}));
    src.attach(d);
    d->add_option("-c", budget, "the constant")->required();
    d->add_option("--bound", bound, "longest word searched (gmc, jc)");

    auto* c = app.add_subcommand("convert", "PDA acceptance mode or grammar normal form");
    src.attach(c);
    c->add_option("--to", target, "empty-stack, final-state, proper, quasi-normal, quasi-chomsky")
        ->required()
        ->check(CLI::IsMember({"empty-stack", "final-state", "proper", "quasi-normal", "quasi-chomsky"}));
    c->add_option("--out", out_path);

    auto* b = app.add_subcommand("build-example", "print a bundled device file");
    b->add_option("name", example_name, "omit to list the names");
    b->add_option("--out", out_path);

    auto* e = app.add_subcommand("enumerate", "all words up to a length, one per line");
    src.attach(e);
    e->add_option("--max-n", max_n)->required();
    e->add_option("--out", out_path);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    if (!rev.empty()) rev.pop_back();
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& ex) {
        return app.exit(ex, out, err) == 0 ? exit_ok : exit_usage;
    }

    try {
        if (b->parsed()) {
            if (example_name.empty()) {
                for (const auto& n : builtin_names()) out << n << '\n';
                return exit_ok;
            }
            auto text = builtin_example(example_name);
            if (!text) throw UsageError("unknown example '" + example_name + "'");
            write_out(out_path, std::string(*text), out);
            return exit_ok;
        }

        const Device dev = src.load();

        if (m->parsed()) {
            check_measure(measure, dev);
            const std::string w = word_arg(word);
            std::optional<std::size_t> v;
            if (auto* g = std::get_if<cfg::Grammar>(&dev)) {
                auto wg = working_grammar(*g, exact);
                wg.check_word(w);
                v = dnreg::word_degree(wg, w);
            } else if (auto* a = std::get_if<pda::Pda>(&dev)) {
                v = pda::push_word(*a, w);
            } else if (auto* a = std::get_if<efa::Efa>(&dev)) {
                v = efa::gmc_word(*a, w);
            } else {
                v = fatl::jc_word(std::get<fatl::Fatl>(dev), w);
            }
            out << v.value_or(0) << '\n';
            if (verbose) out << (v ? "member" : "non-member") << '\n';
            return exit_ok;
        }

        if (p->parsed()) {
            check_measure(measure, dev);
            if (beam && !std::holds_alternative<efa::Efa>(dev)) throw UsageError("--beam applies to gmc only");
            std::optional<oracle::Family> family;
            if (!fit.empty() && !(family = oracle::parse_family(fit))) throw UsageError("unknown family '" + fit + "'");
            Profile prof;
            if (auto* g = std::get_if<cfg::Grammar>(&dev)) {
                prof = dnreg::profile(working_grammar(*g, exact), max_n);
            } else if (auto* a = std::get_if<pda::Pda>(&dev)) {
                prof = pda::push_profile(*a, max_n);
            } else if (auto* a = std::get_if<efa::Efa>(&dev)) {
                prof = beam ? efa::gmc_lower_profile(*a, max_n, beam) : efa::gmc_profile(*a, max_n);
            } else {
                prof = fatl::jc_profile(std::get<fatl::Fatl>(dev), max_n);
            }
            write_out(out_path, to_csv(prof), out);
            if (prof.exhaustive_up_to < max_n) {
                out << "# exact up to n=" << prof.exhaustive_up_to << ", lower bounds beyond\n";
            }
            if (family) {
                auto f = oracle::growth_fit(prof, *family);
                out << "# fit C=" << f.constant << " max_residual=" << f.max_residual
                    << " lower_C=" << f.lower_constant << '\n'
                    << "# " << f.verdict << '\n';
            }
            return exit_ok;
        }

        if (d->parsed()) {
            auto unknown = [&](const std::string& reason) {
                out << "UNKNOWN\n# " << reason << '\n';
                return exit_ok;
            };
            if (decision == "dnreg-bounded") {
                auto* g = std::get_if<cfg::Grammar>(&dev);
                if (!g) throw UsageError("dnreg-bounded needs a grammar");
                auto r = dnreg::decide_bounded(*g, budget);
                if (auto* u = std::get_if<dnreg::Unbounded>(&r)) {
                    out << u->witness << '\n';
                    return exit_counterexample;
                }
                out << "BOUNDED\n";
                return exit_ok;
            }
            if (decision == "gmc-bounded") {
                auto* a = std::get_if<efa::Efa>(&dev);
                if (!a) throw UsageError("gmc-bounded needs an EFA");
                auto r = efa::check_gmc_bounded(*a, budget, bound);
                if (auto* ce = std::get_if<efa::Counterexample>(&r)) {
                    out << ce->word << '\n';
                    return exit_counterexample;
                }
                if (auto* u = std::get_if<efa::Unknown>(&r)) return unknown(u->reason);
                out << "BOUNDED up to length " << std::get<efa::Bounded>(r).up_to << '\n';
                return exit_ok;
            }
            auto* f = std::get_if<fatl::Fatl>(&dev);
            if (!f) throw UsageError("jc-bounded needs a FATL");
            auto r = fatl::decide_jc_bounded(*f, budget, bound);
            if (auto* ce = std::get_if<fatl::Counterexample>(&r)) {
                out << ce->word << '\n';
                return exit_counterexample;
            }
            if (auto* u = std::get_if<fatl::Unknown>(&r)) return unknown(u->reason);
            out << "BOUNDED up to length " << std::get<fatl::Bounded>(r).up_to << '\n';
            return exit_ok;
        }

        if (c->parsed()) {
            if (auto* a = std::get_if<pda::Pda>(&dev)) {
                if (target != "empty-stack" && target != "final-state") {
                    throw UsageError("a PDA converts to empty-stack or final-state");
                }
                auto mode = target == "empty-stack" ? pda::Mode::EmptyStack : pda::Mode::FinalState;
                write_out(out_path, pda::render_pda(pda::convert_mode(*a, mode)), out);
                return exit_ok;
            }
            auto* g = std::get_if<cfg::Grammar>(&dev);
            if (!g || target == "empty-stack" || target == "final-state") {
                throw UsageError("convert takes a PDA with a mode or a grammar with a normal form");
            }
            cfg::Grammar r = cfg::normalize(*g);
            if (target != "proper") r = cfg::to_quasi_normal_form(r);
            if (target == "quasi-chomsky") r = cfg::to_quasi_chomsky(r);
            write_out(out_path, cfg::render_grammar(r), out);
            return exit_ok;
        }

        // enumerate
        auto slice = std::visit([&](const auto& x) { return oracle::enumerate(x, max_n); }, dev);
        write_out(out_path, oracle::serialize(slice), out);
        return exit_ok;
    } catch (const UsageError& ex) {
        err << "nonreg: " << ex.what() << '\n';
        return exit_usage;
    } catch (const AlphabetError& ex) {
        err << "nonreg: " << ex.what() << '\n';
        return exit_usage;
    } catch (const DeviceError& ex) {
        err << "nonreg: " << ex.what() << '\n';
        return exit_device;
    } catch (const Error& ex) {
        err << "nonreg: " << ex.what() << '\n';
        return exit_device;
    }
}

} // namespace nonreg::cli
