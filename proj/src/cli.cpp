#include "leftorder/cli.hpp"

#include "leftorder/abelian.hpp"
#include "leftorder/corpus.hpp"
#include "leftorder/documents.hpp"
#include "leftorder/errors.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace leftorder {

namespace {

constexpr int kUsage = 1;
constexpr int kPrecondition = 2;
constexpr int kFailed = 3;

struct UsageError : Error {
    using Error::Error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read `" + path + "`");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw UsageError("cannot write `" + path + "`");
    file << text;
}

std::size_t env_size(const char* name, std::size_t fallback) {
    const char* raw = std::getenv(name);
    if (!raw || !*raw) return fallback;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(raw, &end, 10);
    if (*end != '\0' || v == 0) throw UsageError(std::string(name) + " must be a positive integer");
    return static_cast<std::size_t>(v);
}

std::vector<Word> parse_subset(const std::string& text, const Presentation& p) {
    std::vector<Word> out;
    std::stringstream ss(text);
    std::string piece;
    while (std::getline(ss, piece, ',')) out.push_back(parse_word(piece, p));
    if (out.empty()) throw UsageError("--subset is empty");
    return out;
}

std::vector<ParamGerm> assign_by_name(const Presentation& p, const std::vector<ParamGerm>& germs) {
    std::vector<ParamGerm> out;
    for (const std::string& gen : p.generators) {
        auto it = std::find_if(germs.begin(), germs.end(), [&](const ParamGerm& g) { return g.name == gen; });
        if (it == germs.end()) throw PreconditionError("no germ named `" + gen + "` in the germ file");
        out.push_back(*it);
    }
    if (germs.size() != out.size()) throw PreconditionError("germ file names germs that are not generators");
    return out;
}

std::string join(const std::vector<Integer>& xs) {
    std::string out;
    for (const Integer& x : xs) out += (out.empty() ? "" : ", ") + to_string(x);
    return "[" + out + "]";
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Left orders, dynamical realizations and germ orders on finite data", "leftorder"};
    app.require_subcommand(1);
    unsigned threads = 1;
    app.add_option("--threads", threads, "worker threads for searches")->check(CLI::PositiveNumber);

    Budget budget;
    std::size_t max_nodes = 0, max_word_length = 0;
    auto add_budget = [&](CLI::App* sub) {
        sub->add_option("--budget", max_nodes, "node cap per identity search (default $LEFTORDER_MAX_NODES or 4000)");
        sub->add_option("--max-word-length", max_word_length,
                        "word length cap per identity search (default $LEFTORDER_MAX_WORD_LENGTH or 32)");
    };

    std::string file, germ_path, out_path, subset, order = "lex", write_dir;
    std::size_t max_len = 4, radius = 2, iterates = 10, depth = 6;
    std::optional<std::size_t> map_radius;

    auto* betti = app.add_subcommand("betti", "first Betti number and Smith diagonal");
    betti->add_option("file", file, "presentation file")->required();

    auto* check = app.add_subcommand("check-lo", "bounded semigroup criterion certificate");
    check->add_option("file", file, "presentation file")->required();
    check->add_option("--subset", subset, "comma-separated words")->required();
    check->add_option("--max-len", max_len, "longest product to try");
    check->add_option("--out", out_path, "output document (default stdout)");
    add_budget(check);

    auto* real = app.add_subcommand("realize", "dynamical realization report");
    real->add_option("file", file, "presentation file")->required();
    real->add_option("--order", order, "lex or magnus")->check(CLI::IsMember({"lex", "magnus"}));
    real->add_option("--radius", radius, "ball radius of the enumeration");
    real->add_option("--iterates", iterates, "germ orbit length");
    real->add_option("--map-radius", map_radius, "build maps for words up to this length (default min(radius, 2))");
    real->add_option("--out", out_path, "output document")->required();
    add_budget(real);

    auto* germ = app.add_subcommand("germ-order", "sign selection transcript");
    germ->add_option("germfile", germ_path, "germ file")->required();
    germ->add_option("--depth", depth, "number of grid shells")->check(CLI::Range(1, 24));
    germ->add_option("--max-len", max_len, "longest semigroup word to verify");
    germ->add_option("--out", out_path, "output document")->required();

    auto* obs = app.add_subcommand("obstruct", "stability obstruction report");
    obs->add_option("file", file, "presentation file")->required();
    obs->add_option("germfile", germ_path, "germ file, one germ per generator name")->required();
    obs->add_option("--depth", depth, "number of grid shells")->check(CLI::Range(1, 24));
    obs->add_option("--out", out_path, "output document (default stdout)");

    auto* list = app.add_subcommand("corpus", "list bundled groups");
    list->add_option("--write", write_dir, "write <name>.grp files into this directory");

    auto* verify = app.add_subcommand("verify", "replay a certificate or report");
    verify->add_option("file", file, "document")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        budget.max_nodes = max_nodes ? max_nodes : env_size("LEFTORDER_MAX_NODES", budget.max_nodes);
        budget.max_word_length =
            max_word_length ? max_word_length : env_size("LEFTORDER_MAX_WORD_LENGTH", budget.max_word_length);

        if (*betti) {
            const Presentation p = parse_presentation(read_file(file));
            const AbelianInvariants inv = abelian_invariants(p);
            out << "b1 = " << first_betti(p) << "\n";
            out << "snf = " << join(inv.smith_diagonal) << "\n";
            out << "torsion = " << join(inv.torsion) << "\n";
            return 0;
        }
        if (*check) {
            const Presentation p = parse_presentation(read_file(file));
            const auto words = parse_subset(subset, p);
            const CriterionResult r = semigroup_criterion(p, words, max_len, budget, threads);
            emit(to_document(r), out_path, out);
            err << (r.not_left_orderable ? "NotLeftOrderable" : "Undetermined") << ": " << r.killed.size() << " of "
                << (r.killed.size() + r.survivors.size()) << " sign assignments killed\n";
            return 0;
        }
        if (*real) {
            const Presentation p = parse_presentation(read_file(file));
            const RealizationReport r =
                realize(p, order, radius, iterates, map_radius.value_or(std::min<std::size_t>(radius, 2)), budget);
            emit(to_document(r), out_path, out);
            if (!r.checks.passed()) {
                for (const auto& f : r.checks.failures) err << "failed: " << f << "\n";
                err << "realization FAILED\n";
                return kFailed;
            }
            err << "realization PASS: " << r.embedding.size() << " points, " << r.maps.size() << " maps\n";
            return 0;
        }
        if (*germ) {
            const auto germs = parse_germ_file(read_file(germ_path));
            const GermOrderTranscript t = select_signs(germs, depth, max_len);
            emit(to_document(t), out_path, out);
            if (!t.passed) {
                err << "germ order FAILED: " << t.failure << "\n";
                return kFailed;
            }
            err << "germ order PASS: " << t.tiers.size() << " tier(s), " << t.checks.size() << " words checked\n";
            return 0;
        }
        if (*obs) {
            const Presentation p = parse_presentation(read_file(file));
            const auto germs = parse_germ_file(read_file(germ_path));
            const ObstructionReport r = stability_obstruction(p, assign_by_name(p, germs), depth);
            emit(to_document(r), out_path, out);
            err << to_string(r.verdict) << ": " << r.note << "\n";
            return 0;
        }
        if (*list) {
            for (const CorpusEntry& e : corpus()) {
                if (!write_dir.empty()) {
                    emit(e.text, (std::filesystem::path(write_dir) / (e.name + ".grp")).string(), out);
                }
                out << e.name << "\t" << e.notes << "\n";
            }
            return 0;
        }
        if (*verify) {
            const VerifyOutcome v = verify_document(read_file(file));
            out << (v.ok ? "OK" : "FAILED") << " " << (v.kind.empty() ? "?" : v.kind) << ": " << v.message << "\n";
            return v.ok ? 0 : kFailed;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const StructuralError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const InvariantViolation& e) {
        err << "invariant violated: " << e.what() << "\n";
        return kFailed;
    } catch (const Error& e) {
        err << "precondition: " << e.what() << "\n";
        return kPrecondition;
    }
    return kUsage;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"leftorder"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace leftorder
