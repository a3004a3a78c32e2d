#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "crwp/automata/runner.hpp"
#include "crwp/automata/serialize.hpp"
#include "crwp/config.hpp"
#include "crwp/crossval.hpp"
#include "crwp/examples.hpp"
#include "crwp/faults.hpp"
#include "crwp/group_automata.hpp"
#include "crwp/pipeline.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kInvalid = 2;
constexpr int kDisagree = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::string> word_tokens(const std::vector<std::string>& args) {
    std::vector<std::string> out;
    for (const auto& a : args)
        for (auto& t : crwp::split_tokens(a)) out.push_back(std::move(t));
    std::size_t hashes = 0, at = 0;
    for (std::size_t k = 0; k < out.size(); ++k)
        if (out[k] == crwp::kSeparator) ++hashes, at = k;
    if (hashes != 1) throw UsageError("word must contain exactly one '#'");
    if (at == 0 || at + 1 == out.size()) throw UsageError("both sides of '#' must be nonempty");
    return out;
}

void emit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw crwp::InvalidInput("cannot write '" + path + "'");
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Word-problem recognizers for finite semilattices of Rees matrix semigroups"};
    app.require_subcommand(1);
    std::string config;
    std::size_t bound = 5;

    auto* validate = app.add_subcommand("validate", "load a config and check the gluing conditions");
    bool emit_normalized = false;
    validate->add_option("config", config)->required();
    validate->add_option("--bound", bound, "word length for structure-map checks");
    validate->add_flag("--emit-normalized", emit_normalized, "print the normalized config");

    auto* decide = app.add_subcommand("decide", "decide one word u # v^rev");
    std::vector<std::string> word;
    bool with_oracle = false;
    decide->add_option("config", config)->required();
    decide->add_option("word", word, "letters separated by spaces, with one '#'")->required();
    decide->add_flag("--oracle", with_oracle, "also evaluate both sides directly");
    decide->add_option("--bound", bound);

    auto* build = app.add_subcommand("build-wp", "build the word-problem PDA");
    std::string output;
    build->add_option("config", config)->required();
    build->add_option("-o,--output", output)->required();
    build->add_option("--bound", bound);

    auto* emit_cmd = app.add_subcommand("emit-automaton", "print an intermediate machine");
    std::string what = "wp", comp_name;
    std::size_t task_i = 1, task_lambda = 1;
    emit_cmd->add_option("config", config)->required();
    emit_cmd->add_option("--what", what)
        ->check(CLI::IsMember({"wp", "group", "component", "gsm", "regex", "l1", "l2", "hclass"}));
    emit_cmd->add_option("--component", comp_name, "component name (default: first)");
    emit_cmd->add_option("--i", task_i, "H-class i-index (1-based)");
    emit_cmd->add_option("--lambda", task_lambda, "H-class lambda-index (1-based)");
    emit_cmd->add_option("-o,--output", output);
    emit_cmd->add_option("--bound", bound);

    auto* cross = app.add_subcommand("cross-validate", "compare the recognizer with direct evaluation");
    std::size_t max_len = 6;
    bool serial = false, corrupt_factor = false, corrupt_map = false;
    cross->add_option("config", config)->required();
    cross->add_option("--max-len", max_len, "bound on |u| + |v|")->required();
    cross->add_flag("--serial", serial, "use the serial reference kernel");
    cross->add_flag("--corrupt-factor", corrupt_factor, "build the recognizer from a tampered factor table");
    cross->add_flag("--corrupt-map", corrupt_map, "build the recognizer from a tampered structure map");
    cross->add_option("--bound", bound);

    auto* example = app.add_subcommand("example", "the two built-in example semigroups");
    example->require_subcommand(1);
    auto* ex1 = example->add_subcommand("ex1", "transformations of Z generated by x and t0");
    ex1->require_subcommand(1);
    auto* ex1_decide = ex1->add_subcommand("decide", "decide one word with the explicit PDA");
    ex1_decide->add_option("word", word)->required();
    auto* ex1_emit = ex1->add_subcommand("emit-pda", "print the explicit PDA");
    auto* ex2 = example->add_subcommand("ex2", "free group of rank 2 acting on idempotents");
    ex2->require_subcommand(1);
    auto* ex2_slice = ex2->add_subcommand("slice", "words x^k b0 # b0 y^n in the word problem");
    std::size_t slice_len = 70;
    ex2_slice->add_option("--max-len", slice_len)->required();
    auto* ex2_gap = ex2->add_subcommand("gap-check", "check the doubling of x-runs along the slice");
    ex2_gap->add_option("--max-len", slice_len);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        const crwp::LoadOptions options{true, bound};
        if (*validate) {
            crwp::ValidationReport report;
            crwp::CRSemigroup s = crwp::load_config(config, {false, bound});
            report = crwp::validate_structure(s, bound);
            std::cout << report.to_string();
            if (emit_normalized) std::cout << crwp::write_config(s);
            return report.ok() ? kOk : kInvalid;
        }
        if (*decide) {
            const auto w = word_tokens(word);
            const crwp::CRSemigroup s = crwp::load_config(config, options);
            const crwp::Pda pda = crwp::build_wp_recognizer(s);
            const bool in = crwp::pda_membership_names(pda, w);
            std::cout << (in ? "IN" : "OUT") << '\n';
            if (with_oracle) {
                auto hash = std::find(w.begin(), w.end(), crwp::kSeparator);
                std::vector<std::string> u(w.begin(), hash), v(hash + 1, w.end());
                std::reverse(v.begin(), v.end());
                const auto a = s.evaluate_names(u), b = s.evaluate_names(v);
                const bool equal = a == b;
                std::cout << "oracle " << (equal ? "IN" : "OUT") << ": " << s.format(a) << " vs " << s.format(b) << '\n'
                          << (equal == in ? "AGREE" : "DISAGREE") << '\n';
                if (equal != in) return kDisagree;
            }
            return kOk;
        }
        if (*build) {
            const crwp::CRSemigroup s = crwp::load_config(config, options);
            emit(output, crwp::to_text(crwp::build_wp_recognizer(s)));
            return kOk;
        }
        if (*emit_cmd) {
            const crwp::CRSemigroup s = crwp::load_config(config, options);
            const std::size_t alpha = comp_name.empty() ? 0 : s.semilattice().index(comp_name);
            const crwp::ReesComponent& c = s.component(alpha);
            if (task_i < 1 || task_i > c.num_i() || task_lambda < 1 || task_lambda > c.num_lambda())
                throw UsageError("H-class index out of range");
            if (what == "wp") {
                emit(output, crwp::to_text(crwp::build_wp_recognizer(s)));
            } else if (what == "group") {
                std::ostringstream os;
                crwp::write_recognizer(os, crwp::group_wp_automaton(c.group()));
                emit(output, os.str());
            } else if (what == "component") {
                emit(output, crwp::to_text(crwp::component_wp_recognizer(c)));
            } else {
                const crwp::HClassTask task = crwp::make_task(s, alpha, task_i - 1, task_lambda - 1);
                const crwp::FactorTable ft = crwp::build_factor_table(s, task);
                if (what == "gsm") emit(output, crwp::to_text(crwp::build_gsm(s, task, ft)));
                if (what == "regex") emit(output, crwp::to_text(crwp::build_regex_dfa(task, ft)));
                if (what == "l1") emit(output, crwp::to_text(crwp::build_l1_pda(s, task, ft)));
                if (what == "l2") emit(output, crwp::to_text(crwp::build_l2_dfa(s, task)));
                if (what == "hclass") emit(output, crwp::to_text(crwp::build_hclass_recognizer(s, task)));
            }
            return kOk;
        }
        if (*cross) {
            const crwp::CRSemigroup s = crwp::load_config(config, options);
            crwp::PipelineHooks hooks;
            if (corrupt_factor) hooks = crwp::corrupt_factor_hook(s);
            const crwp::Pda pda = corrupt_map ? crwp::build_wp_recognizer(crwp::corrupt_structure_map(s), hooks)
                                              : crwp::build_wp_recognizer(s, hooks);
            const auto report = crwp::cross_validate(pda, s.alphabet(), crwp::semigroup_oracle(s), max_len,
                                                     serial ? crwp::Kernel::Serial : crwp::Kernel::Parallel);
            std::cout << report.summary();
            return report.agree() ? kOk : kDisagree;
        }
        if (*ex1_decide) {
            const auto w = word_tokens(word);
            std::cout << (crwp::pda_membership_names(crwp::ex1_pda(), w) ? "IN" : "OUT") << '\n';
            return kOk;
        }
        if (*ex1_emit) {
            std::cout << crwp::to_text(crwp::ex1_pda());
            return kOk;
        }
        if (*ex2_slice) {
            for (const auto& w : crwp::ex2_slice(slice_len)) std::cout << crwp::join_tokens(w) << '\n';
            return kOk;
        }
        if (*ex2_gap) {
            const crwp::GapReport r = crwp::ex2_gap_check(crwp::ex2_slice(slice_len));
            std::cout << "x-runs:";
            for (auto [n, k] : r.runs) std::cout << ' ' << k;
            std::cout << '\n' << (r.pass ? "pass" : "fail: " + r.reason) << '\n';
            return r.pass ? kOk : kInvalid;
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const crwp::UnknownLetter& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const crwp::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInvalid;
    }
    return kUsage;
}
