// witt: exact rational Witt vector and endomorphism-class calculator.
//
// Exit codes: 0 success, 2 syntax or CLI misuse, 3 domain error.

#include <CLI11.hpp>
#include <iostream>
#include <string>

#include "wittkit/wittkit.hpp"

namespace {

using namespace wittkit;

struct CommonOpts {
    std::string ring = "Z";
    std::string mode = "human";
};

SessionConfig make_config(const CommonOpts& c) {
    SessionConfig cfg;
    cfg.ring = parse_ring(c.ring);
    cfg.mode = c.mode == "structured" ? OutputMode::structured : OutputMode::human;
    return cfg;
}

void add_common(CLI::App* cmd, CommonOpts& c) {
    cmd->add_option("--ring", c.ring, "coefficient ring: Z, Z/m, GF(p), Z[t], GF(p)[t]")
        ->default_val("Z");
    cmd->add_option("--mode", c.mode, "output mode")
        ->check(CLI::IsMember({"human", "structured"}))
        ->default_val("human");
}

std::string render_split(const EndoClass& c, OutputMode mode) {
    auto [rank_part, witt_part] = split_class(c);
    if (mode == OutputMode::human) {
        return "rank part: " + render::class_human(rank_part) + "\nwitt part: " + render::class_human(witt_part);
    }
    std::string out;
    std::istringstream a(render::class_structured(rank_part));
    std::istringstream b(render::class_structured(witt_part));
    std::string line;
    while (std::getline(a, line)) out += "rankpart " + line + "\n";
    while (std::getline(b, line)) out += "wittpart " + line + "\n";
    if (!out.empty()) out.pop_back();
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact rational Witt vectors, endomorphism classes, and the small-field K-group oracle"};
    app.require_subcommand(1);

    CommonOpts eval_opts, ghost_opts, class_opts, apply_opts, split_opts, euler_opts, trunc_opts;
    std::string eval_expr, ghost_expr, trunc_expr, class_matrix, apply_op, apply_target;
    std::string split_matrix, split_witt, euler_complex;
    long split_rank = 0;
    int ghost_depth = 8, trunc_depth = 8;
    long oracle_field = 2;
    int oracle_maxdim = 2;
    bool oracle_allow_slow = false;
    std::uint64_t seed_flag = 0;

    CLI::App* c_eval = app.add_subcommand("eval", "evaluate a Witt/class expression");
    add_common(c_eval, eval_opts);
    c_eval->add_option("expr", eval_expr, "expression")->required();

    CLI::App* c_ghost = app.add_subcommand("ghost", "ghost components of a Witt element");
    add_common(c_ghost, ghost_opts);
    c_ghost->add_option("--depth", ghost_depth, "number of components")->check(CLI::Range(1, 64))->default_val(8);
    c_ghost->add_option("expr", ghost_expr, "expression")->required();

    CLI::App* c_class = app.add_subcommand("class", "Almkvist class of an endomorphism matrix");
    add_common(c_class, class_opts);
    c_class->add_option("--matrix", class_matrix, "square matrix literal")->required();

    CLI::App* c_apply = app.add_subcommand("apply", "apply a natural operation to an endomorphism");
    add_common(c_apply, apply_opts);
    c_apply->add_option("--op", apply_op, "operation: id | frob n | ver n | [[..t..]] | add/sub combos")->required();
    c_apply->add_option("--target", apply_target, "square matrix literal")->required();

    CLI::App* c_split = app.add_subcommand("split", "split a class into rank and Witt parts");
    add_common(c_split, split_opts);
    c_split->add_option("--matrix", split_matrix, "square matrix literal");
    c_split->add_option("--rank", split_rank, "rank of an explicit class");
    c_split->add_option("--witt", split_witt, "Witt part of an explicit class");

    CLI::App* c_euler = app.add_subcommand("euler", "Euler class of a complex with endomorphism");
    add_common(c_euler, euler_opts);
    c_euler->add_option("--complex", euler_complex, "(lowest, [(rank, diff, endo), ...])")->required();

    CLI::App* c_oracle = app.add_subcommand("oracle", "presentation oracle over a small finite field");
    c_oracle->add_option("--field", oracle_field, "field size q")->check(CLI::IsMember({2, 3}))->required();
    c_oracle->add_option("--maxdim", oracle_maxdim, "dimension budget d")->check(CLI::Range(1, 3))->required();
    c_oracle->add_flag("--allow-slow", oracle_allow_slow, "unlock the exponential (q=2, d=3) budget");

    CLI::App* c_trunc = app.add_subcommand("truncate", "truncated big Witt coordinates of an element");
    add_common(c_trunc, trunc_opts);
    c_trunc->add_option("--depth", trunc_depth, "truncation depth")->check(CLI::Range(1, 64))->default_val(8);
    c_trunc->add_option("expr", trunc_expr, "expression")->required();

    CLI::App* c_selftest = app.add_subcommand("selftest", "run the acceptance battery");
    CLI::Option* seed_opt = c_selftest->add_option("--seed", seed_flag, "override the trial seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (c_eval->parsed()) {
            SessionConfig cfg = make_config(eval_opts);
            std::cout << evaluate_to_text(eval_expr, cfg) << "\n";
        } else if (c_ghost->parsed()) {
            SessionConfig cfg = make_config(ghost_opts);
            EvalValue v = evaluate(parse_expression(ghost_expr), cfg);
            const WittFraction* w = std::get_if<WittFraction>(&v);
            if (w == nullptr) throw DomainError("ghost needs a Witt element");
            std::cout << render::values_row(ghost(ghost_depth, *w).components) << "\n";
        } else if (c_class->parsed()) {
            SessionConfig cfg = make_config(class_opts);
            Expr m = parse_expression(class_matrix);
            std::cout << render_value(class_of(lower_matrix(m, cfg.ring)), cfg.mode) << "\n";
        } else if (c_apply->parsed()) {
            SessionConfig cfg = make_config(apply_opts);
            OperationElement op = parse_operation(apply_op);
            Matrix target = lower_matrix(parse_expression(apply_target), cfg.ring);
            std::cout << render_value(apply_operation(op, target), cfg.mode) << "\n";
        } else if (c_split->parsed()) {
            SessionConfig cfg = make_config(split_opts);
            if (!split_matrix.empty() == !split_witt.empty())
                throw DomainError("split needs either --matrix or --rank/--witt");
            EndoClass c = class_zero(cfg.ring);
            if (split_matrix.empty()) {
                EvalValue v = evaluate(parse_expression(split_witt), cfg);
                const WittFraction* w = std::get_if<WittFraction>(&v);
                if (w == nullptr) throw DomainError("--witt must evaluate to a Witt element");
                c = EndoClass{Int(split_rank), *w};
            } else {
                c = class_of(lower_matrix(parse_expression(split_matrix), cfg.ring));
            }
            std::cout << render_split(c, cfg.mode) << "\n";
        } else if (c_euler->parsed()) {
            SessionConfig cfg = make_config(euler_opts);
            FreeComplexEndo c = parse_complex(euler_complex, cfg.ring);
            std::cout << render_value(c.euler_class(), cfg.mode) << "\n";
        } else if (c_oracle->parsed()) {
            if (oracle_field == 3 && oracle_maxdim == 3) {
                std::cerr << "error: (q=3, d=3) is outside the supported budget\n";
                return 2;
            }
            if (oracle_field == 2 && oracle_maxdim == 3) {
                if (!oracle_allow_slow) {
                    std::cerr << "error: (q=2, d=3) is exponential; pass --allow-slow to unlock it\n";
                    return 2;
                }
                std::cerr << "warning: (q=2, d=3) enumerates all similarity classes up to dimension 3; "
                             "expect a noticeably longer run\n";
            }
            std::cout << oracle_report(Int(oracle_field), oracle_maxdim, oracle_allow_slow);
        } else if (c_selftest->parsed()) {
            std::uint64_t seed = selftest_seed_from_env(kDefaultSelftestSeed);
            if (seed_opt->count() > 0) seed = seed_flag;
            std::vector<CheckResult> results = run_acceptance_battery(seed);
            std::cout << "selftest seed " << seed << "\n" << format_battery_report(results);
            for (const CheckResult& r : results) {
                if (!r.pass) {
                    std::cout << "selftest: FAIL\n";
                    return 3;
                }
            }
            std::cout << "selftest: PASS\n";
        }
        return 0;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
