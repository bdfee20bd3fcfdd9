// greenring: command-line front end.
//
//   greenring <command> --n N --d D [--path poly|oracle|both] [--format json|csv] [--out FILE]
//
// Exit status: 0 success, 1 check failure, 2 usage error.

#include "commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

struct Common {
    int n = 0;
    int d = 0;
    std::string format = "json";
    std::string out;
};

void add_common(CLI::App* cmd, Common& c, bool need_nd) {
    if (need_nd) {
        cmd->add_option("--n", c.n, "order of g")->required();
        cmd->add_option("--d", c.d, "nilpotency order of h (must divide n)")->required();
    }
    cmd->add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", c.out, "write output to FILE instead of stdout");
}

int emit(const taft::cli::OutputRecord& r, const Common& c) {
    const std::string text = c.format == "csv" ? r.to_csv() : r.to_json();
    if (c.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(c.out, std::ios::binary);
        if (!f) throw taft::cli::UsageError("cannot open output file " + c.out);
        f << text;
    }
    return r.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace taft::cli;
    CLI::App app{"Green ring calculator for the generalized Taft algebras H_{n,d}"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    Common present_opt, mult_opt, table_opt, radical_opt, spectrum_opt, self_opt;
    std::string path = "poly";
    std::string lhs;
    std::string rhs;
    std::vector<std::string> operands;
    std::string grid;
    std::vector<int> ns;
    std::vector<int> ds;
    bool inject = false;

    auto* present = app.add_subcommand("present", "print the green, projective and stable presentations");
    add_common(present, present_opt, true);

    auto* mult = app.add_subcommand("mult", "multiply two elements given as M(l,i) combinations");
    add_common(mult, mult_opt, true);
    mult->add_option("--path", path, "poly, oracle or both")->check(CLI::IsMember({"poly", "oracle", "both"}));
    mult->add_option("--lhs", lhs, "left operand");
    mult->add_option("--rhs", rhs, "right operand");
    mult->add_option("operands", operands, "LHS RHS (alternative to --lhs/--rhs)");

    auto* table = app.add_subcommand("table", "full multiplication table on the basis, both paths compared");
    add_common(table, table_opt, true);

    auto* radical = app.add_subcommand("radical", "radical basis and its certificates");
    add_common(radical, radical_opt, true);

    auto* spectrum = app.add_subcommand("spectrum", "solution set, irreducible counts and block census");
    add_common(spectrum, spectrum_opt, true);

    auto* self = app.add_subcommand("selfcheck", "run the consistency criteria over a grid of (n,d)");
    add_common(self, self_opt, false);
    self->add_option("--grid", grid, "comma-separated N:D pairs, e.g. 4:2,6:3");
    self->add_option("--n", ns, "list of n values (with --d: cartesian product)")->delimiter(',');
    self->add_option("--d", ds, "list of d values")->delimiter(',');
    self->add_flag("--inject-fault", inject, "flip the Fibonacci recurrence sign in the poly path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*present) return emit(cmd_present(make_params(present_opt.n, present_opt.d)), present_opt);
        if (*mult) {
            const auto p = make_params(mult_opt.n, mult_opt.d);
            std::vector<std::string> ops;
            if (!lhs.empty()) ops.push_back(lhs);
            for (const auto& o : operands) ops.push_back(o);
            if (!rhs.empty()) ops.push_back(rhs);
            if (ops.size() != 2) throw UsageError("mult needs exactly two operands");
            return emit(cmd_mult(p, ops[0], ops[1], path), mult_opt);
        }
        if (*table) return emit(cmd_table(make_params(table_opt.n, table_opt.d)), table_opt);
        if (*radical) return emit(cmd_radical(make_params(radical_opt.n, radical_opt.d)), radical_opt);
        if (*spectrum) return emit(cmd_spectrum(make_params(spectrum_opt.n, spectrum_opt.d)), spectrum_opt);
        if (*self) {
            std::vector<taft::TaftParams> g;
            if (!grid.empty()) {
                if (!ns.empty() || !ds.empty()) throw UsageError("use either --grid or --n/--d, not both");
                g = parse_grid(grid);
            } else if (!ns.empty() || !ds.empty()) {
                if (ns.empty() || ds.empty()) throw UsageError("--n and --d must be given together");
                g = product_grid(ns, ds);
            } else {
                g = taft::default_grid();
            }
            const OutputRecord r = cmd_selfcheck(g, inject);
            const int status = emit(r, self_opt);
            std::cerr << "selfcheck: " << r.payload["summary"]["passed"] << " passed, " << r.payload["summary"]["failed"]
                      << " failed\n";
            return status;
        }
    } catch (const UsageError& e) {
        std::cerr << "greenring: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "greenring: error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
