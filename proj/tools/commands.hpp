#pragma once

/**
 * @file commands.hpp
 * @brief The greenring subcommands as functions returning an OutputRecord.
 *
 * Output is deterministic: JSON objects keep sorted keys, basis classes
 * are listed l-major then i, and floating values are rounded to 12 digits.
 */

#include "taft/selfcheck.hpp"

#include <json.hpp>

#include <cctype>
#include <cmath>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace taft::cli {

inline constexpr const char* kVersion = "0.1.0";

using json = nlohmann::json;

/// Bad input from the command line; maps to exit status 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct OutputRecord {
    json meta;
    json payload;
    json checks = json::array();
    std::vector<std::string> csv_header;
    std::vector<std::vector<std::string>> csv_rows;

    void add_check(const std::string& name, bool pass) { checks.push_back({{"name", name}, {"pass", pass}}); }

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.at("pass").get<bool>()) return false;
        return true;
    }

    std::string to_json() const { return json{{"meta", meta}, {"payload", payload}, {"checks", checks}}.dump(2) + "\n"; }

    std::string to_csv() const {
        std::ostringstream os;
        auto row = [&](const std::vector<std::string>& cells) {
            for (std::size_t i = 0; i < cells.size(); ++i) {
                if (i) os << ',';
                os << csv_escape(cells[i]);
            }
            os << '\n';
        };
        row(csv_header);
        for (const auto& r : csv_rows) row(r);
        return os.str();
    }

    static std::string csv_escape(const std::string& s) {
        if (s.find_first_of(",\"\n") == std::string::npos) return s;
        std::string out = "\"";
        for (char c : s) {
            if (c == '"') out += '"';
            out += c;
        }
        return out + "\"";
    }
};

inline TaftParams make_params(int n, int d) {
    if (n < 2 || d < 2) throw UsageError("need n >= 2 and d >= 2 (got n=" + std::to_string(n) + ", d=" + std::to_string(d) + ")");
    if (n % d != 0) throw UsageError("d must divide n (got n=" + std::to_string(n) + ", d=" + std::to_string(d) + ")");
    return TaftParams(n, d);
}

inline OutputRecord make_record(const std::string& command, const TaftParams& p) {
    OutputRecord r;
    r.meta = {{"command", command}, {"n", p.n}, {"d", p.d}, {"version", kVersion}};
    return r;
}

inline double round12(double x) {
    const double r = std::round(x * 1e12) / 1e12;
    return r == 0.0 ? 0.0 : r;
}

inline json complex_json(Complex c) { return json::array({round12(c.real()), round12(c.imag())}); }

inline std::string complex_str(Complex c) {
    std::ostringstream os;
    os.precision(12);
    os << round12(c.real()) << (round12(c.imag()) < 0 ? "-" : "+") << std::abs(round12(c.imag())) << "i";
    return os.str();
}

inline json element_terms(const GreenElement& a) {
    json out = json::array();
    for (const auto& [idx, c] : a.coeffs()) out.push_back({{"index", idx.str()}, {"l", idx.l}, {"i", idx.i}, {"coeff", c}});
    return out;
}

/// Parses "M(l,i)" combinations such as "2*M(1,0) - M(2,-1) + 3".
inline GreenElement parse_element(const TaftParams& p, const std::string& text) {
    std::size_t pos = 0;
    auto fail = [&](const std::string& why) -> UsageError {
        return UsageError("cannot parse operand '" + text + "' at position " + std::to_string(pos) + ": " + why);
    };
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto integer = [&](bool allow_sign) -> std::optional<long long> {
        skip();
        const std::size_t start = pos;
        if (allow_sign && pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        const std::size_t digits = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == digits) {
            pos = start;
            return std::nullopt;
        }
        try {
            return std::stoll(text.substr(start, pos - start));
        } catch (const std::out_of_range&) {
            throw fail("integer out of range");
        }
    };
    auto expect = [&](char c) {
        skip();
        if (pos >= text.size() || text[pos] != c) throw fail(std::string("expected '") + c + "'");
        ++pos;
    };

    GreenElement out(p);
    bool first = true;
    skip();
    if (pos == text.size()) throw fail("empty operand");
    while (true) {
        skip();
        if (pos == text.size()) break;
        long long sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (!first) {
            throw fail("expected '+' or '-'");
        }
        first = false;
        const auto coeff = integer(false);
        skip();
        bool star = false;
        if (pos < text.size() && text[pos] == '*') {
            if (!coeff) throw fail("'*' without a coefficient");
            star = true;
            ++pos;
            skip();
        }
        if (pos < text.size() && text[pos] == 'M') {
            ++pos;
            expect('(');
            const auto l = integer(true);
            if (!l) throw fail("expected length l");
            expect(',');
            const auto i = integer(true);
            if (!i) throw fail("expected index i");
            expect(')');
            if (*l < 1 || *l > p.d) throw fail("length l must lie in 1..d");
            out.add(IndexPair(p, static_cast<int>(*l), *i), sign * coeff.value_or(1));
        } else if (coeff && !star) {
            out.add(IndexPair(p, 1, 0), sign * *coeff);
        } else {
            throw fail("expected a coefficient or M(l,i)");
        }
    }
    return out;
}

inline MultiplyPath parse_path(const std::string& s, bool& both) {
    both = s == "both";
    if (s == "poly" || both) return MultiplyPath::poly;
    if (s == "oracle") return MultiplyPath::oracle;
    throw UsageError("--path must be poly, oracle or both");
}

inline OutputRecord cmd_present(const TaftParams& p) {
    OutputRecord r = make_record("present", p);
    const GreenPresentation& pres = presentation(p);
    const std::string cyclic = (BivarPoly::monomial(1, p.n, 0) - BivarPoly::constant(1)).str();
    r.csv_header = {"ring", "relation", "z_degree_bound"};
    for (IdealKind kind : {IdealKind::green, IdealKind::projective, IdealKind::stable}) {
        const std::string rel = pres.relation(kind).str();
        r.payload[to_string(kind)] = {{"relations", json::array({cyclic, rel})}, {"z_degree_bound", z_bound(p, kind)}};
        r.csv_rows.push_back({to_string(kind), cyclic, std::to_string(z_bound(p, kind))});
        r.csv_rows.push_back({to_string(kind), rel, std::to_string(z_bound(p, kind))});
    }
    r.payload["fib_d"] = pres.fib_in_y_power(p.d).str();
    r.add_check("relations_monic_in_z",
                pres.relation(IdealKind::green).monic_in_z() && pres.relation(IdealKind::projective).monic_in_z() &&
                    pres.relation(IdealKind::stable).monic_in_z());
    return r;
}

inline OutputRecord cmd_mult(const TaftParams& p, const std::string& lhs, const std::string& rhs, const std::string& path_name) {
    OutputRecord r = make_record("mult", p);
    bool both = false;
    const MultiplyPath path = parse_path(path_name, both);
    const GreenElement a = parse_element(p, lhs);
    const GreenElement b = parse_element(p, rhs);
    if ((path == MultiplyPath::oracle || both) && (!a.is_module() || !b.is_module()))
        throw UsageError("the oracle path needs operands with non-negative coefficients");
    const GreenElement prod = multiply(a, b, path);
    r.payload = {{"lhs", a.str()}, {"rhs", b.str()}, {"product", prod.str()}, {"terms", element_terms(prod)},
                 {"path", path_name}};
    if (both) r.add_check("paths_agree", prod == multiply(a, b, MultiplyPath::oracle));
    r.csv_header = {"index", "coeff"};
    for (const auto& [idx, c] : prod.coeffs()) r.csv_rows.push_back({idx.str(), std::to_string(c)});
    return r;
}

inline OutputRecord cmd_table(const TaftParams& p) {
    OutputRecord r = make_record("table", p);
    json cells = json::array();
    r.csv_header = {"lhs", "rhs", "product", "agree"};
    bool all = true;
    for (const auto& a : basis_indices(p))
        for (const auto& b : basis_indices(p)) {
            const GreenElement x = GreenElement::basis(p, a.l, a.i);
            const GreenElement y = GreenElement::basis(p, b.l, b.i);
            const GreenElement prod = multiply(x, y, MultiplyPath::poly);
            const bool agree = prod == multiply(x, y, MultiplyPath::oracle);
            all = all && agree;
            cells.push_back({{"lhs", a.str()}, {"rhs", b.str()}, {"product", prod.str()}, {"agree", agree}});
            r.csv_rows.push_back({a.str(), b.str(), prod.str(), agree ? "pass" : "fail"});
        }
    r.payload = {{"basis_size", p.rank()}, {"cells", cells}};
    r.add_check("all_cells_agree", all);
    return r;
}

inline OutputRecord cmd_radical(const TaftParams& p) {
    OutputRecord r = make_record("radical", p);
    const auto basis = radical_basis(p);
    json list = json::array();
    r.csv_header = {"element"};
    for (const auto& e : basis) {
        list.push_back(e.str());
        r.csv_rows.push_back({e.str()});
    }
    bool square_zero = true;
    for (const auto& a : basis)
        for (const auto& b : basis) square_zero = square_zero && multiply(a, b).is_zero();
    const GreenElement gen =
        multiply(GreenElement::basis(p, 1, p.m()) - GreenElement::unit(p), GreenElement::basis(p, p.d, 0));
    r.payload = {{"basis", list}, {"rank", basis.size()}, {"generator", gen.str()}};
    r.add_check("rank_is_n_minus_m", static_cast<int>(basis.size()) == p.n - p.m());
    r.add_check("radical_squares_to_zero", square_zero);
    r.add_check("principal_generator", radical_generator_check(p));
    return r;
}

inline OutputRecord cmd_spectrum(const TaftParams& p) {
    OutputRecord r = make_record("spectrum", p);
    const auto sols = solve_system(p);
    json points = json::array();
    r.csv_header = {"k", "j", "lambda", "mu"};
    for (const auto& s : sols) {
        points.push_back({{"k", s.k}, {"j", s.j ? json(*s.j) : json(nullptr)}, {"lambda", complex_json(s.lambda)},
                          {"mu", complex_json(s.mu)}});
        r.csv_rows.push_back({std::to_string(s.k), s.j ? std::to_string(*s.j) : "", complex_str(s.lambda), complex_str(s.mu)});
    }
    const BlockCensus c = block_census(p);
    const auto irr = irreducibles(p);
    const auto two = two_dim_indecomposables(p);
    double worst = 0.0;
    for (const auto* list : {&irr, &two})
        for (const auto& cls : *list) worst = std::max(worst, green_relation_residual(p, cls.y, cls.z).max());
    r.payload = {{"points", points},
                 {"count", sols.size()},
                 {"irreducibles", irr.size()},
                 {"two_dim_indecomposables", two.size()},
                 {"block_census", {{"total", c.total}, {"dim1_blocks", c.dim1_blocks}, {"dim2_blocks", c.dim2_blocks}}}};
    r.add_check("count_is_nd_minus_n_plus_m", static_cast<int>(sols.size()) == p.n * p.d - p.n + p.m());
    r.add_check("census_consistent", c.consistent);
    r.add_check("relations_vanish", worst <= kRelationTolerance);
    return r;
}

/// Runs the criteria on the grid; meta n and d are omitted (grid-wide).
inline OutputRecord cmd_selfcheck(const std::vector<TaftParams>& grid, bool inject_fault) {
    if (grid.empty()) throw UsageError("selfcheck: no valid (n,d) pair in the grid");
    OutputRecord r;
    r.meta = {{"command", "selfcheck"}, {"version", kVersion}};
    SelfcheckOptions opt;
    opt.grid = grid;
    opt.recurrence_sign = inject_fault ? 1 : -1;
    json criteria = json::array();
    json grid_json = json::array();
    for (const auto& p : grid) grid_json.push_back({p.n, p.d});
    int passed = 0;
    r.csv_header = {"id", "name", "pass", "detail"};
    for (const auto& c : run_selfcheck(opt)) {
        criteria.push_back({{"id", c.id}, {"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        r.csv_rows.push_back({std::to_string(c.id), c.name, c.pass ? "pass" : "fail", c.detail});
        r.add_check(c.name, c.pass);
        if (c.pass) ++passed;
    }
    const int total = static_cast<int>(criteria.size());
    r.payload = {{"grid", grid_json},
                 {"criteria", criteria},
                 {"inject_fault", inject_fault},
                 {"summary", {{"passed", passed}, {"failed", total - passed}}}};
    return r;
}

/// "4:2,6:3" -> pairs; pairs with d not dividing n are skipped.
inline std::vector<TaftParams> parse_grid(const std::string& text) {
    std::vector<TaftParams> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos) throw UsageError("grid entries must look like N:D, got '" + item + "'");
        int n = 0;
        int d = 0;
        try {
            n = std::stoi(item.substr(0, colon));
            d = std::stoi(item.substr(colon + 1));
        } catch (const std::exception&) {
            throw UsageError("grid entries must look like N:D, got '" + item + "'");
        }
        if (n >= 2 && d >= 2 && n % d == 0) out.emplace_back(n, d);
    }
    return out;
}

/// Cartesian product of the n and d lists, keeping pairs with d | n.
inline std::vector<TaftParams> product_grid(const std::vector<int>& ns, const std::vector<int>& ds) {
    std::vector<TaftParams> out;
    for (int n : ns)
        for (int d : ds)
            if (n >= 2 && d >= 2 && n % d == 0) out.emplace_back(n, d);
    return out;
}

}  // namespace taft::cli
