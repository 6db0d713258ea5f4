#include "composita/cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "composita/composita.hpp"
#include "composita/errors.hpp"
#include "composita/gfexpr.hpp"
#include "composita/serialize.hpp"
#include "composita/verify.hpp"

namespace composita {

namespace {

const std::map<std::string, OutputFormat> kFormats{
    {"text", OutputFormat::text}, {"json", OutputFormat::json}, {"csv", OutputFormat::csv}};

std::string display(const XPoly& p) { return p.is_zero() ? "0" : p.to_string(); }

std::pair<std::string, Rational> parse_binding(const std::string& text) {
    const auto eq = text.find('=');
    if (eq == std::string::npos || eq == 0) throw ArgumentError("--param expects key=value, got '" + text + "'");
    return {text.substr(0, eq), Rational::parse(text.substr(eq + 1))};
}

void append_poly_csv(std::string& out, const std::string& prefix, const XPoly& p, std::size_t width = 0) {
    const auto coeffs = dense_coefficients(p, width);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        out += prefix + std::to_string(i) + "," + coeffs[i].to_string() + "\n";
    }
}

struct Column {
    std::string name;
    std::vector<XPoly> rows;
};

std::vector<Column> family_columns(const FamilySpec& spec, const FamilyRequest& request) {
    const auto closed = [&](int variant) {
        return Column{"closed" + std::to_string(variant), family_closed_table(spec, variant, request.max_n, request.formula)};
    };
    const auto reference = [&]() -> std::optional<Column> {
        auto table = family_reference_table(spec, request.max_n);
        if (!table) return std::nullopt;
        return Column{"reference", std::move(*table)};
    };
    const int variants = family_variant_count(spec.family);

    if (request.mode == "closed1" || request.mode == "closed2") {
        const int variant = request.mode.back() - '0';
        if (variant > variants) throw ArgumentError(request.name + " has no closed formula variant 2");
        return {closed(variant)};
    }
    if (request.mode == "oracle") return {Column{"oracle", family_oracle_table(spec, request.max_n)}};
    if (request.mode == "reference") {
        auto ref = reference();
        if (!ref) throw ArgumentError(request.name + " has no classical reference");
        return {std::move(*ref)};
    }
    if (request.mode == "all") {
        std::vector<Column> cols;
        for (int v = 1; v <= variants; ++v) cols.push_back(closed(v));
        cols.push_back(Column{"oracle", family_oracle_table(spec, request.max_n)});
        if (auto ref = reference()) cols.push_back(std::move(*ref));
        return cols;
    }
    throw ArgumentError("unknown mode '" + request.mode + "'");
}

std::vector<std::pair<long, std::string>> read_bfile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ArgumentError("cannot read b-file '" + path + "'");
    std::vector<std::pair<long, std::string>> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream fields(line);
        long index = 0;
        std::string value;
        if (!(fields >> index >> value)) {
            throw ArgumentError("b-file '" + path + "' line " + std::to_string(line_no) + ": expected 'index value'");
        }
        out.emplace_back(index, value);
    }
    return out;
}

}  // namespace

std::vector<Rational> bfile_sequence(const std::vector<XPoly>& rows) {
    std::vector<Rational> out;
    for (std::size_t n = 0; n < rows.size(); ++n) {
        const auto coeffs = dense_coefficients(rows[n], n + 1);
        out.insert(out.end(), coeffs.begin(), coeffs.end());
    }
    return out;
}

CliResult cmd_expand(const std::string& expr, std::size_t order, OutputFormat format) {
    const Series s = evaluate_gf(expr, order);
    CliResult result;
    switch (format) {
        case OutputFormat::json: result.out = json_text(to_json(s)); break;
        case OutputFormat::csv:
            result.out = "n,power,coefficient\n";
            for (std::size_t n = 0; n <= order; ++n) append_poly_csv(result.out, std::to_string(n) + ",", s[n]);
            break;
        case OutputFormat::text:
            for (std::size_t n = 0; n <= order; ++n) result.out += "t^" + std::to_string(n) + ": " + display(s[n]) + "\n";
            break;
    }
    return result;
}

CliResult cmd_triangle(const std::string& expr, std::size_t rows, OutputFormat format) {
    if (rows < 1) throw ArgumentError("--rows must be at least 1");
    const Composita c = composita_from_powers(evaluate_gf(expr, rows), rows);
    CliResult result;
    switch (format) {
        case OutputFormat::json: result.out = json_text(to_json(c)); break;
        case OutputFormat::csv:
            result.out = "n,k,power,coefficient\n";
            for (std::size_t n = 1; n <= rows; ++n) {
                for (std::size_t k = 1; k <= n; ++k) {
                    append_poly_csv(result.out, std::to_string(n) + "," + std::to_string(k) + ",", c.at(n, k));
                }
            }
            break;
        case OutputFormat::text: {
            std::vector<std::vector<std::string>> table;
            for (std::size_t n = 1; n <= rows; ++n) {
                std::vector<std::string> line;
                for (const auto& entry : c.row(n)) line.push_back(display(entry));
                table.push_back(std::move(line));
            }
            result.out = aligned_table(table);
            break;
        }
    }
    return result;
}

CliResult cmd_family(const FamilyRequest& request) {
    const FamilySpec spec = make_family_spec(family_from_name(request.name), request.params);
    const auto columns = family_columns(spec, request);
    const Column* oracle = nullptr;
    for (const auto& col : columns) {
        if (col.name == "oracle") oracle = &col;
    }
    const bool compare_all = request.mode == "all";
    std::vector<bool> row_ok(request.max_n + 1, true);
    if (compare_all) {
        for (const auto& col : columns) {
            for (std::size_t n = 0; n <= request.max_n; ++n) {
                if (!(col.rows[n] == oracle->rows[n])) row_ok[n] = false;
            }
        }
    }

    CliResult result;
    switch (request.format) {
        case OutputFormat::json: {
            Json params = Json::object();
            for (const auto& [k, v] : spec.params) params[k] = to_json(v);
            Json names = Json::array();
            for (const auto& col : columns) names.push_back(col.name);
            Json rows = Json::array();
            for (std::size_t n = 0; n <= request.max_n; ++n) {
                Json row{{"n", n}};
                for (const auto& col : columns) row[col.name] = to_json(col.rows[n]);
                if (compare_all) row["match"] = static_cast<bool>(row_ok[n]);
                rows.push_back(std::move(row));
            }
            result.out = json_text(Json{{"family", request.name},
                                        {"params", std::move(params)},
                                        {"egf", spec.egf},
                                        {"formula", request.formula == FormulaMode::printed ? "printed" : "corrected"},
                                        {"max_n", request.max_n},
                                        {"columns", std::move(names)},
                                        {"rows", std::move(rows)}});
            break;
        }
        case OutputFormat::csv:
            result.out = compare_all ? "n,source,power,coefficient\n" : "n,power,coefficient\n";
            for (std::size_t n = 0; n <= request.max_n; ++n) {
                for (const auto& col : columns) {
                    const std::string prefix = std::to_string(n) + "," + (compare_all ? col.name + "," : "");
                    append_poly_csv(result.out, prefix, col.rows[n], n + 1);
                }
            }
            break;
        case OutputFormat::text: {
            std::vector<std::vector<std::string>> table;
            std::vector<std::string> header{"n"};
            for (const auto& col : columns) header.push_back(col.name);
            if (compare_all) header.emplace_back("check");
            table.push_back(std::move(header));
            for (std::size_t n = 0; n <= request.max_n; ++n) {
                std::vector<std::string> line{std::to_string(n)};
                for (const auto& col : columns) line.push_back(display(col.rows[n]));
                if (compare_all) line.emplace_back(row_ok[n] ? "ok" : "MISMATCH");
                table.push_back(std::move(line));
            }
            result.out = aligned_table(table);
            break;
        }
    }
    for (bool ok : row_ok) {
        if (!ok) result.exit_code = kExitMismatch;
    }

    if (request.bfile || request.compare) {
        const auto& source = oracle != nullptr ? *oracle : columns.front();
        const auto seq = bfile_sequence(source.rows);
        if (request.bfile) {
            std::ofstream out(*request.bfile);
            if (!out) throw ArgumentError("cannot write b-file '" + *request.bfile + "'");
            for (std::size_t i = 0; i < seq.size(); ++i) out << i << ' ' << seq[i].to_string() << '\n';
        }
        if (request.compare) {
            const auto expected = read_bfile(*request.compare);
            std::size_t compared = 0;
            std::string verdict = "match";
            for (const auto& [index, value] : expected) {
                if (index < 0 || static_cast<std::size_t>(index) >= seq.size()) continue;
                ++compared;
                const auto& ours = seq[static_cast<std::size_t>(index)];
                if (ours.to_string() != Rational::parse(value).to_string()) {
                    verdict = "mismatch at index " + std::to_string(index) + ": b-file has " + value + ", computed " +
                              ours.to_string();
                    result.exit_code = kExitMismatch;
                    break;
                }
            }
            result.err += "b-file comparison (" + source.name + ", " + std::to_string(compared) + " terms): " + verdict + "\n";
        }
    }
    return result;
}

CliResult cmd_verify(std::size_t max_n, const std::vector<std::string>& families,
                     const std::map<std::string, Rational>& params, OutputFormat format) {
    if (max_n < 1) throw ArgumentError("--maxN must be at least 1 for verify");
    std::vector<FamilySpec> specs;
    std::vector<Family> selected;
    if (families.empty()) {
        selected.assign(std::begin(kAllFamilies), std::end(kAllFamilies));
    } else {
        for (const auto& name : families) selected.push_back(family_from_name(name));
    }
    for (const auto& [key, value] : params) {
        bool used = false;
        for (Family f : selected) {
            for (auto p : family_params(f)) used = used || p == key;
        }
        if (!used) throw ArgumentError("no selected family takes parameter '" + key + "'");
    }
    for (Family f : selected) {
        FamilySpec spec = default_family_spec(f);
        for (const auto& [key, value] : params) {
            if (spec.params.count(key) != 0) spec.params[key] = value;
        }
        specs.push_back(make_family_spec(f, spec.params));
    }

    const auto verdicts = verify_families(specs, max_n);
    CliResult result;
    result.exit_code = verification_passed(verdicts) ? kExitOk : kExitMismatch;
    switch (format) {
        case OutputFormat::json: result.out = json_text(to_json(verdicts)); break;
        case OutputFormat::csv:
            result.out = "family,variant,max_n,status,first_mismatch,note\n";
            for (const auto& v : verdicts) {
                result.out += std::string(family_name(v.family)) + "," + std::to_string(v.variant) + "," +
                              std::to_string(v.max_n) + "," + std::string(verdict_status_name(v.status)) + "," +
                              (v.first_mismatch ? std::to_string(*v.first_mismatch) : "") + "," + csv_field(v.note) +
                              "\n";
            }
            break;
        case OutputFormat::text: {
            std::vector<std::vector<std::string>> table{{"family", "variant", "max_n", "status", "first_mismatch", "note"}};
            std::size_t counts[3] = {0, 0, 0};
            for (const auto& v : verdicts) {
                ++counts[static_cast<int>(v.status)];
                table.push_back({std::string(family_name(v.family)), std::to_string(v.variant), std::to_string(v.max_n),
                                 std::string(verdict_status_name(v.status)),
                                 v.first_mismatch ? std::to_string(*v.first_mismatch) : "-", v.note});
            }
            result.out = aligned_table(table);
            result.out += std::to_string(specs.size()) + " families, " + std::to_string(verdicts.size()) +
                          " verdicts: " + std::to_string(counts[0]) + " match, " + std::to_string(counts[2]) +
                          " corrected-match, " + std::to_string(counts[1]) + " mismatch\n";
            break;
        }
    }
    return result;
}

CliResult run_cli(const std::vector<std::string>& args) {
    CLI::App app{"Exact composita calculus and polynomial family verification"};
    app.name("composita");
    app.require_subcommand(1);

    OutputFormat format = OutputFormat::text;
    const auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format: text, json or csv")
            ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
    };
    std::vector<std::string> bindings;
    const auto add_params = [&](CLI::App* sub) {
        sub->add_option("--param", bindings, "Parameter binding key=value (rational), repeatable");
    };

    std::string expr;
    std::size_t order = 10;
    auto* expand = app.add_subcommand("expand", "Print the coefficients of t^0..t^order of an expression");
    expand->add_option("expr", expr, "Generating function in t and x, e.g. \"1/(1 - 2*x*t + t^2)\"")->required();
    expand->add_option("--order", order, "Highest power of t")->capture_default_str();
    add_format(expand);

    std::size_t rows = 7;
    auto* triangle = app.add_subcommand("triangle", "Print the composita triangle F(n,k), 1 <= k <= n <= rows");
    triangle->add_option("expr", expr, "Generating function with zero constant term")->required();
    triangle->add_option("--rows", rows, "Number of rows")->capture_default_str();
    add_format(triangle);

    FamilyRequest request;
    std::string formula = "corrected";
    auto* family = app.add_subcommand("family", "Tabulate P_0..P_maxN of a polynomial family");
    family->add_option("name", request.name, "Family name, e.g. chebyshev_t, abel, peters")->required();
    family->add_option("--maxN", request.max_n, "Largest n")->capture_default_str();
    family->add_option("--mode", request.mode, "closed1, closed2, oracle, reference or all")
        ->check(CLI::IsMember({"closed1", "closed2", "oracle", "reference", "all"}))
        ->capture_default_str();
    family->add_option("--formula", formula, "Closed formula as printed or with ledger fixes (corrected)")
        ->check(CLI::IsMember({"printed", "corrected"}))
        ->capture_default_str();
    family->add_option("--bfile", request.bfile,
                       "Write the coefficient triangle as an OEIS b-file: rows n = 0..maxN, each read from x^0 up to "
                       "x^n, indexed from 0");
    family->add_option("--compare", request.compare,
                       "Compare against a b-file (\"index value\" lines) in the same reading order");
    add_params(family);
    add_format(family);

    std::size_t verify_max_n = 12;
    std::vector<std::string> filter;
    auto* verify = app.add_subcommand("verify", "Check closed formulas against the generating functions");
    verify->add_option("--maxN", verify_max_n, "Largest n checked")->capture_default_str();
    verify->add_option("--families", filter, "Comma-separated subset of families")->delimiter(',');
    add_params(verify);
    add_format(verify);

    std::vector<std::string> argv_storage{"composita"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_storage) argv.push_back(a.data());

    CliResult result;
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        std::ostringstream out;
        std::ostringstream err;
        const int code = app.exit(e, out, err);
        result.out = out.str();
        result.err = err.str();
        result.exit_code = code == 0 ? kExitOk : kExitUsage;
        return result;
    }

    try {
        std::map<std::string, Rational> params;
        for (const auto& b : bindings) {
            auto [key, value] = parse_binding(b);
            if (!params.emplace(key, value).second) throw ArgumentError("parameter '" + key + "' given twice");
        }
        if (expand->parsed()) return cmd_expand(expr, order, format);
        if (triangle->parsed()) return cmd_triangle(expr, rows, format);
        if (family->parsed()) {
            request.params = params;
            request.format = format;
            request.formula = formula == "printed" ? FormulaMode::printed : FormulaMode::corrected;
            return cmd_family(request);
        }
        return cmd_verify(verify_max_n, filter, params, format);
    } catch (const ParseError& e) {
        result = {kExitUsage, "", std::string("parse error: ") + e.what() + "\n"};
    } catch (const ArgumentError& e) {
        result = {kExitUsage, "", std::string("usage error: ") + e.what() + "\n"};
    } catch (const DomainError& e) {
        result = {kExitDomain, "", std::string("domain error: ") + e.what() + "\n"};
    } catch (const ArithmeticError& e) {
        result = {kExitDomain, "", std::string("arithmetic error: ") + e.what() + "\n"};
    }
    return result;
}

}  // namespace composita
