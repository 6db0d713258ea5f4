#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "composita/families.hpp"
#include "composita/rational.hpp"

namespace composita {

enum class OutputFormat { text, json, csv };

// Exit codes
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;  // also parse errors
inline constexpr int kExitDomain = 3;

struct CliResult {
    int exit_code = kExitOk;
    std::string out;
    std::string err;
};

struct FamilyRequest {
    std::string name;
    std::map<std::string, Rational> params;
    std::size_t max_n = 6;
    std::string mode = "closed1";  // closed1 | closed2 | oracle | reference | all
    FormulaMode formula = FormulaMode::corrected;
    OutputFormat format = OutputFormat::text;
    std::optional<std::string> bfile;    // write "index value" lines here
    std::optional<std::string> compare;  // check against this b-file
};

// The command functions throw ParseError, ArgumentError and DomainError;
// run_cli maps them to exit codes.
CliResult cmd_expand(const std::string& expr, std::size_t order, OutputFormat format);
CliResult cmd_triangle(const std::string& expr, std::size_t rows, OutputFormat format);
CliResult cmd_family(const FamilyRequest& request);
CliResult cmd_verify(std::size_t max_n, const std::vector<std::string>& families,
                     const std::map<std::string, Rational>& params, OutputFormat format);

/// Coefficient triangle read row by row, lowest power of x first, with rows
/// padded to n + 1 entries.
std::vector<Rational> bfile_sequence(const std::vector<XPoly>& rows);

/// Full command line, args excluding the program name.
CliResult run_cli(const std::vector<std::string>& args);

}  // namespace composita
