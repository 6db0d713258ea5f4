#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "composita/families.hpp"

namespace composita {

enum class VerdictStatus { match, mismatch, corrected_match };

std::string_view verdict_status_name(VerdictStatus status);

struct VerificationVerdict {
    Family family = Family::chebyshev_t;
    int variant = 1;
    std::size_t max_n = 0;
    VerdictStatus status = VerdictStatus::match;
    std::optional<std::size_t> first_mismatch;  // first n where the printed formula disagrees
    std::string note;

    bool operator==(const VerificationVerdict&) const = default;
};

/// One verdict per variant. The printed formula is compared with the oracle
/// first; on disagreement the corrected formula is tried and accepted only
/// when the ledger documents the fix. Where a reference exists it must agree
/// with the oracle too. Throws ArgumentError when max_n < 1.
std::vector<VerificationVerdict> verify_family(const FamilySpec& spec, std::size_t max_n);

/// Runs verify_family for each spec in parallel; verdicts keep input order.
std::vector<VerificationVerdict> verify_families(std::span<const FamilySpec> specs, std::size_t max_n);

/// True when every verdict is match or corrected-match.
bool verification_passed(std::span<const VerificationVerdict> verdicts);

}  // namespace composita
