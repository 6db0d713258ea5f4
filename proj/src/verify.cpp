#include "composita/verify.hpp"

#include "composita/errors.hpp"

namespace composita {

namespace {

std::optional<std::size_t> first_difference(const std::vector<XPoly>& lhs, const std::vector<XPoly>& rhs) {
    for (std::size_t n = 0; n < lhs.size(); ++n) {
        if (!(lhs[n] == rhs[n])) return n;
    }
    return std::nullopt;
}

std::string ledger_note(const std::vector<Correction>& fixes) {
    std::string note;
    for (const auto& fix : fixes) {
        if (!note.empty()) note += "; ";
        note += fix.index_fixed;
    }
    return note;
}

}  // namespace

std::string_view verdict_status_name(VerdictStatus status) {
    switch (status) {
        case VerdictStatus::match: return "match";
        case VerdictStatus::mismatch: return "mismatch";
        case VerdictStatus::corrected_match: return "corrected-match";
    }
    return "mismatch";
}

std::vector<VerificationVerdict> verify_family(const FamilySpec& spec, std::size_t max_n) {
    if (max_n < 1) throw ArgumentError("verification needs max_n >= 1");

    const auto oracle = family_oracle_table(spec, max_n);
    const auto reference = family_reference_table(spec, max_n);
    std::optional<std::size_t> reference_gap;
    if (reference) reference_gap = first_difference(*reference, oracle);

    std::vector<VerificationVerdict> out;
    for (int variant = 1; variant <= family_variant_count(spec.family); ++variant) {
        VerificationVerdict verdict{spec.family, variant, max_n, VerdictStatus::match, std::nullopt, {}};
        const auto printed = family_closed_table(spec, variant, max_n, FormulaMode::printed);
        verdict.first_mismatch = first_difference(printed, oracle);

        if (verdict.first_mismatch) {
            const auto fixes = corrections_for(spec.family, variant);
            const auto corrected = family_closed_table(spec, variant, max_n, FormulaMode::corrected);
            if (!fixes.empty() && !first_difference(corrected, oracle)) {
                verdict.status = VerdictStatus::corrected_match;
                verdict.note = ledger_note(fixes);
            } else {
                verdict.status = VerdictStatus::mismatch;
                verdict.note = fixes.empty() ? "no documented correction" : "correction does not reconcile";
            }
        }

        if (reference_gap) {
            verdict.status = VerdictStatus::mismatch;
            if (!verdict.first_mismatch || *reference_gap < *verdict.first_mismatch) verdict.first_mismatch = reference_gap;
            if (!verdict.note.empty()) verdict.note += "; ";
            verdict.note += "reference disagrees with oracle";
        } else if (reference && verdict.status != VerdictStatus::mismatch) {
            if (!verdict.note.empty()) verdict.note += "; ";
            verdict.note += "reference agrees";
        }
        out.push_back(std::move(verdict));
    }
    return out;
}

std::vector<VerificationVerdict> verify_families(std::span<const FamilySpec> specs, std::size_t max_n) {
    if (max_n < 1) throw ArgumentError("verification needs max_n >= 1");
    std::vector<std::vector<VerificationVerdict>> parts(specs.size());
    const auto count = static_cast<long>(specs.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < count; ++i) {
        parts[static_cast<std::size_t>(i)] = verify_family(specs[static_cast<std::size_t>(i)], max_n);
    }
    std::vector<VerificationVerdict> out;
    for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
    return out;
}

bool verification_passed(std::span<const VerificationVerdict> verdicts) {
    for (const auto& v : verdicts) {
        if (v.status == VerdictStatus::mismatch) return false;
    }
    return true;
}

}  // namespace composita
