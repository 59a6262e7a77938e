#include "decindex/verify.hpp"

#include <string_view>
#include <utility>

#include "decindex/counting.hpp"
#include "decindex/decimal.hpp"
#include "decindex/oracle.hpp"

namespace decindex {

namespace {

std::string ratio(std::uint64_t ok, std::uint64_t total) {
    return std::to_string(ok) + "/" + std::to_string(total);
}

CheckResult level_counts(const VerifyOptions& opts) {
    oracle::OracleStream stream({opts.max_level, opts.mode});
    std::vector<std::uint64_t> counts(opts.max_level + 1, 0);
    while (stream.next()) ++counts[stream.current_level()];
    std::uint64_t ok = 0;
    std::string first_bad;
    for (std::uint64_t k = 0; k <= opts.max_level; ++k) {
        const Natural formula = opts.mode == Mode::strict ? strict_level_count(k) : level_count(k);
        if (formula == Natural{counts[k]}) {
            ++ok;
        } else if (first_bad.empty()) {
            first_bad = "; first mismatch at K=" + std::to_string(k);
        }
    }
    return {"level counts vs oracle (" + std::string(to_string(opts.mode)) + ")", ok == counts.size(),
            ratio(ok, counts.size()) + " levels" + first_bad};
}

CheckResult oracle_agreement(const VerifyOptions& opts) {
    oracle::OracleStream stream({opts.max_level, opts.mode});
    std::uint64_t n = 0;
    std::uint64_t ok = 0;
    std::string first_bad;
    while (auto t = stream.next()) {
        ++n;
        const Natural index{n};
        if (decode(index, opts.mode) == *t && encode(*t, opts.mode) == index) {
            ++ok;
        } else if (first_bad.empty()) {
            first_bad = "; first mismatch at index " + std::to_string(n);
        }
    }
    return {"decode/encode vs oracle (" + std::string(to_string(opts.mode)) + ", levels 0.." +
                std::to_string(opts.max_level) + ")",
            ok == n, ratio(ok, n) + " indices" + first_bad};
}

CheckResult round_trips(const VerifyOptions& opts) {
    std::uint64_t ok = 0;
    std::string first_bad;
    for (std::uint64_t n = 1; n <= opts.max_index; ++n) {
        const Natural index{n};
        const CanonicalTuple t = decode(index, opts.mode);
        bool good = encode(t, opts.mode) == index;
        if (good && opts.mode == Mode::strict) {
            // Value level: the rendered text must come back to the same index.
            good = encode_text(reconstruct(t), Mode::strict) == index;
        }
        if (good) {
            ++ok;
        } else if (first_bad.empty()) {
            first_bad = "; first failure at index " + std::to_string(n);
        }
    }
    return {std::string(opts.mode == Mode::strict ? "value" : "tuple") + " round trips 1.." +
                std::to_string(opts.max_index),
            ok == opts.max_index, ratio(ok, opts.max_index) + " round trips" + first_bad};
}

CheckResult reference_rows() {
    const std::pair<std::uint64_t, std::string_view> rows[] = {
        {1, "0"},       {2, "0.1"},        {3, "-0.1"},     {4, "1"},
        {5, "-1"},      {6, "0.2"},        {7, "-0.2"},     {8, "0.01"},
        {9, "-0.01"},   {10, "1.1"},       {11, "-1.1"},    {12, "2"},
        {13, "-2"},     {100, "1.0002"},   {1000, "2.00008"}, {10000, "0.00000000022"},
    };
    std::uint64_t ok = 0;
    std::string first_bad;
    for (const auto& [index, text] : rows) {
        if (decode_text(index) == text && encode_text(text) == Natural{index}) {
            ++ok;
        } else if (first_bad.empty()) {
            first_bad = "; first failure at index " + std::to_string(index);
        }
    }
    // The published 500000 row is display-truncated; check level and prefix.
    const std::uint64_t total = std::size(rows) + 1;
    const std::string big = decode_text(500000);
    const std::string expected = "29." + std::string(81, '0') + "4";
    if (level_of_index(500000) == Natural{114} && big == expected && encode_text(big) == Natural{500000}) {
        ++ok;
    } else if (first_bad.empty()) {
        first_bad = "; index 500000 rendered " + big;
    }
    return {"published reference rows (paper)", ok == total, ratio(ok, total) + " rows" + first_bad};
}

CheckResult trailing_zero_collision() {
    const CanonicalTuple ten{Sign::positive, 0, 0, 10};
    const Natural index = encode(ten);
    const std::string text = reconstruct(ten);
    const Natural merged = encode_text(text);
    const bool collides = merged == Natural{2} && index != merged;
    return {"trailing-zero collision exhibit (paper)", collides,
            "index " + index.to_string() + " " + to_string(ten) + " renders \"" + text +
                "\", the same value as index " + merged.to_string() +
                "; paper mode is a bijection on tuples, not on values"};
}

CheckResult high_precision_exhibit() {
    constexpr std::string_view kText = "-47.0000000011";
    constexpr std::string_view kPublished = "443730799861852551";
    const CanonicalTuple t = canonicalize(parse_decimal(kText));
    const Natural by_formula = encode(t);
    const Natural by_oracle = oracle::oracle_index_of(t, {66, Mode::paper});
    const bool agree = by_formula == by_oracle && decode(by_formula) == t;
    return {"high-precision exhibit -47.0000000011 (paper)", agree,
            "formulas give " + by_formula.to_string() + ", oracle gives " + by_oracle.to_string() +
                "; published value " + std::string(kPublished) + " is INCONSISTENT with the formulas"};
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& opts) {
    std::vector<CheckResult> results;
    results.push_back(level_counts(opts));
    results.push_back(oracle_agreement(opts));
    results.push_back(round_trips(opts));
    if (opts.mode == Mode::paper) {
        results.push_back(reference_rows());
        results.push_back(trailing_zero_collision());
        results.push_back(high_precision_exhibit());
    }
    return results;
}

}  // namespace decindex
