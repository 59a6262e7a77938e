// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include <json.hpp>

#include "decindex/bijection.hpp"
#include "decindex/cli.hpp"
#include "decindex/counting.hpp"
#include "decindex/decimal.hpp"
#include "decindex/oracle.hpp"
#include "decindex/verify.hpp"

using namespace decindex;

namespace {

struct Outcome {
    bool passed = true;
    std::string detail;

    void expect(bool ok, const std::string& what) {
        if (!ok && passed) detail = what;
        passed = passed && ok;
    }
};

CanonicalTuple tup(int sign, std::uint64_t n1, std::uint64_t n2, std::uint64_t n3) {
    return {sign > 0 ? Sign::positive : Sign::negative, n1, n2, n3};
}

std::string run_cli(const std::vector<std::string>& args, int& code) {
    std::istringstream in;
    std::ostringstream out;
    std::ostringstream err;
    code = cli::run(args, in, out, err);
    return out.str();
}

std::string random_digits(std::mt19937_64& rng, std::size_t len) {
    std::string s(1, static_cast<char>('1' + rng() % 9));
    while (s.size() < len) s += static_cast<char>('0' + rng() % 10);
    return s;
}

Outcome enumeration_prefix() {
    Outcome o;
    struct Row {
        const char* value;
        CanonicalTuple tuple;
        std::uint64_t level;
    };
    // Integers render without ".0".
    const std::vector<Row> expected{
        {"0", tup(1, 0, 0, 0), 0},     {"0.1", tup(1, 0, 0, 1), 1},    {"-0.1", tup(-1, 0, 0, 1), 1},
        {"1", tup(1, 1, 0, 0), 1},     {"-1", tup(-1, 1, 0, 0), 1},    {"0.2", tup(1, 0, 0, 2), 2},
        {"-0.2", tup(-1, 0, 0, 2), 2}, {"0.01", tup(1, 0, 1, 1), 2},   {"-0.01", tup(-1, 0, 1, 1), 2},
        {"1.1", tup(1, 1, 0, 1), 2},   {"-1.1", tup(-1, 1, 0, 1), 2},  {"2", tup(1, 2, 0, 0), 2},
        {"-2", tup(-1, 2, 0, 0), 2},
    };
    int code = 0;
    std::istringstream lines(run_cli({"enumerate", "--from", "1", "--to", "13", "--json"}, code));
    o.expect(code == 0, "enumerate exit code " + std::to_string(code));
    std::uint64_t per_level[3] = {0, 0, 0};
    std::size_t i = 0;
    for (std::string line; std::getline(lines, line); ++i) {
        if (i >= expected.size()) {
            o.expect(false, "more than 13 rows");
            break;
        }
        const auto j = nlohmann::json::parse(line);
        const Row& row = expected[i];
        const std::string where = "row " + std::to_string(i + 1);
        o.expect(j["index"] == std::to_string(i + 1), where + " index");
        o.expect(j["value"] == row.value, where + " value");
        o.expect(j["sign"] == static_cast<int>(row.tuple.sign), where + " sign");
        o.expect(j["n1"] == row.tuple.n1.to_string() && j["n2"] == row.tuple.n2.to_string() &&
                     j["n3"] == row.tuple.n3.to_string(),
                 where + " tuple");
        o.expect(j["complexity"] == std::to_string(row.level), where + " complexity");
        ++per_level[row.level];
    }
    o.expect(i == expected.size(), "row count " + std::to_string(i));
    o.expect(per_level[0] == 1 && per_level[1] == 4 && per_level[2] == 8, "level block sizes");
    o.detail = o.passed ? "13/13 rows; blocks 1, 4, 8" : o.detail;
    return o;
}

Outcome formula_accuracy() {
    Outcome o;
    const std::uint64_t published[] = {4, 8, 14, 22, 32, 44, 58};
    for (std::uint64_t k = 1; k <= 7; ++k)
        o.expect(level_count(k) == Natural{published[k - 1]}, "published count at K=" + std::to_string(k));
    oracle::OracleStream stream({25, Mode::paper});
    std::vector<std::uint64_t> counts(26, 0);
    while (stream.next()) ++counts[stream.current_level()];
    for (std::uint64_t k = 0; k <= 25; ++k)
        o.expect(level_count(k) == Natural{counts[k]}, "oracle count at K=" + std::to_string(k));
    if (o.passed) o.detail = "K=1..7 match 4..58; K=0..25 match oracle";
    return o;
}

Outcome reference_round_trips() {
    Outcome o;
    const std::pair<const char*, std::uint64_t> rows[] = {
        {"0.1", 2}, {"1.1", 10}, {"1.0002", 100}, {"2.00008", 1000}, {"0.00000000022", 10000}};
    for (const auto& [text, index] : rows) {
        o.expect(encode_text(text) == Natural{index}, std::string("encode_text(") + text + ")");
        o.expect(decode_text(index) == text, "decode_text(" + std::to_string(index) + ")");
    }
    const std::string big = decode_text(500000);
    o.expect(level_of_index(500000) == Natural{114}, "level of 500000");
    o.expect(big == "29." + std::string(81, '0') + "4", "rendering of 500000: " + big);
    o.expect(encode_text(big) == Natural{500000}, "encode of 500000 rendering");
    if (o.passed) o.detail = "5 rows exact; 500000 is level 114, 29.<81 zeros>4";
    return o;
}

Outcome tuple_bijection() {
    Outcome o;
    for (std::uint64_t n = 1; n <= 200000 && o.passed; ++n) {
        const Natural index{n};
        o.expect(encode(decode(index)) == index, "index " + std::to_string(n));
    }
    std::mt19937_64 rng(4242);
    std::size_t failures = 0;
    for (int rep = 0; rep < 1000; ++rep) {
        const Natural index = Natural::from_string(random_digits(rng, 1 + rng() % 60));
        if (encode(decode(index)) != index) ++failures;
    }
    o.expect(failures == 0, std::to_string(failures) + " random failures");
    if (o.passed) o.detail = "200000 sequential + 1000 random (<=60 digits), 0 failures";
    return o;
}

Outcome oracle_equivalence() {
    Outcome o;
    std::uint64_t total = 0;
    for (Mode mode : {Mode::paper, Mode::strict}) {
        oracle::OracleStream stream({20, mode});
        std::uint64_t n = 0;
        while (auto t = stream.next()) {
            ++n;
            o.expect(decode(n, mode) == *t, std::string(to_string(mode)) + " index " + std::to_string(n));
        }
        const Natural expected = mode == Mode::paper ? cumulative_upto(20) : strict_cumulative_upto(20);
        o.expect(Natural{n} == expected, "oracle emission count");
        total += n;
    }
    if (o.passed) o.detail = std::to_string(total) + " indices across both modes";
    return o;
}

Outcome inconsistency_exhibits() {
    Outcome o;
    const CanonicalTuple ten = tup(1, 0, 0, 10);
    const Natural collide = encode(ten);
    o.expect(collide != Natural{2}, "(+1,0,0,10) has its own index");
    o.expect(encode_text(reconstruct(ten)) == Natural{2}, "(+1,0,0,10) value equals index 2's");
    o.expect(decode_text(2) == "0.1" && reconstruct(ten) == "0.10", "renderings");

    const CanonicalTuple t = canonicalize(parse_decimal("-47.0000000011"));
    const Natural by_formula = encode_text("-47.0000000011");
    o.expect(by_formula == Natural{100001}, "formula index " + by_formula.to_string());
    o.expect(oracle::oracle_index_of(t, {66, Mode::paper}) == Natural{100001}, "oracle scan through level 66");
    bool flagged = false;
    for (const auto& r : run_verification({10, 25, Mode::paper})) {
        if (r.detail.find("443730799861852551 is INCONSISTENT") != std::string::npos) flagged = r.passed;
    }
    o.expect(flagged, "verify report flag");
    if (o.passed)
        o.detail = "index " + collide.to_string() + " collides with 2; -47.0000000011 -> 100001, published value flagged";
    return o;
}

Outcome strict_value_bijection() {
    Outcome o;
    std::unordered_set<std::string> seen;
    seen.reserve(200000);
    for (std::uint64_t n = 1; n <= 200000 && o.passed; ++n) {
        const Natural index{n};
        const std::string text = reconstruct(strict_decode(index));
        o.expect(seen.insert(text).second, "duplicate value " + text);
        o.expect(strict_encode(canonicalize(parse_decimal(text))) == index, "value round trip at " + std::to_string(n));
    }
    std::mt19937_64 rng(77);
    for (int rep = 0; rep < 10000 && o.passed; ++rep) {
        const std::size_t total = 1 + rng() % 30;
        const std::size_t int_len = rng() % (total + 1);
        std::string text = rng() % 2 ? "-" : "";
        for (std::size_t i = 0; i < int_len; ++i) text += static_cast<char>('0' + rng() % 10);
        if (int_len == 0) text += '0';
        if (total > int_len) {
            text += '.';
            for (std::size_t i = int_len; i < total; ++i) text += static_cast<char>('0' + rng() % 10);
        }
        const CanonicalTuple t = canonicalize(parse_decimal(text));
        const Natural index = encode_text(text, Mode::strict);
        const CanonicalTuple back = strict_decode(index);
        o.expect(back == t && canonicalize(parse_decimal(reconstruct(back))) == t, "random text " + text);
    }
    if (o.passed) o.detail = "200000 distinct values, identity holds; 10000 random texts exact";
    return o;
}

Outcome constant_operations() {
    Outcome o;
    const char* indices[] = {"1000", "1000000", "1000000000", "1000000000000", "1000000000000000000"};
    std::optional<std::pair<OpCounts, OpCounts>> reference;
    for (const char* s : indices) {
        const Natural n = Natural::from_string(s);
        OpCountScope d;
        const CanonicalTuple t = decode(n);
        const OpCounts dec = d.counts();
        OpCountScope e;
        const Natural back = encode(t);
        const OpCounts enc = e.counts();
        o.expect(back == n, std::string("round trip ") + s);
        if (!reference) {
            reference.emplace(enc, dec);
        } else {
            o.expect(reference->first == enc && reference->second == dec, std::string("op counts differ at ") + s);
        }
    }
    int code = 0;
    const std::string report = run_cli({"bench", "--repeat", "2000"}, code);
    o.expect(code == 0, "bench exit code");
    o.expect(report.find("# op counts identical across indices: yes") != std::string::npos, "bench report");

    // Digit length grows 4 -> 19 between the first and last rows; per-call
    // time may grow with that, but not by more than 20x.
    std::istringstream rows(report);
    std::string line;
    std::getline(rows, line);
    std::vector<long long> decode_ns;
    while (std::getline(rows, line) && line[0] != '#') decode_ns.push_back(std::stoll(line.substr(line.rfind(',') + 1)));
    o.expect(decode_ns.size() == 5, "bench rows");
    if (decode_ns.size() == 5) {
        o.expect(decode_ns.back() <= 20 * std::max(1LL, decode_ns.front()), "decode time growth");
    }
    if (o.passed) {
        o.detail = "encode " + std::to_string(reference->first.total()) + " ops, decode " +
                   std::to_string(reference->second.total()) + " ops at every magnitude";
    }
    return o;
}

Outcome canonicalization_golden() {
    Outcome o;
    const std::pair<const char*, CanonicalTuple> rows[] = {
        {"0", tup(1, 0, 0, 0)},         {"-3.14159", tup(-1, 3, 0, 14159)}, {"0.007", tup(1, 0, 2, 7)},
        {"-42.500", tup(-1, 42, 0, 5)}, {"1000.0", tup(1, 1000, 0, 0)},     {"-0.00001", tup(-1, 0, 4, 1)},
    };
    const char* rendered[] = {"0", "-3.14159", "0.007", "-42.5", "1000", "-0.00001"};
    for (std::size_t i = 0; i < std::size(rows); ++i) {
        const auto& [text, tuple] = rows[i];
        o.expect(canonicalize(parse_decimal(text)) == tuple, std::string("decomposition of ") + text);
        o.expect(reconstruct(tuple) == rendered[i], std::string("reconstruction of ") + text);
        o.expect(canonicalize(parse_decimal(reconstruct(tuple))) == tuple, std::string("round trip of ") + text);
    }
    if (o.passed) o.detail = "6/6 rows";
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        const char* id;
        const char* name;
        double limit_seconds;
        std::function<Outcome()> check;
    };
    const std::vector<Criterion> criteria{
        {"AC1", "enumeration prefix", 1.0, enumeration_prefix},
        {"AC2", "formula accuracy", 1.0, formula_accuracy},
        {"AC3", "reference round trips", 1.0, reference_round_trips},
        {"AC4", "tuple-level bijection", 10.0, tuple_bijection},
        {"AC5", "oracle equivalence", 5.0, oracle_equivalence},
        {"AC6", "published inconsistency exhibits", 5.0, inconsistency_exhibits},
        {"AC7", "strict-mode value bijection", 30.0, strict_value_bijection},
        {"AC8", "constant operation counts", 30.0, constant_operations},
        {"AC9", "canonicalization golden set", 1.0, canonicalization_golden},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.check();
        } catch (const std::exception& e) {
            o.passed = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = secs <= c.limit_seconds;
        const bool ok = o.passed && in_time;
        if (!ok) ++failed;
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << c.id << ' ' << c.name << ": " << o.detail << " ("
                  << secs << " s, limit " << c.limit_seconds << " s" << (in_time ? "" : ", TOO SLOW") << ")\n";
    }
    std::cout << (criteria.size() - failed) << '/' << criteria.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
