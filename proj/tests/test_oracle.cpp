#include <doctest.h>

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "decindex/oracle.hpp"

using namespace decindex;
using decindex::oracle::OracleConfig;
using decindex::oracle::OracleStream;

namespace {

CanonicalTuple tup(int sign, std::uint64_t n1, std::uint64_t n2, std::uint64_t n3) {
    return {sign > 0 ? Sign::positive : Sign::negative, n1, n2, n3};
}

std::vector<CanonicalTuple> drain(OracleConfig cfg) {
    std::vector<CanonicalTuple> out;
    OracleStream s(cfg);
    while (auto t = s.next()) out.push_back(*t);
    return out;
}

}  // namespace

TEST_CASE("first emissions follow the published table") {
    const auto all = drain({2, Mode::paper});
    const std::vector<CanonicalTuple> expected{
        tup(1, 0, 0, 0),  tup(1, 0, 0, 1),  tup(-1, 0, 0, 1), tup(1, 1, 0, 0),  tup(-1, 1, 0, 0),
        tup(1, 0, 0, 2),  tup(-1, 0, 0, 2), tup(1, 0, 1, 1),  tup(-1, 0, 1, 1), tup(1, 1, 0, 1),
        tup(-1, 1, 0, 1), tup(1, 2, 0, 0),  tup(-1, 2, 0, 0),
    };
    CHECK(all == expected);
}

TEST_CASE("per-level emission counts") {
    const std::uint64_t published[] = {4, 8, 14, 22, 32, 44, 58};
    for (Mode mode : {Mode::paper, Mode::strict}) {
        OracleStream s({25, mode});
        std::vector<std::uint64_t> counts(26, 0);
        while (s.next()) ++counts[s.current_level()];
        CHECK(counts[0] == 1);
        for (int k = 1; k <= 7; ++k) CHECK(counts[k] == published[k - 1]);
        CHECK(counts[10] == (mode == Mode::paper ? 112 : 110));
        std::uint64_t total = 0;
        for (auto c : counts) total += c;
        if (mode == Mode::paper) CHECK(total == 5901);
    }
}

TEST_CASE("deterministic and duplicate-free") {
    for (Mode mode : {Mode::paper, Mode::strict}) {
        const auto a = drain({25, mode});
        const auto b = drain({25, mode});
        CHECK(a == b);
        std::set<std::string> tuples;
        std::set<std::string> values;
        for (const auto& t : a) {
            tuples.insert(to_string(t));
            values.insert(reconstruct(canonicalize(parse_decimal(reconstruct(t)))));
        }
        CHECK(tuples.size() == a.size());
        if (mode == Mode::strict) {
            CHECK(values.size() == a.size());
        } else {
            CHECK(values.size() < a.size());
        }
    }
}

TEST_CASE("oracle_index_of") {
    CHECK(oracle::oracle_index_of(tup(1, 0, 0, 0), {}) == Natural{1});
    CHECK(oracle::oracle_index_of(tup(-1, 1, 0, 1), {}) == Natural{11});
    CHECK(oracle::oracle_index_of(tup(1, 0, 9, 22), {31, Mode::paper}) == Natural{10000});
    CHECK_THROWS_AS(oracle::oracle_index_of(tup(1, 0, 9, 22), {25, Mode::paper}), std::out_of_range);
    CHECK_THROWS_AS(oracle::oracle_index_of(tup(1, 0, 0, 10), {25, Mode::strict}), std::out_of_range);
}
