#include "decindex/oracle.hpp"

#include <stdexcept>
#include <string>

namespace decindex::oracle {

void OracleStream::fill_level(std::uint64_t level) {
    auto push = [&](std::uint64_t n1, std::uint64_t n2, std::uint64_t n3) {
        pending_.emplace_back(level, CanonicalTuple{Sign::positive, n1, n2, n3});
        if (level != 0) pending_.emplace_back(level, CanonicalTuple{Sign::negative, n1, n2, n3});
    };
    for (std::uint64_t n1 = 0; n1 < level; ++n1) {
        for (std::uint64_t n2 = 0; n1 + n2 < level; ++n2) {
            const std::uint64_t n3 = level - n1 - n2;
            if (cfg_.mode == Mode::strict && n3 % 10 == 0) continue;
            push(n1, n2, n3);
        }
    }
    push(level, 0, 0);
}

std::optional<CanonicalTuple> OracleStream::next() {
    while (pending_.empty()) {
        if (next_level_ > cfg_.max_level) return std::nullopt;
        fill_level(next_level_++);
    }
    auto [level, tuple] = std::move(pending_.front());
    pending_.pop_front();
    emitted_level_ = level;
    return tuple;
}

Natural oracle_index_of(const CanonicalTuple& t, OracleConfig cfg) {
    if (complexity(t) > Natural{cfg.max_level}) {
        throw std::out_of_range("tuple " + to_string(t) + " lies beyond oracle level " + std::to_string(cfg.max_level));
    }
    OracleStream stream(cfg);
    std::uint64_t position = 0;
    while (auto emitted = stream.next()) {
        ++position;
        if (*emitted == t) return Natural{position};
    }
    throw std::out_of_range("tuple " + to_string(t) + " is not emitted in " + std::string(to_string(cfg.mode)) + " mode");
}

}  // namespace decindex::oracle
