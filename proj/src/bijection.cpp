#include "decindex/bijection.hpp"

#include <stdexcept>

#include "decindex/counting.hpp"
#include "decindex/errors.hpp"

namespace decindex {

namespace {
const Natural kOne{1};
}  // namespace

std::string_view to_string(Mode mode) { return mode == Mode::paper ? "paper" : "strict"; }

Natural encode(const CanonicalTuple& t, Mode mode) {
    require_valid(t);
    if (mode == Mode::strict && !is_strict_canonical(t)) {
        throw CanonicalityError("strict mode requires n3 without trailing zeros, got " + to_string(t));
    }
    if (t.is_zero()) return kOne;
    const Natural level = complexity(t);
    if (mode == Mode::strict) return strict_cumulative_before(level) + strict_position_within(level, t) + kOne;
    return cumulative_before(level) + position_within(level, t) + kOne;
}

LevelPosition locate(const Natural& index, Mode mode) {
    if (index.is_zero()) throw std::domain_error("index must be at least 1");
    if (index == kOne) return {};
    if (mode == Mode::strict) {
        Natural level = strict_level_of_index(index);
        Natural position = index - kOne - strict_cumulative_before(level);
        return {std::move(level), std::move(position)};
    }
    Natural level = level_of_index(index);
    Natural position = index - kOne - cumulative_before(level);
    return {std::move(level), std::move(position)};
}

CanonicalTuple decode(const Natural& index, Mode mode) {
    const LevelPosition where = locate(index, mode);
    if (where.level.is_zero()) return {};
    return mode == Mode::strict ? strict_tuple_at(where.level, where.position) : tuple_at(where.level, where.position);
}

Natural encode_text(std::string_view text, Mode mode) { return encode(canonicalize(parse_decimal(text)), mode); }

std::string decode_text(const Natural& index, Mode mode, std::size_t max_render_digits) {
    return reconstruct(decode(index, mode), max_render_digits);
}

EnumerationRecord make_record(const Natural& index, Mode mode, std::size_t max_render_digits) {
    EnumerationRecord r{index, decode(index, mode), std::nullopt, false};
    r.strict_canonical = is_strict_canonical(r.tuple);
    try {
        r.text = reconstruct(r.tuple, max_render_digits);
    } catch (const RenderBudgetExceeded&) {
        r.text.reset();
    }
    return r;
}

Enumeration::Enumeration(Natural from, Natural to, Mode mode, std::size_t max_render_digits)
    : from_(std::move(from)), to_(std::move(to)), mode_(mode), max_render_digits_(max_render_digits) {
    if (from_.is_zero()) throw std::out_of_range("enumeration must start at index 1 or later");
    if (from_ > to_) {
        throw std::out_of_range("empty enumeration range [" + from_.to_string() + ", " + to_.to_string() + "]");
    }
}

Enumeration::iterator::iterator(const Enumeration* owner) : owner_(owner), next_(owner->from_), done_(false) {
    ++*this;
}

Enumeration::iterator& Enumeration::iterator::operator++() {
    if (next_ > owner_->to_) {
        done_ = true;
        return *this;
    }
    record_ = make_record(next_, owner_->mode_, owner_->max_render_digits_);
    next_ += kOne;
    return *this;
}

}  // namespace decindex
