#pragma once

#include <cstddef>
#include <iterator>
#include <optional>
#include <string>
#include <string_view>

#include "decindex/decimal.hpp"
#include "decindex/natural.hpp"
#include "decindex/positioning.hpp"

namespace decindex {

/// paper: ranks every composition (n3 >= 1, or the pure integer), so values
///        whose n3 ends in zero appear twice from level 10 on.
/// strict: ranks strict-canonical tuples only, one index per decimal value.
enum class Mode { paper, strict };

std::string_view to_string(Mode mode);

Natural encode(const CanonicalTuple& t, Mode mode = Mode::paper);
/// Throws std::domain_error for index 0.
CanonicalTuple decode(const Natural& index, Mode mode = Mode::paper);
/// Level and in-level rank for an index.
LevelPosition locate(const Natural& index, Mode mode = Mode::paper);

inline Natural strict_encode(const CanonicalTuple& t) { return encode(t, Mode::strict); }
inline CanonicalTuple strict_decode(const Natural& index) { return decode(index, Mode::strict); }

Natural encode_text(std::string_view text, Mode mode = Mode::paper);
std::string decode_text(const Natural& index, Mode mode = Mode::paper,
                        std::size_t max_render_digits = kDefaultMaxRenderDigits);

struct EnumerationRecord {
    Natural index;
    CanonicalTuple tuple;
    std::optional<std::string> text;  // empty when the render budget is exceeded
    bool strict_canonical = false;
};

/// Decodes a record for one index, rendering within the budget.
EnumerationRecord make_record(const Natural& index, Mode mode,
                              std::size_t max_render_digits = kDefaultMaxRenderDigits);

/// Lazy ascending walk over [from, to]; each record is decoded on demand.
class Enumeration {
public:
    /// Throws std::out_of_range unless 1 <= from <= to.
    Enumeration(Natural from, Natural to, Mode mode = Mode::paper,
                std::size_t max_render_digits = kDefaultMaxRenderDigits);

    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = EnumerationRecord;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        const EnumerationRecord& operator*() const { return record_; }
        const EnumerationRecord* operator->() const { return &record_; }
        iterator& operator++();
        void operator++(int) { ++*this; }
        friend bool operator==(const iterator& it, std::default_sentinel_t) { return it.done_; }

    private:
        friend class Enumeration;
        explicit iterator(const Enumeration* owner);
        const Enumeration* owner_ = nullptr;
        Natural next_;
        EnumerationRecord record_;
        bool done_ = true;
    };

    iterator begin() const { return iterator(this); }
    std::default_sentinel_t end() const { return {}; }

private:
    Natural from_;
    Natural to_;
    Mode mode_;
    std::size_t max_render_digits_;
};

}  // namespace decindex
