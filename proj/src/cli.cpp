#include "decindex/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string_view>

#include <CLI11.hpp>
#include <json.hpp>

#include "decindex/bijection.hpp"
#include "decindex/counting.hpp"
#include "decindex/errors.hpp"
#include "decindex/verify.hpp"

namespace decindex::cli {

namespace {

using json = nlohmann::ordered_json;

struct GlobalOptions {
    bool strict = false;
    bool json = false;
    std::size_t max_render_digits = kDefaultMaxRenderDigits;
    std::string in_path;
    std::string out_path;

    Mode mode() const { return strict ? Mode::strict : Mode::paper; }
};

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

Natural parse_index(std::string_view text) {
    std::size_t i = 0;
    if (!text.empty() && text[0] == '+') i = 1;
    if (i == text.size()) throw ParseError("expected index digits", i);
    for (std::size_t j = i; j < text.size(); ++j) {
        if (text[j] < '0' || text[j] > '9') throw ParseError("index must be a base-10 integer", j);
    }
    Natural n = Natural::from_string(text.substr(i));
    if (n.is_zero()) throw std::domain_error("index must be at least 1");
    return n;
}

// "sign,n1,n2,n3", optionally parenthesised, sign as +1/-1/1/+/-.
CanonicalTuple parse_tuple(std::string_view text) {
    std::string cleaned;
    for (char c : text) {
        if (c != '(' && c != ')' && c != ' ' && c != '\t') cleaned += c;
    }
    std::vector<std::string> parts;
    std::stringstream ss(cleaned);
    for (std::string part; std::getline(ss, part, ',');) parts.push_back(part);
    if (parts.size() != 4) throw ParseError("tuple needs four comma-separated fields", 0);
    CanonicalTuple t;
    const std::string& s = parts[0];
    if (s == "+1" || s == "1" || s == "+") {
        t.sign = Sign::positive;
    } else if (s == "-1" || s == "-") {
        t.sign = Sign::negative;
    } else {
        throw ParseError("tuple sign must be +1 or -1", 0);
    }
    auto field = [](const std::string& f) {
        if (f.empty() || !std::all_of(f.begin(), f.end(), [](char c) { return c >= '0' && c <= '9'; }))
            throw ParseError("tuple fields must be base-10 naturals", 0);
        return Natural::from_string(f);
    };
    t.n1 = field(parts[1]);
    t.n2 = field(parts[2]);
    t.n3 = field(parts[3]);
    require_valid(t);
    return t;
}

json record_json(const Natural& index, const CanonicalTuple& t, const std::optional<std::string>& value) {
    json j;
    j["index"] = index.to_string();
    j["sign"] = t.sign == Sign::positive ? 1 : -1;
    j["n1"] = t.n1.to_string();
    j["n2"] = t.n2.to_string();
    j["n3"] = t.n3.to_string();
    j["value"] = value ? json(*value) : json(nullptr);
    j["complexity"] = complexity(t).to_string();
    j["strict_canonical"] = is_strict_canonical(t);
    return j;
}

std::optional<std::string> try_render(const CanonicalTuple& t, std::size_t budget) {
    try {
        return reconstruct(t, budget);
    } catch (const RenderBudgetExceeded&) {
        return std::nullopt;
    }
}

int classify(const std::exception_ptr& e, std::string& message) {
    try {
        std::rethrow_exception(e);
    } catch (const CanonicalityError& ex) {
        message = ex.what();
        return kCanonicalityError;
    } catch (const RenderBudgetExceeded& ex) {
        message = ex.what();
        return kRenderBudget;
    } catch (const std::exception& ex) {
        message = ex.what();
        return kInputError;
    }
}

using ItemHandler = std::function<int(std::string_view, std::ostream&)>;

// One input, or one per line in batch mode. Failing lines get an error record
// in place so output stays line-aligned; the first failure sets the exit code.
int process(const GlobalOptions& g, bool batch, const std::string& single, const ItemHandler& handle, std::istream& in,
            std::ostream& out, std::ostream& err) {
    if (!batch) {
        if (single.empty()) {
            err << "decindex: missing input (give a value or --batch)\n";
            return kInputError;
        }
        try {
            return handle(trim(single), out);
        } catch (...) {
            std::string message;
            const int code = classify(std::current_exception(), message);
            err << "decindex: " << message << '\n';
            return code;
        }
    }

    std::ifstream file;
    if (!g.in_path.empty()) {
        file.open(g.in_path);
        if (!file) {
            err << "decindex: cannot open " << g.in_path << '\n';
            return kInputError;
        }
    }
    std::istream& src = g.in_path.empty() ? in : file;
    int status = kSuccess;
    std::size_t line_no = 0;
    for (std::string line; std::getline(src, line);) {
        ++line_no;
        int code = kSuccess;
        try {
            code = handle(trim(line), out);
        } catch (...) {
            std::string message;
            code = classify(std::current_exception(), message);
            if (g.json) {
                json j;
                j["line"] = line_no;
                j["error"] = message;
                j["code"] = code;
                out << j.dump() << '\n';
            } else {
                out << "error: line " << line_no << ": " << message << '\n';
            }
            err << "decindex: line " << line_no << ": " << message << '\n';
        }
        if (status == kSuccess) status = code;
    }
    return status;
}

int cmd_encode(const GlobalOptions& g, bool batch, bool tuple_input, const std::string& value, std::istream& in,
               std::ostream& out, std::ostream& err) {
    auto handle = [&](std::string_view text, std::ostream& os) {
        const CanonicalTuple t = tuple_input ? parse_tuple(text) : canonicalize(parse_decimal(text));
        const Natural index = encode(t, g.mode());
        if (g.json) {
            os << record_json(index, t, try_render(t, g.max_render_digits)).dump() << '\n';
        } else {
            os << index << '\n';
        }
        return static_cast<int>(kSuccess);
    };
    return process(g, batch, value, handle, in, out, err);
}

int cmd_decode(const GlobalOptions& g, bool batch, const std::string& value, std::istream& in, std::ostream& out,
               std::ostream& err) {
    auto handle = [&](std::string_view text, std::ostream& os) {
        const Natural index = parse_index(text);
        const LevelPosition where = locate(index, g.mode());
        const CanonicalTuple t = decode(index, g.mode());
        const std::optional<std::string> rendered = try_render(t, g.max_render_digits);
        if (g.json || !rendered) {
            json j = record_json(index, t, rendered);
            j["position"] = where.position.to_string();
            os << j.dump() << '\n';
        } else {
            os << *rendered << '\n';
        }
        if (!rendered) {
            err << "decindex: index " << index << " needs " << rendered_length(t) << " characters, budget is "
                << g.max_render_digits << '\n';
            return static_cast<int>(kRenderBudget);
        }
        return static_cast<int>(kSuccess);
    };
    return process(g, batch, value, handle, in, out, err);
}

int cmd_enumerate(const GlobalOptions& g, const std::string& from_text, const std::string& to_text, std::ostream& out,
                  std::ostream& err) {
    std::optional<Enumeration> range;
    try {
        range.emplace(parse_index(trim(from_text)), parse_index(trim(to_text)), g.mode(), g.max_render_digits);
    } catch (const std::exception& e) {
        err << "decindex: " << e.what() << '\n';
        return kInputError;
    }
    int status = kSuccess;
    for (const EnumerationRecord& r : *range) {
        if (g.json || !r.text) {
            out << record_json(r.index, r.tuple, r.text).dump() << '\n';
        } else {
            out << *r.text << '\n';
        }
        if (!r.text && status == kSuccess) status = kRenderBudget;
    }
    return status;
}

int cmd_count(const GlobalOptions& g, const std::string& level, const std::string& upto, const std::string& table,
              std::ostream& out, std::ostream& err) {
    const int given = !level.empty() + !upto.empty() + !table.empty();
    if (given != 1) {
        err << "decindex: count needs exactly one of --level, --upto, --table\n";
        return kInputError;
    }
    auto parse_level = [](std::string_view s) {
        s = trim(s);
        if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
            throw ParseError("level must be a base-10 natural", 0);
        return Natural::from_string(s);
    };
    try {
        if (!level.empty()) {
            const Natural k = parse_level(level);
            out << (g.strict ? strict_level_count(k) : level_count(k)) << '\n';
        } else if (!upto.empty()) {
            const Natural k = parse_level(upto);
            out << (g.strict ? strict_cumulative_upto(k) : cumulative_upto(k)) << '\n';
        } else {
            const Natural last = parse_level(table);
            out << "K,level_count,cumulative_upto,strict_level_count\n";
            for (Natural k; k <= last; k += Natural{1}) {
                out << k << ',' << level_count(k) << ',' << cumulative_upto(k) << ',' << strict_level_count(k) << '\n';
            }
        }
    } catch (const std::exception& e) {
        err << "decindex: " << e.what() << '\n';
        return kInputError;
    }
    return kSuccess;
}

int cmd_verify(const GlobalOptions& g, std::uint64_t max_index, std::uint64_t max_level, std::ostream& out) {
    const auto results = run_verification({max_index, max_level, g.mode()});
    std::size_t passed = 0;
    for (const auto& r : results) {
        if (g.json) {
            json j;
            j["check"] = r.name;
            j["passed"] = r.passed;
            j["detail"] = r.detail;
            out << j.dump() << '\n';
        } else {
            out << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n';
        }
        passed += r.passed ? 1 : 0;
    }
    if (!g.json) out << "summary: " << passed << '/' << results.size() << " checks passed\n";
    return passed == results.size() ? kSuccess : kVerificationFailure;
}

// "123", "1e18" (mantissa times a power of ten).
Natural parse_bench_index(std::string_view token) {
    token = trim(token);
    const auto e = token.find_first_of("eE");
    if (e == std::string_view::npos) return parse_index(token);
    Natural value = parse_index(token.substr(0, e));
    const std::string_view exp = token.substr(e + 1);
    if (exp.empty() || exp.size() > 6 || !std::all_of(exp.begin(), exp.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw ParseError("bad exponent in bench index", e + 1);
    const std::string zeros(static_cast<std::size_t>(std::stoul(std::string(exp))), '0');
    return Natural::from_string(value.to_string() + zeros);
}

int cmd_bench(const GlobalOptions& g, const std::string& indices, std::uint64_t repeat, std::ostream& out,
              std::ostream& err) {
    std::vector<Natural> targets;
    try {
        std::stringstream ss(indices);
        for (std::string token; std::getline(ss, token, ',');) targets.push_back(parse_bench_index(token));
    } catch (const std::exception& e) {
        err << "decindex: " << e.what() << '\n';
        return kInputError;
    }
    if (targets.empty() || repeat == 0) {
        err << "decindex: bench needs at least one index and --repeat >= 1\n";
        return kInputError;
    }
    using clock = std::chrono::steady_clock;
    out << "index,digits,encode_mul,encode_div,decode_mul,decode_div,encode_ns,decode_ns\n";
    std::optional<std::pair<OpCounts, OpCounts>> first;
    bool constant = true;
    for (const Natural& n : targets) {
        CanonicalTuple t;
        OpCounts dec_ops;
        {
            OpCountScope scope;
            t = decode(n, g.mode());
            dec_ops = scope.counts();
        }
        OpCounts enc_ops;
        {
            OpCountScope scope;
            const Natural back = encode(t, g.mode());
            enc_ops = scope.counts();
            if (back != n) {
                err << "decindex: round trip failed for " << n << '\n';
                return kVerificationFailure;
            }
        }
        const auto t0 = clock::now();
        for (std::uint64_t i = 0; i < repeat; ++i) t = decode(n, g.mode());
        const auto t1 = clock::now();
        for (std::uint64_t i = 0; i < repeat; ++i) (void)encode(t, g.mode());
        const auto t2 = clock::now();
        const auto per_call = [&](auto d) {
            return std::chrono::duration_cast<std::chrono::nanoseconds>(d).count() / static_cast<long long>(repeat);
        };
        out << n << ',' << n.digit_count() << ',' << enc_ops.multiplications << ',' << enc_ops.divisions << ','
            << dec_ops.multiplications << ',' << dec_ops.divisions << ',' << per_call(t2 - t1) << ','
            << per_call(t1 - t0) << '\n';
        if (!first) {
            first.emplace(enc_ops, dec_ops);
        } else if (first->first != enc_ops || first->second != dec_ops) {
            constant = false;
        }
    }
    out << "# op counts identical across indices: " << (constant ? "yes" : "no") << '\n';
    return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out_default, std::ostream& err) {
    CLI::App app{"Exact ranking and unranking of finite decimal numbers", "decindex"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions g;
    app.add_flag("--strict", g.strict, "Rank strict-canonical tuples only (one index per decimal value)");
    app.add_flag("--json", g.json, "Emit one JSON record per line");
    app.add_option("--max-render-digits", g.max_render_digits, "Character budget for rendering decimals");
    app.add_option("--in", g.in_path, "Read batch input from FILE instead of stdin");
    app.add_option("--out", g.out_path, "Write output to FILE instead of stdout");

    std::string value;
    bool batch = false;
    bool tuple_input = false;
    auto* encode_cmd = app.add_subcommand("encode", "Decimal text to index");
    encode_cmd->add_option("value", value, "Decimal text");
    encode_cmd->add_flag("--batch", batch, "One input per line from stdin or --in");
    encode_cmd->add_flag("--tuple", tuple_input, "Inputs are tuples written sign,n1,n2,n3");

    auto* decode_cmd = app.add_subcommand("decode", "Index to decimal text");
    decode_cmd->add_option("index", value, "Index (1 or greater)");
    decode_cmd->add_flag("--batch", batch, "One input per line from stdin or --in");

    std::string from_text;
    std::string to_text;
    auto* enumerate_cmd = app.add_subcommand("enumerate", "Decode a contiguous index range");
    enumerate_cmd->add_option("--from", from_text, "First index")->required();
    enumerate_cmd->add_option("--to", to_text, "Last index")->required();

    std::string level;
    std::string upto;
    std::string table;
    auto* count_cmd = app.add_subcommand("count", "Level sizes and cumulative counts");
    count_cmd->add_option("--level", level, "Tuples at level K");
    count_cmd->add_option("--upto", upto, "Tuples at levels 0..K");
    count_cmd->add_option("--table", table, "CSV of counts for levels 0..K");

    std::uint64_t max_index = 1000;
    std::uint64_t max_level = 25;
    auto* verify_cmd = app.add_subcommand("verify", "Check closed forms against the brute-force oracle");
    verify_cmd->add_option("--max-index", max_index, "Round-trip indices 1..N")->capture_default_str();
    verify_cmd->add_option("--max-level", max_level, "Oracle levels 0..K")->capture_default_str();

    std::string indices = "1e3,1e6,1e9,1e12,1e18";
    std::uint64_t repeat = 1000;
    auto* bench_cmd = app.add_subcommand("bench", "Operation counts and timing per index magnitude");
    bench_cmd->add_option("--indices", indices, "Comma-separated indices; 1eN shorthand allowed")
        ->capture_default_str();
    bench_cmd->add_option("--repeat", repeat, "Timed calls per index")->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out_default, err);
        return code == 0 ? kSuccess : kInputError;
    }

    std::ofstream out_file;
    if (!g.out_path.empty()) {
        out_file.open(g.out_path);
        if (!out_file) {
            err << "decindex: cannot write " << g.out_path << '\n';
            return kInputError;
        }
    }
    std::ostream& out = g.out_path.empty() ? out_default : out_file;

    if (encode_cmd->parsed()) return cmd_encode(g, batch, tuple_input, value, in, out, err);
    if (decode_cmd->parsed()) return cmd_decode(g, batch, value, in, out, err);
    if (enumerate_cmd->parsed()) return cmd_enumerate(g, from_text, to_text, out, err);
    if (count_cmd->parsed()) return cmd_count(g, level, upto, table, out, err);
    if (verify_cmd->parsed()) return cmd_verify(g, max_index, max_level, out);
    if (bench_cmd->parsed()) return cmd_bench(g, indices, repeat, out, err);
    return kInputError;
}

}  // namespace decindex::cli
