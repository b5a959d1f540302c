#include "optint/io.hpp"

#include <cctype>
#include <cerrno>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <numeric>

#include "json.hpp"

namespace optint::io {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0;
    std::size_t b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

[[noreturn]] void malformed(std::size_t lineno) {
    throw parse_error("malformed input (line " + std::to_string(lineno) + ")", lineno);
}

std::string json_number_to_token(const nlohmann::json& v) {
    if (v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
    if (v.is_number_unsigned()) return std::to_string(v.get<std::uint64_t>());
    return format_number(v.get<double>());
}

}  // namespace

bool parse_int_strict(const std::string& text, std::int64_t& out) {
    if (text.empty()) return false;
    errno = 0;
    char* end = nullptr;
    const long long v = std::strtoll(text.c_str(), &end, 10);
    if (errno == ERANGE || end != text.c_str() + text.size()) return false;
    out = static_cast<std::int64_t>(v);
    return true;
}

bool parse_double_strict(const std::string& text, double& out) {
    if (text.empty()) return false;
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (end != text.c_str() + text.size() || !std::isfinite(v)) return false;
    out = v;
    return true;
}

RawPair parse_csv_line(const std::string& text, std::size_t lineno) {
    const std::size_t comma = text.find(',');
    RawPair out;
    out.line = lineno;
    if (comma == std::string::npos) {
        out.h = trim(text);
    } else {
        if (text.find(',', comma + 1) != std::string::npos) malformed(lineno);
        out.h = trim(text.substr(0, comma));
        out.s = trim(text.substr(comma + 1));
        if (out.s.empty()) malformed(lineno);
    }
    if (out.h.empty()) malformed(lineno);
    return out;
}

RawPair parse_jsonl_line(const std::string& text, std::size_t lineno) {
    nlohmann::json obj;
    try {
        obj = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception&) {
        malformed(lineno);
    }
    if (!obj.is_object() || !obj.contains("h") || !obj["h"].is_number()) malformed(lineno);
    RawPair out;
    out.line = lineno;
    out.h = json_number_to_token(obj["h"]);
    if (obj.contains("s")) {
        if (!obj["s"].is_number()) malformed(lineno);
        out.s = json_number_to_token(obj["s"]);
    }
    return out;
}

std::vector<RawPair> read_raw_pairs(std::istream& in, Format format) {
    std::vector<RawPair> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        out.push_back(format == Format::csv ? parse_csv_line(line, lineno)
                                            : parse_jsonl_line(line, lineno));
    }
    return out;
}

ParsedPairs resolve_pairs(const std::vector<RawPair>& raw, ModeRequest mode,
                          const std::vector<std::string>& extra_tokens) {
    bool exact = mode != ModeRequest::floating;
    std::size_t first_noninteger_line = 0;
    if (exact) {
        std::int64_t scratch;
        for (const auto& t : extra_tokens) {
            if (!parse_int_strict(t, scratch)) {
                exact = false;
                break;
            }
        }
        if (exact) {
            for (const auto& rp : raw) {
                if (!parse_int_strict(rp.h, scratch) ||
                    (!rp.s.empty() && !parse_int_strict(rp.s, scratch))) {
                    exact = false;
                    first_noninteger_line = rp.line;
                    break;
                }
            }
        }
    }
    if (!exact && mode == ModeRequest::exact) {
        const std::size_t at = first_noninteger_line;
        throw parse_error("non-integer value with --exact" +
                              (at ? " (line " + std::to_string(at) + ")" : std::string()),
                          at);
    }

    ParsedPairs out;
    out.exact = exact;
    if (exact) {
        std::vector<NumberPair<std::int64_t>> pairs;
        pairs.reserve(raw.size());
        for (const auto& rp : raw) {
            std::int64_t h = 0;
            std::int64_t s = 1;
            if (!parse_int_strict(rp.h, h) || (!rp.s.empty() && !parse_int_strict(rp.s, s)))
                malformed(rp.line);
            if (s <= 0)
                throw parse_error("support must be positive (line " + std::to_string(rp.line) + ")",
                                  rp.line);
            pairs.push_back({h, s});
        }
        out.ints = PairSequence<std::int64_t>(std::move(pairs));
    } else {
        std::vector<NumberPair<double>> pairs;
        pairs.reserve(raw.size());
        for (const auto& rp : raw) {
            double h = 0;
            double s = 1;
            if (!parse_double_strict(rp.h, h) || (!rp.s.empty() && !parse_double_strict(rp.s, s)))
                malformed(rp.line);
            if (!(s > 0))
                throw parse_error("support must be positive (line " + std::to_string(rp.line) + ")",
                                  rp.line);
            pairs.push_back({h, s});
        }
        out.reals = PairSequence<double>(std::move(pairs));
    }
    return out;
}

ParsedPairs read_pairs(std::istream& in, Format format, ModeRequest mode,
                       const std::vector<std::string>& extra_tokens) {
    return resolve_pairs(read_raw_pairs(in, format), mode, extra_tokens);
}

namespace {

struct VectorTokens {
    std::vector<std::string> tokens;
    std::vector<std::size_t> lines;
};

VectorTokens tokenize_vector(std::istream& in) {
    VectorTokens out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty()) continue;
        out.tokens.push_back(t);
        out.lines.push_back(lineno);
    }
    return out;
}

// true when every non-"inf" token parses as an integer; else records the
// first offending line
bool all_integer(const VectorTokens& vt, std::size_t& offending_line) {
    std::int64_t scratch;
    for (std::size_t k = 0; k < vt.tokens.size(); ++k) {
        if (vt.tokens[k] == "inf") continue;
        if (!parse_int_strict(vt.tokens[k], scratch)) {
            offending_line = vt.lines[k];
            return false;
        }
    }
    return true;
}

ParsedVector materialize_vector(const VectorTokens& vt, bool exact) {
    ParsedVector out;
    out.exact = exact;
    for (std::size_t k = 0; k < vt.tokens.size(); ++k) {
        if (vt.tokens[k] == "inf") {
            if (exact)
                out.ints.push_back(ExtendedValue<std::int64_t>::top());
            else
                out.reals.push_back(ExtendedValue<double>::top());
            continue;
        }
        if (exact) {
            std::int64_t v;
            if (!parse_int_strict(vt.tokens[k], v)) malformed(vt.lines[k]);
            out.ints.push_back(ExtendedValue<std::int64_t>::of(v));
        } else {
            double v;
            if (!parse_double_strict(vt.tokens[k], v)) malformed(vt.lines[k]);
            out.reals.push_back(ExtendedValue<double>::of(v));
        }
    }
    return out;
}

}  // namespace

ParsedVector read_vector(std::istream& in, ModeRequest mode) {
    const VectorTokens vt = tokenize_vector(in);
    bool exact = mode != ModeRequest::floating;
    std::size_t offending = 0;
    if (exact && !all_integer(vt, offending)) {
        if (mode == ModeRequest::exact)
            throw parse_error("non-integer value with --exact (line " + std::to_string(offending) +
                                  ")",
                              offending);
        exact = false;
    }
    return materialize_vector(vt, exact);
}

std::pair<ParsedVector, ParsedVector> read_vector_pair(std::istream& in_x, std::istream& in_y,
                                                       ModeRequest mode) {
    const VectorTokens vx = tokenize_vector(in_x);
    const VectorTokens vy = tokenize_vector(in_y);
    bool exact = mode != ModeRequest::floating;
    std::size_t offending = 0;
    if (exact && (!all_integer(vx, offending) || !all_integer(vy, offending))) {
        if (mode == ModeRequest::exact)
            throw parse_error("non-integer value with --exact (line " + std::to_string(offending) +
                                  ")",
                              offending);
        exact = false;
    }
    return {materialize_vector(vx, exact), materialize_vector(vy, exact)};
}

std::string format_rational(std::int64_t num, std::int64_t den) {
    const std::int64_t g = std::gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return std::to_string(num) + "/" + std::to_string(den);
}

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string format_value(std::int64_t v) { return std::to_string(v); }
std::string format_value(double v) { return format_number(v); }

namespace {

std::string record_prefix(const IndexInterval& iv) {
    return "{\"start\":" + std::to_string(iv.start) + ",\"end\":" + std::to_string(iv.end) +
           ",\"value\":";
}

double ecc_display(double hit, double length) { return hit / std::sqrt(length); }

}  // namespace

std::string render_record(const HciAnswer<std::int64_t>& a) {
    if (!a.interval) return "null";
    return record_prefix(*a.interval) + "\"" + format_rational(a.hit, a.support) + "\"}";
}

std::string render_record(const HciAnswer<double>& a) {
    if (!a.interval) return "null";
    return record_prefix(*a.interval) + format_number(a.hit / a.support) + "}";
}

std::string render_record(const PseiAnswer<std::int64_t>& a) {
    return record_prefix(a.interval) +
           format_number(ecc_display(static_cast<double>(a.hit), static_cast<double>(a.length))) +
           "}";
}

std::string render_record(const PseiAnswer<double>& a) {
    return record_prefix(a.interval) + format_number(ecc_display(a.hit, a.length)) + "}";
}

std::string render_extended(const ExtendedValue<std::int64_t>& v) {
    return v.is_top ? "inf" : std::to_string(v.value);
}

std::string render_extended(const ExtendedValue<double>& v) {
    return v.is_top ? "inf" : format_number(v.value);
}

}  // namespace optint::io
