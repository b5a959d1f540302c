#ifndef OPTINT_IO_HPP
#define OPTINT_IO_HPP

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "optint/core.hpp"
#include "optint/hci.hpp"
#include "optint/minplus.hpp"
#include "optint/psei.hpp"

// Line-oriented ingestion and rendering for the CLI. Input is CSV ("h,s"
// or bare "h" with support defaulting to 1) or JSONL ({"h":..,"s":..}).
// The numeric mode is exact-integer when every token parses as an integer,
// floating otherwise; results render as JSON records with exact rational
// strings for confidences in exact mode and 17-significant-digit numbers
// elsewhere.

namespace optint::io {

enum class Format { csv, jsonl };
enum class ModeRequest { autodetect, exact, floating };

class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t line)
        : std::runtime_error(what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// one record, numerals still textual so mode resolution can stay exact
struct RawPair {
    std::string h;
    std::string s;  // empty: defaulted support of 1
    std::size_t line = 0;
};

RawPair parse_csv_line(const std::string& text, std::size_t lineno);
RawPair parse_jsonl_line(const std::string& text, std::size_t lineno);
std::vector<RawPair> read_raw_pairs(std::istream& in, Format format);

bool parse_int_strict(const std::string& text, std::int64_t& out);
bool parse_double_strict(const std::string& text, double& out);

struct ParsedPairs {
    bool exact = true;
    PairSequence<std::int64_t> ints;
    PairSequence<double> reals;

    index_t size() const { return exact ? ints.size() : reals.size(); }
};

// Resolves the numeric mode and validates supports. extra_tokens take part
// in mode detection (e.g. the hit bound travels with its data).
ParsedPairs resolve_pairs(const std::vector<RawPair>& raw, ModeRequest mode,
                          const std::vector<std::string>& extra_tokens = {});

ParsedPairs read_pairs(std::istream& in, Format format, ModeRequest mode,
                       const std::vector<std::string>& extra_tokens = {});

// vectors for the convolution subcommand; the literal "inf" is TOP
struct ParsedVector {
    bool exact = true;
    MinPlusVector<std::int64_t> ints;
    MinPlusVector<double> reals;

    std::size_t size() const { return exact ? ints.size() : reals.size(); }
};

ParsedVector read_vector(std::istream& in, ModeRequest mode);

// joint resolution so both convolution operands land in one numeric mode
std::pair<ParsedVector, ParsedVector> read_vector_pair(std::istream& in_x, std::istream& in_y,
                                                       ModeRequest mode);

// rendering --------------------------------------------------------------

std::string format_rational(std::int64_t num, std::int64_t den);  // reduced, positive denominator
std::string format_number(double v);                              // 17 significant digits
std::string format_value(std::int64_t v);
std::string format_value(double v);

std::string render_record(const HciAnswer<std::int64_t>& a);
std::string render_record(const HciAnswer<double>& a);
std::string render_record(const PseiAnswer<std::int64_t>& a);
std::string render_record(const PseiAnswer<double>& a);

std::string render_extended(const ExtendedValue<std::int64_t>& v);
std::string render_extended(const ExtendedValue<double>& v);

}  // namespace optint::io

#endif  // OPTINT_IO_HPP
