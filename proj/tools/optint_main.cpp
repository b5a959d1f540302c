// optint: constrained optimal interval search over number-pair sequences.
//
// Subcommands:
//   hci       max-confidence interval with a hit-sum lower bound
//   psei      max-eccentricity interval with a length lower bound (plain input)
//   convolve  min-plus convolution of two vectors
//   maxsums   best window sum at every exact length
//   bench     timing harness over seeded random instances
//
// Exit codes: 0 success (including a null result), 2 invalid input or
// usage, 3 oracle mismatch under --check.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "optint/bench.hpp"
#include "optint/core.hpp"
#include "optint/hci.hpp"
#include "optint/io.hpp"
#include "optint/minplus.hpp"
#include "optint/oracle.hpp"
#include "optint/psei.hpp"

namespace {

using optint::index_t;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitMismatch = 3;
constexpr index_t kCheckLimit = 2000;

struct GlobalOptions {
    std::string input = "-";
    std::string format = "csv";
    bool exact = false;
    bool floating = false;
    bool check = false;

    optint::io::Format io_format() const {
        return format == "jsonl" ? optint::io::Format::jsonl : optint::io::Format::csv;
    }

    optint::io::ModeRequest mode() const {
        if (exact) return optint::io::ModeRequest::exact;
        if (floating) return optint::io::ModeRequest::floating;
        return optint::io::ModeRequest::autodetect;
    }
};

// stdin or an owned file stream
class InputSource {
public:
    explicit InputSource(const std::string& path) {
        if (path == "-") return;
        file_ = std::make_unique<std::ifstream>(path);
        if (!*file_) throw std::invalid_argument("cannot open input file: " + path);
    }

    std::istream& stream() { return file_ ? *file_ : std::cin; }

private:
    std::unique_ptr<std::ifstream> file_;
};

bool check_allowed(index_t n) {
    if (n <= kCheckLimit) return true;
    std::cerr << "warning: --check skipped (n > " << kCheckLimit << ")\n";
    return false;
}

// hci ---------------------------------------------------------------------

template <class T>
int run_hci_offline(const optint::PairSequence<T>& d, T bound, bool check) {
    const auto answer = optint::compute_hci(d, bound);
    if (check && check_allowed(d.size())) {
        const auto expect = optint::oracle::brute_hci(d, bound);
        if (!same_value(answer, expect)) {
            std::cerr << "oracle mismatch: hci value differs from brute force\n";
            return kExitMismatch;
        }
    }
    std::cout << optint::io::render_record(answer) << "\n";
    return kExitOk;
}

template <class T>
int run_hci_stream(std::istream& in, optint::io::Format format, T bound, bool exact_mode,
                   bool check) {
    optint::OnlineHci<T> online(bound);
    std::vector<optint::NumberPair<T>> seen;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string trimmed = line;
        trimmed.erase(0, trimmed.find_first_not_of(" \t\r\n"));
        if (trimmed.empty()) continue;
        const optint::io::RawPair raw = format == optint::io::Format::csv
                                            ? optint::io::parse_csv_line(line, lineno)
                                            : optint::io::parse_jsonl_line(line, lineno);
        T h{};
        T s{1};
        if constexpr (std::is_same_v<T, std::int64_t>) {
            if (!optint::io::parse_int_strict(raw.h, h) ||
                (!raw.s.empty() && !optint::io::parse_int_strict(raw.s, s)))
                throw optint::io::parse_error(
                    "non-integer value in exact stream (line " + std::to_string(lineno) +
                        "); rerun with --float",
                    lineno);
        } else {
            double hd = 0;
            double sd = 1;
            if (!optint::io::parse_double_strict(raw.h, hd) ||
                (!raw.s.empty() && !optint::io::parse_double_strict(raw.s, sd)))
                throw optint::io::parse_error("malformed input (line " + std::to_string(lineno) + ")",
                                              lineno);
            h = hd;
            s = sd;
        }
        if (!(s > T(0)))
            throw optint::io::parse_error(
                "support must be positive (line " + std::to_string(lineno) + ")", lineno);
        const auto& answer = online.push({h, s});
        std::cout << optint::io::render_record(answer) << "\n" << std::flush;
        if (check) seen.push_back({h, s});
    }
    if (check && check_allowed(static_cast<index_t>(seen.size()))) {
        const optint::PairSequence<T> d(std::move(seen));
        const auto expect = optint::oracle::brute_hci(d, bound);
        if (!same_value(online.answer(), expect)) {
            std::cerr << "oracle mismatch: streaming hci value differs from brute force\n";
            return kExitMismatch;
        }
    }
    (void)exact_mode;
    return kExitOk;
}

int run_hci(const GlobalOptions& global, const std::string& lh, bool stream) {
    InputSource source(global.input);
    if (stream) {
        // the stream is consumed line by line, so the numeric mode is fixed
        // up front: exact unless --float is given or the bound is non-integer
        bool exact = !global.floating;
        std::int64_t bound_int = 0;
        if (exact && !optint::io::parse_int_strict(lh, bound_int)) {
            if (global.exact)
                throw optint::io::parse_error("non-integer value with --exact", 0);
            exact = false;
        }
        if (exact)
            return run_hci_stream<std::int64_t>(source.stream(), global.io_format(), bound_int,
                                                true, global.check);
        double bound_real = 0;
        if (!optint::io::parse_double_strict(lh, bound_real))
            throw std::invalid_argument("invalid --lh value: " + lh);
        return run_hci_stream<double>(source.stream(), global.io_format(), bound_real, false,
                                      global.check);
    }

    const auto parsed =
        optint::io::read_pairs(source.stream(), global.io_format(), global.mode(), {lh});
    if (parsed.exact) {
        std::int64_t bound = 0;
        if (!optint::io::parse_int_strict(lh, bound))
            throw std::invalid_argument("invalid --lh value: " + lh);
        return run_hci_offline(parsed.ints, bound, global.check);
    }
    double bound = 0;
    if (!optint::io::parse_double_strict(lh, bound))
        throw std::invalid_argument("invalid --lh value: " + lh);
    return run_hci_offline(parsed.reals, bound, global.check);
}

// psei --------------------------------------------------------------------

template <class T>
int run_psei_typed(const optint::PairSequence<T>& d, index_t bound, bool check) {
    const auto answer = optint::compute_psei(d, bound);
    if (check && check_allowed(d.size())) {
        const auto expect = optint::oracle::brute_psei(d, bound);
        if (optint::compare_ecc(answer.hit, answer.length, expect.hit, expect.length) != 0) {
            std::cerr << "oracle mismatch: psei value differs from brute force\n";
            return kExitMismatch;
        }
    }
    std::cout << optint::io::render_record(answer) << "\n";
    return kExitOk;
}

int run_psei(const GlobalOptions& global, index_t bound) {
    InputSource source(global.input);
    const auto parsed = optint::io::read_pairs(source.stream(), global.io_format(), global.mode());
    if (parsed.exact) return run_psei_typed(parsed.ints, bound, global.check);
    return run_psei_typed(parsed.reals, bound, global.check);
}

// convolve ----------------------------------------------------------------

template <class T>
int run_convolve_typed(const optint::MinPlusVector<T>& x, const optint::MinPlusVector<T>& y,
                       bool naive, bool check) {
    const auto z = naive ? optint::naive_convolution(x, y) : optint::blocked_convolution(x, y);
    if (check && check_allowed(static_cast<index_t>(x.size()))) {
        const auto expect = optint::oracle::brute_convolution(x, y);
        if (!(z == expect)) {
            std::cerr << "oracle mismatch: convolution differs from brute force\n";
            return kExitMismatch;
        }
    }
    for (const auto& v : z) std::cout << optint::io::render_extended(v) << "\n";
    return kExitOk;
}

int run_convolve(const GlobalOptions& global, const std::string& x_path, const std::string& y_path,
                 bool naive) {
    std::ifstream fx(x_path);
    if (!fx) throw std::invalid_argument("cannot open input file: " + x_path);
    std::ifstream fy(y_path);
    if (!fy) throw std::invalid_argument("cannot open input file: " + y_path);
    const auto [x, y] = optint::io::read_vector_pair(fx, fy, global.mode());
    if (x.exact) return run_convolve_typed(x.ints, y.ints, naive, global.check);
    return run_convolve_typed(x.reals, y.reals, naive, global.check);
}

// maxsums -----------------------------------------------------------------

template <class T>
int run_maxsums_typed(const optint::PairSequence<T>& d, bool check) {
    std::vector<T> values;
    values.reserve(static_cast<std::size_t>(d.size()));
    for (const auto& p : d.pairs()) values.push_back(p.h);
    const auto profile = optint::max_consecutive_sums(values);
    if (check && check_allowed(d.size())) {
        const auto expect = optint::oracle::brute_max_sums(values);
        if (profile.w != expect.w) {
            std::cerr << "oracle mismatch: max-sums profile differs from brute force\n";
            return kExitMismatch;
        }
    }
    for (index_t len = 1; len <= profile.size(); ++len)
        std::cout << optint::io::format_value(profile.at(len)) << "\n";
    return kExitOk;
}

int run_maxsums(const GlobalOptions& global) {
    InputSource source(global.input);
    const auto parsed = optint::io::read_pairs(source.stream(), global.io_format(), global.mode());
    if (parsed.exact) return run_maxsums_typed(parsed.ints, global.check);
    return run_maxsums_typed(parsed.reals, global.check);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"constrained optimal interval search"};
    app.require_subcommand(1);

    GlobalOptions global;
    app.add_option("--input", global.input, "input path, or - for stdin");
    app.add_option("--format", global.format, "input record format")
        ->check(CLI::IsMember({"csv", "jsonl"}));
    auto* exact_flag = app.add_flag("--exact", global.exact, "require exact-integer mode");
    app.add_flag("--float", global.floating, "force floating mode")->excludes(exact_flag);
    app.add_flag("--check", global.check,
                 "cross-verify against the brute-force oracle (n <= 2000)");

    auto* hci_cmd =
        app.add_subcommand("hci", "max-confidence interval with a hit-sum lower bound");
    std::string lh;
    bool stream = false;
    hci_cmd->add_option("--lh", lh, "hit-sum lower bound")->required();
    hci_cmd->add_flag("--stream", stream, "emit one result per input line");

    auto* psei_cmd =
        app.add_subcommand("psei", "max-eccentricity interval with a length lower bound");
    index_t ls = 0;
    psei_cmd->add_option("--ls", ls, "length lower bound")->required();

    auto* conv_cmd = app.add_subcommand("convolve", "min-plus convolution of two vectors");
    std::string x_path;
    std::string y_path;
    bool naive = false;
    conv_cmd->add_option("--x", x_path, "left operand, one value per line, inf allowed")->required();
    conv_cmd->add_option("--y", y_path, "right operand, same length")->required();
    conv_cmd->add_flag("--naive", naive, "use the quadratic route instead of the blocked one");

    auto* maxsums_cmd = app.add_subcommand("maxsums", "best window sum at every exact length");

    auto* bench_cmd = app.add_subcommand("bench", "time the fast paths on seeded instances");
    std::vector<index_t> sizes;
    bench_cmd->add_option("--sizes", sizes, "comma-separated instance sizes")->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (hci_cmd->parsed()) return run_hci(global, lh, stream);
        if (psei_cmd->parsed()) return run_psei(global, ls);
        if (conv_cmd->parsed()) return run_convolve(global, x_path, y_path, naive);
        if (maxsums_cmd->parsed()) return run_maxsums(global);
        if (bench_cmd->parsed()) {
            std::cout << optint::bench::render_csv(optint::bench::run_bench(sizes));
            return kExitOk;
        }
    } catch (const optint::io::parse_error& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const optint::validation_error& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::overflow_error& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
