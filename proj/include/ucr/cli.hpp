// Command-line front end.
//
// run() is a pure function of its argument list and two output streams, so
// the whole surface is testable in-process.  Reports go to `out`, warnings
// and errors to `err`.  Exit codes: 0 success, 1 a verification check
// failed, 2 usage error, 3 a resource cap was hit.

#pragma once

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ucr/report_json.hpp"
#include "ucr/verify.hpp"

namespace ucr::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitResource = 3;

// Listing caps for the tableaux subcommand; shapes past this are better
// counted than printed.
inline constexpr unsigned long long kTableauxListCap = 10000;

inline constexpr const char* kUsage = R"(usage: ucr <subcommand> [flags]

subcommands
  decompose    --d D --n N [--output text|json]
               block structure of the commutant on n sites with d letters
  tableaux     --lambda L [--mu M] [--output text|json]
               standard tableaux of shape L; with --mu also the semistandard
               tableaux of content M
  simulate     --check fixed-points|round-trip [--d D] [--n N]
               [--generators gellmann|pauli|FILE] [--angles auto|a,b,...]
               [--lambda L] [--seed S] [--tol T] [--output text|json]
               channel simulations against the structural predictions
  verify       [--suite small|full] [--output text|json]
               independent numerical cross-checks of the decomposition
  encode-demo  --lambda L [--d D] [--n N] [--seed S] [--tol T]
               [--output text|json]
               store a logical state in a block and watch it survive

flags take comma-separated integers for L and M (e.g. --lambda 2,1,1) and
comma-separated reals for explicit angles.  Generator files hold one d x d
matrix per block of d lines, each line d whitespace-separated complex
entries like 0.5-0.25i.

environment
  UCR_STATE_CAP   overrides the d^n state-space cap (default 4096)
  UCR_TOL         overrides the default check tolerance (default 1e-9)
)";

namespace detail {

using Flags = std::map<std::string, std::string>;

inline Flags parse_flags(const std::vector<std::string>& args, std::size_t start,
                         const std::set<std::string>& allowed) {
    Flags flags;
    for (std::size_t i = start; i < args.size(); i += 2) {
        const std::string& key = args[i];
        if (key.rfind("--", 0) != 0)
            throw std::invalid_argument("expected a flag, got '" + key + "'");
        std::string name = key.substr(2);
        if (allowed.find(name) == allowed.end())
            throw std::invalid_argument("unknown flag '" + key + "'");
        if (i + 1 >= args.size())
            throw std::invalid_argument("flag '" + key + "' needs a value");
        flags[name] = args[i + 1];
    }
    return flags;
}

inline const std::string& require(const Flags& flags, const std::string& key) {
    auto it = flags.find(key);
    if (it == flags.end())
        throw std::invalid_argument("missing required flag '--" + key + "'");
    return it->second;
}

inline std::string get_or(const Flags& flags, const std::string& key, std::string fallback) {
    auto it = flags.find(key);
    return it == flags.end() ? std::move(fallback) : it->second;
}

inline int parse_count(const std::string& text, const std::string& what) {
    std::size_t pos = 0;
    int value = 0;
    try {
        value = std::stoi(text, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument(what + " must be an integer, got '" + text + "'");
    }
    if (pos != text.size())
        throw std::invalid_argument(what + " must be an integer, got '" + text + "'");
    return value;
}

inline double parse_real(const std::string& text, const std::string& what) {
    std::size_t pos = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument(what + " must be a real number, got '" + text + "'");
    }
    if (pos != text.size())
        throw std::invalid_argument(what + " must be a real number, got '" + text + "'");
    return value;
}

inline std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) out.push_back(item);
    if (!text.empty() && text.back() == ',') out.push_back("");
    return out;
}

inline Partition parse_lambda(const std::string& text) {
    std::vector<int> parts;
    for (const auto& item : split_commas(text)) parts.push_back(parse_count(item, "--lambda part"));
    if (parts.empty())
        throw std::invalid_argument("--lambda needs at least one part");
    return Partition(std::move(parts));
}

inline Composition parse_content(const std::string& text) {
    std::vector<int> entries;
    for (const auto& item : split_commas(text)) entries.push_back(parse_count(item, "--mu entry"));
    if (entries.empty())
        throw std::invalid_argument("--mu needs at least one entry");
    return Composition(std::move(entries));
}

inline std::vector<double> parse_angle_list(const std::string& text) {
    std::vector<double> out;
    for (const auto& item : split_commas(text)) out.push_back(parse_real(item, "angle"));
    return out;
}

inline bool want_json(const Flags& flags) {
    auto format = get_or(flags, "output", "text");
    if (format == "json") return true;
    if (format == "text") return false;
    throw std::invalid_argument("--output must be 'text' or 'json', got '" + format + "'");
}

inline Complex parse_complex(const std::string& token) {
    const char* s = token.c_str();
    char* end = nullptr;
    double a = std::strtod(s, &end);
    if (end == s)
        throw std::invalid_argument("bad complex entry '" + token + "'");
    if (*end == '\0') return Complex(a, 0.0);
    if (*end == 'i' && *(end + 1) == '\0') return Complex(0.0, a);
    const char* rest = end;
    double b = std::strtod(rest, &end);
    if (end == rest || *end != 'i' || *(end + 1) != '\0')
        throw std::invalid_argument("bad complex entry '" + token + "'");
    return Complex(a, b);
}

inline std::vector<ComplexMatrix> load_generator_file(const std::string& path, int d) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open generator file '" + path + "'");
    std::vector<Complex> entries;
    std::string token;
    while (in >> token) entries.push_back(parse_complex(token));
    const std::size_t per = static_cast<std::size_t>(d) * d;
    if (entries.empty() || entries.size() % per != 0)
        throw std::invalid_argument("generator file '" + path + "' must hold whole " +
                                    std::to_string(d) + "x" + std::to_string(d) + " matrices");
    std::vector<ComplexMatrix> out;
    for (std::size_t base = 0; base < entries.size(); base += per) {
        ComplexMatrix m(d, d);
        for (std::size_t k = 0; k < per; ++k) m.entries[k] = entries[base + k];
        out.push_back(std::move(m));
    }
    return out;
}

// Generator choice plus angle policy shared by simulate and encode-demo.
inline UcrChannel configure_channel(const Flags& flags, int d, int n, std::ostream& err) {
    auto choice = get_or(flags, "generators", "gellmann");
    GeneratorSet s;
    if (choice == "gellmann") {
        s = gell_mann_generators(d);
    } else if (choice == "pauli") {
        if (d != 2)
            throw std::invalid_argument("--generators pauli requires --d 2");
        s = gell_mann_generators(2);
    } else {
        auto mats = load_generator_file(choice, d);
        std::vector<double> placeholder(mats.size(), 1.0);
        s = make_generator_set(d, std::move(mats), std::move(placeholder));
    }
    auto angles = get_or(flags, "angles", "auto");
    if (angles == "auto") {
        s.angles = default_angles(s, n);
    } else {
        auto list = parse_angle_list(angles);
        if (list.size() != s.generators.size())
            throw std::invalid_argument("expected " + std::to_string(s.generators.size()) +
                                        " angles, got " + std::to_string(list.size()));
        s.angles = std::move(list);
    }
    auto ch = build_channel(s, n);
    for (const auto& w : ch.warnings) err << "warning: " << w << "\n";
    return ch;
}

inline std::string sci(double v) {
    std::ostringstream os;
    os << std::scientific << std::setprecision(3) << v;
    return os.str();
}

inline std::string fixed12(double v) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(12) << v;
    return os.str();
}

inline ordered_json tableau_rows_json(const std::vector<std::vector<int>>& rows) {
    ordered_json j = ordered_json::array();
    for (const auto& row : rows) j.push_back(row);
    return j;
}

inline std::string tableau_rows_text(const std::vector<std::vector<int>>& rows) {
    std::string s;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r) s += " / ";
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            if (c) s += " ";
            s += std::to_string(rows[r][c]);
        }
    }
    return s;
}

} // namespace detail

inline int run_decompose(const detail::Flags& flags, std::ostream& out) {
    int d = detail::parse_count(detail::require(flags, "d"), "--d");
    int n = detail::parse_count(detail::require(flags, "n"), "--n");
    auto report = decomposition_report(d, n);
    if (detail::want_json(flags)) {
        out << report_to_json(report).dump(2) << "\n";
        return kExitOk;
    }
    out << "d=" << report.d << " n=" << report.n << " state dimension " << report.dimension
        << "\n\n";
    out << std::left << std::setw(16) << "lambda" << std::right << std::setw(8) << "dim"
        << std::setw(8) << "mult" << "\n";
    for (const auto& b : report.blocks)
        out << std::left << std::setw(16) << b.lambda.to_string() << std::right << std::setw(8)
            << b.dim << std::setw(8) << b.mult << "\n";
    out << "\n" << std::left << std::setw(22) << "dimension check" << report.dimension_check
        << "\n" << std::setw(22) << "commutant dimension" << report.commutant_dim
        << "\n" << std::setw(22) << "interaction dimension" << report.interaction_dim
        << "\n" << std::setw(22) << "largest full matrix" << report.largest_full_matrix << "\n";
    return kExitOk;
}

inline int run_tableaux(const detail::Flags& flags, std::ostream& out) {
    auto lambda = detail::parse_lambda(detail::require(flags, "lambda"));
    unsigned long long dim = specht_dim(lambda);
    if (dim > kTableauxListCap)
        throw resource_error("listing " + std::to_string(dim) +
                             " standard tableaux exceeds the cap of " +
                             std::to_string(kTableauxListCap));
    auto standard = standard_tableaux(lambda);

    bool json = detail::want_json(flags);
    ordered_json j;
    if (json) {
        j["lambda"] = lambda.parts;
        j["dim"] = dim;
        j["standard"] = ordered_json::array();
        for (const auto& t : standard) j["standard"].push_back(detail::tableau_rows_json(t.rows));
    } else {
        out << "shape " << lambda.to_string() << ": dimension " << dim << ", "
            << standard.size() << (standard.size() == 1 ? " standard tableau\n"
                                                        : " standard tableaux\n");
        for (const auto& t : standard) out << "  " << detail::tableau_rows_text(t.rows) << "\n";
    }

    if (flags.find("mu") != flags.end()) {
        auto mu = detail::parse_content(flags.at("mu"));
        auto ssts = semistandard_with_content(lambda, mu);
        if (json) {
            j["mu"] = mu.entries;
            j["kostka"] = ssts.size();
            j["semistandard"] = ordered_json::array();
            for (const auto& t : ssts)
                j["semistandard"].push_back(detail::tableau_rows_json(t.rows));
        } else {
            out << "content " << mu.to_string() << ": " << ssts.size()
                << (ssts.size() == 1 ? " semistandard tableau\n" : " semistandard tableaux\n");
            for (const auto& t : ssts) out << "  " << detail::tableau_rows_text(t.rows) << "\n";
        }
    }

    if (json) out << j.dump(2) << "\n";
    return kExitOk;
}

inline int run_simulate(const detail::Flags& flags, std::ostream& out, std::ostream& err) {
    auto check = detail::require(flags, "check");
    int d = detail::parse_count(detail::get_or(flags, "d", "2"), "--d");
    int n = detail::parse_count(detail::get_or(flags, "n", "4"), "--n");
    unsigned seed = static_cast<unsigned>(
        detail::parse_count(detail::get_or(flags, "seed", "20210"), "--seed"));
    double tol = flags.find("tol") != flags.end()
                     ? detail::parse_real(flags.at("tol"), "--tol")
                     : default_tol();
    bool json = detail::want_json(flags);

    if (check == "fixed-points") {
        auto ch = detail::configure_channel(flags, d, n, err);
        double residual = group_fixed_residual(ch);
        bool pass = residual <= tol;
        if (json) {
            ordered_json j;
            j["check"] = "fixed-points";
            j["d"] = d;
            j["n"] = n;
            j["residual"] = residual;
            j["tolerance"] = tol;
            j["pass"] = pass;
            out << j.dump(2) << "\n";
        } else {
            out << "fixed-point residual over the permutation group: " << detail::sci(residual)
                << " (tolerance " << detail::sci(tol) << "): " << (pass ? "ok" : "FAILED")
                << "\n";
        }
        return pass ? kExitOk : kExitCheckFailed;
    }

    if (check == "round-trip") {
        auto report = decomposition_report(d, n);
        const DecompositionBlock* block = nullptr;
        if (flags.find("lambda") != flags.end()) {
            block = &find_block(report, detail::parse_lambda(flags.at("lambda")));
        } else {
            for (const auto& b : report.blocks)
                if (!block || b.dim > block->dim) block = &b;
        }
        auto ch = detail::configure_channel(flags, d, n, err);
        auto logical = random_density(static_cast<int>(block->dim), seed);
        auto ancilla = random_density(static_cast<int>(block->mult), seed + 1);
        auto rho = encode_noiseless(report, block->lambda, logical, ancilla);

        ComplexMatrix state = rho.mat;
        double fid1 = 0.0, fid10 = 0.0, leakage = 0.0;
        for (int k = 1; k <= 10; ++k) {
            state = apply_channel(ch, state);
            if (k != 1 && k != 10) continue;
            auto decoded = decode_noiseless(report, block->lambda, DensityMatrix(state));
            double fid = fidelity(decoded.logical, logical);
            (k == 1 ? fid1 : fid10) = fid;
            leakage = decoded.leakage;
        }
        bool pass = fid1 >= 1.0 - tol && fid10 >= 1.0 - tol;
        if (json) {
            ordered_json j;
            j["check"] = "round-trip";
            j["d"] = d;
            j["n"] = n;
            j["lambda"] = block->lambda.parts;
            j["logical_dim"] = block->dim;
            j["ancilla_dim"] = block->mult;
            j["fidelity_after_1"] = fid1;
            j["fidelity_after_10"] = fid10;
            j["leakage"] = leakage;
            j["pass"] = pass;
            out << j.dump(2) << "\n";
        } else {
            out << "block " << block->lambda.to_string() << ": logical dimension " << block->dim
                << ", ancilla dimension " << block->mult << "\n";
            out << "fidelity after 1 application:   " << detail::fixed12(fid1) << "\n";
            out << "fidelity after 10 applications: " << detail::fixed12(fid10) << "\n";
            out << "leakage: " << detail::sci(leakage) << "\n";
            out << (pass ? "ok" : "FAILED") << "\n";
        }
        return pass ? kExitOk : kExitCheckFailed;
    }

    throw std::invalid_argument("--check must be 'fixed-points' or 'round-trip', got '" + check +
                                "'");
}

inline int run_verify(const detail::Flags& flags, std::ostream& out) {
    auto suite = detail::get_or(flags, "suite", "small");
    if (suite != "small" && suite != "full")
        throw std::invalid_argument("--suite must be 'small' or 'full', got '" + suite + "'");
    auto reports = run_verify_suite(suite == "full");
    bool all = true;
    for (const auto& r : reports) all = all && r.pass;

    if (detail::want_json(flags)) {
        ordered_json j;
        j["suite"] = suite;
        j["reports"] = ordered_json::array();
        for (const auto& r : reports) {
            ordered_json jr;
            jr["name"] = r.name;
            jr["expected"] = r.expected;
            jr["observed"] = r.observed;
            jr["tolerance"] = r.tolerance;
            jr["pass"] = r.pass;
            j["reports"].push_back(std::move(jr));
        }
        j["pass"] = all;
        out << j.dump(2) << "\n";
    } else {
        std::size_t passed = 0;
        for (const auto& r : reports) {
            out << (r.pass ? "[ OK ] " : "[FAIL] ") << r.name << ": expected " << r.expected
                << ", observed " << r.observed << "\n";
            if (r.pass) ++passed;
        }
        out << "suite " << suite << ": " << passed << " of " << reports.size()
            << " checks passed\n";
    }
    return all ? kExitOk : kExitCheckFailed;
}

inline int run_encode_demo(const detail::Flags& flags, std::ostream& out, std::ostream& err) {
    auto lambda = detail::parse_lambda(detail::require(flags, "lambda"));
    int d = detail::parse_count(detail::get_or(flags, "d", "3"), "--d");
    int n = detail::parse_count(detail::get_or(flags, "n", "4"), "--n");
    unsigned seed = static_cast<unsigned>(
        detail::parse_count(detail::get_or(flags, "seed", "20210"), "--seed"));
    double tol = flags.find("tol") != flags.end()
                     ? detail::parse_real(flags.at("tol"), "--tol")
                     : default_tol();

    auto report = decomposition_report(d, n);
    const auto& block = find_block(report, lambda);
    auto logical = random_density(static_cast<int>(block.dim), seed);
    auto ancilla = DensityMatrix(scale(ComplexMatrix::identity(static_cast<int>(block.mult)),
                                       1.0 / static_cast<double>(block.mult)));
    auto rho = encode_noiseless(report, lambda, logical, ancilla);
    auto ch = detail::configure_channel(flags, d, n, err);

    ComplexMatrix state = rho.mat;
    for (int k = 0; k < 10; ++k) state = apply_channel(ch, state);
    auto decoded = decode_noiseless(report, lambda, DensityMatrix(state));
    double fid = fidelity(decoded.logical, logical);
    bool pass = fid >= 1.0 - tol;

    if (detail::want_json(flags)) {
        ordered_json j;
        j["lambda"] = lambda.parts;
        j["logical_dim"] = block.dim;
        j["ancilla_dim"] = block.mult;
        j["applications"] = 10;
        j["fidelity"] = fid;
        j["leakage"] = decoded.leakage;
        j["pass"] = pass;
        out << j.dump(2) << "\n";
    } else {
        out << "block " << lambda.to_string() << " of the (" << d << "," << n
            << ") decomposition: logical dimension " << block.dim << ", ancilla dimension "
            << block.mult << "\n";
        out << "a random logical state was encoded against a maximally mixed ancilla,\n"
            << "then pushed through the channel 10 times\n";
        out << "recovered fidelity: " << detail::fixed12(fid) << "\n";
        out << "leakage out of the block: " << detail::sci(decoded.leakage) << "\n";
        out << (pass ? "ok" : "FAILED") << "\n";
    }
    return pass ? kExitOk : kExitCheckFailed;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    if (args.empty()) {
        err << kUsage;
        return kExitUsage;
    }
    const std::string& cmd = args[0];
    if (cmd == "help" || cmd == "--help" || cmd == "-h") {
        out << kUsage;
        return kExitOk;
    }
    try {
        if (cmd == "decompose") {
            auto flags = detail::parse_flags(args, 1, {"d", "n", "output"});
            return run_decompose(flags, out);
        }
        if (cmd == "tableaux") {
            auto flags = detail::parse_flags(args, 1, {"lambda", "mu", "output"});
            return run_tableaux(flags, out);
        }
        if (cmd == "simulate") {
            auto flags = detail::parse_flags(
                args, 1,
                {"check", "d", "n", "generators", "angles", "lambda", "seed", "tol", "output"});
            return run_simulate(flags, out, err);
        }
        if (cmd == "verify") {
            auto flags = detail::parse_flags(args, 1, {"suite", "output"});
            return run_verify(flags, out);
        }
        if (cmd == "encode-demo") {
            auto flags = detail::parse_flags(
                args, 1, {"lambda", "d", "n", "generators", "angles", "seed", "tol", "output"});
            return run_encode_demo(flags, out, err);
        }
        err << "unknown subcommand '" << cmd << "'\n\n" << kUsage;
        return kExitUsage;
    } catch (const resource_error& e) {
        err << "resource limit: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

} // namespace ucr::cli
