#include "mpk/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <map>
#include <random>
#include <sstream>
#include <vector>

#include "mpk/bench.hpp"
#include "mpk/ecc.hpp"
#include "mpk/gcd_inverse.hpp"
#include "mpk/io_formats.hpp"
#include "mpk/rsa.hpp"

namespace mpk::cli {

namespace {

// Bad input that is the caller's fault rather than a mathematical outcome.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class OutputFormat { dec, hex, bitfile };

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw UsageError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Decimal, 0x-hex, 0b-binary, or @path naming a bit file.
Natural read_value(const std::string& text, const std::string& what)
{
    try {
        if (!text.empty() && text.front() == '@')
            return io::parse_bitfile(read_file(text.substr(1)));
        return io::parse_int(text);
    } catch (const io::ParseError& e) {
        throw UsageError(what + ": " + e.what());
    }
}

std::string format(const Natural& n, OutputFormat fmt)
{
    switch (fmt) {
    case OutputFormat::hex: return "0x" + n.to_string(16);
    case OutputFormat::bitfile: return io::write_bitfile(n);
    case OutputFormat::dec: break;
    }
    return n.to_string(10);
}

std::string format(const Integer& n, OutputFormat fmt)
{
    return (n.is_negative() ? "-" : "") + format(n.magnitude(), fmt);
}

std::vector<std::string> split_commas(const std::string& text)
{
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (;;) {
        const std::size_t comma = text.find(',', start);
        parts.push_back(text.substr(start, comma - start));
        if (comma == std::string::npos)
            return parts;
        start = comma + 1;
    }
}

ec::Curve read_curve(const std::string& text)
{
    const auto parts = split_commas(text);
    if (parts.size() != 3)
        throw UsageError("--curve expects p,a,b");
    return ec::Curve::make(read_value(parts[0], "curve p"), read_value(parts[1], "curve a"),
                           read_value(parts[2], "curve b"));
}

ec::Point read_point(const ec::Curve& curve, const std::string& text, const std::string& what)
{
    if (text == "infinity")
        return ec::Point::infinity();
    const auto parts = split_commas(text);
    if (parts.size() != 2)
        throw UsageError(what + " expects x,y or infinity");
    return curve.point(read_value(parts[0], what + " x"), read_value(parts[1], what + " y"));
}

const std::map<std::string, OutputFormat> format_names{
    {"dec", OutputFormat::dec}, {"hex", OutputFormat::hex}, {"bitfile", OutputFormat::bitfile}};

const std::map<std::string, GcdAlgorithm> algorithm_names{
    {"binary", GcdAlgorithm::binary}, {"euclid", GcdAlgorithm::euclid}};

void write_bench_report(std::ostream& out, std::size_t bits, std::uint64_t seed,
                        const std::vector<bench::InverseInput>& inputs,
                        const std::vector<bench::InverseBenchResult>& results)
{
    const auto hex64 = [](std::uint64_t v) {
        std::ostringstream ss;
        ss << std::hex << std::setw(16) << std::setfill('0') << v;
        return ss.str();
    };
    out << "bench inv: bits=" << bits << " iters=" << inputs.size() << " seed=" << seed
        << " inputs=" << hex64(bench::fingerprint(inputs)) << '\n';
    for (const auto& r : results) {
        out << "algo=" << bench::algorithm_name(r.algorithm) << std::fixed << std::setprecision(3)
            << " median_us=" << r.median_us << " total_ms=" << r.total_ms << " invertible=" << r.invertible << '/'
            << r.iterations << " gcds=" << hex64(bench::fingerprint(r.gcds)) << '\n';
        if (r.bezout_passed == r.iterations)
            out << "bezout " << bench::algorithm_name(r.algorithm) << ": all " << r.iterations << " checks passed\n";
        else
            out << "bezout " << bench::algorithm_name(r.algorithm) << ": " << (r.iterations - r.bezout_passed)
                << " of " << r.iterations << " checks FAILED\n";
    }
    if (results.size() == 2) {
        const bool same = results[0].gcds == results[1].gcds;
        out << "agreement: " << (same ? "binary and euclid gcd identical on all " : "binary and euclid gcd DIFFER on ")
            << inputs.size() << " inputs\n";
    }
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Multiprecision modular inverse, RSA and elliptic-curve toolkit", "mpk"};
    app.require_subcommand(1);

    OutputFormat fmt = OutputFormat::dec;
    GcdAlgorithm algo = GcdAlgorithm::binary;
    const auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", fmt, "Output format")->transform(CLI::CheckedTransformer(format_names));
    };
    const auto add_algo = [&](CLI::App* cmd) {
        cmd->add_option("--algo", algo, "Extended GCD algorithm")->transform(CLI::CheckedTransformer(algorithm_names));
    };

    // inv
    std::string modulus_text, element_text;
    auto* inv = app.add_subcommand("inv", "Modular inverse of an element");
    inv->add_option("--modulus", modulus_text, "Modulus (dec, 0x.., 0b.. or @bitfile)")->required();
    inv->add_option("--element", element_text, "Element to invert")->required();
    add_format(inv);
    add_algo(inv);

    // gcd
    std::string gcd_x, gcd_y;
    bool bezout = false;
    auto* gcd_cmd = app.add_subcommand("gcd", "Greatest common divisor");
    gcd_cmd->add_option("x", gcd_x)->required();
    gcd_cmd->add_option("y", gcd_y)->required();
    gcd_cmd->add_flag("--bezout", bezout, "Also print Bezout coefficients a, b with a*x + b*y = g");
    add_format(gcd_cmd);
    add_algo(gcd_cmd);

    // rsa
    auto* rsa_cmd = app.add_subcommand("rsa", "RSA key generation and raw signatures");
    rsa_cmd->require_subcommand(1);
    std::size_t key_bits = 0;
    std::string e_text, out_path, key_path, msg_text, sig_text;
    bool random_e = false;
    std::uint64_t seed = 0;
    auto* keygen = rsa_cmd->add_subcommand("keygen", "Generate a key pair");
    keygen->add_option("--bits", key_bits, "Modulus size in bits")->required()->check(CLI::Range(8, 1 << 16));
    auto* e_opt = keygen->add_option("--e", e_text, "Public exponent (default 65537)");
    auto* random_e_flag = keygen->add_flag("--random-e", random_e, "Draw a random public exponent");
    e_opt->excludes(random_e_flag);
    auto* keygen_seed = keygen->add_option("--seed", seed, "RNG seed");
    keygen->add_option("--out", out_path, "Key file to write")->required();
    add_format(keygen);

    auto* sign = rsa_cmd->add_subcommand("sign-raw", "Unpadded m^d mod n");
    sign->add_option("--key", key_path)->required();
    sign->add_option("--msg", msg_text)->required();
    add_format(sign);

    auto* verify = rsa_cmd->add_subcommand("verify-raw", "Check s^e mod n == m");
    verify->add_option("--key", key_path)->required();
    verify->add_option("--msg", msg_text)->required();
    verify->add_option("--sig", sig_text)->required();

    // ec
    auto* ec_cmd = app.add_subcommand("ec", "Elliptic-curve point arithmetic over F_p");
    ec_cmd->require_subcommand(1);
    std::string curve_text, p_text, q_text, k_text;
    std::uint64_t points_bound = ec::default_enumeration_bound;
    auto* ec_add = ec_cmd->add_subcommand("add", "P + Q");
    auto* ec_double = ec_cmd->add_subcommand("double", "2P");
    auto* ec_mul = ec_cmd->add_subcommand("mul", "kP");
    auto* ec_points = ec_cmd->add_subcommand("points", "List every point (small p only)");
    for (auto* cmd : {ec_add, ec_double, ec_mul, ec_points})
        cmd->add_option("--curve", curve_text, "p,a,b for y^2 = x^3 + ax + b")->required();
    for (auto* cmd : {ec_add, ec_double, ec_mul})
        cmd->add_option("--P", p_text, "x,y or infinity")->required();
    ec_add->add_option("--Q", q_text, "x,y or infinity")->required();
    ec_mul->add_option("--k", k_text, "Scalar")->required();
    ec_points->add_option("--bound", points_bound, "Largest p accepted");

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "Micro-benchmarks");
    bench_cmd->require_subcommand(1);
    auto* bench_inv = bench_cmd->add_subcommand("inv", "Time modular inversion");
    std::string bench_algo = "both";
    std::size_t bench_bits = 2048;
    std::size_t bench_iters = 100;
    std::uint64_t bench_seed = 1;
    bench_inv->add_option("--algo", bench_algo)->check(CLI::IsMember({"binary", "euclid", "both"}));
    bench_inv->add_option("--bits", bench_bits)->check(CLI::Range(2, 1 << 16));
    bench_inv->add_option("--iters", bench_iters)->check(CLI::Range(1, 1 << 24));
    bench_inv->add_option("--seed", bench_seed);

    std::vector<const char*> argv{"mpk"};
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_usage_error;
    }

    try {
        if (inv->parsed()) {
            const Natural m = read_value(modulus_text, "--modulus");
            const Natural e = read_value(element_text, "--element");
            out << format(mod_inverse(e, m, algo), fmt) << '\n';
        } else if (gcd_cmd->parsed()) {
            const Natural x = read_value(gcd_x, "x");
            const Natural y = read_value(gcd_y, "y");
            if (bezout) {
                const ExtGcdResult r = ext_gcd(x, y, algo);
                out << "g=" << format(r.g, fmt) << " a=" << format(r.a, fmt) << " b=" << format(r.b, fmt) << '\n';
            } else {
                out << format(gcd(x, y), fmt) << '\n';
            }
        } else if (keygen->parsed()) {
            if (keygen_seed->count() == 0)
                seed = std::random_device{}() | (std::uint64_t{std::random_device{}()} << 32);
            rsa::KeygenOptions options;
            options.random_e = random_e;
            const Natural e = e_text.empty() ? Natural(rsa::default_public_exponent) : read_value(e_text, "--e");
            Rng rng(seed);
            const rsa::KeyPair key = rsa::keygen(key_bits, e, rng, options);
            std::ofstream file(out_path, std::ios::binary | std::ios::trunc);
            if (!(file << io::serialize_keypair(key)))
                throw UsageError("cannot write " + out_path);
            out << "seed=" << seed << '\n' << "n=" << format(key.n, fmt) << '\n' << "e=" << format(key.e, fmt) << '\n';
        } else if (sign->parsed()) {
            const rsa::KeyPair key = io::parse_keypair(read_file(key_path));
            out << format(rsa::sign_raw(key, read_value(msg_text, "--msg")), fmt) << '\n';
        } else if (verify->parsed()) {
            const rsa::KeyPair key = io::parse_keypair(read_file(key_path));
            const bool ok =
                rsa::verify_raw(key.n, key.e, read_value(msg_text, "--msg"), read_value(sig_text, "--sig"));
            out << (ok ? "valid" : "invalid") << '\n';
            return ok ? exit_ok : exit_domain_error;
        } else if (ec_add->parsed()) {
            const ec::Curve curve = read_curve(curve_text);
            out << ec::add_points(curve, read_point(curve, p_text, "--P"), read_point(curve, q_text, "--Q")).to_string()
                << '\n';
        } else if (ec_double->parsed()) {
            const ec::Curve curve = read_curve(curve_text);
            out << ec::double_point(curve, read_point(curve, p_text, "--P")).to_string() << '\n';
        } else if (ec_mul->parsed()) {
            const ec::Curve curve = read_curve(curve_text);
            out << ec::scalar_mul(curve, read_value(k_text, "--k"), read_point(curve, p_text, "--P")).to_string()
                << '\n';
        } else if (ec_points->parsed()) {
            const ec::Curve curve = read_curve(curve_text);
            for (const auto& pt : ec::enumerate_points(curve, points_bound))
                out << pt.to_string() << '\n';
        } else if (bench_inv->parsed()) {
            const auto inputs = bench::make_inverse_inputs(bench_bits, bench_iters, bench_seed);
            std::vector<bench::InverseBenchResult> results;
            if (bench_algo != "euclid")
                results.push_back(bench::run_inverse_bench(GcdAlgorithm::binary, inputs));
            if (bench_algo != "binary")
                results.push_back(bench::run_inverse_bench(GcdAlgorithm::euclid, inputs));
            write_bench_report(out, bench_bits, bench_seed, inputs, results);
            for (const auto& r : results) {
                if (r.bezout_passed != r.iterations)
                    return exit_domain_error;
            }
            if (results.size() == 2 && results[0].gcds != results[1].gcds)
                return exit_domain_error;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage_error;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage_error;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_domain_error;
    }
    return exit_ok;
}

}  // namespace mpk::cli
