// smdm: fixed-to-fixed length distribution matching via shell mapping.
//
// Subcommands: fit-mb, weights, encode, decode, sweep, compare-ccdm.
// Exit codes: 0 success, 2 configuration error, 3 data/domain error.

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "smdm/analysis.hpp"
#include "smdm/json_io.hpp"
#include "smdm/stream_codec.hpp"

namespace {

using namespace smdm;

struct TargetOpts {
    std::string dist_path;
    std::vector<double> support;
    double mb_entropy = std::numeric_limits<double>::quiet_NaN();
    double mb_v = std::numeric_limits<double>::quiet_NaN();
};

void add_target_flags(CLI::App* cmd, TargetOpts& opts) {
    cmd->add_option("--dist", opts.dist_path, "target distribution JSON file");
    cmd->add_option("--support", opts.support, "alphabet values, e.g. 1,3,5,7")->delimiter(',');
    cmd->add_option("--mb-entropy", opts.mb_entropy, "fit a Maxwell-Boltzmann target to this entropy (bits)");
    cmd->add_option("--mb-v", opts.mb_v, "Maxwell-Boltzmann rate parameter");
}

Distribution resolve_target(const TargetOpts& opts) {
    const bool from_file = !opts.dist_path.empty();
    const bool from_v = !std::isnan(opts.mb_v);
    const bool from_h = !std::isnan(opts.mb_entropy);
    if (from_file + from_v + from_h != 1)
        throw std::invalid_argument("exactly one of --dist, --mb-v, --mb-entropy is required");
    if (from_file) {
        std::ifstream in(opts.dist_path);
        if (!in) throw std::invalid_argument("cannot open distribution file " + opts.dist_path);
        return distribution_from_json(nlohmann::json::parse(in));
    }
    if (opts.support.empty()) throw std::invalid_argument("--support is required with --mb-v/--mb-entropy");
    if (from_v) return maxwell_boltzmann(opts.support, opts.mb_v);
    return mb_fit_entropy(opts.support, opts.mb_entropy).dist;
}

// --weights energy | dyadic | selfinfo[:q=<int>] | explicit:<comma list>
WeightFunction resolve_weights(const std::string& spec, const TargetOpts& target_opts) {
    auto alphabet_values = [&]() -> std::vector<double> {
        if (!target_opts.support.empty()) return target_opts.support;
        return resolve_target(target_opts).support();
    };
    if (spec == "energy") return weights_energy(Alphabet(alphabet_values()));
    if (spec == "dyadic") return weights_dyadic(resolve_target(target_opts));
    if (spec == "selfinfo" || spec.starts_with("selfinfo:")) {
        unsigned q = 8;
        if (const auto colon = spec.find(':'); colon != std::string::npos) {
            const std::string arg = spec.substr(colon + 1);
            if (!arg.starts_with("q=")) throw std::invalid_argument("--weights selfinfo expects selfinfo:q=<int>");
            q = static_cast<unsigned>(std::stoul(arg.substr(2)));
        }
        return weights_self_information(resolve_target(target_opts), q);
    }
    if (spec.starts_with("explicit:")) {
        std::vector<long long> omega;
        std::istringstream ss(spec.substr(9));
        std::string tok;
        while (std::getline(ss, tok, ',')) omega.push_back(std::stoll(tok));
        return weights_from_omega(Alphabet(alphabet_values()), omega);
    }
    throw std::invalid_argument("unknown --weights spec \"" + spec + "\"");
}

SymbolFormat parse_symbol_format(const std::string& format) {
    if (format == "bytes") return SymbolFormat::bytes;
    if (format == "text") return SymbolFormat::text;
    throw std::invalid_argument("--format must be bytes or text");
}

unsigned bits_for_rate(std::uint32_t n, double rate) {
    return static_cast<unsigned>(std::ceil(rate * static_cast<double>(n) - 1e-9));
}

std::string fmt(double x) {
    std::ostringstream ss;
    ss << std::setprecision(12) << x;
    return ss.str();
}

int run_fit_mb(const TargetOpts& opts, double tol) {
    if (opts.support.empty() || std::isnan(opts.mb_entropy))
        throw std::invalid_argument("fit-mb needs --support and --mb-entropy");
    const MbFit fit = mb_fit_entropy(opts.support, opts.mb_entropy, tol);
    nlohmann::json doc{{"support", opts.support}, {"mb_v", fit.v}, {"entropy", entropy(fit.dist)}};
    std::cout << doc.dump() << "\n";
    std::cerr << "v = " << fmt(fit.v) << ", entropy = " << fmt(entropy(fit.dist)) << " bits\n";
    return 0;
}

int run_weights(const std::string& spec, const TargetOpts& opts) {
    std::cout << to_json(resolve_weights(spec, opts)).dump() << "\n";
    return 0;
}

int run_codec(bool encode, const std::string& weight_spec, const TargetOpts& opts, std::uint32_t n,
              unsigned m, const std::string& in_path, const std::string& out_path,
              const std::string& format) {
    const ShellMapper mapper(n, resolve_weights(weight_spec, opts));
    std::ifstream in(in_path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open input file " + in_path);
    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::invalid_argument("cannot open output file " + out_path);
    if (encode)
        encode_stream(mapper, m, in, out, parse_symbol_format(format));
    else
        decode_stream(mapper, m, in, out, parse_symbol_format(format));
    return 0;
}

int run_sweep(const std::vector<std::uint32_t>& n_list, const std::string& weight_spec,
              const TargetOpts& opts, double rate, bool auto_m, unsigned window,
              unsigned exact_cap, const std::string& out_path) {
    if (n_list.empty()) throw std::invalid_argument("sweep needs --n-list");
    if (!auto_m && std::isnan(rate)) throw std::invalid_argument("sweep needs --rate or --auto-m");
    const Distribution target = resolve_target(opts);
    const WeightFunction wf = resolve_weights(weight_spec, opts);

    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path, std::ios::trunc);
        if (!file) throw std::invalid_argument("cannot open output file " + out_path);
    }
    std::ostream& out = out_path.empty() ? std::cout : file;

    out << "n,m,rate,D_exact,D_norm_exact,D_approx_wmax,D_approx_wmax_minus_1,D_ccdm,D_ccdm_norm\n";
    unsigned produced = 0;
    for (const std::uint32_t n : n_list) {
        std::string m_field, rate_field;
        std::string d_exact, d_norm, d_wmax, d_wmax1, d_ccdm, d_ccdm_norm;
        try {
            unsigned m = auto_m ? 0 : bits_for_rate(n, rate);
            if (m <= exact_cap || auto_m) {
                // rank/unrank tables double as exact letter-statistic tables
                const ShellMapper mapper(n, wf);
                if (auto_m) m = optimal_input_length(mapper, target, window, exact_cap).m;
                mapper.codebook_size(m);  // validates m against |A|^n
                if (m <= exact_cap) {
                    const DivergenceReport rep = divergence_exact(mapper, m, target);
                    d_exact = fmt(rep.divergence_bits);
                    d_norm = fmt(rep.normalized_bits);
                }
                try {
                    d_wmax = fmt(divergence_approx(mapper, m, target, ShellChoice::w_max).divergence_bits);
                    d_wmax1 =
                        fmt(divergence_approx(mapper, m, target, ShellChoice::w_max_minus_1).divergence_bits);
                } catch (const std::domain_error&) {
                    // w_max-1 can fall below the minimum sequence weight; leave the field empty
                }
            } else {
                // beyond the exact cap only partial histograms are reported;
                // the rolling pass keeps memory flat for large n
                const auto rows = divergence_approx_sweep(wf, target, {n}, {m});
                d_wmax = fmt(rows[0].w_max.divergence_bits);
                if (rows[0].has_w_max_minus_1) d_wmax1 = fmt(rows[0].w_max_minus_1.divergence_bits);
            }
            m_field = std::to_string(m);
            rate_field = fmt(static_cast<double>(m) / n);
            const DivergenceReport ccdm = ccdm_divergence(n_type_quantize(target, n), target);
            d_ccdm = fmt(ccdm.divergence_bits);
            d_ccdm_norm = fmt(ccdm.normalized_bits);
            ++produced;
        } catch (const std::exception& e) {
            std::cerr << "warning: n=" << n << ": " << e.what() << "\n";
        }
        out << n << ',' << m_field << ',' << rate_field << ',' << d_exact << ',' << d_norm << ','
            << d_wmax << ',' << d_wmax1 << ',' << d_ccdm << ',' << d_ccdm_norm << "\n";
    }
    out.flush();
    return produced > 0 ? 0 : 2;
}

int run_compare_ccdm(const std::vector<std::uint32_t>& n_list, const TargetOpts& opts,
                     const std::string& out_path) {
    if (n_list.empty()) throw std::invalid_argument("compare-ccdm needs --n-list");
    const Distribution target = resolve_target(opts);

    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path, std::ios::trunc);
        if (!file) throw std::invalid_argument("cannot open output file " + out_path);
    }
    std::ostream& out = out_path.empty() ? std::cout : file;

    out << "n,m,rate,D_ccdm,D_ccdm_norm,composition\n";
    for (const std::uint32_t n : n_list) {
        const Composition comp = n_type_quantize(target, n);
        const DivergenceReport rep = ccdm_divergence(comp, target);
        out << n << ',' << rep.m << ',' << fmt(static_cast<double>(rep.m) / n) << ','
            << fmt(rep.divergence_bits) << ',' << fmt(rep.normalized_bits) << ',';
        for (std::size_t i = 0; i < comp.size(); ++i) {
            if (i) out << '|';
            out << comp.counts()[i];
        }
        out << "\n";
    }
    out.flush();
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"shell-mapping distribution matcher"};
    app.require_subcommand(1);

    TargetOpts target;
    std::string weight_spec = "energy";
    std::vector<std::uint32_t> n_list;
    std::uint32_t n = 0;
    unsigned m = 0;
    double rate = std::numeric_limits<double>::quiet_NaN();
    double tol = 1e-9;
    bool auto_m = false;
    unsigned window = 8;
    unsigned exact_cap = 64;
    std::string in_path, out_path, format = "bytes";

    auto* fit = app.add_subcommand("fit-mb", "fit a Maxwell-Boltzmann target to an entropy");
    add_target_flags(fit, target);
    fit->add_option("--tol", tol, "entropy tolerance in bits");

    auto* weights = app.add_subcommand("weights", "derive a weight function from a target");
    add_target_flags(weights, target);
    weights->add_option("--weights", weight_spec, "energy | dyadic | selfinfo:q=<int> | explicit:<list>");

    auto* encode = app.add_subcommand("encode", "map a bit stream to shaped symbol blocks");
    add_target_flags(encode, target);
    encode->add_option("--weights", weight_spec, "weight function spec");
    encode->add_option("-n", n, "output block length in symbols")->required();
    encode->add_option("-m", m, "input block length in bits")->required();
    encode->add_option("--in", in_path, "input file")->required();
    encode->add_option("--out", out_path, "output file")->required();
    encode->add_option("--format", format, "bytes | text");

    auto* decode = app.add_subcommand("decode", "map shaped symbol blocks back to the bit stream");
    add_target_flags(decode, target);
    decode->add_option("--weights", weight_spec, "weight function spec");
    decode->add_option("-n", n, "output block length in symbols")->required();
    decode->add_option("-m", m, "input block length in bits")->required();
    decode->add_option("--in", in_path, "input file")->required();
    decode->add_option("--out", out_path, "output file")->required();
    decode->add_option("--format", format, "bytes | text");

    auto* sweep = app.add_subcommand("sweep", "divergence comparison across block lengths (CSV)");
    add_target_flags(sweep, target);
    sweep->add_option("--weights", weight_spec, "weight function spec");
    sweep->add_option("--n-list", n_list, "block lengths")->delimiter(',')->required();
    sweep->add_option("--rate", rate, "matcher rate; per row m = ceil(n * rate)");
    sweep->add_flag("--auto-m", auto_m, "search m around n*H(target) per row");
    sweep->add_option("--window", window, "search window for --auto-m");
    sweep->add_option("--exact-cap", exact_cap, "largest m for exact divergence");
    sweep->add_option("--out", out_path, "CSV output file (default stdout)");

    auto* compare = app.add_subcommand("compare-ccdm", "analytic constant-composition baseline (CSV)");
    add_target_flags(compare, target);
    compare->add_option("--n-list", n_list, "block lengths")->delimiter(',')->required();
    compare->add_option("--out", out_path, "CSV output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (fit->parsed()) return run_fit_mb(target, tol);
        if (weights->parsed()) return run_weights(weight_spec, target);
        if (encode->parsed()) return run_codec(true, weight_spec, target, n, m, in_path, out_path, format);
        if (decode->parsed()) return run_codec(false, weight_spec, target, n, m, in_path, out_path, format);
        if (sweep->parsed())
            return run_sweep(n_list, weight_spec, target, rate, auto_m, window, exact_cap, out_path);
        if (compare->parsed()) return run_compare_ccdm(n_list, target, out_path);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
