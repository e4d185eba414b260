// acscalc: exact-arithmetic calculator for almost-complex-structure
// obstructions tied to small Betti-number sums. Every mathematically
// meaningful quantity is computed with arbitrary-precision integers and
// rationals; the only floating point is the zeta cross-check.

#include "acs/bernoulli.hpp"
#include "acs/betti3.hpp"
#include "acs/genus.hpp"
#include "acs/report.hpp"
#include "acs/sphere.hpp"
#include "acs/valuation.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <new>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitAuditFailure = 2;
constexpr int kExitResourceLimit = 3;

// Human-mode rendering: big integers are shown whole up to a cutoff, then
// summarized by digit count. Machine formats always carry full precision.
std::string human_int(const acs::Int& n, size_t cutoff = 40) {
    std::string s = n.get_str();
    if (s.size() <= cutoff) return s;
    return "[" + std::to_string(s.size()) + "-digit integer]";
}

std::string human_rat(const acs::Rat& q, size_t cutoff = 40) {
    if (acs::is_integer(q)) return human_int(acs::numerator(q), cutoff);
    return human_int(acs::numerator(q), cutoff) + "/" +
           human_int(acs::denominator(q), cutoff);
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    out << text;
}

int cmd_bernoulli(unsigned long m) {
    const acs::BernoulliEntry b = acs::bernoulli(m);
    std::cout << "B_" << m << " = " << b.numerator.get_str() << " / "
              << b.denominator.get_str() << "\n"
              << "decimal ~ " << std::setprecision(15) << b.value.get_d()
              << "\n";
    return kExitOk;
}

int cmd_sphere(unsigned long dim) {
    const acs::SphereVerdict v = acs::sphere_verdict(dim);
    std::cout << "dim " << dim << " (n = " << v.n
              << "): " << acs::to_string(v.outcome) << "\n";
    switch (v.outcome) {
        case acs::SphereOutcome::Allowed:
            std::cout << "an almost complex rational homology sphere of this "
                         "dimension is not obstructed\n";
            break;
        case acs::SphereOutcome::SignatureObstruction:
            std::cout << "signature 0 would have to equal 4*(-1)^" << v.n / 2
                      << "*h_" << v.n / 2 << " = " << human_rat(v.signature_witness)
                      << " != 0\n";
            break;
        case acs::SphereOutcome::FactorialObstruction:
            std::cout << "(n-1)! = " << human_int(v.factorial_witness)
                      << " would have to divide chi = 2\n";
            break;
    }
    return kExitOk;
}

int cmd_eta(unsigned long k) {
    const acs::Betti3Record rec = acs::betti3_status(8 * k);
    std::cout << "dimension 8k = " << 8 * k << "\n"
              << "eta^2 = " << human_rat(*rec.eta_squared) << "\n"
              << "lower bound 1/(2 h_k^2) = " << human_rat(*rec.lower_bound)
              << "\n"
              << "status: " << acs::to_string(rec.status) << "\n"
              << "rule:   " << rec.rule << "\n";
    if (rec.eta) std::cout << "eta = " << human_int(*rec.eta) << "\n";
    return kExitOk;
}

int cmd_padic(unsigned long k, unsigned long p) {
    const acs::OddPrimeAnalysis a = acs::max_eta_valuation(k, p);
    std::cout << "nu_" << p << "(eta^2) = " << a.eta_squared_valuation << "\n";
    if (a.contradiction)
        std::cout << "contradiction: no integer eta is compatible with this "
                     "valuation\n";
    else
        std::cout << "max nu_" << p << "(eta) = " << a.max_eta_valuation << "\n";
    return kExitOk;
}

int cmd_scan(unsigned long max_dim, const std::string& format, bool parallel,
             const std::string& out_path, unsigned long limit) {
    if (max_dim > limit) {
        std::cerr << "scan: max-dim " << max_dim << " exceeds the safety limit "
                  << limit << " (raise it with --limit)\n";
        return kExitResourceLimit;
    }
    const acs::ScanReport report = acs::scan(max_dim, parallel);
    if (format == "json") {
        emit(acs::to_json(report) + "\n", out_path);
    } else if (format == "tsv") {
        emit(acs::to_tsv(report), out_path);
    } else {
        std::ostringstream os;
        os << std::left << std::setw(6) << "dim" << std::setw(22) << "status"
           << "eta^2\n";
        for (const acs::Betti3Record& rec : report.rows) {
            if (rec.status == acs::Betti3Status::ImpossibleParity) continue;
            os << std::left << std::setw(6) << rec.dim << std::setw(22)
               << acs::to_string(rec.status)
               << (rec.eta_squared ? human_rat(*rec.eta_squared) : "-") << "\n";
        }
        os << "(parity-impossible dimensions omitted; " << report.rows.size()
           << " dimensions scanned)\n";
        emit(os.str(), out_path);
    }
    if (!report.regressions_ok) {
        std::cerr << "scan: pinned regressions violated\n";
        return kExitAuditFailure;
    }
    return kExitOk;
}

int cmd_figure(unsigned long max_dim, const std::string& format,
               const std::string& out_path) {
    const auto rows = acs::figure_rows(max_dim);
    if (format == "json") {
        emit(acs::to_json(rows) + "\n", out_path);
    } else if (format == "tsv") {
        emit(acs::to_tsv(rows), out_path);
    } else {
        std::ostringstream os;
        os << std::left << std::setw(6) << "dim" << std::setw(10) << "min sum"
           << "witness\n";
        for (const acs::FigureRow& row : rows) {
            os << std::left << std::setw(6) << row.dim << std::setw(10)
               << (row.min_betti_sum
                       ? std::to_string(*row.min_betti_sum)
                       : "[" + std::to_string(row.bracket_low) + "," +
                             std::to_string(row.bracket_high) + "]")
               << (row.witness.empty() ? "-" : row.witness) << "\n";
        }
        emit(os.str(), out_path);
    }
    return kExitOk;
}

int cmd_verify() {
    const auto results = acs::run_audits();
    bool all_passed = true;
    for (const acs::AuditResult& r : results) {
        std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << " -- "
                  << r.rule << "\n";
        if (!r.passed) {
            std::cout << "       " << r.detail << "\n";
            all_passed = false;
        }
    }
    return all_passed ? kExitOk : kExitAuditFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact obstruction calculator for almost complex structures "
                 "with small Betti-number sums"};
    app.require_subcommand(1);
    app.set_version_flag("--version", acs::kToolVersion);

    unsigned long m = 0, k = 0, dim = 0, n = 0, p = 0;
    long chi = 0;
    std::string format = "human", out_path;
    unsigned long max_dim = 2048, limit = 65536;
    bool parallel = false;

    auto* sub_bernoulli = app.add_subcommand("bernoulli", "print B_m exactly");
    sub_bernoulli->add_option("m", m, "index (unsigned convention)")->required();

    auto* sub_h = app.add_subcommand("genus-h", "leading L-polynomial coefficient h_m");
    sub_h->add_option("m", m)->required();

    auto* sub_hkk = app.add_subcommand("genus-hkk", "p_k^2 coefficient h_{k,k} of L_{2k}");
    sub_hkk->add_option("k", k)->required();

    auto* sub_sphere = app.add_subcommand(
        "sphere", "almost-complex verdict for a rational homology sphere");
    sub_sphere->add_option("dim", dim, "even dimension")->required();

    auto* sub_bs = app.add_subcommand(
        "borel-serre", "primes p < n, p coprime to n, that fail to divide chi");
    sub_bs->add_option("n", n)->required();
    sub_bs->add_option("chi", chi)->required();

    auto* sub_eta = app.add_subcommand(
        "eta", "exact eta^2 analysis for dimension 8k");
    sub_eta->add_option("k", k)->required()->check(CLI::PositiveNumber);

    auto* sub_padic = app.add_subcommand(
        "padic", "odd-prime valuation constraint on eta in dimension 8k");
    sub_padic->add_option("k", k)->required()->check(CLI::PositiveNumber);
    sub_padic->add_option("p", p, "odd prime")->required();

    auto* sub_scan = app.add_subcommand(
        "scan", "classify every dimension up to --max-dim");
    sub_scan->add_option("--max-dim", max_dim, "scan ceiling")
        ->capture_default_str();
    sub_scan->add_option("--format", format)
        ->check(CLI::IsMember({"human", "json", "tsv"}))
        ->capture_default_str();
    sub_scan->add_flag("--parallel", parallel, "fan dimensions out across threads");
    sub_scan->add_option("--out", out_path, "write to file instead of stdout");
    sub_scan->add_option("--limit", limit, "safety ceiling for --max-dim")
        ->capture_default_str();

    auto* sub_figure = app.add_subcommand(
        "figure", "minimal Betti-sum table by even dimension");
    sub_figure->add_option("--max-dim", max_dim)->capture_default_str();
    sub_figure->add_option("--format", format)
        ->check(CLI::IsMember({"human", "json", "tsv"}))
        ->capture_default_str();
    sub_figure->add_option("--out", out_path);

    app.add_subcommand("verify", "run every consistency audit");

    CLI11_PARSE(app, argc, argv);

    try {
        if (sub_bernoulli->parsed()) return cmd_bernoulli(m);
        if (sub_h->parsed()) {
            std::cout << "h_" << m << " = "
                      << acs::to_string(acs::l_genus_leading(m)) << "\n";
            return kExitOk;
        }
        if (sub_hkk->parsed()) {
            std::cout << "h_{" << k << "," << k << "} = "
                      << acs::to_string(acs::l_genus_square_coefficient(k))
                      << "\n";
            return kExitOk;
        }
        if (sub_sphere->parsed()) return cmd_sphere(dim);
        if (sub_bs->parsed()) {
            const auto primes = acs::borel_serre_violations(n, acs::Int(chi));
            if (primes.empty()) {
                std::cout << "no violating primes\n";
            } else {
                std::cout << "violating primes:";
                for (unsigned long q : primes) std::cout << ' ' << q;
                std::cout << "\n";
            }
            return kExitOk;
        }
        if (sub_eta->parsed()) return cmd_eta(k);
        if (sub_padic->parsed()) return cmd_padic(k, p);
        if (sub_scan->parsed())
            return cmd_scan(max_dim, format, parallel, out_path, limit);
        if (sub_figure->parsed()) return cmd_figure(max_dim, format, out_path);
        return cmd_verify();
    } catch (const std::bad_alloc&) {
        std::cerr << "out of memory; retry with a smaller --max-dim\n";
        return kExitResourceLimit;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitAuditFailure;
    }
}
