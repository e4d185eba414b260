#include "acs/report.hpp"

#include "acs/bernoulli.hpp"
#include "acs/genus.hpp"
#include "acs/valuation.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <sstream>
#include <thread>

namespace acs {

namespace {

using nlohmann::json;

json rat_json(const Rat& q) {
    return json{{"num", numerator(q).get_str()}, {"den", denominator(q).get_str()}};
}

json record_json(const Betti3Record& rec) {
    json j;
    j["dim"] = rec.dim;
    j["k"] = rec.k ? json(rec.k) : json(nullptr);
    j["status"] = to_string(rec.status);
    j["rule"] = rec.rule;
    j["eta_squared"] = rec.eta_squared ? rat_json(*rec.eta_squared) : json(nullptr);
    j["eta"] = rec.eta ? json(rec.eta->get_str()) : json(nullptr);
    j["lower_bound"] = rec.lower_bound ? rat_json(*rec.lower_bound) : json(nullptr);
    json constraints = json::array();
    for (const PrimeConstraint& c : rec.prime_constraints) {
        constraints.push_back({{"prime", c.prime},
                               {"min_dim", c.min_dim},
                               {"max_eta_valuation", c.max_eta_valuation}});
    }
    j["prime_constraints"] = constraints;
    return j;
}

std::string constraints_tsv(const std::vector<PrimeConstraint>& cs) {
    if (cs.empty()) return "-";
    std::ostringstream os;
    for (size_t i = 0; i < cs.size(); ++i) {
        if (i) os << ';';
        os << cs[i].prime << ':' << cs[i].max_eta_valuation;
    }
    return os.str();
}

}  // namespace

std::string to_json(const Betti3Record& rec) {
    return record_json(rec).dump(2);
}

ScanReport scan(unsigned long max_dim, bool parallel) {
    if (max_dim < 1)
        throw std::invalid_argument("scan: max_dim >= 1 required");

    // Sequential cache fill up to the highest Bernoulli index needed
    // (dimension 8k needs B_{2k} = B_{dim/4}).
    if (max_dim >= 8) bernoulli_precompute(max_dim / 4);

    ScanReport report;
    report.min_dim = 1;
    report.max_dim = max_dim;
    report.tool_version = kToolVersion;
    report.rows.resize(max_dim);

    if (!parallel) {
        for (unsigned long dim = 1; dim <= max_dim; ++dim)
            report.rows[dim - 1] = betti3_status(dim);
    } else {
        const unsigned nthreads =
            std::max(1u, std::thread::hardware_concurrency());
        std::atomic<unsigned long> next{1};
        std::exception_ptr error;
        std::mutex error_mutex;
        auto worker = [&] {
            try {
                for (;;) {
                    const unsigned long dim = next.fetch_add(1);
                    if (dim > max_dim) return;
                    report.rows[dim - 1] = betti3_status(dim);
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        };
        std::vector<std::thread> threads;
        for (unsigned t = 0; t < nthreads; ++t) threads.emplace_back(worker);
        for (auto& t : threads) t.join();
        if (error) std::rethrow_exception(error);
    }

    for (const Betti3Record& rec : report.rows) {
        if (std::find(report.ruleset.begin(), report.ruleset.end(), rec.rule) ==
            report.ruleset.end())
            report.ruleset.push_back(rec.rule);
    }

    // Pinned regressions: dimension 4 is realized; every dimension 8k <= 1024
    // is ruled out by the exact analysis; parity dimensions classify as such.
    report.regressions_ok = true;
    for (const Betti3Record& rec : report.rows) {
        const unsigned long dim = rec.dim;
        bool ok = true;
        if (dim == 4) {
            ok = rec.status == Betti3Status::ExistsKnown;
        } else if (dim % 2 != 0 || dim % 4 == 2) {
            ok = rec.status == Betti3Status::ImpossibleParity;
        } else if (dim % 8 == 4) {
            ok = rec.status == Betti3Status::ImpossibleSmooth;
        } else if (dim >= 8 && dim <= 1024) {
            ok = rec.status == Betti3Status::RuledOutNonInteger ||
                 rec.status == Betti3Status::RuledOutNotSquare ||
                 rec.status == Betti3Status::RuledOutParityOfEta ||
                 rec.status == Betti3Status::RuledOutPrimePower;
        }
        if (!ok) report.regressions_ok = false;
    }
    return report;
}

std::string to_json(const ScanReport& report) {
    json j;
    j["schema"] = kJsonSchemaVersion;
    j["tool_version"] = report.tool_version;
    j["min_dim"] = report.min_dim;
    j["max_dim"] = report.max_dim;
    j["ruleset"] = report.ruleset;
    j["regressions_ok"] = report.regressions_ok;
    json rows = json::array();
    for (const Betti3Record& rec : report.rows) rows.push_back(record_json(rec));
    j["rows"] = rows;
    return j.dump(2);
}

std::string to_tsv(const ScanReport& report) {
    std::ostringstream os;
    os << "dim\tk\tstatus\teta_squared_num\teta_squared_den\teta\t"
          "lower_bound_num\tlower_bound_den\tprime_constraints\trule\n";
    for (const Betti3Record& rec : report.rows) {
        os << rec.dim << '\t';
        if (rec.k) os << rec.k; else os << '-';
        os << '\t' << to_string(rec.status) << '\t';
        if (rec.eta_squared)
            os << numerator(*rec.eta_squared).get_str() << '\t'
               << denominator(*rec.eta_squared).get_str() << '\t';
        else
            os << "-\t-\t";
        os << (rec.eta ? rec.eta->get_str() : "-") << '\t';
        if (rec.lower_bound)
            os << numerator(*rec.lower_bound).get_str() << '\t'
               << denominator(*rec.lower_bound).get_str() << '\t';
        else
            os << "-\t-\t";
        os << constraints_tsv(rec.prime_constraints) << '\t' << rec.rule << '\n';
    }
    return os.str();
}

std::vector<FigureRow> figure_rows(unsigned long max_dim) {
    std::vector<FigureRow> rows;
    for (unsigned long dim = 0; dim <= max_dim; dim += 2) {
        FigureRow row;
        row.dim = dim;
        if (dim == 0) {
            row.min_betti_sum = 1;
            row.source = "b_0 = 1 on a connected closed manifold";
            row.witness = "point";
        } else if (dim == 2) {
            row.min_betti_sum = 2;
            row.source = "closed orientable surface has b_0 + b_2 >= 2";
            row.witness = "S^2";
        } else if (dim == 4) {
            row.min_betti_sum = 3;
            row.source = "no almost complex rational homology four-sphere";
            row.witness = "CP^2";
        } else if (dim == 6) {
            row.min_betti_sum = 2;
            row.source = "almost complex rational homology six-spheres exist";
            row.witness = "S^6";
        } else if (dim <= 1024) {
            row.min_betti_sum = 4;
            row.source = "sums two and three excluded (rational homology "
                         "sphere theorem; exact eta scan)";
            row.witness = "product of two odd spheres (Hopf / Calabi-Eckmann)";
        } else {
            // Sum three needs the dimension to be a power of two; everything
            // else is pinned at four. At powers of two, ask the engine.
            const bool candidate =
                is_power_of_two(dim) &&
                betti3_status(dim).status == Betti3Status::Open;
            if (candidate) {
                row.bracket_low = 3;
                row.bracket_high = 4;
                row.source = "not decided by the implemented obstructions";
                row.witness = "";
            } else {
                row.min_betti_sum = 4;
                row.source = "sums two and three excluded (rational homology "
                             "sphere theorem; power-of-two restriction / eta scan)";
                row.witness = "product of two odd spheres (Hopf / Calabi-Eckmann)";
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string to_json(const std::vector<FigureRow>& rows) {
    json j;
    j["schema"] = kJsonSchemaVersion;
    j["tool_version"] = kToolVersion;
    json arr = json::array();
    for (const FigureRow& row : rows) {
        json r;
        r["dim"] = row.dim;
        if (row.min_betti_sum) {
            r["min_betti_sum"] = *row.min_betti_sum;
        } else {
            r["min_betti_sum"] = nullptr;
            r["bracket"] = {row.bracket_low, row.bracket_high};
        }
        r["source"] = row.source;
        r["witness"] = row.witness;
        arr.push_back(std::move(r));
    }
    j["rows"] = arr;
    return j.dump(2);
}

std::string to_tsv(const std::vector<FigureRow>& rows) {
    std::ostringstream os;
    os << "dim\tmin_betti_sum\tbracket_low\tbracket_high\tsource\twitness\n";
    for (const FigureRow& row : rows) {
        os << row.dim << '\t';
        if (row.min_betti_sum)
            os << *row.min_betti_sum << "\t-\t-\t";
        else
            os << "-\t" << row.bracket_low << '\t' << row.bracket_high << '\t';
        os << row.source << '\t' << (row.witness.empty() ? "-" : row.witness)
           << '\n';
    }
    return os.str();
}

namespace {

AuditResult run_one(const std::string& name, const std::string& rule,
                    const std::function<void(std::ostringstream&)>& body) {
    AuditResult result{name, rule, true, ""};
    std::ostringstream failures;
    try {
        body(failures);
    } catch (const std::exception& e) {
        failures << "exception: " << e.what();
    }
    result.detail = failures.str();
    result.passed = result.detail.empty();
    return result;
}

}  // namespace

std::vector<AuditResult> run_audits() {
    std::vector<AuditResult> results;
    bernoulli_precompute(256);

    results.push_back(run_one(
        "factorial 2-adic bound sweep",
        "nu_2(n!) <= n-1 with equality iff n is a power of two (n <= 10000)",
        [](std::ostringstream& fail) {
            for (unsigned long n = 1; n <= 10000; ++n) {
                const auto b = factorial_two_adic_bound(n);
                if (b.valuation > b.bound || b.equality != is_power_of_two(n))
                    fail << "n=" << n << " l=" << b.valuation << " bound="
                         << b.bound << "; ";
            }
        }));

    results.push_back(run_one(
        "von Staudt-Clausen agreement",
        "denominator of B_m equals the product of primes p with p-1 | 2m (m <= 200)",
        [](std::ostringstream& fail) {
            for (unsigned long m = 1; m <= 200; ++m) {
                const Int lhs = bernoulli(m).denominator;
                const Int rhs = vsc_denominator(m);
                if (lhs != rhs)
                    fail << "m=" << m << " got " << lhs.get_str() << " vs "
                         << rhs.get_str() << "; ";
            }
        }));

    results.push_back(run_one(
        "Bernoulli valuation facts",
        "nu_2(D_m) = nu_3(D_m) = 1, N_m odd and coprime to 3 (m <= 200)",
        [](std::ostringstream& fail) {
            for (unsigned long m = 1; m <= 200; ++m) {
                const BernoulliEntry b = bernoulli(m);
                if (valuation(b.denominator, 2) != 1 ||
                    valuation(b.denominator, 3) != 1 ||
                    valuation(b.numerator, 2) != 0 ||
                    valuation(b.numerator, 3) != 0)
                    fail << "m=" << m << "; ";
            }
        }));

    results.push_back(run_one(
        "cleared-equation defining identities",
        "A1 - A2 = c (2 h_k^2 - h_{2k}) and T3 + T4 = c (6 h_{2k} + 1) (k <= 32)",
        [](std::ostringstream& fail) {
            for (unsigned long k = 1; k <= 32; ++k) {
                const ClearedEquation eq = cleared_equation(k);
                const GenusCoefficients g = genus_coefficients(k);
                const Rat c(eq.clearing_factor);
                if (Rat(eq.eta_free_t1 - eq.eta_free_t2) !=
                        c * (Rat(2) * g.h_k * g.h_k - g.h_2k) ||
                    Rat(eq.t3 + eq.t4) != c * (Rat(6) * g.h_2k + 1))
                    fail << "k=" << k << "; ";
            }
        }));

    results.push_back(run_one(
        "equation-form equivalence",
        "(6 h_{2k}+1)/(h_{2k}+4 h_{k,k}) equals (6 h_{2k}+1)/(2 h_k^2 - h_{2k}) (k <= 64)",
        [](std::ostringstream& fail) {
            for (unsigned long k = 1; k <= 64; ++k) {
                const GenusCoefficients g = genus_coefficients(k);
                const Rat num = Rat(6) * g.h_2k + 1;
                const Rat a = num / (g.h_2k + Rat(4) * g.h_kk);
                const Rat b = num / (Rat(2) * g.h_k * g.h_k - g.h_2k);
                if (a != b || a != eta_squared(k)) fail << "k=" << k << "; ";
            }
        }));

    results.push_back(run_one(
        "2-adic divisibility bounds",
        "v(A1)>=4k+2l+4, v(A2)>=4k+2l+2, v(T3)=4k+2l+3, v(T4)<=4k+2l+1 "
        "for non-power-of-two k <= 64",
        [](std::ostringstream& fail) {
            for (unsigned long k = 1; k <= 64; ++k) {
                const TwoAdicAudit audit = two_adic_audit(k);
                if (audit.contradiction == is_power_of_two(k))
                    fail << "k=" << k << " contradiction flag; ";
                // two_adic_audit itself throws on any violated bound; also
                // pin its factor-sum valuations against the actual integers.
                const ClearedEquation eq = cleared_equation(k);
                if (audit.v_t1 != valuation(eq.eta_free_t1, 2) ||
                    audit.v_t2 != valuation(eq.eta_free_t2, 2) ||
                    audit.v_t3 != valuation(eq.t3, 2) ||
                    audit.v_t4 != valuation(eq.t4, 2))
                    fail << "k=" << k << " factor-sum vs direct mismatch; ";
            }
        }));

    results.push_back(run_one(
        "3-adic bound on eta",
        "nu_3(eta^2) <= 2, i.e. max nu_3(eta) <= 1 (k <= 64)",
        [](std::ostringstream& fail) {
            for (unsigned long k = 1; k <= 64; ++k) {
                const OddPrimeAnalysis a = max_eta_valuation(k, 3);
                if (a.eta_squared_valuation > 2)
                    fail << "k=" << k << " nu_3=" << a.eta_squared_valuation
                         << "; ";
            }
        }));

    results.push_back(run_one(
        "eta parity", "nu_2(eta^2) = 0 for power-of-two k <= 64",
        [](std::ostringstream& fail) {
            for (unsigned long k = 1; k <= 64; k *= 2) {
                const long v = valuation(eta_squared(k), 2);
                if (v != 0) fail << "k=" << k << " nu_2=" << v << "; ";
            }
        }));

    results.push_back(run_one(
        "L-coefficient shape",
        "denominator of h_m odd, h_m > 0, decreasing from m = 2 (m <= 128)",
        [](std::ostringstream& fail) {
            Rat prev;
            for (unsigned long m = 1; m <= 128; ++m) {
                const Rat h = l_genus_leading(m);
                if (sgn(h) <= 0 || valuation(denominator(h), 2) != 0)
                    fail << "m=" << m << " sign/denominator; ";
                if (m >= 3 && h >= prev) fail << "m=" << m << " not decreasing; ";
                prev = h;
            }
        }));

    results.push_back(run_one(
        "eta^2 lower bound", "eta^2 >= 1/(2 h_k^2) (k <= 128)",
        [](std::ostringstream& fail) {
            for (unsigned long k = 1; k <= 128; ++k) {
                if (eta_squared(k) < eta_squared_lower_bound(k))
                    fail << "k=" << k << "; ";
            }
        }));

    results.push_back(run_one(
        "zeta cross-check",
        "relative error < 1e-9 against the zeta(2m) formula (2 <= m <= 20, 1e6 terms)",
        [](std::ostringstream& fail) {
            for (unsigned long m = 2; m <= 20; ++m) {
                const ZetaComparison z = zeta_cross_check(m, 1000000);
                if (!(z.relative_error < 1e-9))
                    fail << "m=" << m << " err=" << z.relative_error << "; ";
            }
        }));

    return results;
}

}  // namespace acs
