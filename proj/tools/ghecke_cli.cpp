#include "ghecke/criterion.hpp"
#include "ghecke/json_io.hpp"
#include "ghecke/psmod.hpp"
#include "ghecke/simplicity.hpp"
#include "ghecke/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

namespace {

using namespace ghk;

constexpr int kExitOk = 0;
constexpr int kExitDisagree = 1;
constexpr int kExitUsage = 2;
constexpr int kExitRefusal = 3;

std::string resolve_out(const std::string& path) {
    if (path.empty() || path.front() == '/') return path;
    const char* dir = std::getenv("GHECKE_OUT_DIR");
    if (!dir || !*dir) return path;
    return std::string(dir) + "/" + path;
}

void emit(const std::string& path, const std::string& payload) {
    if (path.empty()) {
        std::cout << payload;
        if (!payload.empty() && payload.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream os(resolve_out(path));
    if (!os) throw CLI::ValidationError("--out", "cannot open " + path);
    os << payload;
}

// Grid syntax: "a..b" (integer step 1) or "a..b:step" with exact rational
// endpoints and step.
std::vector<Rational> parse_grid(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        // comma-separated list
        std::vector<Rational> out;
        std::string cur;
        for (char ch : text + ",") {
            if (ch == ',') {
                if (!cur.empty()) out.push_back(parse_rational(cur));
                cur.clear();
            } else {
                cur += ch;
            }
        }
        if (out.empty()) throw std::invalid_argument("empty grid: " + text);
        return out;
    }
    std::string lo_s = text.substr(0, dots);
    std::string rest = text.substr(dots + 2);
    Rational step(1);
    auto colon = rest.find(':');
    if (colon != std::string::npos) {
        step = parse_rational(rest.substr(colon + 1));
        rest = rest.substr(0, colon);
    }
    Rational lo = parse_rational(lo_s), hi = parse_rational(rest);
    if (step <= 0 || lo > hi) throw std::invalid_argument("bad grid: " + text);
    std::vector<Rational> out;
    for (Rational v = lo; v <= hi; v += step) out.push_back(v);
    return out;
}

std::vector<Cyclo> parse_nu(int r, const std::string& text, int n) {
    std::vector<Cyclo> out;
    std::string cur;
    for (char ch : text + ",") {
        if (ch == ',') {
            if (!cur.empty()) out.push_back(Cyclo::parse(r, cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (static_cast<int>(out.size()) != n) throw std::invalid_argument("nu needs exactly n entries");
    return out;
}

TChar parse_pi(int r, const std::string& text, int n) {
    std::vector<int> idx;
    std::string cur;
    for (char ch : text + ",") {
        if (ch == ',') {
            if (!cur.empty()) idx.push_back(std::stoi(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (static_cast<int>(idx.size()) != n) throw std::invalid_argument("pi needs exactly n entries");
    return TChar(r, idx);
}

json config_echo(int r, int n, const std::string& kbar0, const std::string& k, unsigned seed, int fuzz) {
    json cfg{{"r", r}, {"n", n}, {"kbar0", kbar0}};
    if (!k.empty()) cfg["k"] = k;
    cfg["seed"] = seed;
    cfg["fuzz"] = fuzz;
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations with the generalized graded Hecke algebra of G(r,1,n)"};
    app.require_subcommand(1);

    // ---- verify ----------------------------------------------------------
    std::string v_suite;
    int v_r = 2, v_n = 2, v_fuzz = 200, v_sets = 5;
    unsigned v_seed = 1;
    std::string v_k, v_kbar0, v_out;
    auto* verify = app.add_subcommand("verify", "run a named identity suite");
    verify->add_option("suite", v_suite, "relations|pbw|realization|center|duality")->required();
    verify->add_option("--r", v_r, "root order r")->check(CLI::PositiveNumber);
    verify->add_option("--n", v_n, "rank n")->check(CLI::PositiveNumber);
    verify->add_option("--k", v_k, "comma list of k_1..k_{r-1} (exact literals)");
    verify->add_option("--kbar0", v_kbar0, "kbar0 (exact literal)");
    verify->add_option("--fuzz", v_fuzz, "fuzz iterations");
    verify->add_option("--seed", v_seed, "rng seed");
    verify->add_option("--param-sets", v_sets, "random parameter sets / instances");
    verify->add_option("--out", v_out, "write the JSON report here");

    // ---- sweep -----------------------------------------------------------
    int s_r = 2, s_n = 2, s_bound = 24, s_jobs = 1;
    std::string s_kbar0 = "1", s_grid = "-3..3", s_pi = "all-orbits", s_format = "json", s_out;
    auto* sweep = app.add_subcommand("sweep", "criterion-vs-oracle agreement table");
    sweep->add_option("--r", s_r)->check(CLI::PositiveNumber);
    sweep->add_option("--n", s_n)->check(CLI::PositiveNumber);
    sweep->add_option("--kbar0", s_kbar0, "kbar0 (exact rational literal)");
    sweep->add_option("--nu-grid", s_grid, "\"a..b\", \"a..b:step\" or comma list; nu ranges over grid^n");
    sweep->add_option("--pi", s_pi, "\"all-orbits\" or an explicit n-index like 0,0,1");
    sweep->add_option("--desk-bound", s_bound, "largest module dimension the oracle accepts");
    sweep->add_option("--jobs", s_jobs, "parallel workers")->check(CLI::PositiveNumber);
    sweep->add_option("--format", s_format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
    sweep->add_option("--out", s_out, "output file (default stdout)");

    // ---- criterion -------------------------------------------------------
    int c_r = 2, c_n = 2;
    std::string c_kbar0 = "1", c_nu, c_pi, c_out;
    auto* crit = app.add_subcommand("criterion", "single-instance criterion report");
    crit->add_option("--r", c_r)->check(CLI::PositiveNumber);
    crit->add_option("--n", c_n)->check(CLI::PositiveNumber);
    crit->add_option("--kbar0", c_kbar0);
    crit->add_option("--nu", c_nu, "comma list of n exact literals")->required();
    crit->add_option("--pi", c_pi, "n-index, e.g. 0,0,1")->required();
    crit->add_option("--out", c_out);

    // ---- module ----------------------------------------------------------
    int m_r = 2, m_n = 2;
    std::string m_kbar0 = "1", m_nu, m_pi, m_out;
    bool m_oracle = false;
    auto* module = app.add_subcommand("module", "dump the principal series module M(nu x pi) as JSON");
    module->add_option("--r", m_r)->check(CLI::PositiveNumber);
    module->add_option("--n", m_n)->check(CLI::PositiveNumber);
    module->add_option("--kbar0", m_kbar0);
    module->add_option("--nu", m_nu)->required();
    module->add_option("--pi", m_pi)->required();
    module->add_flag("--with-oracle", m_oracle, "include the simplicity report");
    module->add_option("--out", m_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*verify) {
            VerifyConfig cfg;
            cfg.r = v_r;
            cfg.n = v_n;
            cfg.fuzz = v_fuzz;
            cfg.seed = v_seed;
            cfg.param_sets = v_sets;
            if (!v_kbar0.empty()) cfg.kbar0 = Cyclo::parse(v_r, v_kbar0);
            if (!v_k.empty()) {
                std::vector<Cyclo> ks;
                std::string cur;
                for (char ch : v_k + ",") {
                    if (ch == ',') {
                        if (!cur.empty()) ks.push_back(Cyclo::parse(v_r, cur));
                        cur.clear();
                    } else {
                        cur += ch;
                    }
                }
                if (static_cast<int>(ks.size()) != v_r - 1)
                    throw CLI::ValidationError("--k", "need r-1 values");
                cfg.k = std::move(ks);
            }
            std::vector<CheckResult> results = verify_suite(v_suite, cfg);
            json rep{{"config", config_echo(v_r, v_n, v_kbar0, v_k, v_seed, v_fuzz)}, {"suite", v_suite}};
            json checks = json::array();
            for (const CheckResult& c : results) {
                std::cout << (c.pass ? "pass  " : "FAIL  ") << c.name << "\n";
                checks.push_back(json{{"name", c.name}, {"pass", c.pass}});
            }
            rep["checks"] = std::move(checks);
            bool ok = all_pass(results);
            rep["pass"] = ok;
            if (!v_out.empty()) emit(v_out, rep.dump(2) + "\n");
            std::cout << (ok ? "suite passed" : "suite FAILED") << "\n";
            return ok ? kExitOk : kExitDisagree;
        }

        if (*sweep) {
            SweepSpec spec;
            spec.r = s_r;
            spec.n = s_n;
            spec.kbar0 = Cyclo::parse(s_r, s_kbar0);
            spec.grid = parse_grid(s_grid);
            spec.desk_bound = s_bound;
            spec.jobs = s_jobs;
            if (s_pi != "all-orbits") spec.chars = {parse_pi(s_r, s_pi, s_n)};
            // pre-check the desk bound: module dimension is n!
            long fact = 1;
            for (int i = 2; i <= s_n; ++i) fact *= i;
            if (fact > spec.desk_bound) {
                std::cerr << "refused: principal series dimension n! = " << fact << " exceeds --desk-bound "
                          << spec.desk_bound << " (raise the bound or lower n)\n";
                return kExitRefusal;
            }
            SweepSummary sum = theorem13_sweep(spec);
            json rep = to_json(sum);
            rep["config"] = json{{"r", s_r},       {"n", s_n},           {"kbar0", s_kbar0}, {"nu_grid", s_grid},
                                 {"pi", s_pi},     {"desk_bound", s_bound}, {"jobs", s_jobs},   {"format", s_format}};
            emit(s_out, s_format == "csv" ? sweep_csv(sum) : rep.dump(2) + "\n");
            std::cout << sum.instances << " instances, " << sum.agree << " agree, " << sum.disagree
                      << " disagree, " << sum.refused << " refused\n";
            if (sum.disagree > 0) return kExitDisagree;
            if (sum.refused > 0) return kExitRefusal;
            return kExitOk;
        }

        if (*crit) {
            TChar pi = parse_pi(c_r, c_pi, c_n);
            std::vector<Cyclo> nu = parse_nu(c_r, c_nu, c_n);
            CriterionReport rep = criterion_p_set(nu, pi, Cyclo::parse(c_r, c_kbar0));
            json out = to_json(rep);
            out["config"] = json{{"r", c_r}, {"n", c_n}, {"kbar0", c_kbar0}, {"nu", c_nu}, {"pi", c_pi}};
            emit(c_out, out.dump(2) + "\n");
            return kExitOk;
        }

        if (*module) {
            TChar pi = parse_pi(m_r, m_pi, m_n);
            std::vector<Cyclo> nu = parse_nu(m_r, m_nu, m_n);
            GghaAlgebra alg(m_r, m_n, Cyclo::parse(m_r, m_kbar0));
            ModuleRep rep = principal_series(alg, CChar{nu, pi});
            json out = to_json(rep);
            out["config"] = json{{"r", m_r}, {"n", m_n}, {"kbar0", m_kbar0}, {"nu", m_nu}, {"pi", m_pi}};
            if (m_oracle) {
                try {
                    out["oracle"] = to_json(is_simple(rep));
                } catch (const OracleRefusal& e) {
                    out["oracle"] = json{{"verdict", "refused"}, {"reason", e.what()}};
                }
            }
            emit(m_out, out.dump(2) + "\n");
            return kExitOk;
        }
    } catch (const OracleRefusal& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kExitRefusal;
    } catch (const CLI::Error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDisagree;
    }
    return kExitUsage;
}
