#include "ghecke/criterion.hpp"

#include "ghecke/psmod.hpp"
#include "ghecke/simplicity.hpp"

#include <algorithm>
#include <thread>

namespace ghk {

CriterionReport criterion_p_set(const std::vector<Cyclo>& nu, const TChar& pi, const Cyclo& kbar0) {
    const int n = pi.n();
    if (static_cast<int>(nu.size()) != n) throw std::invalid_argument("nu needs one coordinate per index");
    CriterionReport rep;
    SortedChar sc = sort_char(pi);
    rep.sigma = sc.sigma;
    rep.sorted_char = sc.mu;
    Perm sinv = sc.sigma.inverse();
    std::vector<Cyclo> snu(n);
    for (int i = 0; i < n; ++i) snu[i] = nu[sinv(i)];
    Cyclo bound = Cyclo(static_cast<long>(pi.r())) * kbar0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (sc.mu[i] != sc.mu[j]) continue;  // (i,j) must stabilize mu_pi
            Cyclo diff = snu[i] - snu[j];
            int sign = 0;
            if (diff == bound)
                sign = 1;
            else if (diff == -bound)
                sign = -1;
            if (sign != 0) {
                rep.p_set.emplace_back(i, j);
                rep.witnesses.push_back({i, j, diff, sign});
            }
        }
    rep.simple = rep.p_set.empty();
    return rep;
}

bool criterion_reducible_unsorted(const std::vector<Cyclo>& nu, const TChar& pi, const Cyclo& kbar0) {
    Cyclo bound = Cyclo(static_cast<long>(pi.r())) * kbar0;
    for (int u = 0; u < pi.n(); ++u)
        for (int v = u + 1; v < pi.n(); ++v) {
            if (pi[u] != pi[v]) continue;
            Cyclo diff = nu[u] - nu[v];
            if (diff == bound || diff == -bound) return true;
        }
    return false;
}

bool sigma_independence(const std::vector<Cyclo>& nu, const TChar& pi, const Cyclo& kbar0) {
    bool expect_reducible = criterion_reducible_unsorted(nu, pi, kbar0);
    for (const Perm& w : symmetric_group(pi.n())) {
        Perm winv = w.inverse();
        std::vector<Cyclo> wnu(nu.size());
        for (size_t i = 0; i < nu.size(); ++i) wnu[i] = nu[winv(static_cast<int>(i))];
        CriterionReport rep = criterion_p_set(wnu, pi.twist(w), kbar0);
        if (!rep.simple != expect_reducible) return false;
    }
    return true;
}

std::vector<TChar> all_orbit_reps(int r, int n) {
    std::vector<TChar> out;
    std::vector<int> comp(r, 0);
    // enumerate compositions (m_0,...,m_{r-1}) of n
    comp[0] = n;
    while (true) {
        std::vector<int> idx;
        for (int j = 0; j < r; ++j)
            for (int c = 0; c < comp[j]; ++c) idx.push_back(j);
        out.emplace_back(r, idx);
        // next composition in colex-style order
        int k = 0;
        while (k < r - 1 && comp[k] == 0) ++k;
        if (k == r - 1) break;
        int take = comp[k];
        comp[k] = 0;
        comp[0] = take - 1;
        ++comp[k + 1];
    }
    return out;
}

SweepSummary theorem13_sweep(const SweepSpec& spec) {
    std::vector<TChar> chars = spec.chars.empty() ? all_orbit_reps(spec.r, spec.n) : spec.chars;
    // materialize the instance list
    std::vector<SweepRow> rows;
    std::vector<std::vector<Cyclo>> nus;
    {
        std::vector<int> pos(spec.n, 0);
        const int g = static_cast<int>(spec.grid.size());
        if (g == 0) throw std::invalid_argument("empty nu grid");
        while (true) {
            std::vector<Cyclo> nu;
            for (int i = 0; i < spec.n; ++i) nu.push_back(Cyclo(spec.grid[pos[i]]));
            nus.push_back(std::move(nu));
            int k = 0;
            while (k < spec.n && ++pos[k] == g) pos[k++] = 0;
            if (k == spec.n) break;
        }
    }
    for (const TChar& pi : chars)
        for (const auto& nu : nus) {
            SweepRow row;
            row.nu = nu;
            row.pi = pi;
            row.kbar0 = spec.kbar0;
            rows.push_back(std::move(row));
        }

    auto work = [&](size_t lo, size_t hi) {
        GghaAlgebra alg(spec.r, spec.n, spec.kbar0);
        for (size_t idx = lo; idx < hi; ++idx) {
            SweepRow& row = rows[idx];
            row.criterion_simple = criterion_p_set(row.nu, row.pi, row.kbar0).simple;
            try {
                CChar gt{row.nu, row.pi};
                ModuleRep m = principal_series(alg, gt);
                if (spec.with_factors) {
                    row.factors = composition_factor_dims(m, spec.desk_bound);
                    row.oracle = row.factors.size() == 1 ? 's' : 'r';
                } else {
                    row.oracle = is_simple(m).simple() ? 's' : 'r';
                }
            } catch (const OracleRefusal& e) {
                row.oracle = 'x';
                row.note = e.what();
            }
        }
    };

    int jobs = std::max(1, spec.jobs);
    if (jobs == 1 || rows.size() < 2) {
        work(0, rows.size());
    } else {
        std::vector<std::thread> pool;
        size_t chunk = (rows.size() + jobs - 1) / jobs;
        for (int t = 0; t < jobs; ++t) {
            size_t lo = t * chunk, hi = std::min(rows.size(), (t + 1) * chunk);
            if (lo >= hi) break;
            pool.emplace_back(work, lo, hi);
        }
        for (auto& th : pool) th.join();
    }

    SweepSummary sum;
    sum.instances = static_cast<int>(rows.size());
    for (const SweepRow& row : rows) {
        if (row.oracle == 'x')
            ++sum.refused;
        else if (row.agree())
            ++sum.agree;
        else
            ++sum.disagree;
    }
    sum.rows = std::move(rows);
    return sum;
}

}  // namespace ghk
