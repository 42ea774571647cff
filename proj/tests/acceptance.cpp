// Acceptance suite: runs the cross-validation sweeps and identity battery at
// their contracted truncations and prints one PASS/FAIL line per criterion.
// Everything is exact rational arithmetic; every comparison is coefficient
// equality, no tolerances.
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bo/fock.hpp"
#include "bo/formulas.hpp"
#include "bo/json_io.hpp"
#include "bo/verify.hpp"

using namespace bo;

namespace {

// "coefficient-exact to q^N" is read inclusively: compare below 8N + 8.
constexpr int kSweepOrder8 = 72;   // q^8
constexpr int kLevel1Order8 = 88;  // q^10

// Weakly decreasing tuples of the given length with entries in [lo, hi].
std::vector<GenPartition> lambda_range(int length, int lo, int hi) {
    std::vector<GenPartition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int depth, int max_allowed) -> void {
        if (depth == length) {
            out.emplace_back(cur);
            return;
        }
        for (int e = max_allowed; e >= lo; --e) {
            cur.push_back(e);
            self(self, depth + 1, e);
            cur.pop_back();
        }
    };
    rec(rec, 0, hi);
    return out;
}

std::vector<std::vector<TPoint>> point_sets() {
    const std::vector<Rational> pool = {make_rational(2), make_rational(3, 2), make_rational(5, 3)};
    std::vector<std::vector<TPoint>> sets;
    sets.push_back({});
    for (const auto& s : pool) sets.push_back({TPoint(s)});
    for (size_t i = 0; i < pool.size(); ++i) {
        for (size_t j = i; j < pool.size(); ++j) sets.push_back({TPoint(pool[i]), TPoint(pool[j])});
    }
    return sets;
}

std::string points_str(const std::vector<TPoint>& pts) {
    std::ostringstream out;
    out << "(";
    for (size_t i = 0; i < pts.size(); ++i) {
        if (i) out << ",";
        out << to_string(pts[i].s);
    }
    out << ")";
    return out.str();
}

std::string head_terms(const QSeries& s, size_t n) {
    std::map<int, Rational> kept;
    for (const auto& [e, c] : s.terms()) {
        if (kept.size() == n) break;
        kept.emplace(e, c);
    }
    return to_string(QSeries(std::move(kept), s.order8())) +
           (s.terms().size() > n ? " + ..." : "");
}

struct SweepResult {
    std::string json;
    int cells = 0;
    int skipped = 0;
    int theta_kostka_fail = 0;
    // oracle-vs-formula disagreements, split by parameter slice
    int base_slice_fail = 0;    // level 1 or no insertion points
    int base_slice_total = 0;
    int higher_slice_fail = 0;  // level >= 2 with n >= 1 points
    int higher_slice_total = 0;
    bool oracle_nonneg = true;
    std::string first_mismatch;
    std::vector<std::string> notes;
};

// The criterion-1 sweep: levels 1..3, lambda entries in [-2,2], 0..2 points
// from s in {2, 3/2, 5/3}, all three methods compared coefficient-exactly.
SweepResult run_sweep(int threads) {
    SweepResult r;
    auto doc = nlohmann::ordered_json::array();
    for (int level = 1; level <= 3; ++level) {
        const auto lambdas = lambda_range(level, -2, 2);
        for (const auto& pts : point_sets()) {
            try {
                require_valid_subset_products(pts);
            } catch (const std::domain_error& e) {
                ++r.skipped;
                r.notes.push_back("skipped s=" + points_str(pts) + ": " + e.what());
                continue;
            }
            const SymLaurentPoly trace = fock_trace(level, pts, kSweepOrder8, threads);
            const auto schur = to_schur_basis(trace);

            nlohmann::ordered_json block;
            block["level"] = level;
            auto svals = nlohmann::ordered_json::array();
            for (const auto& pt : pts) svals.push_back(to_string(pt.s));
            block["s"] = std::move(svals);
            block["trace"] = sympoly_json(trace);
            auto results = nlohmann::ordered_json::array();

            const bool base_slice = level == 1 || pts.empty();
            for (const auto& la : lambdas) {
                const auto it = schur.find(la);
                const QSeries oracle =
                    it == schur.end() ? QSeries::zero(kSweepOrder8) : it->second;
                const QSeries theta = npoint_theta(level, la, pts, kSweepOrder8);
                const QSeries kostka = npoint_kostka(level, la, pts, kSweepOrder8);
                ++r.cells;
                if (!theta.equal_below(kostka, kSweepOrder8)) {
                    ++r.theta_kostka_fail;
                    if (r.notes.size() < 10)
                        r.notes.push_back("theta != kostka at level=" + std::to_string(level) +
                                          " lambda=" + la.str() + " s=" + points_str(pts));
                }
                const bool oracle_matches = theta.equal_below(oracle, kSweepOrder8);
                (base_slice ? r.base_slice_total : r.higher_slice_total) += 1;
                if (!oracle_matches) {
                    (base_slice ? r.base_slice_fail : r.higher_slice_fail) += 1;
                    if (base_slice && r.notes.size() < 10)
                        r.notes.push_back("oracle != theta at level=" + std::to_string(level) +
                                          " lambda=" + la.str() + " s=" + points_str(pts));
                    if (r.first_mismatch.empty()) {
                        r.first_mismatch = "level=" + std::to_string(level) + " lambda=" + la.str() +
                                           " s=" + points_str(pts) +
                                           "\n         trace:  " + head_terms(oracle, 3) +
                                           "\n         theta:  " + head_terms(theta, 3);
                    }
                }
                for (const auto& [e, c] : oracle.terms()) {
                    (void)e;
                    if (sgn(c) < 0) r.oracle_nonneg = false;
                }
                nlohmann::ordered_json one;
                one["lambda"] = la.entries();
                one["oracle"] = series_json(oracle);
                one["theta"] = series_json(theta);
                one["kostka"] = series_json(kostka);
                results.push_back(std::move(one));
            }
            block["results"] = std::move(results);
            doc.push_back(std::move(block));
        }
    }
    r.json = doc.dump();
    return r;
}

bool criterion1(const SweepResult& sweep) {
    bool ok = sweep.theta_kostka_fail == 0 && sweep.base_slice_fail == 0 &&
              sweep.higher_slice_fail == 0;
    // API spot check: oracle_npoint end to end on a slice where all methods agree.
    const std::vector<TPoint> pts = {TPoint(Rational(2))};
    const QSeries direct = oracle_npoint(1, GenPartition({1}), pts, kSweepOrder8);
    const QSeries formula = npoint_theta(1, GenPartition({1}), pts, kSweepOrder8);
    ok &= direct.equal_below(formula, kSweepOrder8);

    std::cout << (ok ? "[PASS]" : "[FAIL]")
              << " criterion 1: theta = oracle = kostka on the full sweep (" << sweep.cells
              << " cells through q^8, " << sweep.skipped << " skipped)\n";
    std::cout << "       theta vs kostka equal on " << (sweep.cells - sweep.theta_kostka_fail)
              << "/" << sweep.cells << " cells\n";
    std::cout << "       oracle vs formulas equal on "
              << (sweep.base_slice_total - sweep.base_slice_fail) << "/" << sweep.base_slice_total
              << " cells with level 1 or n = 0\n";
    std::cout << "       oracle vs formulas equal on "
              << (sweep.higher_slice_total - sweep.higher_slice_fail) << "/"
              << sweep.higher_slice_total << " cells with level >= 2 and n >= 1\n";
    if (!sweep.first_mismatch.empty())
        std::cout << "       smallest disagreeing cell: " << sweep.first_mismatch << "\n";
    for (const auto& n : sweep.notes) std::cout << "       " << n << "\n";
    return ok;
}

bool criterion2() {
    bool ok = true;
    const std::vector<Rational> pool = {make_rational(2), make_rational(3, 2), make_rational(5, 3)};
    for (int n = 0; n <= 3; ++n) {
        std::vector<TPoint> pts;
        for (int i = 0; i < n; ++i) pts.emplace_back(pool[static_cast<size_t>(i)]);
        const QSeries formula = bo_npoint(pts, kLevel1Order8);
        const QSeries charge0 = oracle_level1_charge(0, pts, kLevel1Order8);
        ok &= formula.equal_below(charge0, kLevel1Order8);
        const Rational tprod = product_t(pts);
        for (int k = -2; k <= 2; ++k) {
            const QSeries sector = oracle_level1_charge(k, pts, kLevel1Order8);
            const QSeries shifted =
                charge0.shifted(4 * k * k).scaled(rational_pow(tprod, k));
            ok &= sector.equal_below(shifted, kLevel1Order8);
            const QSeries from_formula =
                formula.shifted(4 * k * k).scaled(rational_pow(tprod, k));
            ok &= sector.equal_below(from_formula, kLevel1Order8);
        }
    }
    std::cout << (ok ? "[PASS]" : "[FAIL]")
              << " criterion 2: level-1 closed formula = charge-0 trace for n <= 3 and the "
                 "charge-shift law for |k| <= 2, through q^10\n";
    return ok;
}

bool criterion3() {
    const auto reports = verify_battery();
    bool ok = true;
    for (const auto& r : reports) ok &= r.equal;
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion 3: identity battery ("
              << reports.size() << " reports: jacobi q^20, cor33 q^8, lemma35 q^6, cor36 q^8, "
                 "cor37 q^10, cor42 q^12, cor43 q^10, ok-shift q^8)\n";
    for (const auto& r : reports) {
        if (!r.equal) std::cout << "       " << to_string(r) << "\n";
    }
    return ok;
}

bool criterion4() {
    bool ok = true;
    // Unitriangularity and exact inversion are enforced in the constructor;
    // building every table up to size 8 exercises them.
    try {
        for (int level = 1; level <= 3; ++level) {
            for (int d = 0; d <= 8; ++d) {
                (void)kostka_table(d, level, 0, std::max(d, 1));
                (void)kostka_table(d, level, -2, std::max(d, 2));
            }
        }
    } catch (const std::exception& e) {
        ok = false;
        std::cout << "       table construction failed: " << e.what() << "\n";
    }

    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> len_d(1, 3);
    std::uniform_int_distribution<int> entry_d(-4, 4);
    std::uniform_int_distribution<int> r_d(-2, 2);
    for (int trial = 0; trial < 100; ++trial) {
        const int len = len_d(rng);
        std::vector<int> a, b;
        for (int i = 0; i < len; ++i) {
            a.push_back(entry_d(rng));
            b.push_back(entry_d(rng));
        }
        std::sort(a.rbegin(), a.rend());
        std::sort(b.rbegin(), b.rend());
        const GenPartition la(a), mu(b);
        const int r = r_d(rng);
        if (kostka_number(la, mu) != kostka_number(la.shifted(r), mu.shifted(r))) ok = false;
    }

    // Vanishing of K^{(-1)}_{mu la} for l(mu) < level <= la_level, sizes <= 8.
    int vanishing_cases = 0;
    for (int level = 1; level <= 3; ++level) {
        for (int d = 0; d <= 8; ++d) {
            std::vector<GenPartition> deep;
            for (const auto& la : gen_partitions(level, d, 0, std::max(d, 1))) {
                if (la.min_entry() >= level) deep.push_back(la);
            }
            if (deep.empty()) continue;
            const auto table = kostka_table(d, level, 0, std::max(d, 1));
            for (const auto& nu : partitions_of(d)) {
                if (nu.length() >= level) continue;
                std::vector<int> padded = nu.parts();
                padded.resize(static_cast<size_t>(level), 0);
                const GenPartition mu(padded);
                for (const auto& la : deep) {
                    ++vanishing_cases;
                    if (table.inverse_kostka(mu, la) != 0) ok = false;
                }
            }
        }
    }
    ok &= vanishing_cases > 0;

    std::cout << (ok ? "[PASS]" : "[FAIL]")
              << " criterion 4: Kostka tables exact (d <= 8, level <= 3), shift invariance on "
                 "100 random triples, inverse-Kostka vanishing on "
              << vanishing_cases << " cases\n";
    return ok;
}

bool criterion5(const SweepResult& sweep) {
    bool ok = true;
    // Charge-0 level-1 state counts are the partition numbers.
    const auto states = enumerate_states(1, 8 * 11);
    std::map<int, int> counts;
    for (const auto& st : states) {
        if (st.charges()[0] == 0) ++counts[state_energy8(st) / 8];
    }
    for (int m = 0; m <= 10; ++m) {
        if (counts[m] != static_cast<int>(partitions_of(m).size())) ok = false;
    }
    // n = 0 trace reproduces the q-dimension for every sweep label.
    for (int level = 1; level <= 3; ++level) {
        const auto schur = to_schur_basis(fock_trace(level, {}, kSweepOrder8));
        for (const auto& la : lambda_range(level, -2, 2)) {
            const auto it = schur.find(la);
            const QSeries got = it == schur.end() ? QSeries::zero(kSweepOrder8) : it->second;
            if (!got.equal_below(qdim(level, la, kSweepOrder8), kSweepOrder8)) ok = false;
        }
    }
    ok &= sweep.oracle_nonneg;
    std::cout << (ok ? "[PASS]" : "[FAIL]")
              << " criterion 5: state counts = p(m) for m <= 10, n=0 trace = qdim on the sweep, "
                 "oracle coefficients nonnegative for s > 1\n";
    return ok;
}

bool criterion6(const SweepResult& at1) {
    const SweepResult at8 = run_sweep(8);
    const bool ok = at1.json == at8.json && !at1.json.empty();
    std::cout << (ok ? "[PASS]" : "[FAIL]")
              << " criterion 6: sweep JSON byte-identical at thread counts 1 and 8 ("
              << at1.json.size() << " bytes)\n";
    return ok;
}

}  // namespace

int main() {
    const SweepResult sweep = run_sweep(1);
    bool ok = true;
    ok &= criterion1(sweep);
    ok &= criterion2();
    ok &= criterion3();
    ok &= criterion4();
    ok &= criterion5(sweep);
    ok &= criterion6(sweep);
    std::cout << (ok ? "acceptance: all criteria hold" : "acceptance: FAILURES above") << "\n";
    return ok ? 0 : 1;
}
