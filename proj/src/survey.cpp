#include "lensgem/survey.hpp"

#include <numeric>
#include <ostream>
#include <sstream>

#include "lensgem/gm_complexity.hpp"
#include "lensgem/homology.hpp"
#include "lensgem/invariants.hpp"
#include "lensgem/parallel.hpp"

namespace lensgem {

namespace {

int inverse_mod(int q, int p) {
    for (int x = 1; x < p; ++x) {
        if ((static_cast<long>(q) * x) % p == 1) return x;
    }
    return 1;
}

bool in_families(const LensParams& lp) {
    const int p = lp.p;
    if (p % 2 == 0 && p >= 4 && lp.q == 1) return true;
    if (p % 4 == 0 && p >= 8 && lp.q == p / 2 - 1) return true;
    for (int r = 2; r < p; ++r) {
        for (int t = r + 1; t < p; ++t) {
            if (r % 2 == 1 && t % 2 == 0) {
                const long pp = static_cast<long>(r + 2) * (t + 1) + 1;
                if (pp == p && normalize_lens(pp, t + 1) == lp) return true;
            }
            if (r % 2 == 0 && t % 2 == 1) {
                const long pp = static_cast<long>(r + 1) * (t + 2) + 1;
                if (pp == p && normalize_lens(pp, t + 2) == lp) return true;
            }
            if (static_cast<long>(r + 1) * (t + 1) > p) break;
        }
    }
    return false;
}

template <typename GM>
LensSurveyRow compute_row(const LensParams& lp, GM&& gm) {
    const auto lc = ferri_crystallization(lp);
    const auto& g = lc.graph;
    LensSurveyRow row;
    row.p = lp.p;
    row.q = lp.q;
    row.s = lc.cf.sum;
    row.order = static_cast<int>(g.order());
    row.k_upper = row.order / 2 - 1;
    const auto cls = classify(g);
    row.structure_ok = row.order == 4 * row.s && cls.bipartite && cls.contracted && represents_closed_3manifold(g);
    const auto h1 = first_homology(g);
    row.h1_ok = h1.free_rank == 0 && h1.is_cyclic_of_order(lp.p);
    row.symmetry_ok = colour_swap_symmetry(lc);
    row.gm_value = gm(g);
    row.bound = row.s - 3;
    row.bound_applies = lp.p >= 3;
    row.bound_ok = row.bound_applies && row.gm_value <= row.bound;
    row.sharp_forced = sharp_bound_known(lp);
    return row;
}

}  // namespace

std::vector<LensParams> lens_range(int p_max) {
    std::vector<LensParams> out;
    for (int p = 2; p <= p_max; ++p) {
        for (int q = 1; 2 * q <= p; ++q) {
            if (std::gcd(p, q) == 1) out.push_back({p, q});
        }
    }
    return out;
}

bool sharp_bound_known(const LensParams& lp) {
    if (lp.p < 3) return false;
    if (quotient_sum(lp) <= 8) return true;
    if (in_families(lp)) return true;
    return in_families(normalize_lens(lp.p, inverse_mod(lp.q, lp.p)));
}

LensSurveyRow survey_row(const LensParams& lp) {
    return compute_row(lp, [](const ColouredGraph& g) { return gm_complexity(g, 1).value; });
}

std::vector<LensSurveyRow> survey_lens_range(int p_max, int jobs) {
    if (p_max < 2) throw GemError("p_max must be >= 2");
    const auto params = lens_range(p_max);
    std::vector<LensSurveyRow> rows(params.size());
    const long n = static_cast<long>(params.size());
    // Largest p first keeps the dynamic schedule balanced.
#pragma omp parallel for schedule(dynamic, 1) num_threads(resolve_jobs(jobs))
    for (long i = n - 1; i >= 0; --i) rows[i] = survey_row(params[i]);
    return rows;
}

std::vector<LensSurveyRow> survey_lens_range_serial(int p_max) {
    if (p_max < 2) throw GemError("p_max must be >= 2");
    std::vector<LensSurveyRow> rows;
    for (const auto& lp : lens_range(p_max)) {
        rows.push_back(compute_row(lp, [](const ColouredGraph& g) { return gm_complexity_serial(g).value; }));
    }
    return rows;
}

std::optional<std::string> survey_failure(const std::vector<LensSurveyRow>& rows) {
    for (const auto& r : rows) {
        std::string what;
        if (!r.structure_ok) what = "construction check failed";
        else if (!r.h1_ok) what = "H1 is not Z_p";
        else if (!r.symmetry_ok) what = "no colour-swap symmetry";
        else if (r.bound_applies && !r.bound_ok) what = "gm " + std::to_string(r.gm_value) + " exceeds S-3";
        else if (r.sharp_forced && r.gm_value != r.bound) what = "gm " + std::to_string(r.gm_value) + " differs from forced S-3";
        if (!what.empty()) {
            std::ostringstream msg;
            msg << "L(" << r.p << "," << r.q << "): " << what << " (S=" << r.s << ", order " << r.order << ")";
            return msg.str();
        }
    }
    return std::nullopt;
}

void write_survey_csv(std::ostream& out, const std::vector<LensSurveyRow>& rows) {
    auto flag = [](bool b) { return b ? "true" : "false"; };
    out << "p,q,S,order,k_upper,gm,bound,bound_ok,h1_ok,symmetry_ok,sharp_forced\n";
    for (const auto& r : rows) {
        out << r.p << ',' << r.q << ',' << r.s << ',' << r.order << ',' << r.k_upper << ',' << r.gm_value << ',';
        if (r.bound_applies) out << r.bound << ',' << flag(r.bound_ok);
        else out << "n/a,n/a";
        out << ',' << flag(r.h1_ok) << ',' << flag(r.symmetry_ok) << ',' << flag(r.sharp_forced) << '\n';
    }
}

}  // namespace lensgem
