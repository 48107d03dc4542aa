#include "fk3/census.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <thread>

#include "fk3/quasismooth.hpp"

namespace fk3 {

std::string to_string(Rationality r) {
    switch (r) {
        case Rationality::Rational: return "rational";
        case Rationality::ConjecturalCubic: return "conjectural_cubic";
        case Rationality::Unknown: return "unknown";
    }
    throw std::logic_error("invalid Rationality");
}

std::string to_string(FamilyTag t) {
    switch (t) {
        case FamilyTag::Cubic: return "cubic";
        case FamilyTag::LinearInLastVariable: return "linear_in_last_variable";
        case FamilyTag::DoubleSuspension: return "double_suspension";
        case FamilyTag::CyclicDelPezzo: return "cyclic_del_pezzo";
    }
    throw std::logic_error("invalid FamilyTag");
}

bool degree_remainder_screen(const WeightSystem& ws) {
    const Int d = ws.degree();
    for (std::size_t i = 0; i < ws.size(); ++i) {
        const Int rem = d % ws.weight(i);
        if (rem == 0)
            continue;
        bool found = false;
        for (std::size_t j = 0; j < ws.size() && !found; ++j)
            found = j != i && ws.weight(j) == rem;
        if (!found)
            return false;
    }
    return true;
}

namespace {

// Runs fn(k) for every k in [0, count). Each index is handled exactly once,
// so fn may write to a per-index slot without locking.
template <typename Fn>
void parallel_index_loop(std::size_t count, int jobs, Fn&& fn) {
    if (jobs < 1)
        throw std::invalid_argument("jobs must be positive");
    if (jobs == 1 || count <= 1) {
        for (std::size_t k = 0; k < count; ++k)
            fn(k);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            std::size_t k = next.fetch_add(1);
            if (k >= count)
                return;
            try {
                fn(k);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error)
                    error = std::current_exception();
                next.store(count);
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    const std::size_t threads = std::min<std::size_t>(static_cast<std::size_t>(jobs), count);
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t)
        pool.emplace_back(worker);
    for (auto& t : pool)
        t.join();
    if (error)
        std::rethrow_exception(error);
}

// Census membership: the five defining conditions plus the remainder screen,
// cheapest first; quasi-smoothness last.
bool passes_census_conditions(const WeightSystem& ws) {
    const Int d = ws.degree();
    for (Int a : ws.weights())
        if (a >= d)
            return false;
    if (ws.weight_sum() != 2 * d)
        return false;
    if (!degree_remainder_screen(ws))
        return false;
    if (!dim_sing_gcd_conditions(ws))
        return false;
    if (!is_well_formed_hypersurface(ws))
        return false;
    return static_cast<bool>(is_quasi_smooth_not_cone(ws));
}

std::vector<WeightSystem> brute_force_for_degree(Int d) {
    std::vector<WeightSystem> out;
    const Int total = 2 * d;
    for (Int a0 = 1; 6 * a0 <= total; ++a0)
        for (Int a1 = a0; a0 + 5 * a1 <= total; ++a1)
            for (Int a2 = a1; a0 + a1 + 4 * a2 <= total; ++a2)
                for (Int a3 = a2; a0 + a1 + a2 + 3 * a3 <= total; ++a3)
                    for (Int a4 = a3; a0 + a1 + a2 + a3 + 2 * a4 <= total; ++a4) {
                        const Int a5 = total - a0 - a1 - a2 - a3 - a4;
                        if (a5 < a4 || a5 >= d)
                            continue;
                        WeightSystem ws({a0, a1, a2, a3, a4, a5}, d);
                        if (passes_census_conditions(ws))
                            out.push_back(std::move(ws));
                    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<WeightSystem> enumerate_k3_surfaces() {
    constexpr Int kSweepMax = 100;    // over-generous horizon
    constexpr Int kStableMax = 66;    // observed maximum degree
    std::vector<WeightSystem> out;
    for (Int d = 4; d <= kSweepMax; ++d) {
        for (Int a0 = 1; 4 * a0 <= d; ++a0)
            for (Int a1 = a0; a0 + 3 * a1 <= d; ++a1)
                for (Int a2 = a1; a0 + a1 + 2 * a2 <= d; ++a2) {
                    const Int a3 = d - a0 - a1 - a2;
                    if (a3 < a2)
                        continue;
                    WeightSystem ws({a0, a1, a2, a3}, d);
                    if (!is_well_formed_hypersurface(ws))
                        continue;
                    if (!is_quasi_smooth_not_cone(ws))
                        continue;
                    out.push_back(std::move(ws));
                }
    }
    std::sort(out.begin(), out.end());
    for (const auto& ws : out)
        if (ws.degree() > kStableMax)
            throw std::logic_error("K3 census did not stabilize below the sweep horizon: found " +
                                   to_string(ws));
    return out;
}

std::vector<WeightSystem> fourfolds_from_k3(const WeightSystem& k3) {
    if (k3.size() != 4)
        throw std::invalid_argument("fourfold construction starts from 4 weights");
    const Int d = k3.degree();
    std::vector<WeightSystem> out;
    for (Int s = 1; 2 * s <= d; ++s) {
        std::vector<Int> w = k3.weights();
        w.push_back(s);
        w.push_back(d - s);
        WeightSystem ws(std::move(w), d);
        if (passes_census_conditions(ws))
            out.push_back(std::move(ws));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<FamilyRecord> enumerate_fk3_fourfolds(int jobs) {
    const std::vector<WeightSystem> k3s = enumerate_k3_surfaces();

    std::vector<std::vector<WeightSystem>> per_k3(k3s.size());
    parallel_index_loop(k3s.size(), jobs,
                        [&](std::size_t k) { per_k3[k] = fourfolds_from_k3(k3s[k]); });

    std::vector<WeightSystem> all;
    // the cubic: a_5 = 1, the one case the K3 construction cannot reach
    all.push_back(WeightSystem({1, 1, 1, 1, 1, 1}, 3));
    for (auto& batch : per_k3)
        for (auto& ws : batch)
            all.push_back(std::move(ws));
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());

    std::vector<FamilyRecord> records(all.size());
    parallel_index_loop(all.size(), jobs,
                        [&](std::size_t k) { records[k] = analyze_family(all[k]); });

    for (const auto& rec : records) {
        if (rec.ws.weight(5) > 1 && !rec.association)
            throw std::logic_error("association theorem violated for " + to_string(rec.ws));
        if (rec.association &&
            !std::binary_search(k3s.begin(), k3s.end(), rec.association->k3))
            throw std::logic_error("associated K3 missing from the surface census for " +
                                   to_string(rec.ws));
        if ((rec.sing_dim <= 1) != dim_sing_gcd_conditions(rec.ws))
            throw std::logic_error("singular dimension disagrees with the gcd conditions for " +
                                   to_string(rec.ws));
    }
    return records;
}

std::vector<WeightSystem> brute_force_census(Int d_max, int jobs) {
    std::vector<Int> degrees;
    for (Int d = 2; d <= d_max; ++d)
        degrees.push_back(d);
    std::vector<std::vector<WeightSystem>> per_degree(degrees.size());
    parallel_index_loop(degrees.size(), jobs,
                        [&](std::size_t k) { per_degree[k] = brute_force_for_degree(degrees[k]); });
    std::vector<WeightSystem> out;
    for (auto& batch : per_degree)
        for (auto& ws : batch)
            out.push_back(std::move(ws));
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<K3Association> associate_k3(const WeightSystem& ws) {
    if (ws.size() != 6)
        throw std::invalid_argument("association is defined for 6 weights");
    const Int d = ws.degree();
    if (ws.weight(5) == 1)
        return std::nullopt;
    for (std::size_t i = 0; i < 5; ++i) {
        if (ws.weight(i) + ws.weight(5) != d)
            continue;
        std::vector<Int> k3w;
        for (std::size_t j = 0; j < 5; ++j)
            if (j != i)
                k3w.push_back(ws.weight(j));
        return K3Association{i, WeightSystem(std::move(k3w), d)};
    }
    return std::nullopt;
}

std::vector<FamilyRecord> enumerate_extra_families() {
    const Int d_max = enumerate_k3_surfaces().back().degree();
    std::vector<WeightSystem> hits;
    for (Int d = 2; d <= d_max; d += 2) {
        const Int a5 = d / 2;
        for (Int a4 = 1; a4 < a5; ++a4) {
            if (d % a4 != 0)
                continue;
            const Int rest = 2 * d - a5 - a4;  // a0+a1+a2+a3
            for (Int a0 = 1; a0 <= a4 && 4 * a0 <= rest; ++a0)
                for (Int a1 = a0; a1 <= a4 && a0 + 3 * a1 <= rest; ++a1)
                    for (Int a2 = a1; a2 <= a4 && a0 + a1 + 2 * a2 <= rest; ++a2) {
                        const Int a3 = rest - a0 - a1 - a2;
                        if (a3 < a2 || a3 > a4)
                            continue;
                        WeightSystem ws({a0, a1, a2, a3, a4, a5}, d);
                        if (ws.weight(5) >= d)
                            continue;
                        if (!is_well_formed_hypersurface(ws))
                            continue;
                        if (!is_quasi_smooth_not_cone(ws))
                            continue;
                        hits.push_back(std::move(ws));
                    }
        }
    }
    std::sort(hits.begin(), hits.end());
    std::vector<FamilyRecord> records;
    records.reserve(hits.size());
    for (const auto& ws : hits)
        records.push_back(analyze_family(ws));
    return records;
}

FamilyRecord analyze_family(const WeightSystem& ws) {
    if (ws.size() != 6)
        throw PredicateError("weight_count",
                             "need exactly 6 weights, got " + std::to_string(ws.size()));
    const Int d = ws.degree();
    if (!is_well_formed_hypersurface(ws))
        throw PredicateError("well_formed_hypersurface",
                             "gcd conditions fail for " + to_string(ws));
    for (std::size_t i = 0; i < 6; ++i)
        if (ws.weight(i) >= d)
            throw PredicateError("weights_below_degree",
                                 "weight " + std::to_string(ws.weight(i)) +
                                     " reaches the degree " + std::to_string(d));
    if (ws.weight_sum() != 2 * d)
        throw PredicateError("fano_k3_numerics",
                             "weights sum to " + std::to_string(ws.weight_sum()) +
                                 ", the K3 condition needs " + std::to_string(2 * d));
    const QuasiSmoothVerdict qs = is_quasi_smooth_not_cone(ws);
    if (!qs)
        throw PredicateError("quasi_smooth", describe(*qs.failure));

    FamilyRecord rec;
    rec.ws = ws;
    rec.fk3 = is_fano_k3_numerics(ws);
    rec.hodge = primitive_middle_hodge(ws);
    if (rec.hodge.primitive[0] != 0 || rec.hodge.primitive[1] != 1)
        throw std::logic_error("middle row is not of K3 type for " + to_string(ws));

    SingularityReport sing = classify_hypersurface(ws);
    rec.sing_class = sing.overall;
    rec.strata = std::move(sing.strata);
    rec.sing_dim = -1;
    for (const auto& s : rec.strata) {
        rec.sing_dim = std::max(rec.sing_dim, s.locus_dim);
        if (s.on_X && reid_tai_classify(s.transverse) != reid_tai_classify_coprime(s.transverse))
            rec.reid_tai_divergent.push_back(s.transverse);
    }

    rec.association = associate_k3(ws);

    const bool cubic = std::all_of(ws.weights().begin(), ws.weights().end(),
                                   [](Int a) { return a == 1; });
    const Int a4 = ws.weight(4);
    const Int a5 = ws.weight(5);
    if (cubic)
        rec.tags.insert(FamilyTag::Cubic);
    if (rec.association)
        rec.tags.insert(FamilyTag::LinearInLastVariable);
    if (a4 == a5 && 2 * a5 == d)
        rec.tags.insert(FamilyTag::DoubleSuspension);
    if (2 * a5 == d && 3 * a4 == d) {
        rec.tags.insert(FamilyTag::CyclicDelPezzo);
        rec.del_pezzo = DelPezzoData{
            WeightSystem({ws.weight(0), ws.weight(1), ws.weight(2), ws.weight(3)}, d), d / 6};
    }

    if (cubic)
        rec.rationality = Rationality::ConjecturalCubic;
    else if (rec.association)
        rec.rationality = Rationality::Rational;
    else
        rec.rationality = Rationality::Unknown;
    return rec;
}

std::vector<PredicateCheck> check_family(const WeightSystem& ws) {
    if (ws.size() != 6)
        throw std::invalid_argument("check is defined for 6 weights");
    const Int d = ws.degree();
    const auto& w = ws.weights();
    std::vector<PredicateCheck> checks;

    {
        PredicateCheck c{"well_formed_hypersurface", true, ""};
        for (std::size_t i = 0; i < 6 && c.passed; ++i) {
            Int g = 0;
            for (std::size_t k = 0; k < 6; ++k)
                if (k != i)
                    g = std::gcd(g, w[k]);
            if (g != 1) {
                c.passed = false;
                c.detail = "the five weights off index " + std::to_string(i) +
                           " share the factor " + std::to_string(g);
            }
        }
        for (std::size_t i = 0; i < 6 && c.passed; ++i)
            for (std::size_t j = i + 1; j < 6 && c.passed; ++j) {
                Int g = 0;
                for (std::size_t k = 0; k < 6; ++k)
                    if (k != i && k != j)
                        g = std::gcd(g, w[k]);
                if (d % g != 0) {
                    c.passed = false;
                    c.detail = "gcd " + std::to_string(g) + " of the weights off indices {" +
                               std::to_string(i) + " " + std::to_string(j) +
                               "} does not divide d";
                }
            }
        if (c.passed)
            c.detail = "every 5-subset coprime and every 4-subset gcd divides d";
        checks.push_back(std::move(c));
    }

    {
        PredicateCheck c{"weights_below_degree", true, "all weights below d"};
        for (std::size_t i = 0; i < 6; ++i)
            if (w[i] >= d) {
                c.passed = false;
                c.detail = "weight " + std::to_string(w[i]) + " at index " + std::to_string(i) +
                           " reaches the degree";
                break;
            }
        checks.push_back(std::move(c));
    }

    {
        PredicateCheck c{"fano_k3_numerics", ws.weight_sum() == 2 * d, ""};
        c.detail = "sum of weights " + std::to_string(ws.weight_sum()) + " vs 2d = " +
                   std::to_string(2 * d);
        checks.push_back(std::move(c));
    }

    {
        const QuasiSmoothVerdict qs = is_quasi_smooth_not_cone(ws);
        PredicateCheck c{"quasi_smooth", qs.ok,
                         qs.ok ? "every index subset admits the required monomials"
                               : describe(*qs.failure)};
        checks.push_back(std::move(c));
    }

    {
        PredicateCheck c{"singular_locus_bound", dim_sing_gcd_conditions(ws), ""};
        c.detail = c.passed ? "every 4-subset coprime and every 3-subset gcd divides d"
                            : "gcd conditions for dim <= 1 fail";
        const bool quasi_smooth = checks[3].passed;
        if (quasi_smooth) {
            const Int dim = singular_locus_dimension(ws);
            c.detail += "; singular locus dimension " + std::to_string(dim);
            if ((dim <= 1) != c.passed)
                c.detail += " (exact dimension disagrees with the gcd encoding)";
        }
        checks.push_back(std::move(c));
    }

    {
        PredicateCheck c{"census_remainder_screen", degree_remainder_screen(ws), ""};
        if (c.passed) {
            c.detail = "d mod a_i is 0 or another weight for every i";
        } else {
            for (std::size_t i = 0; i < 6; ++i) {
                const Int rem = d % w[i];
                if (rem == 0)
                    continue;
                bool found = false;
                for (std::size_t j = 0; j < 6 && !found; ++j)
                    found = j != i && w[j] == rem;
                if (!found) {
                    c.detail = "d mod " + std::to_string(w[i]) + " = " + std::to_string(rem) +
                               " is no weight; census excludes the system even when " +
                               "quasi-smoothness holds via a congruent weight";
                    break;
                }
            }
        }
        checks.push_back(std::move(c));
    }

    return checks;
}

}  // namespace fk3
