#include "fk3/singularity.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace fk3 {

std::string to_string(SingClass c) {
    switch (c) {
        case SingClass::Terminal: return "terminal";
        case SingClass::Canonical: return "canonical";
        case SingClass::Klt: return "klt";
    }
    throw std::logic_error("invalid SingClass");
}

bool QuotientType::is_well_formed() const {
    for (std::size_t skip = 0; skip < residues.size(); ++skip) {
        Int g = order;
        for (std::size_t j = 0; j < residues.size(); ++j)
            if (j != skip) g = std::gcd(g, residues[j]);
        if (g != 1) return false;
    }
    return true;
}

std::string QuotientType::to_string() const {
    std::string s = "1/" + std::to_string(order) + "(";
    for (std::size_t j = 0; j < residues.size(); ++j) {
        if (j) s += ",";
        s += std::to_string(residues[j]);
    }
    return s + ")";
}

namespace {

void validate_type(const QuotientType& q) {
    if (q.order < 2) throw std::invalid_argument("quotient order must be at least 2");
    if (q.residues.empty()) throw std::invalid_argument("quotient type needs at least one residue");
    for (Int c : q.residues)
        if (c < 1 || c >= q.order)
            throw std::invalid_argument("residue out of range [1, r-1]");
}

// Compares sum_j frac(k*c_j / r) against 1 via the integer sums
// sum_j (k*c_j mod r) against r, with no rounding anywhere.
SingClass reid_tai_over(const QuotientType& q, bool coprime_only) {
    validate_type(q);
    const Int r = q.order;
    bool equality = false;
    for (Int k = 1; k < r; ++k) {
        if (coprime_only && std::gcd(k, r) != 1) continue;
        Int sum = 0;
        for (Int c : q.residues) sum += (k * c) % r;
        if (sum < r) return SingClass::Klt;
        if (sum == r) equality = true;
    }
    return equality ? SingClass::Canonical : SingClass::Terminal;
}

}  // namespace

SingClass reid_tai_classify(const QuotientType& q) { return reid_tai_over(q, false); }

SingClass reid_tai_classify_coprime(const QuotientType& q) { return reid_tai_over(q, true); }

std::vector<Stratum> enumerate_strata(const WeightSystem& ws) {
    const auto& w = ws.weights();
    const std::size_t n = w.size();
    std::set<Int> orders;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        Int g = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) g = std::gcd(g, w[i]);
        if (g > 1) orders.insert(g);
    }
    std::vector<Stratum> out;
    for (Int r : orders) {
        Stratum s;
        s.r = r;
        Int g = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (w[i] % r == 0) {
                s.indices.push_back(i);
                g = std::gcd(g, w[i]);
            }
        // The maximal index set has gcd exactly r: some subset already
        // realizes r, and r divides every member.
        if (g != r) throw std::logic_error("maximal stratum gcd mismatch");
        s.transverse.order = r;
        out.push_back(std::move(s));
    }
    return out;
}

Stratum stratum_relation(const WeightSystem& ws, Stratum s) {
    const auto& w = ws.weights();
    const Int d = ws.degree();
    const Int r = s.r;

    std::vector<Int> stratum_weights;
    for (std::size_t i : s.indices) stratum_weights.push_back(w[i]);
    s.contained_in_X = !semigroup_contains(d, stratum_weights);

    std::vector<std::size_t> complement;
    for (std::size_t j = 0; j < w.size(); ++j)
        if (!std::binary_search(s.indices.begin(), s.indices.end(), j))
            complement.push_back(j);

    s.transverse.order = r;
    s.transverse.residues.clear();
    s.tangent_index.reset();

    if (s.contained_in_X) {
        for (std::size_t j : complement)
            if (w[j] % r == d % r && w[j] < d) {
                s.tangent_index = j;
                break;
            }
        if (!s.tangent_index)
            throw std::runtime_error(
                "no tangent variable: general member not quasi-smooth along stratum");
        s.on_X = true;
        for (std::size_t j : complement)
            if (j != *s.tangent_index) s.transverse.residues.push_back(w[j] % r);
        s.locus_dim = static_cast<Int>(s.indices.size()) - 1;
    } else if (s.indices.size() >= 2) {
        s.on_X = true;
        for (std::size_t j : complement) s.transverse.residues.push_back(w[j] % r);
        s.locus_dim = static_cast<Int>(s.indices.size()) - 2;
    } else {
        s.on_X = false;
        s.locus_dim = -1;
    }

    for (Int c : s.transverse.residues)
        if (c == 0) throw std::logic_error("zero residue on a maximal stratum");
    return s;
}

Int singular_locus_dimension(const WeightSystem& ws) {
    Int dim = -1;
    for (Stratum s : enumerate_strata(ws))
        dim = std::max(dim, stratum_relation(ws, std::move(s)).locus_dim);
    return dim;
}

SingularityReport classify_hypersurface(const WeightSystem& ws) {
    SingularityReport report;
    for (Stratum s : enumerate_strata(ws)) {
        s = stratum_relation(ws, std::move(s));
        if (s.on_X) {
            if (!s.transverse.is_well_formed())
                throw std::logic_error("transverse quotient type is not well-formed");
            report.overall = std::max(report.overall, reid_tai_classify(s.transverse));
        }
        report.strata.push_back(std::move(s));
    }
    return report;
}

}  // namespace fk3
