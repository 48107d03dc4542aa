#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "fk3/census.hpp"
#include "fk3/singularity.hpp"
#include "fk3/weight_system.hpp"

namespace fk3 {

enum class CatalogFormat { Csv, Json, Markdown };

/// Accepts "csv", "json", "md".
CatalogFormat parse_format(const std::string& text);

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t column)
        : std::runtime_error(message + " at column " + std::to_string(column + 1)),
          column_(column) {}

    std::size_t column() const { return column_; }

private:
    std::size_t column_;
};

/// Parses "w0,w1,...,wn:d" into a weight system (weights get sorted). Throws
/// ParseError on malformed text and std::domain_error on a zero entry.
WeightSystem parse_weight_spec(const std::string& text);

/// Canonical rendering accepted back by parse_weight_spec.
std::string render(const WeightSystem& ws);

/// Family catalog: columns index, weights, degree, h22_total, h22_primitive,
/// sing_dim, sing_class, association_k3, rationality, tags.
std::string emit_family_catalog(const std::vector<FamilyRecord>& records, CatalogFormat fmt);

/// K3 catalog: index, weights, degree, h11_total, h11_primitive.
std::string emit_k3_catalog(const std::vector<WeightSystem>& k3s, CatalogFormat fmt);

/// Bare weight-system list: index, weights, degree.
std::string emit_weight_list(const std::vector<WeightSystem>& list, CatalogFormat fmt);

/// Strata table for one hypersurface: r, indices, relation, tangent index,
/// transverse residues, locus dimension, class.
std::string emit_strata_report(const WeightSystem& ws, const SingularityReport& report,
                               CatalogFormat fmt);

/// Single-family detail; JSON carries the full record including strata and
/// the del Pezzo data.
std::string emit_family_detail(const FamilyRecord& rec, CatalogFormat fmt);

/// Predicate-by-predicate report.
std::string emit_check_report(const WeightSystem& ws, const std::vector<PredicateCheck>& checks,
                              CatalogFormat fmt);

}  // namespace fk3
