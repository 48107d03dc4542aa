#include "fk3/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include <json.hpp>

#include "fk3/hodge.hpp"

namespace fk3 {

using ordered_json = nlohmann::ordered_json;

CatalogFormat parse_format(const std::string& text) {
    if (text == "csv")
        return CatalogFormat::Csv;
    if (text == "json")
        return CatalogFormat::Json;
    if (text == "md")
        return CatalogFormat::Markdown;
    throw std::invalid_argument("unknown format '" + text + "' (expected csv, json or md)");
}

WeightSystem parse_weight_spec(const std::string& text) {
    std::size_t pos = 0;
    const auto read_number = [&](const char* what) -> Int {
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw ParseError(std::string("expected ") + what, pos);
        Int value = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            value = value * 10 + (text[pos] - '0');
            if (value > Int{1'000'000'000'000})
                throw ParseError("number too large", pos);
            ++pos;
        }
        return value;
    };

    std::vector<Int> weights;
    weights.push_back(read_number("a weight"));
    while (pos < text.size() && text[pos] == ',') {
        ++pos;
        weights.push_back(read_number("a weight"));
    }
    if (pos >= text.size() || text[pos] != ':')
        throw ParseError("expected ':' before the degree", pos);
    ++pos;
    const Int degree = read_number("the degree");
    if (pos != text.size())
        throw ParseError("unexpected trailing characters", pos);

    for (Int a : weights)
        if (a == 0)
            throw std::domain_error("weights must be positive");
    if (degree == 0)
        throw std::domain_error("degree must be positive");
    return WeightSystem(std::move(weights), degree);
}

std::string render(const WeightSystem& ws) { return to_string(ws); }

namespace {

std::string space_join(const std::vector<Int>& v) {
    std::ostringstream out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            out << ' ';
        out << v[i];
    }
    return out.str();
}

std::string space_join(const std::vector<std::size_t>& v) {
    std::ostringstream out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            out << ' ';
        out << v[i];
    }
    return out.str();
}

// Exponent-compressed tuple, e.g. (1,2^4,3).
std::string compress_weights(const std::vector<Int>& v) {
    std::ostringstream out;
    out << '(';
    std::size_t i = 0;
    bool first = true;
    while (i < v.size()) {
        std::size_t run = 1;
        while (i + run < v.size() && v[i + run] == v[i])
            ++run;
        if (!first)
            out << ',';
        out << v[i];
        if (run > 1)
            out << '^' << run;
        first = false;
        i += run;
    }
    out << ')';
    return out.str();
}

std::vector<std::string> tag_names(const FamilyRecord& rec) {
    std::vector<std::string> names;
    for (FamilyTag t : rec.tags)
        names.push_back(to_string(t));
    if (!rec.reid_tai_divergent.empty())
        names.push_back("reid_tai_divergent");
    return names;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i)
            out += sep;
        out += parts[i];
    }
    return out;
}

std::string dash_if_empty(std::string s) { return s.empty() ? "-" : s; }

Int middle_primitive(const HodgeRow& row) {
    return row.primitive[static_cast<std::size_t>(row.dim / 2)];
}

ordered_json family_row_json(const FamilyRecord& rec, std::size_t index) {
    ordered_json j;
    j["index"] = index;
    j["weights"] = rec.ws.weights();
    j["degree"] = rec.ws.degree();
    j["h22_total"] = rec.hodge.middle_total;
    j["h22_primitive"] = middle_primitive(rec.hodge);
    j["sing_dim"] = rec.sing_dim;
    j["sing_class"] = to_string(rec.sing_class);
    if (rec.association)
        j["association_k3"] = rec.association->k3.weights();
    else
        j["association_k3"] = nullptr;
    j["rationality"] = to_string(rec.rationality);
    j["tags"] = tag_names(rec);
    return j;
}

std::string family_row_csv(const FamilyRecord& rec, std::size_t index) {
    std::ostringstream out;
    out << index << ',' << space_join(rec.ws.weights()) << ',' << rec.ws.degree() << ','
        << rec.hodge.middle_total << ',' << middle_primitive(rec.hodge) << ',' << rec.sing_dim
        << ',' << to_string(rec.sing_class) << ','
        << (rec.association ? space_join(rec.association->k3.weights()) : std::string("-")) << ','
        << to_string(rec.rationality) << ',' << dash_if_empty(join(tag_names(rec), "+"));
    return out.str();
}

std::string family_row_md(const FamilyRecord& rec, std::size_t index) {
    std::ostringstream out;
    out << "| " << index << " | " << compress_weights(rec.ws.weights()) << " | "
        << rec.ws.degree() << " | " << rec.hodge.middle_total << " | " << rec.sing_dim << " | "
        << to_string(rec.sing_class) << " | "
        << (rec.association ? compress_weights(rec.association->k3.weights()) : std::string("-"))
        << " | " << to_string(rec.rationality) << " | "
        << dash_if_empty(join(tag_names(rec), " ")) << " |";
    return out.str();
}

constexpr const char* kFamilyCsvHeader =
    "index,weights,degree,h22_total,h22_primitive,sing_dim,sing_class,association_k3,"
    "rationality,tags";

constexpr const char* kFamilyMdHeader =
    "| # | weights | d | h22 | sing dim | class | K3 | rationality | tags |\n"
    "| --- | --- | --- | --- | --- | --- | --- | --- | --- |";

std::string relation_name(const Stratum& s) {
    if (s.contained_in_X)
        return "contained";
    return s.on_X ? "transverse" : "off";
}

ordered_json stratum_json(const Stratum& s) {
    ordered_json j;
    j["r"] = s.r;
    j["indices"] = s.indices;
    j["relation"] = relation_name(s);
    if (s.tangent_index)
        j["tangent_index"] = *s.tangent_index;
    else
        j["tangent_index"] = nullptr;
    if (s.on_X) {
        j["type"] = s.transverse.to_string();
        j["residues"] = s.transverse.residues;
        j["class"] = to_string(reid_tai_classify(s.transverse));
    } else {
        j["type"] = nullptr;
        j["residues"] = ordered_json::array();
        j["class"] = nullptr;
    }
    j["locus_dim"] = s.locus_dim;
    return j;
}

}  // namespace

std::string emit_family_catalog(const std::vector<FamilyRecord>& records, CatalogFormat fmt) {
    std::ostringstream out;
    switch (fmt) {
        case CatalogFormat::Csv: {
            out << kFamilyCsvHeader << '\n';
            for (std::size_t i = 0; i < records.size(); ++i)
                out << family_row_csv(records[i], i + 1) << '\n';
            return out.str();
        }
        case CatalogFormat::Json: {
            ordered_json arr = ordered_json::array();
            for (std::size_t i = 0; i < records.size(); ++i)
                arr.push_back(family_row_json(records[i], i + 1));
            return arr.dump(2) + "\n";
        }
        case CatalogFormat::Markdown: {
            out << kFamilyMdHeader << '\n';
            for (std::size_t i = 0; i < records.size(); ++i)
                out << family_row_md(records[i], i + 1) << '\n';
            return out.str();
        }
    }
    throw std::logic_error("invalid CatalogFormat");
}

std::string emit_k3_catalog(const std::vector<WeightSystem>& k3s, CatalogFormat fmt) {
    std::ostringstream out;
    switch (fmt) {
        case CatalogFormat::Csv: {
            out << "index,weights,degree,h11_total,h11_primitive\n";
            for (std::size_t i = 0; i < k3s.size(); ++i) {
                const HodgeRow row = primitive_middle_hodge(k3s[i]);
                out << i + 1 << ',' << space_join(k3s[i].weights()) << ',' << k3s[i].degree()
                    << ',' << row.middle_total << ',' << middle_primitive(row) << '\n';
            }
            return out.str();
        }
        case CatalogFormat::Json: {
            ordered_json arr = ordered_json::array();
            for (std::size_t i = 0; i < k3s.size(); ++i) {
                const HodgeRow row = primitive_middle_hodge(k3s[i]);
                ordered_json j;
                j["index"] = i + 1;
                j["weights"] = k3s[i].weights();
                j["degree"] = k3s[i].degree();
                j["h11_total"] = row.middle_total;
                j["h11_primitive"] = middle_primitive(row);
                arr.push_back(std::move(j));
            }
            return arr.dump(2) + "\n";
        }
        case CatalogFormat::Markdown: {
            out << "| # | weights | d | h11 |\n| --- | --- | --- | --- |\n";
            for (std::size_t i = 0; i < k3s.size(); ++i) {
                const HodgeRow row = primitive_middle_hodge(k3s[i]);
                out << "| " << i + 1 << " | " << compress_weights(k3s[i].weights()) << " | "
                    << k3s[i].degree() << " | " << row.middle_total << " |\n";
            }
            return out.str();
        }
    }
    throw std::logic_error("invalid CatalogFormat");
}

std::string emit_weight_list(const std::vector<WeightSystem>& list, CatalogFormat fmt) {
    std::ostringstream out;
    switch (fmt) {
        case CatalogFormat::Csv: {
            out << "index,weights,degree\n";
            for (std::size_t i = 0; i < list.size(); ++i)
                out << i + 1 << ',' << space_join(list[i].weights()) << ',' << list[i].degree()
                    << '\n';
            return out.str();
        }
        case CatalogFormat::Json: {
            ordered_json arr = ordered_json::array();
            for (std::size_t i = 0; i < list.size(); ++i) {
                ordered_json j;
                j["index"] = i + 1;
                j["weights"] = list[i].weights();
                j["degree"] = list[i].degree();
                arr.push_back(std::move(j));
            }
            return arr.dump(2) + "\n";
        }
        case CatalogFormat::Markdown: {
            out << "| # | weights | d |\n| --- | --- | --- |\n";
            for (std::size_t i = 0; i < list.size(); ++i)
                out << "| " << i + 1 << " | " << compress_weights(list[i].weights()) << " | "
                    << list[i].degree() << " |\n";
            return out.str();
        }
    }
    throw std::logic_error("invalid CatalogFormat");
}

std::string emit_strata_report(const WeightSystem& ws, const SingularityReport& report,
                               CatalogFormat fmt) {
    Int dim = -1;
    for (const auto& s : report.strata)
        dim = std::max(dim, s.locus_dim);

    std::ostringstream out;
    switch (fmt) {
        case CatalogFormat::Csv: {
            out << "r,indices,relation,tangent_index,residues,locus_dim,class\n";
            for (const auto& s : report.strata) {
                out << s.r << ',' << space_join(s.indices) << ',' << relation_name(s) << ',';
                if (s.tangent_index)
                    out << *s.tangent_index;
                else
                    out << '-';
                out << ',' << dash_if_empty(space_join(s.transverse.residues)) << ','
                    << s.locus_dim << ','
                    << (s.on_X ? to_string(reid_tai_classify(s.transverse)) : std::string("-"))
                    << '\n';
            }
            return out.str();
        }
        case CatalogFormat::Json: {
            ordered_json j;
            j["weights"] = ws.weights();
            j["degree"] = ws.degree();
            j["singular_locus_dim"] = dim;
            j["overall_class"] = to_string(report.overall);
            ordered_json arr = ordered_json::array();
            for (const auto& s : report.strata)
                arr.push_back(stratum_json(s));
            j["strata"] = std::move(arr);
            return j.dump(2) + "\n";
        }
        case CatalogFormat::Markdown: {
            out << "| r | indices | relation | tangent | type | dim | class |\n"
                << "| --- | --- | --- | --- | --- | --- | --- |\n";
            for (const auto& s : report.strata) {
                out << "| " << s.r << " | {" << space_join(s.indices) << "} | "
                    << relation_name(s) << " | ";
                if (s.tangent_index)
                    out << "x" << *s.tangent_index;
                else
                    out << '-';
                out << " | " << (s.on_X ? s.transverse.to_string() : std::string("-")) << " | "
                    << s.locus_dim << " | "
                    << (s.on_X ? to_string(reid_tai_classify(s.transverse)) : std::string("-"))
                    << " |\n";
            }
            out << '\n'
                << "singular locus dimension " << dim << ", class "
                << to_string(report.overall) << '\n';
            return out.str();
        }
    }
    throw std::logic_error("invalid CatalogFormat");
}

std::string emit_family_detail(const FamilyRecord& rec, CatalogFormat fmt) {
    switch (fmt) {
        case CatalogFormat::Csv: {
            std::ostringstream out;
            out << kFamilyCsvHeader << '\n' << family_row_csv(rec, 1) << '\n';
            return out.str();
        }
        case CatalogFormat::Json: {
            ordered_json j = family_row_json(rec, 1);
            j.erase("index");
            j["fk3"] = rec.fk3;
            ordered_json hodge;
            hodge["dim"] = rec.hodge.dim;
            hodge["primitive"] = rec.hodge.primitive;
            hodge["middle_total"] = rec.hodge.middle_total;
            j["hodge"] = std::move(hodge);
            ordered_json strata = ordered_json::array();
            for (const auto& s : rec.strata)
                strata.push_back(stratum_json(s));
            j["strata"] = std::move(strata);
            if (rec.del_pezzo) {
                ordered_json dp;
                dp["ambient"] = rec.del_pezzo->ambient.weights();
                dp["degree"] = rec.del_pezzo->ambient.degree();
                dp["k_degree"] = rec.del_pezzo->k_degree;
                j["del_pezzo"] = std::move(dp);
            } else {
                j["del_pezzo"] = nullptr;
            }
            ordered_json divergent = ordered_json::array();
            for (const auto& q : rec.reid_tai_divergent)
                divergent.push_back(q.to_string());
            j["reid_tai_divergent"] = std::move(divergent);
            return j.dump(2) + "\n";
        }
        case CatalogFormat::Markdown: {
            std::ostringstream out;
            out << kFamilyMdHeader << '\n' << family_row_md(rec, 1) << '\n';
            if (!rec.strata.empty()) {
                SingularityReport report{rec.sing_class, rec.strata};
                out << '\n'
                    << emit_strata_report(rec.ws, report, CatalogFormat::Markdown);
            }
            if (rec.del_pezzo)
                out << '\n'
                    << "del Pezzo ambient S_" << rec.del_pezzo->ambient.degree() << " in P"
                    << compress_weights(rec.del_pezzo->ambient.weights()) << " with K = O(-"
                    << rec.del_pezzo->k_degree << ")\n";
            return out.str();
        }
    }
    throw std::logic_error("invalid CatalogFormat");
}

std::string emit_check_report(const WeightSystem& ws, const std::vector<PredicateCheck>& checks,
                              CatalogFormat fmt) {
    bool all_passed = true;
    for (const auto& c : checks)
        all_passed = all_passed && c.passed;

    std::ostringstream out;
    switch (fmt) {
        case CatalogFormat::Csv: {
            out << "predicate,passed,detail\n";
            for (const auto& c : checks)
                out << c.name << ',' << (c.passed ? "true" : "false") << ',' << c.detail << '\n';
            return out.str();
        }
        case CatalogFormat::Json: {
            ordered_json j;
            j["weights"] = ws.weights();
            j["degree"] = ws.degree();
            ordered_json arr = ordered_json::array();
            for (const auto& c : checks) {
                ordered_json cj;
                cj["predicate"] = c.name;
                cj["passed"] = c.passed;
                cj["detail"] = c.detail;
                arr.push_back(std::move(cj));
            }
            j["checks"] = std::move(arr);
            j["all_passed"] = all_passed;
            return j.dump(2) + "\n";
        }
        case CatalogFormat::Markdown: {
            out << "| predicate | result | detail |\n| --- | --- | --- |\n";
            for (const auto& c : checks)
                out << "| " << c.name << " | " << (c.passed ? "pass" : "fail") << " | "
                    << c.detail << " |\n";
            out << '\n'
                << to_string(ws) << (all_passed ? " satisfies" : " fails")
                << " the census conditions\n";
            return out.str();
        }
    }
    throw std::logic_error("invalid CatalogFormat");
}

}  // namespace fk3
