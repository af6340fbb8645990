#pragma once

#include "quiverlie/report.hpp"

namespace quiverlie {

inline Json partition_json(const KostantPartition& a) {
    Json arr = Json::array();
    for (const auto& t : a.parts()) arr.push_back(t.str());
    return arr;
}

inline Json multipartition_json(const Multipartition& mu) {
    Json arr = Json::array();
    for (const auto& g : mu.groups()) arr.push_back(partition_json(g));
    return arr;
}

inline Json dimvec_json(const DimensionVector& d) {
    Json arr = Json::array();
    for (auto v : d.entries()) arr.push_back(v);
    return arr;
}

// Weight-space table: |FK|, |FM|, the Euler-product count, the stratum
// dimension summary and the h-eigenvalues c_i + <i', alpha>.
inline Json emit_dims(const ModuleParams& params, long long max_degree) {
    int n = params.n();
    DimensionVector box(n);
    for (int r = 0; r < n; ++r) box.at(r) = max_degree;
    auto counts = kostant_count_table(box);
    Json rows = Json::array();
    for (const auto& alpha : alphas_up_to(n, max_degree)) {
        Json row;
        row["alpha"] = dimvec_json(alpha);
        auto fk = enumerate_kostant(alpha);
        auto fm = enumerate_multipartitions(alpha);
        row["fk"] = fk.size();
        row["fm"] = fm.size();
        row["euler_count"] = counts.at(alpha);
        long long top = 0, maxdim = 0;
        for (const auto& mu : fm) {
            long long d = dim_stratum(mu).dim;
            maxdim = std::max(maxdim, d);
            if (d == alpha.total()) ++top;
        }
        row["max_stratum_dim"] = maxdim;
        row["top_strata"] = top;
        Json h = Json::array();
        for (int iv = 0; iv < n; ++iv)
            h.push_back(rat_str(params.c(iv) + rat_ll(alpha.cartan(Residue(n, iv)))));
        row["h_eigenvalues"] = h;
        rows.push_back(row);
    }
    Json out;
    out["n"] = n;
    out["max_degree"] = max_degree;
    out["rows"] = rows;
    return out;
}

// Stratum table for one weight: every multipartition with its dimension and
// per-group fiber dimensions, plus the covering degree of sigma.
inline Json emit_strata(int n, const DimensionVector& alpha) {
    Json rows = Json::array();
    for (const auto& mu : enumerate_multipartitions(alpha)) {
        StratumReport rep = dim_stratum(mu);
        Json row;
        row["multipartition"] = multipartition_json(mu);
        row["dim"] = rep.dim;
        row["fiber_dims"] = rep.fiber_dims;
        row["covering_degree"] = covering_degree(mu);
        row["simple"] = mu.simple();
        rows.push_back(row);
    }
    Json out;
    out["n"] = n;
    out["alpha"] = dimvec_json(alpha);
    out["strata"] = rows;
    return out;
}

inline Json component_json(const ComponentRecord& rec, const Rat& value) {
    Json row;
    row["kind"] = component_kind_name(rec.kind);
    row["source"] = partition_json(rec.source);
    row["target"] = partition_json(rec.target);
    row["multiplicity"] = rec.multiplicity;
    if (rec.pivot)
        row["pivot"] = rec.pivot->str();
    else
        row["pivot"] = nullptr;
    row["value"] = rat_str(value);
    return row;
}

// Component catalog of the degree-i correspondence over weight alpha, with
// the matching eps/phi matrix coefficients.
inline Json emit_components(const ModuleParams& params, const DimensionVector& alpha,
                            const Residue& i) {
    Json over_source = Json::array(), over_target = Json::array();
    for (const auto& a : enumerate_kostant(alpha))
        for (const auto& rec : components_over_source(a, i))
            over_source.push_back(component_json(rec, phi_coeff(rec.target, rec.source, i, params)));
    DimensionVector alpha1 = alpha + DimensionVector::simple(i);
    for (const auto& a1 : enumerate_kostant(alpha1))
        for (const auto& rec : components_over_target(a1, i))
            over_target.push_back(
                component_json(rec, rat_ll(eps_coeff(rec.source, rec.target, i))));
    Json out;
    out["n"] = params.n();
    out["alpha"] = dimvec_json(alpha);
    out["i"] = i.value();
    out["over_source"] = over_source;
    out["over_target"] = over_target;
    return out;
}

// Exact matrix of a named operator on one graded piece.  Dense entries up to
// 64 basis elements, sparse triplets above.
inline Json emit_matrix(const LinOp& op, const std::string& op_name,
                        const DimensionVector& alpha) {
    PieceMatrix m = matrix_of(op, alpha);
    Json out;
    out["op"] = op_name;
    out["source_alpha"] = dimvec_json(m.source_alpha);
    out["target_alpha"] = dimvec_json(m.target_alpha);
    Json sb = Json::array(), tb = Json::array();
    for (const auto& a : m.source_basis) sb.push_back(partition_json(a));
    for (const auto& a : m.target_basis) tb.push_back(partition_json(a));
    out["source_basis"] = sb;
    out["target_basis"] = tb;
    bool dense = m.source_basis.size() <= 64 && m.target_basis.size() <= 64;
    out["dense"] = dense;
    if (dense) {
        Json rows = Json::array();
        for (const auto& r : m.entries) {
            Json row = Json::array();
            for (const auto& x : r) row.push_back(rat_str(x));
            rows.push_back(row);
        }
        out["entries"] = rows;
    } else {
        Json trips = Json::array();
        for (size_t r = 0; r < m.entries.size(); ++r)
            for (size_t c = 0; c < m.entries[r].size(); ++c)
                if (m.entries[r][c] != 0)
                    trips.push_back(Json::array({r, c, rat_str(m.entries[r][c])}));
        out["entries"] = trips;
    }
    return out;
}

inline std::string table_csv(const Json& j) {
    // flat tables only: emit rows of scalar fields
    const Json* rows = nullptr;
    for (const char* key : {"rows", "strata", "suites"})
        if (j.contains(key)) rows = &j.at(key);
    if (!rows || rows->empty()) return "";
    std::string out;
    bool first = true;
    for (const auto& [k, v] : rows->front().items()) {
        if (!first) out += ",";
        first = false;
        out += k;
    }
    out += "\n";
    for (const auto& row : *rows) {
        first = true;
        for (const auto& [k, v] : row.items()) {
            if (!first) out += ",";
            first = false;
            std::string s = v.is_string() ? v.get<std::string>() : v.dump();
            for (char& ch : s)
                if (ch == ',') ch = ';';
            out += s;
        }
        out += "\n";
    }
    return out;
}

}  // namespace quiverlie
