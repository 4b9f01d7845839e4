#include "narop/dimensions.hpp"

#include <json.hpp>

#include <stdexcept>

#include "narop/errors.hpp"

namespace narop {

DimensionResult dimension(const OperadPresentation& pres, long p,
                          const RankOptions& rank_options, const ResourceLimits& limits,
                          const Deadline& deadline) {
    if (p < 0) throw std::invalid_argument("dimension needs p >= 0");
    if (p <= 1) return DimensionResult{1, false};
    const SparseIntMatrix m = relation_span(pres, p, limits);
    const RankResult r = matrix_rank(m, rank_options, deadline);
    const Integer count = fuss_catalan(pres.n, p);
    const Integer dim = count - r.rank;
    if (!dim.fits_slong_p()) throw std::overflow_error("dimension exceeds long range");
    return DimensionResult{dim.get_si(), r.modular_certified};
}

DimensionTable dimension_table(const OperadPresentation& pres, long max_p,
                               const RankOptions& rank_options, const ResourceLimits& limits,
                               const Deadline& deadline) {
    if (max_p < 0) throw std::invalid_argument("dimension table needs max_p >= 0");
    DimensionTable table;
    table.presentation = pres;
    table.entries.reserve(static_cast<std::size_t>(max_p) + 1);
    for (long p = 0; p <= max_p; ++p) {
        const DimensionResult r = dimension(pres, p, rank_options, limits, deadline);
        table.entries.push_back(
            DimensionEntry{p, p * (pres.n - 1) + 1, r.value, r.modular_certified});
    }
    return table;
}

std::string DimensionTable::to_json_string() const {
    nlohmann::json j;
    j["family"] = family_to_string(presentation.family);
    j["n"] = presentation.n;
    j["d"] = presentation.d;
    auto& dims = j["dims"] = nlohmann::json::array();
    for (const auto& e : entries)
        dims.push_back(nlohmann::json::array(
            {e.p, e.arity, e.dim, e.modular_certified ? "modular" : "exact"}));
    return j.dump();
}

DimensionTable dimension_table_from_json(const std::string& json_text) {
    try {
        const nlohmann::json j = nlohmann::json::parse(json_text);
        DimensionTable table;
        table.presentation =
            OperadPresentation{family_from_string(j.at("family").get<std::string>()),
                               j.at("n").get<long>(), j.at("d").get<long>()};
        for (const auto& row : j.at("dims")) {
            if (!row.is_array() || row.size() != 4)
                throw parse_error("dimension table rows must be [p, arity, dim, mode]");
            const std::string mode = row.at(3).get<std::string>();
            if (mode != "exact" && mode != "modular")
                throw parse_error("unknown rank mode in dimension table: " + mode);
            table.entries.push_back(DimensionEntry{row.at(0).get<long>(), row.at(1).get<long>(),
                                                   row.at(2).get<long>(), mode == "modular"});
        }
        return table;
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("bad dimension table JSON: ") + e.what());
    }
}

ExactSeries generating_series(const DimensionTable& table) {
    const OperadPresentation& pres = table.presentation;
    const long max_p = table.entries.empty() ? 0 : table.entries.back().p;
    const long order = max_p * (pres.n - 1) + 1;
    std::vector<Rational> coeffs(static_cast<std::size_t>(order) + 1, Rational(0));
    const bool d_odd = pres.parity() == DegreeParity::Odd;
    for (const auto& e : table.entries) {
        const bool negative = d_odd && (e.p % 2 != 0);
        coeffs[static_cast<std::size_t>(e.arity)] = negative ? Rational(-e.dim) : Rational(e.dim);
    }
    return ExactSeries(std::move(coeffs));
}

ExactSeries generating_series(const OperadPresentation& pres, long max_p,
                              const RankOptions& rank_options, const ResourceLimits& limits,
                              const Deadline& deadline) {
    return generating_series(dimension_table(pres, max_p, rank_options, limits, deadline));
}

long affordable_max_p(long n, long requested, const ResourceLimits& limits, long min_p) {
    long p = min_p;
    while (p < requested && fuss_catalan(n, p + 1) <= limits.max_trees) ++p;
    return p;
}

} // namespace narop
