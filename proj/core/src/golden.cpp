#include <narop/golden.hpp>

#include <json.hpp>

namespace narop {

namespace {

const char* const kGoldenJson =
#include "golden_embedded.inc"
    ;

GoldenData parse_golden(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    GoldenData data;

    for (const auto& e : j.at("inverse_series")) {
        GoldenInverse g;
        g.id = e.at("id").get<std::string>();
        g.n = e.at("n").get<long>();
        g.description = e.at("description").get<std::string>();
        g.series = parse_series(e.at("series").get<std::string>());
        data.inverse_series.push_back(std::move(g));
    }

    for (const auto& e : j.at("first_negative").at("rows")) {
        GoldenFirstNegativeRow row;
        row.n = e.at("n").get<long>();
        if (e.contains("p")) row.p = e.at("p").get<long>();
        if (e.contains("exponent")) row.exponent = e.at("exponent").get<long>();
        if (e.contains("searched_to")) row.searched_to = e.at("searched_to").get<long>();
        data.first_negative.push_back(row);
    }

    auto read_series_entries = [&](const char* key, std::vector<GoldenSeriesEntry>& out) {
        for (const auto& e : j.at(key)) {
            GoldenSeriesEntry g{
                e.at("id").get<std::string>(),
                OperadPresentation{family_from_string(e.at("family").get<std::string>()),
                                   e.at("n").get<long>(), e.at("d").get<long>()},
                e.at("max_p").get<long>(),
                e.at("description").get<std::string>(),
                parse_series(e.at("series").get<std::string>()),
            };
            out.push_back(std::move(g));
        }
    };
    read_series_entries("generating_series", data.generating_series);
    read_series_entries("generator_series", data.generator_series);

    for (const auto& e : j.at("gaps")) {
        GoldenGap g;
        g.id = e.at("id").get<std::string>();
        g.presentation = OperadPresentation{family_from_string(e.at("family").get<std::string>()),
                                            e.at("n").get<long>(), e.at("d").get<long>()};
        g.max_p = e.at("max_p").get<long>();
        g.q = e.at("q").get<long>();
        g.length = e.at("length").get<long>();
        g.open_ended = e.at("open_ended").get<bool>();
        data.gaps.push_back(std::move(g));
    }

    for (const auto& e : j.at("critical_points").at("rows")) {
        GoldenCriticalRow row;
        row.n = e.at("n").get<long>();
        row.discriminant = e.at("discriminant").get<long>();
        row.theorem_applies = e.at("theorem_applies").get<bool>();
        if (e.contains("real_w_roots"))
            row.real_w_roots = e.at("real_w_roots").get<std::vector<std::string>>();
        data.critical_points.push_back(std::move(row));
    }

    return data;
}

template <class Vec>
auto find_by_id(const Vec& entries, const std::string& id) -> const typename Vec::value_type* {
    for (const auto& e : entries)
        if (e.id == id) return &e;
    return nullptr;
}

}  // namespace

const GoldenInverse* GoldenData::find_inverse(const std::string& id) const {
    return find_by_id(inverse_series, id);
}

const GoldenSeriesEntry* GoldenData::find_generating(const std::string& id) const {
    return find_by_id(generating_series, id);
}

const GoldenSeriesEntry* GoldenData::find_generator(const std::string& id) const {
    return find_by_id(generator_series, id);
}

const GoldenGap* GoldenData::find_gap(const std::string& id) const {
    return find_by_id(gaps, id);
}

std::vector<std::string> GoldenData::all_ids() const {
    std::vector<std::string> ids;
    for (const auto& e : inverse_series) ids.push_back(e.id);
    ids.push_back("first-negative-table");
    for (const auto& e : generating_series) ids.push_back(e.id);
    for (const auto& e : generator_series) ids.push_back(e.id);
    for (const auto& e : gaps) ids.push_back(e.id);
    ids.push_back("critical-points");
    return ids;
}

const std::string& golden_json_text() {
    static const std::string text = kGoldenJson;
    return text;
}

const GoldenData& golden() {
    static const GoldenData data = parse_golden(golden_json_text());
    return data;
}

}  // namespace narop
