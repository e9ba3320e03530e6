#include "raagprobe/report.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

namespace raagprobe {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json set_to_json(const VertexSet& s) { return ordered_json(s.to_vector()); }

template <typename Pair>
ordered_json pairs_to_json(const std::vector<Pair>& pairs) {
    ordered_json arr = ordered_json::array();
    for (const auto& [a, b] : pairs) arr.push_back({a, b});
    return arr;
}

void join_list(std::ostream& out, const std::vector<int>& values) {
    out << "{";
    for (std::size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << values[i];
    out << "}";
}

}  // namespace

AnalyzeReport analyze_graph(const Graph& g, std::size_t witness_cap) {
    AnalyzeReport report;
    report.n = g.vertex_count();
    report.m = g.edge_count();
    report.max_witnesses = witness_cap;
    report.domination = domination_report(g, witness_cap);
    report.separations = star_separation_report(g);
    report.verdict = finiteness_verdict(g);
    return report;
}

std::string render_json(const AnalyzeReport& report) {
    ordered_json doc;
    doc["input"] = report.input;
    doc["n"] = report.n;
    doc["m"] = report.m;
    doc["max_witnesses"] =
        report.max_witnesses == kNoWitnessCap ? ordered_json(nullptr) : ordered_json(report.max_witnesses);

    ordered_json dom;
    dom["adjacent_count"] = report.domination.adjacent_count;
    dom["nonadjacent_count"] = report.domination.nonadjacent_count;
    dom["diamond_count"] = report.domination.diamond_count;
    dom["witnesses_capped"] = report.domination.witnesses_capped;
    dom["adjacent_pairs"] = pairs_to_json(report.domination.adjacent_pairs);
    dom["nonadjacent_pairs"] = pairs_to_json(report.domination.nonadjacent_pairs);
    ordered_json diamonds = ordered_json::array();
    for (const auto& d : report.domination.diamonds) diamonds.push_back({d[0], d[1], d[2], d[3]});
    dom["diamonds"] = diamonds;
    doc["domination"] = std::move(dom);

    ordered_json sep;
    sep["star_cut_count"] = report.separations.star_cut_vertices.count();
    sep["reducible"] = report.separations.reducible;
    ordered_json kcounts = ordered_json::object();
    for (const auto& [k, count] : report.separations.proper_k_separation_counts)
        kcounts[std::to_string(k)] = count;
    sep["proper_k_separation_counts"] = std::move(kcounts);
    sep["star_cut_vertices"] = set_to_json(report.separations.star_cut_vertices);
    sep["per_vertex_components"] = ordered_json(report.separations.per_vertex_components);
    doc["star_separations"] = std::move(sep);

    ordered_json fin;
    fin["label"] = to_string(report.verdict.label);
    fin["domination_witness"] =
        report.verdict.domination_witness
            ? ordered_json({report.verdict.domination_witness->first,
                            report.verdict.domination_witness->second})
            : ordered_json(nullptr);
    fin["star_cut_witness"] = report.verdict.star_cut_witness ? ordered_json(*report.verdict.star_cut_witness)
                                                              : ordered_json(nullptr);
    doc["finiteness"] = std::move(fin);
    doc["transvection_reducible"] = report.separations.reducible;
    return doc.dump(2) + "\n";
}

std::string render_text(const AnalyzeReport& report) {
    std::ostringstream out;
    out << "graph " << report.input << ": n=" << report.n << " m=" << report.m << "\n";
    out << "finiteness: " << to_string(report.verdict.label);
    if (report.verdict.domination_witness)
        out << "  domination witness (" << report.verdict.domination_witness->first << ","
            << report.verdict.domination_witness->second << ")";
    if (report.verdict.star_cut_witness)
        out << "  star-cut witness " << *report.verdict.star_cut_witness;
    out << "\n";
    out << "domination pairs: adjacent=" << report.domination.adjacent_count
        << " nonadjacent=" << report.domination.nonadjacent_count
        << " diamonds=" << report.domination.diamond_count << "\n";
    out << "star-cut vertices: ";
    join_list(out, report.separations.star_cut_vertices.to_vector());
    out << "\n";
    out << "proper star k-separations:";
    if (report.separations.proper_k_separation_counts.empty()) out << " none";
    for (const auto& [k, count] : report.separations.proper_k_separation_counts)
        out << " k=" << k << ":" << count;
    out << "\n";
    out << "transvection-reducible: " << (report.separations.reducible ? "yes" : "no") << "\n";
    if (report.domination.witnesses_capped)
        out << "witness lists capped at " << report.max_witnesses << "\n";
    auto print_pairs = [&](const char* label, const std::vector<std::pair<int, int>>& pairs) {
        if (pairs.empty()) return;
        out << label << ":";
        for (const auto& [a, b] : pairs) out << " (" << a << "," << b << ")";
        out << "\n";
    };
    print_pairs("adjacent pairs", report.domination.adjacent_pairs);
    print_pairs("nonadjacent pairs", report.domination.nonadjacent_pairs);
    if (!report.domination.diamonds.empty()) {
        out << "diamonds:";
        for (const auto& d : report.domination.diamonds)
            out << " (" << d[0] << "," << d[1] << "," << d[2] << "," << d[3] << ")";
        out << "\n";
    }
    return out.str();
}

}
