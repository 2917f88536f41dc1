#include "qwrank/report_io.hpp"

#include <sstream>

#include <json.hpp>

#include "qwrank/graph_io.hpp"

namespace qwrank {

namespace {

using nlohmann::json;

json vector_json(const Eigen::VectorXd& v) {
    json arr = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v(i));
    return arr;
}

} // namespace

std::string rank_table_csv(const QuantumRankResult& q,
                           const std::optional<Eigen::VectorXd>& classical) {
    std::ostringstream out;
    out << "node,quantum_mean,quantum_variance";
    if (classical) out << ",classical";
    out << "\n";
    for (std::uint32_t node : rank_ordering(q.mean)) {
        out << node << "," << format_double(q.mean(node)) << ","
            << format_double(q.variance(node));
        if (classical) out << "," << format_double((*classical)(node));
        out << "\n";
    }
    return out.str();
}

std::string rank_table_json(const QuantumRankResult& q,
                            const std::optional<Eigen::VectorXd>& classical) {
    json doc;
    doc["schema"] = 1;
    doc["command"] = "rank";
    doc["steps"] = q.steps;
    doc["quantum_mean"] = vector_json(q.mean);
    doc["quantum_variance"] = vector_json(q.variance);
    if (classical) doc["classical"] = vector_json(*classical);
    json order = json::array();
    for (std::uint32_t node : rank_ordering(q.mean)) order.push_back(node);
    doc["ordering"] = order;
    return doc.dump(2) + "\n";
}

std::string comparison_csv(const ComparisonReport& report) {
    std::ostringstream out;
    out << "node,classical,quantum_mean,quantum_variance\n";
    for (std::uint32_t node = 0; node < report.n; ++node)
        out << node << "," << format_double(report.classical(node)) << ","
            << format_double(report.quantum_mean(node)) << ","
            << format_double(report.quantum_variance(node)) << "\n";
    out << "# top_classical=" << report.top_classical << "\n";
    out << "# top_quantum=" << report.top_quantum << "\n";
    out << "# top_node_match=" << (report.top_node_match ? "true" : "false") << "\n";
    out << "# kendall_tau=" << format_double(report.kendall_tau) << "\n";
    out << "# hierarchy_violations=" << report.hierarchy_violations.size() << "\n";
    return out.str();
}

std::string comparison_json(const ComparisonReport& report) {
    json doc;
    doc["schema"] = 1;
    doc["command"] = "compare";
    doc["n"] = report.n;
    doc["classical"] = vector_json(report.classical);
    doc["quantum_mean"] = vector_json(report.quantum_mean);
    doc["quantum_variance"] = vector_json(report.quantum_variance);
    doc["top_classical"] = report.top_classical;
    doc["top_quantum"] = report.top_quantum;
    doc["top_node_match"] = report.top_node_match;
    doc["kendall_tau"] = report.kendall_tau;
    json pairs = json::array();
    for (const auto& [i, j] : report.hierarchy_violations) pairs.push_back({i, j});
    doc["hierarchy_violations"] = pairs;
    return doc.dump(2) + "\n";
}

std::string convergence_csv(const ConvergenceProfile& profile) {
    std::ostringstream out;
    out << "step";
    for (Eigen::Index c = 0; c < profile.running_mean.cols(); ++c) out << ",node_" << c;
    out << "\n";
    for (Eigen::Index t = 0; t < profile.running_mean.rows(); ++t) {
        out << (t + 1);
        for (Eigen::Index c = 0; c < profile.running_mean.cols(); ++c)
            out << "," << format_double(profile.running_mean(t, c));
        out << "\n";
    }
    out << "# stabilization_step=";
    if (profile.stabilization)
        out << *profile.stabilization;
    else
        out << "none";
    out << "\n";
    return out.str();
}

std::string convergence_json(const ConvergenceProfile& profile) {
    json doc;
    doc["schema"] = 1;
    doc["command"] = "convergence";
    if (profile.stabilization)
        doc["stabilization_step"] = *profile.stabilization;
    else
        doc["stabilization_step"] = nullptr;
    json rows = json::array();
    for (Eigen::Index t = 0; t < profile.running_mean.rows(); ++t)
        rows.push_back(vector_json(profile.running_mean.row(t).transpose()));
    doc["running_mean"] = rows;
    return doc.dump(2) + "\n";
}

} // namespace qwrank
