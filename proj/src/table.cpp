#include "kht/table.hpp"

#include <sstream>

namespace kht {

std::vector<TableRow> spectral_table(const WeightSequence& w, int max_weight,
                                     Execution exec) {
    auto sigs = enumerate_signatures(w.domain().rank, max_weight);
    std::vector<TableRow> rows(sigs.size());
    parallel_for(exec, sigs.size(), [&](std::size_t i) {
        const Signature& s = sigs[i];
        TableRow row;
        row.s = s;
        row.tau = tau(s, w);
        row.delta = delta(s, w);
        bool one_row = true;
        for (int j = 2; j <= s.rank(); ++j)
            if (s.part(j) != 0) one_row = false;
        if (one_row && w.parametric())
            row.eta = eta_gap(s.part(1), w.nu(), w.domain());
        rows[i] = std::move(row);
    });
    return rows;
}

std::string table_to_csv(const std::vector<TableRow>& rows, int rank) {
    std::ostringstream out;
    for (int j = 1; j <= rank; ++j) out << "s" << j << ",";
    out << "tau,delta,delta_source,eta_derived,eta_paper\n";
    for (const auto& row : rows) {
        for (int j = 1; j <= rank; ++j) out << row.s.part(j) << ",";
        out << to_decimal_string(row.tau) << "," << to_decimal_string(row.delta.value) << ","
            << to_string(row.delta.source);
        if (row.delta.conjectural) out << "(conjectural)";
        out << ",";
        if (row.eta)
            out << to_decimal_string(row.eta->derived) << ","
                << to_decimal_string(row.eta->paper_printed);
        else
            out << ",";
        out << "\n";
    }
    return out.str();
}

nlohmann::ordered_json table_to_json(const std::vector<TableRow>& rows) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
        nlohmann::ordered_json j;
        j["s"] = to_string(row.s);
        // Same 15-significant-digit rendering as the CSV emitter, so the two
        // encodings carry identical numbers.
        j["tau"] = to_decimal_string(row.tau);
        j["tau_exact"] = to_fraction_string(row.tau);
        j["delta"] = to_decimal_string(row.delta.value);
        j["delta_exact"] = to_fraction_string(row.delta.value);
        j["delta_source"] = to_string(row.delta.source);
        j["conjectural"] = row.delta.conjectural;
        if (row.eta) {
            j["eta_derived"] = to_decimal_string(row.eta->derived);
            j["eta_paper"] = to_decimal_string(row.eta->paper_printed);
        }
        arr.push_back(std::move(j));
    }
    return arr;
}

std::string table_to_pretty(const std::vector<TableRow>& rows) {
    std::ostringstream out;
    for (const auto& row : rows) {
        out << to_string(row.s) << "  tau=" << to_decimal_string(row.tau)
            << "  delta=" << to_decimal_string(row.delta.value) << " ["
            << to_string(row.delta.source) << (row.delta.conjectural ? ", conjectural" : "")
            << "]";
        if (row.eta)
            out << "  eta_derived=" << to_decimal_string(row.eta->derived)
                << "  eta_paper=" << to_decimal_string(row.eta->paper_printed);
        out << "\n";
    }
    return out.str();
}

}  // namespace kht
