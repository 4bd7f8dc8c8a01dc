#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "kht/parallel.hpp"
#include "kht/spectral.hpp"

namespace kht {

/// One emitted row per signature: tau, delta (with its source tag) and, for
/// Bergman-family weights on one-row signatures (l,0,...,0), the eta pair.
struct TableRow {
    Signature s;
    Rational tau;
    DeltaValue delta;
    std::optional<EtaGap> eta;
};

/// Rows for all |s| <= max_weight in graded-lex order.  Serial and Parallel
/// executions produce identical rows.
std::vector<TableRow> spectral_table(const WeightSequence& w, int max_weight,
                                     Execution exec = Execution::Serial);

/// CSV columns: s1..sr,tau,delta,delta_source,eta_derived,eta_paper.
std::string table_to_csv(const std::vector<TableRow>& rows, int rank);

nlohmann::ordered_json table_to_json(const std::vector<TableRow>& rows);

std::string table_to_pretty(const std::vector<TableRow>& rows);

}  // namespace kht
