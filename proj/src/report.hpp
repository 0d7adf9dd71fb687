#pragma once

#include <string>

#include "cartier.hpp"

namespace anum {

// Stable JSON object, fixed field order:
// p, s, m, n, q, g, matrix_rank, a_number, p_rank, cc_honest, cc_paper,
// formula_rank_num, formula_rank_den, formula_a_num, formula_a_den,
// points_total, maximal, flags. points_total/maximal are null when the
// field was over the brute-force guard.
std::string report_to_json(const VerificationReport& r);

VerificationReport report_from_json(const std::string& text);

std::string report_csv_header();
std::string report_csv_row(const VerificationReport& r);

}  // namespace anum
