#include "report.hpp"

#include <sstream>

#include <json.hpp>

namespace anum {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json flags_to_json(const VerificationReport::Flags& f) {
  ordered_json j;
  j["hypotheses_ok"] = f.hypotheses_ok;
  j["cc_honest_matches_rank"] = f.cc_honest_matches_rank;
  j["cc_paper_matches_rank"] = f.cc_paper_matches_rank;
  j["formula_rank_integral"] = f.formula_rank_integral;
  j["formula_a_integral"] = f.formula_a_integral;
  j["formula_rank_matches_matrix"] = f.formula_rank_matches_matrix;
  j["formula_a_matches_matrix"] = f.formula_a_matches_matrix;
  j["supersingular"] = f.supersingular;
  return j;
}

}  // namespace

std::string report_to_json(const VerificationReport& r) {
  ordered_json j;
  j["p"] = r.p;
  j["s"] = r.s;
  j["m"] = r.m;
  j["n"] = r.n;
  j["q"] = r.q;
  j["g"] = r.g;
  j["matrix_rank"] = r.matrix_rank;
  j["a_number"] = r.a_number;
  j["p_rank"] = r.p_rank;
  j["cc_honest"] = r.cc_honest;
  j["cc_paper"] = r.cc_paper;
  j["formula_rank_num"] = r.formula_rank.num;
  j["formula_rank_den"] = r.formula_rank.den;
  j["formula_a_num"] = r.formula_a.num;
  j["formula_a_den"] = r.formula_a.den;
  if (r.have_points) {
    j["points_total"] = r.points_total;
    j["maximal"] = r.maximal;
  } else {
    j["points_total"] = nullptr;
    j["maximal"] = nullptr;
  }
  j["flags"] = flags_to_json(r.flags);
  return j.dump();
}

VerificationReport report_from_json(const std::string& text) {
  ordered_json j = ordered_json::parse(text);
  VerificationReport r;
  r.p = j.at("p").get<u64>();
  r.s = j.at("s").get<unsigned>();
  r.m = j.at("m").get<u64>();
  r.n = j.at("n").get<u64>();
  r.q = j.at("q").get<u64>();
  r.g = j.at("g").get<u64>();
  r.matrix_rank = j.at("matrix_rank").get<u64>();
  r.a_number = j.at("a_number").get<u64>();
  r.p_rank = j.at("p_rank").get<u64>();
  r.cc_honest = j.at("cc_honest").get<u64>();
  r.cc_paper = j.at("cc_paper").get<u64>();
  r.formula_rank = Rational{j.at("formula_rank_num").get<i64>(), j.at("formula_rank_den").get<i64>()};
  r.formula_a = Rational{j.at("formula_a_num").get<i64>(), j.at("formula_a_den").get<i64>()};
  if (!j.at("points_total").is_null()) {
    r.have_points = true;
    r.points_total = j.at("points_total").get<u64>();
    r.maximal = j.at("maximal").get<bool>();
  }
  const auto& f = j.at("flags");
  r.flags.hypotheses_ok = f.at("hypotheses_ok").get<bool>();
  r.flags.cc_honest_matches_rank = f.at("cc_honest_matches_rank").get<bool>();
  r.flags.cc_paper_matches_rank = f.at("cc_paper_matches_rank").get<bool>();
  r.flags.formula_rank_integral = f.at("formula_rank_integral").get<bool>();
  r.flags.formula_a_integral = f.at("formula_a_integral").get<bool>();
  r.flags.formula_rank_matches_matrix = f.at("formula_rank_matches_matrix").get<bool>();
  r.flags.formula_a_matches_matrix = f.at("formula_a_matches_matrix").get<bool>();
  r.flags.supersingular = f.at("supersingular").get<bool>();
  return r;
}

std::string report_csv_header() {
  return "p,s,m,n,q,g,matrix_rank,a_number,p_rank,cc_honest,cc_paper,"
         "formula_rank_num,formula_rank_den,formula_a_num,formula_a_den,"
         "points_total,maximal,flags";
}

std::string report_csv_row(const VerificationReport& r) {
  std::ostringstream os;
  os << r.p << ',' << r.s << ',' << r.m << ',' << r.n << ',' << r.q << ',' << r.g << ','
     << r.matrix_rank << ',' << r.a_number << ',' << r.p_rank << ',' << r.cc_honest << ','
     << r.cc_paper << ',' << r.formula_rank.num << ',' << r.formula_rank.den << ','
     << r.formula_a.num << ',' << r.formula_a.den << ',';
  if (r.have_points)
    os << r.points_total << ',' << (r.maximal ? "true" : "false");
  else
    os << ',';
  const auto& f = r.flags;
  os << ',' << "hypotheses_ok=" << f.hypotheses_ok
     << ";cc_honest_matches_rank=" << f.cc_honest_matches_rank
     << ";cc_paper_matches_rank=" << f.cc_paper_matches_rank
     << ";formula_rank_integral=" << f.formula_rank_integral
     << ";formula_a_integral=" << f.formula_a_integral
     << ";formula_rank_matches_matrix=" << f.formula_rank_matches_matrix
     << ";formula_a_matches_matrix=" << f.formula_a_matches_matrix
     << ";supersingular=" << f.supersingular;
  return os.str();
}

}  // namespace anum
