#include "anum/anum.h"

#include <cstdlib>
#include <cstring>
#include <mutex>
#include <optional>
#include <string>

#include <json.hpp>

#include "cartier.hpp"
#include "points.hpp"
#include "report.hpp"

// Handle caches the matrix-derived quantities; computation is lazy and
// guarded by a mutex so a handle can be shared across threads.
struct anum_curve_s {
  anum::CurveParams params;
  std::mutex mu;
  std::optional<anum::CartierMatrix> matrix;
  std::optional<anum::u64> rank_val;
  std::optional<anum::u64> prank_val;

  const anum::CartierMatrix& get_matrix() {
    if (!matrix) matrix = anum::cartier_matrix(params);
    return *matrix;
  }
  anum::u64 get_rank() {
    if (!rank_val) rank_val = anum::rank(get_matrix());
    return *rank_val;
  }
  anum::u64 get_prank() {
    if (!prank_val) prank_val = anum::p_rank(params);
    return *prank_val;
  }
};

namespace {

thread_local std::string g_last_error;

anum_status status_of(anum::ErrorKind k) {
  switch (k) {
    case anum::ErrorKind::invalid_input: return ANUM_ERR_INVALID;
    case anum::ErrorKind::internal: return ANUM_ERR_INTERNAL;
    case anum::ErrorKind::resource: return ANUM_ERR_RESOURCE;
  }
  return ANUM_ERR_INTERNAL;
}

template <typename F>
anum_status guarded(F&& f) {
  try {
    f();
    g_last_error.clear();
    return ANUM_OK;
  } catch (const anum::Error& e) {
    g_last_error = e.what();
    return status_of(e.kind());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return ANUM_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

anum_status require_handle(const anum_curve* c) {
  if (c == nullptr) {
    g_last_error = "null curve handle";
    return ANUM_ERR_INVALID;
  }
  return ANUM_OK;
}

anum::VerificationReport build_report(anum_curve* h) {
  std::lock_guard<std::mutex> lock(h->mu);
  return anum::verify(h->params);
}

}  // namespace

extern "C" {

anum_status anum_curve_create(long long p, int s, long long m, int strict_hypotheses,
                              anum_curve** out) {
  if (out == nullptr) {
    g_last_error = "null output pointer";
    return ANUM_ERR_INVALID;
  }
  *out = nullptr;
  return guarded([&] {
    if (p <= 0 || s <= 0 || m <= 0)
      throw anum::Error(anum::ErrorKind::invalid_input, "p, s, m must be positive");
    auto params = anum::validate_params(static_cast<anum::u64>(p), static_cast<unsigned>(s),
                                        static_cast<anum::u64>(m), strict_hypotheses != 0);
    *out = new anum_curve_s{params, {}, {}, {}, {}};
  });
}

void anum_curve_free(anum_curve* c) { delete c; }

const char* anum_last_error(void) { return g_last_error.c_str(); }

long long anum_param_n(const anum_curve* c) { return c ? static_cast<long long>(c->params.n) : -1; }
long long anum_param_q(const anum_curve* c) { return c ? static_cast<long long>(c->params.q) : -1; }
long long anum_genus(const anum_curve* c) { return c ? static_cast<long long>(c->params.g) : -1; }
int anum_hypotheses_ok(const anum_curve* c) { return c ? (c->params.hyp.all() ? 1 : 0) : 0; }

anum_status anum_basis_size(const anum_curve* c, long long* out) {
  if (anum_status st = require_handle(c); st != ANUM_OK) return st;
  return guarded([&] { *out = static_cast<long long>(anum::enumerate_basis(c->params).size()); });
}

anum_status anum_paper_index_set_size(const anum_curve* c, long long* out) {
  if (anum_status st = require_handle(c); st != ANUM_OK) return st;
  return guarded(
      [&] { *out = static_cast<long long>(anum::enumerate_paper_index_set(c->params).size()); });
}

anum_status anum_matrix_rank(const anum_curve* c, long long* out) {
  if (anum_status st = require_handle(c); st != ANUM_OK) return st;
  auto* h = const_cast<anum_curve*>(c);
  return guarded([&] {
    std::lock_guard<std::mutex> lock(h->mu);
    *out = static_cast<long long>(h->get_rank());
  });
}

anum_status anum_a_number(const anum_curve* c, long long* out) {
  if (anum_status st = require_handle(c); st != ANUM_OK) return st;
  auto* h = const_cast<anum_curve*>(c);
  return guarded([&] {
    std::lock_guard<std::mutex> lock(h->mu);
    *out = static_cast<long long>(h->params.g - h->get_rank());
  });
}

anum_status anum_p_rank(const anum_curve* c, long long* out) {
  if (anum_status st = require_handle(c); st != ANUM_OK) return st;
  auto* h = const_cast<anum_curve*>(c);
  return guarded([&] {
    std::lock_guard<std::mutex> lock(h->mu);
    *out = static_cast<long long>(h->get_prank());
  });
}

anum_status anum_congruence_count(const anum_curve* c, const char* exponent_mode,
                                  const char* index_mode, const char* h_range, long long* out) {
  if (anum_status st = require_handle(c); st != ANUM_OK) return st;
  return guarded([&] {
    auto bad = [](const std::string& what) {
      throw anum::Error(anum::ErrorKind::invalid_input, "unknown mode: " + what);
    };
    std::string em = exponent_mode ? exponent_mode : "honest";
    std::string im = index_mode ? index_mode : "derived-basis";
    std::string hr = h_range ? h_range : "half";
    anum::ExponentMode e;
    if (em == "honest") e = anum::ExponentMode::honest;
    else if (em == "paper-literal") e = anum::ExponentMode::paper_literal;
    else { bad(em); return; }
    anum::IndexMode i;
    if (im == "derived-basis") i = anum::IndexMode::derived_basis;
    else if (im == "paper-literal") i = anum::IndexMode::paper_literal;
    else { bad(im); return; }
    anum::HRange h;
    if (hr == "half") h = anum::HRange::half;
    else if (hr == "full") h = anum::HRange::full;
    else { bad(hr); return; }
    *out = static_cast<long long>(anum::congruence_count(c->params, e, i, h));
  });
}

anum_status anum_point_count(const anum_curve* c, int e, long long* total) {
  if (anum_status st = require_handle(c); st != ANUM_OK) return st;
  return guarded([&] {
    if (e < 1) throw anum::Error(anum::ErrorKind::invalid_input, "e must be >= 1");
    *total = static_cast<long long>(anum::count_points(c->params, static_cast<unsigned>(e)).total);
  });
}

anum_status anum_is_maximal(const anum_curve* c, int* out) {
  if (anum_status st = require_handle(c); st != ANUM_OK) return st;
  return guarded([&] { *out = anum::is_maximal(c->params) ? 1 : 0; });
}

anum_status anum_matrix_dump(const anum_curve* c, char** out) {
  if (anum_status st = require_handle(c); st != ANUM_OK) return st;
  auto* h = const_cast<anum_curve*>(c);
  return guarded([&] {
    std::lock_guard<std::mutex> lock(h->mu);
    const auto& mat = h->get_matrix();
    auto basis = anum::enumerate_basis(h->params);
    std::string text;
    for (std::size_t col = 0; col < mat.columns.size(); ++col) {
      anum::BiPoly image(mat.p);
      for (std::size_t row = 0; row < mat.columns[col].size(); ++row) {
        if (mat.columns[col][row] != 0)
          image.add_term(basis[row].a - 1, h->params.n - 1 - basis[row].b, mat.columns[col][row]);
      }
      text += "col " + std::to_string(col) + " (a=" + std::to_string(basis[col].a) +
              ",b=" + std::to_string(basis[col].b) + "): " + image.to_string() + "\n";
    }
    *out = dup_string(text);
  });
}

anum_status anum_check_json(const anum_curve* c, char** out) {
  if (anum_status st = require_handle(c); st != ANUM_OK) return st;
  return guarded([&] {
    nlohmann::ordered_json j;
    const auto& pr = c->params;
    j["p"] = pr.p;
    j["s"] = pr.s;
    j["m"] = pr.m;
    j["n"] = pr.n;
    j["q"] = pr.q;
    j["g"] = pr.g;
    j["basis_size"] = anum::enumerate_basis(pr).size();
    j["paper_index_set_size"] = anum::enumerate_paper_index_set(pr).size();
    nlohmann::ordered_json hyp;
    hyp["gcd_n_m"] = pr.hyp.gcd_n_m;
    hyp["gcd_q_n"] = pr.hyp.gcd_q_n;
    hyp["gcd_q_m1"] = pr.hyp.gcd_q_m1;
    hyp["m_shape"] = pr.hyp.m_shape;
    hyp["gcd_p_m1"] = pr.hyp.gcd_p_m1;
    hyp["all"] = pr.hyp.all();
    j["hypotheses"] = hyp;
    *out = dup_string(j.dump());
  });
}

anum_status anum_verify_json(const anum_curve* c, char** out) {
  if (anum_status st = require_handle(c); st != ANUM_OK) return st;
  auto* h = const_cast<anum_curve*>(c);
  return guarded([&] { *out = dup_string(anum::report_to_json(build_report(h))); });
}

anum_status anum_verify_csv(const anum_curve* c, int with_header, char** out) {
  if (anum_status st = require_handle(c); st != ANUM_OK) return st;
  auto* h = const_cast<anum_curve*>(c);
  return guarded([&] {
    std::string text;
    if (with_header) text += anum::report_csv_header() + "\n";
    text += anum::report_csv_row(build_report(h));
    *out = dup_string(text);
  });
}

void anum_string_free(char* s) { std::free(s); }

}  // extern "C"
