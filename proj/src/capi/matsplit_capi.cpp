#include "matsplit/matsplit.h"

#include <cmath>
#include <cstring>
#include <new>
#include <random>
#include <string>

#include "common/error.hpp"
#include "exactnum/linalg.hpp"
#include "io/fixtures.hpp"
#include "io/json.hpp"
#include "lattice/constants.hpp"
#include "lattice/enumerate.hpp"
#include "lattice/lll.hpp"
#include "lattice/tensor.hpp"
#include "quadfield/quadfield.hpp"
#include "splitter/splitter.hpp"

using namespace matsplit;
using io::Json;

struct matsplit_algebra {
  io::AlgebraDocument doc;
};

struct matsplit_result {
  algebra::StructureConstants table;
  splitter::SplitResult result;
};

namespace {

thread_local std::string last_error;

matsplit_status status_of(ErrorCode c) {
  switch (c) {
    case ErrorCode::kInput: return MATSPLIT_E_INPUT;
    case ErrorCode::kType: return MATSPLIT_E_TYPE;
    case ErrorCode::kDimension: return MATSPLIT_E_DIMENSION;
    case ErrorCode::kDomain: return MATSPLIT_E_DOMAIN;
    case ErrorCode::kPrecondition: return MATSPLIT_E_PRECONDITION;
    case ErrorCode::kNoIdentity: return MATSPLIT_E_NO_IDENTITY;
    case ErrorCode::kPromiseViolated: return MATSPLIT_E_PROMISE_VIOLATED;
    case ErrorCode::kPrecisionInsufficient: return MATSPLIT_E_PRECISION;
    case ErrorCode::kFactoringBudget: return MATSPLIT_E_FACTORING_BUDGET;
    case ErrorCode::kEnumerationBudget: return MATSPLIT_E_ENUMERATION_BUDGET;
    case ErrorCode::kEnumerationExhausted: return MATSPLIT_E_ENUMERATION_EXHAUSTED;
    case ErrorCode::kInternal: return MATSPLIT_E_INTERNAL;
  }
  return MATSPLIT_E_INTERNAL;
}

template <class F>
matsplit_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return MATSPLIT_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return MATSPLIT_E_OUT_OF_MEMORY;
  } catch (const std::exception& e) {
    last_error = e.what();
    return MATSPLIT_E_INTERNAL;
  } catch (...) {
    last_error = "unknown failure";
    return MATSPLIT_E_INTERNAL;
  }
}

matsplit_status null_argument() {
  last_error = "null argument";
  return MATSPLIT_E_NULL_ARGUMENT;
}

char* copy_out(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(const Json& j, char** out) { *out = copy_out(j.dump()); }

Json exact_or_approx_json(const lattice::ExactOrApprox& x) {
  Json out{{"exact", x.surd ? Json(x.surd->symbolic()) : Json(nullptr)}, {"decimal", static_cast<double>(x.value)}};
  if (x.surd) out["square"] = io::rational_json(x.surd->square());
  return out;
}

Json norm_json(const exact::Rational& norm2) {
  return Json{{"norm2", io::rational_json(norm2)}, {"norm", static_cast<double>(std::sqrt(exact::to_long_double(norm2)))}};
}

Json coeffs_json(const lattice::Coefficients& c) {
  Json out = Json::array();
  for (long x : c) out.push_back(x);
  return out;
}

Json tensor_report_json(const lattice::TensorExperimentReport& rep) {
  Json ranks = Json::array();
  for (const auto& [r, e] : rep.min_by_rank) {
    Json item = norm_json(e.norm2);
    item["rank"] = r;
    item["count"] = e.count;
    item["example"] = coeffs_json(e.example);
    ranks.push_back(item);
  }
  Json violations = Json::array();
  for (const auto& v : rep.floor_violations)
    violations.push_back(Json{{"rank", v.rank}, {"norm2", io::rational_json(v.norm2)}, {"floor2", static_cast<double>(v.floor2)}});
  return Json{{"rank_l", rep.rank_l},
              {"rank_m", rep.rank_m},
              {"lambda1", norm_json(rep.lambda1_squared)},
              {"lambda1_count", rep.lambda1_count},
              {"lambda1_all_rank_one", rep.lambda1_all_rank_one},
              {"min_by_rank", ranks},
              {"floor_violations", violations},
              {"enumerated", rep.enumerated},
              {"nodes", rep.nodes}};
}

lattice::TensorExperimentReport run_pair(const lattice::RationalMatrix& gl, const lattice::RationalMatrix& gm,
                                         double bound, double factor, unsigned threads) {
  if (bound <= 0) {
    long double l = std::sqrt(exact::to_long_double(lattice::lambda1_squared(gl)) *
                              exact::to_long_double(lattice::lambda1_squared(gm)));
    bound = static_cast<double>(l * factor);
  }
  lattice::EnumerationOptions opt;
  opt.threads = threads == 0 ? 1 : threads;
  return lattice::min_norm_by_matrix_rank(gl, gm, bound, opt);
}

lattice::RationalMatrix random_integral_gram(std::mt19937_64& rng, std::size_t rank, long range) {
  std::uniform_int_distribution<long> dist(-range, range);
  while (true) {
    std::vector<exact::RationalVector> b(rank, exact::RationalVector(rank));
    for (auto& v : b)
      for (auto& x : v) x = dist(rng);
    auto g = lattice::gram_of(b);
    if (sgn(lattice::gram_determinant(g)) > 0) return g;
  }
}

}  // namespace

extern "C" {

const char* matsplit_last_error(void) { return last_error.c_str(); }

const char* matsplit_status_name(matsplit_status s) {
  switch (s) {
    case MATSPLIT_OK: return "ok";
    case MATSPLIT_E_INPUT: return "input error";
    case MATSPLIT_E_TYPE: return "type error";
    case MATSPLIT_E_DIMENSION: return "dimension error";
    case MATSPLIT_E_DOMAIN: return "domain error";
    case MATSPLIT_E_PRECONDITION: return "precondition failed";
    case MATSPLIT_E_NO_IDENTITY: return "no identity";
    case MATSPLIT_E_PROMISE_VIOLATED: return "promise violated";
    case MATSPLIT_E_PRECISION: return "precision insufficient";
    case MATSPLIT_E_FACTORING_BUDGET: return "factoring budget exceeded";
    case MATSPLIT_E_ENUMERATION_BUDGET: return "enumeration budget exceeded";
    case MATSPLIT_E_ENUMERATION_EXHAUSTED: return "enumeration exhausted";
    case MATSPLIT_E_INTERNAL: return "internal error";
    case MATSPLIT_E_NULL_ARGUMENT: return "null argument";
    case MATSPLIT_E_OUT_OF_MEMORY: return "out of memory";
  }
  return "unknown status";
}

const char* matsplit_version(void) { return "0.1.0"; }

void matsplit_string_free(char* s) { std::free(s); }

matsplit_status matsplit_algebra_parse(const char* json, matsplit_algebra** out) {
  if (json == nullptr || out == nullptr) return null_argument();
  *out = nullptr;
  return guarded([&] { *out = new matsplit_algebra{io::parse_algebra(io::parse_text(json))}; });
}

matsplit_status matsplit_algebra_generate(uint32_t n, int64_t d, int64_t height, uint64_t seed, matsplit_algebra** out) {
  if (out == nullptr) return null_argument();
  *out = nullptr;
  return guarded([&] {
    auto inst = splitter::generate_instance(n, d, height, seed);
    *out = new matsplit_algebra{{std::move(inst.table), std::nullopt}};
  });
}

matsplit_status matsplit_algebra_to_json(const matsplit_algebra* a, char** out) {
  if (a == nullptr || out == nullptr) return null_argument();
  return guarded([&] { emit(io::algebra_json(a->doc.table, a->doc.lattice), out); });
}

size_t matsplit_algebra_dim(const matsplit_algebra* a) { return a ? a->doc.table.dim() : 0; }

int64_t matsplit_algebra_field(const matsplit_algebra* a) { return a ? a->doc.table.field() : -1; }

void matsplit_algebra_free(matsplit_algebra* a) { delete a; }

void matsplit_split_options_default(matsplit_split_options* o) {
  if (o == nullptr) return;
  splitter::SplitConfig c;
  o->seed = c.seed;
  o->precision_bits = c.precision_bits;
  o->max_precision_bits = c.max_precision_bits;
  o->factor_budget = c.factor_budget;
  o->enumeration_budget = c.enumeration_budget;
  o->engine = MATSPLIT_ENGINE_ORDERED;
  o->dynamic_pruning = 0;
  o->threads = 1;
}

matsplit_status matsplit_split(const matsplit_algebra* a, const matsplit_split_options* o, matsplit_result** out) {
  if (a == nullptr || out == nullptr) return null_argument();
  *out = nullptr;
  matsplit_split_options defaults;
  matsplit_split_options_default(&defaults);
  if (o == nullptr) o = &defaults;
  return guarded([&] {
    splitter::SplitConfig c;
    c.seed = o->seed;
    c.precision_bits = o->precision_bits;
    c.max_precision_bits = o->max_precision_bits;
    c.factor_budget = o->factor_budget;
    c.enumeration_budget = o->enumeration_budget;
    if (o->engine != MATSPLIT_ENGINE_ORDERED && o->engine != MATSPLIT_ENGINE_BOX)
      throw Error(ErrorCode::kInput, "unknown engine");
    c.engine = o->engine == MATSPLIT_ENGINE_BOX ? splitter::Engine::kBox : splitter::Engine::kOrdered;
    c.dynamic_pruning = o->dynamic_pruning != 0;
    c.threads = o->threads == 0 ? 1 : o->threads;
    c.lattice = a->doc.lattice;
    auto r = splitter::split(a->doc.table, c);
    *out = new matsplit_result{a->doc.table, std::move(r)};
  });
}

matsplit_status matsplit_result_to_json(const matsplit_result* r, char** out) {
  if (r == nullptr || out == nullptr) return null_argument();
  return guarded([&] { emit(io::split_result_json(r->table, r->result), out); });
}

uint64_t matsplit_result_nodes(const matsplit_result* r) { return r ? r->result.stats.nodes : 0; }

double matsplit_result_norm(const matsplit_result* r) { return r ? static_cast<double>(r->result.stats.norm) : 0; }

void matsplit_result_free(matsplit_result* r) { delete r; }

matsplit_status matsplit_verify(const matsplit_algebra* a, const char* result_json, int32_t* valid, char** report) {
  if (a == nullptr || result_json == nullptr || valid == nullptr || report == nullptr) return null_argument();
  *valid = 0;
  return guarded([&] {
    const auto& table = a->doc.table;
    auto w = io::parse_witness(io::parse_text(result_json), table);
    std::size_t rank = algebra::ideal_rank(table, w.rank_one_element);
    std::string problem = rank == 1 ? algebra::check_witness(table, w) : "rank-one element has rank " + std::to_string(rank);
    *valid = problem.empty() ? 1 : 0;
    emit(Json{{"valid", problem.empty()},
              {"ideal_rank", rank},
              {"pairs_checked", table.dim() * table.dim()},
              {"message", problem.empty() ? "exact verification passed" : problem}},
         report);
  });
}

matsplit_status matsplit_order(const matsplit_algebra* a, uint64_t factor_budget, char** out) {
  if (a == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    orders::SaturationTrace trace;
    auto order = orders::maximal_order(a->doc.table, factor_budget == 0 ? orders::kDefaultFactorBudget : factor_budget,
                                       &trace);
    emit(io::order_json(order, trace, a->doc.table.field()), out);
  });
}

matsplit_status matsplit_lll(const char* lattice_json, char** out) {
  if (lattice_json == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    auto doc = io::parse_lattice(io::parse_text(lattice_json));
    auto red = lattice::reduce_gram(doc.gram);
    io::LatticeDocument reduced{std::nullopt, red.gram};
    if (doc.basis) {
      std::vector<exact::RationalVector> rows;
      for (std::size_t i = 0; i < red.u.rows(); ++i) {
        exact::RationalVector v((*doc.basis)[0].size(), exact::Rational(0));
        for (std::size_t j = 0; j < red.u.cols(); ++j)
          for (std::size_t k = 0; k < v.size(); ++k) v[k] += exact::Rational(red.u(i, j)) * (*doc.basis)[j][k];
        rows.push_back(std::move(v));
      }
      reduced.basis = std::move(rows);
    }
    Json transform = Json::array();
    for (std::size_t i = 0; i < red.u.rows(); ++i) {
      Json row = Json::array();
      for (std::size_t j = 0; j < red.u.cols(); ++j) row.push_back(red.u(i, j).get_str());
      transform.push_back(row);
    }
    Json result = io::lattice_json(reduced);
    Json g = Json::array();
    for (std::size_t i = 0; i < red.gram.rows(); ++i) {
      Json row = Json::array();
      for (std::size_t j = 0; j < red.gram.cols(); ++j) row.push_back(io::rational_json(red.gram(i, j)));
      g.push_back(row);
    }
    result["gram"] = g;
    result["transform"] = transform;
    result["lll_reduced"] = lattice::is_lll_reduced(red.gram);
    result["orthogonality_defect"] = Json{{"input", static_cast<double>(lattice::orthogonality_defect(doc.gram))},
                                          {"reduced", static_cast<double>(lattice::orthogonality_defect(red.gram))}};
    emit(result, out);
  });
}

matsplit_status matsplit_enumerate(const char* lattice_json, double bound, uint32_t threads, uint64_t node_budget,
                                   char** out) {
  if (lattice_json == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    if (!(bound > 0) || !std::isfinite(bound)) throw Error(ErrorCode::kInput, "bound must be positive");
    auto doc = io::parse_lattice(io::parse_text(lattice_json));
    auto red = lattice::reduce_gram(doc.gram);
    lattice::EnumerationOptions opt;
    opt.threads = threads == 0 ? 1 : threads;
    opt.node_budget = node_budget;
    auto found = lattice::enumerate_short(lattice::to_real_gram(red.gram), bound, opt);
    std::vector<lattice::ShortVector> vs;
    for (const auto& v : found.vectors) {
      lattice::Coefficients c = lattice::coefficients_in_input(red.u, v.coeffs);
      for (long x : c) {
        if (x == 0) continue;
        if (x < 0)
          for (auto& y : c) y = -y;
        break;
      }
      vs.push_back({c, v.norm2});
    }
    lattice::sort_norm_then_lex(vs);
    Json list = Json::array();
    for (const auto& v : vs) {
      Json item = norm_json(lattice::exact_quadratic_form(doc.gram, v.coeffs));
      item["coeffs"] = coeffs_json(v.coeffs);
      list.push_back(item);
    }
    emit(Json{{"bound", bound}, {"count", vs.size()}, {"pairs", "one vector per +- pair"}, {"nodes", found.nodes},
              {"vectors", list}},
         out);
  });
}

matsplit_status matsplit_tensor_pair(const char* left_json, const char* right_json, double bound, uint32_t threads,
                                     char** out) {
  if (left_json == nullptr || right_json == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    auto l = io::parse_lattice(io::parse_text(left_json));
    auto m = io::parse_lattice(io::parse_text(right_json));
    auto rep = run_pair(l.gram, m.gram, bound, 1.5, threads);
    Json j = tensor_report_json(rep);
    emit(j, out);
  });
}

void matsplit_tensor_options_default(matsplit_tensor_options* o) {
  if (o == nullptr) return;
  o->pairs = 100;
  o->rank_max = 4;
  o->entry_range = 5;
  o->seed = 1;
  o->bound_factor = 1.0;
  o->threads = 1;
}

matsplit_status matsplit_tensor_random(const matsplit_tensor_options* o, char** out) {
  if (o == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    if (o->rank_max == 0 || o->entry_range <= 0 || !(o->bound_factor >= 1))
      throw Error(ErrorCode::kInput, "rank_max and entry_range must be positive and bound_factor at least 1");
    std::mt19937_64 rng(o->seed);
    std::uniform_int_distribution<std::size_t> rank(1, o->rank_max);
    Json results = Json::array();
    std::size_t violations = 0, not_rank_one = 0;
    for (std::uint32_t p = 0; p < o->pairs; ++p) {
      auto gl = random_integral_gram(rng, rank(rng), o->entry_range);
      auto gm = random_integral_gram(rng, rank(rng), o->entry_range);
      // The bound sits a hair above lambda1(L) lambda1(M), which is attained by a pure tensor.
      auto rep = run_pair(gl, gm, 0, o->bound_factor * (1 + 1e-9), o->threads);
      violations += rep.floor_violations.size();
      if (!rep.lambda1_all_rank_one) ++not_rank_one;
      results.push_back(tensor_report_json(rep));
    }
    emit(Json{{"pairs", o->pairs},
              {"rank_max", o->rank_max},
              {"entry_range", o->entry_range},
              {"seed", o->seed},
              {"floor_violations", violations},
              {"lambda1_not_rank_one", not_rank_one},
              {"results", results}},
         out);
  });
}

void matsplit_constants_request_default(matsplit_constants_request* r) {
  if (r == nullptr) return;
  r->hermite_max = 8;
  r->cm = 0;
  r->minfloor = 0;
  r->kappa_d = 0;
  r->gammah_d = 0;
}

matsplit_status matsplit_constants(const matsplit_constants_request* r, char** out) {
  if (r == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    Json hermite = Json::array();
    for (std::size_t n = 1; n <= r->hermite_max; ++n) {
      auto h = lattice::hermite_gamma(n);
      Json item{{"n", n}, {"value", static_cast<double>(h.value)}, {"exact", h.exact}, {"symbolic", h.symbolic}};
      if (h.exact) item["nth_power"] = io::rational_json(h.nth_power);
      hermite.push_back(item);
    }
    Json result{{"hermite", hermite}};
    if (r->cm != 0) {
      Json c = exact_or_approx_json(lattice::c_m(r->cm));
      c["m"] = r->cm;
      result["c_m"] = c;
    }
    if (r->minfloor != 0) {
      if (r->minfloor < 2) throw Error(ErrorCode::kInput, "minfloor needs rmax >= 2");
      auto f = lattice::min_rank_floor(r->minfloor);
      result["min_rank_floor"] = Json{{"rmax", r->minfloor}, {"argmin", f.argmin},
                                      {"ratio", exact_or_approx_json(f.ratio)}, {"floor", exact_or_approx_json(f.floor)}};
    }
    Json fields = Json::array();
    for (std::int64_t d : {r->kappa_d, r->gammah_d}) {
      if (d == 0) continue;
      if (!fields.empty() && fields[0]["d"] == d) continue;
      auto fd = quadfield::field_data(d);
      Json f{{"d", d},
             {"D", fd.discriminant},
             {"euclidean", fd.euclidean},
             {"kappa", io::surd_json(quadfield::kappa(d))},
             {"tau", quadfield::tau(d)},
             {"gamma_h_upper", io::surd_json(quadfield::gamma_h_upper(d))},
             {"r_lambda_upper", io::rational_json(quadfield::r_lambda_upper(d))}};
      if (quadfield::kappa(d).square() < 1)
        f["gamma_h_kappa_upper"] = io::surd_json(quadfield::gamma_h_kappa_upper(d));
      else
        f["gamma_h_kappa_upper"] = nullptr;
      fields.push_back(f);
    }
    if (!fields.empty()) result["fields"] = fields;
    emit(result, out);
  });
}

matsplit_status matsplit_matrix_rank(const char* matrix_json, char** out) {
  if (matrix_json == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    auto doc = io::parse_matrix_document(io::parse_text(matrix_json));
    Json j{{"field", io::field_json(doc.d)}, {"rows", doc.matrix.rows()}, {"cols", doc.matrix.cols()},
           {"rank", exact::matrix_rank(doc.matrix)}};
    if (doc.matrix.is_square()) j["det"] = io::scalar_json(exact::determinant(doc.matrix), doc.d);
    emit(j, out);
  });
}

const char* matsplit_fixture_name(size_t index) {
  static const std::vector<std::string> names = io::fixture_names();
  return index < names.size() ? names[index].c_str() : nullptr;
}

matsplit_status matsplit_fixture(const char* name, char** out) {
  if (name == nullptr || out == nullptr) return null_argument();
  return guarded([&] { emit(io::fixture(name), out); });
}

}  // extern "C"
