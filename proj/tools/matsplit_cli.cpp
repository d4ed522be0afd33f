#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "matsplit/matsplit.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitPromise = 2;
constexpr int kExitBudget = 3;
constexpr int kExitInput = 4;

struct CliError {
  int exit_code;
  std::string message;
};

int exit_code_for(matsplit_status s) {
  switch (s) {
    case MATSPLIT_OK: return kExitOk;
    case MATSPLIT_E_PROMISE_VIOLATED:
    case MATSPLIT_E_ENUMERATION_EXHAUSTED: return kExitPromise;
    case MATSPLIT_E_PRECISION:
    case MATSPLIT_E_FACTORING_BUDGET:
    case MATSPLIT_E_ENUMERATION_BUDGET: return kExitBudget;
    case MATSPLIT_E_INTERNAL:
    case MATSPLIT_E_OUT_OF_MEMORY: return kExitFailed;
    default: return kExitInput;
  }
}

void check(matsplit_status s) {
  if (s != MATSPLIT_OK)
    throw CliError{exit_code_for(s), std::string(matsplit_status_name(s)) + ": " + matsplit_last_error()};
}

// Owns a string returned by the library.
std::string take(char* s) {
  std::string out(s);
  matsplit_string_free(s);
  return out;
}

std::string read_source(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path);
  if (!in) throw CliError{kExitInput, "cannot open " + path};
  return std::string(std::istreambuf_iterator<char>(in), {});
}

bool is_fixture(const std::string& name) {
  for (size_t i = 0; const char* f = matsplit_fixture_name(i); ++i)
    if (name == f) return true;
  return false;
}

// A fixture name or a file path.
std::string read_lattice_source(const std::string& source) {
  if (is_fixture(source)) {
    char* out = nullptr;
    check(matsplit_fixture(source.c_str(), &out));
    return take(out);
  }
  return read_source(source);
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw CliError{kExitInput, std::string("malformed JSON: ") + e.what()};
  }
}

void render_human(std::ostream& os, const Json& j, int indent) {
  const std::string pad(indent * 2, ' ');
  auto flat = [](const Json& x) {
    if (!x.is_array()) return false;
    for (const auto& e : x)
      if (e.is_structured() && !(e.is_array() && std::all_of(e.begin(), e.end(), [](const Json& y) { return y.is_primitive(); })))
        return false;
    return true;
  };
  auto scalar = [](const Json& x) { return x.is_string() ? x.get<std::string>() : x.dump(); };
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_primitive()) {
        os << pad << k << ": " << scalar(v) << "\n";
      } else if (flat(v)) {
        os << pad << k << ":";
        for (const auto& e : v) os << (e.is_array() ? "\n" + pad + "  " : " ") << (e.is_array() ? e.dump() : scalar(e));
        os << "\n";
      } else {
        os << pad << k << ":\n";
        render_human(os, v, indent + 1);
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_primitive()) {
        os << pad << "- " << scalar(v) << "\n";
      } else {
        os << pad << "-\n";
        render_human(os, v, indent + 1);
      }
    }
  } else {
    os << pad << scalar(j) << "\n";
  }
}

struct Output {
  std::string path = "-";
  bool human = false;

  void write(const Json& j) const {
    std::ostringstream s;
    if (human)
      render_human(s, j, 0);
    else
      s << j.dump(2) << "\n";
    if (path == "-") {
      std::cout << s.str();
      return;
    }
    std::ofstream out(path);
    if (!out) throw CliError{kExitInput, "cannot write " + path};
    out << s.str();
  }
};

struct Algebra {
  matsplit_algebra* handle = nullptr;
  explicit Algebra(const std::string& json) { check(matsplit_algebra_parse(json.c_str(), &handle)); }
  Algebra(const Algebra&) = delete;
  Algebra& operator=(const Algebra&) = delete;
  ~Algebra() { matsplit_algebra_free(handle); }
};

uint64_t default_seed() {
  if (const char* env = std::getenv("MATSPLIT_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw CliError{kExitInput, "MATSPLIT_SEED must be a non-negative integer"};
    }
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Explicit isomorphisms A -> M_n(K) via maximal orders and short lattice vectors"};
  app.require_subcommand(1);
  app.fallthrough();
  Output output;
  app.add_flag("--human", output.human, "Readable text instead of JSON");

  uint64_t seed = 0;
  bool seed_given = false;
  auto add_seed = [&](CLI::App* cmd) {
    cmd->add_option_function<uint64_t>("--seed", [&](const uint64_t& s) { seed = s, seed_given = true; },
                                       "Random seed (default: MATSPLIT_SEED or 1)");
  };

  // split
  std::string split_input = "-", engine = "ordered";
  bool dynamic = false;
  uint32_t precision = 128, threads = 1;
  uint64_t factor_budget = 0, node_budget = 0;
  auto* split = app.add_subcommand("split", "Find a rank-one element and an explicit isomorphism");
  split->add_option("--input,-i", split_input, "Algebra JSON (- for stdin)");
  split->add_option("--engine", engine, "ordered or box")->check(CLI::IsMember({"ordered", "box"}));
  split->add_flag("--dynamic-pruning", dynamic, "Tighten the box as elements are found");
  split->add_option("--precision-bits", precision, "Initial working precision")->check(CLI::Range(64u, 4096u));
  split->add_option("--threads", threads, "Enumeration threads")->check(CLI::Range(1u, 256u));
  split->add_option("--factor-budget", factor_budget, "Trial division budget");
  split->add_option("--node-budget", node_budget, "Enumeration node budget");
  split->add_option("--output,-o", output.path, "Result file (- for stdout)");
  add_seed(split);

  // gen
  uint32_t gen_n = 2;
  std::string field = "Q";
  int64_t height = 10;
  auto* gen = app.add_subcommand("gen", "Generate a scrambled matrix algebra");
  gen->add_option("--n", gen_n, "Matrix size")->check(CLI::Range(1u, 43u));
  gen->add_option("--field", field, "Q, gauss or eisenstein")->check(CLI::IsMember({"Q", "gauss", "eisenstein"}));
  gen->add_option("--height", height, "Entry height of the base change")->check(CLI::Range(int64_t{1}, int64_t{1000000}));
  gen->add_option("--output,-o", output.path, "Output file");
  add_seed(gen);

  // verify
  std::string verify_input = "-", verify_algebra;
  auto* verify = app.add_subcommand("verify", "Exactly verify a split result");
  verify->add_option("--input,-i", verify_input, "Result JSON (- for stdin)");
  verify->add_option("--algebra", verify_algebra, "Algebra JSON when the result does not embed it");

  // order
  std::string order_input = "-";
  auto* order = app.add_subcommand("order", "Compute a maximal order");
  order->add_option("--input,-i", order_input, "Algebra JSON");
  order->add_option("--factor-budget", factor_budget, "Trial division budget");
  order->add_option("--output,-o", output.path, "Output file");

  // lll
  std::string lattice_input = "-";
  auto* lll = app.add_subcommand("lll", "LLL-reduce a lattice");
  lll->add_option("--input,-i", lattice_input, "Lattice JSON or fixture name");
  lll->add_option("--output,-o", output.path, "Output file");

  // enumerate
  double bound = 0;
  auto* enumerate = app.add_subcommand("enumerate", "List lattice vectors up to a norm bound");
  enumerate->add_option("--input,-i", lattice_input, "Lattice JSON or fixture name");
  enumerate->add_option("--bound", bound, "Norm bound")->required()->check(CLI::PositiveNumber);
  enumerate->add_option("--threads", threads, "Threads")->check(CLI::Range(1u, 256u));
  enumerate->add_option("--node-budget", node_budget, "Node budget");
  enumerate->add_option("--output,-o", output.path, "Output file");

  // tensor-experiment
  std::string left, right;
  uint32_t random_pairs = 0, rank_max = 4;
  int64_t entry_range = 5;
  double bound_factor = 1.0, tensor_bound = 0;
  auto* tensor = app.add_subcommand("tensor-experiment", "Minimal norms in L (x) M by matrix rank");
  tensor->add_option("--left", left, "Lattice JSON or fixture name");
  tensor->add_option("--right", right, "Lattice JSON or fixture name");
  tensor->add_option("--bound", tensor_bound, "Norm bound (default 1.5 lambda1(L) lambda1(M))");
  tensor->add_option("--random", random_pairs, "Number of random integral pairs");
  tensor->add_option("--rankmax", rank_max, "Largest random rank")->check(CLI::Range(1u, 8u));
  tensor->add_option("--range", entry_range, "Random basis entries lie in [-range, range]")
      ->check(CLI::Range(int64_t{1}, int64_t{1000}));
  tensor->add_option("--bound-factor", bound_factor, "Random pairs: bound as a multiple of lambda1(L) lambda1(M)")
      ->check(CLI::Range(1.0, 4.0));
  tensor->add_option("--threads", threads, "Threads")->check(CLI::Range(1u, 256u));
  tensor->add_option("--output,-o", output.path, "Output file");
  add_seed(tensor);

  // constants
  matsplit_constants_request request;
  matsplit_constants_request_default(&request);
  auto* constants = app.add_subcommand("constants", "Hermite constants, c_m, rank floors and field constants");
  constants->add_option("--hermite-max", request.hermite_max, "Hermite table size")->check(CLI::Range(1u, 64u));
  constants->add_option("--cm", request.cm, "Report c_m")->check(CLI::Range(1u, 64u));
  constants->add_option("--minfloor", request.minfloor, "Minimise r / gamma_r^2 over 2 <= r <= R")->check(CLI::Range(2u, 64u));
  constants->add_option("--kappa", request.kappa_d, "Covering constant of Q(sqrt(-d))")->check(CLI::PositiveNumber);
  constants->add_option("--gammah", request.gammah_d, "gamma_h bounds for Q(sqrt(-d))")->check(CLI::PositiveNumber);

  // fixture
  std::string fixture_name;
  bool list = false;
  auto* fixture = app.add_subcommand("fixture", "Print a built-in fixture");
  fixture->add_option("name", fixture_name, "Fixture name");
  fixture->add_flag("--list", list, "List fixture names");
  fixture->add_option("--output,-o", output.path, "Output file");

  // rank
  std::string matrix_input = "-";
  auto* rank = app.add_subcommand("rank", "Exact rank and determinant of a matrix over K");
  rank->add_option("--input,-i", matrix_input, "Matrix JSON or fixture name");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (!seed_given) seed = default_seed();
    if (*split) {
      std::string text = read_source(split_input);
      Algebra a(text);
      matsplit_split_options opt;
      matsplit_split_options_default(&opt);
      opt.seed = seed;
      opt.precision_bits = precision;
      opt.engine = engine == "box" ? MATSPLIT_ENGINE_BOX : MATSPLIT_ENGINE_ORDERED;
      opt.dynamic_pruning = dynamic ? 1 : 0;
      opt.threads = threads;
      if (factor_budget) opt.factor_budget = factor_budget;
      if (node_budget) opt.enumeration_budget = node_budget;
      matsplit_result* r = nullptr;
      check(matsplit_split(a.handle, &opt, &r));
      char* out = nullptr;
      matsplit_status s = matsplit_result_to_json(r, &out);
      matsplit_result_free(r);
      check(s);
      Json result = parse(take(out));
      Json doc{{"algebra", parse(text)}};
      for (const auto& [k, v] : result.items()) doc[k] = v;
      output.write(doc);
    } else if (*gen) {
      int64_t d = field == "Q" ? 0 : field == "gauss" ? 1 : 3;
      matsplit_algebra* a = nullptr;
      check(matsplit_algebra_generate(gen_n, d, height, seed, &a));
      char* out = nullptr;
      matsplit_status s = matsplit_algebra_to_json(a, &out);
      matsplit_algebra_free(a);
      check(s);
      output.write(parse(take(out)));
    } else if (*verify) {
      Json doc = parse(read_source(verify_input));
      std::string algebra_text;
      if (!verify_algebra.empty())
        algebra_text = read_source(verify_algebra);
      else if (doc.contains("algebra"))
        algebra_text = doc["algebra"].dump();
      else
        throw CliError{kExitInput, "result does not embed its algebra; pass --algebra"};
      Algebra a(algebra_text);
      int32_t valid = 0;
      char* report = nullptr;
      check(matsplit_verify(a.handle, doc.dump().c_str(), &valid, &report));
      output.write(parse(take(report)));
      return valid ? kExitOk : kExitFailed;
    } else if (*order) {
      Algebra a(read_source(order_input));
      char* out = nullptr;
      check(matsplit_order(a.handle, factor_budget, &out));
      output.write(parse(take(out)));
    } else if (*lll) {
      char* out = nullptr;
      check(matsplit_lll(read_lattice_source(lattice_input).c_str(), &out));
      output.write(parse(take(out)));
    } else if (*enumerate) {
      char* out = nullptr;
      check(matsplit_enumerate(read_lattice_source(lattice_input).c_str(), bound, threads, node_budget, &out));
      output.write(parse(take(out)));
    } else if (*tensor) {
      char* out = nullptr;
      if (random_pairs > 0) {
        if (!left.empty() || !right.empty()) throw CliError{kExitInput, "--random excludes --left/--right"};
        matsplit_tensor_options opt;
        matsplit_tensor_options_default(&opt);
        opt.pairs = random_pairs;
        opt.rank_max = rank_max;
        opt.entry_range = entry_range;
        opt.seed = seed;
        opt.bound_factor = bound_factor;
        opt.threads = threads;
        check(matsplit_tensor_random(&opt, &out));
      } else {
        if (left.empty() || right.empty()) throw CliError{kExitInput, "give --left and --right, or --random N"};
        check(matsplit_tensor_pair(read_lattice_source(left).c_str(), read_lattice_source(right).c_str(), tensor_bound,
                                   threads, &out));
      }
      output.write(parse(take(out)));
    } else if (*constants) {
      char* out = nullptr;
      check(matsplit_constants(&request, &out));
      output.write(parse(take(out)));
    } else if (*fixture) {
      if (list) {
        Json names = Json::array();
        for (size_t i = 0; const char* f = matsplit_fixture_name(i); ++i) names.push_back(f);
        output.write(names);
      } else {
        if (fixture_name.empty()) throw CliError{kExitInput, "fixture name required (or --list)"};
        char* out = nullptr;
        check(matsplit_fixture(fixture_name.c_str(), &out));
        output.write(parse(take(out)));
      }
    } else if (*rank) {
      char* out = nullptr;
      check(matsplit_matrix_rank(read_lattice_source(matrix_input).c_str(), &out));
      output.write(parse(take(out)));
    }
  } catch (const CliError& e) {
    std::cerr << "matsplit: " << e.message << "\n";
    return e.exit_code;
  }
  return kExitOk;
}
